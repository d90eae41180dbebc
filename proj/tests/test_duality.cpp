#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "monlab/betti.hpp"
#include "monlab/bounds.hpp"
#include "monlab/duality.hpp"
#include "monlab/error.hpp"
#include "monlab/harness.hpp"
#include "monlab/linearity.hpp"
#include "oracle.hpp"
#include "util.hpp"

using namespace monlab;

namespace {

const FieldSpec qq = FieldSpec::rationals();

// Every nonempty antichain of nonempty subsets of [n], n <= 4 (166 for n = 4).
void for_each_antichain(int n, const std::function<void(const std::vector<Mask>&)>& visit) {
  const int universe = (1 << n) - 1;
  std::vector<Mask> current;
  std::function<void(int)> rec = [&](int next) {
    if (!current.empty()) visit(current);
    for (int m = next; m <= universe; ++m) {
      bool ok = true;
      for (Mask c : current) ok = ok && (c & ~Mask(m)) != 0 && (Mask(m) & ~c) != 0;
      if (!ok) continue;
      current.push_back(m);
      rec(m + 1);
      current.pop_back();
    }
  };
  rec(1);
}

}  // namespace

TEST_CASE("Alexander dual examples") {
  CHECK(alexander_dual(ideal_of(3, "x1*x2*x3")) == ideal_of(3, "x1, x2, x3"));
  CHECK(alexander_dual(ideal_of(3, "x1*x2, x2*x3, x1*x3")) == ideal_of(3, "x1*x2, x2*x3, x1*x3"));
  CHECK(alexander_dual(ideal_of(4, "x1*x2, x2*x3, x3*x4")) == ideal_of(4, "x2*x3, x1*x3, x2*x4"));
  CHECK_THROWS_AS(alexander_dual(Ideal::zero(3)), InputError);
}

TEST_CASE("height profile examples") {
  const auto path = height_profile(ideal_of(4, "x1*x2, x2*x3, x3*x4"));
  CHECK(path.height == 2);
  CHECK(path.bigheight == 2);
  CHECK(path.pure);
  const auto mixed = height_profile(ideal_of(3, "x1, x2*x3"));
  CHECK(mixed.dual == ideal_of(3, "x1*x2, x1*x3"));
  CHECK(mixed.height == 2);
  const auto p = height_profile(ideal_of(3, "x1*x2*x3"));
  CHECK(p.height == 1);
  CHECK(p.bigheight == 1);
  const auto unmixed = height_profile(ideal_of(4, "x1*x2, x1*x3, x1*x4, x2*x3*x4"));
  CHECK(unmixed.height == 2);
  CHECK_FALSE(unmixed.pure);
  CHECK(dual_report_to_json(path)["dual"].size() == 3);
  CHECK_THROWS_AS(height_profile(Ideal::zero(2)), InputError);
}

TEST_CASE("S2 examples") {
  for (int c = 1; c <= 4; ++c) {
    std::vector<Mask> vars;
    for (int v = 0; v < c; ++v) vars.push_back(Mask{1} << v);
    const auto v = is_s2(minimal_generators(6, vars), qq);
    CHECK(v.holds);
    CHECK(v.height == c);
  }
  // two disjoint edges {1,2}, {3,4}; the dual is the complete intersection
  // (x1x2, x3x4), pure but not N2
  const auto edges = ideal_of(4, "x1*x3, x1*x4, x2*x3, x2*x4");
  CHECK(stanley_reisner(edges).facets() == std::vector<Mask>{0b0011, 0b1100});
  CHECK(alexander_dual(edges) == ideal_of(4, "x1*x2, x3*x4"));
  CHECK_FALSE(is_s2(edges, qq).holds);
  CHECK_FALSE(is_nk_betti(alexander_dual(edges), 2, qq));
  CHECK_THROWS_AS(is_s2(Ideal::zero(2), qq), InputError);
}

TEST_CASE("cohomological dimension examples") {
  for (int c = 1; c <= 5; ++c) {
    std::vector<Mask> vars;
    for (int v = 0; v < c; ++v) vars.push_back(Mask{1} << v);
    CHECK(cohomological_dimension(minimal_generators(7, vars), qq) == c);
  }
  CHECK(cohomological_dimension(ideal_of(3, "x1*x2*x3"), qq) == 1);
  CHECK(cohomological_dimension(alexander_dual(remark_example().ideal), qq) == 4);
}

TEST_CASE("duality is an involution on every antichain in <= 4 variables") {
  int count = 0;
  for (int n = 1; n <= 4; ++n) {
    for_each_antichain(n, [&](const std::vector<Mask>& gens) {
      ++count;
      const auto i = minimal_generators(n, gens);
      const auto d = alexander_dual(i);
      CHECK(d.masks() == oracle::dual(n, gens));
      CHECK(alexander_dual(d) == i);
      CHECK(projective_dimension(i, qq) == regularity(d, qq));
    });
  }
  CHECK(count == 1 + 4 + 18 + 166);
}

TEST_CASE("involution and Terai identity on random ideals, n <= 10") {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const auto ms = oracle::random_ideal(rng, n, 1, std::min(n, 5), 8);
    const auto i = oracle::make(n, ms);
    const auto d = alexander_dual(i);
    CHECK(alexander_dual(d) == i);
    if (n <= 8) {
      CHECK(d.masks() == oracle::dual(n, ms));
      CHECK(projective_dimension(i, qq) == regularity(d, qq));
      CHECK(cohomological_dimension(i, qq) == projective_dimension(i, qq));
    }
    const auto r = height_profile(i);
    CHECK(r.height == d.min_degree());
    CHECK(r.bigheight == d.max_degree());
    CHECK(r.pure == (r.height == r.bigheight));
  }
}

TEST_CASE("Faltings comparison") {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto i = oracle::make(n, oracle::random_ideal(rng, n, 1, std::min(n, 4), 7));
    CHECK(cohomological_dimension(i, qq) <= faltings_bound(n, height_profile(i).bigheight));
  }
}

TEST_CASE("S2 on Cohen-Macaulay examples") {
  // boundary of the 4-simplex, a sphere
  CHECK(is_s2(ideal_of(5, "x1*x2*x3*x4*x5"), qq).holds);
  // a shifted complex: all triangles containing vertex 1 in 6 vertices
  std::vector<Mask> nonfaces;
  for (Mask m = 1; m < 64; ++m) {
    const bool face = popcount(m) <= 1 || (popcount(m) <= 3 && (m & 1)) || (popcount(m) == 2);
    if (!face) nonfaces.push_back(m);
  }
  const auto sr = minimal_generators(6, nonfaces);
  CHECK(is_s2(sr, qq).holds);
}

TEST_CASE("S2 agrees with its definition through the dual") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto i = oracle::make(n, oracle::random_ideal(rng, n, 1, 4, 7));
    const auto d = alexander_dual(i);
    const bool expected = d.pure_degree().has_value() && is_nk_betti(d, 2, qq);
    const auto v = is_s2(i, qq);
    CHECK(v.holds == expected);
    CHECK(v.height == d.min_degree());
  }
}
