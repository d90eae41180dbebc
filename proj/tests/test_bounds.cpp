#include <doctest.h>

#include <array>
#include <random>

#include "lemmas.hpp"
#include "monlab/betti.hpp"
#include "monlab/bounds.hpp"
#include "monlab/duality.hpp"
#include "monlab/error.hpp"
#include "monlab/linearity.hpp"
#include "oracle.hpp"
#include "util.hpp"

using namespace monlab;

namespace {

const FieldSpec qq = FieldSpec::rationals();

}  // namespace

TEST_CASE("f, g and Faltings values") {
  CHECK(f_bound(4, 5) == 0);
  CHECK(f_bound(5, 5) == 5);
  CHECK(f_bound(10, 5) == 7);
  CHECK(f_bound(6, 3) == 4);
  CHECK(f_bound(0, 2) == 0);
  CHECK(g_bound(10, 5) == 8);
  CHECK(g_bound(11, 5) == 9);
  CHECK(g_bound(6, 2) == 3);
  CHECK(faltings_bound(8, 1) == 5);
  CHECK(faltings_bound(5, 4) == 5);
  CHECK(faltings_bound(10, 2) == 7);
  CHECK(regularity_bound(4, 5) == 5);
  CHECK(regularity_bound(5, 1) == 1);
  CHECK(regularity_bound(10, 5) == 7);

  CHECK_THROWS_AS(f_bound(5, 1), InputError);
  CHECK_THROWS_AS(f_bound(-1, 3), InputError);
  CHECK_THROWS_AS(g_bound(0, 3), InputError);
  CHECK_THROWS_AS(g_bound(4, 1), InputError);
  CHECK_THROWS_AS(faltings_bound(0, 2), InputError);
  CHECK_THROWS_AS(regularity_bound(4, 0), InputError);
}

TEST_CASE("sandwich and step inequalities, 2 <= d <= 12, n <= 200") {
  for (int d = 2; d <= 12; ++d)
    for (int n = d + 1; n <= 200; ++n) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(lemmas::sandwich(n, d) == "");
      CHECK(lemmas::steps(n, d) == "");
    }
}

TEST_CASE("the weak step fails exactly at a fixed set of boundary triples") {
  // f(d,d) = d sits above the linear branch, so n - j = d can break it.
  std::vector<std::array<int, 3>> failures;
  for (int d = 2; d <= 12; ++d)
    for (int n = d + 1; n <= 200; ++n)
      for (int j : lemmas::weak_step_failures(n, d)) failures.push_back({n, d, j});
  CHECK(failures.size() == 36);
  for (const auto& [n, d, j] : failures) CHECK(n - j == d);
  REQUIRE(!failures.empty());
  CHECK(failures.front() == std::array<int, 3>{5, 2, 3});  // f(2,2) + 1 = 3 > f(5,2) = 2
  CHECK(failures.back() == std::array<int, 3>{25, 12, 13});
  // away from the boundary it holds well beyond the tested range
  for (int d = 2; d <= 30; ++d)
    for (int n = d + 1; n <= 400; ++n)
      for (int j : lemmas::weak_step_failures(n, d)) CHECK(n - j == d);
}

TEST_CASE("short exact sequence inequalities on random pairs") {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto j = oracle::make(n, oracle::random_ideal(rng, n, 1, 3, 5));
    const auto k = oracle::make(n, oracle::random_ideal(rng, n, 1, 3, 5));
    CHECK(lemmas::short_exact_sequence(j, k, qq));
  }
}

TEST_CASE("variable reduction inequality on random instances") {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto i = oracle::make(n, oracle::random_ideal(rng, n, 1, 3, 5));
    const Mask g = random_mask(rng, n);
    if (!g) continue;
    CHECK(lemmas::variable_reduction(i, Monomial(n, g), qq));
  }
}

TEST_CASE("sharp examples") {
  const auto six = sharp_example(6, 3);
  CHECK(six.size() == 12);
  CHECK(six.pure_degree() == 3);
  CHECK(regularity(six, qq) == 4);
  CHECK(regularity(sharp_example(7, 3), qq) == 4);
  CHECK(sharp_example(3, 3) == ideal_of(3, "x1*x2*x3"));
  for (int n = 5; n <= 9; ++n) {
    const auto i = sharp_example(n, 5);
    CHECK(is_n2(i));
    CHECK(regularity(i, FieldSpec::prime_field(2)) == f_bound(n, 5));
  }
  CHECK_THROWS_AS(sharp_example(6, 4), InputError);
  CHECK_THROWS_AS(sharp_example(2, 3), InputError);
  CHECK_THROWS_AS(sharp_example(6, 1), InputError);
}

TEST_CASE("regularity bound reports") {
  const auto p = check_regularity_bound(ideal_of(3, "x1*x2*x3"), qq);
  CHECK(p.reg == 3);
  CHECK(p.bound == 3);
  CHECK(p.theorem_holds);
  CHECK(p.tight);

  const auto sharp = check_regularity_bound(sharp_example(6, 3), qq);
  CHECK(sharp.reg == 4);
  CHECK(sharp.f_value == 4);
  CHECK(sharp.tight);

  // support smaller than the ambient ring
  const auto wide = check_regularity_bound(ideal_of(8, "x1*x2*x3"), qq);
  CHECK(wide.f_ambient == f_bound(8, 3));
  CHECK(wide.f_support == 3);
  const auto narrow = check_regularity_bound(ideal_of(8, "x1*x2*x3"), qq, {.use_support = true});
  CHECK(narrow.n == 3);
  CHECK(narrow.bound == 3);

  CHECK_THROWS_AS(check_regularity_bound(ideal_of(4, "x1*x2, x3*x4"), qq), PreconditionError);
  CHECK_THROWS_AS(check_regularity_bound(ideal_of(4, "x1, x2*x3"), qq), PreconditionError);
  CHECK_THROWS_AS(check_regularity_bound(Ideal::zero(4), qq), PreconditionError);
}

TEST_CASE("cohomological dimension reports") {
  const auto r = check_cd_bound(alexander_dual(sharp_example(6, 3)), qq);
  CHECK(r.d == 3);
  CHECK(r.reg == 4);
  CHECK(r.tight);
  CHECK(r.theorem_holds);
  CHECK(r.reg <= r.g_value);
  CHECK(r.reg <= r.faltings_value);
  // two disjoint edges: the dual is not N2
  CHECK_THROWS_AS(check_cd_bound(ideal_of(4, "x1*x3, x1*x4, x2*x3, x2*x4"), qq), PreconditionError);
}

TEST_CASE("report json and the bound table") {
  const auto j = bound_report_to_json(check_regularity_bound(sharp_example(6, 3), qq));
  CHECK(j["kind"] == "regularity");
  CHECK(j["d"] == 3);
  CHECK(j["reg"] == 4);
  CHECK(j["f_value"] == 4);
  CHECK(j["theorem_holds"] == true);
  CHECK(j["field"] == "QQ");
  const auto c = bound_report_to_json(check_cd_bound(alexander_dual(sharp_example(6, 3)), qq));
  CHECK(c["kind"] == "cohomological_dimension");
  CHECK(c["c"] == 3);
  CHECK(c["cd"] == 4);

  CHECK(format_bound_table(5, 4, 11) ==
        "n      | 4 5 6 7 8 9 10 11\n"
        "f(n,5) | 0 5 5 5 6 7  7  8\n"
        "g(n,5) | 4 5 5 5 6 7  8  9\n");
  CHECK_THROWS_AS(format_bound_table(5, 0, 3), InputError);
  CHECK_THROWS_AS(format_bound_table(5, 6, 3), InputError);
}
