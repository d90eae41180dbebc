#include <algorithm>
#include <functional>

#include "monlab/betti.hpp"
#include "monlab/bounds.hpp"
#include "monlab/duality.hpp"
#include "monlab/error.hpp"
#include "monlab/harness.hpp"
#include "monlab/linearity.hpp"

namespace monlab {

RemarkExample remark_example() {
  const int n = 8;
  const Monomial gens[] = {
      Monomial::from_vars(n, {3, 4, 7, 8}), Monomial::from_vars(n, {3, 4, 5, 7}),
      Monomial::from_vars(n, {3, 5, 6, 7}), Monomial::from_vars(n, {1, 5, 6, 7}),
      Monomial::from_vars(n, {1, 2, 5, 6}),
  };
  return {minimal_generators(gens), Monomial::from_vars(n, {1, 2, 5, 6}), Monomial::from_vars(n, {1, 2})};
}

nlohmann::json GcdSweepReport::to_json() const {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& [ideal, f] : violations) v.push_back({{"ideal", ideal_to_json(ideal)}, {"f", format_monomial(f)}});
  return {{"n", n},          {"d", d},
          {"ideals", ideals}, {"n2_ideals", n2_ideals},
          {"instances", instances}, {"witnessed", witnessed},
          {"violations", v}};
}

GcdSweepReport gcd_lemma_sweep(int n, int d, const FieldSpec& /*field*/) {
  // Every check in the sweep goes through the graph criterion, which does
  // not depend on the field.
  const PureIdealSpace space(n, d);
  std::vector<Monomial> candidates;
  for (int deg = 2; deg <= d; ++deg) {
    for (Mask m : squarefree_of_degree(n, deg)) candidates.emplace_back(n, m);
  }
  GcdSweepReport report;
  report.n = n;
  report.d = d;
  for (SubsetIndex s = 1; s < space.end_index(); ++s) {
    ++report.ideals;
    const Ideal ideal = space.ideal_at(s);
    if (!is_n2(ideal)) continue;
    ++report.n2_ideals;
    for (const auto& f : candidates) {
      const bool inside = std::all_of(ideal.generators().begin(), ideal.generators().end(),
                                      [&](const Monomial& g) { return divides(f, g); });
      if (inside) continue;
      if (!is_n2(truncation(add_generator(ideal, f), d))) continue;
      ++report.instances;
      try {
        const auto w = gcd_witness(ideal, f);
        if (w.g.degree() != f.degree() - 1) throw InternalError("witness gcd has the wrong degree");
        ++report.witnessed;
      } catch (const TheoremViolation&) {
        report.violations.emplace_back(ideal, f);
      }
    }
  }
  return report;
}

namespace {

GoldenCheck run_check(std::string name, const std::function<std::string()>& body) {
  GoldenCheck c;
  c.name = std::move(name);
  try {
    c.detail = body();
    c.passed = c.detail.empty();
    if (c.passed) c.detail = "ok";
  } catch (const std::exception& e) {
    c.detail = std::string("exception: ") + e.what();
  }
  return c;
}

std::string expect_eq(long long got, long long want, const std::string& what) {
  return got == want ? "" : what + ": got " + std::to_string(got) + ", want " + std::to_string(want);
}

}  // namespace

std::vector<GoldenCheck> golden_suite() {
  const auto qq = FieldSpec::rationals();
  std::vector<GoldenCheck> out;

  out.push_back(run_check("f/g table d=5, n=5..15", [] {
    const int f[] = {5, 5, 5, 6, 7, 7, 8, 9, 9, 10, 11};
    const int g[] = {5, 5, 5, 6, 7, 8, 9, 9, 9, 10, 11};
    for (int n = 5; n <= 15; ++n) {
      if (f_bound(n, 5) != f[n - 5] || g_bound(n, 5) != g[n - 5]) return "mismatch at n = " + std::to_string(n);
    }
    return std::string();
  }));
  out.push_back(run_check("f(4,5) = 0", [] { return expect_eq(f_bound(4, 5), 0, "f(4,5)"); }));
  out.push_back(run_check("f(10,5) = 7, g(10,5) = 8, g(11,5) = 9", [] {
    return expect_eq(f_bound(10, 5), 7, "f(10,5)") + expect_eq(g_bound(10, 5), 8, "g(10,5)") +
           expect_eq(g_bound(11, 5), 9, "g(11,5)");
  }));
  out.push_back(run_check("8-variable example: linear resolution, reg = 4", [&] {
    const auto ex = remark_example();
    const auto table = betti_table(ex.ideal, qq);
    for (const auto& [key, rank] : table.entries()) {
      if (key.second != key.first + 4) return std::string("nonlinear Betti entry");
    }
    return expect_eq(table.regularity(), 4, "reg");
  }));
  out.push_back(run_check("8-variable example: (I + (x1x2))_[4] not N2 (graph)", [] {
    const auto ex = remark_example();
    return is_n2_graph(truncation(add_generator(ex.ideal, ex.g), 4)).holds ? std::string("graph says N2")
                                                                            : std::string();
  }));
  out.push_back(run_check("8-variable example: (I + (x1x2))_[4] not N2 (Betti)", [&] {
    const auto ex = remark_example();
    return is_nk_betti(truncation(add_generator(ex.ideal, ex.g), 4), 2, qq) ? std::string("Betti says N2")
                                                                            : std::string();
  }));
  out.push_back(run_check("8-variable example: N_k for every k up to pd", [&] {
    const auto ex = remark_example();
    const int pd = projective_dimension(ex.ideal, qq);
    for (int k = 1; k <= pd; ++k) {
      if (!is_nk_betti(ex.ideal, k, qq)) return "fails N_" + std::to_string(k);
    }
    return std::string();
  }));
  out.push_back(run_check("8-variable example: gcd witness for f = x1x2x5x6 has degree 3", [] {
    const auto ex = remark_example();
    const auto w = gcd_witness(ex.ideal, ex.f);
    return expect_eq(w.g.degree(), 3, "deg g");
  }));
  out.push_back(run_check("8-variable example: regularity bound report reg 4, f(8,4) = 5, not tight", [&] {
    const auto r = check_regularity_bound(remark_example().ideal, qq);
    std::string err = expect_eq(r.reg, 4, "reg") + expect_eq(r.f_value, 5, "f");
    if (!r.theorem_holds || r.tight) err += "verdict flags wrong";
    return err;
  }));
  out.push_back(run_check("8-variable example: cd of its Alexander dual = 4", [&] {
    return expect_eq(cohomological_dimension(alexander_dual(remark_example().ideal), qq), 4, "cd");
  }));
  out.push_back(run_check("sharp example n=6, d=3: N2 with reg = f(6,3) = 4", [&] {
    const auto r = check_regularity_bound(sharp_example(6, 3), qq);
    std::string err = expect_eq(r.reg, 4, "reg") + expect_eq(r.f_value, 4, "f");
    if (!r.tight) err += "not tight";
    return err;
  }));
  out.push_back(run_check("sharp examples d=3 n=3..9, d=5 n=5..10", [&] {
    for (int d : {3, 5}) {
      for (int n = d; n <= (d == 3 ? 9 : 10); ++n) {
        const auto ideal = sharp_example(n, d);
        if (!is_n2(ideal) || regularity(ideal, qq) != f_bound(n, d)) {
          return "fails at n = " + std::to_string(n) + ", d = " + std::to_string(d);
        }
      }
    }
    return std::string();
  }));
  out.push_back(run_check("degree-d ideals in d+1 variables are linear (d = 2, 3)", [&] {
    for (int d : {2, 3}) {
      const PureIdealSpace space(d + 1, d);
      for (SubsetIndex s = 1; s < space.end_index(); ++s) {
        if (regularity(space.ideal_at(s), qq) != d) return "nonlinear ideal at d = " + std::to_string(d);
      }
    }
    return std::string();
  }));
  return out;
}

}  // namespace monlab
