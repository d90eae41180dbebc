#include "monlab/duality.hpp"

#include <algorithm>

#include "monlab/betti.hpp"
#include "monlab/error.hpp"
#include "monlab/linearity.hpp"

namespace monlab {

namespace {

void require_nonzero(const Ideal& ideal, const char* what) {
  if (ideal.is_zero()) throw InputError(std::string(what) + ": zero ideal");
}

// Keep only inclusion-minimal sets. Input in canonical order (degree first).
std::vector<Mask> minimal_sets(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) { return canonical_less(a, b); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> out;
  for (Mask s : sets) {
    if (std::none_of(out.begin(), out.end(), [&](Mask t) { return (t & ~s) == 0; })) out.push_back(s);
  }
  return out;
}

}  // namespace

Ideal alexander_dual(const Ideal& ideal) {
  require_nonzero(ideal, "alexander_dual");
  std::vector<Mask> transversals{0};
  for (const auto& g : ideal.generators()) {
    const Mask edge = g.mask();
    std::vector<Mask> next;
    next.reserve(transversals.size() * 2);
    for (Mask t : transversals) {
      if (t & edge) {
        next.push_back(t);
        continue;
      }
      for (Mask rest = edge; rest; rest &= rest - 1) next.push_back(t | (rest & -rest));
    }
    transversals = minimal_sets(std::move(next));
  }
  return minimal_generators(ideal.ambient(), transversals);
}

DualReport height_profile(const Ideal& ideal) {
  require_nonzero(ideal, "height_profile");
  DualReport report{alexander_dual(ideal)};
  report.height = report.dual.min_degree();
  report.bigheight = report.dual.max_degree();
  report.pure = report.height == report.bigheight;
  return report;
}

S2Verdict is_s2(const Ideal& ideal, const FieldSpec& /*field*/) {
  const auto profile = height_profile(ideal);
  // The graph criterion is characteristic-free; the field is accepted for a
  // uniform interface.
  const bool holds = profile.pure && is_n2_graph(profile.dual).holds;
  return {holds, profile.height};
}

int cohomological_dimension(const Ideal& ideal, const FieldSpec& field) {
  require_nonzero(ideal, "cohomological_dimension");
  const int via_dual = regularity(alexander_dual(ideal), field);
  const int pd = projective_dimension(ideal, field);
  if (via_dual != pd) {
    throw InternalError("pd(S/I) = " + std::to_string(pd) + " but reg(I^v) = " + std::to_string(via_dual) +
                        " for I = " + describe(ideal));
  }
  return via_dual;
}

nlohmann::json dual_report_to_json(const DualReport& report) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : report.dual.generators()) gens.push_back(format_monomial(g));
  return {{"dual", gens}, {"height", report.height}, {"bigheight", report.bigheight}, {"pure", report.pure}};
}

}  // namespace monlab
