#pragma once

// Alexander duality and the invariants read off from it.
//
// S2 and cohomological dimension are defined combinatorially here:
//   S/I is S2 with height c  <=>  I^v is generated in degree c and N2
//   cd(S, I) = pd(S/I) = reg(I^v)

#include <nlohmann/json.hpp>

#include "monlab/complexes.hpp"
#include "monlab/core.hpp"

namespace monlab {

// Minimal transversals of the generator supports, built one generator at a
// time. Exponential in the worst case.
Ideal alexander_dual(const Ideal& ideal);

struct DualReport {
  Ideal dual;
  int height = 0;
  int bigheight = 0;
  bool pure = false;
};

DualReport height_profile(const Ideal& ideal);

struct S2Verdict {
  bool holds = false;
  int height = 0;

  explicit operator bool() const { return holds; }
};

S2Verdict is_s2(const Ideal& ideal, const FieldSpec& field);

// reg(I^v), cross-checked against pd(S/I); a mismatch throws InternalError.
int cohomological_dimension(const Ideal& ideal, const FieldSpec& field);

nlohmann::json dual_report_to_json(const DualReport& report);

}  // namespace monlab
