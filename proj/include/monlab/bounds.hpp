#pragma once

// Regularity bounds for linearly presented squarefree ideals.
//
//   f(n,d) = 0 (n < d), d (n = d), floor((d-1)n/(d+1)) + 1 (n > d)
//   g(n,d) = n - floor(n/(d+1)) - floor((n-1)/(d+1))
//   Faltings: cd <= n - floor((n-1)/(bigheight+1))

#include <string>

#include <nlohmann/json.hpp>

#include "monlab/complexes.hpp"
#include "monlab/core.hpp"

namespace monlab {

int f_bound(int n, int d);
int g_bound(int n, int d);
int faltings_bound(int n, int bigheight);
// max(d, f(n,d)): the regularity bound for N2 ideals. Also defined for d = 1.
int regularity_bound(int n, int d);

struct BoundReport {
  enum class Kind { Regularity, CohomologicalDimension };

  Kind kind = Kind::Regularity;
  int n = 0;          // variable count the bound was evaluated at
  int ambient_n = 0;  // ambient ring size
  int support_n = 0;  // |supp(I)|
  int d = 0;          // generating degree, or the height c for the cd report
  int reg = 0;        // reg(I), or cd(S,I) = pd(S/I) for the cd report
  int f_value = 0;
  int f_ambient = 0;
  int f_support = 0;
  int g_value = 0;
  int bound = 0;  // max(d, f_value)
  bool theorem_holds = false;
  bool tight = false;
  int faltings_value = 0;
  std::string field;
};

struct BoundOptions {
  // Evaluate f at |supp(I)| instead of the ambient variable count.
  bool use_support = false;
};

// reg(I) against max(d, f(n,d)). Requires I nonzero, pure and N2; otherwise
// PreconditionError.
BoundReport check_regularity_bound(const Ideal& ideal, const FieldSpec& field, BoundOptions options = {});
// cd(S,I) against max(c, f(n,c)) and g(n,c), c = height. Requires S/I to be
// S2; otherwise PreconditionError.
BoundReport check_cd_bound(const Ideal& ideal, const FieldSpec& field, BoundOptions options = {});

// A degree-d N2 ideal on n variables with reg = f(n,d), for odd d >= 3 and
// n >= d. Built as the degree-d truncation of a complete intersection of
// consecutive variable blocks.
Ideal sharp_example(int n, int d);

nlohmann::json bound_report_to_json(const BoundReport& report);

// f/g rows for n in [n_min, n_max], laid out one row per function.
std::string format_bound_table(int d, int n_min, int n_max);

}  // namespace monlab
