#include "monlab/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "monlab/betti.hpp"
#include "monlab/duality.hpp"
#include "monlab/error.hpp"
#include "monlab/linearity.hpp"

namespace monlab {

namespace {

// The piecewise formulas, valid for any d >= 1. Reports for d = 1 (ideals of
// variables) go through these directly.
int f_formula(int n, int d) {
  if (n < d) return 0;
  if (n == d) return d;
  return (d - 1) * n / (d + 1) + 1;
}

int g_formula(int n, int d) { return n - n / (d + 1) - (n - 1) / (d + 1); }

}  // namespace

int f_bound(int n, int d) {
  if (d < 2) throw InputError("f(n,d) needs d >= 2");
  if (n < 0) throw InputError("f(n,d) needs n >= 0");
  return f_formula(n, d);
}

int g_bound(int n, int d) {
  if (d < 2) throw InputError("g(n,d) needs d >= 2");
  if (n < 1) throw InputError("g(n,d) needs n >= 1");
  return g_formula(n, d);
}

int faltings_bound(int n, int bigheight) {
  if (n < 1 || bigheight < 1) throw InputError("Faltings bound needs n >= 1 and bigheight >= 1");
  return n - (n - 1) / (bigheight + 1);
}

int regularity_bound(int n, int d) {
  if (d < 1) throw InputError("regularity bound needs d >= 1");
  return std::max(d, f_formula(n, d));
}

namespace {

void fill_bounds(BoundReport& r, const Ideal& ideal, BoundOptions options) {
  r.ambient_n = ideal.ambient();
  r.support_n = popcount(ideal.support());
  r.n = options.use_support ? r.support_n : r.ambient_n;
  r.f_ambient = f_formula(r.ambient_n, r.d);
  r.f_support = f_formula(r.support_n, r.d);
  r.f_value = f_formula(r.n, r.d);
  r.g_value = g_formula(r.n, r.d);
  r.bound = std::max(r.d, r.f_value);
  r.theorem_holds = r.reg <= r.bound;
  r.tight = r.reg == r.bound;
}

}  // namespace

BoundReport check_regularity_bound(const Ideal& ideal, const FieldSpec& field, BoundOptions options) {
  if (ideal.is_zero()) throw PreconditionError("regularity bound needs a nonzero ideal");
  const auto d = ideal.pure_degree();
  if (!d) throw PreconditionError("regularity bound needs generators of a single degree");
  if (const auto n2 = is_n2_graph(ideal); !n2.holds) {
    throw PreconditionError("regularity bound needs an N2 ideal (disconnected pair " + format_monomial(n2.witness->first) +
                            ", " + format_monomial(n2.witness->second) + ")");
  }
  BoundReport r;
  r.kind = BoundReport::Kind::Regularity;
  r.d = *d;
  r.reg = regularity(ideal, field);
  r.field = field.to_string();
  fill_bounds(r, ideal, options);
  // reg(I) = cd(S, I^v) and bigheight(I^v) = d.
  r.faltings_value = faltings_bound(r.n, r.d);
  return r;
}

BoundReport check_cd_bound(const Ideal& ideal, const FieldSpec& field, BoundOptions options) {
  if (ideal.is_zero()) throw PreconditionError("cd bound needs a nonzero ideal");
  const auto s2 = is_s2(ideal, field);
  if (!s2.holds) throw PreconditionError("cd bound needs S/I to satisfy S2");
  BoundReport r;
  r.kind = BoundReport::Kind::CohomologicalDimension;
  r.d = s2.height;
  r.reg = cohomological_dimension(ideal, field);
  r.field = field.to_string();
  fill_bounds(r, ideal, options);
  if (r.f_value > r.g_value) throw InternalError("f(n,c) exceeds g(n,c)");
  r.faltings_value = faltings_bound(r.n, height_profile(ideal).bigheight);
  return r;
}

Ideal sharp_example(int n, int d) {
  if (d < 3 || d % 2 == 0) throw InputError("sharp_example needs an odd degree d >= 3");
  if (n < d) throw InputError("sharp_example needs n >= d");
  if (n > kMaxAmbient) throw InputError("sharp_example needs n <= 64");
  Ideal result(n);
  if (n == d) {
    const Mask all = full_mask(n);
    result = minimal_generators(n, std::span<const Mask>(&all, 1));
  } else {
    const int k = (d - 1) / 2;
    const int t = n / (k + 1);
    const int s = n % (k + 1);
    std::vector<Mask> blocks;
    for (int b = 0; b < t; ++b) blocks.push_back(((Mask{1} << (k + 1)) - 1) << (b * (k + 1)));
    if (s >= 2) blocks.push_back(((Mask{1} << s) - 1) << (t * (k + 1)));
    result = truncation(minimal_generators(n, blocks), d);
  }
  if (!is_n2_graph(result).holds) throw InternalError("sharp_example is not N2");
  if (regularity(result, FieldSpec::rationals()) != f_bound(n, d)) {
    throw InternalError("sharp_example regularity differs from f(n,d)");
  }
  return result;
}

nlohmann::json bound_report_to_json(const BoundReport& r) {
  const bool thm = r.kind == BoundReport::Kind::Regularity;
  return {
      {"kind", thm ? "regularity" : "cohomological_dimension"},
      {"n", r.n},
      {"ambient_n", r.ambient_n},
      {"support_n", r.support_n},
      {thm ? "d" : "c", r.d},
      {thm ? "reg" : "cd", r.reg},
      {"f_value", r.f_value},
      {"f_ambient", r.f_ambient},
      {"f_support", r.f_support},
      {"g_value", r.g_value},
      {"bound", r.bound},
      {"theorem_holds", r.theorem_holds},
      {"tight", r.tight},
      {"faltings_value", r.faltings_value},
      {"field", r.field},
  };
}

std::string format_bound_table(int d, int n_min, int n_max) {
  if (n_min < 1 || n_max < n_min) throw InputError("bound table needs 1 <= n-min <= n-max");
  std::vector<std::string> ns, fs, gs;
  for (int n = n_min; n <= n_max; ++n) {
    ns.push_back(std::to_string(n));
    fs.push_back(std::to_string(f_bound(n, d)));
    gs.push_back(std::to_string(g_bound(n, d)));
  }
  const std::string f_label = "f(n," + std::to_string(d) + ")";
  const std::string g_label = "g(n," + std::to_string(d) + ")";
  const std::size_t label_width = std::max(f_label.size(), g_label.size());
  std::ostringstream out;
  auto row = [&](const std::string& label, const std::vector<std::string>& cells) {
    out << label << std::string(label_width - label.size(), ' ') << " |";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::size_t w = std::max({ns[i].size(), fs[i].size(), gs[i].size()});
      out << ' ' << std::string(w - cells[i].size(), ' ') << cells[i];
    }
    out << '\n';
  };
  row("n", ns);
  row(f_label, fs);
  row(g_label, gs);
  return out.str();
}

}  // namespace monlab
