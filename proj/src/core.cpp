#include "monlab/core.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "monlab/error.hpp"

namespace monlab {

namespace {

void check_ambient(int ambient) {
  if (ambient < 1 || ambient > kMaxAmbient) {
    throw InputError("ambient must lie in [1, 64], got " + std::to_string(ambient));
  }
}

void check_same_ambient(int a, int b) {
  if (a != b) {
    throw InputError("ambient mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

int parse_int(std::string_view s, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InputError(std::string("invalid ") + what + ": '" + std::string(s) + "'");
  }
  return value;
}

// Append every degree-`target` superset of `base` inside `universe`.
void supersets_of_degree(Mask base, Mask universe, int target, std::vector<Mask>& out) {
  const int need = target - popcount(base);
  if (need < 0) return;
  std::vector<int> free;
  for (Mask rest = universe & ~base; rest; rest &= rest - 1) {
    free.push_back(__builtin_ctzll(rest));
  }
  if (need > static_cast<int>(free.size())) return;
  std::vector<int> pick(need);
  for (int i = 0; i < need; ++i) pick[i] = i;
  while (true) {
    Mask m = base;
    for (int idx : pick) m |= Mask{1} << free[idx];
    out.push_back(m);
    int i = need - 1;
    while (i >= 0 && pick[i] == static_cast<int>(free.size()) - need + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

Monomial::Monomial(int ambient, Mask vars) : ambient_(ambient), vars_(vars) {
  check_ambient(ambient);
  if ((vars & ~full_mask(ambient)) != 0) {
    throw InputError("monomial uses a variable beyond ambient " + std::to_string(ambient));
  }
}

Monomial Monomial::from_vars(int ambient, std::initializer_list<int> vars) {
  return from_vars(ambient, std::span<const int>(vars.begin(), vars.size()));
}

Monomial Monomial::from_vars(int ambient, std::span<const int> vars) {
  check_ambient(ambient);
  Mask m = 0;
  for (int v : vars) {
    if (v < 1 || v > ambient) {
      throw InputError("variable x" + std::to_string(v) + " out of range 1.." + std::to_string(ambient));
    }
    const Mask bit = Mask{1} << (v - 1);
    if (m & bit) throw InputError("repeated variable x" + std::to_string(v) + " (not squarefree)");
    m |= bit;
  }
  return Monomial(ambient, m);
}

bool Monomial::contains(int var) const {
  return var >= 1 && var <= ambient_ && ((vars_ >> (var - 1)) & 1);
}

std::vector<int> Monomial::vars() const {
  std::vector<int> out;
  for (Mask m = vars_; m; m &= m - 1) out.push_back(__builtin_ctzll(m) + 1);
  return out;
}

bool canonical_less(Mask a, Mask b) {
  const int da = popcount(a), db = popcount(b);
  return da != db ? da < db : a < b;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  check_same_ambient(u.ambient(), v.ambient());
  return Monomial(u.ambient(), u.mask() | v.mask());
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  check_same_ambient(u.ambient(), v.ambient());
  return Monomial(u.ambient(), u.mask() & v.mask());
}

bool divides(const Monomial& u, const Monomial& v) {
  check_same_ambient(u.ambient(), v.ambient());
  return (u.mask() & ~v.mask()) == 0;
}

Ideal::Ideal(int ambient) : ambient_(ambient) { check_ambient(ambient); }

Mask Ideal::support() const {
  Mask s = 0;
  for (const auto& g : gens_) s |= g.mask();
  return s;
}

std::optional<int> Ideal::pure_degree() const {
  if (gens_.empty()) return std::nullopt;
  const int d = gens_.front().degree();
  // Canonical order sorts by degree, so first == last suffices.
  if (gens_.back().degree() != d) return std::nullopt;
  return d;
}

int Ideal::min_degree() const { return gens_.empty() ? 0 : gens_.front().degree(); }
int Ideal::max_degree() const { return gens_.empty() ? 0 : gens_.back().degree(); }

bool Ideal::contains(Mask m) const {
  for (const auto& g : gens_) {
    if ((g.mask() & ~m) == 0) return true;
  }
  return false;
}

std::vector<Mask> Ideal::masks() const {
  std::vector<Mask> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.mask());
  return out;
}

Ideal minimal_generators(std::span<const Monomial> monomials) {
  if (monomials.empty()) {
    throw InputError("minimal_generators needs at least one monomial to fix the ambient");
  }
  const int ambient = monomials.front().ambient();
  std::vector<Mask> masks;
  masks.reserve(monomials.size());
  for (const auto& m : monomials) {
    check_same_ambient(ambient, m.ambient());
    masks.push_back(m.mask());
  }
  return minimal_generators(ambient, masks);
}

Ideal minimal_generators(int ambient, std::span<const Mask> monomials) {
  check_ambient(ambient);
  std::vector<Mask> sorted(monomials.begin(), monomials.end());
  for (Mask m : sorted) {
    if (m == 0) throw InputError("the monomial 1 generates the unit ideal");
    if ((m & ~full_mask(ambient)) != 0) {
      throw InputError("monomial uses a variable beyond ambient " + std::to_string(ambient));
    }
  }
  std::sort(sorted.begin(), sorted.end(), [](Mask a, Mask b) { return canonical_less(a, b); });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // A proper divisor has smaller degree, hence appears earlier.
  Ideal result(ambient);
  for (Mask m : sorted) {
    bool minimal = true;
    for (const auto& g : result.gens_) {
      if ((g.mask() & ~m) == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) result.gens_.emplace_back(ambient, m);
  }
  return result;
}

Ideal restriction(const Ideal& ideal, Mask subset) {
  if ((subset & ~full_mask(ideal.ambient())) != 0) {
    throw InputError("restriction subset exceeds ambient " + std::to_string(ideal.ambient()));
  }
  std::vector<Mask> kept;
  for (const auto& g : ideal.generators()) {
    if ((g.mask() & ~subset) == 0) kept.push_back(g.mask());
  }
  return minimal_generators(ideal.ambient(), kept);
}

Localization localize(const Ideal& ideal, const Monomial& f) {
  check_same_ambient(ideal.ambient(), f.ambient());
  if (f.is_one()) throw InputError("localize needs a nonempty monomial f");
  std::vector<Mask> multiples;
  std::vector<Mask> quotients;
  bool unit = false;
  for (const auto& g : ideal.generators()) {
    multiples.push_back(g.mask() | f.mask());
    const Mask q = g.mask() & ~f.mask();
    if (q == 0) unit = true;
    quotients.push_back(q);
  }
  Localization result{minimal_generators(ideal.ambient(), multiples), std::nullopt};
  if (!unit) result.quotient = minimal_generators(ideal.ambient(), quotients);
  return result;
}

Ideal truncation(const Ideal& ideal, int degree) {
  if (degree < 1 || degree > ideal.ambient()) {
    throw InputError("truncation degree must lie in [1, ambient], got " + std::to_string(degree));
  }
  std::vector<Mask> out;
  const Mask universe = full_mask(ideal.ambient());
  for (const auto& g : ideal.generators()) {
    supersets_of_degree(g.mask(), universe, degree, out);
  }
  return minimal_generators(ideal.ambient(), out);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ambient(a.ambient(), b.ambient());
  auto masks = a.masks();
  for (const auto& g : b.generators()) masks.push_back(g.mask());
  return minimal_generators(a.ambient(), masks);
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  check_same_ambient(a.ambient(), b.ambient());
  std::vector<Mask> masks;
  masks.reserve(a.size() * b.size());
  for (const auto& u : a.generators()) {
    for (const auto& v : b.generators()) masks.push_back(u.mask() | v.mask());
  }
  return minimal_generators(a.ambient(), masks);
}

Ideal add_generator(const Ideal& ideal, const Monomial& m) {
  check_same_ambient(ideal.ambient(), m.ambient());
  auto masks = ideal.masks();
  masks.push_back(m.mask());
  return minimal_generators(ideal.ambient(), masks);
}

std::vector<Mask> squarefree_of_degree(int ambient, int degree) {
  check_ambient(ambient);
  std::vector<Mask> out;
  if (degree < 0 || degree > ambient) return out;
  supersets_of_degree(0, full_mask(ambient), degree, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_monomial(Mask m) {
  if (m == 0) return "1";
  std::string out;
  for (Mask rest = m; rest; rest &= rest - 1) {
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(__builtin_ctzll(rest) + 1);
  }
  return out;
}

std::string format_monomial(const Monomial& m) { return format_monomial(m.mask()); }

Monomial parse_monomial(int ambient, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw InputError("empty monomial");
  if (text == "1") return Monomial::one(ambient);
  std::vector<int> vars;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto star = text.find('*', pos);
    if (star == std::string_view::npos) star = text.size();
    auto token = trim(text.substr(pos, star - pos));
    if (token.size() < 2 || token[0] != 'x') {
      throw InputError("invalid variable token '" + std::string(token) + "'");
    }
    vars.push_back(parse_int(token.substr(1), "variable index"));
    pos = star + 1;
  }
  return Monomial::from_vars(ambient, vars);
}

Ideal parse_ideal(std::string_view text) {
  std::optional<int> ambient;
  std::vector<Monomial> monomials;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      if (!ambient) {
        if (line.substr(0, 7) != "ambient" || line.size() < 8 || (line[7] != ' ' && line[7] != '\t')) {
          throw InputError("missing 'ambient <n>' header");
        }
        ambient = parse_int(trim(line.substr(8)), "ambient");
        check_ambient(*ambient);
        continue;
      }
      auto m = parse_monomial(*ambient, line);
      if (m.is_one()) throw InputError("the monomial 1 generates the unit ideal");
      monomials.push_back(m);
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!ambient) throw InputError("missing 'ambient <n>' header");
  if (monomials.empty()) return Ideal::zero(*ambient);
  return minimal_generators(monomials);
}

Ideal read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open ideal file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_ideal(buffer.str());
}

std::string format_ideal(const Ideal& ideal) {
  std::string out = "ambient " + std::to_string(ideal.ambient()) + "\n";
  for (const auto& g : ideal.generators()) {
    out += format_monomial(g);
    out += '\n';
  }
  return out;
}

std::string describe(const Ideal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(ideal[i]);
  }
  return out + ")";
}

}  // namespace monlab
