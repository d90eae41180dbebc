#pragma once

// Squarefree monomials and monomial ideals.
//
// A monomial is a subset of {x1, ..., xn} stored as a 64-bit mask, x1 in the
// lowest bit. Indices are 1-based at every public boundary (parsing,
// printing, from_vars) and 0-based inside masks.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monlab {

using Mask = std::uint64_t;

inline constexpr int kMaxAmbient = 64;

constexpr Mask full_mask(int ambient) {
  return ambient >= 64 ? ~Mask{0} : ((Mask{1} << ambient) - 1);
}

constexpr int popcount(Mask m) { return __builtin_popcountll(m); }

class Monomial {
 public:
  Monomial() = default;
  // Throws InputError if ambient is outside [1, 64] or mask uses a variable
  // beyond the ambient.
  Monomial(int ambient, Mask vars);

  // Variables are 1-based.
  static Monomial from_vars(int ambient, std::initializer_list<int> vars);
  static Monomial from_vars(int ambient, std::span<const int> vars);
  static Monomial one(int ambient) { return Monomial(ambient, 0); }

  int ambient() const { return ambient_; }
  Mask mask() const { return vars_; }
  int degree() const { return popcount(vars_); }
  bool is_one() const { return vars_ == 0; }
  bool contains(int var) const;  // 1-based
  std::vector<int> vars() const;  // 1-based, ascending

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  int ambient_ = 1;
  Mask vars_ = 0;
};

// Canonical order: degree first, then the mask read as an unsigned integer.
bool canonical_less(Mask a, Mask b);
inline bool canonical_less(const Monomial& a, const Monomial& b) {
  return canonical_less(a.mask(), b.mask());
}

Monomial lcm(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);
bool divides(const Monomial& u, const Monomial& v);

class Ideal {
 public:
  // The zero ideal in `ambient` variables.
  explicit Ideal(int ambient = 1);

  static Ideal zero(int ambient) { return Ideal(ambient); }

  int ambient() const { return ambient_; }
  std::span<const Monomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  const Monomial& operator[](std::size_t i) const { return gens_[i]; }

  Mask support() const;
  // Common generator degree, or nullopt for the zero ideal / mixed degrees.
  std::optional<int> pure_degree() const;
  int min_degree() const;
  int max_degree() const;
  // Membership of a squarefree monomial (some generator divides it).
  bool contains(Mask m) const;
  bool contains(const Monomial& m) const { return contains(m.mask()); }
  std::vector<Mask> masks() const;

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  friend Ideal minimal_generators(int, std::span<const Mask>);
  int ambient_;
  std::vector<Monomial> gens_;
};

// Minimal generating set of the ideal generated by `monomials`, deduplicated
// and in canonical order. Every input must be nonempty (else the ideal would
// be the unit ideal) and share one ambient.
Ideal minimal_generators(std::span<const Monomial> monomials);
Ideal minimal_generators(int ambient, std::span<const Mask> monomials);

// I(U): generators of I supported inside U. U is a mask of variables.
Ideal restriction(const Ideal& ideal, Mask subset);

struct Localization {
  // I_f, generated by lcm(g, f) for g in G(I), minimized.
  Ideal multiples;
  // The ideal obtained by deleting the variables of f from each generator of
  // I_f. nullopt when that ideal is the unit ideal, which happens exactly when
  // some generator of I divides f.
  std::optional<Ideal> quotient;

  bool quotient_is_unit() const { return !quotient.has_value(); }
};

Localization localize(const Ideal& ideal, const Monomial& f);

// I_[d]: all squarefree degree-d monomials lying in I.
Ideal truncation(const Ideal& ideal, int degree);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
// I + (m)
Ideal add_generator(const Ideal& ideal, const Monomial& m);

// All squarefree monomials of degree d in n variables, canonical order.
std::vector<Mask> squarefree_of_degree(int ambient, int degree);

// Text formats. Monomials print as x1*x3*x5 with ascending variables; the
// empty monomial prints as 1.
std::string format_monomial(const Monomial& m);
std::string format_monomial(Mask m);
Monomial parse_monomial(int ambient, std::string_view text);

// Ideal file format: a required `ambient <n>` header, then one monomial per
// line. Blank lines and everything after '#' are ignored.
Ideal parse_ideal(std::string_view text);
Ideal read_ideal_file(const std::string& path);
std::string format_ideal(const Ideal& ideal);

// Short inline form used in diagnostics: (x1*x2, x3*x4).
std::string describe(const Ideal& ideal);

}  // namespace monlab
