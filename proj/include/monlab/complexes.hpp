#pragma once

// Simplicial complexes on at most 64 vertices and their reduced homology
// with field coefficients.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "monlab/core.hpp"

namespace monlab {

class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(); }
  // Throws InputError unless p is a prime below 2^31.
  static FieldSpec prime_field(std::uint32_t p);
  // Accepts "QQ", "Q", "0", "p:<prime>" and "GF(<prime>)".
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return prime_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  // "QQ" or "GF(p)".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec() = default;
  Kind kind_ = Kind::Rationals;
  std::uint32_t prime_ = 0;
};

class SimplicialComplex {
 public:
  // Facets are reduced to their inclusion-maximal members. An empty facet
  // list is the void complex; {0} (the single empty face) is the irrelevant
  // complex.
  SimplicialComplex(int ambient, std::vector<Mask> facets);

  static SimplicialComplex void_complex(int ambient) { return {ambient, {}}; }
  static SimplicialComplex irrelevant(int ambient) { return {ambient, {0}}; }
  static SimplicialComplex simplex(int ambient, Mask vertices) { return {ambient, {vertices}}; }

  int ambient() const { return ambient_; }
  const std::vector<Mask>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool contains_face(Mask face) const;
  Mask vertices() const;
  int dimension() const;  // -1 for the irrelevant complex, -2 for void

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int ambient_;
  std::vector<Mask> facets_;  // sorted ascending
};

// Faces grouped by dimension: by_dim[p + 1] holds the p-faces in ascending
// mask order. Empty for the void complex.
struct FaceSets {
  std::vector<std::vector<Mask>> by_dim;

  std::size_t count(int p) const {
    const auto idx = static_cast<std::size_t>(p + 1);
    return p >= -1 && idx < by_dim.size() ? by_dim[idx].size() : 0;
  }
  int top_dimension() const { return static_cast<int>(by_dim.size()) - 2; }
  void add(Mask face);
  void finish();  // sorts each dimension
};

FaceSets enumerate_faces(const SimplicialComplex& complex);

// Faces of the complex whose minimal non-faces are `nonfaces`, restricted to
// the vertex subset `vertices`.
FaceSets faces_avoiding(Mask vertices, const std::vector<Mask>& nonfaces);

// The complex whose faces are the squarefree monomials outside I.
SimplicialComplex stanley_reisner(const Ideal& ideal);

// Faces of the complex contained in `subset`.
SimplicialComplex restrict_complex(const SimplicialComplex& complex, Mask subset);

// dims[p + 1] = dim of reduced homology in dimension p, for p >= -1.
struct HomologyDims {
  std::vector<std::size_t> dims;

  std::size_t at(int p) const {
    const auto idx = static_cast<std::size_t>(p + 1);
    return p >= -1 && idx < dims.size() ? dims[idx] : 0;
  }
  friend bool operator==(const HomologyDims&, const HomologyDims&) = default;
};

HomologyDims reduced_homology_dims(const SimplicialComplex& complex, const FieldSpec& field);
HomologyDims reduced_homology_dims(const FaceSets& faces, const FieldSpec& field);
// A single reduced homology dimension; only the two boundary maps around p
// are built.
std::size_t reduced_homology_dim(const FaceSets& faces, int p, const FieldSpec& field);

// Rank of the boundary map from p-faces to (p-1)-faces. For p = 0 the target
// is the empty face, so the rank is 1 if any vertex exists.
std::size_t boundary_rank(const FaceSets& faces, int p, const FieldSpec& field);

}  // namespace monlab
