#include "monlab/complexes.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "monlab/error.hpp"
#include "monlab/rank.hpp"

namespace monlab {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::vector<Mask> maximal_elements(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> out;
  for (Mask s : sets) {
    bool covered = false;
    for (Mask t : out) {
      if ((s & ~t) == 0) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InputError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  }
  FieldSpec f;
  f.kind_ = Kind::PrimeField;
  f.prime_ = p;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "QQ" || text == "Q" || text == "0") return rationals();
  std::string_view digits;
  if (text.starts_with("p:")) {
    digits = text.substr(2);
  } else if (text.starts_with("GF(") && text.ends_with(")")) {
    digits = text.substr(3, text.size() - 4);
  } else {
    throw InputError("unknown field '" + std::string(text) + "' (use QQ or p:<prime>)");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || p >= (1ull << 31)) {
    throw InputError("invalid field characteristic '" + std::string(digits) + "'");
  }
  return prime_field(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? "QQ" : "GF(" + std::to_string(prime_) + ")";
}

SimplicialComplex::SimplicialComplex(int ambient, std::vector<Mask> facets) : ambient_(ambient) {
  if (ambient < 1 || ambient > kMaxAmbient) throw InputError("complex ambient must lie in [1, 64]");
  for (Mask f : facets) {
    if ((f & ~full_mask(ambient)) != 0) throw InputError("facet uses a vertex beyond the ambient");
  }
  facets_ = maximal_elements(std::move(facets));
}

bool SimplicialComplex::contains_face(Mask face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](Mask f) { return (face & ~f) == 0; });
}

Mask SimplicialComplex::vertices() const {
  Mask v = 0;
  for (Mask f : facets_) v |= f;
  return v;
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  int d = -1;
  for (Mask f : facets_) d = std::max(d, popcount(f) - 1);
  return d;
}

void FaceSets::add(Mask face) {
  const auto idx = static_cast<std::size_t>(popcount(face));
  if (by_dim.size() <= idx) by_dim.resize(idx + 1);
  by_dim[idx].push_back(face);
}

void FaceSets::finish() {
  for (auto& v : by_dim) std::sort(v.begin(), v.end());
}

FaceSets enumerate_faces(const SimplicialComplex& complex) {
  FaceSets out;
  if (complex.is_void()) return out;
  std::unordered_set<Mask> seen;
  for (Mask facet : complex.facets()) {
    // Iterate all submasks of the facet, including 0.
    Mask sub = facet;
    while (true) {
      if (seen.insert(sub).second) out.add(sub);
      if (sub == 0) break;
      sub = (sub - 1) & facet;
    }
  }
  out.finish();
  return out;
}

FaceSets faces_avoiding(Mask vertices, const std::vector<Mask>& nonfaces) {
  std::vector<int> verts;
  for (Mask m = vertices; m; m &= m - 1) verts.push_back(__builtin_ctzll(m));
  // Relevant non-faces, bucketed by their largest vertex: when a face grows by
  // vertex v (always the largest so far), only those can become contained.
  std::vector<std::vector<Mask>> by_top(64);
  for (Mask g : nonfaces) {
    if (g == 0 || (g & ~vertices) != 0) continue;
    by_top[63 - __builtin_clzll(g)].push_back(g);
  }
  FaceSets out;
  out.add(0);
  struct Frame {
    Mask face;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    auto& top = stack.back();
    if (top.next == verts.size()) {
      stack.pop_back();
      continue;
    }
    const int v = verts[top.next++];
    const Mask grown = top.face | (Mask{1} << v);
    bool ok = true;
    for (Mask g : by_top[v]) {
      if ((g & ~grown) == 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    out.add(grown);
    const std::size_t resume = top.next;
    stack.push_back({grown, resume});
  }
  out.finish();
  return out;
}

SimplicialComplex stanley_reisner(const Ideal& ideal) {
  const Mask all = full_mask(ideal.ambient());
  const auto faces = faces_avoiding(all, ideal.masks());
  std::vector<Mask> facets;
  for (const auto& level : faces.by_dim) {
    for (Mask f : level) {
      bool maximal = true;
      for (Mask rest = all & ~f; rest; rest &= rest - 1) {
        if (!ideal.contains(f | (rest & -rest))) {
          maximal = false;
          break;
        }
      }
      if (maximal) facets.push_back(f);
    }
  }
  return SimplicialComplex(ideal.ambient(), std::move(facets));
}

SimplicialComplex restrict_complex(const SimplicialComplex& complex, Mask subset) {
  std::vector<Mask> facets;
  facets.reserve(complex.facets().size());
  for (Mask f : complex.facets()) facets.push_back(f & subset);
  return SimplicialComplex(complex.ambient(), std::move(facets));
}

std::size_t boundary_rank(const FaceSets& faces, int p, const FieldSpec& field) {
  if (p < 0 || faces.count(p) == 0) return 0;
  if (p == 0) return faces.count(-1) > 0 ? 1 : 0;
  const auto& rows_faces = faces.by_dim[p + 1];
  const auto& cols_faces = faces.by_dim[p];
  std::vector<SparseRow> rows;
  rows.reserve(rows_faces.size());
  for (Mask face : rows_faces) {
    SparseRow row;
    row.reserve(p + 1);
    int position = 0;
    for (Mask rest = face; rest; rest &= rest - 1, ++position) {
      const Mask facet = face & ~(rest & -rest);
      const auto it = std::lower_bound(cols_faces.begin(), cols_faces.end(), facet);
      if (it == cols_faces.end() || *it != facet) {
        throw InternalError("face set is not closed under taking subfaces");
      }
      row.push_back({static_cast<std::uint32_t>(it - cols_faces.begin()), position % 2 == 0 ? 1 : -1});
    }
    std::sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
    rows.push_back(std::move(row));
  }
  return field.is_rationals() ? rank_over_rationals(std::move(rows))
                              : rank_mod_p(std::move(rows), field.characteristic());
}

std::size_t reduced_homology_dim(const FaceSets& faces, int p, const FieldSpec& field) {
  const std::size_t n = faces.count(p);
  if (n == 0) return 0;
  return n - boundary_rank(faces, p, field) - boundary_rank(faces, p + 1, field);
}

HomologyDims reduced_homology_dims(const FaceSets& faces, const FieldSpec& field) {
  HomologyDims out;
  if (faces.by_dim.empty()) {
    out.dims = {0};
    return out;
  }
  const int top = faces.top_dimension();
  std::vector<std::size_t> ranks(top + 3, 0);  // ranks[p + 1] = rank of boundary from p-faces
  for (int p = 0; p <= top; ++p) ranks[p + 1] = boundary_rank(faces, p, field);
  out.dims.resize(top + 2);
  for (int p = -1; p <= top; ++p) {
    out.dims[p + 1] = faces.count(p) - ranks[p + 1] - ranks[p + 2];
  }
#ifndef NDEBUG
  long long chi_faces = 0, chi_homology = 0;
  for (int p = -1; p <= top; ++p) {
    const long long sign = (p % 2 == 0) ? 1 : -1;
    chi_faces += sign * static_cast<long long>(faces.count(p));
    chi_homology += sign * static_cast<long long>(out.at(p));
  }
  if (chi_faces != chi_homology) throw InternalError("reduced Euler characteristic mismatch");
#endif
  return out;
}

HomologyDims reduced_homology_dims(const SimplicialComplex& complex, const FieldSpec& field) {
  return reduced_homology_dims(enumerate_faces(complex), field);
}

}  // namespace monlab
