#pragma once

// Brute-force reference implementations. Deliberately naive and independent
// of the library's engines: every subset is enumerated, membership is tested
// by divisibility, ranks come from dense elimination over mpq or Z/p.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "monlab/core.hpp"

namespace oracle {

using monlab::Mask;

inline bool in_ideal(const std::vector<Mask>& gens, Mask m) {
  for (Mask g : gens)
    if ((g & m) == g) return true;
  return false;
}

inline std::vector<Mask> minimal(std::vector<Mask> ms) {
  std::vector<Mask> out;
  for (Mask a : ms) {
    bool keep = true;
    for (Mask b : ms)
      if (b != a && (b & a) == b) keep = false;
    bool dup = false;
    for (Mask c : out) dup |= c == a;
    if (keep && !dup) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return monlab::canonical_less(a, b); });
  return out;
}

// Minimal generators of the ideal of all squarefree monomials satisfying pred.
template <class Pred>
std::vector<Mask> ideal_where(int n, Pred pred) {
  std::vector<Mask> ms;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (pred(m)) ms.push_back(m);
  return minimal(ms);
}

// Rank of a dense matrix over Q (p == 0) or Z/p.
inline std::size_t dense_rank(std::vector<std::vector<long>> a, std::uint32_t p) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  if (p == 0) {
    std::vector<std::vector<mpq_class>> q(rows, std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) q[i][j] = a[i][j];
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t piv = rank;
      while (piv < rows && q[piv][c] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(q[piv], q[rank]);
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == rank || q[i][c] == 0) continue;
        const mpq_class factor = q[i][c] / q[rank][c];
        for (std::size_t j = c; j < cols; ++j) q[i][j] -= factor * q[rank][j];
      }
      ++rank;
    }
    return rank;
  }
  const long P = p;
  for (auto& row : a)
    for (auto& v : row) v = ((v % P) + P) % P;
  auto inv = [P](long x) {
    long r = 1, e = P - 2;
    while (e) {
      if (e & 1) r = r * x % P;
      x = x * x % P;
      e >>= 1;
    }
    return r;
  };
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const long iv = inv(a[rank][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const long factor = a[i][c] * iv % P;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - factor * a[rank][j]) % P + P) % P;
    }
    ++rank;
  }
  return rank;
}

// Reduced homology dimensions H~_{-1}.. of the complex whose faces are the
// given masks (must be closed under subsets; empty list = void complex).
inline std::vector<std::size_t> reduced_homology(const std::vector<Mask>& faces, std::uint32_t p) {
  if (faces.empty()) return {};
  int top = -1;
  for (Mask f : faces) top = std::max(top, monlab::popcount(f) - 1);
  std::vector<std::vector<Mask>> by_dim(top + 2);
  for (Mask f : faces) by_dim[monlab::popcount(f)].push_back(f);
  // rank of boundary from dimension q to q-1, q = 0..top (q = 0 maps vertices to the empty face)
  std::vector<std::size_t> rk(top + 2, 0);
  for (int q = 0; q <= top; ++q) {
    const auto& hi = by_dim[q + 1];
    const auto& lo = by_dim[q];
    std::vector<std::vector<long>> m(hi.size(), std::vector<long>(lo.size(), 0));
    for (std::size_t i = 0; i < hi.size(); ++i) {
      int pos = 0;
      for (int v = 0; v < 64; ++v) {
        if (!((hi[i] >> v) & 1)) continue;
        const Mask facet = hi[i] & ~(Mask{1} << v);
        for (std::size_t j = 0; j < lo.size(); ++j)
          if (lo[j] == facet) m[i][j] = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      }
    }
    rk[q] = dense_rank(m, p);
  }
  std::vector<std::size_t> h(top + 2);
  for (int q = -1; q <= top; ++q) {
    const std::size_t cells = by_dim[q + 1].size();
    const std::size_t out = q >= 0 ? rk[q] : 0;
    const std::size_t in = q + 1 <= top ? rk[q + 1] : 0;
    h[q + 1] = cells - out - in;
  }
  return h;
}

// Coarse Betti numbers of the ideal generated by gens: (i, j) -> beta_{i,j}(I),
// by Hochster's formula over every sigma in 2^[n].
inline std::map<std::pair<int, int>, std::size_t> betti(int n, const std::vector<Mask>& gens, std::uint32_t p) {
  std::map<std::pair<int, int>, std::size_t> out;
  for (Mask sigma = 1; sigma < (Mask{1} << n); ++sigma) {
    std::vector<Mask> faces;
    for (Mask f = sigma;; f = (f - 1) & sigma) {
      if (!in_ideal(gens, f)) faces.push_back(f);
      if (f == 0) break;
    }
    const auto h = reduced_homology(faces, p);
    const int s = monlab::popcount(sigma);
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (!h[k]) continue;
      const int dim = static_cast<int>(k) - 1;
      const int i = s - dim - 2;
      if (i >= 0) out[{i, s}] += h[k];
    }
  }
  return out;
}

inline int regularity(int n, const std::vector<Mask>& gens, std::uint32_t p = 0) {
  int r = -1;
  for (const auto& [key, v] : betti(n, gens, p)) r = std::max(r, key.second - key.first);
  return r;
}

inline int pd_quotient(int n, const std::vector<Mask>& gens, std::uint32_t p = 0) {
  int r = 0;
  for (const auto& [key, v] : betti(n, gens, p)) r = std::max(r, key.first + 1);
  return r;
}

// All minimal subsets meeting every generator.
inline std::vector<Mask> dual(int n, const std::vector<Mask>& gens) {
  return ideal_where(n, [&](Mask m) {
    for (Mask g : gens)
      if (!(g & m)) return false;
    return true;
  });
}

inline std::vector<Mask> masks(const monlab::Ideal& i) { return i.masks(); }

// Random antichain: a handful of random squarefree monomials of degree in [lo, hi], minimized.
inline std::vector<Mask> random_ideal(std::mt19937_64& rng, int n, int lo, int hi, int max_gens) {
  std::uniform_int_distribution<int> count(1, max_gens), degree(lo, hi), var(0, n - 1);
  std::vector<Mask> ms;
  const int k = count(rng);
  for (int t = 0; t < k; ++t) {
    const int deg = std::min(degree(rng), n);
    Mask m = 0;
    while (monlab::popcount(m) < deg) m |= Mask{1} << var(rng);
    ms.push_back(m);
  }
  return minimal(ms);
}

inline monlab::Ideal make(int n, const std::vector<Mask>& ms) { return monlab::minimal_generators(n, ms); }

}  // namespace oracle
