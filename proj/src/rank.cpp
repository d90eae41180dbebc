#include "monlab/rank.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace monlab {

namespace {

struct Overflow {};

// Checked 64-bit integer arithmetic for the fast path.
struct Int64Ops {
  using Value = std::int64_t;
  static Value from(std::int64_t v) { return v; }
  static bool is_zero(Value v) { return v == 0; }
  static Value gcd(Value a, Value b) { return std::gcd(a, b); }
  static Value div(Value a, Value b) { return a / b; }
  static bool negative(Value v) { return v < 0; }
  static Value neg(Value v) {
    if (v == INT64_MIN) throw Overflow{};
    return -v;
  }
  // x*a - y*b
  static Value combine(Value x, Value a, Value y, Value b) {
    __int128 r = static_cast<__int128>(x) * a - static_cast<__int128>(y) * b;
    if (r > INT64_MAX || r < INT64_MIN + 1) throw Overflow{};
    return static_cast<Value>(r);
  }
};

struct MpzOps {
  using Value = mpz_class;
  static Value from(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  static Value gcd(const Value& a, const Value& b) {
    Value g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static Value div(const Value& a, const Value& b) {
    Value q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static bool negative(const Value& v) { return sgn(v) < 0; }
  static Value neg(const Value& v) { return -v; }
  static Value combine(const Value& x, const Value& a, const Value& y, const Value& b) {
    return x * a - y * b;
  }
};

template <class Ops>
struct Row {
  std::vector<std::uint32_t> cols;
  std::vector<typename Ops::Value> vals;
};

template <class Ops>
void normalize(Row<Ops>& row) {
  using V = typename Ops::Value;
  V content = row.vals.front();
  if (Ops::negative(content)) content = Ops::neg(content);
  for (std::size_t i = 1; i < row.vals.size() && content != V(1); ++i) {
    content = Ops::gcd(content, row.vals[i]);
  }
  if (Ops::negative(row.vals.front())) content = Ops::neg(content);
  if (content != V(1)) {
    for (auto& v : row.vals) v = Ops::div(v, content);
  }
}

template <class Ops>
std::size_t integer_echelon_rank(const std::vector<SparseRow>& input) {
  using V = typename Ops::Value;
  std::uint32_t max_col = 0;
  for (const auto& r : input) {
    if (!r.empty()) max_col = std::max(max_col, r.back().col + 1);
  }
  std::vector<int> pivot_of(max_col, -1);
  std::vector<Row<Ops>> pivots;
  Row<Ops> scratch;
  for (const auto& in : input) {
    Row<Ops> row;
    for (const auto& e : in) {
      if (e.value == 0) continue;
      row.cols.push_back(e.col);
      row.vals.push_back(Ops::from(e.value));
    }
    while (!row.cols.empty()) {
      const auto lead = row.cols.front();
      const int pi = pivot_of[lead];
      if (pi < 0) {
        normalize(row);
        pivot_of[lead] = static_cast<int>(pivots.size());
        pivots.push_back(std::move(row));
        break;
      }
      const auto& p = pivots[pi];
      const V a = row.vals.front();
      const V b = p.vals.front();
      const V g = Ops::gcd(a, b);
      const V x = Ops::div(b, g);  // multiplier for row
      const V y = Ops::div(a, g);  // multiplier for pivot
      scratch.cols.clear();
      scratch.vals.clear();
      std::size_t i = 1, j = 1;
      while (i < row.cols.size() || j < p.cols.size()) {
        if (j >= p.cols.size() || (i < row.cols.size() && row.cols[i] < p.cols[j])) {
          scratch.cols.push_back(row.cols[i]);
          scratch.vals.push_back(Ops::combine(x, row.vals[i], V(0), V(0)));
          ++i;
        } else if (i >= row.cols.size() || p.cols[j] < row.cols[i]) {
          scratch.cols.push_back(p.cols[j]);
          scratch.vals.push_back(Ops::combine(V(0), V(0), y, p.vals[j]));
          ++j;
        } else {
          V v = Ops::combine(x, row.vals[i], y, p.vals[j]);
          if (!Ops::is_zero(v)) {
            scratch.cols.push_back(row.cols[i]);
            scratch.vals.push_back(std::move(v));
          }
          ++i;
          ++j;
        }
      }
      std::swap(row, scratch);
      if (!row.cols.empty()) normalize(row);
    }
  }
  return pivots.size();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime: a^(p-2).
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

std::size_t rank_mod_p(std::vector<SparseRow> rows, std::uint32_t p) {
  const std::uint64_t mod = p;
  std::uint32_t max_col = 0;
  for (auto& r : rows) {
    std::erase_if(r, [&](SparseEntry& e) {
      std::int64_t v = e.value % static_cast<std::int64_t>(mod);
      if (v < 0) v += static_cast<std::int64_t>(mod);
      e.value = v;
      return v == 0;
    });
    if (!r.empty()) max_col = std::max(max_col, r.back().col + 1);
  }
  std::vector<int> pivot_of(max_col, -1);
  std::vector<SparseRow> pivots;
  SparseRow scratch;
  for (auto& row : rows) {
    while (!row.empty()) {
      const auto lead = row.front().col;
      const int pi = pivot_of[lead];
      if (pi < 0) {
        const std::uint64_t inv = inverse_mod(static_cast<std::uint64_t>(row.front().value), mod);
        for (auto& e : row) e.value = static_cast<std::int64_t>(static_cast<std::uint64_t>(e.value) * inv % mod);
        pivot_of[lead] = static_cast<int>(pivots.size());
        pivots.push_back(std::move(row));
        break;
      }
      const auto& piv = pivots[pi];
      // row <- row - a * piv, piv has leading coefficient 1.
      const std::uint64_t a = static_cast<std::uint64_t>(row.front().value);
      scratch.clear();
      std::size_t i = 1, j = 1;
      while (i < row.size() || j < piv.size()) {
        if (j >= piv.size() || (i < row.size() && row[i].col < piv[j].col)) {
          scratch.push_back(row[i++]);
        } else {
          const std::uint64_t sub = a * static_cast<std::uint64_t>(piv[j].value) % mod;
          if (i >= row.size() || piv[j].col < row[i].col) {
            scratch.push_back({piv[j].col, static_cast<std::int64_t>((mod - sub) % mod)});
            ++j;
          } else {
            const std::uint64_t v = (static_cast<std::uint64_t>(row[i].value) + mod - sub) % mod;
            if (v) scratch.push_back({row[i].col, static_cast<std::int64_t>(v)});
            ++i;
            ++j;
          }
        }
      }
      std::swap(row, scratch);
    }
  }
  return pivots.size();
}

std::size_t rank_over_rationals(std::vector<SparseRow> rows) {
  try {
    return integer_echelon_rank<Int64Ops>(rows);
  } catch (const Overflow&) {
    return integer_echelon_rank<MpzOps>(rows);
  }
}

std::size_t bareiss_rank(const std::vector<std::vector<std::int64_t>>& matrix) {
  if (matrix.empty()) return 0;
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix.front().size();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = static_cast<long>(matrix[i][j]);
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace monlab
