#pragma once

// Exact matrix rank over Q and over prime fields.

#include <cstdint>
#include <utility>
#include <vector>

namespace monlab {

struct SparseEntry {
  std::uint32_t col;
  std::int64_t value;
};

// Entries sorted by column, no explicit zeros.
using SparseRow = std::vector<SparseEntry>;

// Rank over GF(p), p prime and below 2^31. Values are reduced mod p on entry.
std::size_t rank_mod_p(std::vector<SparseRow> rows, std::uint32_t p);

// Rank over Q by fraction-free row echelon on integer rows. Each incoming row
// is cleared against the stored pivots with integer combinations
// r <- (b/g) r - (a/g) p and then divided by its content. Runs in 64-bit
// arithmetic and restarts with GMP integers if a value would overflow.
std::size_t rank_over_rationals(std::vector<SparseRow> rows);

// Dense Bareiss elimination with GMP integers. Slower; kept as an independent
// route for cross-checking rank_over_rationals.
std::size_t bareiss_rank(const std::vector<std::vector<std::int64_t>>& matrix);

}  // namespace monlab
