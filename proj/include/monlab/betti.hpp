#pragma once

// Graded Betti numbers of squarefree monomial ideals via Hochster's formula:
//   beta_{i,sigma}(S/I) = dim H~_{|sigma|-i-1}(Delta|_sigma)
// where Delta is the Stanley-Reisner complex of I.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "monlab/complexes.hpp"
#include "monlab/core.hpp"

namespace monlab {

class BettiTable {
 public:
  enum class Subject { Ideal, Quotient };

  using Coarse = std::map<std::pair<int, int>, std::size_t>;  // (i, j) -> rank
  using Fine = std::map<std::pair<int, Mask>, std::size_t>;   // (i, sigma) -> rank

  BettiTable(Subject subject, Coarse entries, std::optional<Fine> fine = std::nullopt);

  Subject subject() const { return subject_; }
  const Coarse& entries() const { return entries_; }
  const std::optional<Fine>& fine() const { return fine_; }
  std::size_t at(int i, int j) const;
  bool empty() const { return entries_.empty(); }

  // max { j - i : beta_{i,j} != 0 }
  int regularity() const;
  // max { i : beta_{i,j} != 0 }
  int max_index() const;

  // Shifts between the table of I and the table of S/I:
  //   beta_{i,j}(I) = beta_{i+1,j}(S/I), beta_{0,0}(S/I) = 1.
  BettiTable to_quotient() const;
  BettiTable to_ideal() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  Subject subject_;
  Coarse entries_;
  std::optional<Fine> fine_;
};

struct BettiOptions {
  bool fine = false;
  // Only homological indices i <= max_index of the ideal's table are
  // computed. Negative means all.
  int max_index = -1;
};

// Betti table of the ideal I (subject Ideal). Throws InputError for the zero
// ideal.
BettiTable betti_table(const Ideal& ideal, const FieldSpec& field, BettiOptions options = {});

int regularity(const Ideal& ideal, const FieldSpec& field);
// Projective dimension of S/I.
int projective_dimension(const Ideal& ideal, const FieldSpec& field);

// Macaulay2-style grid: columns are i, rows are j - i, zeros print as '.'.
std::string format_betti_grid(const BettiTable& table);
nlohmann::json betti_to_json(const BettiTable& table);

}  // namespace monlab
