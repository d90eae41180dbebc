#pragma once

// Exhaustive verification campaigns over pure-degree squarefree ideals.
//
// The degree-d squarefree monomials in n variables are indexed 0..C(n,d)-1 in
// canonical order; a nonzero subset index s in [1, 2^C(n,d)) selects the
// ideal generated by the monomials whose bits are set in s. Equal degrees make
// every such set a minimal generating set.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "monlab/complexes.hpp"
#include "monlab/core.hpp"

namespace monlab {

using SubsetIndex = std::uint64_t;

class PureIdealSpace {
 public:
  // Throws CapacityError when C(n,d) > 63.
  PureIdealSpace(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t monomial_count() const { return monomials_.size(); }
  const std::vector<Mask>& monomials() const { return monomials_; }
  // 2^C(n,d) - 1
  SubsetIndex ideal_count() const { return (SubsetIndex{1} << monomials_.size()) - 1; }
  SubsetIndex end_index() const { return SubsetIndex{1} << monomials_.size(); }

  Ideal ideal_at(SubsetIndex index) const;
  SubsetIndex index_of(const Ideal& ideal) const;

 private:
  int n_;
  int d_;
  std::vector<Mask> monomials_;
};

// Calls visitor(index, ideal) for every index 1..2^C(n,d)-1 in order.
void enumerate_pure_ideals(int n, int d, const std::function<void(SubsetIndex, const Ideal&)>& visitor);

enum class SymmetryMode {
  Off,    // no isomorphism handling
  Dedup,  // count isomorphism classes and deduplicate the extremal list
  Skip,   // verify only the canonical representative of each class
};

SymmetryMode parse_symmetry(const std::string& text);
std::string to_string(SymmetryMode mode);

// Lexicographically least subset index over all n! variable permutations.
// Feasible for n <= 7.
class SymmetryCanon {
 public:
  explicit SymmetryCanon(const PureIdealSpace& space);
  SubsetIndex canonical(SubsetIndex index) const;

 private:
  std::size_t width_;
  std::vector<std::vector<std::uint8_t>> images_;  // per permutation: monomial index -> image index
};

struct VerifyOptions {
  unsigned jobs = 1;
  SubsetIndex chunk_size = 4096;
  std::string checkpoint_path;       // empty: no checkpointing
  std::size_t checkpoint_every = 16;  // chunks between checkpoint writes
  bool resume = false;               // continue from checkpoint_path
  SymmetryMode symmetry = SymmetryMode::Off;
  std::size_t extremal_limit = 32;   // stored extremal ideals; the count is exact
  // Stop after merging this many chunks (0 = run to the end). Leaves a
  // resumable checkpoint; used to exercise interruption.
  std::size_t stop_after_chunks = 0;
};

struct EnumerationSummary {
  int n = 0;
  int d = 0;
  std::string field;
  SymmetryMode symmetry = SymmetryMode::Off;
  std::uint64_t total_ideals = 0;
  std::uint64_t n2_count = 0;
  std::uint64_t skipped = 0;             // symmetry Skip only
  std::optional<std::uint64_t> n2_classes;  // symmetry Dedup / Skip
  int max_reg = -1;                      // -1 until an N2 ideal is seen
  std::uint64_t extremal_count = 0;
  std::vector<Ideal> extremal;           // first extremal_limit, index order
  std::vector<Ideal> violations;
  SubsetIndex cursor = 1;                // next index to process
  bool complete = false;
  std::chrono::duration<double> elapsed{};

  // Everything except elapsed; byte-identical for any job count and across
  // resumed runs.
  nlohmann::json to_json() const;
};

EnumerationSummary verify_range(int n, int d, const FieldSpec& field, const VerifyOptions& options = {});

// JSON-lines records: one per extremal and per violating ideal, then the
// summary.
void write_results_jsonl(const EnumerationSummary& summary, std::ostream& out);

struct RemarkExample {
  Ideal ideal;
  Monomial f;
  Monomial g;
};

// The 8-variable degree-4 ideal with a linear resolution whose truncation
// (I + (x1x2))_[4] is not N2.
RemarkExample remark_example();

struct GcdSweepReport {
  int n = 0;
  int d = 0;
  std::uint64_t ideals = 0;
  std::uint64_t n2_ideals = 0;
  std::uint64_t instances = 0;  // (I, f) pairs satisfying the hypotheses
  std::uint64_t witnessed = 0;
  std::vector<std::pair<Ideal, Monomial>> violations;

  nlohmann::json to_json() const;
};

GcdSweepReport gcd_lemma_sweep(int n, int d, const FieldSpec& field);

struct GoldenCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Fixed reference values: the d = 5 f/g table, the 8-variable example and
// its failures, the sharp examples, and linearity in d+1 variables.
std::vector<GoldenCheck> golden_suite();

nlohmann::json ideal_to_json(const Ideal& ideal);
Ideal ideal_from_json(int ambient, const nlohmann::json& gens);

}  // namespace monlab
