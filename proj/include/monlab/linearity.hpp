#pragma once

// Linear presentation (property N2) of ideals generated in one degree d:
// the generator graph joins u and v when deg lcm(u, v) = d + 1, and I is N2
// iff for every pair u, v the subgraph on generators dividing lcm(u, v) is
// connected.

#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "monlab/complexes.hpp"
#include "monlab/core.hpp"

namespace monlab {

class GenGraph {
 public:
  // Throws InputError for the zero ideal or mixed generator degrees.
  explicit GenGraph(Ideal ideal);

  const Ideal& ideal() const { return ideal_; }
  int degree() const { return degree_; }
  std::size_t size() const { return ideal_.size(); }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u * size() + v]; }
  std::vector<std::size_t> neighbours(std::size_t u) const;

 private:
  Ideal ideal_;
  int degree_;
  std::vector<bool> adjacency_;  // row-major size() x size()
};

GenGraph generator_graph(const Ideal& ideal);

// The induced subgraph on generators dividing lcm(u, v).
struct InducedSubgraph {
  std::vector<std::size_t> vertices;  // generator indices, ascending
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // generator indices, u < v

  bool connected() const;
};

InducedSubgraph lcm_induced_subgraph(const GenGraph& graph, std::size_t u, std::size_t v);

struct N2Verdict {
  bool holds = true;
  // First pair (in canonical generator order) whose induced subgraph is
  // disconnected.
  std::optional<std::pair<Monomial, Monomial>> witness;

  explicit operator bool() const { return holds; }
};

N2Verdict is_n2_graph(const Ideal& ideal);
inline bool is_n2(const Ideal& ideal) { return is_n2_graph(ideal).holds; }

// beta_{i,j}(I) = 0 for all 0 <= i <= k-1 and j != i + d.
bool is_nk_betti(const Ideal& ideal, int k, const FieldSpec& field);

struct GcdWitness {
  Monomial f1;  // minimal generator of I
  Monomial g;   // gcd(f1, f), of degree deg f - 1
};

// For I pure of degree d and 2 <= deg f <= d with I not inside (f) and
// (I + (f))_[d] N2, the first generator f1 (canonical order) such that
// g = gcd(f1, f) has degree deg f - 1 and (I + (g))_[d] is N2.
// Throws PreconditionError if a hypothesis fails and TheoremViolation if no
// generator works.
GcdWitness gcd_witness(const Ideal& ideal, const Monomial& f);

nlohmann::json witness_to_json(const std::pair<Monomial, Monomial>& pair);

}  // namespace monlab
