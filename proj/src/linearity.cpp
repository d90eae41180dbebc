#include "monlab/linearity.hpp"

#include <algorithm>

#include "monlab/betti.hpp"
#include "monlab/error.hpp"

namespace monlab {

namespace {

int require_pure(const Ideal& ideal, const char* what) {
  if (ideal.is_zero()) throw InputError(std::string(what) + ": the zero ideal has no generator graph");
  const auto d = ideal.pure_degree();
  if (!d) throw InputError(std::string(what) + ": generators have mixed degrees");
  return *d;
}

}  // namespace

GenGraph::GenGraph(Ideal ideal) : ideal_(std::move(ideal)), degree_(require_pure(ideal_, "generator_graph")) {
  const std::size_t r = ideal_.size();
  adjacency_.assign(r * r, false);
  for (std::size_t u = 0; u < r; ++u) {
    for (std::size_t v = u + 1; v < r; ++v) {
      if (popcount(ideal_[u].mask() | ideal_[v].mask()) == degree_ + 1) {
        adjacency_[u * r + v] = adjacency_[v * r + u] = true;
      }
    }
  }
}

std::vector<std::size_t> GenGraph::neighbours(std::size_t u) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (adjacent(u, v)) out.push_back(v);
  }
  return out;
}

GenGraph generator_graph(const Ideal& ideal) { return GenGraph(ideal); }

bool InducedSubgraph::connected() const {
  if (vertices.size() <= 1) return true;
  // Union-find over positions in `vertices`.
  std::vector<std::size_t> parent(vertices.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto position = [&](std::size_t g) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), g) - vertices.begin());
  };
  std::size_t components = vertices.size();
  for (const auto& [a, b] : edges) {
    const auto ra = find(position(a)), rb = find(position(b));
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

InducedSubgraph lcm_induced_subgraph(const GenGraph& graph, std::size_t u, std::size_t v) {
  if (u >= graph.size() || v >= graph.size()) throw InputError("generator index out of range");
  const Mask l = graph.ideal()[u].mask() | graph.ideal()[v].mask();
  InducedSubgraph sub;
  for (std::size_t w = 0; w < graph.size(); ++w) {
    if ((graph.ideal()[w].mask() & ~l) == 0) sub.vertices.push_back(w);
  }
  for (std::size_t a = 0; a < sub.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < sub.vertices.size(); ++b) {
      if (graph.adjacent(sub.vertices[a], sub.vertices[b])) sub.edges.emplace_back(sub.vertices[a], sub.vertices[b]);
    }
  }
  return sub;
}

N2Verdict is_n2_graph(const Ideal& ideal) {
  require_pure(ideal, "is_n2_graph");
  const GenGraph graph(ideal);
  const std::size_t r = graph.size();
  const auto masks = ideal.masks();
  std::vector<std::vector<std::size_t>> adj(r);
  for (std::size_t u = 0; u < r; ++u) adj[u] = graph.neighbours(u);

  // Search from u inside the generators dividing lcm(u, v); same verdict as
  // union-find on the induced subgraph, with early exit once v is reached.
  std::vector<std::size_t> mark(r, 0), queue;
  std::size_t stamp = 0;
  for (std::size_t u = 0; u < r; ++u) {
    for (std::size_t v = u + 1; v < r; ++v) {
      const Mask l = masks[u] | masks[v];
      if (popcount(l) == graph.degree() + 1) continue;  // adjacent
      ++stamp;
      queue.assign(1, u);
      mark[u] = stamp;
      bool reached = false;
      for (std::size_t head = 0; head < queue.size() && !reached; ++head) {
        for (std::size_t w : adj[queue[head]]) {
          if (mark[w] == stamp || (masks[w] & ~l) != 0) continue;
          if (w == v) {
            reached = true;
            break;
          }
          mark[w] = stamp;
          queue.push_back(w);
        }
      }
      if (!reached) return {false, std::make_pair(ideal[u], ideal[v])};
    }
  }
  return {};
}

bool is_nk_betti(const Ideal& ideal, int k, const FieldSpec& field) {
  const int d = require_pure(ideal, "is_nk_betti");
  if (k < 1) throw InputError("N_k needs k >= 1");
  const auto table = betti_table(ideal, field, {.fine = false, .max_index = k - 1});
  for (const auto& [key, rank] : table.entries()) {
    if (key.first <= k - 1 && key.second != key.first + d) return false;
  }
  return true;
}

GcdWitness gcd_witness(const Ideal& ideal, const Monomial& f) {
  const int d = require_pure(ideal, "gcd_witness");
  if (f.ambient() != ideal.ambient()) throw InputError("gcd_witness: ambient mismatch");
  if (f.degree() < 2 || f.degree() > d) {
    throw PreconditionError("gcd_witness needs 2 <= deg f <= " + std::to_string(d));
  }
  const bool inside = std::all_of(ideal.generators().begin(), ideal.generators().end(),
                                  [&](const Monomial& g) { return divides(f, g); });
  if (inside) throw PreconditionError("gcd_witness needs I not contained in (f)");
  if (!is_n2(truncation(add_generator(ideal, f), d))) {
    throw PreconditionError("gcd_witness needs (I + (f))_[d] to satisfy N2");
  }
  for (const auto& f1 : ideal.generators()) {
    const Monomial g = gcd(f1, f);
    if (g.degree() != f.degree() - 1) continue;
    if (!is_n2(truncation(add_generator(ideal, g), d))) continue;
    if (!divides(g, f) || !divides(g, f1) || !ideal.contains(f1)) {
      throw InternalError("gcd_witness postcondition failed");
    }
    return {f1, g};
  }
  throw TheoremViolation("no gcd witness for I = " + describe(ideal) + ", f = " + format_monomial(f));
}

nlohmann::json witness_to_json(const std::pair<Monomial, Monomial>& pair) {
  return {{"u", format_monomial(pair.first)}, {"v", format_monomial(pair.second)}};
}

}  // namespace monlab
