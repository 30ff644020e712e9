#pragma once

#include <string>
#include <vector>

#include "qbn/weyl.hpp"

namespace qbn {

enum class EdgeKind { Up, Down };

/// Directed edge w -> w r_alpha in the quantum Bruhat graph.  Up edges are
/// Bruhat covers and carry no weight; Down edges satisfy
/// ell(w r_alpha) = ell(w) - <alpha^vee, 2 rho> + 1 and weigh alpha^vee.
struct QbgEdge {
  std::size_t source;  // index into the group enumeration
  std::size_t target;
  int root_index;
  EdgeKind kind;
};

/// A directed walk with its length and weight vector d (coroot coordinates).
struct QbgPath {
  std::vector<QbgEdge> edges;
  IntVec weight;

  std::size_t length() const { return edges.size(); }
};

class QuantumBruhatGraph {
 public:
  explicit QuantumBruhatGraph(const WeylGroup& wg);

  const WeylGroup& group() const { return wg_; }
  const std::vector<QbgEdge>& edges() const { return edges_; }
  const std::vector<std::vector<QbgEdge>>& adjacency() const { return adj_; }

  /// Shortest-path distance (edge count) from u to v.
  std::size_t distance(std::size_t u, std::size_t v) const;

  /// Canonical minimal path: lexicographically smallest (root index, kind)
  /// sequence among the shortest paths.
  QbgPath min_path(std::size_t u, std::size_t v) const;

  /// All minimal paths, capped by a path-count budget.
  std::vector<QbgPath> all_min_paths(std::size_t u, std::size_t v,
                                     std::size_t budget = 100'000) const;

  /// Weight of a minimal path from u to w_0 * v (quantum Chevalley-Monk
  /// minimal degree of sigma_u * sigma_v).
  IntVec min_quantum_monomial(std::size_t u, std::size_t v) const;

  std::string to_dot() const;
  std::string to_json() const;

 private:
  const WeylGroup& wg_;
  std::vector<QbgEdge> edges_;
  std::vector<std::vector<QbgEdge>> adj_;       // outgoing, sorted by (root, kind)
  std::vector<std::vector<QbgEdge>> radj_;      // incoming

  std::vector<std::size_t> dist_from(std::size_t u, bool reverse) const;
};

IntVec path_weight(const WeylGroup& wg, const std::vector<QbgEdge>& edges);
std::string monomial_str(const IntVec& d);

}  // namespace qbn
