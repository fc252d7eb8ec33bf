#pragma once

#include <vector>

namespace tropical {

/// A directed hypergraph: nodes 0..node_count-1 and hyperedges (T, H) with
/// nonempty tail and head sets. Reachability fires an edge once its whole
/// tail has been reached.
class Hypergraph {
 public:
  struct Edge {
    std::vector<int> tail;  // sorted, unique, nonempty
    std::vector<int> head;  // sorted, unique, nonempty
    bool operator==(const Edge&) const = default;
  };

  Hypergraph(int node_count, std::vector<Edge> edges);
  explicit Hypergraph(int node_count) : Hypergraph(node_count, {}) {}

  int node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool operator==(const Hypergraph&) const = default;

 private:
  int node_count_;
  std::vector<Edge> edges_;
};

/// size(H) = |N| + sum over edges of (|T| + |H|).
long hsize(const Hypergraph& h);

/// Least fixpoint of hyperedge firing from u; sorted. This is the
/// linear-per-source traversal used as the reachability oracle.
std::vector<int> reachable_set(const Hypergraph& h, int u);

/// The digraph generated by the simple (singleton-tail) hyperedges: one
/// singleton-to-singleton edge per (simple edge, head member) pair.
Hypergraph sub_digraph(const Hypergraph& h);

/// SCC partition plus a per-class flag marking classes with no leaving
/// hyperedge. Classes are sorted by their smallest node.
struct SccAnalysis {
  std::vector<std::vector<int>> classes;
  std::vector<char> minimal;  // parallel to classes

  std::vector<std::vector<int>> minimal_classes() const;
};

/// Brute-force SCC analysis from all-pairs reachability; the ground truth
/// for the almost-linear algorithm. O(|N| * size(H)).
SccAnalysis scc_oracle(const Hypergraph& h);

}  // namespace tropical
