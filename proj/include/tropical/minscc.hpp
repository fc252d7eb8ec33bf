#pragma once

#include "tropical/hypergraph.hpp"

#include <functional>
#include <vector>

namespace tropical {

/// Disjoint-set forest with union by rank and path compression. All sets
/// are singletons after construction.
class UnionFind {
 public:
  explicit UnionFind(int n);

  int size() const { return static_cast<int>(parent_.size()); }
  int find(int u);
  int find_no_compress(int u) const;

  /// Unites the classes of a and b and returns the surviving
  /// representative.
  int merge(int a, int b);

 private:
  void check(int u) const;
  std::vector<int> parent_;
  std::vector<unsigned char> rank_;
};

/// Outcome of the minimal-SCC computation. ismin entries are meaningful at
/// representative positions (values of find_label); the minimal SCCs are
/// exactly the classes whose representative has ismin set.
struct MinSccResult {
  int nb = 0;
  std::vector<int> find_label;
  std::vector<char> ismin;
};

/// Snapshot of the visit state, handed to test probes at visit
/// boundaries. References remain owned by the running algorithm.
struct MinSccInternals {
  int current_node;
  const std::vector<int>& index;
  const std::vector<int>& low;
  const std::vector<char>& ismin;
  const std::vector<char>& on_stack;
  const std::vector<char>& finished;
  const std::vector<int>& edge_root;   // -1 while unset
  const std::vector<int>& edge_count;  // c_e
  const std::vector<int>& stack;
  const UnionFind& uf;
};

struct MinSccProbe {
  std::function<void(const MinSccInternals&)> on_visit_enter;
  std::function<void(const MinSccInternals&)> on_visit_exit;
};

/// Counts and labels the minimal SCCs of a directed hypergraph in
/// O(size(H) * alpha(|N|)).
///
/// The visit runs Tarjan-style on the digraph generated by the simple
/// hyperedges of the current (quotient) hypergraph. Each non-simple
/// hyperedge carries a root r_e (first tail member visited) and a counter
/// c_e; when c_e reaches |T(e)| the edge is parked on the stack of the
/// root's representative. Discovering a root whose component is still
/// minimal merges the component into one node, drains the parked stacks of
/// the merged members into the local work stack, and resumes the visit
/// from the merged node while new edges keep appearing.
MinSccResult min_scc_count(const Hypergraph& h,
                           const MinSccProbe* probe = nullptr);

/// The digraph-only instrumented Tarjan variant. Requires every tail to be
/// a singleton; throws otherwise. Labels whole SCCs by their root.
MinSccResult min_scc_count_digraph(const Hypergraph& g,
                                   const MinSccProbe* probe = nullptr);

/// Groups nodes by find_label and keeps the classes flagged minimal,
/// sorted by smallest member.
std::vector<std::vector<int>> minimal_classes(const MinSccResult& r);

}  // namespace tropical
