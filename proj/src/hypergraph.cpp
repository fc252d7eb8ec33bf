#include "tropical/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tropical {

namespace {

void canonicalize(std::vector<int>& nodes, int node_count, const char* what) {
  if (nodes.empty())
    throw std::invalid_argument(std::string("hyperedge with empty ") + what);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (nodes.front() < 0 || nodes.back() >= node_count)
    throw std::invalid_argument("hyperedge node out of range");
}

}  // namespace

Hypergraph::Hypergraph(int node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count < 0)
    throw std::invalid_argument("node count must be >= 0");
  for (Edge& e : edges_) {
    canonicalize(e.tail, node_count_, "tail");
    canonicalize(e.head, node_count_, "head");
  }
}

long hsize(const Hypergraph& h) {
  long total = h.node_count();
  for (const auto& e : h.edges())
    total += static_cast<long>(e.tail.size()) + static_cast<long>(e.head.size());
  return total;
}

std::vector<int> reachable_set(const Hypergraph& h, int u) {
  if (u < 0 || u >= h.node_count())
    throw std::invalid_argument("reachable_set: node out of range");
  std::vector<char> reached(h.node_count(), 0);
  reached[u] = 1;
  // Fire any edge whose remaining-tail counter hits zero; each firing can
  // enable more edges, so process newly reached nodes worklist-style.
  const auto& edges = h.edges();
  std::vector<int> missing(edges.size());
  std::vector<std::vector<int>> watching(h.node_count());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    missing[e] = static_cast<int>(edges[e].tail.size());
    for (int t : edges[e].tail) watching[t].push_back(static_cast<int>(e));
  }
  std::vector<int> work = {u};
  while (!work.empty()) {
    int v = work.back();
    work.pop_back();
    for (int e : watching[v]) {
      if (--missing[e] == 0) {
        for (int w : edges[e].head) {
          if (!reached[w]) {
            reached[w] = 1;
            work.push_back(w);
          }
        }
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < h.node_count(); ++v)
    if (reached[v]) out.push_back(v);
  return out;
}

Hypergraph sub_digraph(const Hypergraph& h) {
  std::vector<Hypergraph::Edge> out;
  for (const auto& e : h.edges()) {
    if (e.tail.size() != 1) continue;
    for (int w : e.head) out.push_back({{e.tail[0]}, {w}});
  }
  return Hypergraph(h.node_count(), std::move(out));
}

std::vector<std::vector<int>> SccAnalysis::minimal_classes() const {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (minimal[i]) out.push_back(classes[i]);
  return out;
}

SccAnalysis scc_oracle(const Hypergraph& h) {
  const int n = h.node_count();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v : reachable_set(h, u)) reach[u][v] = 1;

  SccAnalysis out;
  std::vector<int> cls(n, -1);
  for (int u = 0; u < n; ++u) {
    if (cls[u] != -1) continue;
    int id = static_cast<int>(out.classes.size());
    std::vector<int> members;
    bool minimal = true;
    for (int v = 0; v < n; ++v) {
      if (reach[u][v] && reach[v][u]) {
        cls[v] = id;
        members.push_back(v);
      }
    }
    for (int m : members)
      for (int v = 0; v < n; ++v)
        if (reach[m][v] && (!reach[u][v] || !reach[v][u])) minimal = false;
    out.classes.push_back(std::move(members));
    out.minimal.push_back(minimal);
  }
  return out;
}

}  // namespace tropical
