#include "tropical/minscc.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>

namespace tropical {

UnionFind::UnionFind(int n) : parent_(n), rank_(n, 0) {
  if (n < 0) throw std::invalid_argument("UnionFind: negative size");
  for (int i = 0; i < n; ++i) parent_[i] = i;
}

void UnionFind::check(int u) const {
  if (u < 0 || u >= size())
    throw std::out_of_range("UnionFind: node out of range");
}

int UnionFind::find(int u) {
  check(u);
  int root = u;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[u] != root) {
    int next = parent_[u];
    parent_[u] = root;
    u = next;
  }
  return root;
}

int UnionFind::find_no_compress(int u) const {
  check(u);
  while (parent_[u] != u) u = parent_[u];
  return u;
}

int UnionFind::merge(int a, int b) {
  int ra = find(a), rb = find(b);
  if (ra == rb) return ra;
  if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
  parent_[rb] = ra;
  if (rank_[ra] == rank_[rb]) ++rank_[ra];
  return ra;
}

namespace {

constexpr int kNil = -1;

/// Shared visit state. Incident lists are stored CSR-style and the parked
/// stacks F_u as intrusive lists over the edges, which is enough because a
/// hyperedge is parked at most once over a whole run.
struct HState {
  const Hypergraph& hg;
  UnionFind uf;
  std::vector<int> index, low;
  std::vector<char> ismin, on_stack, finished;
  std::vector<int> edge_root, edge_count;
  std::vector<int> parked_head;            // per node, head of F_u (edge id)
  std::vector<int> parked_next;            // per edge, next in its F_u
  std::vector<int> incident_offset;        // CSR offsets into incident_edges
  std::vector<int> incident_edges;
  std::vector<int> tail_offset, head_offset;  // edges flattened CSR-style
  std::vector<int> head_nodes;
  std::vector<int> stack;                  // S
  std::vector<int> local_f;                // arena shared by all frames
  int n = 0;
  int nb = 0;
#ifndef NDEBUG
  std::vector<int> park_pushes, local_pushes;  // per-edge counters
#endif

  explicit HState(const Hypergraph& h)
      : hg(h),
        uf(h.node_count()),
        index(h.node_count(), kNil),
        low(h.node_count(), kNil),
        ismin(h.node_count(), 0),
        on_stack(h.node_count(), 0),
        finished(h.node_count(), 0),
        edge_root(h.edge_count(), kNil),
        edge_count(h.edge_count(), 0),
        parked_head(h.node_count(), kNil),
        parked_next(h.edge_count(), kNil)
#ifndef NDEBUG
        ,
        park_pushes(h.edge_count(), 0),
        local_pushes(h.edge_count(), 0)
#endif
  {
    incident_offset.assign(h.node_count() + 1, 0);
    for (const auto& e : h.edges())
      for (int t : e.tail) ++incident_offset[t + 1];
    for (int v = 0; v < h.node_count(); ++v)
      incident_offset[v + 1] += incident_offset[v];
    incident_edges.resize(incident_offset.back());
    std::vector<int> cursor(incident_offset.begin(),
                            incident_offset.end() - 1);
    for (int e = 0; e < h.edge_count(); ++e)
      for (int t : h.edges()[e].tail) incident_edges[cursor[t]++] = e;

    tail_offset.assign(h.edge_count() + 1, 0);
    head_offset.assign(h.edge_count() + 1, 0);
    for (int e = 0; e < h.edge_count(); ++e) {
      tail_offset[e + 1] =
          tail_offset[e] + static_cast<int>(h.edges()[e].tail.size());
      head_offset[e + 1] =
          head_offset[e] + static_cast<int>(h.edges()[e].head.size());
    }
    head_nodes.reserve(head_offset.back());
    for (const auto& e : h.edges())
      head_nodes.insert(head_nodes.end(), e.head.begin(), e.head.end());
  }

  int tail_size(int e) const { return tail_offset[e + 1] - tail_offset[e]; }
  int head_size(int e) const { return head_offset[e + 1] - head_offset[e]; }

  void push_stack(int v) {
    assert(!finished[v]);
    assert(!on_stack[v]);
    stack.push_back(v);
    on_stack[v] = 1;
  }

  int pop_stack() {
    int v = stack.back();
    stack.pop_back();
    on_stack[v] = 0;
    return v;
  }

  void park(int rep, int e) {
#ifndef NDEBUG
    assert(++park_pushes[e] == 1);
#endif
    parked_next[e] = parked_head[rep];
    parked_head[rep] = e;
  }

  void push_local(int e) {
#ifndef NDEBUG
    assert(++local_pushes[e] == 1);
#endif
    local_f.push_back(e);
  }
};

/// One suspended HVisit activation. The frame's work stack F is the arena
/// segment starting at f_base; a frame only returns once its segment is
/// empty, so segments nest like the call stack itself.
struct HFrame {
  int u;                    // node the call was made on
  int rep;                  // U, tracks merges of this frame's class
  std::size_t f_base;
  int cur_edge = kNil;
  std::size_t head_pos = 0;
  int pending_head = kNil;  // head node awaiting the post-visit update
};

class HVisitRun {
 public:
  HVisitRun(HState& st, const MinSccProbe* probe) : st_(st), probe_(probe) {}

  void visit(int start) {
    frames_.clear();
    enter(start);
    while (!frames_.empty()) {
      HFrame& f = frames_.back();
      if (!drain(f)) continue;  // a child frame was entered
      root_check(f);
    }
  }

 private:
  MinSccInternals internals(int node) const {
    return MinSccInternals{node,          st_.index,      st_.low,
                           st_.ismin,     st_.on_stack,   st_.finished,
                           st_.edge_root, st_.edge_count, st_.stack,
                           st_.uf};
  }

  void enter(int u) {
    assert(st_.uf.find(u) == u);
    if (probe_ && probe_->on_visit_enter) probe_->on_visit_enter(internals(u));
    HFrame f;
    f.u = u;
    f.rep = u;
    f.f_base = st_.local_f.size();
    st_.index[u] = st_.n;
    st_.low[u] = st_.n;
    ++st_.n;
    st_.ismin[u] = 1;
    st_.push_stack(u);
    for (int i = st_.incident_offset[u]; i < st_.incident_offset[u + 1]; ++i) {
      const int e = st_.incident_edges[i];
      if (st_.tail_size(e) == 1) {
        st_.push_local(e);
      } else {
        if (st_.edge_root[e] == kNil) st_.edge_root[e] = u;
        int re = st_.uf.find(st_.edge_root[e]);
        if (st_.on_stack[re]) {
          ++st_.edge_count[e];
          assert(st_.edge_count[e] <= st_.tail_size(e));
          if (st_.edge_count[e] == st_.tail_size(e)) st_.park(re, e);
        }
      }
    }
    frames_.push_back(f);
  }

  /// Processes the frame's work stack. Returns false when a child visit
  /// was entered (the dispatcher must run it before resuming).
  bool drain(HFrame& f) {
    for (;;) {
      if (f.pending_head != kNil) {
        // Find is re-run after a child visit: the child may have merged
        // its class, and the stale representative would alias a dead node.
        int w = st_.uf.find(f.pending_head);
        f.pending_head = kNil;
        if (st_.finished[w]) {
          st_.ismin[f.rep] = 0;
        } else {
          st_.low[f.rep] = std::min(st_.low[f.rep], st_.low[w]);
          st_.ismin[f.rep] = st_.ismin[f.rep] && st_.ismin[w];
        }
      }
      if (f.cur_edge == kNil) {
        if (st_.local_f.size() == f.f_base) return true;
        f.cur_edge = st_.local_f.back();
        st_.local_f.pop_back();
        f.head_pos = 0;
      }
      if (f.head_pos >= static_cast<std::size_t>(st_.head_size(f.cur_edge))) {
        f.cur_edge = kNil;
        continue;
      }
      int w = st_.head_nodes[st_.head_offset[f.cur_edge] + f.head_pos++];
      f.pending_head = w;
      if (st_.index[st_.uf.find(w)] == kNil) {
        enter(w);
        return false;
      }
    }
  }

  void root_check(HFrame& f) {
    int& rep = f.rep;
    if (st_.low[rep] == st_.index[rep]) {
      if (st_.ismin[rep]) {
        const int i = st_.index[rep];
        drain_parked(rep);
        int v = st_.pop_stack();
        while (st_.index[v] > i) {
          drain_parked(v);
          rep = st_.uf.merge(rep, v);
          v = st_.pop_stack();
        }
        assert(st_.uf.find(v) == st_.uf.find(rep));
        // The merged node resumes the visit exactly as a fresh root of the
        // quotient hypergraph would: index and low restart at i.
        st_.index[rep] = i;
        st_.low[rep] = i;
        assert(st_.ismin[rep]);
        st_.push_stack(rep);
        assert(f.cur_edge == kNil && f.pending_head == kNil);
        if (st_.local_f.size() != f.f_base) return;  // resume the visit
        ++st_.nb;
      }
      int v;
      do {
        v = st_.pop_stack();
        st_.finished[v] = 1;
        // Propagate the class verdict so stale per-member flags cannot
        // leak into the result extraction.
        st_.ismin[v] = st_.ismin[rep];
      } while (st_.index[v] != st_.index[rep]);
    }
    if (probe_ && probe_->on_visit_exit) probe_->on_visit_exit(internals(f.u));
    frames_.pop_back();
  }

  void drain_parked(int v) {
    int e = st_.parked_head[v];
    st_.parked_head[v] = kNil;
    while (e != kNil) {
      st_.push_local(e);
      e = st_.parked_next[e];
    }
  }

  HState& st_;
  const MinSccProbe* probe_;
  std::vector<HFrame> frames_;
};

}  // namespace

MinSccResult min_scc_count(const Hypergraph& h, const MinSccProbe* probe) {
  HState st(h);
  HVisitRun run(st, probe);
  for (int u = 0; u < h.node_count(); ++u)
    if (st.index[u] == kNil) run.visit(u);

  MinSccResult out;
  out.nb = st.nb;
  out.find_label.resize(h.node_count());
  out.ismin.assign(h.node_count(), 0);
  [[maybe_unused]] int counted = 0;
  for (int u = 0; u < h.node_count(); ++u) {
    int rep = st.uf.find(u);
    out.find_label[u] = rep;
    out.ismin[rep] = st.ismin[rep];
    if (u == rep && st.ismin[rep]) ++counted;
  }
  assert(counted == st.nb);
  return out;
}

MinSccResult min_scc_count_digraph(const Hypergraph& g,
                                   const MinSccProbe* probe) {
  const int n = g.node_count();
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges()) {
    if (e.tail.size() != 1)
      throw std::invalid_argument(
          "min_scc_count_digraph: non-singleton tail");
    for (int w : e.head) adj[e.tail[0]].push_back(w);
  }

  std::vector<int> index(n, kNil), low(n, kNil), label(n, kNil);
  std::vector<char> ismin(n, 0), on_stack(n, 0), finished(n, 0);
  std::vector<int> stack;
  int counter = 0, nb = 0;
  UnionFind uf(n);  // only consulted by probes, never merged

  struct Frame {
    int u;
    std::size_t pos = 0;
    int pending = kNil;
  };
  std::vector<Frame> frames;

  auto internals = [&](int node) {
    static const std::vector<int> no_edges;
    return MinSccInternals{node,     index,    low,      ismin,
                           on_stack, finished, no_edges, no_edges,
                           stack,    uf};
  };

  auto enter = [&](int u) {
    if (probe && probe->on_visit_enter) probe->on_visit_enter(internals(u));
    index[u] = low[u] = counter++;
    ismin[u] = 1;
    stack.push_back(u);
    on_stack[u] = 1;
    frames.push_back({u, 0, kNil});
  };

  for (int start = 0; start < n; ++start) {
    if (index[start] != kNil) continue;
    enter(start);
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.pending != kNil) {
        int w = f.pending;
        f.pending = kNil;
        if (finished[w]) {
          ismin[f.u] = 0;
        } else {
          low[f.u] = std::min(low[f.u], low[w]);
          ismin[f.u] = ismin[f.u] && ismin[w];
        }
      }
      if (f.pos < adj[f.u].size()) {
        int w = adj[f.u][f.pos++];
        f.pending = w;
        if (index[w] == kNil) enter(w);
        continue;
      }
      if (low[f.u] == index[f.u]) {
        if (ismin[f.u]) ++nb;
        int v;
        do {
          v = stack.back();
          stack.pop_back();
          on_stack[v] = 0;
          finished[v] = 1;
          label[v] = f.u;
          ismin[v] = ismin[f.u];
        } while (v != f.u);
      }
      if (probe && probe->on_visit_exit) probe->on_visit_exit(internals(f.u));
      frames.pop_back();
    }
  }

  MinSccResult out;
  out.nb = nb;
  out.find_label = std::move(label);
  out.ismin = std::move(ismin);
  return out;
}

std::vector<std::vector<int>> minimal_classes(const MinSccResult& r) {
  std::map<int, std::vector<int>> groups;
  for (std::size_t u = 0; u < r.find_label.size(); ++u)
    groups[r.find_label[u]].push_back(static_cast<int>(u));
  std::vector<std::vector<int>> out;
  for (auto& [rep, members] : groups)
    if (r.ismin[rep]) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace tropical
