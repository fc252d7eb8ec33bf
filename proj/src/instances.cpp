#include "tropical/instances.hpp"

#include <random>
#include <stdexcept>

namespace tropical {

namespace {

// Bounded draws go through explicit arithmetic on the raw engine output so
// that a seed pins the same instance on every platform.
std::uint64_t next_u64(std::mt19937_64& rng) { return rng(); }

long uniform_long(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(next_u64(rng) %
                                static_cast<std::uint64_t>(hi - lo + 1));
}

bool bernoulli(std::mt19937_64& rng, double p) {
  return (next_u64(rng) >> 11) * 0x1.0p-53 < p;
}

const Scalar kBot = Scalar::bottom();

}  // namespace

GeneratorSet canonical_basis(int d) {
  GeneratorSet g(d);
  for (int i = 0; i < d; ++i) {
    Vector unit(d);
    unit[i] = Scalar::one();
    g.add(unit);
  }
  return g;
}

IneqSystem random_system(const RandomSpec& spec) {
  if (spec.d < 1 || spec.n < 0)
    throw std::invalid_argument("random_system: need d >= 1, n >= 0");
  if (!(spec.density > 0.0 && spec.density <= 1.0))
    throw std::invalid_argument("random_system: density must be in (0, 1]");
  if (spec.coeff_lo > spec.coeff_hi)
    throw std::invalid_argument("random_system: empty coefficient range");

  std::mt19937_64 rng(spec.seed);
  auto entry = [&]() {
    if (!bernoulli(rng, spec.density)) return kBot;
    return Scalar(uniform_long(rng, spec.coeff_lo, spec.coeff_hi));
  };

  Matrix a(spec.n, spec.d), b(spec.n, spec.d);
  for (int k = 0; k < spec.n; ++k) {
    for (;;) {
      bool left_nonzero = false, right_nonzero = false;
      for (int j = 0; j < spec.d; ++j) {
        a.at(k, j) = entry();
        left_nonzero = left_nonzero || !a.at(k, j).is_bottom();
      }
      for (int j = 0; j < spec.d; ++j) {
        b.at(k, j) = entry();
        right_nonzero = right_nonzero || !b.at(k, j).is_bottom();
      }
      if (right_nonzero || !left_nonzero) break;
    }
  }
  return IneqSystem(std::move(a), std::move(b));
}

Hypergraph random_hypergraph(int node_count, int edge_count, int max_tail,
                             int max_head, std::uint64_t seed) {
  if (node_count < 1 || edge_count < 0 || max_tail < 1 || max_head < 1)
    throw std::invalid_argument("random_hypergraph: bad bounds");
  std::mt19937_64 rng(seed);
  auto node_set = [&](int max_size) {
    int size = static_cast<int>(
        uniform_long(rng, 1, std::min<long>(max_size, node_count)));
    std::vector<int> out;
    while (static_cast<int>(out.size()) < size) {
      int v = static_cast<int>(uniform_long(rng, 0, node_count - 1));
      bool dup = false;
      for (int w : out) dup = dup || w == v;
      if (!dup) out.push_back(v);
    }
    return out;
  };
  std::vector<Hypergraph::Edge> edges;
  edges.reserve(edge_count);
  for (int e = 0; e < edge_count; ++e)
    edges.push_back({node_set(max_tail), node_set(max_head)});
  return Hypergraph(node_count, std::move(edges));
}

ConeFixture example_cone() {
  // x3 <= x1 + 2;  x1 <= max(x2, x3);  x1 <= x3 + 2;  x3 <= max(x1, x2 - 1)
  Matrix a(4, 3,
           {kBot, kBot, 0,    //
            0, kBot, kBot,    //
            0, kBot, kBot,    //
            kBot, kBot, 0});
  Matrix b(4, 3,
           {2, kBot, kBot,    //
            kBot, 0, 0,       //
            kBot, kBot, 2,    //
            0, -1, kBot});
  ConeFixture out{IneqSystem(std::move(a), std::move(b)), {}};
  out.rays = {
      normalize(Vector{kBot, 0, kBot}),
      normalize(Vector{-2, 1, 0}),
      normalize(Vector{2, 2, 0}),
      normalize(Vector{0, kBot, 0}),
  };
  return out;
}

HypergraphFixture example_hypergraph() {
  // u=0 v=1 w=2 x=3 y=4 t=5
  std::vector<Hypergraph::Edge> edges = {
      {{0}, {1}},        // u -> v
      {{1}, {2}},        // v -> w
      {{2}, {0}},        // w -> u
      {{1, 2}, {3, 4}},  // {v,w} -> {x,y}
      {{2, 4}, {5}},     // {w,y} -> t
  };
  return HypergraphFixture{Hypergraph(6, std::move(edges)),
                           {"u", "v", "w", "x", "y", "t"},
                           3,
                           {{3}, {4}, {5}}};
}

HypergraphFixture unmerged_pair_hypergraph() {
  // u=0 v=1 t=2 x=3 y=4; the SCCs {u,x} and {v,y} are not minimal, and
  // the visit never needs to merge them; only {t} is minimal.
  std::vector<Hypergraph::Edge> edges = {
      {{0}, {2}},     // u -> t
      {{1}, {2}},     // v -> t
      {{3}, {0}},     // x -> u
      {{4}, {1}},     // y -> v
      {{0, 2}, {3}},  // {u,t} -> x
      {{2, 1}, {4}},  // {t,v} -> y
  };
  return HypergraphFixture{Hypergraph(5, std::move(edges)),
                           {"u", "v", "t", "x", "y"},
                           1,
                           {{2}}};
}

IneqSystem signed_cyclic_system(int, int) {
  throw std::runtime_error(
      "signed cyclic cones are not generated; see Allamigeon, Gaubert & "
      "Katz (2009) for their construction");
}

}  // namespace tropical
