#include "tropical/extremality.hpp"

#include "tropical/minscc.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace tropical {

int TangentHypergraph::local_of(int original) const {
  auto it = std::lower_bound(node_of_local.begin(), node_of_local.end(),
                             original);
  if (it == node_of_local.end() || *it != original) return -1;
  return static_cast<int>(it - node_of_local.begin());
}

TangentHypergraph build_tangent_hypergraph(const Vector& g,
                                           const IneqSystem& s) {
  if (is_zero(g))
    throw std::invalid_argument("tangent hypergraph: zero vector");
  if (!satisfies(s, g))
    throw std::invalid_argument(
        "tangent hypergraph: vector violates the system");

  TangentHypergraph out;
  out.node_of_local = support(g);
  std::vector<int> local(g.dim(), -1);
  for (std::size_t i = 0; i < out.node_of_local.size(); ++i)
    local[out.node_of_local[i]] = static_cast<int>(i);

  std::vector<Hypergraph::Edge> edges;
  for (int k = 0; k < s.rows(); ++k) {
    Scalar lhs = tropical_dot(s.A.row(k), g);
    if (lhs.is_bottom()) continue;  // saturated at bottom or strict: no edge
    if (lhs != tropical_dot(s.B.row(k), g)) continue;
    Hypergraph::Edge e;
    for (int j : argmax_set(s.B.row(k), g)) e.tail.push_back(local[j]);
    for (int i : argmax_set(s.A.row(k), g)) e.head.push_back(local[i]);
    edges.push_back(std::move(e));
  }
  out.hypergraph =
      Hypergraph(static_cast<int>(out.node_of_local.size()), std::move(edges));
  return out;
}

bool is_extreme(const Vector& g, const IneqSystem& s) {
  return min_scc_count(build_tangent_hypergraph(g, s).hypergraph).nb == 1;
}

std::optional<int> extreme_type(const Vector& g, const IneqSystem& s) {
  TangentHypergraph t = build_tangent_hypergraph(g, s);
  MinSccResult r = min_scc_count(t.hypergraph);
  if (r.nb != 1) return std::nullopt;
  auto least = minimal_classes(r);
  return t.node_of_local[least.front().front()];
}

namespace {

/// Tangent constraints as (tail_mask, head_mask) bit pairs over the local
/// support coordinates, plus the enumeration of satisfying masks.
/// A {bottom,0}-vector x satisfies max over head <= max over tail exactly
/// when (x & head) != 0 implies (x & tail) != 0.
struct MaskEnumeration {
  int width;
  std::vector<std::uint32_t> elements;  // nonzero satisfying masks, ascending
};

MaskEnumeration enumerate_masks(const Vector& g, const IneqSystem& s,
                                int cap) {
  TangentHypergraph t = build_tangent_hypergraph(g, s);
  const int w = static_cast<int>(t.node_of_local.size());
  if (w > cap || w > 25)
    throw std::invalid_argument("zero-one enumeration: support exceeds cap");

  std::vector<std::pair<std::uint32_t, std::uint32_t>> constraints;
  for (const auto& e : t.hypergraph.edges()) {
    std::uint32_t tail = 0, head = 0;
    for (int v : e.tail) tail |= std::uint32_t{1} << v;
    for (int v : e.head) head |= std::uint32_t{1} << v;
    constraints.emplace_back(tail, head);
  }

  MaskEnumeration out{w, {}};
  const std::uint32_t full = (w == 32) ? ~std::uint32_t{0}
                                       : ((std::uint32_t{1} << w) - 1);
  for (std::uint32_t x = 1; x <= full; ++x) {
    bool ok = true;
    for (const auto& [tail, head] : constraints) {
      if ((x & head) != 0 && (x & tail) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.elements.push_back(x);
  }
  return out;
}

Vector mask_to_vector(std::uint32_t mask, int width) {
  Vector v(width);
  for (int i = 0; i < width; ++i)
    if (mask & (std::uint32_t{1} << i)) v[i] = Scalar::one();
  return v;
}

}  // namespace

std::vector<Vector> zero_one_tangent_elements(const Vector& g,
                                              const IneqSystem& s, int cap) {
  MaskEnumeration e = enumerate_masks(g, s, cap);
  std::vector<Vector> out;
  out.reserve(e.elements.size());
  for (std::uint32_t m : e.elements) out.push_back(mask_to_vector(m, e.width));
  return out;
}

std::vector<int> extreme_type_witnesses(const Vector& g, const IneqSystem& s,
                                        int cap) {
  TangentHypergraph t = build_tangent_hypergraph(g, s);
  MaskEnumeration e = enumerate_masks(g, s, cap);
  std::vector<int> hits(e.width, 0);
  for (std::uint32_t m : e.elements)
    for (int i = 0; i < e.width; ++i)
      if (m & (std::uint32_t{1} << i)) ++hits[i];
  std::vector<int> out;
  for (int i = 0; i < e.width; ++i)
    if (hits[i] == 1) out.push_back(t.node_of_local[i]);
  return out;
}

bool is_extreme_oracle(const Vector& g, const IneqSystem& s, int cap) {
  return !extreme_type_witnesses(g, s, cap).empty();
}

std::vector<int> zero_propagation_closure(const Vector& g,
                                          const IneqSystem& s, int l,
                                          int cap) {
  TangentHypergraph t = build_tangent_hypergraph(g, s);
  int local = t.local_of(l);
  if (local < 0)
    throw std::invalid_argument(
        "zero_propagation_closure: index outside the support");
  MaskEnumeration e = enumerate_masks(g, s, cap);
  std::uint32_t forced = (e.width == 32) ? ~std::uint32_t{0}
                                         : ((std::uint32_t{1} << e.width) - 1);
  for (std::uint32_t m : e.elements)
    if ((m & (std::uint32_t{1} << local)) == 0) forced &= ~m;
  std::vector<int> out;
  for (int i = 0; i < e.width; ++i)
    if (forced & (std::uint32_t{1} << i)) out.push_back(t.node_of_local[i]);
  return out;
}

}  // namespace tropical
