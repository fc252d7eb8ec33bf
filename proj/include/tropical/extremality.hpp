#pragma once

#include "tropical/cone.hpp"
#include "tropical/hypergraph.hpp"

#include <optional>
#include <vector>

namespace tropical {

/// The hypergraph attached to the tangent cone of the system at g, over
/// the support of g (local node i stands for original coordinate
/// node_of_local[i]). One hyperedge per saturated row with value > bottom:
/// tail = argmax of the B row at g, head = argmax of the A row at g.
/// Saturated bottom-valued rows are tautologies and produce no edge.
struct TangentHypergraph {
  Hypergraph hypergraph{0};
  std::vector<int> node_of_local;  // ascending original coordinates

  int local_of(int original) const;
};

TangentHypergraph build_tangent_hypergraph(const Vector& g,
                                           const IneqSystem& s);

/// Extremality of g in the cone of s: the tangent hypergraph has exactly
/// one minimal SCC. Requires g nonzero and satisfying the system.
bool is_extreme(const Vector& g, const IneqSystem& s);

/// An original coordinate t witnessing extremality (the smallest member of
/// the least SCC), or nullopt when g is not extreme.
std::optional<int> extreme_type(const Vector& g, const IneqSystem& s);

inline constexpr int kEnumerationCap = 20;

/// All nonzero {bottom, 0}-vectors over supp(g), in local coordinates,
/// satisfying every tangent constraint. Exhaustive; requires
/// |supp(g)| <= cap.
std::vector<Vector> zero_one_tangent_elements(const Vector& g,
                                              const IneqSystem& s,
                                              int cap = kEnumerationCap);

/// Enumeration-based extremality: true iff some coordinate t has the
/// all-zero-one vector as the unique tangent element with t-th entry 0.
bool is_extreme_oracle(const Vector& g, const IneqSystem& s,
                       int cap = kEnumerationCap);

/// All witnesses of is_extreme_oracle, as original coordinates (the valid
/// extremality types). Empty when not extreme.
std::vector<int> extreme_type_witnesses(const Vector& g, const IneqSystem& s,
                                        int cap = kEnumerationCap);

/// Original coordinates t forced to bottom by setting coordinate l (an
/// original index in supp(g)) to bottom across all enumerated tangent
/// elements. Equals reachable_set of the tangent hypergraph from l.
std::vector<int> zero_propagation_closure(const Vector& g,
                                          const IneqSystem& s, int l,
                                          int cap = kEnumerationCap);

}  // namespace tropical
