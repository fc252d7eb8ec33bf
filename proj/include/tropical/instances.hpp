#pragma once

#include "tropical/cone.hpp"
#include "tropical/hypergraph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tropical {

/// Parameters of the seeded random inequality-system generator. Generation
/// is a pure function of these fields, so a seed pins the instance.
struct RandomSpec {
  int d = 3;
  int n = 3;
  double density = 1.0;  // probability that a coefficient is finite
  long coeff_lo = -10;
  long coeff_hi = 10;
  std::uint64_t seed = 0;
};

/// The tropical canonical basis: unit_i has 0 at i and bottom elsewhere.
GeneratorSet canonical_basis(int d);

/// Random A x <= B x system. Rows whose right side is all bottom while the
/// left side is not are resampled; they would force coordinates to bottom.
IneqSystem random_system(const RandomSpec& spec);

/// Random hypergraph with nonempty tails and heads of bounded size.
Hypergraph random_hypergraph(int node_count, int edge_count, int max_tail,
                             int max_head, std::uint64_t seed);

struct ConeFixture {
  IneqSystem system;
  std::vector<Vector> rays;  // expected extreme rays, normalized
};

struct HypergraphFixture {
  Hypergraph hypergraph;
  std::vector<std::string> labels;
  int nb;  // expected number of minimal SCCs
  std::vector<std::vector<int>> minimal;
};

/// The running example: a 4-inequality cone in dimension 3 with exactly
/// four extreme rays.
ConeFixture example_cone();

/// Six nodes, five edges, two of them non-simple; three minimal SCCs.
HypergraphFixture example_hypergraph();

/// Instance whose only least SCC is {t} while two other SCCs are never
/// merged by the fast algorithm.
HypergraphFixture unmerged_pair_hypergraph();

/// Signed cyclic cones are not generated here; calling this always throws
/// with a pointer to the literature.
IneqSystem signed_cyclic_system(int d, int n);

}  // namespace tropical
