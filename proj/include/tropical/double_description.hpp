#pragma once

#include "tropical/cone.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <vector>

namespace tropical {

using BigInt = boost::multiprecision::cpp_int;

/// Per-step record of one inequality elimination.
struct EliminationStep {
  int row;        // original row index of the inequality eliminated
  int le_count;   // |G<=|
  int gt_count;   // |G>|
  int generated;  // combinations formed
  int kept;       // combinations that survived the extremality filter
  int result_size;
};

struct EliminationTrace {
  std::vector<EliminationStep> steps;
  /// Mean size of the generator sets after each elimination step.
  double mean_intermediate() const;
};

/// The candidate of the elimination theorem: (a h) g (+) (b g) h, for
/// a g <= b g and a h > b h. The result satisfies a x <= b x.
Vector combine(const Vector& g, const Vector& h, const Vector& a,
               const Vector& b);

enum class ExtremalityMethod { hypergraph, residuation };

/// Fired once per tested combination; candidate_pool holds every candidate
/// of the step (kept generators plus all combinations, deduplicated).
struct CandidateEvent {
  const Vector& candidate;
  const IneqSystem& system;  // processed rows plus the row being added
  const std::vector<Vector>& candidate_pool;
  bool kept;
};

struct DdOptions {
  ExtremalityMethod method = ExtremalityMethod::hypergraph;
  int jobs = 1;
  EliminationTrace* trace = nullptr;
  std::function<void(const CandidateEvent&)> observer;
};

/// One elimination step: generators of the cone cut by a x <= b x, given
/// the generators of the previous cone. full_system must be the system
/// whose cone the result generates (processed rows plus this one); the
/// extremality filter runs against it.
GeneratorSet intersect_halfspace(const GeneratorSet& g, const Vector& a,
                                 const Vector& b, const IneqSystem& full_system,
                                 const DdOptions& opts = {});

/// Extreme rays of the cone of s, one normalized representative per ray.
/// Rows are eliminated in the dynamic order picked by order_heuristic.
GeneratorSet compute_extreme(const IneqSystem& s);
GeneratorSet compute_extreme(const IneqSystem& s, const DdOptions& opts);

/// Baseline driver: identical induction, extremality decided by
/// residuation against the step's candidate pool.
GeneratorSet compute_extreme_residuation(const IneqSystem& s);

/// Index into `remaining` of the row minimizing |G<=| * |G>|, ties broken
/// by lowest original row index.
int order_heuristic(const IneqSystem& s, const std::vector<int>& remaining,
                    const GeneratorSet& g);

/// McMullen-type quantity U(n, d); requires n >= d >= 1.
BigInt upper_bound(long n, long d);

/// Bound on the extreme rays of a tropical cone with n inequalities in
/// dimension d: U(n + d, d - 1). Requires d >= 2.
BigInt tropical_ray_bound(long n, long d);

}  // namespace tropical
