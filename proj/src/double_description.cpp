#include "tropical/double_description.hpp"

#include "tropical/extremality.hpp"

#include <algorithm>
#include <cassert>
#include <future>
#include <stdexcept>
#include <utility>

namespace tropical {

double EliminationTrace::mean_intermediate() const {
  if (steps.empty()) return 0.0;
  double total = 0.0;
  for (const auto& s : steps) total += s.result_size;
  return total / static_cast<double>(steps.size());
}

Vector combine(const Vector& g, const Vector& h, const Vector& a,
               const Vector& b) {
  Scalar ag = tropical_dot(a, g), bg = tropical_dot(b, g);
  Scalar ah = tropical_dot(a, h), bh = tropical_dot(b, h);
  if (ag > bg)
    throw std::invalid_argument("combine: g must satisfy the halfspace");
  if (ah <= bh)
    throw std::invalid_argument("combine: h must violate the halfspace");
  return tadd(scalar_mul(ah, g), scalar_mul(bg, h));
}

namespace {

struct Split {
  std::vector<Vector> le, gt;
};

Split split_by_halfspace(const GeneratorSet& g, const Vector& a,
                         const Vector& b) {
  Split out;
  for (const Vector& v : g.vectors()) {
    if (tropical_dot(a, v) <= tropical_dot(b, v))
      out.le.push_back(v);
    else
      out.gt.push_back(v);
  }
  return out;
}

bool contains_proportional(const std::vector<Vector>& pool, const Vector& v) {
  for (const Vector& p : pool)
    if (p == v) return true;  // pool holds normalized vectors
  return false;
}

std::vector<Vector> combination_candidates(const Split& split, const Vector& a,
                                           const Vector& b, int* generated) {
  std::vector<Vector> combos;
  for (const Vector& g : split.le) {
    for (const Vector& h : split.gt) {
      if (generated) ++*generated;
      Vector c = normalize(combine(g, h, a, b));
      if (!contains_proportional(split.le, c) &&
          !contains_proportional(combos, c))
        combos.push_back(std::move(c));
    }
  }
  return combos;
}

GeneratorSet intersect_hypergraph(const GeneratorSet& g, const Vector& a,
                                  const Vector& b, const IneqSystem& full,
                                  const DdOptions& opts, EliminationStep* step) {
  Split split = split_by_halfspace(g, a, b);
  int generated = 0;
  std::vector<Vector> combos =
      combination_candidates(split, a, b, &generated);

  std::vector<char> verdict(combos.size(), 0);
  if (opts.jobs > 1 && combos.size() > 1) {
    const int jobs = std::min<int>(opts.jobs, static_cast<int>(combos.size()));
    std::vector<std::future<void>> workers;
    std::size_t chunk = (combos.size() + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      std::size_t lo = j * chunk, hi = std::min(combos.size(), lo + chunk);
      if (lo >= hi) break;
      workers.push_back(std::async(std::launch::async, [&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i)
          verdict[i] = is_extreme(combos[i], full);
      }));
    }
    for (auto& w : workers) w.get();
  } else {
    for (std::size_t i = 0; i < combos.size(); ++i)
      verdict[i] = is_extreme(combos[i], full);
  }

  std::vector<Vector> pool;  // for observers: G<= plus every combination
  if (opts.observer) {
    pool = split.le;
    pool.insert(pool.end(), combos.begin(), combos.end());
  }

  GeneratorSet out(g.dim(), split.le);
  int kept = 0;
  for (std::size_t i = 0; i < combos.size(); ++i) {
    if (opts.observer)
      opts.observer(CandidateEvent{combos[i], full, pool, verdict[i] != 0});
    if (verdict[i]) {
      out.add(combos[i]);
      ++kept;
    }
  }
  if (step) {
    step->le_count = static_cast<int>(split.le.size());
    step->gt_count = static_cast<int>(split.gt.size());
    step->generated = generated;
    step->kept = kept;
    step->result_size = static_cast<int>(out.size());
  }
  return out;
}

GeneratorSet intersect_residuation(const GeneratorSet& g, const Vector& a,
                                   const Vector& b, const IneqSystem& full,
                                   const DdOptions& opts,
                                   EliminationStep* step) {
  Split split = split_by_halfspace(g, a, b);
  int generated = 0;
  std::vector<Vector> combos =
      combination_candidates(split, a, b, &generated);

  // The test set starts as G<= plus every combination and shrinks as
  // combinations are rejected; rejected elements are redundant, so the
  // represented cone never changes.
  std::vector<Vector> pool = split.le;
  pool.insert(pool.end(), combos.begin(), combos.end());
  const std::size_t first_combo = split.le.size();

  std::vector<char> kept_flag(pool.size(), 1);
  int kept = 0;
  for (std::size_t i = first_combo; i < pool.size(); ++i) {
    const Vector& h = pool[i];
    Vector reconstruction(h.dim());
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (j == i || !kept_flag[j] || proportional(pool[j], h)) continue;
      reconstruction =
          tadd(reconstruction, scalar_mul(residual(pool[j], h), pool[j]));
    }
    bool extreme = reconstruction != h;
    kept_flag[i] = extreme;
    if (opts.observer)
      opts.observer(CandidateEvent{pool[i], full, pool, extreme});
    if (extreme) ++kept;
  }

  GeneratorSet out(g.dim());
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (kept_flag[i]) out.add(pool[i]);
  if (step) {
    step->le_count = static_cast<int>(split.le.size());
    step->gt_count = static_cast<int>(split.gt.size());
    step->generated = generated;
    step->kept = kept;
    step->result_size = static_cast<int>(out.size());
  }
  return out;
}

}  // namespace

GeneratorSet intersect_halfspace(const GeneratorSet& g, const Vector& a,
                                 const Vector& b, const IneqSystem& full,
                                 const DdOptions& opts) {
  if (a.dim() != g.dim() || b.dim() != g.dim() || full.dim() != g.dim())
    throw std::invalid_argument("intersect_halfspace: dimension mismatch");
  return opts.method == ExtremalityMethod::hypergraph
             ? intersect_hypergraph(g, a, b, full, opts, nullptr)
             : intersect_residuation(g, a, b, full, opts, nullptr);
}

int order_heuristic(const IneqSystem& s, const std::vector<int>& remaining,
                    const GeneratorSet& g) {
  if (remaining.empty())
    throw std::invalid_argument("order_heuristic: no rows left");
  int best = -1;
  long best_product = 0;
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    int row = remaining[i];
    Vector a = s.A.row_vector(row), b = s.B.row_vector(row);
    long le = 0, gt = 0;
    for (const Vector& v : g.vectors())
      (tropical_dot(a, v) <= tropical_dot(b, v) ? le : gt) += 1;
    long product = le * gt;
    if (best < 0 || product < best_product ||
        (product == best_product && row < remaining[best]))
      best = static_cast<int>(i), best_product = product;
  }
  return best;
}

namespace {

IneqSystem select_rows(const IneqSystem& s, const std::vector<int>& rows) {
  Matrix a(static_cast<int>(rows.size()), s.dim());
  Matrix b(static_cast<int>(rows.size()), s.dim());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < s.dim(); ++j) {
      a.at(static_cast<int>(i), j) = s.A.at(rows[i], j);
      b.at(static_cast<int>(i), j) = s.B.at(rows[i], j);
    }
  }
  return IneqSystem(std::move(a), std::move(b));
}

}  // namespace

GeneratorSet compute_extreme(const IneqSystem& s, const DdOptions& opts) {
  GeneratorSet g(s.dim());
  for (int i = 0; i < s.dim(); ++i) {
    Vector unit(s.dim());
    unit[i] = Scalar::one();
    g.add(unit);
  }

  std::vector<int> remaining(s.rows());
  for (int k = 0; k < s.rows(); ++k) remaining[k] = k;
  std::vector<int> processed;

  while (!remaining.empty()) {
    int pick = order_heuristic(s, remaining, g);
    int row = remaining[pick];
    remaining.erase(remaining.begin() + pick);
    processed.push_back(row);

    IneqSystem prefix = select_rows(s, processed);
    EliminationStep step{};
    step.row = row;
    Vector a = s.A.row_vector(row), b = s.B.row_vector(row);
    g = opts.method == ExtremalityMethod::hypergraph
            ? intersect_hypergraph(g, a, b, prefix, opts, &step)
            : intersect_residuation(g, a, b, prefix, opts, &step);
    if (opts.trace) opts.trace->steps.push_back(step);
  }
  return g;
}

GeneratorSet compute_extreme(const IneqSystem& s) {
  return compute_extreme(s, DdOptions{});
}

GeneratorSet compute_extreme_residuation(const IneqSystem& s) {
  DdOptions opts;
  opts.method = ExtremalityMethod::residuation;
  return compute_extreme(s, opts);
}

BigInt upper_bound(long n, long d) {
  if (!(n >= d && d >= 1))
    throw std::invalid_argument("upper_bound: need n >= d >= 1");
  auto choose = [](long top, long bottom) -> BigInt {
    if (bottom < 0 || bottom > top) return 0;
    bottom = std::min(bottom, top - bottom);
    BigInt result = 1;
    for (long i = 1; i <= bottom; ++i) {
      result *= top - bottom + i;
      result /= i;
    }
    return result;
  };
  return choose(n - (d + 1) / 2, n - d) + choose(n - (d + 2) / 2, n - d);
}

BigInt tropical_ray_bound(long n, long d) {
  if (d < 2)
    throw std::invalid_argument("tropical_ray_bound: need dimension >= 2");
  if (n < 0) throw std::invalid_argument("tropical_ray_bound: need n >= 0");
  return upper_bound(n + d, d - 1);
}

}  // namespace tropical
