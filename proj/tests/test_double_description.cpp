#include "tropical/double_description.hpp"

#include "tropical/extremality.hpp"
#include "tropical/instances.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace tropical;

namespace {

const Scalar kBot = Scalar::bottom();

// the halfspace x2 <= x3 + 5/2
const Vector kRowA{kBot, 0, kBot};
const Vector kRowB{kBot, kBot, Scalar::ratio(5, 2)};

IneqSystem five_row_system() {
  IneqSystem base = example_cone().system;
  Matrix a(5, 3), b(5, 3);
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 3; ++j) {
      a.at(k, j) = base.A.at(k, j);
      b.at(k, j) = base.B.at(k, j);
    }
  for (int j = 0; j < 3; ++j) {
    a.at(4, j) = kRowA[j];
    b.at(4, j) = kRowB[j];
  }
  return IneqSystem(std::move(a), std::move(b));
}

IneqSystem shuffled_rows(const IneqSystem& s, std::mt19937_64& rng) {
  std::vector<int> order(s.rows());
  for (int i = 0; i < s.rows(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  Matrix a(s.rows(), s.dim()), b(s.rows(), s.dim());
  for (int k = 0; k < s.rows(); ++k)
    for (int j = 0; j < s.dim(); ++j) {
      a.at(k, j) = s.A.at(order[k], j);
      b.at(k, j) = s.B.at(order[k], j);
    }
  return IneqSystem(std::move(a), std::move(b));
}

}  // namespace

TEST_CASE("combine reproduces the three candidates of the halfspace step") {
  Vector g0{kBot, 0, kBot};
  CHECK(combine(Vector{-2, 1, 0}, g0, kRowA, kRowB) ==
        Vector{-2, Scalar::ratio(5, 2), 0});
  CHECK(combine(Vector{2, 2, 0}, g0, kRowA, kRowB) ==
        Vector{2, Scalar::ratio(5, 2), 0});
  CHECK(combine(Vector{0, kBot, 0}, g0, kRowA, kRowB) ==
        Vector{0, Scalar::ratio(5, 2), 0});
  // wrong sides
  CHECK_THROWS_AS(combine(g0, Vector{2, 2, 0}, kRowA, kRowB),
                  std::invalid_argument);
}

TEST_CASE("combine output satisfies the halfspace") {
  std::mt19937_64 rng(101);
  for (int iter = 0; iter < 200; ++iter) {
    int d = 2 + static_cast<int>(rng() % 4);
    auto vec = [&](bool allow_bot) {
      std::vector<Scalar> e;
      for (int i = 0; i < d; ++i)
        e.push_back(allow_bot && rng() % 3 == 0
                        ? kBot
                        : Scalar(static_cast<long>(rng() % 9) - 4));
      return Vector{std::move(e)};
    };
    Vector a = vec(true), b = vec(true), g = vec(false), h = vec(false);
    Scalar ag = tropical_dot(a, g), bg = tropical_dot(b, g);
    Scalar ah = tropical_dot(a, h), bh = tropical_dot(b, h);
    if (!(ag <= bg && ah > bh)) continue;
    Vector c = combine(g, h, a, b);
    CHECK(tropical_dot(a, c) <= tropical_dot(b, c));
  }
}

TEST_CASE("intersect_halfspace keeps g1..g3 and only the first combination") {
  GeneratorSet g(3, example_cone().rays);
  GeneratorSet cut = intersect_halfspace(g, kRowA, kRowB, five_row_system());
  CHECK(cut.size() == 4);
  CHECK(cut.contains_ray(Vector{-2, 1, 0}));
  CHECK(cut.contains_ray(Vector{2, 2, 0}));
  CHECK(cut.contains_ray(Vector{0, kBot, 0}));
  CHECK(cut.contains_ray(Vector{-2, Scalar::ratio(5, 2), 0}));
  CHECK_FALSE(cut.contains_ray(Vector{kBot, 0, kBot}));
  CHECK_FALSE(cut.contains_ray(Vector{2, Scalar::ratio(5, 2), 0}));
  CHECK_FALSE(cut.contains_ray(Vector{0, Scalar::ratio(5, 2), 0}));

  // a halfspace satisfied by every generator changes nothing
  GeneratorSet same = intersect_halfspace(
      g, Vector{kBot, kBot, kBot}, Vector{0, kBot, kBot}, five_row_system());
  CHECK(same_ray_set(same, g));

  // a halfspace violated by every generator wipes the set
  GeneratorSet none =
      intersect_halfspace(GeneratorSet(3, {Vector{0, 0, 0}}), Vector{0, kBot, kBot},
                          Vector{kBot, kBot, kBot}, five_row_system());
  CHECK(none.empty());
}

TEST_CASE("compute_extreme on the running example") {
  ConeFixture fix = example_cone();
  GeneratorSet rays = compute_extreme(fix.system);
  CHECK(rays.size() == 4);
  for (const Vector& expected : fix.rays) CHECK(rays.contains_ray(expected));
}

TEST_CASE("compute_extreme base and degenerate cases") {
  Matrix za(0, 3), zb(0, 3);
  GeneratorSet rays = compute_extreme(IneqSystem(za, zb));
  CHECK(same_ray_set(rays, canonical_basis(3)));

  // x1 <= x2 and x2 <= x1: the diagonal ray
  Matrix a(2, 2, {0, kBot, kBot, 0});
  Matrix b(2, 2, {kBot, 0, 0, kBot});
  GeneratorSet diag = compute_extreme(IneqSystem(a, b));
  CHECK(diag.size() == 1);
  CHECK(diag.contains_ray(Vector{0, 0}));

  // forcing x1 to bottom: only the second unit survives
  Matrix fa(1, 2, {0, kBot});
  Matrix fb(1, 2, {kBot, kBot});
  GeneratorSet forced = compute_extreme(IneqSystem(fa, fb));
  CHECK(forced.size() == 1);
  CHECK(forced.contains_ray(Vector{kBot, 0}));
}

TEST_CASE("order_heuristic picks the cheapest row") {
  GeneratorSet g(3, example_cone().rays);
  // row 0: everyone satisfies it -> product 0
  IneqSystem s = example_cone().system;
  std::vector<int> all = {0, 1, 2, 3};
  int pick = order_heuristic(s, all, g);
  CHECK(s.rows() == 4);
  CHECK(pick == 0);

  // ties break toward the lowest original row index
  Matrix a(2, 3), b(2, 3);
  a.at(0, 0) = Scalar(0);
  b.at(0, 1) = Scalar(0);
  a.at(1, 1) = Scalar(0);
  b.at(1, 2) = Scalar(0);
  IneqSystem tied(std::move(a), std::move(b));
  std::vector<int> rows = {0, 1};
  CHECK(order_heuristic(tied, rows, canonical_basis(3)) == 0);
}

TEST_CASE("both methods agree on the running example") {
  ConeFixture fix = example_cone();
  GeneratorSet fast = compute_extreme(fix.system);
  GeneratorSet slow = compute_extreme_residuation(fix.system);
  CHECK(same_ray_set(fast, slow));
  CHECK(slow.size() == 4);
}

TEST_CASE("elimination-theorem candidates generate the cut cone") {
  std::mt19937_64 rng(103);
  for (int iter = 0; iter < 60; ++iter) {
    RandomSpec spec{2 + static_cast<int>(rng() % 3),
                    1 + static_cast<int>(rng() % 3),
                    0.7,
                    -4,
                    4,
                    rng()};
    IneqSystem sys = random_system(spec);
    GeneratorSet g = compute_extreme(sys);
    if (g.empty()) continue;

    std::vector<Scalar> ar, br;
    for (int i = 0; i < spec.d; ++i) {
      ar.push_back(rng() % 3 == 0 ? kBot
                                  : Scalar(static_cast<long>(rng() % 7) - 3));
      br.push_back(rng() % 3 == 0 ? kBot
                                  : Scalar(static_cast<long>(rng() % 7) - 3));
    }
    Vector a{std::move(ar)}, b{std::move(br)};

    std::vector<Vector> le, gt;
    for (const Vector& v : g.vectors())
      (tropical_dot(a, v) <= tropical_dot(b, v) ? le : gt).push_back(v);
    std::vector<Vector> candidates = le;
    for (const Vector& x : le)
      for (const Vector& h : gt) candidates.push_back(combine(x, h, a, b));
    if (candidates.empty()) continue;
    GeneratorSet candidate_set(spec.d);
    for (const Vector& c : candidates)
      if (!is_zero(c)) candidate_set.add(c);

    // every candidate satisfies the halfspace
    for (const Vector& c : candidate_set.vectors())
      CHECK(tropical_dot(a, c) <= tropical_dot(b, c));

    // sampled members of the old cone satisfying the halfspace stay inside
    for (int probe = 0; probe < 20; ++probe) {
      Vector x(spec.d);
      for (const Vector& v : g.vectors()) {
        if (rng() % 2) continue;
        x = tadd(x, scalar_mul(Scalar(static_cast<long>(rng() % 7) - 3), v));
      }
      if (tropical_dot(a, x) > tropical_dot(b, x)) continue;
      CHECK(member(candidate_set, x));
    }
  }
}

TEST_CASE("cross-validation of the two pipelines on random systems") {
  std::mt19937_64 rng(107);
  for (int iter = 0; iter < 40; ++iter) {
    RandomSpec spec{2 + static_cast<int>(rng() % 5),
                    static_cast<int>(rng() % 7),
                    0.6,
                    -5,
                    5,
                    rng()};
    IneqSystem sys = random_system(spec);
    GeneratorSet fast = compute_extreme(sys);
    GeneratorSet slow = compute_extreme_residuation(sys);
    CHECK(same_ray_set(fast, slow));

    // soundness: outputs satisfy the system and are extreme per the oracle
    for (const Vector& v : fast.vectors()) {
      CHECK(satisfies(sys, v));
      CHECK(is_extreme_oracle(v, sys));
    }

    // the bound on the number of rays
    CHECK(BigInt(fast.size()) <=
          tropical_ray_bound(sys.rows(), sys.dim()));

    // mutual inclusion of the generated cones
    for (const Vector& v : fast.vectors()) CHECK(member(slow, v));
    for (const Vector& v : slow.vectors()) CHECK(member(fast, v));
  }
}

TEST_CASE("observer sees three-way agreement on every candidate") {
  std::mt19937_64 rng(109);
  for (int iter = 0; iter < 15; ++iter) {
    RandomSpec spec{2 + static_cast<int>(rng() % 4),
                    1 + static_cast<int>(rng() % 5),
                    0.6,
                    -5,
                    5,
                    rng()};
    IneqSystem sys = random_system(spec);
    long seen = 0;
    DdOptions opts;
    opts.observer = [&](const CandidateEvent& ev) {
      ++seen;
      CHECK(ev.kept == is_extreme(ev.candidate, ev.system));
      CHECK(ev.kept == is_extreme_oracle(ev.candidate, ev.system));
      CHECK(ev.kept == residuation_extreme(ev.candidate, ev.candidate_pool));
    };
    compute_extreme(sys, opts);
    if (spec.n > 0) CHECK(seen >= 0);
  }
}

TEST_CASE("output is normalized, non-proportional and order independent") {
  std::mt19937_64 rng(113);
  for (int iter = 0; iter < 25; ++iter) {
    RandomSpec spec{2 + static_cast<int>(rng() % 4),
                    2 + static_cast<int>(rng() % 5),
                    0.6,
                    -5,
                    5,
                    rng()};
    IneqSystem sys = random_system(spec);
    GeneratorSet base = compute_extreme(sys);
    for (const Vector& v : base.vectors()) CHECK(normalize(v) == v);
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i + 1; j < base.size(); ++j)
        CHECK_FALSE(proportional(base.vectors()[i], base.vectors()[j]));

    GeneratorSet again = compute_extreme(shuffled_rows(sys, rng));
    CHECK(same_ray_set(base, again));
  }
}

TEST_CASE("parallel extremality tests do not change the result") {
  std::mt19937_64 rng(127);
  for (int iter = 0; iter < 10; ++iter) {
    RandomSpec spec{3 + static_cast<int>(rng() % 3),
                    3 + static_cast<int>(rng() % 4),
                    0.6,
                    -5,
                    5,
                    rng()};
    IneqSystem sys = random_system(spec);
    DdOptions parallel;
    parallel.jobs = 4;
    GeneratorSet a = compute_extreme(sys);
    GeneratorSet b = compute_extreme(sys, parallel);
    a.canonical_sort();
    b.canonical_sort();
    CHECK(a.vectors() == b.vectors());
  }
}

TEST_CASE("upper_bound") {
  CHECK(upper_bound(7, 2) == 7);
  CHECK(upper_bound(2, 2) == 2);
  CHECK(upper_bound(5, 5) == 2);
  CHECK(upper_bound(9, 2) == 9);
  CHECK(upper_bound(10, 4) == 35);  // C(8,6) + C(7,6)
  CHECK_THROWS_AS(upper_bound(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(upper_bound(0, 0), std::invalid_argument);
  CHECK(tropical_ray_bound(4, 3) == 7);
  CHECK_THROWS_AS(tropical_ray_bound(4, 1), std::invalid_argument);
}

TEST_CASE("elimination trace accounts for every step") {
  EliminationTrace trace;
  DdOptions opts;
  opts.trace = &trace;
  compute_extreme(five_row_system(), opts);
  CHECK(trace.steps.size() == 5);
  for (const auto& step : trace.steps) {
    CHECK(step.kept <= step.generated);
    CHECK(step.result_size >= 0);
  }
  CHECK(trace.mean_intermediate() > 0.0);
}
