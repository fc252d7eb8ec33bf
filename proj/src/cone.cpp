#include "tropical/cone.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tropical {

IneqSystem::IneqSystem(Matrix a, Matrix b) : A(std::move(a)), B(std::move(b)) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw std::invalid_argument("IneqSystem: A and B must have equal shapes");
}

GeneratorSet::GeneratorSet(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("GeneratorSet: dimension must be >= 1");
}

GeneratorSet::GeneratorSet(int dim, const std::vector<Vector>& vectors)
    : GeneratorSet(dim) {
  for (const Vector& v : vectors) add(v);
}

bool GeneratorSet::add(const Vector& v) {
  if (v.dim() != dim_)
    throw std::invalid_argument("GeneratorSet::add: dimension mismatch");
  Vector n = normalize(v);
  for (const Vector& g : vectors_)
    if (g == n) return false;
  vectors_.push_back(std::move(n));
  return true;
}

bool GeneratorSet::contains_ray(const Vector& v) const {
  if (is_zero(v)) return false;
  Vector n = normalize(v);
  return std::find(vectors_.begin(), vectors_.end(), n) != vectors_.end();
}

void GeneratorSet::canonical_sort() {
  std::sort(vectors_.begin(), vectors_.end(), lex_less);
}

bool same_ray_set(const GeneratorSet& a, const GeneratorSet& b) {
  if (a.dim() != b.dim() || a.size() != b.size()) return false;
  for (const Vector& v : a.vectors())
    if (!b.contains_ray(v)) return false;
  return true;
}

AffineSystem::AffineSystem(Matrix a, std::vector<Scalar> c_, Matrix b,
                           std::vector<Scalar> e_)
    : A(std::move(a)), c(std::move(c_)), B(std::move(b)), e(std::move(e_)) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw std::invalid_argument("AffineSystem: A and B must have equal shapes");
  if (static_cast<int>(c.size()) != A.rows() ||
      static_cast<int>(e.size()) != A.rows())
    throw std::invalid_argument(
        "AffineSystem: offsets must have one entry per row");
}

bool satisfies(const IneqSystem& s, const Vector& x) {
  if (s.dim() != x.dim())
    throw std::invalid_argument("satisfies: dimension mismatch");
  for (int k = 0; k < s.rows(); ++k)
    if (tropical_dot(s.A.row(k), x) > tropical_dot(s.B.row(k), x)) return false;
  return true;
}

bool satisfies(const AffineSystem& s, const Vector& x) {
  if (s.dim() != x.dim())
    throw std::invalid_argument("satisfies: dimension mismatch");
  for (int k = 0; k < s.rows(); ++k) {
    Scalar lhs = tadd(tropical_dot(s.A.row(k), x), s.c[k]);
    Scalar rhs = tadd(tropical_dot(s.B.row(k), x), s.e[k]);
    if (lhs > rhs) return false;
  }
  return true;
}

Scalar residual(const Vector& g, const Vector& x) {
  if (g.dim() != x.dim())
    throw std::invalid_argument("residual: dimension mismatch");
  if (is_zero(g)) throw std::invalid_argument("residual: zero generator");
  bool first = true;
  Scalar lambda;
  for (int i = 0; i < g.dim(); ++i) {
    if (g[i].is_bottom()) continue;
    if (x[i].is_bottom()) return Scalar::bottom();
    Scalar diff = finite_sub(x[i], g[i]);
    if (first || diff < lambda) lambda = diff;
    first = false;
  }
  return lambda;
}

Vector max_combination(const std::vector<Vector>& gens, const Vector& x) {
  Vector acc(x.dim());
  for (const Vector& g : gens) acc = tadd(acc, scalar_mul(residual(g, x), g));
  return acc;
}

bool member(const GeneratorSet& g, const Vector& x) {
  if (g.dim() != x.dim())
    throw std::invalid_argument("member: dimension mismatch");
  return max_combination(g.vectors(), x) == x;
}

bool residuation_extreme(const Vector& h, const std::vector<Vector>& hs) {
  if (is_zero(h))
    throw std::invalid_argument("residuation_extreme: zero vector");
  std::vector<Vector> others;
  others.reserve(hs.size());
  for (const Vector& g : hs)
    if (!proportional(g, h)) others.push_back(g);
  return max_combination(others, h) != h;
}

IneqSystem homogenize(const AffineSystem& s) {
  const int n = s.rows(), d = s.dim();
  Matrix a(n, d + 1), b(n, d + 1);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < d; ++j) {
      a.at(k, j) = s.A.at(k, j);
      b.at(k, j) = s.B.at(k, j);
    }
    a.at(k, d) = s.c[k];
    b.at(k, d) = s.e[k];
  }
  return IneqSystem(std::move(a), std::move(b));
}

DehomogenizeResult dehomogenize(const GeneratorSet& g) {
  if (g.dim() < 2)
    throw std::invalid_argument("dehomogenize: need dimension >= 2");
  const int d = g.dim() - 1;
  DehomogenizeResult out;
  for (const Vector& v : g.vectors()) {
    const Scalar& last = v[d];
    Vector scaled = last.is_bottom() ? v : scalar_mul(finite_neg(last), v);
    std::vector<Scalar> head(scaled.entries().begin(),
                             scaled.entries().end() - 1);
    Vector truncated{std::move(head)};
    (last.is_bottom() ? out.rays : out.points).push_back(std::move(truncated));
  }
  return out;
}

}  // namespace tropical
