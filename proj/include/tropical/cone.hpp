#pragma once

#include "tropical/vector.hpp"

#include <vector>

namespace tropical {

/// H-representation of a tropical polyhedral cone: the solutions of
/// A x <= B x under the entrywise order.
struct IneqSystem {
  Matrix A;
  Matrix B;

  IneqSystem(Matrix a, Matrix b);
  int rows() const { return A.rows(); }
  int dim() const { return A.cols(); }

  bool operator==(const IneqSystem&) const = default;
};

/// V-representation: a set of normalized, pairwise non-proportional,
/// nonzero vectors of a common dimension.
class GeneratorSet {
 public:
  explicit GeneratorSet(int dim);
  GeneratorSet(int dim, const std::vector<Vector>& vectors);

  int dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<Vector>& vectors() const { return vectors_; }

  /// Normalizes v and inserts it unless a proportional element is already
  /// present. Returns true when inserted. Throws on the zero vector.
  bool add(const Vector& v);
  bool contains_ray(const Vector& v) const;

  /// Sorts generators in the canonical lexicographic order.
  void canonical_sort();

  bool operator==(const GeneratorSet&) const = default;

 private:
  int dim_;
  std::vector<Vector> vectors_;
};

/// Equality of the represented ray sets (order-insensitive).
bool same_ray_set(const GeneratorSet& a, const GeneratorSet& b);

/// A x (+) c <= B x (+) e; the offsets make the system affine. c and e
/// hold one scalar per row (possibly none).
struct AffineSystem {
  Matrix A;
  std::vector<Scalar> c;
  Matrix B;
  std::vector<Scalar> e;

  AffineSystem(Matrix a, std::vector<Scalar> c_, Matrix b,
               std::vector<Scalar> e_);
  int rows() const { return A.rows(); }
  int dim() const { return A.cols(); }

  bool operator==(const AffineSystem&) const = default;
};

/// Membership of x in the cone of S, checked row by row.
bool satisfies(const IneqSystem& s, const Vector& x);
bool satisfies(const AffineSystem& s, const Vector& x);

/// The greatest lambda with lambda (x) g <= x: min over supp(g) of
/// (x_i - g_i), bottom when the support of g is not covered by x.
Scalar residual(const Vector& g, const Vector& x);

/// The greatest sub-solution (+)_g residual(g, x) (x) g over the given
/// generators; equals x exactly when x lies in the generated cone.
Vector max_combination(const std::vector<Vector>& gens, const Vector& x);

bool member(const GeneratorSet& g, const Vector& x);

/// Residuation-based extremality test: h is extreme in the cone generated
/// by hs iff it is not the combination of the elements not proportional
/// to it.
bool residuation_extreme(const Vector& h, const std::vector<Vector>& hs);

/// Lifts an affine system to the cone [A | c] y <= [B | e] y in dimension
/// d + 1; a point x of the polyhedron corresponds to (x, 0).
IneqSystem homogenize(const AffineSystem& s);

struct DehomogenizeResult {
  std::vector<Vector> points;
  std::vector<Vector> rays;
};

/// Splits generators of a (d+1)-cone into extreme points (last coordinate
/// finite, rescaled so it becomes 0 and then dropped) and extreme rays
/// (last coordinate bottom, dropped).
DehomogenizeResult dehomogenize(const GeneratorSet& g);

}  // namespace tropical
