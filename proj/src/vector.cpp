#include "tropical/vector.hpp"

#include <ostream>
#include <stdexcept>

namespace tropical {

int Vector::check_dim(int d) {
  if (d < 1) throw std::invalid_argument("vector dimension must be >= 1");
  return d;
}

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 1)
    throw std::invalid_argument("matrix shape must be n >= 0, d >= 1");
}

Matrix::Matrix(int rows, int cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 1)
    throw std::invalid_argument("matrix shape must be n >= 0, d >= 1");
  if (entries_.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("matrix entry count does not match shape");
}

Vector Matrix::row_vector(int r) const {
  auto view = row(r);
  return Vector(std::vector<Scalar>(view.begin(), view.end()));
}

Scalar tropical_dot(std::span<const Scalar> row, const Vector& x) {
  if (static_cast<int>(row.size()) != x.dim())
    throw std::invalid_argument("tropical_dot: dimension mismatch");
  Scalar acc = Scalar::bottom();
  for (int i = 0; i < x.dim(); ++i) acc = tadd(acc, tmul(row[i], x[i]));
  return acc;
}

Vector mat_vec(const Matrix& m, const Vector& x) {
  if (m.cols() != x.dim())
    throw std::invalid_argument("mat_vec: dimension mismatch");
  if (m.rows() == 0)
    throw std::invalid_argument("mat_vec: empty matrix has no product vector");
  std::vector<Scalar> out;
  out.reserve(m.rows());
  for (int k = 0; k < m.rows(); ++k) out.push_back(tropical_dot(m.row(k), x));
  return Vector(std::move(out));
}

Vector scalar_mul(const Scalar& lambda, const Vector& x) {
  std::vector<Scalar> out;
  out.reserve(x.dim());
  for (int i = 0; i < x.dim(); ++i) out.push_back(tmul(lambda, x[i]));
  return Vector(std::move(out));
}

Vector tadd(const Vector& x, const Vector& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("tadd: dimension mismatch");
  std::vector<Scalar> out;
  out.reserve(x.dim());
  for (int i = 0; i < x.dim(); ++i) out.push_back(tadd(x[i], y[i]));
  return Vector(std::move(out));
}

std::vector<int> argmax_set(std::span<const Scalar> row, const Vector& g) {
  Scalar value = tropical_dot(row, g);
  std::vector<int> out;
  if (value.is_bottom()) {
    out.resize(g.dim());
    for (int i = 0; i < g.dim(); ++i) out[i] = i;
    return out;
  }
  for (int i = 0; i < g.dim(); ++i)
    if (tmul(row[i], g[i]) == value) out.push_back(i);
  return out;
}

std::vector<int> support(const Vector& x) {
  std::vector<int> out;
  for (int i = 0; i < x.dim(); ++i)
    if (!x[i].is_bottom()) out.push_back(i);
  return out;
}

bool is_zero(const Vector& x) {
  for (int i = 0; i < x.dim(); ++i)
    if (!x[i].is_bottom()) return false;
  return true;
}

Vector normalize(const Vector& x) {
  for (int i = 0; i < x.dim(); ++i) {
    if (!x[i].is_bottom()) return scalar_mul(finite_neg(x[i]), x);
  }
  throw std::invalid_argument("normalize: zero vector represents no ray");
}

bool proportional(const Vector& x, const Vector& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("proportional: dimension mismatch");
  bool xz = is_zero(x), yz = is_zero(y);
  if (xz || yz) return xz && yz;
  return normalize(x) == normalize(y);
}

std::strong_ordering compare(const Vector& x, const Vector& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("compare: dimension mismatch");
  for (int i = 0; i < x.dim(); ++i) {
    auto c = x[i] <=> y[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
  os << '(';
  for (int i = 0; i < v.dim(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  return os << ')';
}

}  // namespace tropical
