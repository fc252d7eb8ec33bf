#pragma once

#include "tropical/scalar.hpp"

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace tropical {

/// A fixed-length vector over the max-plus semiring (dimension >= 1).
class Vector {
 public:
  explicit Vector(int dim) : entries_(check_dim(dim)) {}
  Vector(std::initializer_list<Scalar> init)
      : entries_(init.begin(), init.end()) {
    check_dim(static_cast<int>(entries_.size()));
  }
  explicit Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {
    check_dim(static_cast<int>(entries_.size()));
  }

  int dim() const { return static_cast<int>(entries_.size()); }
  const Scalar& operator[](int i) const { return entries_[i]; }
  Scalar& operator[](int i) { return entries_[i]; }
  std::span<const Scalar> entries() const { return entries_; }

  bool operator==(const Vector&) const = default;

 private:
  static int check_dim(int d);
  std::vector<Scalar> entries_;
};

/// A dense n x d max-plus matrix, row-major; n may be 0.
class Matrix {
 public:
  Matrix(int rows, int cols);
  Matrix(int rows, int cols, std::vector<Scalar> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Scalar& at(int r, int c) const { return entries_[r * cols_ + c]; }
  Scalar& at(int r, int c) { return entries_[r * cols_ + c]; }
  std::span<const Scalar> row(int r) const {
    return {entries_.data() + static_cast<std::size_t>(r) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  Vector row_vector(int r) const;

  bool operator==(const Matrix&) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<Scalar> entries_;
};

/// Max-plus product of a row with a vector: max_i (row_i + x_i).
Scalar tropical_dot(std::span<const Scalar> row, const Vector& x);
inline Scalar tropical_dot(const Vector& row, const Vector& x) {
  return tropical_dot(row.entries(), x);
}

Vector mat_vec(const Matrix& m, const Vector& x);
Vector scalar_mul(const Scalar& lambda, const Vector& x);
Vector tadd(const Vector& x, const Vector& y);  // entrywise max

/// Indices attaining the row value; the full index set when the value is
/// bottom (a bottom-valued row constrains nothing).
std::vector<int> argmax_set(std::span<const Scalar> row, const Vector& g);
inline std::vector<int> argmax_set(const Vector& row, const Vector& g) {
  return argmax_set(row.entries(), g);
}

/// supp(x) = indices of non-bottom entries.
std::vector<int> support(const Vector& x);
bool is_zero(const Vector& x);

/// Scales x so its first non-bottom entry becomes 0. Throws on the zero
/// vector, which represents no ray.
Vector normalize(const Vector& x);

/// True iff y is a (non-bottom) scalar multiple of x; two zero vectors are
/// proportional.
bool proportional(const Vector& x, const Vector& y);

/// Lexicographic order with bottom smallest; used for canonical output.
std::strong_ordering compare(const Vector& x, const Vector& y);
inline bool lex_less(const Vector& x, const Vector& y) {
  return compare(x, y) == std::strong_ordering::less;
}

std::ostream& operator<<(std::ostream& os, const Vector& v);

}  // namespace tropical
