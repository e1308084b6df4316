#pragma once

#include "snc/numeric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace snc {

// Dense row-major matrix over an exact number type.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator-() const {
    Matrix r(*this);
    for (auto& x : r.data_) x = -x;
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  bool symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  // Principal submatrix on the given index set, in the given order.
  Matrix principal(const std::vector<std::size_t>& idx) const {
    Matrix p(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) p(a, b) = (*this)(idx[a], idx[b]);
    return p;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("matrix rows must have equal length");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product: dimension mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
IntVector multiply(const IntMatrix& m, const IntVector& x);
RatVector multiply(const RatMatrix& m, const RatVector& x);

// Fraction-free Bareiss elimination.
BigInt det_exact(const IntMatrix& m);
Rational det_exact(const RatMatrix& m);

// Unique solution of m x = b. Throws SingularMatrixError when det(m) = 0.
RatVector solve_rational(const RatMatrix& m, const RatVector& b);

std::size_t rank(const RatMatrix& m);

// Basis of {x : m x = 0}, one vector per free column of the reduced row echelon form.
std::vector<RatVector> nullspace(const RatMatrix& m);

struct SmithForm {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;

  std::size_t rank() const;
  // Diagonal entries s(i,i), i < min(rows, cols); nonnegative, each dividing the next nonzero one.
  std::vector<BigInt> diagonal() const;
};

// u * m * v == s with u, v unimodular. The product identity is re-checked before returning.
SmithForm smith_normal_form(const IntMatrix& m);

// Sylvester's criterion on leading principal minors. Throws DomainError if m is not symmetric.
bool is_negative_definite(const IntMatrix& m);

class TorsionGroup {
public:
  TorsionGroup() = default;
  explicit TorsionGroup(std::vector<BigInt> factors);

  // Invariant factors > 1 in divisibility order.
  const std::vector<BigInt>& factors() const { return factors_; }
  BigInt order() const;
  bool trivial() const { return factors_.empty(); }

  // "Z16+Z2" (largest first), "0" for the trivial group.
  std::string to_string() const;
  bool operator==(const TorsionGroup&) const = default;

private:
  std::vector<BigInt> factors_;
};

// Torsion of coker(m : Z^cols -> Z^rows).
TorsionGroup torsion_of_cokernel(const IntMatrix& m);

// Integer solutions of a x = b: particular + Z-span of kernel.
struct IntegerSolutions {
  IntVector particular;
  std::vector<IntVector> kernel;
};
std::optional<IntegerSolutions> solve_integer(const IntMatrix& a, const IntVector& b);

}  // namespace snc
