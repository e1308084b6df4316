#include "snc/matrix.hpp"

#include <algorithm>

namespace snc {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntVector multiply(const IntMatrix& m, const IntVector& x) {
  if (m.cols() != x.size()) throw DomainError("matrix-vector product: dimension mismatch");
  IntVector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

RatVector multiply(const RatMatrix& m, const RatVector& x) {
  if (m.cols() != x.size()) throw DomainError("matrix-vector product: dimension mismatch");
  RatVector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

BigInt det_exact(const IntMatrix& m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign_flip = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign_flip = -sign_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign_flip * a(n - 1, n - 1);
}

Rational det_exact(const RatMatrix& m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(k, p);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(row, p);
    Rational inv = 1 / a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RatVector solve_rational(const RatMatrix& m, const RatVector& b) {
  if (!m.square()) throw DomainError("solve: matrix is not square");
  if (b.size() != m.rows()) throw DomainError("solve: right-hand side has wrong length");
  const std::size_t n = m.rows();
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots.back() >= n))
    throw SingularMatrixError("solve: singular matrix");
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  if (multiply(m, x) != b) throw Error("solve: back-substitution check failed");
  return x;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return rref(a).size();
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  RatMatrix a = m;
  auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s(i, i));
  return d;
}

namespace {

void add_row_multiple(IntMatrix& a, std::size_t dst, std::size_t src, const BigInt& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) += f * a(src, j);
}

void add_col_multiple(IntMatrix& a, std::size_t dst, std::size_t src, const BigInt& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) += f * a(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(c);

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      // Bring the smallest nonzero entry of the trailing block to (t, t).
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (a(i, j) != 0 && (pi == r || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == r) break;
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        BigInt q = a(i, t) / a(t, t);
        add_row_multiple(a, i, t, -q);
        add_row_multiple(u, i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        BigInt q = a(t, j) / a(t, t);
        add_col_multiple(a, j, t, -q);
        add_col_multiple(v, j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a(i, j) % a(t, t) != 0) {
            add_row_multiple(a, t, i, 1);
            add_row_multiple(u, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < r; ++j) u(t, j) = -u(t, j);
    }
  }

  if (u * m * v != a) throw Error("smith_normal_form: u*m*v != s");
  return SmithForm{std::move(u), std::move(a), std::move(v)};
}

bool is_negative_definite(const IntMatrix& m) {
  if (!m.symmetric()) throw DomainError("definiteness test needs a symmetric matrix");
  const std::size_t n = m.rows();
  // Bareiss without pivoting: after step k, a(k,k) is the (k+1)-th leading principal minor.
  IntMatrix a = -m;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return true;
}

TorsionGroup::TorsionGroup(std::vector<BigInt> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] <= 1) throw DomainError("torsion invariant factors must exceed 1");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw DomainError("torsion invariant factors must form a divisibility chain");
  }
}

BigInt TorsionGroup::order() const {
  BigInt o = 1;
  for (const auto& f : factors_) o *= f;
  return o;
}

std::string TorsionGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    if (!s.empty()) s += "+";
    s += "Z" + it->str();
  }
  return s;
}

TorsionGroup torsion_of_cokernel(const IntMatrix& m) {
  std::vector<BigInt> factors;
  for (const auto& d : smith_normal_form(m).diagonal())
    if (d > 1) factors.push_back(d);
  return TorsionGroup(std::move(factors));
}

std::optional<IntegerSolutions> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw DomainError("solve_integer: right-hand side has wrong length");
  SmithForm f = smith_normal_form(a);
  IntVector ub = multiply(f.u, b);
  const std::size_t k = f.rank();
  IntVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < k) {
      if (ub[i] % f.s(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / f.s(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  IntegerSolutions out;
  out.particular = multiply(f.v, y);
  for (std::size_t j = k; j < a.cols(); ++j) {
    IntVector col(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) col[i] = f.v(i, j);
    out.kernel.push_back(std::move(col));
  }
  return out;
}

}  // namespace snc
