#pragma once

#include "snc/numeric.hpp"

#include <string>
#include <string_view>

namespace snc {

// a + b*e in Q(e), e^2 = e - 1 (so e = -zeta for a primitive cube root of unity zeta).
class QuadExt {
public:
  QuadExt() = default;
  QuadExt(int a) : a_(a) {}
  QuadExt(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadExt epsilon() { return QuadExt(0, 1); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  // (a + b e)(a + b e') with e' = 1 - e.
  Rational norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }
  QuadExt conjugate() const { return QuadExt(a_ + b_, -b_); }
  QuadExt inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(e)");
    Rational n = norm();
    QuadExt c = conjugate();
    return QuadExt(c.a_ / n, c.b_ / n);
  }

  QuadExt operator-() const { return QuadExt(-a_, -b_); }
  QuadExt& operator+=(const QuadExt& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& o) {
    Rational na = a_ * o.a_ - b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_ + b_ * o.b_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  // "1", "e", "1-e", "-2+3e", "1/2e".
  std::string to_string() const;

private:
  Rational a_;
  Rational b_;
};

}  // namespace snc
