#pragma once

#include <vector>

#include "ylm/scalar.hpp"

namespace ylm {

/// Dense univariate polynomial in x = cos(theta) with Scalar coefficients.
/// Trailing zeros are always stripped; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);
  static Polynomial constant(Scalar c);
  /// c * x^k
  static Polynomial monomial(Scalar c, int k);
  /// (1 - x^2)^n
  static Polynomial one_minus_x2_pow(int n);

  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& operator[](std::size_t k) const { return c_[k]; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial derivative() const;
  Polynomial times_x() const;
  Polynomial times_one_minus_x2() const;
  /// Quotient by (1 - x^2); false when the remainder is nonzero.
  bool divide_one_minus_x2(Polynomial& quotient) const;
  /// p(-x)
  Polynomial reflect() const;

  double eval(double x) const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

}  // namespace ylm
