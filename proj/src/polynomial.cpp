#include "ylm/polynomial.hpp"

#include <algorithm>

namespace ylm {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(Scalar c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::monomial(Scalar c, int k) {
  std::vector<Scalar> v(static_cast<std::size_t>(k) + 1);
  v[k] = std::move(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::one_minus_x2_pow(int n) {
  // binomial expansion: sum_k C(n,k) (-1)^k x^{2k}
  std::vector<Scalar> v(static_cast<std::size_t>(2 * n) + 1);
  Integer binom = 1;
  for (int k = 0; k <= n; ++k) {
    v[2 * k] = Scalar(Rational(k % 2 ? -binom : binom));
    binom = binom * (n - k) / (k + 1);
  }
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return Polynomial(std::move(v));
}

Polynomial Polynomial::times_x() const {
  if (is_zero()) return {};
  std::vector<Scalar> v;
  v.reserve(c_.size() + 1);
  v.emplace_back();
  v.insert(v.end(), c_.begin(), c_.end());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::times_one_minus_x2() const { return *this - times_x().times_x(); }

bool Polynomial::divide_one_minus_x2(Polynomial& quotient) const {
  if (is_zero()) {
    quotient = {};
    return true;
  }
  if (c_.size() < 3) return false;
  // p = (1 - x^2) q  <=>  -p = (x^2 - 1) q; synthetic division by the monic x^2 - 1.
  std::vector<Scalar> rem(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) rem[k] = -c_[k];
  std::vector<Scalar> q(c_.size() - 2);
  for (std::size_t k = c_.size() - 1; k >= 2; --k) {
    const Scalar lead = rem[k];
    q[k - 2] = lead;
    rem[k - 2] += lead;
    rem[k] = Scalar::zero();
  }
  if (!rem[0].is_zero() || !rem[1].is_zero()) return false;
  quotient = Polynomial(std::move(q));
  return true;
}

Polynomial Polynomial::reflect() const {
  Polynomial out = *this;
  for (std::size_t k = 1; k < out.c_.size(); k += 2) out.c_[k] = -out.c_[k];
  return out;
}

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

}  // namespace ylm
