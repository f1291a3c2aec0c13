#pragma once

// Exact functions on the sphere as finite Fourier sums
//
//   f(theta, phi) = sum_m e^{i m phi} (p_even(cos theta) + sin theta * p_odd(cos theta)).
//
// The (p_even, p_odd) pair is closed under sums, products, multiplication by
// cos/sin and d/dtheta, which is everything the ladder operators need.

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include "ylm/polynomial.hpp"

namespace ylm {

struct NonSmoothResult : std::domain_error {
  using std::domain_error::domain_error;
};

class ThetaForm {
 public:
  ThetaForm() = default;
  ThetaForm(Polynomial even, Polynomial odd) : even_(std::move(even)), odd_(std::move(odd)) {}
  static ThetaForm constant(Scalar c) { return {Polynomial::constant(std::move(c)), {}}; }
  static ThetaForm cos_theta() { return {Polynomial::monomial(Scalar::one(), 1), {}}; }
  static ThetaForm sin_theta() { return {{}, Polynomial::constant(Scalar::one())}; }
  /// sin^n(theta), n >= 0
  static ThetaForm sin_pow(int n);

  const Polynomial& even() const { return even_; }
  const Polynomial& odd() const { return odd_; }
  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }

  ThetaForm operator-() const { return {-even_, -odd_}; }
  ThetaForm& operator+=(const ThetaForm& o);
  ThetaForm& operator-=(const ThetaForm& o);
  ThetaForm& operator*=(const Scalar& s);
  friend ThetaForm operator+(ThetaForm a, const ThetaForm& b) { return a += b; }
  friend ThetaForm operator-(ThetaForm a, const ThetaForm& b) { return a -= b; }
  friend ThetaForm operator*(ThetaForm a, const Scalar& s) { return a *= s; }
  friend ThetaForm operator*(const Scalar& s, ThetaForm a) { return a *= s; }
  friend ThetaForm operator*(const ThetaForm& a, const ThetaForm& b);
  friend bool operator==(const ThetaForm& a, const ThetaForm& b) {
    return a.even_ == b.even_ && a.odd_ == b.odd_;
  }

  ThetaForm times_cos() const { return {even_.times_x(), odd_.times_x()}; }
  ThetaForm times_sin() const { return {odd_.times_one_minus_x2(), even_}; }

  double eval(double theta) const;

 private:
  Polynomial even_;
  Polynomial odd_;
};

/// d/dtheta: d[p(cos)] = -sin p', d[sin q(cos)] = cos q - (1 - x^2) q'.
ThetaForm theta_derivative(const ThetaForm& f);
/// f / sin(theta); throws NonSmoothResult unless p_even is divisible by 1 - x^2.
ThetaForm theta_div_sin(const ThetaForm& f);

class SphereFunction {
 public:
  using ModeMap = std::map<int, ThetaForm>;

  SphereFunction() = default;
  explicit SphereFunction(ModeMap modes);
  /// e^{i m phi} * form
  static SphereFunction single(int m, ThetaForm form);

  const ModeMap& modes() const { return modes_; }
  bool is_zero() const { return modes_.empty(); }
  /// Form at mode m (zero form when absent).
  ThetaForm mode(int m) const;

  SphereFunction operator-() const;
  SphereFunction& operator+=(const SphereFunction& o);
  SphereFunction& operator-=(const SphereFunction& o);
  SphereFunction& operator*=(const Scalar& s);
  friend SphereFunction operator+(SphereFunction a, const SphereFunction& b) { return a += b; }
  friend SphereFunction operator-(SphereFunction a, const SphereFunction& b) { return a -= b; }
  friend SphereFunction operator*(SphereFunction a, const Scalar& s) { return a *= s; }
  friend SphereFunction operator*(const Scalar& s, SphereFunction a) { return a *= s; }
  friend SphereFunction operator*(const SphereFunction& a, const SphereFunction& b);
  friend bool operator==(const SphereFunction& a, const SphereFunction& b) { return a.modes_ == b.modes_; }

  /// Adds form at mode m in place.
  void accumulate(int m, const ThetaForm& form);

  /// Mode m carries p_even = 0 for odd |m| and p_odd = 0 for even |m|.
  bool has_smooth_parity() const;

  std::string to_string() const;
  std::string to_latex() const;

 private:
  ModeMap modes_;
};

bool sphere_equal(const SphereFunction& f, const SphereFunction& g);
std::complex<double> sphere_eval(const SphereFunction& f, double theta, double phi);
/// Pullback under (theta, phi) -> (pi - theta, phi + pi).
SphereFunction parity_reflect(const SphereFunction& f);

/// Double-precision copy of a SphereFunction for repeated evaluation.
class NumericSphereFunction {
 public:
  explicit NumericSphereFunction(const SphereFunction& f);
  std::complex<double> operator()(double theta, double phi) const;
  /// theta-part of mode m at theta.
  double mode_value(std::size_t index, double theta) const;
  int mode_at(std::size_t index) const { return modes_[index].m; }
  std::size_t mode_count() const { return modes_.size(); }

 private:
  struct Mode {
    int m;
    std::vector<double> even;
    std::vector<double> odd;
  };
  std::vector<Mode> modes_;
};

}  // namespace ylm
