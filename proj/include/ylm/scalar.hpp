#pragma once

// Exact real numbers of the form (sum_i q_i * sqrt(r_i)) * pi^(e/2).
//
// q_i are arbitrary-precision rationals, r_i are distinct squarefree positive
// integers (r = 1 is the rational part) and e is an integer. This is the
// coefficient field of every function in the library: spherical-harmonic
// normalizations live at e = -1, inner products of two harmonics at e = 0.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ylm {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::uint64_t kDefaultFactorBound = 1'000'000;

/// n/d in lowest terms.
inline Rational make_rational(long n, long d) {
  Rational q{Integer(n), Integer(d)};
  q.canonicalize();
  return q;
}

struct PiExponentMismatch : std::domain_error {
  using std::domain_error::domain_error;
};
struct NegativeRadicand : std::domain_error {
  using std::domain_error::domain_error;
};
struct FactorBoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

/// Split n > 0 into n = square^2 * squarefree by trial division up to `bound`.
/// Throws FactorBoundExceeded when a cofactor above bound^2 is left over.
std::pair<Integer, Integer> squarefree_decompose(const Integer& n,
                                                 std::uint64_t bound = kDefaultFactorBound);

/// Sum of rational multiples of square roots of distinct squarefree integers.
class RadicalSum {
 public:
  struct Term {
    Integer radicand;  // squarefree, >= 1
    Rational coeff;    // nonzero
  };

  RadicalSum() = default;
  explicit RadicalSum(Rational q);
  /// q * sqrt(r). r must already be squarefree.
  RadicalSum(Rational q, Integer squarefree_radicand);

  /// Builds from arbitrary (coefficient, radicand) pairs; radicands must be
  /// squarefree but may repeat. Zero coefficients are dropped.
  static RadicalSum from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Rational part (coefficient of sqrt(1)).
  Rational rational_part() const;

  RadicalSum operator-() const;
  RadicalSum& operator+=(const RadicalSum& o);
  RadicalSum& operator-=(const RadicalSum& o);
  RadicalSum& operator*=(const Rational& q);
  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
  friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
  friend RadicalSum operator*(RadicalSum a, const Rational& q) { return a *= q; }
  friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b);

  friend bool operator==(const RadicalSum& a, const RadicalSum& b);

  double to_double() const;

 private:
  std::vector<Term> terms_;  // sorted by radicand
};

/// body * pi^(pi_exponent / 2).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : body_(Rational(v)) {}  // NOLINT: integers promote freely
  Scalar(Rational q) : body_(std::move(q)) {}  // NOLINT
  Scalar(RadicalSum body, int pi_exponent);

  static Scalar zero() { return {}; }
  static Scalar one() { return Scalar(1L); }
  /// pi^(e/2).
  static Scalar pi_power(int e) { return Scalar(RadicalSum(Rational(1)), e); }

  const RadicalSum& body() const { return body_; }
  int pi_exponent() const { return pi_exponent_; }
  bool is_zero() const { return body_.is_zero(); }
  /// Single term q * sqrt(r) * pi^(e/2)?
  bool is_monomial() const { return body_.terms().size() == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const Rational& q);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator*(Scalar a, const Rational& q) { return a *= q; }
  friend Scalar operator*(const Rational& q, Scalar a) { return a *= q; }

  /// Multiplicative inverse; rationalizes the denominator one prime at a time.
  Scalar inverse() const;
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  friend bool operator==(const Scalar& a, const Scalar& b);

  double to_double() const;

  /// "p/q·√1·π^(e/2)" or "p√r/q·π^(e/2)"; sums print as "(t1 + t2)·π^(e/2)"; π part omitted at e = 0.
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void normalize_zero() {
    if (body_.is_zero()) pi_exponent_ = 0;
  }

  RadicalSum body_;
  int pi_exponent_ = 0;
};

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
/// sqrt(q) for q >= 0 as a single-term scalar; throws NegativeRadicand.
Scalar scalar_sqrt(const Rational& q, std::uint64_t bound = kDefaultFactorBound);
bool scalar_is_zero(const Scalar& a);
double scalar_to_float(const Scalar& a);

/// Exact n! for n >= 0.
Integer factorial(long n);

}  // namespace ylm
