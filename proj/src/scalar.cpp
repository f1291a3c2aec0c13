#include "ylm/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace ylm {

namespace {

Integer smallest_prime_factor(const Integer& n, std::uint64_t bound) {
  if (n % 2 == 0) return 2;
  Integer p = 3;
  while (p * p <= n) {
    if (p > bound) throw FactorBoundExceeded("radicand has no factor below the trial-division bound");
    if (n % p == 0) return p;
    p += 2;
  }
  return n;
}

std::string rational_text(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Rational terms keep an explicit √1; radical terms read p√r/q.
std::string term_text(const RadicalSum::Term& t) {
  if (t.radicand == 1) return rational_text(t.coeff) + "·√1";
  std::string s = t.coeff < 0 ? "-" : "";
  const Integer num = abs(t.coeff.get_num());
  if (num != 1) s += num.get_str();
  s += "√" + t.radicand.get_str();
  if (t.coeff.get_den() != 1) s += "/" + t.coeff.get_den().get_str();
  return s;
}

std::string term_latex(const RadicalSum::Term& t, bool leading) {
  std::string s;
  Rational q = t.coeff;
  if (q < 0) {
    s += "-";
    q = -q;
  } else if (!leading) {
    s += "+";
  }
  if (q.get_den() == 1) {
    if (q != 1 || t.radicand == 1) s += q.get_num().get_str();
  } else {
    s += "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
  }
  if (t.radicand != 1) s += "\\sqrt{" + t.radicand.get_str() + "}";
  return s;
}

std::string pi_suffix(int e) {
  if (e == 0) return "";
  if (e % 2 == 0) return "·π^(" + std::to_string(e / 2) + ")";
  return "·π^(" + std::to_string(e) + "/2)";
}

}  // namespace

std::pair<Integer, Integer> squarefree_decompose(const Integer& n, std::uint64_t bound) {
  if (n <= 0) throw NegativeRadicand("squarefree_decompose expects a positive integer");
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return {r, 1};
  }
  Integer rest = n;
  Integer square = 1;
  Integer free = 1;
  auto strip = [&](const Integer& p) {
    int count = 0;
    while (rest % p == 0) {
      rest /= p;
      ++count;
    }
    for (int i = 0; i < count / 2; ++i) square *= p;
    if (count % 2) free *= p;
  };
  strip(2);
  Integer p = 3;
  while (p * p <= rest) {
    if (p > bound) throw FactorBoundExceeded("squarefree decomposition exceeded trial-division bound");
    strip(p);
    p += 2;
  }
  // What is left is 1 or a prime.
  free *= rest;
  return {square, free};
}

// ---------------------------------------------------------------- RadicalSum

RadicalSum::RadicalSum(Rational q) {
  if (q != 0) terms_.push_back({1, std::move(q)});
}

RadicalSum::RadicalSum(Rational q, Integer squarefree_radicand) {
  if (q != 0) terms_.push_back({std::move(squarefree_radicand), std::move(q)});
}

RadicalSum RadicalSum::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.radicand < b.radicand; });
  RadicalSum out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().radicand == t.radicand) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (t.coeff != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

bool RadicalSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().radicand == 1);
}

Rational RadicalSum::rational_part() const {
  if (!terms_.empty() && terms_.front().radicand == 1) return terms_.front().coeff;
  return 0;
}

RadicalSum RadicalSum::operator-() const {
  RadicalSum out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->radicand < b->radicand)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->radicand < a->radicand) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({std::move(a->radicand), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& o) { return *this += -o; }

RadicalSum& RadicalSum::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= q;
  return *this;
}

RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_rational()) return a * b.rational_part();
  if (a.is_rational()) return b * a.rational_part();
  std::map<Integer, Rational> acc;
  Integer g, ra, rb;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      // sqrt(x)*sqrt(y) = g * sqrt((x/g)(y/g)); the product of the cofactors
      // stays squarefree because they are coprime.
      mpz_gcd(g.get_mpz_t(), x.radicand.get_mpz_t(), y.radicand.get_mpz_t());
      ra = x.radicand / g;
      rb = y.radicand / g;
      Rational c = x.coeff * y.coeff;
      c *= g;
      acc[ra * rb] += c;
    }
  }
  RadicalSum out;
  for (auto& [r, c] : acc)
    if (c != 0) out.terms_.push_back({r, std::move(c)});
  return out;
}

bool operator==(const RadicalSum& a, const RadicalSum& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].radicand != b.terms_[i].radicand || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  }
  return true;
}

double RadicalSum::to_double() const {
  double s = 0.0;
  for (const auto& t : terms_) s += t.coeff.get_d() * std::sqrt(t.radicand.get_d());
  return s;
}

// -------------------------------------------------------------------- Scalar

Scalar::Scalar(RadicalSum body, int pi_exponent) : body_(std::move(body)), pi_exponent_(pi_exponent) {
  normalize_zero();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.body_ = -out.body_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (pi_exponent_ != o.pi_exponent_) {
    throw PiExponentMismatch("cannot add scalars with pi exponents " + std::to_string(pi_exponent_) +
                             "/2 and " + std::to_string(o.pi_exponent_) + "/2");
  }
  body_ += o.body_;
  normalize_zero();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar& Scalar::operator*=(const Rational& q) {
  body_ *= q;
  normalize_zero();
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return Scalar(a.body_ * b.body_, a.pi_exponent_ + b.pi_exponent_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  const auto& ts = body_.terms();
  if (ts.size() == 1) {
    // 1/(q sqrt(r)) = sqrt(r)/(q r)
    Rational c = 1 / (ts.front().coeff * ts.front().radicand);
    return Scalar(RadicalSum(c, ts.front().radicand), -pi_exponent_);
  }
  // Pick a prime p dividing some radicand and write body = u + v sqrt(p).
  // body * (u - v sqrt(p)) = u^2 - p v^2 no longer involves p.
  Integer p = smallest_prime_factor(ts.back().radicand, kDefaultFactorBound);
  std::vector<RadicalSum::Term> conj;
  for (const auto& t : ts) {
    if (t.radicand % p == 0) conj.push_back({t.radicand, -t.coeff});
    else conj.push_back(t);
  }
  Scalar c(RadicalSum::from_terms(std::move(conj)), 0);
  Scalar reduced = Scalar(body_, 0) * c;
  Scalar out = c * reduced.inverse();
  out.pi_exponent_ = -pi_exponent_;
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.pi_exponent_ == b.pi_exponent_ && a.body_ == b.body_;
}

double Scalar::to_double() const {
  if (is_zero()) return 0.0;
  return body_.to_double() * std::pow(std::numbers::pi, 0.5 * pi_exponent_);
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  const auto& ts = body_.terms();
  std::string s;
  if (ts.size() == 1) {
    s = term_text(ts.front());
  } else {
    s = "(";
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (i == 0) {
        s += term_text(ts[i]);
      } else if (ts[i].coeff < 0) {
        s += " - " + term_text({ts[i].radicand, -ts[i].coeff});
      } else {
        s += " + " + term_text(ts[i]);
      }
    }
    s += ")";
  }
  return s + pi_suffix(pi_exponent_);
}

std::string Scalar::to_latex() const {
  if (is_zero()) return "0";
  const auto& ts = body_.terms();
  std::string s;
  if (ts.size() > 1) s += "\\left(";
  for (std::size_t i = 0; i < ts.size(); ++i) s += term_latex(ts[i], i == 0);
  if (ts.size() > 1) s += "\\right)";
  if (pi_exponent_ != 0) {
    s += "\\,\\pi^{";
    s += (pi_exponent_ % 2 == 0) ? std::to_string(pi_exponent_ / 2) : std::to_string(pi_exponent_) + "/2";
    s += "}";
  }
  return s;
}

// ----------------------------------------------------------------- free API

Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }

Scalar scalar_sqrt(const Rational& q, std::uint64_t bound) {
  if (q < 0) throw NegativeRadicand("square root of a negative rational");
  if (q == 0) return Scalar::zero();
  // sqrt(p/d) = sqrt(p d)/d
  Integer pd = q.get_num() * q.get_den();
  auto [square, free] = squarefree_decompose(pd, bound);
  Rational c(square, q.get_den());
  c.canonicalize();
  return Scalar(RadicalSum(c, free), 0);
}

bool scalar_is_zero(const Scalar& a) { return a.is_zero(); }
double scalar_to_float(const Scalar& a) { return a.to_double(); }

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace ylm
