#pragma once

// Hand-rolled generators for property tests. Every generator is a pure
// function of the engine state so failures replay from the printed seed.

#include <random>

#include "ylm/verify.hpp"

namespace gen {

using Engine = std::mt19937_64;

inline long int_in(Engine& e, long lo, long hi) {
  return lo + static_cast<long>(e() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline ylm::Rational rational(Engine& e, long span = 12) {
  long num = int_in(e, -span, span);
  long den = int_in(e, 1, span);
  return ylm::make_rational(num, den);
}

inline ylm::Rational nonzero_rational(Engine& e, long span = 12) {
  ylm::Rational q;
  do q = rational(e, span);
  while (q == 0);
  return q;
}

/// Sum of up to `terms` radicals drawn from a small squarefree pool, times pi^(e/2).
inline ylm::Scalar scalar(Engine& e, int terms = 3, int pi_exponent = 0) {
  static const long pool[] = {1, 2, 3, 5, 6, 7, 10, 11, 15, 30};
  std::vector<ylm::RadicalSum::Term> ts;
  const long n = int_in(e, 0, terms);
  for (long i = 0; i < n; ++i) ts.push_back({ylm::Integer(pool[int_in(e, 0, 9)]), rational(e)});
  return ylm::Scalar(ylm::RadicalSum::from_terms(std::move(ts)), pi_exponent);
}

inline ylm::Scalar nonzero_scalar(Engine& e, int terms = 3, int pi_exponent = 0) {
  ylm::Scalar s;
  do s = scalar(e, terms, pi_exponent);
  while (s.is_zero());
  return s;
}

/// Dense polynomial with rational coefficients, degree <= max_degree.
inline ylm::Polynomial polynomial(Engine& e, int max_degree = 5) {
  std::vector<ylm::Scalar> cs;
  const long deg = int_in(e, -1, max_degree);
  for (long k = 0; k <= deg; ++k) cs.emplace_back(rational(e, 6));
  return ylm::Polynomial(std::move(cs));
}

inline ylm::ThetaForm theta_form(Engine& e, int max_degree = 5) { return {polynomial(e, max_degree), polynomial(e, max_degree)}; }

/// Arbitrary mode map; not necessarily smooth at the poles.
inline ylm::SphereFunction sphere_function(Engine& e, int max_m = 3, int max_degree = 4) {
  ylm::SphereFunction f;
  const long modes = int_in(e, 0, 3);
  for (long i = 0; i < modes; ++i) f.accumulate(static_cast<int>(int_in(e, -max_m, max_m)), theta_form(e, max_degree));
  return f;
}

}  // namespace gen
