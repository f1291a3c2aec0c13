#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gen.hpp"
#include "oracle.hpp"
#include "ylm/scalar.hpp"

using namespace ylm;

namespace {

Scalar rad(long p, long q, long r, int e = 0) { return Scalar(RadicalSum(make_rational(p, q), Integer(r)), e); }

}  // namespace

TEST_CASE("squarefree decomposition agrees with brute force") {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const auto [sq, fr] = squarefree_decompose(Integer(static_cast<unsigned long>(n)));
    const auto [bsq, bfr] = oracle::squarefree_brute(n);
    REQUIRE(sq == Integer(static_cast<unsigned long>(bsq)));
    REQUIRE(fr == Integer(static_cast<unsigned long>(bfr)));
  }
}

TEST_CASE("squarefree decomposition of large composite inputs") {
  // 2^3 * 3^5 * 7^2 * 999983 (prime)
  const Integer n = Integer(8) * 243 * 49 * 999983;
  const auto [sq, fr] = squarefree_decompose(n);
  CHECK(sq == Integer(2 * 9 * 7));
  CHECK(fr == Integer(2 * 3 * 999983));
  CHECK(sq * sq * fr == n);
}

TEST_CASE("factor bound is enforced") {
  // 101 * 103 leaves a cofactor above 10^2 after trial division to 10
  CHECK_THROWS_AS(squarefree_decompose(Integer(101 * 103), 10), FactorBoundExceeded);
  CHECK_NOTHROW(squarefree_decompose(Integer(101 * 103), 200));
  // a prime cofactor below bound^2 is accepted as squarefree
  CHECK(squarefree_decompose(Integer(97), 10).second == Integer(97));
  CHECK_THROWS_AS(squarefree_decompose(Integer(0)), NegativeRadicand);
}

TEST_CASE("scalar_sqrt canonical forms") {
  CHECK(scalar_sqrt(Rational(8)) == rad(2, 1, 2));
  CHECK(scalar_sqrt(make_rational(1, 3)) == rad(1, 3, 3));
  CHECK(scalar_sqrt(make_rational(2, 3)) == rad(1, 3, 6));
  CHECK(scalar_sqrt(make_rational(9, 4)) == Scalar(make_rational(3, 2)));
  CHECK(scalar_sqrt(Rational(0)).is_zero());
  CHECK_THROWS_AS(scalar_sqrt(Rational(-2)), NegativeRadicand);
}

TEST_CASE("radicand products use the gcd reduction") {
  // sqrt(6) sqrt(10) = 2 sqrt(15)
  CHECK(rad(1, 1, 6) * rad(1, 1, 10) == rad(2, 1, 15));
  CHECK(rad(1, 1, 3) * rad(1, 1, 3) == Scalar(3L));
  CHECK((rad(1, 2, 2) * rad(1, 1, 2)).body().is_rational());
}

TEST_CASE("pi exponents add under multiplication and must match under addition") {
  const Scalar a = rad(1, 2, 1, -1);
  CHECK((a * a).pi_exponent() == -2);
  CHECK((a * Scalar::pi_power(1)).pi_exponent() == 0);
  CHECK_THROWS_AS(a + Scalar(1L), PiExponentMismatch);
  // zero is exponent-neutral
  CHECK((a + Scalar::zero()) == a);
  CHECK((Scalar::zero() + a) == a);
  CHECK((a - a).pi_exponent() == 0);
}

TEST_CASE("inverse rationalizes multi-radical denominators") {
  const Scalar d = rad(1, 1, 1) + rad(1, 1, 2) + rad(1, 1, 3);
  const Scalar inv = d.inverse();
  CHECK(d * inv == Scalar::one());
  CHECK(inv.to_double() == doctest::Approx(1.0 / (1 + std::sqrt(2.0) + std::sqrt(3.0))).epsilon(1e-14));
  CHECK_THROWS_AS(Scalar::zero().inverse(), DivisionByZero);
  CHECK((rad(3, 1, 5, -1).inverse()).pi_exponent() == 1);
}

TEST_CASE("field axioms on random radical sums") {
  gen::Engine e(0x5eed);
  for (int trial = 0; trial < 300; ++trial) {
    CAPTURE(trial);
    const Scalar a = gen::scalar(e), b = gen::scalar(e), c = gen::scalar(e);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
    REQUIRE(std::abs((a * b).to_double() - a.to_double() * b.to_double()) <=
            1e-12 * (1 + std::abs(a.to_double() * b.to_double())));
    if (!b.is_zero()) {
      REQUIRE((a / b) * b == a);
    }
  }
}

TEST_CASE("inverse property with pi powers") {
  gen::Engine e(77);
  for (int trial = 0; trial < 100; ++trial) {
    const int pe = static_cast<int>(gen::int_in(e, -4, 4));
    const Scalar a = gen::nonzero_scalar(e, 4, pe);
    REQUIRE(a * a.inverse() == Scalar::one());
    REQUIRE(a.to_double() * a.inverse().to_double() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("to_double matches the defining value") {
  CHECK(rad(1, 2, 1, -1).to_double() == doctest::Approx(0.28209479177387814).epsilon(1e-15));
  CHECK(rad(-3, 7, 5, 2).to_double() == doctest::Approx(-3.0 / 7 * std::sqrt(5.0) * oracle::kPi).epsilon(1e-15));
}

TEST_CASE("text rendering") {
  CHECK(rad(1, 2, 1, -1).to_string() == "1/2·√1·π^(-1/2)");
  CHECK(rad(1, 2, 3, -1).to_string() == "√3/2·π^(-1/2)");
  CHECK(rad(-3, 4, 5).to_string() == "-3√5/4");
  CHECK(rad(2, 1, 1, 2).to_string() == "2·√1·π^(1)");
  CHECK((rad(1, 1, 1) - rad(1, 1, 2)).to_string() == "(1·√1 - √2)");
  CHECK(Scalar::zero().to_string() == "0");
  CHECK(rad(1, 2, 3, -1).to_latex() == "\\frac{1}{2}\\sqrt{3}\\,\\pi^{-1/2}");
}

TEST_CASE("free-function API mirrors the operators") {
  const Scalar a = rad(1, 3, 2), b = rad(2, 5, 3);
  CHECK(scalar_add(a, b) == a + b);
  CHECK(scalar_mul(a, b) == a * b);
  CHECK(scalar_is_zero(a - a));
  CHECK(scalar_to_float(a) == doctest::Approx(std::sqrt(2.0) / 3));
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(factorial(0) == 1);
}

TEST_CASE("make_rational canonicalizes") {
  CHECK(make_rational(6, -4) == make_rational(-3, 2));
  CHECK(make_rational(6, -4).get_den() == 2);
}
