#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gen.hpp"
#include "oracle.hpp"
#include "ylm/harmonics.hpp"
#include "ylm/operators.hpp"

using namespace ylm;
using oracle::Field;

namespace {

constexpr double kFdTol = 1e-6;

Field numeric(const SphereFunction& f) {
  auto nf = std::make_shared<NumericSphereFunction>(f);
  return [nf](double t, double p) { return (*nf)(t, p); };
}

double coeff(double ratio, double product) { return product == 0 ? 0.0 : std::sqrt(ratio * product); }

/// op applied by finite differences to the oracle harmonic vs c * oracle target.
double ladder_gap(const Field& image, double c, int l_target, int m_target) {
  const Field target = oracle::harmonic(l_target, m_target);
  return oracle::distance(image, [&](double t, double p) { return c * target(t, p); });
}

}  // namespace

TEST_CASE("exact operators agree with their differential form") {
  const SphereFunction y = closed_form(3, 1) + closed_form(2, -2) * Scalar(make_rational(1, 3)) + closed_form(4, 0);
  const Field fy = numeric(y);
  CHECK(oracle::distance(numeric(apply_operator(make_su2(Su2::plus), y)), oracle::L_plus(fy)) < kFdTol);
  CHECK(oracle::distance(numeric(apply_operator(make_su2(Su2::minus), y)), oracle::L_minus(fy)) < kFdTol);
  CHECK(oracle::distance(numeric(apply_operator(make_su2(Su2::z), y)), oracle::L_z(fy)) < kFdTol);
  for (int l = -2; l <= 5; ++l) {
    CAPTURE(l);
    CHECK(oracle::distance(numeric(apply_operator(make_J(l, Sign::plus), y)), oracle::J(1, l, fy)) < kFdTol);
    CHECK(oracle::distance(numeric(apply_operator(make_J(l, Sign::minus), y)), oracle::J(-1, l, fy)) < kFdTol);
    CHECK(oracle::distance(numeric(apply_operator(make_A(l, MixedKind::pp), y)), oracle::A(1, true, l, fy)) < kFdTol);
    CHECK(oracle::distance(numeric(apply_operator(make_A(l, MixedKind::mm), y)), oracle::A(-1, true, l, fy)) < kFdTol);
    CHECK(oracle::distance(numeric(apply_operator(make_A(l, MixedKind::mp), y)), oracle::A(1, false, l, fy)) < kFdTol);
    CHECK(oracle::distance(numeric(apply_operator(make_A(l, MixedKind::pm), y)), oracle::A(-1, false, l, fy)) < kFdTol);
  }
  for (int d = -1; d <= 6; ++d) {
    CAPTURE(d);
    CHECK(oracle::distance(numeric(apply_operator(make_K(d, Sign::plus), y)), oracle::K(1, d, fy)) < kFdTol);
    CHECK(oracle::distance(numeric(apply_operator(make_K(d, Sign::minus), y)), oracle::K(-1, d, fy)) < kFdTol);
    CHECK(oracle::distance(numeric(apply_operator(make_I(d, Sign::plus), y)), oracle::I_op(1, d, fy)) < kFdTol);
    CHECK(oracle::distance(numeric(apply_operator(make_I(d, Sign::minus), y)), oracle::I_op(-1, d, fy)) < kFdTol);
  }
}

TEST_CASE("frozen ladder values against the finite-difference oracle") {
  // K+^1 Y_0^0 = sqrt(2/3) Y_1^1
  CHECK(ladder_gap(oracle::K(1, 1, oracle::harmonic(0, 0)), std::sqrt(2.0 / 3.0), 1, 1) < kFdTol);
  // J+(1) Y_0^0 = sqrt(1/3) Y_1^0
  CHECK(ladder_gap(oracle::J(1, 1, oracle::harmonic(0, 0)), std::sqrt(1.0 / 3.0), 1, 0) < kFdTol);
  // L+ Y_1^0 = sqrt(2) Y_1^1
  CHECK(ladder_gap(oracle::L_plus(oracle::harmonic(1, 0)), std::sqrt(2.0), 1, 1) < kFdTol);
  // I-^1 Y_0^0 = sqrt(1/3 * 1 * 2) Y_1^{-1}
  CHECK(ladder_gap(oracle::I_op(-1, 1, oracle::harmonic(0, 0)), std::sqrt(2.0 / 3.0), 1, -1) < kFdTol);
}

TEST_CASE("stated ladder coefficients hold numerically for every family") {
  for (int l = 1; l <= 5; ++l) {
    for (int m = -l; m <= l; ++m) {
      CAPTURE(l);
      CAPTURE(m);
      if (m > -l)
        CHECK(ladder_gap(oracle::L_plus(oracle::harmonic(l, m - 1)), coeff(1, (l - m + 1) * (l + m)), l, m) < kFdTol);
      if (l > std::abs(m))
        CHECK(ladder_gap(oracle::J(1, l, oracle::harmonic(l - 1, m)),
                         coeff((2.0 * l - 1) / (2 * l + 1), (l - m) * (l + m)), l, m) < kFdTol);
      if (std::abs(m - 1) <= l - 1) {
        CHECK(ladder_gap(oracle::A(1, true, l, oracle::harmonic(l - 1, m - 1)),
                         coeff((2.0 * l - 1) / (2 * l + 1), (l + m - 1) * (l + m)), l, m) < kFdTol);
        const int d = l - m + 1;
        CHECK(ladder_gap(oracle::K(1, d, oracle::harmonic(l - 1, m - 1)),
                         coeff((2.0 * m + 2 * d - 3) / (2 * m + 2 * d - 1), (2 * m + d - 2) * (2 * m + d - 1)), l, m) <
              kFdTol);
      }
      const int s = l + m + 1;
      CHECK(ladder_gap(oracle::I_op(1, s, oracle::harmonic(l + 1, m - 1)),
                       coeff((-2.0 * m + 2 * s + 1) / (-2 * m + 2 * s - 1), (-2 * m + s) * (-2 * m + s + 1)), l,
                       m) < kFdTol);
      CHECK(ladder_gap(oracle::A(1, false, l + 1, oracle::harmonic(l + 1, m - 1)),
                       coeff((2.0 * l + 3) / (2 * l + 1), (l - m + 1) * (l - m + 2)), l, m) < kFdTol);
    }
  }
}

TEST_CASE("operator identities hold exactly on random smooth functions") {
  HarmonicCache cache;
  auto rng = seeded_rng(99, "operator-tests");
  const auto Lp = make_su2(Su2::plus), Lm = make_su2(Su2::minus), Lz = make_su2(Su2::z);
  for (int trial = 0; trial < 15; ++trial) {
    const SphereFunction f = random_smooth_function(rng, 5, cache);
    CAPTURE(f.to_string());
    REQUIRE((commutator(Lp, Lm, f) - Scalar(2L) * apply_operator(Lz, f)).is_zero());
    REQUIRE((commutator(Lz, Lp, f) - apply_operator(Lp, f)).is_zero());
    for (long l = -3; l <= 6; ++l) {
      REQUIRE(shape_invariance_residual(l, f).is_zero());
      REQUIRE(shape_invariance_adjoint_residual(l, f).is_zero());
    }
    for (long d = 1; d <= 5; ++d) {
      const auto kp = make_K(d, Sign::plus), km = make_K(d, Sign::minus);
      REQUIRE((commutator(kp, km, f) + Scalar(8L) * apply_operator(Lz, f) + Scalar(4 * d - 2) * f).is_zero());
      const auto ip = make_I(d, Sign::plus), im = make_I(d, Sign::minus);
      REQUIRE((commutator(ip, im, f) + Scalar(8L) * apply_operator(Lz, f) - Scalar(4 * d - 2) * f).is_zero());
    }
    REQUIRE((apply_operator(make_A(3, MixedKind::pp), f) - commutator(Lp, make_J(3, Sign::plus), f)).is_zero());
  }
}

TEST_CASE("Casimir operators are constant on their families") {
  for (long l = 0; l <= 5; ++l)
    for (long m = -l; m <= l; ++m) {
      const auto y = closed_form(l, m);
      REQUIRE(sphere_equal(casimir_su2(y), Scalar(l * (l + 1)) * y));
      const long d = l - m + 1, s = l + m + 1;
      REQUIRE(sphere_equal(casimir_u11_K(d, y), Scalar((d - 1) * (d - 2)) * y));
      REQUIRE(sphere_equal(casimir_u11_I(s, y), Scalar(s * (s + 1)) * y));
    }
}

TEST_CASE("the identities are not vacuous") {
  // a wrong constant must leave a nonzero residual
  const auto y = closed_form(2, 1);
  CHECK_FALSE((casimir_su2(y) - Scalar(5L) * y).is_zero());
  CHECK_FALSE(sphere_equal(apply_operator(make_K(2, Sign::plus), y), apply_operator(make_K(3, Sign::plus), y)));
  const auto Lp = make_su2(Su2::plus), Lm = make_su2(Su2::minus);
  CHECK_FALSE((commutator(Lp, Lm, y)).is_zero());
}

TEST_CASE("operators that leave the smooth algebra are refused") {
  // 1/sin d/dphi of a mode-0 constant is fine (zero), but the same operator on
  // an m = 1 even-slot constant produces 1/sin.
  const LadderOperator inv_sin{0, {}, {ThetaForm::constant(Scalar::one()), 1}, {}};
  CHECK(apply_operator(inv_sin, SphereFunction::single(0, ThetaForm::constant(Scalar::one()))).is_zero());
  CHECK_THROWS_AS(apply_operator(inv_sin, SphereFunction::single(1, ThetaForm::constant(Scalar::one()))),
                  NonSmoothResult);
}

TEST_CASE("operator family names and factories") {
  CHECK(OperatorFamily{Family::K_plus, 3}.name() == "K+^3");
  CHECK(OperatorFamily{Family::L_z}.make().delta_m == 0);
  CHECK(OperatorFamily{Family::I_minus, 2}.make().delta_m == -1);
  CHECK(OperatorFamily{Family::A_mp, 2}.make().delta_m == 1);
  CHECK(OperatorFamily{Family::A_pm, 2}.make().delta_m == -1);
}
