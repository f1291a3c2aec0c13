#include "ylm/operators.hpp"

namespace ylm {

namespace {

TrigLaurent none() { return {}; }

TrigLaurent constant(long v) { return {ThetaForm::constant(Scalar(v)), 0}; }

TrigLaurent cos_times(long v) { return {ThetaForm::cos_theta() * Scalar(v), 0}; }

TrigLaurent sin_times(long v) { return {ThetaForm::sin_theta() * Scalar(v), 0}; }

// -cot(theta) = -cos/sin
TrigLaurent minus_cot() { return {ThetaForm::cos_theta() * Scalar(-1L), 1}; }

// -(1/sin + sin) = -(2 - x^2)/sin
TrigLaurent minus_csc_plus_sin() {
  Polynomial p({Scalar(-2L), Scalar::zero(), Scalar(1L)});
  return {ThetaForm(p, {}), 1};
}

// -1/sin
TrigLaurent minus_csc() { return {ThetaForm::constant(Scalar(-1L)), 1}; }

int shift(Sign s) { return s == Sign::plus ? 1 : -1; }

}  // namespace

LadderOperator make_su2(Su2 which) {
  switch (which) {
    case Su2::plus:
      return {+1, constant(1), minus_cot(), none()};
    case Su2::minus:
      return {-1, constant(-1), minus_cot(), none()};
    case Su2::z:
      return {0, none(), constant(1), none()};
  }
  throw std::logic_error("unknown su(2) generator");
}

LadderOperator make_J(long l, Sign sign) { return {0, sin_times(shift(sign)), none(), cos_times(l)}; }

LadderOperator make_K(long d, Sign sign) {
  const long mult = sign == Sign::plus ? d : d - 1;
  return {shift(sign), cos_times(shift(sign)), minus_csc_plus_sin(), sin_times(-mult)};
}

LadderOperator make_I(long s, Sign sign) {
  const long mult = sign == Sign::plus ? s - 1 : s;
  return {shift(sign), cos_times(shift(sign)), minus_csc_plus_sin(), sin_times(mult)};
}

LadderOperator make_A(long l, MixedKind kind) {
  switch (kind) {
    case MixedKind::pp:
      return {+1, cos_times(1), minus_csc(), sin_times(-l)};
    case MixedKind::mm:
      return {-1, cos_times(-1), minus_csc(), sin_times(-l)};
    case MixedKind::mp:
      return {+1, cos_times(1), minus_csc(), sin_times(l)};
    case MixedKind::pm:
      return {-1, cos_times(-1), minus_csc(), sin_times(l)};
  }
  throw std::logic_error("unknown mixed operator kind");
}

LadderOperator OperatorFamily::make() const {
  switch (family) {
    case Family::L_plus: return make_su2(Su2::plus);
    case Family::L_minus: return make_su2(Su2::minus);
    case Family::L_z:
    case Family::K_z:
    case Family::I_z: return make_su2(Su2::z);
    case Family::J_plus: return make_J(parameter, Sign::plus);
    case Family::J_minus: return make_J(parameter, Sign::minus);
    case Family::K_plus: return make_K(parameter, Sign::plus);
    case Family::K_minus: return make_K(parameter, Sign::minus);
    case Family::I_plus: return make_I(parameter, Sign::plus);
    case Family::I_minus: return make_I(parameter, Sign::minus);
    case Family::A_pp: return make_A(parameter, MixedKind::pp);
    case Family::A_mm: return make_A(parameter, MixedKind::mm);
    case Family::A_mp: return make_A(parameter, MixedKind::mp);
    case Family::A_pm: return make_A(parameter, MixedKind::pm);
  }
  throw std::logic_error("unknown operator family");
}

std::string OperatorFamily::name() const {
  const std::string p = std::to_string(parameter);
  switch (family) {
    case Family::L_plus: return "L+";
    case Family::L_minus: return "L-";
    case Family::L_z: return "Lz";
    case Family::K_z: return "Kz";
    case Family::I_z: return "Iz";
    case Family::J_plus: return "J+(" + p + ")";
    case Family::J_minus: return "J-(" + p + ")";
    case Family::K_plus: return "K+^" + p;
    case Family::K_minus: return "K-^" + p;
    case Family::I_plus: return "I+^" + p;
    case Family::I_minus: return "I-^" + p;
    case Family::A_pp: return "A++(" + p + ")";
    case Family::A_mm: return "A--(" + p + ")";
    case Family::A_mp: return "A-+(" + p + ")";
    case Family::A_pm: return "A+-(" + p + ")";
  }
  return "?";
}

SphereFunction commutator(const LadderOperator& a, const LadderOperator& b, const SphereFunction& f) {
  return apply_operator(a, apply_operator(b, f)) - apply_operator(b, apply_operator(a, f));
}

SphereFunction casimir_su2(const SphereFunction& f) {
  const auto lz = make_su2(Su2::z);
  const auto lz_f = apply_operator(lz, f);
  return apply_operator(make_su2(Su2::plus), apply_operator(make_su2(Su2::minus), f)) +
         apply_operator(lz, lz_f) - lz_f;
}

SphereFunction casimir_u11_K(long d, const SphereFunction& f) {
  const auto kz = make_su2(Su2::z);
  const auto kz_f = apply_operator(kz, f);
  return apply_operator(make_K(d, Sign::plus), apply_operator(make_K(d, Sign::minus), f)) -
         Scalar(4L) * apply_operator(kz, kz_f) - Scalar(2 * (2 * d - 3)) * kz_f;
}

SphereFunction casimir_u11_I(long s, const SphereFunction& f) {
  const auto iz = make_su2(Su2::z);
  const auto iz_f = apply_operator(iz, f);
  return apply_operator(make_I(s, Sign::plus), apply_operator(make_I(s, Sign::minus), f)) -
         Scalar(4L) * apply_operator(iz, iz_f) + Scalar(2 * (2 * s + 1)) * iz_f;
}

SphereFunction shape_invariance_residual(long l, const SphereFunction& f) {
  return apply_operator(make_J(l + 1, Sign::minus), apply_operator(make_J(l + 1, Sign::plus), f)) -
         apply_operator(make_J(l, Sign::plus), apply_operator(make_J(l, Sign::minus), f)) -
         Scalar(2 * l + 1) * f;
}

SphereFunction shape_invariance_adjoint_residual(long l, const SphereFunction& f) {
  return apply_operator(make_J(l - 1, Sign::minus), apply_operator(make_J(l + 3, Sign::plus), f)) -
         apply_operator(make_J(l + 2, Sign::plus), apply_operator(make_J(l - 2, Sign::minus), f)) -
         Scalar(2 * l + 1) * f;
}

}  // namespace ylm
