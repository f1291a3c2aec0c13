#pragma once

#include "ylm/sphere_function.hpp"

namespace ylm {

/// form / sin^sin_power, a Laurent coefficient in sin(theta).
struct TrigLaurent {
  ThetaForm form;
  int sin_power = 0;
};

/// First-order operator acting on one Fourier mode as
///
///   e^{i m phi} f(theta)  ->  e^{i (m + delta_m) phi} [a f' + m b f + c f].
///
/// A term i*beta(theta)*d/dphi is encoded as b = -beta, so every operator in
/// the library has real coefficients.
struct LadderOperator {
  int delta_m = 0;
  TrigLaurent a;
  TrigLaurent b;
  TrigLaurent c;
};

/// Applies op mode by mode. Sin denominators are cleared only after the three
/// terms are combined, so cancellations happen before the divisibility check.
/// Throws NonSmoothResult if the result is not in the algebra.
SphereFunction apply_operator(const LadderOperator& op, const SphereFunction& f);

}  // namespace ylm
