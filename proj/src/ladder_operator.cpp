#include "ylm/ladder_operator.hpp"

#include <algorithm>

namespace ylm {

namespace {

ThetaForm times_sin_pow(ThetaForm f, int n) {
  for (int i = 0; i < n; ++i) f = f.times_sin();
  return f;
}

}  // namespace

SphereFunction apply_operator(const LadderOperator& op, const SphereFunction& f) {
  SphereFunction out;
  for (const auto& [m, form] : f.modes()) {
    struct Piece {
      ThetaForm value;
      int power;
    };
    Piece pieces[3];
    int n = 0;
    if (!op.a.form.is_zero()) pieces[n++] = {op.a.form * theta_derivative(form), op.a.sin_power};
    if (!op.b.form.is_zero() && m != 0)
      pieces[n++] = {(op.b.form * form) * Scalar(static_cast<long>(m)), op.b.sin_power};
    if (!op.c.form.is_zero()) pieces[n++] = {op.c.form * form, op.c.sin_power};

    int top = 0;
    for (int i = 0; i < n; ++i) top = std::max(top, pieces[i].power);
    ThetaForm acc;
    for (int i = 0; i < n; ++i) acc += times_sin_pow(pieces[i].value, top - pieces[i].power);
    for (int i = 0; i < top && !acc.is_zero(); ++i) acc = theta_div_sin(acc);
    out.accumulate(m + op.delta_m, acc);
  }
  return out;
}

}  // namespace ylm
