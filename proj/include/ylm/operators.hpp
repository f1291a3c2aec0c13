#pragma once

// Named first-order operators on the sphere and the identities built on them.
//
//   L+-   = e^{+-i phi}(+-d_theta + i cot(theta) d_phi),  Lz = -i d_phi
//   J+-(l) = +-sin(theta) d_theta + l cos(theta)
//   K+-^d = e^{+-i phi}(+-cos d_theta + i(1/sin + sin) d_phi - (d - 1/2 +- 1/2) sin)
//   I+-^s = e^{+-i phi}(+-cos d_theta + i(1/sin + sin) d_phi + (s - 1/2 -+ 1/2) sin)
//   A_{+-,+-}(l) = e^{+-i phi}(+-cos d_theta + (i/sin) d_phi - l sin)
//   A_{-+,+-}(l) = e^{+-i phi}(+-cos d_theta + (i/sin) d_phi + l sin)
//
// Kz and Iz are Lz. Integer parameters are not range-checked here.

#include <string>

#include "ylm/ladder_operator.hpp"

namespace ylm {

enum class Sign { plus, minus };
enum class Su2 { plus, minus, z };
/// pp = A_{+,+}, mm = A_{-,-}, mp = A_{-,+}, pm = A_{+,-}.
enum class MixedKind { pp, mm, mp, pm };

enum class Family {
  L_plus, L_minus, L_z,
  J_plus, J_minus,
  K_plus, K_minus, K_z,
  I_plus, I_minus, I_z,
  A_pp, A_mm, A_mp, A_pm,
};

struct OperatorFamily {
  Family family;
  long parameter = 0;  // l, d or s; ignored for L and the z generators

  LadderOperator make() const;
  std::string name() const;
};

LadderOperator make_su2(Su2 which);
LadderOperator make_J(long l, Sign sign);
LadderOperator make_K(long d, Sign sign);
LadderOperator make_I(long s, Sign sign);
LadderOperator make_A(long l, MixedKind kind);

/// A(B f) - B(A f)
SphereFunction commutator(const LadderOperator& a, const LadderOperator& b, const SphereFunction& f);

/// L+ L- + Lz^2 - Lz
SphereFunction casimir_su2(const SphereFunction& f);
/// K+^d K-^d - 4 Kz^2 - 2(2d - 3) Kz
SphereFunction casimir_u11_K(long d, const SphereFunction& f);
/// I+^s I-^s - 4 Iz^2 + 2(2s + 1) Iz
SphereFunction casimir_u11_I(long s, const SphereFunction& f);

/// J-(l+1) J+(l+1) f - J+(l) J-(l) f - (2l + 1) f; zero for every l and smooth f.
SphereFunction shape_invariance_residual(long l, const SphereFunction& f);
/// J-(l-1) J+(l+3) f - J+(l+2) J-(l-2) f - (2l + 1) f, the adjoint form.
SphereFunction shape_invariance_adjoint_residual(long l, const SphereFunction& f);

}  // namespace ylm
