#pragma once

#include <complex>
#include <vector>

#include "ylm/harmonics.hpp"

namespace ylm {

/// int_{-1}^{1} x^{2k} sqrt(1 - x^2) dx / pi, from the recurrence
/// W_k = (2k - 1)/(2k + 2) W_{k-1}, W_0 = 1/2.
Rational wallis_half_disk(long k);

/// <f, g> = int conj(f) g sin(theta) dtheta dphi, exact.
/// The phi integral keeps matching modes (factor 2 pi). Even-slot integrands
/// give rationals, odd-slot integrands give pi times a rational; an integrand
/// with both throws PiExponentMismatch.
Scalar inner_exact(const SphereFunction& f, const SphereFunction& g);

struct GramResult {
  std::vector<HarmonicIndex> indices;
  std::vector<std::vector<Scalar>> matrix;

  bool is_identity() const;
};

GramResult gram(const std::vector<HarmonicIndex>& indices);

enum class PairingConvention {
  standard,   // <A f, g> = <f, A^dagger g>
  transpose,  // <f, A g> = <A^dagger f, g>
};

/// <A f, g> - <f, B g> under `standard`, <B f, g> - <f, A g> under `transpose`.
/// Zero when B is the adjoint of A.
Scalar adjoint_check(const LadderOperator& a, const LadderOperator& b, const SphereFunction& f,
                     const SphereFunction& g, PairingConvention convention = PairingConvention::standard);

/// Gauss-Legendre in x = cos(theta) times the trapezoid rule in phi.
std::complex<double> inner_numeric(const SphereFunction& f, const SphereFunction& g, int n_theta, int n_phi);

/// 2 * l_max + 4, enough for products of harmonics up to l_max.
inline int default_quadrature_size(long l_max) { return static_cast<int>(2 * l_max + 4); }

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace ylm
