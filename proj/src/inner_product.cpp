#include "ylm/inner_product.hpp"

#include <cmath>
#include <numbers>

namespace ylm {

Rational wallis_half_disk(long k) {
  Rational w(1, 2);
  for (long i = 1; i <= k; ++i) {
    w *= make_rational(2 * i - 1, 2 * i + 2);
  }
  return w;
}

Scalar inner_exact(const SphereFunction& f, const SphereFunction& g) {
  Scalar total;
  for (const auto& [m, form_f] : f.modes()) {
    auto it = g.modes().find(m);
    if (it == g.modes().end()) continue;
    const ThetaForm product = form_f * it->second;

    Scalar even_part;
    const auto& e = product.even().coeffs();
    for (std::size_t k = 0; k < e.size(); k += 2) {
      if (!e[k].is_zero()) even_part += e[k] * make_rational(2, static_cast<long>(k) + 1);
    }
    Scalar odd_part;
    const auto& o = product.odd().coeffs();
    for (std::size_t k = 0; k < o.size(); k += 2) {
      if (!o[k].is_zero()) odd_part += o[k] * wallis_half_disk(static_cast<long>(k / 2));
    }
    // 2 pi from phi; the odd slot carries one more pi
    total += even_part * Scalar(RadicalSum(Rational(2)), 2);
    total += odd_part * Scalar(RadicalSum(Rational(2)), 4);
  }
  return total;
}

bool GramResult::is_identity() const {
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < matrix.size(); ++j)
      if (!(matrix[i][j] == (i == j ? Scalar::one() : Scalar::zero()))) return false;
  return true;
}

GramResult gram(const std::vector<HarmonicIndex>& indices) {
  std::vector<SphereFunction> ys;
  ys.reserve(indices.size());
  for (const auto& idx : indices) ys.push_back(closed_form(idx));
  GramResult out{indices, std::vector<std::vector<Scalar>>(indices.size(), std::vector<Scalar>(indices.size()))};
  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t j = i; j < ys.size(); ++j) {
      out.matrix[i][j] = inner_exact(ys[i], ys[j]);
      out.matrix[j][i] = out.matrix[i][j];
    }
  }
  return out;
}

Scalar adjoint_check(const LadderOperator& a, const LadderOperator& b, const SphereFunction& f,
                     const SphereFunction& g, PairingConvention convention) {
  if (convention == PairingConvention::standard)
    return inner_exact(apply_operator(a, f), g) - inner_exact(f, apply_operator(b, g));
  return inner_exact(apply_operator(b, f), g) - inner_exact(f, apply_operator(a, g));
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute the derivative at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

std::complex<double> inner_numeric(const SphereFunction& f, const SphereFunction& g, int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 1) throw std::invalid_argument("inner_numeric: need n_theta >= 2 and n_phi >= 1");
  if (f.is_zero() || g.is_zero()) return 0.0;
  const NumericSphereFunction nf(f);
  const NumericSphereFunction ng(g);
  std::vector<double> xs, ws;
  gauss_legendre(n_theta, xs, ws);
  const double dphi = 2.0 * std::numbers::pi / n_phi;
  std::complex<double> acc = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    const double theta = std::acos(xs[i]);
    std::complex<double> ring = 0.0;
    for (int j = 0; j < n_phi; ++j) {
      const double phi = j * dphi;
      ring += std::conj(nf(theta, phi)) * ng(theta, phi);
    }
    acc += ws[i] * ring * dphi;
  }
  return acc;
}

}  // namespace ylm
