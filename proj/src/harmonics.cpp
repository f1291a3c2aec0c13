#include "ylm/harmonics.hpp"

#include <cstdlib>
#include <string>

namespace ylm {

namespace {

Rational pow2(long n) {
  Integer r = 1;
  r <<= static_cast<mp_bitcnt_t>(n);
  return Rational(r);
}

/// sqrt(q) * pi^(-1/2) * sign
Scalar normalized(long sign, const Rational& q) {
  Scalar s = scalar_sqrt(q) * Scalar::pi_power(-1);
  return sign < 0 ? -s : s;
}

Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

SphereFunction sin_power_state(const Scalar& coeff, long m, long sin_power, bool with_cos) {
  ThetaForm f = ThetaForm::sin_pow(static_cast<int>(sin_power));
  if (with_cos) f = f.times_cos();
  return SphereFunction::single(static_cast<int>(m), f * coeff);
}

SphereFunction repeat(const LadderOperator& op, SphereFunction f, long times) {
  for (long i = 0; i < times; ++i) f = apply_operator(op, f);
  return f;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw IndexOutOfRange(what);
}

std::string index_text(long l, long m) { return "(" + std::to_string(l) + ", " + std::to_string(m) + ")"; }

}  // namespace

bool SubspaceLabel::valid() const {
  switch (kind) {
    case Subspace::fixed_l: return label >= 0;
    case Subspace::fixed_m: return true;
    case Subspace::d_plus:
    case Subspace::s_minus: return label >= 1;
  }
  return false;
}

bool SubspaceLabel::contains(const HarmonicIndex& idx) const {
  if (!valid() || !idx.valid()) return false;
  switch (kind) {
    case Subspace::fixed_l: return idx.l == label;
    case Subspace::fixed_m: return idx.m == label;
    case Subspace::d_plus: return idx.l - idx.m == label - 1;
    case Subspace::s_minus: return idx.l + idx.m == label - 1;
  }
  return false;
}

SphereFunction closed_form(long l, long m) {
  require(HarmonicIndex{l, m}.valid(), "closed_form: index out of range " + index_text(l, m));
  // ((-1)^m / (2^l l!))^2 (2l+1)(l+m)! / (4 (l-m)!)
  const Integer lf = factorial(l);
  Rational q = ratio(Integer(2 * l + 1) * factorial(l + m), Integer(4) * factorial(l - m) * lf * lf);
  q /= pow2(2 * l);
  const Scalar norm = normalized(m % 2 == 0 ? 1 : -1, q);

  ThetaForm g = ThetaForm::sin_pow(static_cast<int>(2 * l));
  for (long i = 0; i < l - m; ++i) g = theta_div_sin(theta_derivative(g));
  if (m >= 0) {
    for (long i = 0; i < m; ++i) g = theta_div_sin(g);
  } else {
    for (long i = 0; i < -m; ++i) g = g.times_sin();
  }
  return SphereFunction::single(static_cast<int>(m), g * norm);
}

SphereFunction extremal_su2(long l, Extremal which) {
  require(l >= 0, "extremal_su2: l must be nonnegative");
  const Integer lf = factorial(l);
  // (2l+1)! / (4^{l+1} (l!)^2)
  Rational q = ratio(factorial(2 * l + 1), lf * lf) / pow2(2 * l + 2);
  const long sign = (which == Extremal::highest && l % 2 == 1) ? -1 : 1;
  const long m = which == Extremal::lowest ? -l : l;
  return sin_power_state(normalized(sign, q), m, l, false);
}

SphereFunction extremal_Jfamily(long m) {
  const long a = std::labs(m);
  const Integer af = factorial(a);
  // Gamma(2 + 2|m|) / (4 pi (2^{|m|} |m|!)^2)
  Rational q = ratio(factorial(2 * a + 1), Integer(4) * af * af) / pow2(2 * a);
  const long sign = (m > 0 && m % 2 == 1) ? -1 : 1;
  return sin_power_state(normalized(sign, q), m, a, false);
}

HarmonicIndex extremal_K_index(long d) {
  require(d >= 1, "extremal_K: d must be >= 1");
  if (d % 2 == 1) {
    const long j = (d - 1) / 2;
    return {j, -j};
  }
  const long k = d / 2;
  return {k, 1 - k};
}

HarmonicIndex extremal_I_index(long s) {
  require(s >= 1, "extremal_I: s must be >= 1");
  if (s % 2 == 1) {
    const long j = (s - 1) / 2;
    return {j, j};
  }
  const long k = s / 2;
  return {k, k - 1};
}

SphereFunction extremal_K(long d) {
  const auto idx = extremal_K_index(d);
  if (d % 2 == 1) {
    const long j = idx.l;
    const Integer jf = factorial(j);
    Rational q = ratio(factorial(2 * j + 1), Integer(4) * jf * jf) / pow2(2 * j);
    return sin_power_state(normalized(1, q), -j, j, false);
  }
  const long k = idx.l;
  const Integer kf = factorial(k);
  // k (2k+1)! / (2^{2k+1} (k!)^2)
  Rational q = ratio(Integer(k) * factorial(2 * k + 1), kf * kf) / pow2(2 * k + 1);
  return sin_power_state(normalized(1, q), 1 - k, k - 1, true);
}

SphereFunction extremal_I(long s) {
  const auto idx = extremal_I_index(s);
  if (s % 2 == 1) {
    const long j = idx.l;
    const Integer jf = factorial(j);
    Rational q = ratio(factorial(2 * j + 1), Integer(4) * jf * jf) / pow2(2 * j);
    return sin_power_state(normalized(j % 2 == 0 ? 1 : -1, q), j, j, false);
  }
  const long k = idx.l;
  const Integer kf = factorial(k);
  // (2k+1)(2k-1)! / (2 * 2^{2k-1} (k!)^2)
  Rational q = ratio(Integer(2 * k + 1) * factorial(2 * k - 1), kf * kf) / pow2(2 * k);
  return sin_power_state(normalized((k - 1) % 2 == 0 ? 1 : -1, q), k - 1, k - 1, true);
}

SphereFunction generate_via_L(long l, long m, Extremal from) {
  require(HarmonicIndex{l, m}.valid(), "generate_via_L: index out of range " + index_text(l, m));
  const Integer two_l = factorial(2 * l);
  if (from == Extremal::lowest) {
    const Scalar c = scalar_sqrt(ratio(factorial(l - m), two_l * factorial(l + m)));
    return c * repeat(make_su2(Su2::plus), extremal_su2(l, Extremal::lowest), l + m);
  }
  const Scalar c = scalar_sqrt(ratio(factorial(l + m), two_l * factorial(l - m)));
  return c * repeat(make_su2(Su2::minus), extremal_su2(l, Extremal::highest), l - m);
}

SphereFunction generate_via_J(long l, long m) {
  require(HarmonicIndex{l, m}.valid(), "generate_via_J: index out of range " + index_text(l, m));
  const long a = std::labs(m);
  const Scalar c = scalar_sqrt(ratio(Integer(2 * l + 1) * factorial(2 * a),
                                     Integer(2 * a + 1) * factorial(l - m) * factorial(l + m)));
  SphereFunction f = extremal_Jfamily(m);
  for (long k = a + 1; k <= l; ++k) f = apply_operator(make_J(k, Sign::plus), f);
  return c * f;
}

Scalar generation_norm_K(long d, long m) {
  require(SubspaceLabel{Subspace::d_plus, d}.contains({m + d - 1, m}),
          "generation_norm_K: (d, m) outside the family");
  if (d % 2 == 1) {
    const long j = (d - 1) / 2;
    return scalar_sqrt(ratio(Integer(2 * j + 1) * factorial(2 * m + 2 * j), Integer(2 * m + 4 * j + 1)));
  }
  const long k = d / 2;
  return scalar_sqrt(ratio(Integer(2 * k + 1) * factorial(2 * m + 2 * k - 1), Integer(2 * m + 4 * k - 1)));
}

Scalar generation_norm_I(long s, long m) {
  require(SubspaceLabel{Subspace::s_minus, s}.contains({-m + s - 1, m}),
          "generation_norm_I: (s, m) outside the family");
  if (s % 2 == 1) {
    const long j = (s - 1) / 2;
    return scalar_sqrt(ratio(Integer(2 * j + 1) * factorial(2 * j - 2 * m), Integer(4 * j - 2 * m + 1)));
  }
  const long k = s / 2;
  return scalar_sqrt(ratio(Integer(2 * k + 1) * factorial(2 * k - 2 * m - 1), Integer(4 * k - 2 * m - 1)));
}

SphereFunction generate_via_K(long d, long m) {
  const Scalar norm = generation_norm_K(d, m);
  const auto low = extremal_K_index(d);
  return norm.inverse() * repeat(make_K(d, Sign::plus), extremal_K(d), m - low.m);
}

SphereFunction generate_via_I(long s, long m) {
  const Scalar norm = generation_norm_I(s, m);
  const auto high = extremal_I_index(s);
  return norm.inverse() * repeat(make_I(s, Sign::minus), extremal_I(s), high.m - m);
}

std::vector<HarmonicIndex> enumerate_subspace(const SubspaceLabel& label, long cutoff) {
  std::vector<HarmonicIndex> out;
  if (!label.valid()) return out;
  for (long l = 0; l <= cutoff; ++l) {
    switch (label.kind) {
      case Subspace::fixed_l:
        if (l == label.label)
          for (long m = -l; m <= l; ++m) out.push_back({l, m});
        break;
      case Subspace::fixed_m:
        if (l >= std::labs(label.label)) out.push_back({l, label.label});
        break;
      case Subspace::d_plus:
        if (HarmonicIndex idx{l, l - label.label + 1}; idx.valid()) out.push_back(idx);
        break;
      case Subspace::s_minus:
        if (HarmonicIndex idx{l, label.label - 1 - l}; idx.valid()) out.push_back(idx);
        break;
    }
  }
  return out;
}

std::vector<HarmonicIndex> all_indices(long l_max) {
  std::vector<HarmonicIndex> out;
  for (long l = 0; l <= l_max; ++l)
    for (long m = -l; m <= l; ++m) out.push_back({l, m});
  return out;
}

}  // namespace ylm
