#include "ylm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "json.hpp"

namespace ylm {

namespace {

constexpr double kSampleThetas[] = {0.3, 0.9, 1.4, 2.0, 2.7};
constexpr double kSamplePhis[] = {0.1, 1.7, 4.0};

double max_deviation(const SphereFunction& r) {
  if (r.is_zero()) return 0.0;
  const NumericSphereFunction nr(r);
  double worst = 0.0;
  for (double t : kSampleThetas)
    for (double p : kSamplePhis) worst = std::max(worst, std::abs(nr(t, p)));
  return worst;
}

/// sqrt(num/den * product), zero when product vanishes.
Scalar ladder_coefficient(long num, long den, long product) {
  if (product == 0) return Scalar::zero();
  return scalar_sqrt(make_rational(num, den) * Rational(product));
}

Scalar sign_of(long parity_exponent) { return Scalar(parity_exponent % 2 == 0 ? 1L : -1L); }

std::string params_text(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) {
    if (!s.empty()) s += ";";
    s += k + "=" + std::to_string(v);
  }
  return s;
}

class Runner {
 public:
  explicit Runner(const SuiteConfig& cfg) : cfg_(cfg) {}

  std::vector<CheckRecord> take() { return std::move(records_); }

  void run(SuiteName s) {
    switch (s) {
      case SuiteName::su2: su2(); break;
      case SuiteName::ladder_l: ladder_l(); break;
      case SuiteName::u11_K: u11_K(); break;
      case SuiteName::u11_I: u11_I(); break;
      case SuiteName::mixed_A: mixed_A(); break;
      case SuiteName::adjoint: adjoint(); break;
      case SuiteName::orthonormality: orthonormality(); break;
      case SuiteName::generation: generation(); break;
      case SuiteName::parity: parity(); break;
      case SuiteName::all:
        for (auto each : {SuiteName::su2, SuiteName::ladder_l, SuiteName::u11_K, SuiteName::u11_I,
                          SuiteName::mixed_A, SuiteName::adjoint, SuiteName::orthonormality,
                          SuiteName::generation, SuiteName::parity})
          run(each);
        break;
    }
  }

 private:
  const SphereFunction& Y(long l, long m) { return cache_.get(l, m); }

  const std::vector<SphereFunction>& trials() {
    if (trials_.empty() && cfg_.random_trials > 0) {
      auto rng = seeded_rng(cfg_.seed, "trial-functions");
      for (long t = 0; t < cfg_.random_trials; ++t)
        trials_.push_back(random_smooth_function(rng, cfg_.l_max, cache_));
    }
    return trials_;
  }

  /// Records pass iff compute() is exactly the zero function.
  void residual(std::string id, Params params, const std::function<SphereFunction()>& compute,
                std::string note = {}) {
    CheckRecord rec{std::move(id), std::move(params), Status::fail, false, 0.0, std::move(note)};
    try {
      const SphereFunction r = compute();
      rec.exact_zero = r.is_zero();
      rec.float_dev = max_deviation(r);
      rec.status = rec.exact_zero ? Status::pass : Status::fail;
    } catch (const std::exception& e) {
      rec.note = std::string("error: ") + e.what();
    }
    records_.push_back(std::move(rec));
  }

  /// candidate == reference (normalized harmonic): pass; proportional: flagged
  /// with the derived constant; anything else fails.
  void route(std::string id, Params params, const std::function<SphereFunction()>& candidate,
             const SphereFunction& reference, const std::string& context = {}) {
    CheckRecord rec{std::move(id), std::move(params), Status::fail, false, 0.0, {}};
    try {
      const SphereFunction c = candidate();
      const SphereFunction diff = c - reference;
      rec.exact_zero = diff.is_zero();
      rec.float_dev = max_deviation(diff);
      if (rec.exact_zero) {
        rec.status = Status::pass;
      } else {
        const Scalar k = inner_exact(reference, c);
        if (sphere_equal(c, k * reference)) {
          rec.status = Status::flagged;
          rec.note = "stated formula = c * Y with derived c = " + k.to_string() + " (" +
                     std::to_string(k.to_double()) + ")";
          if (!context.empty()) rec.note += "; " + context;
        } else {
          rec.note = "not proportional to the closed form";
        }
      }
    } catch (const std::exception& e) {
      rec.note = std::string("error: ") + e.what();
    }
    records_.push_back(std::move(rec));
  }

  /// Adjoint pair check under both pairing conventions. g is shifted by a f so
  /// that <a f, g> is nonzero whenever a f is.
  void adjoint_pair(std::string id, Params params, const LadderOperator& a, const LadderOperator& b,
                    const SphereFunction& f, const SphereFunction& g0) {
    CheckRecord rec{std::move(id), std::move(params), Status::fail, false, 0.0, {}};
    try {
      const SphereFunction g = g0 + apply_operator(a, f);
      const Scalar standard = adjoint_check(a, b, f, g, PairingConvention::standard);
      if (standard.is_zero()) {
        rec.status = Status::pass;
        rec.exact_zero = true;
        rec.note = "convention=standard";
      } else {
        const Scalar transpose = adjoint_check(a, b, f, g, PairingConvention::transpose);
        rec.exact_zero = transpose.is_zero();
        rec.float_dev = std::abs(transpose.is_zero() ? standard.to_double() : transpose.to_double());
        rec.status = rec.exact_zero ? Status::pass : Status::fail;
        rec.note = rec.exact_zero ? "convention=transpose" : "neither convention";
      }
    } catch (const std::exception& e) {
      rec.note = std::string("error: ") + e.what();
    }
    records_.push_back(std::move(rec));
  }

  // ------------------------------------------------------------------ su(2)

  void su2() {
    const auto Lp = make_su2(Su2::plus);
    const auto Lm = make_su2(Su2::minus);
    const auto Lz = make_su2(Su2::z);
    for (long l = 0; l <= cfg_.l_max; ++l) {
      for (long m = -l; m <= l; ++m) {
        const Params p{{"l", l}, {"m", m}};
        if (m > -l) {
          const Scalar c = ladder_coefficient(1, 1, (l - m + 1) * (l + m));
          residual("su2-raise", p, [&] { return apply_operator(Lp, Y(l, m - 1)) - c * Y(l, m); });
          residual("su2-lower", p, [&] { return apply_operator(Lm, Y(l, m)) - c * Y(l, m - 1); });
        }
        residual("su2-weight", p, [&] { return apply_operator(Lz, Y(l, m)) - Scalar(m) * Y(l, m); });
        residual("su2-casimir", p, [&] { return casimir_su2(Y(l, m)) - Scalar(l * (l + 1)) * Y(l, m); });
      }
      const Params pl{{"l", l}};
      residual("su2-lowest-annihilation", pl,
               [&] { return apply_operator(Lm, extremal_su2(l, Extremal::lowest)); });
      residual("su2-highest-annihilation", pl,
               [&] { return apply_operator(Lp, extremal_su2(l, Extremal::highest)); });
      route("su2-extremal-phase", {{"l", l}, {"m", -l}}, [&] { return extremal_su2(l, Extremal::lowest); },
            Y(l, -l));
      route("su2-extremal-phase", {{"l", l}, {"m", l}}, [&] { return extremal_su2(l, Extremal::highest); },
            Y(l, l));
    }
    const auto& fs = trials();
    for (long t = 0; t < static_cast<long>(fs.size()); ++t) {
      const auto& f = fs[t];
      const Params p{{"trial", t}};
      residual("su2-commutator", p, [&] { return commutator(Lp, Lm, f) - Scalar(2L) * apply_operator(Lz, f); });
      residual("su2-commutator-z-plus", p, [&] { return commutator(Lz, Lp, f) - apply_operator(Lp, f); });
      residual("su2-commutator-z-minus", p, [&] { return commutator(Lz, Lm, f) + apply_operator(Lm, f); });
    }
  }

  // ------------------------------------------------------------ l-ladder

  void ladder_l() {
    const auto& fs = trials();
    for (long lambda = -3; lambda <= cfg_.l_max; ++lambda) {
      for (const auto& idx : all_indices(cfg_.l_max)) {
        const Params p{{"lambda", lambda}, {"l", idx.l}, {"m", idx.m}};
        residual("shape-invariance", p, [&] { return shape_invariance_residual(lambda, Y(idx.l, idx.m)); });
        residual("shape-invariance-adjoint", p,
                 [&] { return shape_invariance_adjoint_residual(lambda, Y(idx.l, idx.m)); });
      }
      for (long t = 0; t < static_cast<long>(fs.size()); ++t) {
        const Params p{{"lambda", lambda}, {"trial", t}};
        residual("shape-invariance", p, [&] { return shape_invariance_residual(lambda, fs[t]); });
        residual("shape-invariance-adjoint", p, [&] { return shape_invariance_adjoint_residual(lambda, fs[t]); });
      }
    }
    for (long l = 0; l <= cfg_.l_max; ++l) {
      for (long m = -l; m <= l; ++m) {
        const Params p{{"l", l}, {"m", m}};
        if (l >= std::labs(m) + 1) {
          const Scalar up = ladder_coefficient(2 * l - 1, 2 * l + 1, (l - m) * (l + m));
          residual("J-raise", p,
                   [&] { return apply_operator(make_J(l, Sign::plus), Y(l - 1, m)) - up * Y(l, m); });
          const Scalar down = ladder_coefficient(2 * l + 1, 2 * l - 1, (l - m) * (l + m));
          residual("J-lower", p,
                   [&] { return apply_operator(make_J(l, Sign::minus), Y(l, m)) - down * Y(l - 1, m); });
        } else {
          // l = |m|: the lowering coefficient vanishes.
          residual("J-lower", p, [&] { return apply_operator(make_J(l, Sign::minus), Y(l, m)); });
        }
      }
    }
    for (long m = -cfg_.l_max; m <= cfg_.l_max; ++m) {
      const Params p{{"m", m}};
      residual("J-extremal-annihilation", p,
               [&] { return apply_operator(make_J(std::labs(m), Sign::minus), extremal_Jfamily(m)); });
      route("J-extremal-phase", p, [&] { return extremal_Jfamily(m); }, Y(std::labs(m), m));
    }
  }

  // ------------------------------------------------------------ u(1,1): K

  void u11_K() {
    const auto Kz = make_su2(Su2::z);
    const auto& fs = trials();
    for (long d = 1; d <= cfg_.d_max; ++d) {
      const auto Kp = make_K(d, Sign::plus);
      const auto Km = make_K(d, Sign::minus);
      for (long t = 0; t < static_cast<long>(fs.size()); ++t) {
        const auto& f = fs[t];
        const Params p{{"d", d}, {"trial", t}};
        residual("K-commutator", p, [&] {
          return commutator(Kp, Km, f) + Scalar(8L) * apply_operator(Kz, f) + Scalar(4 * d - 2) * f;
        });
        residual("K-commutator-z-plus", p, [&] { return commutator(Kz, Kp, f) - apply_operator(Kp, f); });
        residual("K-commutator-z-minus", p, [&] { return commutator(Kz, Km, f) + apply_operator(Km, f); });
        residual("K-commutator-adjoint", p, [&] {
          return commutator(make_K(d + 2, Sign::plus), make_K(d - 2, Sign::minus), f) +
                 Scalar(8L) * apply_operator(Kz, f) + Scalar(4 * d - 2) * f;
        });
        residual("K-commutator-z-adjoint-minus", p, [&] {
          const auto op = make_K(d - 2, Sign::minus);
          return commutator(Kz, op, f) + apply_operator(op, f);
        });
        residual("K-commutator-z-adjoint-plus", p, [&] {
          const auto op = make_K(d + 2, Sign::plus);
          return commutator(Kz, op, f) - apply_operator(op, f);
        });
        residual("K-casimir-commutes-plus", p,
                 [&] { return casimir_u11_K(d, apply_operator(Kp, f)) - apply_operator(Kp, casimir_u11_K(d, f)); });
        residual("K-casimir-commutes-minus", p,
                 [&] { return casimir_u11_K(d, apply_operator(Km, f)) - apply_operator(Km, casimir_u11_K(d, f)); });
      }
      const SubspaceLabel label{Subspace::d_plus, d};
      for (const auto& idx : enumerate_subspace(label, cfg_.l_max)) {
        const long l = idx.l;
        const long m = idx.m;
        const Params p{{"d", d}, {"m", m}};
        const long product = (2 * m + d - 2) * (2 * m + d - 1);
        if (HarmonicIndex{l - 1, m - 1}.valid()) {
          const Scalar up = ladder_coefficient(2 * m + 2 * d - 3, 2 * m + 2 * d - 1, product);
          residual("K-raise", p, [&] { return apply_operator(Kp, Y(l - 1, m - 1)) - up * Y(l, m); });
          const Scalar down = ladder_coefficient(2 * m + 2 * d - 1, 2 * m + 2 * d - 3, product);
          residual("K-lower", p, [&] { return apply_operator(Km, Y(l, m)) - down * Y(l - 1, m - 1); });
        } else {
          residual("K-lower", p, [&] { return apply_operator(Km, Y(l, m)); });
        }
        residual("K-weight", p, [&] { return apply_operator(Kz, Y(l, m)) - Scalar(m) * Y(l, m); });
        residual("K-casimir", p,
                 [&] { return casimir_u11_K(d, Y(l, m)) - Scalar((d - 1) * (d - 2)) * Y(l, m); });
      }
      const Params pd{{"d", d}};
      residual("K-lowest-annihilation", pd, [&] { return apply_operator(Km, extremal_K(d)); });
      const auto low = extremal_K_index(d);
      route("K-lowest-phase", pd, [&] { return extremal_K(d); }, Y(low.l, low.m));
    }
  }

  // ------------------------------------------------------------ u(1,1): I

  void u11_I() {
    const auto Iz = make_su2(Su2::z);
    const auto& fs = trials();
    for (long s = 1; s <= cfg_.s_max; ++s) {
      const auto Ip = make_I(s, Sign::plus);
      const auto Im = make_I(s, Sign::minus);
      for (long t = 0; t < static_cast<long>(fs.size()); ++t) {
        const auto& f = fs[t];
        const Params p{{"s", s}, {"trial", t}};
        residual("I-commutator", p, [&] {
          return commutator(Ip, Im, f) + Scalar(8L) * apply_operator(Iz, f) - Scalar(4 * s - 2) * f;
        });
        residual("I-commutator-z-plus", p, [&] { return commutator(Iz, Ip, f) - apply_operator(Ip, f); });
        residual("I-commutator-z-minus", p, [&] { return commutator(Iz, Im, f) + apply_operator(Im, f); });
        residual("I-commutator-adjoint", p, [&] {
          return commutator(make_I(s - 2, Sign::plus), make_I(s + 2, Sign::minus), f) +
                 Scalar(8L) * apply_operator(Iz, f) - Scalar(4 * s - 2) * f;
        });
        residual("I-commutator-z-adjoint-minus", p, [&] {
          const auto op = make_I(s + 2, Sign::minus);
          return commutator(Iz, op, f) + apply_operator(op, f);
        });
        residual("I-commutator-z-adjoint-plus", p, [&] {
          const auto op = make_I(s - 2, Sign::plus);
          return commutator(Iz, op, f) - apply_operator(op, f);
        });
        residual("I-casimir-commutes-plus", p,
                 [&] { return casimir_u11_I(s, apply_operator(Ip, f)) - apply_operator(Ip, casimir_u11_I(s, f)); });
        residual("I-casimir-commutes-minus", p,
                 [&] { return casimir_u11_I(s, apply_operator(Im, f)) - apply_operator(Im, casimir_u11_I(s, f)); });
      }
      const SubspaceLabel label{Subspace::s_minus, s};
      for (const auto& idx : enumerate_subspace(label, cfg_.l_max)) {
        const long l = idx.l;
        const long m = idx.m;
        const Params p{{"s", s}, {"m", m}};
        const long product = (-2 * m + s) * (-2 * m + s + 1);
        const Scalar up = ladder_coefficient(-2 * m + 2 * s + 1, -2 * m + 2 * s - 1, product);
        residual("I-raise", p, [&] { return apply_operator(Ip, Y(l + 1, m - 1)) - up * Y(l, m); });
        const Scalar down = ladder_coefficient(-2 * m + 2 * s - 1, -2 * m + 2 * s + 1, product);
        residual("I-lower", p, [&] { return apply_operator(Im, Y(l, m)) - down * Y(l + 1, m - 1); });
        residual("I-weight", p, [&] { return apply_operator(Iz, Y(l, m)) - Scalar(m) * Y(l, m); });
        residual("I-casimir", p, [&] { return casimir_u11_I(s, Y(l, m)) - Scalar(s * (s + 1)) * Y(l, m); });
      }
      const Params ps{{"s", s}};
      residual("I-highest-annihilation", ps, [&] { return apply_operator(Ip, extremal_I(s)); });
      const auto high = extremal_I_index(s);
      route("I-highest-phase", ps, [&] { return extremal_I(s); }, Y(high.l, high.m));
    }
  }

  // ------------------------------------------------------------ mixed A

  void mixed_A() {
    const auto Lp = make_su2(Su2::plus);
    const auto Lm = make_su2(Su2::minus);
    const auto& fs = trials();
    for (long l = 1; l <= 6; ++l) {
      const auto Jp = make_J(l, Sign::plus);
      const auto Jm = make_J(l, Sign::minus);
      for (long t = 0; t < static_cast<long>(fs.size()); ++t) {
        const auto& f = fs[t];
        const Params p{{"l", l}, {"trial", t}};
        residual("A-pp-definition", p,
                 [&] { return apply_operator(make_A(l, MixedKind::pp), f) - commutator(Lp, Jp, f); });
        residual("A-mm-definition", p,
                 [&] { return apply_operator(make_A(l, MixedKind::mm), f) + commutator(Lm, Jm, f); });
        residual("A-mp-definition", p,
                 [&] { return apply_operator(make_A(l, MixedKind::mp), f) + commutator(Lp, Jm, f); });
        residual("A-pm-definition", p,
                 [&] { return apply_operator(make_A(l, MixedKind::pm), f) - commutator(Lm, Jp, f); });
      }
    }
    for (long l = 0; l <= cfg_.l_max; ++l) {
      for (long m = -l; m <= l; ++m) {
        const Params p{{"l", l}, {"m", m}};
        if (l >= 1) {
          const long product = (l + m - 1) * (l + m);
          if (HarmonicIndex{l - 1, m - 1}.valid()) {
            const Scalar up = ladder_coefficient(2 * l - 1, 2 * l + 1, product);
            residual("A-pp-ladder", p,
                     [&] { return apply_operator(make_A(l, MixedKind::pp), Y(l - 1, m - 1)) - up * Y(l, m); });
            const Scalar down = ladder_coefficient(2 * l + 1, 2 * l - 1, product);
            residual("A-mm-ladder", p,
                     [&] { return apply_operator(make_A(l, MixedKind::mm), Y(l, m)) - down * Y(l - 1, m - 1); });
          } else {
            residual("A-mm-ladder", p, [&] { return apply_operator(make_A(l, MixedKind::mm), Y(l, m)); });
          }
        }
        const long product = (l - m + 1) * (l - m + 2);
        const Scalar up = ladder_coefficient(2 * l + 3, 2 * l + 1, product);
        residual("A-mp-ladder", p,
                 [&] { return apply_operator(make_A(l + 1, MixedKind::mp), Y(l + 1, m - 1)) - up * Y(l, m); });
        const Scalar down = ladder_coefficient(2 * l + 1, 2 * l + 3, product);
        residual("A-pm-ladder", p,
                 [&] { return apply_operator(make_A(l + 1, MixedKind::pm), Y(l, m)) - down * Y(l + 1, m - 1); });
      }
    }
  }

  // ------------------------------------------------------------ adjoint

  void adjoint() {
    std::vector<std::pair<SphereFunction, SphereFunction>> pairs;
    auto rng = seeded_rng(cfg_.seed, "adjoint-pairs");
    for (long t = 0; t < cfg_.adjoint_pairs; ++t) {
      auto f = random_smooth_function(rng, cfg_.l_max, cache_);
      auto g = random_smooth_function(rng, cfg_.l_max, cache_);
      pairs.emplace_back(std::move(f), std::move(g));
    }
    const auto Lp = make_su2(Su2::plus);
    const auto Lm = make_su2(Su2::minus);
    const auto Lz = make_su2(Su2::z);
    for (long t = 0; t < static_cast<long>(pairs.size()); ++t) {
      const auto& [f, g] = pairs[t];
      adjoint_pair("adjoint-L", {{"sign", 1}, {"trial", t}}, Lp, Lm, f, g);
      adjoint_pair("adjoint-L", {{"sign", -1}, {"trial", t}}, Lm, Lp, f, g);
      adjoint_pair("adjoint-Lz", {{"trial", t}}, Lz, Lz, f, g);
      for (long l = 0; l <= cfg_.l_max; ++l) {
        adjoint_pair("adjoint-J", {{"l", l}, {"sign", -1}, {"trial", t}}, make_J(l, Sign::minus),
                     make_J(l + 2, Sign::plus), f, g);
        adjoint_pair("adjoint-J", {{"l", l}, {"sign", 1}, {"trial", t}}, make_J(l, Sign::plus),
                     make_J(l - 2, Sign::minus), f, g);
      }
      for (long d = 1; d <= cfg_.d_max; ++d) {
        adjoint_pair("adjoint-K", {{"d", d}, {"sign", -1}, {"trial", t}}, make_K(d, Sign::minus),
                     make_K(d + 2, Sign::plus), f, g);
        adjoint_pair("adjoint-K", {{"d", d}, {"sign", 1}, {"trial", t}}, make_K(d, Sign::plus),
                     make_K(d - 2, Sign::minus), f, g);
      }
      for (long s = 1; s <= cfg_.s_max; ++s) {
        adjoint_pair("adjoint-I", {{"s", s}, {"sign", -1}, {"trial", t}}, make_I(s, Sign::minus),
                     make_I(s - 2, Sign::plus), f, g);
        adjoint_pair("adjoint-I", {{"s", s}, {"sign", 1}, {"trial", t}}, make_I(s, Sign::plus),
                     make_I(s + 2, Sign::minus), f, g);
      }
    }
  }

  // ------------------------------------------------------- orthonormality

  void orthonormality() {
    const auto idx = all_indices(cfg_.l_max);
    const int n = default_quadrature_size(cfg_.l_max);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = i; j < idx.size(); ++j) {
        CheckRecord rec{"orthonormality",
                        {{"l1", idx[i].l}, {"m1", idx[i].m}, {"l2", idx[j].l}, {"m2", idx[j].m}},
                        Status::fail, false, 0.0, {}};
        const Scalar expected = i == j ? Scalar::one() : Scalar::zero();
        const Scalar exact = inner_exact(Y(idx[i].l, idx[i].m), Y(idx[j].l, idx[j].m));
        rec.exact_zero = (exact - expected).is_zero();
        const auto numeric = inner_numeric(Y(idx[i].l, idx[i].m), Y(idx[j].l, idx[j].m), n, n);
        rec.float_dev = std::abs(numeric - std::complex<double>(exact.to_double(), 0.0));
        rec.status = rec.exact_zero && rec.float_dev <= cfg_.numeric_tolerance ? Status::pass : Status::fail;
        if (!rec.exact_zero) rec.note = "exact inner product " + exact.to_string();
        records_.push_back(std::move(rec));
      }
    }
  }

  // ------------------------------------------------------------ generation

  /// Product of projected one-step coefficients <Y_next, op Y_prev> along a chain.
  Scalar telescoped(const LadderOperator& op, const std::vector<HarmonicIndex>& chain) {
    Scalar acc = Scalar::one();
    for (std::size_t i = 1; i < chain.size(); ++i)
      acc *= inner_exact(Y(chain[i].l, chain[i].m), apply_operator(op, Y(chain[i - 1].l, chain[i - 1].m)));
    return acc;
  }

  void normalization(std::string id, Params params, const Scalar& stated, const std::function<Scalar()>& derive) {
    CheckRecord rec{std::move(id), std::move(params), Status::fail, false, 0.0, {}};
    try {
      const Scalar derived = derive();
      const Scalar diff = derived - stated;
      rec.exact_zero = diff.is_zero();
      rec.float_dev = std::abs(diff.to_double());
      if (rec.exact_zero) {
        rec.status = Status::pass;
      } else {
        rec.status = Status::flagged;
        rec.note = "stated " + stated.to_string() + " vs telescoped " + derived.to_string();
      }
    } catch (const std::exception& e) {
      rec.note = std::string("error: ") + e.what();
    }
    records_.push_back(std::move(rec));
  }

  void generation() {
    for (const auto& idx : all_indices(cfg_.l_max)) {
      const long l = idx.l;
      const long m = idx.m;
      const Params p{{"l", l}, {"m", m}};
      route("gen-L-lowest", p, [&] { return generate_via_L(l, m, Extremal::lowest); }, Y(l, m));
      route("gen-L-highest", p, [&] { return generate_via_L(l, m, Extremal::highest); }, Y(l, m));
      route("gen-J", p, [&] { return generate_via_J(l, m); }, Y(l, m));

      const long d = l - m + 1;
      const Params pk{{"d", d}, {"m", m}};
      const auto low = extremal_K_index(d);
      std::vector<HarmonicIndex> kchain;
      for (long mm = low.m; mm <= m; ++mm) kchain.push_back({mm + d - 1, mm});
      normalization("gen-K-normalization", pk, generation_norm_K(d, m),
                    [&] { return telescoped(make_K(d, Sign::plus), kchain); });
      route("gen-K", pk, [&] { return generate_via_K(d, m); }, Y(l, m),
            "extremal state check: K-lowest-phase d=" + std::to_string(d));

      const long s = l + m + 1;
      const Params pi{{"s", s}, {"m", m}};
      const auto high = extremal_I_index(s);
      std::vector<HarmonicIndex> ichain;
      for (long mm = high.m; mm >= m; --mm) ichain.push_back({-mm + s - 1, mm});
      normalization("gen-I-normalization", pi, generation_norm_I(s, m),
                    [&] { return telescoped(make_I(s, Sign::minus), ichain); });
      route("gen-I", pi, [&] { return generate_via_I(s, m); }, Y(l, m),
            "extremal state check: I-highest-phase s=" + std::to_string(s));
    }
  }

  // ---------------------------------------------------------------- parity

  void parity() {
    for (const auto& idx : all_indices(cfg_.l_max)) {
      residual("parity", {{"l", idx.l}, {"m", idx.m}},
               [&] { return parity_reflect(Y(idx.l, idx.m)) - sign_of(idx.l) * Y(idx.l, idx.m); });
    }
  }

  const SuiteConfig& cfg_;
  HarmonicCache cache_;
  std::vector<SphereFunction> trials_;
  std::vector<CheckRecord> records_;
};

bool record_less(const CheckRecord& a, const CheckRecord& b) {
  if (a.identity_id != b.identity_id) return a.identity_id < b.identity_id;
  return a.params < b.params;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

std::string to_string(SuiteName s) {
  switch (s) {
    case SuiteName::su2: return "su2";
    case SuiteName::ladder_l: return "ladder-l";
    case SuiteName::u11_K: return "u11-K";
    case SuiteName::u11_I: return "u11-I";
    case SuiteName::mixed_A: return "mixed-A";
    case SuiteName::adjoint: return "adjoint";
    case SuiteName::orthonormality: return "orthonormality";
    case SuiteName::generation: return "generation";
    case SuiteName::parity: return "parity";
    case SuiteName::all: return "all";
  }
  return "?";
}

SuiteName parse_suite(const std::string& name) {
  for (auto s : {SuiteName::su2, SuiteName::ladder_l, SuiteName::u11_K, SuiteName::u11_I, SuiteName::mixed_A,
                 SuiteName::adjoint, SuiteName::orthonormality, SuiteName::generation, SuiteName::parity,
                 SuiteName::all})
    if (to_string(s) == name) return s;
  throw std::invalid_argument("unknown suite: " + name);
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::flagged: return "flagged";
  }
  return "?";
}

void SuiteConfig::validate() const {
  if (l_max < 1) throw std::invalid_argument("lmax must be >= 1");
  if (d_max < 1) throw std::invalid_argument("dmax must be >= 1");
  if (s_max < 1) throw std::invalid_argument("smax must be >= 1");
  if (random_trials < 0) throw std::invalid_argument("trials must be >= 0");
  if (adjoint_pairs < 0) throw std::invalid_argument("pairs must be >= 0");
  if (!(numeric_tolerance > 0)) throw std::invalid_argument("tolerance must be > 0");
}

const SphereFunction& HarmonicCache::get(long l, long m) {
  const HarmonicIndex key{l, m};
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, closed_form(l, m)).first;
  return it->second;
}

std::mt19937_64 seeded_rng(std::uint64_t seed, const std::string& tag) {
  return std::mt19937_64(splitmix(seed ^ fnv1a(tag)));
}

SphereFunction random_smooth_function(std::mt19937_64& rng, long l_max, HarmonicCache& cache) {
  SphereFunction f;
  const long terms = uniform(rng, 1, 4);
  for (long i = 0; i < terms; ++i) {
    const long l = uniform(rng, 0, l_max);
    const long m = uniform(rng, -l, l);
    long num = uniform(rng, -9, 8);
    if (num >= 0) ++num;  // skip zero
    const long den = uniform(rng, 1, 9);
    f += cache.get(l, m) * Scalar(make_rational(num, den));
  }
  return f;
}

VerificationReport run_suite(const SuiteConfig& config) {
  config.validate();
  Runner runner(config);
  runner.run(config.suite);
  VerificationReport report{config, runner.take(), {}, YLM_VERSION};
  std::stable_sort(report.records.begin(), report.records.end(), record_less);
  for (const auto& r : report.records) {
    switch (r.status) {
      case Status::pass: ++report.summary.pass; break;
      case Status::fail: ++report.summary.fail; break;
      case Status::flagged: ++report.summary.flagged; break;
    }
  }
  return report;
}

std::string to_json(const VerificationReport& report) {
  using json = nlohmann::ordered_json;
  json j;
  j["version"] = kReportSchemaVersion;
  j["artifact_version"] = report.artifact_version;
  const auto& c = report.config;
  j["config"] = {{"suite", to_string(c.suite)}, {"lmax", c.l_max},   {"dmax", c.d_max},
                 {"smax", c.s_max},             {"trials", c.random_trials}, {"pairs", c.adjoint_pairs}, {"seed", c.seed},
                 {"tol", c.numeric_tolerance}};
  json records = json::array();
  json flagged = json::array();
  for (const auto& r : report.records) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    records.push_back({{"id", r.identity_id},
                       {"params", params},
                       {"status", to_string(r.status)},
                       {"exact_zero", r.exact_zero},
                       {"float_dev", r.float_dev},
                       {"note", r.note}});
    if (r.status == Status::flagged) flagged.push_back({{"id", r.identity_id}, {"params", params}});
  }
  j["records"] = std::move(records);
  j["summary"] = {{"pass", report.summary.pass},
                  {"fail", report.summary.fail},
                  {"flagged", report.summary.flagged},
                  {"flagged_records", std::move(flagged)}};
  return j.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& report) {
  std::string out = "id,params,status,exact_zero,float_dev,note\n";
  char buf[32];
  for (const auto& r : report.records) {
    std::snprintf(buf, sizeof buf, "%.6e", r.float_dev);
    out += csv_escape(r.identity_id) + "," + csv_escape(params_text(r.params)) + "," + to_string(r.status) + "," +
           (r.exact_zero ? "true" : "false") + "," + buf + "," + csv_escape(r.note) + "\n";
  }
  return out;
}

}  // namespace ylm
