#include "ylm/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>

#include "ylm/inner_product.hpp"

namespace ylm {

namespace {

struct Step {
  HarmonicIndex row;
  HarmonicIndex source;
  HarmonicIndex target;
  LadderOperator op;
};

struct FamilySpec {
  enum Kind { L_plus, L_minus, J_plus, J_minus, K_plus, K_minus, I_plus, I_minus, App, Amm, Amp, Apm } kind;
  long parameter = 0;
};

std::optional<long> suffix_number(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
  long v = 0;
  for (std::size_t i = prefix.size(); i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    v = v * 10 + (name[i] - '0');
    if (v > 1'000'000) return std::nullopt;
  }
  if (v < 1) return std::nullopt;
  return v;
}

FamilySpec parse_family(const std::string& name) {
  if (name == "Lplus") return {FamilySpec::L_plus};
  if (name == "Lminus") return {FamilySpec::L_minus};
  if (name == "Jplus") return {FamilySpec::J_plus};
  if (name == "Jminus") return {FamilySpec::J_minus};
  if (name == "App") return {FamilySpec::App};
  if (name == "Amm") return {FamilySpec::Amm};
  if (name == "Amp") return {FamilySpec::Amp};
  if (name == "Apm") return {FamilySpec::Apm};
  if (auto d = suffix_number(name, "Kplus-d")) return {FamilySpec::K_plus, *d};
  if (auto d = suffix_number(name, "Kminus-d")) return {FamilySpec::K_minus, *d};
  if (auto s = suffix_number(name, "Iplus-s")) return {FamilySpec::I_plus, *s};
  if (auto s = suffix_number(name, "Iminus-s")) return {FamilySpec::I_minus, *s};
  throw UnknownFamily("unknown operator family: " + name);
}

/// Rows in (l, m) order; a step whose partner index is invalid is skipped.
std::vector<Step> steps(const FamilySpec& f, long l_max) {
  std::vector<Step> out;
  auto push = [&](HarmonicIndex row, HarmonicIndex source, HarmonicIndex target, LadderOperator op) {
    if (source.valid() && target.valid()) out.push_back({row, source, target, std::move(op)});
  };
  if (f.kind == FamilySpec::K_plus || f.kind == FamilySpec::K_minus) {
    for (const auto& idx : enumerate_subspace({Subspace::d_plus, f.parameter}, l_max)) {
      const HarmonicIndex lower{idx.l - 1, idx.m - 1};
      if (f.kind == FamilySpec::K_plus)
        push(idx, lower, idx, make_K(f.parameter, Sign::plus));
      else
        push(idx, idx, lower, make_K(f.parameter, Sign::minus));
    }
    return out;
  }
  if (f.kind == FamilySpec::I_plus || f.kind == FamilySpec::I_minus) {
    for (const auto& idx : enumerate_subspace({Subspace::s_minus, f.parameter}, l_max)) {
      const HarmonicIndex next{idx.l + 1, idx.m - 1};
      if (f.kind == FamilySpec::I_plus)
        push(idx, next, idx, make_I(f.parameter, Sign::plus));
      else
        push(idx, idx, next, make_I(f.parameter, Sign::minus));
    }
    return out;
  }
  for (const auto& idx : all_indices(l_max)) {
    const long l = idx.l;
    const long m = idx.m;
    switch (f.kind) {
      case FamilySpec::L_plus: push(idx, {l, m - 1}, idx, make_su2(Su2::plus)); break;
      case FamilySpec::L_minus: push(idx, idx, {l, m - 1}, make_su2(Su2::minus)); break;
      case FamilySpec::J_plus: push(idx, {l - 1, m}, idx, make_J(l, Sign::plus)); break;
      case FamilySpec::J_minus: push(idx, idx, {l - 1, m}, make_J(l, Sign::minus)); break;
      case FamilySpec::App: push(idx, {l - 1, m - 1}, idx, make_A(l, MixedKind::pp)); break;
      case FamilySpec::Amm: push(idx, idx, {l - 1, m - 1}, make_A(l, MixedKind::mm)); break;
      case FamilySpec::Amp: push(idx, {l + 1, m - 1}, idx, make_A(l + 1, MixedKind::mp)); break;
      case FamilySpec::Apm: push(idx, idx, {l + 1, m - 1}, make_A(l + 1, MixedKind::pm)); break;
      default: break;
    }
  }
  return out;
}

std::string fixed(double v, const char* fmt = "%.10f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

}  // namespace

GenerateForm parse_form(const std::string& name) {
  if (name == "exact") return GenerateForm::exact;
  if (name == "latex") return GenerateForm::latex;
  if (name == "numeric-grid") return GenerateForm::numeric_grid;
  throw std::invalid_argument("unknown form: " + name);
}

std::string radical_text(const Scalar& c) {
  if (c.is_zero()) return "0";
  if (c.pi_exponent() == 0 && c.body().is_rational()) return c.body().rational_part().get_str();
  const Scalar sq = c * c;
  if (sq.pi_exponent() != 0 || !sq.body().is_rational())
    return c.to_string();  // not a single real radical
  const Rational v = sq.body().rational_part();
  std::string s = c.to_double() < 0 ? "-√" : "√";
  if (v.get_den() == 1) return s + v.get_num().get_str();
  return s + "(" + v.get_str() + ")";
}

std::string cmd_generate(long l, long m, GenerateForm form, int n_theta, int n_phi) {
  if (!HarmonicIndex{l, m}.valid())
    throw IndexOutOfRange("generate: need |m| <= l, got l=" + std::to_string(l) + " m=" + std::to_string(m));
  const SphereFunction y = closed_form(l, m);
  switch (form) {
    case GenerateForm::exact: return y.to_string() + "\n";
    case GenerateForm::latex: return y.to_latex() + "\n";
    case GenerateForm::numeric_grid: break;
  }
  if (n_theta < 2 || n_phi < 1) throw std::invalid_argument("grid needs n_theta >= 2 and n_phi >= 1");
  const NumericSphereFunction ny(y);
  std::string out = "theta,phi,re,im\n";
  for (int i = 0; i < n_theta; ++i) {
    const double theta = i * std::numbers::pi / (n_theta - 1);
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / n_phi;
      const auto v = ny(theta, phi);
      // no "-0.0000000000" for values below the printed precision
      const double re = std::abs(v.real()) < 5e-11 ? 0.0 : v.real();
      const double im = std::abs(v.imag()) < 5e-11 ? 0.0 : v.imag();
      out += fixed(theta) + "," + fixed(phi) + "," + fixed(re) + "," + fixed(im) + "\n";
    }
  }
  return out;
}

std::string cmd_table(const std::string& family, long l_max) {
  const FamilySpec fam = parse_family(family);
  if (l_max < 0) throw std::invalid_argument("table: lmax must be >= 0");
  std::string out = "l,m,source_l,source_m,target_l,target_m,coefficient,value,proportional\n";
  for (const auto& st : steps(fam, l_max)) {
    const SphereFunction image = apply_operator(st.op, closed_form(st.source));
    const SphereFunction target = closed_form(st.target);
    const Scalar c = inner_exact(target, image);
    const bool proportional = sphere_equal(image, c * target);
    out += std::to_string(st.row.l) + "," + std::to_string(st.row.m) + "," + std::to_string(st.source.l) + "," +
           std::to_string(st.source.m) + "," + std::to_string(st.target.l) + "," + std::to_string(st.target.m) +
           "," + radical_text(c) + "," + fixed(c.to_double(), "%.8f") + "," + (proportional ? "true" : "false") +
           "\n";
  }
  return out;
}

}  // namespace ylm
