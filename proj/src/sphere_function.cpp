#include "ylm/sphere_function.hpp"

#include <cmath>
#include <cstdlib>

namespace ylm {

namespace {

std::string phase_text(int m) {
  if (m == 0) return "";
  if (m == 1) return "·e^(iφ)";
  if (m == -1) return "·e^(-iφ)";
  return "·e^(" + std::to_string(m) + "iφ)";
}

std::string phase_latex(int m) {
  if (m == 0) return "";
  if (m == 1) return "\\,e^{i\\phi}";
  if (m == -1) return "\\,e^{-i\\phi}";
  return "\\,e^{" + std::to_string(m) + "i\\phi}";
}

std::string cos_text(std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return "·cosθ";
  return "·cos^" + std::to_string(k) + "θ";
}

std::string cos_latex(std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return "\\cos\\theta";
  return "\\cos^{" + std::to_string(k) + "}\\theta";
}

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

// ------------------------------------------------------------------ ThetaForm

ThetaForm ThetaForm::sin_pow(int n) {
  if (n < 0) throw std::domain_error("negative sin power");
  if (n % 2 == 0) return {Polynomial::one_minus_x2_pow(n / 2), {}};
  return {{}, Polynomial::one_minus_x2_pow(n / 2)};
}

ThetaForm& ThetaForm::operator+=(const ThetaForm& o) {
  even_ += o.even_;
  odd_ += o.odd_;
  return *this;
}

ThetaForm& ThetaForm::operator-=(const ThetaForm& o) {
  even_ -= o.even_;
  odd_ -= o.odd_;
  return *this;
}

ThetaForm& ThetaForm::operator*=(const Scalar& s) {
  even_ *= s;
  odd_ *= s;
  return *this;
}

ThetaForm operator*(const ThetaForm& a, const ThetaForm& b) {
  // (a + s b)(c + s d) = ac + (1 - x^2) bd + s (ad + bc)
  Polynomial even = a.even_ * b.even_ + (a.odd_ * b.odd_).times_one_minus_x2();
  Polynomial odd = a.even_ * b.odd_ + a.odd_ * b.even_;
  return {std::move(even), std::move(odd)};
}

double ThetaForm::eval(double theta) const {
  const double x = std::cos(theta);
  return even_.eval(x) + std::sin(theta) * odd_.eval(x);
}

ThetaForm theta_derivative(const ThetaForm& f) {
  Polynomial even = f.odd().times_x() - f.odd().derivative().times_one_minus_x2();
  Polynomial odd = -f.even().derivative();
  return {std::move(even), std::move(odd)};
}

ThetaForm theta_div_sin(const ThetaForm& f) {
  // (p + s q)/s = q + s r  where p = (1 - x^2) r
  Polynomial r;
  if (!f.even().divide_one_minus_x2(r))
    throw NonSmoothResult("division by sin(theta) leaves the smooth function algebra");
  return {f.odd(), std::move(r)};
}

// ------------------------------------------------------------- SphereFunction

SphereFunction::SphereFunction(ModeMap modes) {
  for (auto& [m, form] : modes)
    if (!form.is_zero()) modes_.emplace(m, std::move(form));
}

SphereFunction SphereFunction::single(int m, ThetaForm form) {
  SphereFunction f;
  f.accumulate(m, form);
  return f;
}

ThetaForm SphereFunction::mode(int m) const {
  auto it = modes_.find(m);
  return it == modes_.end() ? ThetaForm{} : it->second;
}

void SphereFunction::accumulate(int m, const ThetaForm& form) {
  if (form.is_zero()) return;
  auto [it, inserted] = modes_.try_emplace(m, form);
  if (!inserted) {
    it->second += form;
    if (it->second.is_zero()) modes_.erase(it);
  }
}

SphereFunction SphereFunction::operator-() const {
  SphereFunction out = *this;
  for (auto& [m, form] : out.modes_) form = -form;
  return out;
}

SphereFunction& SphereFunction::operator+=(const SphereFunction& o) {
  for (const auto& [m, form] : o.modes_) accumulate(m, form);
  return *this;
}

SphereFunction& SphereFunction::operator-=(const SphereFunction& o) {
  for (const auto& [m, form] : o.modes_) accumulate(m, -form);
  return *this;
}

SphereFunction& SphereFunction::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    modes_.clear();
    return *this;
  }
  for (auto& [m, form] : modes_) form *= s;
  return *this;
}

SphereFunction operator*(const SphereFunction& a, const SphereFunction& b) {
  SphereFunction out;
  for (const auto& [ma, fa] : a.modes_)
    for (const auto& [mb, fb] : b.modes_) out.accumulate(ma + mb, fa * fb);
  return out;
}

bool SphereFunction::has_smooth_parity() const {
  for (const auto& [m, form] : modes_) {
    if (std::abs(m) % 2 == 1 && !form.even().is_zero()) return false;
    if (std::abs(m) % 2 == 0 && !form.odd().is_zero()) return false;
  }
  return true;
}

std::string SphereFunction::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  auto emit = [&](const Scalar& c, bool with_sin, std::size_t k, int m) {
    const bool negative = c.is_monomial() && c.body().terms().front().coeff < 0;
    if (out.empty())
      out += c.to_string();
    else
      out += negative ? " - " + (-c).to_string() : " + " + c.to_string();
    if (with_sin) out += "·sinθ";
    out += cos_text(k) + phase_text(m);
  };
  for (const auto& [m, form] : modes_) {
    const auto& e = form.even().coeffs();
    for (std::size_t k = 0; k < e.size(); ++k)
      if (!e[k].is_zero()) emit(e[k], false, k, m);
    const auto& o = form.odd().coeffs();
    for (std::size_t k = 0; k < o.size(); ++k)
      if (!o[k].is_zero()) emit(o[k], true, k, m);
  }
  return out;
}

std::string SphereFunction::to_latex() const {
  if (is_zero()) return "0";
  std::string out;
  auto emit = [&](const Scalar& c, bool with_sin, std::size_t k, int m) {
    std::string t = c.to_latex();
    if (!out.empty() && t.front() != '-') out += "+";
    out += t;
    if (with_sin) out += "\\sin\\theta";
    out += cos_latex(k) + phase_latex(m);
  };
  for (const auto& [m, form] : modes_) {
    const auto& e = form.even().coeffs();
    for (std::size_t k = 0; k < e.size(); ++k)
      if (!e[k].is_zero()) emit(e[k], false, k, m);
    const auto& o = form.odd().coeffs();
    for (std::size_t k = 0; k < o.size(); ++k)
      if (!o[k].is_zero()) emit(o[k], true, k, m);
  }
  return out;
}

bool sphere_equal(const SphereFunction& f, const SphereFunction& g) { return (f - g).is_zero(); }

std::complex<double> sphere_eval(const SphereFunction& f, double theta, double phi) {
  return NumericSphereFunction(f)(theta, phi);
}

SphereFunction parity_reflect(const SphereFunction& f) {
  SphereFunction out;
  for (const auto& [m, form] : f.modes()) {
    ThetaForm r(form.even().reflect(), form.odd().reflect());
    if (m % 2 != 0) r = -r;
    out.accumulate(m, r);
  }
  return out;
}

// ------------------------------------------------------ NumericSphereFunction

NumericSphereFunction::NumericSphereFunction(const SphereFunction& f) {
  for (const auto& [m, form] : f.modes()) {
    Mode mode{m, {}, {}};
    for (const auto& c : form.even().coeffs()) mode.even.push_back(c.to_double());
    for (const auto& c : form.odd().coeffs()) mode.odd.push_back(c.to_double());
    modes_.push_back(std::move(mode));
  }
}

double NumericSphereFunction::mode_value(std::size_t index, double theta) const {
  const auto& mode = modes_[index];
  const double x = std::cos(theta);
  return horner(mode.even, x) + std::sin(theta) * horner(mode.odd, x);
}

std::complex<double> NumericSphereFunction::operator()(double theta, double phi) const {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < modes_.size(); ++i)
    acc += mode_value(i, theta) * std::complex<double>(std::cos(modes_[i].m * phi), std::sin(modes_[i].m * phi));
  return acc;
}

}  // namespace ylm
