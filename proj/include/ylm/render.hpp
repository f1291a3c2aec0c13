#pragma once

// Text renderings behind the `generate` and `table` subcommands.

#include <stdexcept>
#include <string>

#include "ylm/harmonics.hpp"

namespace ylm {

struct UnknownFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class GenerateForm { exact, latex, numeric_grid };

/// Throws std::invalid_argument on unknown names.
GenerateForm parse_form(const std::string& name);

/// Y_l^m as exact text, LaTeX, or CSV samples on the grid
/// theta_i = i pi / (n_theta - 1), phi_j = 2 pi j / n_phi.
/// Throws IndexOutOfRange unless |m| <= l.
std::string cmd_generate(long l, long m, GenerateForm form, int n_theta = 9, int n_phi = 8);

/// CSV of ladder coefficients for one operator family, obtained by projecting
/// op(source) onto the target harmonic. Families: Lplus, Lminus, Jplus, Jminus,
/// Kplus-dN, Kminus-dN, Iplus-sN, Iminus-sN, App, Amm, Amp, Apm.
/// Throws UnknownFamily.
std::string cmd_table(const std::string& family, long l_max);

/// A real single-radical scalar c as "√N", "√(p/q)", "-√(...)" or "0".
std::string radical_text(const Scalar& c);

}  // namespace ylm
