#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ylm/render.hpp"
#include "ylm/verify.hpp"

namespace {

int write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return 2;
  }
  out << text;
  return out ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spherical harmonics and ladder-operator identity checks"};
  app.set_version_flag("--version", std::string(YLM_VERSION));
  app.require_subcommand(1);

  ylm::SuiteConfig cfg;
  std::string suite = "all";
  std::string format = "json";
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Run identity suites and emit a report");
  verify->add_option("--suite", suite, "su2|ladder-l|u11-K|u11-I|mixed-A|adjoint|orthonormality|generation|parity|all")
      ->capture_default_str();
  verify->add_option("--lmax", cfg.l_max, "Largest degree l")->capture_default_str();
  verify->add_option("--dmax", cfg.d_max, "Largest K-family label d")->capture_default_str();
  verify->add_option("--smax", cfg.s_max, "Largest I-family label s")->capture_default_str();
  verify->add_option("--trials", cfg.random_trials, "Random smooth test functions")->capture_default_str();
  verify->add_option("--pairs", cfg.adjoint_pairs, "Random function pairs for adjoint checks")
      ->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Seed for random test functions")->capture_default_str();
  verify->add_option("--tol", cfg.numeric_tolerance, "Numeric cross-check tolerance")->capture_default_str();
  verify->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  verify->add_option("--out", out_path, "Output file (default stdout)");

  long l = 0;
  long m = 0;
  std::string form = "exact";
  int n_theta = 9;
  int n_phi = 8;
  auto* generate = app.add_subcommand("generate", "Print one harmonic Y_l^m");
  generate->add_option("--l", l, "Degree")->required();
  generate->add_option("--m", m, "Order")->required();
  generate->add_option("--form", form, "exact|latex|numeric-grid")
      ->check(CLI::IsMember({"exact", "latex", "numeric-grid"}))
      ->capture_default_str();
  generate->add_option("--ntheta", n_theta, "Grid points in theta, endpoints included")->capture_default_str();
  generate->add_option("--nphi", n_phi, "Grid points in phi")->capture_default_str();

  std::string family;
  long table_lmax = 4;
  auto* table = app.add_subcommand("table", "Ladder coefficient table for one operator family");
  table->add_option("--family", family, "Lplus|Lminus|Jplus|Jminus|Kplus-dN|Kminus-dN|Iplus-sN|Iminus-sN|App|Amm|Amp|Apm")
      ->required();
  table->add_option("--lmax", table_lmax, "Largest degree l")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      cfg.suite = ylm::parse_suite(suite);
      const auto report = ylm::run_suite(cfg);
      const std::string text = format == "csv" ? ylm::to_csv(report) : ylm::to_json(report);
      if (int rc = write_output(text, out_path); rc != 0) return rc;
      std::cerr << "pass " << report.summary.pass << ", fail " << report.summary.fail << ", flagged "
                << report.summary.flagged << "\n";
      return report.summary.fail == 0 ? 0 : 1;
    }
    if (generate->parsed()) {
      std::cout << ylm::cmd_generate(l, m, ylm::parse_form(form), n_theta, n_phi);
      return 0;
    }
    if (table->parsed()) {
      std::cout << ylm::cmd_table(family, table_lmax);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
