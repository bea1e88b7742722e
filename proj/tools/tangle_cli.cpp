// tangle: parameter sweeps, figure data and the invariant suite.
//
// Exit codes: 0 success, 1 validation error, 2 verification failure, 3 I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tangle/errors.hpp"
#include "tangle/sweep.hpp"
#include "tangle/verify.hpp"

namespace {

enum Exit { kOk = 0, kValidation = 1, kVerifyFailed = 2, kIo = 3 };

struct ToleranceFlags {
  std::optional<double> herm, eig, series, ckw, all;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--tol-herm", herm, "Hermiticity tolerance")->check(CLI::PositiveNumber);
    cmd.add_option("--tol-eig", eig, "eigensolver convergence tolerance")->check(CLI::PositiveNumber);
    cmd.add_option("--tol-series", series, "series truncation tolerance")->check(CLI::PositiveNumber);
    cmd.add_option("--tol-ckw", ckw, "CKW slack")->check(CLI::PositiveNumber);
  }

  tangle::Tolerances resolve() const {
    tangle::Tolerances tol;
    if (herm) tol.herm = *herm;
    if (eig) tol.eig = *eig;
    if (series) tol.series = *series;
    if (ckw) tol.ckw = *ckw;
    return tol;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tripartite entanglement in Rindler frames: sweeps, figure data, invariant checks"};
  app.require_subcommand(1);
  std::size_t threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = hardware concurrency)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "evaluate a (alpha, r) grid and write CSV");
  std::string field = "dirac";
  std::vector<double> alphas;
  tangle::SweepGrid grid;
  std::string method = "both";
  std::string out;
  ToleranceFlags sweep_tol;
  sweep->add_option("--field", field, "dirac or scalar")->check(CLI::IsMember({"dirac", "scalar"}));
  sweep->add_option("--alpha", alphas, "amplitude of |000>, repeatable")->required()->take_all();
  sweep->add_option("--r-min", grid.r_min, "first r")->capture_default_str();
  sweep->add_option("--r-max", grid.r_max, "last r")->required();
  sweep->add_option("--r-steps", grid.r_steps, "number of r values")->capture_default_str();
  sweep->add_option("--method", method, "numeric, closed or both")
      ->check(CLI::IsMember({"numeric", "closed", "both"}))
      ->capture_default_str();
  sweep->add_option("--eps-norm", grid.eps_norm, "boson truncation budget")->capture_default_str();
  sweep->add_option("--out", out, "CSV path")->required();
  sweep_tol.add_to(*sweep);

  // figures
  auto* figures = app.add_subcommand("figures", "write fig1.csv .. fig4.csv");
  std::string fig_dir = ".";
  tangle::FigureOptions fig_options;
  std::string fig_method = "numeric";
  double fig_eps = 1e-10;
  ToleranceFlags fig_tol;
  figures->add_option("--out", fig_dir, "output directory")->capture_default_str();
  figures->add_option("--r-steps", fig_options.r_steps, "r values per curve")->capture_default_str();
  figures->add_option("--scalar-r-max", fig_options.scalar_r_max, "last r of the scalar figures")->capture_default_str();
  figures->add_option("--method", fig_method, "numeric or closed")
      ->check(CLI::IsMember({"numeric", "closed"}))
      ->capture_default_str();
  figures->add_option("--eps-norm", fig_eps, "boson truncation budget")->capture_default_str();
  fig_tol.add_to(*figures);

  // verify
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  tangle::VerifyOptions verify_options;
  ToleranceFlags verify_tol;
  std::optional<double> tol_all;
  verify->add_option("--seed", verify_options.seed, "seed for random test matrices")->capture_default_str();
  verify->add_option("--tol-all", tol_all, "replace the limit of every accuracy check")->check(CLI::PositiveNumber);
  verify_tol.add_to(*verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*sweep) {
      grid.field = tangle::parse_field(field);
      grid.alphas = alphas;
      grid.numeric = method != "closed";
      grid.closed_form = method != "numeric";
      grid.output_path = out;
      const auto rows = tangle::cmd_sweep(grid, sweep_tol.resolve(), threads);
      std::size_t failed = 0;
      for (const auto& row : rows) failed += !row.report.has_value();
      std::cout << "wrote " << rows.size() << " rows to " << out;
      if (failed) std::cout << " (" << failed << " rows with errors)";
      std::cout << '\n';
    } else if (*figures) {
      fig_options.method = fig_method == "closed" ? tangle::Method::ClosedForm : tangle::Method::Numeric;
      auto tol = fig_tol.resolve();
      tol.eps_norm = fig_eps;
      for (const auto& path : tangle::cmd_figures(fig_dir, fig_options, tol, threads)) {
        std::cout << "wrote " << path.string() << '\n';
      }
    } else if (*verify) {
      verify_options.tol = verify_tol.resolve();
      verify_options.check_tolerance = tol_all;
      const auto report = tangle::cmd_verify(verify_options);
      std::cout << report.format();
      return report.passed() ? kOk : kVerifyFailed;
    }
  } catch (const tangle::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const tangle::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const tangle::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
