#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/measures.hpp"
#include "tangle/rindler.hpp"
#include "tangle/tolerances.hpp"

namespace tangle {

struct SweepGrid {
  Field field = Field::Dirac;
  std::vector<double> alphas;
  double r_min = 0.0;
  double r_max = 0.0;
  std::size_t r_steps = 2;
  bool numeric = true;
  bool closed_form = true;
  double eps_norm = 1e-10;
  std::filesystem::path output_path;
};

/// Throws ValidationError describing the first violated constraint.
void validate(const SweepGrid& grid);

/// r_steps evenly spaced values; the last one is exactly r_max.
std::vector<double> r_values(const SweepGrid& grid);

struct SweepRow {
  Field field = Field::Dirac;
  double alpha = 0.0;
  double r = 0.0;
  Method method = Method::Numeric;
  std::optional<TangleReport> report;  // empty when the point failed
  std::string error;
};

inline constexpr std::string_view kCsvHeader =
    "field,alpha,r,method,N_A_BC,N_B_AC,N_C_AB,N_AB,N_AC,N_BC,pi_A,pi_B,pi_C,pi_tangle,ckw_ok,n_max,tail_bound,error";

/// Evaluates every (alpha, r, method) point, concurrently when threads != 1
/// (0 = hardware concurrency). Rows come back ordered by (alpha, r, method)
/// whatever the scheduling. Per-point failures land in SweepRow::error.
std::vector<SweepRow> run_sweep(const SweepGrid& grid, const Tolerances& tol = {}, std::size_t threads = 0);

std::string format_csv(std::span<const SweepRow> rows);
void write_csv(const std::filesystem::path& path, std::span<const SweepRow> rows);

/// Validate, run, write grid.output_path. Nothing is written if validation fails.
std::vector<SweepRow> cmd_sweep(const SweepGrid& grid, const Tolerances& tol = {}, std::size_t threads = 0);

/// Entanglement parameters drawn in the published figures, ascending:
/// 1/sqrt22, 1/sqrt10, 1/sqrt5, 1/sqrt2, 2/sqrt5, 3/sqrt10, sqrt(21/22).
std::array<double, 7> figure_alphas();

struct FigureOptions {
  std::size_t r_steps = 101;
  double scalar_r_max = 3.0;
  Method method = Method::Numeric;
};

/// Writes fig1.csv .. fig4.csv into output_dir: Dirac one-tangles, Dirac
/// pi-tangle, scalar one-tangles, scalar pi-tangle. All use the sweep schema.
std::vector<std::filesystem::path> cmd_figures(const std::filesystem::path& output_dir,
                                               const FigureOptions& options = {}, const Tolerances& tol = {},
                                               std::size_t threads = 0);

}  // namespace tangle
