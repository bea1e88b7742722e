#include "tangle/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <thread>
#include <tuple>

#include "tangle/closed_form.hpp"
#include "tangle/errors.hpp"

namespace tangle {

void validate(const SweepGrid& grid) {
  if (grid.alphas.empty()) throw ValidationError("sweep grid: no alpha values");
  for (double a : grid.alphas) {
    if (!(a > 0.0 && a < 1.0)) throw ValidationError("sweep grid: alpha " + std::to_string(a) + " outside (0, 1)");
  }
  if (grid.r_steps < 2) throw ValidationError("sweep grid: r_steps must be at least 2");
  if (!(grid.r_min >= 0.0) || !(grid.r_max >= grid.r_min)) {
    throw ValidationError("sweep grid: need 0 <= r_min <= r_max");
  }
  const double cap = grid.field == Field::Dirac ? kDiracRMax : kScalarRCap;
  if (grid.r_max > cap * (1.0 + 1e-15)) {
    throw ValidationError("sweep grid: r_max " + std::to_string(grid.r_max) + " exceeds " + std::to_string(cap) +
                          " for the " + std::string(to_string(grid.field)) + " field");
  }
  if (!grid.numeric && !grid.closed_form) throw ValidationError("sweep grid: no evaluation method selected");
  if (!(grid.eps_norm > 0.0)) throw ValidationError("sweep grid: eps_norm must be positive");
}

std::vector<double> r_values(const SweepGrid& grid) {
  std::vector<double> rs(grid.r_steps);
  const double step = (grid.r_max - grid.r_min) / static_cast<double>(grid.r_steps - 1);
  for (std::size_t i = 0; i < grid.r_steps; ++i) rs[i] = grid.r_min + step * static_cast<double>(i);
  rs.back() = grid.r_max;
  return rs;
}

std::vector<SweepRow> run_sweep(const SweepGrid& grid, const Tolerances& tol, std::size_t threads) {
  validate(grid);
  Tolerances point_tol = tol;
  point_tol.eps_norm = grid.eps_norm;

  std::vector<SweepRow> rows;
  for (double alpha : grid.alphas) {
    for (double r : r_values(grid)) {
      if (grid.numeric) rows.push_back({grid.field, alpha, r, Method::Numeric, std::nullopt, {}});
      if (grid.closed_form) rows.push_back({grid.field, alpha, r, Method::ClosedForm, std::nullopt, {}});
    }
  }

  // Each worker claims row indices from a shared counter and writes only its
  // own rows, so no two threads touch the same element.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      auto& row = rows[i];
      const ScenarioParams params{row.field, row.alpha, row.r, {}};
      try {
        row.report = row.method == Method::Numeric ? evaluate_numeric(params, point_tol)
                                                   : evaluate_closed_form(params, point_tol);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, rows.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.alpha, a.r, a.method) < std::tie(b.alpha, b.r, b.method);
  });
  return rows;
}

namespace {

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string quoted(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += (c == '\n' || c == '\r') ? ' ' : c;
  }
  return out + '"';
}

}  // namespace

std::string format_csv(std::span<const SweepRow> rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& row : rows) {
    out += std::string(to_string(row.field)) + ',' + number(row.alpha) + ',' + number(row.r) + ',' +
           std::string(to_string(row.method)) + ',';
    if (row.report) {
      const auto& rep = *row.report;
      for (double v : rep.one_tangles) out += number(v) + ',';
      for (double v : rep.two_tangles) out += number(v) + ',';
      for (double v : rep.residuals) out += number(v) + ',';
      out += number(rep.pi_tangle) + ',';
      out += rep.all_ckw_ok() ? "true," : "false,";
      out += std::to_string(rep.truncation ? rep.truncation->n_max : 0) + ',';
      out += number(rep.truncation ? rep.truncation->tail_bound : 0.0) + ',';
    } else {
      out += std::string(13, ',');
    }
    out += quoted(row.error) + '\n';
  }
  return out;
}

void write_csv(const std::filesystem::path& path, std::span<const SweepRow> rows) {
  const auto text = format_csv(rows);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) throw IoError("failed writing '" + path.string() + "'");
}

std::vector<SweepRow> cmd_sweep(const SweepGrid& grid, const Tolerances& tol, std::size_t threads) {
  validate(grid);
  if (grid.output_path.empty()) throw ValidationError("sweep grid: no output path");
  auto rows = run_sweep(grid, tol, threads);
  write_csv(grid.output_path, rows);
  return rows;
}

std::array<double, 7> figure_alphas() {
  return {1.0 / std::sqrt(22.0), 1.0 / std::sqrt(10.0), 1.0 / std::sqrt(5.0), 1.0 / std::sqrt(2.0),
          2.0 / std::sqrt(5.0),  3.0 / std::sqrt(10.0), std::sqrt(21.0 / 22.0)};
}

std::vector<std::filesystem::path> cmd_figures(const std::filesystem::path& output_dir, const FigureOptions& options,
                                               const Tolerances& tol, std::size_t threads) {
  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);
  if (ec) throw IoError("cannot create '" + output_dir.string() + "': " + ec.message());

  const auto alphas = figure_alphas();
  auto grid_for = [&](Field field, double r_max) {
    SweepGrid grid;
    grid.field = field;
    grid.alphas.assign(alphas.begin(), alphas.end());
    grid.r_max = r_max;
    grid.r_steps = options.r_steps;
    grid.numeric = options.method == Method::Numeric;
    grid.closed_form = options.method == Method::ClosedForm;
    grid.eps_norm = tol.eps_norm;
    return grid;
  };

  // Figures 1 and 2 (and 3 and 4) are views of the same sweep.
  const auto dirac = run_sweep(grid_for(Field::Dirac, kDiracRMax), tol, threads);
  const auto scalar = run_sweep(grid_for(Field::Scalar, options.scalar_r_max), tol, threads);
  std::vector<std::filesystem::path> written;
  const std::pair<const char*, const std::vector<SweepRow>*> files[] = {
      {"fig1.csv", &dirac}, {"fig2.csv", &dirac}, {"fig3.csv", &scalar}, {"fig4.csv", &scalar}};
  for (const auto& [name, rows] : files) {
    written.push_back(output_dir / name);
    write_csv(written.back(), *rows);
  }
  return written;
}

}  // namespace tangle
