#pragma once
// Named, reproducible experiment runs: empirical-versus-analytic CDF overlay,
// ergodic-capacity sweep, hardening sweep, and the dependency-condition check.
// A run is a pure function of (grid, trials, seed).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sra/channel.hpp"
#include "sra/evt.hpp"

namespace sra {

// Per-config results. Fields that do not apply (or that a regime violation
// prevented) are NaN; `valid` is false and `error` set when the analytic
// pipeline failed for the cell.
struct CellMetrics {
  int apertures = 0;
  int antennas = 0;
  double snr_db = 0.0;
  double snr = 1.0;
  bool valid = false;
  std::string error;

  double empirical_mean = 0.0;
  double empirical_variance = 0.0;
  double std_error = 0.0;
  double ks = 0.0;
  double rel_deviation = 0.0;  // |empirical_mean - mu| / empirical_mean

  double analytic_mu = 0.0;        // bits
  double analytic_sigma = 0.0;     // bits
  double analytic_variance = 0.0;  // pi^2 sigma^2 / 6
  double beta = 0.0;
  double gumbel_location = 0.0;
  double gumbel_scale = 0.0;
};

struct CurvePoint {
  double x = 0.0;
  double empirical = 0.0;
  double analytic = 0.0;
};

struct ExperimentResult {
  std::string name;
  std::uint64_t seed = 0;
  int trials = 0;
  std::string note;

  std::vector<CellMetrics> metrics;
  // Parallel to `metrics`; empty vectors where no curve applies.
  std::vector<std::vector<CurvePoint>> curves;
  // Dependency-check runs only.
  std::vector<DependencySweepRow> dependency;
  // Whether the dependency sweep decreases monotonically within stderr slack.
  std::optional<bool> dependency_trend_decreasing;
};

// Empirical CDF of the mutual information against the limiting Gumbel law,
// one cell per antenna count. Curves hold 512 points spanning the 0.001-0.999
// empirical quantiles. snr_db_display overrides the dB column (use when the
// caller parsed a dB value and wants it echoed exactly).
ExperimentResult run_cdf_comparison(int apertures, std::span<const int> antenna_list,
                                    double snr, int trials, std::uint64_t seed,
                                    double snr_db_display =
                                        std::numeric_limits<double>::quiet_NaN());

// Empirical mean of the mutual information versus the analytic mean over an
// SNR (dB) grid. Channel draws are SNR-independent, so each antenna count is
// simulated once and remapped per SNR point; that is bit-identical to a fresh
// per-cell run at the same seed.
ExperimentResult run_ergodic_capacity_sweep(int apertures, std::span<const int> antenna_list,
                                            std::span<const double> snr_db_grid, int trials,
                                            std::uint64_t seed);

// Empirical and analytic variance of the mutual information as the aperture
// count grows at a fixed antenna count.
ExperimentResult run_hardening_sweep(int antennas, std::span<const int> aperture_list,
                                     double snr, int trials, std::uint64_t seed,
                                     double snr_db_display =
                                         std::numeric_limits<double>::quiet_NaN());

// Dependency-measure sweep at the window-CDF quantile levels
// {0.9, 0.99, 0.999, 0.9999}.
ExperimentResult run_dependency_check(const SystemConfig& config, int trials,
                                      std::uint64_t seed);

}  // namespace sra
