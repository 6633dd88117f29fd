#include "sra/evt.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace sra {

namespace {

constexpr double kEulerGamma = std::numbers::egamma;
constexpr double kLog2E = std::numbers::log2e;

// Exact in double up to 22!; antenna counts stay far below that.
double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

void require_antennas(int antennas) {
  if (antennas < 1) {
    throw std::domain_error("antenna count must be a positive integer, got " +
                            std::to_string(antennas));
  }
}

// Window-gain density z^(a-1) e^-z / (a-1)!; used by the quantile Newton step.
double window_pdf(double z, int antennas) {
  if (z < 0.0) return 0.0;
  if (antennas == 1) return std::exp(-z);
  if (z == 0.0) return 0.0;
  return std::exp((antennas - 1) * std::log(z) - z - std::lgamma(antennas));
}

}  // namespace

void validate(const SystemConfig& config) {
  if (config.antennas < 1) {
    throw std::invalid_argument("antennas must be >= 1, got " +
                                std::to_string(config.antennas));
  }
  if (config.apertures < config.antennas) {
    throw std::invalid_argument("apertures (" + std::to_string(config.apertures) +
                                ") must be >= antennas (" +
                                std::to_string(config.antennas) + ")");
  }
  if (!(config.snr > 0.0) || !std::isfinite(config.snr)) {
    throw std::invalid_argument("snr must be positive and finite");
  }
}

namespace {

// e^-z * sum_{k<antennas} z^k/k!, accumulated in extended precision. The
// leading factor is applied to the first term so huge z cannot overflow the
// partial sums.
long double window_survival(double z, int antennas) {
  long double term = std::exp(static_cast<long double>(-z));
  long double sum = term;
  for (int k = 1; k < antennas; ++k) {
    term *= static_cast<long double>(z) / k;
    sum += term;
  }
  return sum;
}

}  // namespace

double chi_squared_window_sf(double z, int antennas) {
  require_antennas(antennas);
  if (z < 0.0) return 1.0;
  return static_cast<double>(window_survival(z, antennas));
}

double chi_squared_window_cdf(double z, int antennas) {
  require_antennas(antennas);
  if (z < 0.0) return 0.0;
  return static_cast<double>(1.0L - window_survival(z, antennas));
}

double chi_squared_window_quantile(double p, int antennas) {
  require_antennas(antennas);
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("quantile level must lie in (0,1)");
  }
  // Bracket, then safeguarded Newton from the mean.
  double lo = 0.0;
  double hi = static_cast<double>(antennas);
  while (chi_squared_window_cdf(hi, antennas) < p) {
    lo = hi;
    hi *= 2.0;
  }
  double z = 0.5 * (lo + hi);
  for (int it = 0; it < 128; ++it) {
    const double f = chi_squared_window_cdf(z, antennas) - p;
    if (f > 0.0) {
      hi = z;
    } else {
      lo = z;
    }
    const double dens = window_pdf(z, antennas);
    double step_target = z - f / dens;
    if (!(dens > 0.0) || step_target <= lo || step_target >= hi) {
      step_target = 0.5 * (lo + hi);  // bisect when Newton leaves the bracket
    }
    if (std::abs(step_target - z) <= 1e-15 * std::max(1.0, z)) {
      z = step_target;
      break;
    }
    z = step_target;
  }
  return z;
}

double gumbel_cdf(double x, const GumbelParams& params) {
  if (!(params.scale > 0.0)) throw std::domain_error("Gumbel scale must be positive");
  return std::exp(-std::exp(-(x - params.location) / params.scale));
}

double gumbel_quantile(double p, const GumbelParams& params) {
  if (!(params.scale > 0.0)) throw std::domain_error("Gumbel scale must be positive");
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("quantile level must lie in (0,1)");
  }
  return params.location - params.scale * std::log(-std::log(p));
}

double gumbel_mean(const GumbelParams& params) {
  return params.location + kEulerGamma * params.scale;
}

double gumbel_variance(const GumbelParams& params) {
  return std::numbers::pi * std::numbers::pi / 6.0 * params.scale * params.scale;
}

double norm_seq_a(int m, int antennas) {
  require_antennas(antennas);
  if (m < 1) throw std::domain_error("window count m must be >= 1");
  double a = std::log(static_cast<double>(m) / factorial(antennas - 1));
  if (antennas != 1) {
    a += (antennas - 1) * std::log(static_cast<double>(antennas - 1));
  }
  return a;
}

double norm_seq_d(int m, int antennas) {
  const double a = norm_seq_a(m, antennas);
  if (antennas == 1) return a;
  if (!(a > 0.0)) {
    throw RegimeError("asymptotic regime violated: centering sequence not positive at m=" +
                      std::to_string(m) + ", antennas=" + std::to_string(antennas) +
                      " (aperture count too small for this antenna count)");
  }
  const double nt = static_cast<double>(antennas);
  return a + (nt - 1.0) / a * (1.0 + (nt + a - 1.0) * std::log(a / (nt - 1.0)));
}

double norm_seq_c(int m, int antennas) {
  const double d = norm_seq_d(m, antennas);
  const double nt = static_cast<double>(antennas);
  const double den = d * d - (nt - 1.0) * (nt - 2.0);
  if (!(den > 0.0)) {
    throw RegimeError("asymptotic regime violated: scaling denominator not positive at m=" +
                      std::to_string(m) + ", antennas=" + std::to_string(antennas) +
                      " (aperture count too small for this antenna count)");
  }
  return (d * d + (nt - 1.0) * d) / den;
}

double beta_coefficient(double xi_plus_phi, int antennas) {
  require_antennas(antennas);
  const double s = xi_plus_phi;
  const double nt = static_cast<double>(antennas);
  const double den = s * s - (nt - 1.0) * (nt - 2.0);
  if (!(den > 0.0)) {
    throw RegimeError("asymptotic regime violated: scaling denominator not positive");
  }
  return (s * s + (nt - 1.0) * s) / den;
}

AsymptoticParams asymptotic_params(const SystemConfig& config) {
  validate(config);
  const int windows = config.window_count();
  if (windows < 2) {
    throw std::invalid_argument(
        "asymptotics require at least 2 windows (apertures >= antennas + 1)");
  }

  AsymptoticParams out;
  out.xi = norm_seq_a(windows, config.antennas);
  const double d = norm_seq_d(windows, config.antennas);
  out.phi = d - out.xi;
  out.beta = norm_seq_c(windows, config.antennas);

  // The theorem-statement route to beta substitutes xi + phi; the two must
  // coincide with the window-count route.
  const double beta_check = beta_coefficient(out.xi + out.phi, config.antennas);
  if (std::abs(beta_check - out.beta) > 1e-12) {
    throw std::logic_error("beta routes disagree beyond 1e-12");
  }

  out.theta = out.xi + out.phi + kEulerGamma * out.beta;
  const double one_plus = 1.0 + config.snr * out.theta;
  out.mu = std::log2(one_plus);
  out.sigma = out.beta * config.snr * kLog2E / one_plus;
  return out;
}

GumbelParams asymptotic_mi_distribution(const SystemConfig& config) {
  const AsymptoticParams p = asymptotic_params(config);
  return {p.mu - kEulerGamma * p.sigma, p.sigma};
}

double asymptotic_ergodic_capacity(const SystemConfig& config) {
  return asymptotic_params(config).mu;
}

double exact_max_cdf_single_antenna(double z, const SystemConfig& config) {
  validate(config);
  if (config.antennas != 1) {
    throw std::domain_error("exact max CDF requires a single-antenna window");
  }
  if (z < 0.0) return 0.0;
  return std::exp(static_cast<double>(config.apertures) * std::log1p(-std::exp(-z)));
}

}  // namespace sra
