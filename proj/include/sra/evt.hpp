#pragma once
// Closed-form analytics for the best-window channel gain: Erlang window-gain
// distribution, type-one Gumbel law, the Fisher-Tippett normalization
// sequences for chi-squared maxima, and the asymptotic mutual-information
// parameters they induce.

#include <stdexcept>

namespace sra {

// Scenario parameters; the single source of truth for a run.
//   apertures  L   : number of virtual antenna positions in the displacement span
//   antennas   N_t : contiguous positions occupied by the array
//   snr        rho : average linear SNR per receive antenna
struct SystemConfig {
  int apertures = 0;
  int antennas = 0;
  double snr = 1.0;

  // Number of admissible array positions (sliding windows).
  int window_count() const { return apertures - antennas + 1; }
};

// Throws std::invalid_argument unless antennas >= 1, apertures >= antennas,
// and snr is positive and finite.
void validate(const SystemConfig& config);

// Evaluating the large-L asymptotics outside their validity region (L too
// small for the requested antenna count) raises this instead of clamping.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Type-one Gumbel law: F(x) = exp(-exp(-(x - location)/scale)), scale > 0.
struct GumbelParams {
  double location = 0.0;
  double scale = 1.0;
};

double gumbel_cdf(double x, const GumbelParams& params);

// Inverse CDF: location - scale * ln(-ln p), p in (0,1).
double gumbel_quantile(double p, const GumbelParams& params);

double gumbel_mean(const GumbelParams& params);      // location + gamma * scale
double gumbel_variance(const GumbelParams& params);  // pi^2 scale^2 / 6

// Parameters of the limiting mutual-information law. theta = xi + phi +
// gamma*beta; mu and sigma are in bits. For antennas == 1, phi == 0 and
// beta == 1 exactly.
struct AsymptoticParams {
  double xi = 0.0;
  double phi = 0.0;
  double beta = 0.0;
  double theta = 0.0;
  double mu = 0.0;
  double sigma = 0.0;
};

// CDF of a single window gain z = sum of `antennas` iid Exp(1) magnitudes
// (chi-squared with 2*antennas degrees of freedom, unit-mean components):
// the regularized lower incomplete gamma P(antennas, z) via the finite sum
// 1 - e^-z * sum_{k<antennas} z^k/k!. z < 0 returns 0.
double chi_squared_window_cdf(double z, int antennas);

// Survival 1 - CDF, computed directly from the finite sum (no cancellation
// near 1), useful for tail work.
double chi_squared_window_sf(double z, int antennas);

// Inverse of chi_squared_window_cdf on (0,1) by safeguarded Newton iteration;
// the round trip closes to well under 1e-10.
double chi_squared_window_quantile(double p, int antennas);

// Normalization sequences that center and scale the running maximum of the
// window-gain sequence. m is the number of windows.
double norm_seq_a(int m, int antennas);
double norm_seq_d(int m, int antennas);  // errors if the regime is violated
double norm_seq_c(int m, int antennas);  // errors if the regime is violated

// beta from the centering total xi + phi (the theorem-statement route; must
// agree with norm_seq_c at the window count to 1e-12).
double beta_coefficient(double xi_plus_phi, int antennas);

// Full parameter pipeline for a config. Requires window_count() >= 2.
AsymptoticParams asymptotic_params(const SystemConfig& config);

// Limiting law of the mutual information: Gumbel[mu - gamma*sigma; sigma].
GumbelParams asymptotic_mi_distribution(const SystemConfig& config);

// Mean of the limiting law, i.e. mu (bits).
double asymptotic_ergodic_capacity(const SystemConfig& config);

// Exact maximum-gain CDF for antennas == 1, where the windows are iid
// exponential: (1 - e^-z)^L, evaluated stably as exp(L * log1p(-e^-z)).
double exact_max_cdf_single_antenna(double z, const SystemConfig& config);

}  // namespace sra
