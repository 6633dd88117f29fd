#pragma once
// Monte-Carlo engine: iid Rayleigh virtual channels, sliding window gains,
// array positioning, mutual-information sampling, and dependency-measure
// estimation. All sampling is driven by per-trial counter-based substreams,
// so results are bit-identical at any thread count.

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sra/evt.hpp"
#include "sra/rng.hpp"

namespace sra {

class TrialRng;

// Length-L vector of unit-variance circularly symmetric Gaussian coefficients.
struct VirtualChannel {
  std::vector<std::complex<double>> coefficients;
};

// Window gains z_m = sum over the window of |h|^2, one per array position,
// plus the position of the maximum. Indices are 0-based.
struct WindowGainSequence {
  std::vector<double> gains;
  int argmax_index = 0;
  double max_gain = 0.0;
};

// One batch of per-trial scalar samples plus the inputs that generated it.
struct SampleSet {
  std::vector<double> values;
  SystemConfig config;
  std::uint64_t seed = 0;
  int trials = 0;
};

// Ratio estimate of the joint-over-marginal exceedance at one window lag.
struct DependencyEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t joint_count = 0;  // both windows exceed the threshold
  std::int64_t tail_count = 0;   // the reference window exceeds it
  bool low_confidence = false;   // tail_count < 100
};

// One row of the threshold sweep: the worst (largest) dependency ratio over
// window lags 0 < k < antennas at a quantile-level threshold.
struct DependencySweepRow {
  double quantile = 0.0;
  double threshold = 0.0;
  double max_delta = 0.0;
  double std_error = 0.0;
  int worst_lag = 0;
  std::int64_t joint_count = 0;
  std::int64_t tail_count = 0;
  bool low_confidence = false;
  bool vacuous = false;  // antennas == 1: no lags to sweep, analytic tail only
};

// Raised when a dependency estimate has no exceedances in the denominator.
class InsufficientExceedancesError : public std::runtime_error {
 public:
  InsufficientExceedancesError(std::int64_t tail_count, std::int64_t joint_count,
                               const std::string& message)
      : std::runtime_error(message), tail_count_(tail_count), joint_count_(joint_count) {}
  std::int64_t tail_count() const { return tail_count_; }
  std::int64_t joint_count() const { return joint_count_; }

 private:
  std::int64_t tail_count_;
  std::int64_t joint_count_;
};

// Draws one channel realization: real/imag parts iid N(0, 1/2).
VirtualChannel sample_virtual_channel(const SystemConfig& config, TrialRng& rng);

// Gains of every length-`antennas` window via a rolling sum in extended
// precision, recomputed exactly every 1024 windows to bound drift. Ties in
// the argmax break to the lowest index.
WindowGainSequence window_gains(const VirtualChannel& channel, int antennas);

// Positioning rule: the (0-based) index of the strongest window and its gain.
std::pair<int, double> position_array(const WindowGainSequence& gains);

// log2(1 + snr * max window gain) in bits for one fresh channel draw.
double mutual_information_sample(const SystemConfig& config, TrialRng& rng);

// Maximum window gain for `trials` independent channel draws. threads == 0
// picks the hardware concurrency; the result does not depend on it.
SampleSet simulate_max_gain_samples(const SystemConfig& config, int trials,
                                    std::uint64_t seed, int threads = 0);

// Mutual-information samples (bits) for `trials` independent channel draws.
SampleSet simulate_mi_samples(const SystemConfig& config, int trials,
                              std::uint64_t seed, int threads = 0);

// Monte-Carlo estimate of the dependency ratio
//   Pr{min(z_m, z_{m+lag}) > threshold} / Pr{z_m > threshold}
// at m = 0 over fresh channel draws. Requires 1 <= lag <= window_count - 1.
DependencyEstimate estimate_dependency_measure(const SystemConfig& config, int lag,
                                               double threshold, int trials,
                                               std::uint64_t seed, int threads = 0);

// Sweeps the worst-lag dependency ratio over thresholds at the given window
// CDF quantile levels. For antennas == 1 the sweep is vacuous and the rows
// carry the analytic iid tail 1 - F(threshold).
std::vector<DependencySweepRow> dependency_condition_sweep(
    const SystemConfig& config, std::span<const double> quantile_levels, int trials,
    std::uint64_t seed, int threads = 0);

}  // namespace sra
