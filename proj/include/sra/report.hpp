#pragma once
// Command-line front end: argument parsing into a RunSpec, experiment
// dispatch, and CSV/JSON serialization with pinned formatting (12 significant
// digits, "\n" line endings) so identical runs emit identical bytes.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sra/evt.hpp"
#include "sra/experiments.hpp"

namespace sra {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunSpec {
  enum class Command { cdf, capacity, hardening, dependency, params };
  enum class Format { csv, json };

  Command command = Command::cdf;
  int apertures = 128;
  std::vector<int> antennas = {1, 2, 4, 8, 16};
  std::vector<double> snr_db = {0.0};        // grid for capacity, single otherwise
  std::vector<int> aperture_grid = {64, 256, 1024, 4096};  // hardening
  int trials = 20000;
  std::uint64_t seed = 0;
  Format format = Format::csv;
  std::string output_path;  // empty = stdout
};

// Parses the argv tail (without the program name). Throws UsageError naming
// the offending flag. SNR is accepted in dB only ("0", "-20:20:5", or a comma
// list) and converted to linear exactly once when configs are built.
RunSpec parse_args(const std::vector<std::string>& args);

double db_to_linear(double snr_db);

// Runs the spec's experiment (all commands except params).
ExperimentResult run_experiment(const RunSpec& spec);

// One analytic-parameter row per (L, antennas, snr) combination.
struct ParamsRow {
  int apertures = 0;
  int antennas = 0;
  double snr_db = 0.0;
  bool valid = false;
  std::string error;
  AsymptoticParams params;
  GumbelParams gumbel;
};

std::vector<ParamsRow> params_table(const RunSpec& spec);

// Serialized output for a completed run, in spec.format.
// CSV layouts:
//   curves  (cdf):       L,nt,snr_db,x,empirical_cdf,analytic_cdf
//   metrics (capacity,
//            hardening): L,nt,snr_db,empirical_mean,analytic_mu,rel_dev,ks,
//                        empirical_var,analytic_var,beta,error
//   dependency:          L,nt,quantile,threshold,max_delta,std_error,worst_lag,
//                        tail_count,joint_count,low_confidence,vacuous
// JSON mirrors the same rows as {meta:{...}, results:[...]}.
std::string emit_result(const ExperimentResult& result, const RunSpec& spec);

// params layout: L,nt,snr_db,xi,phi,beta,theta,mu_bits,sigma_bits,
//                gumbel_location,gumbel_scale,error
std::string emit_params(const std::vector<ParamsRow>& rows, const RunSpec& spec);

// Full dispatch: runs the command and writes to spec.output_path (or `out`
// when the path is empty). Diagnostics go to `err`. Returns the process exit
// code: 0 iff the run completed and produced at least one valid cell.
int run_command(const RunSpec& spec, std::ostream& out, std::ostream& err);

// "%.12g" rendering used for every floating-point field.
std::string format_g12(double value);

}  // namespace sra
