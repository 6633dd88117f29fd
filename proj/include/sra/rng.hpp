#pragma once
// Counter-based random streams built on Philox4x32-10 (Salmon et al., SC'11).
//
// A TrialRng is the substream for one Monte-Carlo trial: the 64-bit run seed
// is the cipher key and the trial index occupies the high counter words, so
// every drawn value is a pure function of (seed, trial, position). Trials can
// therefore be scheduled on any number of threads in any order and still
// reproduce bit-identically.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "sra/kernels.hpp"

namespace sra {

class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial)
      : key_(seed), stream_(trial) {}

  std::uint64_t next_u64() {
    if (word_ == kWords) refill();
    const std::uint64_t lo = buf_[word_];
    const std::uint64_t hi = buf_[word_ + 1];
    word_ += 2;
    return lo | (hi << 32);
  }

  // Uniform strictly inside (0,1): 53 random bits centered on the grid, so
  // log() below never sees 0.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
  }

  // Circularly symmetric complex Gaussian with E|h|^2 = 1 (real and imaginary
  // parts are N(0, 1/2)). Box-Muller: |h|^2 = -ln(u1) is exactly Exp(1).
  std::complex<double> next_unit_gaussian() {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double radius = std::sqrt(-std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

 private:
  static constexpr int kBlocks = 128;
  static constexpr int kWords = 4 * kBlocks;

  void refill() {
    kernels::philox_fill(key_, stream_, block_, kBlocks, buf_.data());
    block_ += kBlocks;
    word_ = 0;
  }

  std::uint64_t key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  int word_ = kWords;
  std::array<std::uint32_t, kWords> buf_;
};

}  // namespace sra
