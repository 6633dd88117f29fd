// Scalar reference kernels. The SIMD variants are equivalence-tested against
// these bit for bit.

#include "kernels_detail.hpp"

namespace sra::kernels::detail {

namespace {

inline void philox_round(std::uint32_t c[4], std::uint32_t k0, std::uint32_t k1) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxMult0) * c[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxMult1) * c[2];
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  c[0] = hi1 ^ c[1] ^ k0;
  c[1] = lo1;
  c[2] = hi0 ^ c[3] ^ k1;
  c[3] = lo0;
}

}  // namespace

void philox_fill_scalar(std::uint64_t key, std::uint64_t stream, std::uint64_t block0,
                        std::size_t nblocks, std::uint32_t* out) {
  for (std::size_t i = 0; i < nblocks; ++i) {
    const std::uint64_t block = block0 + i;
    std::uint32_t c[4] = {
        static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32),
        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    std::uint32_t k0 = static_cast<std::uint32_t>(key);
    std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
    for (int round = 0; round < 10; ++round) {
      philox_round(c, k0, k1);
      k0 += kPhiloxWeyl0;
      k1 += kPhiloxWeyl1;
    }
    out[4 * i + 0] = c[0];
    out[4 * i + 1] = c[1];
    out[4 * i + 2] = c[2];
    out[4 * i + 3] = c[3];
  }
}

void abs_sq_scalar(const std::complex<double>* h, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = h[i].real();
    const double im = h[i].imag();
    out[i] = re * re + im * im;
  }
}

std::pair<std::size_t, double> argmax_first_scalar(const double* values, std::size_t n) {
  std::size_t best = 0;
  double best_value = values[0];
  for (std::size_t i = 1; i < n; ++i) {
    if (values[i] > best_value) {
      best_value = values[i];
      best = i;
    }
  }
  return {best, best_value};
}

const Vtable scalar_vtable = {philox_fill_scalar, abs_sq_scalar, argmax_first_scalar};

}  // namespace sra::kernels::detail
