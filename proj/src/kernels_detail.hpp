#pragma once
// Backend entry points shared between the dispatch table and the per-variant
// translation units.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>

namespace sra::kernels::detail {

struct Vtable {
  void (*philox_fill)(std::uint64_t key, std::uint64_t stream, std::uint64_t block0,
                      std::size_t nblocks, std::uint32_t* out);
  void (*abs_sq)(const std::complex<double>* h, double* out, std::size_t n);
  std::pair<std::size_t, double> (*argmax_first)(const double* values, std::size_t n);
};

extern const Vtable scalar_vtable;

// Philox round constants (Salmon et al., SC'11).
inline constexpr std::uint32_t kPhiloxMult0 = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxMult1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kPhiloxWeyl0 = 0x9E3779B9u;
inline constexpr std::uint32_t kPhiloxWeyl1 = 0xBB67AE85u;

void philox_fill_scalar(std::uint64_t key, std::uint64_t stream, std::uint64_t block0,
                        std::size_t nblocks, std::uint32_t* out);
void abs_sq_scalar(const std::complex<double>* h, double* out, std::size_t n);
std::pair<std::size_t, double> argmax_first_scalar(const double* values, std::size_t n);

#if defined(__x86_64__) || defined(__i386__)
#define SRA_HAVE_AVX2_BUILD 1
extern const Vtable avx2_vtable;
#endif

}  // namespace sra::kernels::detail
