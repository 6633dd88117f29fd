// AVX2 kernel variants. Bit-identical to the scalar reference: Philox is pure
// integer arithmetic, |h|^2 performs the same mul/mul/add per element, and the
// argmax uses only comparisons.
//
// This translation unit is compiled with -mavx2; it must not be entered unless
// the CPU reports AVX2 (the dispatcher checks at startup).

#include "kernels_detail.hpp"

#if defined(SRA_HAVE_AVX2_BUILD)

#include <immintrin.h>

#include <limits>

namespace sra::kernels::detail {

namespace {

// Unsigned 32x32 -> high 32 bits, lane-wise. mul_epu32 covers the even lanes;
// the odd lanes come from the shifted copies, whose products already hold the
// high word in their upper halves.
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  const __m256i even = _mm256_mul_epu32(a, b);
  const __m256i odd =
      _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  return _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0b10101010);
}

}  // namespace

void philox_fill_avx2(std::uint64_t key, std::uint64_t stream, std::uint64_t block0,
                      std::size_t nblocks, std::uint32_t* out) {
  const __m256i mult0 = _mm256_set1_epi32(static_cast<int>(kPhiloxMult0));
  const __m256i mult1 = _mm256_set1_epi32(static_cast<int>(kPhiloxMult1));
  const __m256i weyl0 = _mm256_set1_epi32(static_cast<int>(kPhiloxWeyl0));
  const __m256i weyl1 = _mm256_set1_epi32(static_cast<int>(kPhiloxWeyl1));
  const __m256i key0 = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(key)));
  const __m256i key1 =
      _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(key >> 32)));
  const __m256i stream_lo =
      _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(stream)));
  const __m256i stream_hi =
      _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(stream >> 32)));

  std::size_t i = 0;
  for (; i + 8 <= nblocks; i += 8) {
    // Eight blocks in parallel, one block per 32-bit lane (SoA).
    alignas(32) std::uint32_t blk_lo[8];
    alignas(32) std::uint32_t blk_hi[8];
    for (int lane = 0; lane < 8; ++lane) {
      const std::uint64_t block = block0 + i + static_cast<std::uint64_t>(lane);
      blk_lo[lane] = static_cast<std::uint32_t>(block);
      blk_hi[lane] = static_cast<std::uint32_t>(block >> 32);
    }
    __m256i c0 = _mm256_load_si256(reinterpret_cast<const __m256i*>(blk_lo));
    __m256i c1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(blk_hi));
    __m256i c2 = stream_lo;
    __m256i c3 = stream_hi;
    __m256i k0 = key0;
    __m256i k1 = key1;

    for (int round = 0; round < 10; ++round) {
      const __m256i lo0 = _mm256_mullo_epi32(mult0, c0);
      const __m256i hi0 = mulhi_epu32(mult0, c0);
      const __m256i lo1 = _mm256_mullo_epi32(mult1, c2);
      const __m256i hi1 = mulhi_epu32(mult1, c2);
      c0 = _mm256_xor_si256(_mm256_xor_si256(hi1, c1), k0);
      c1 = lo1;
      c2 = _mm256_xor_si256(_mm256_xor_si256(hi0, c3), k1);
      c3 = lo0;
      k0 = _mm256_add_epi32(k0, weyl0);
      k1 = _mm256_add_epi32(k1, weyl1);
    }

    alignas(32) std::uint32_t w0[8], w1[8], w2[8], w3[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(w0), c0);
    _mm256_store_si256(reinterpret_cast<__m256i*>(w1), c1);
    _mm256_store_si256(reinterpret_cast<__m256i*>(w2), c2);
    _mm256_store_si256(reinterpret_cast<__m256i*>(w3), c3);
    std::uint32_t* dst = out + 4 * i;
    for (int lane = 0; lane < 8; ++lane) {
      dst[4 * lane + 0] = w0[lane];
      dst[4 * lane + 1] = w1[lane];
      dst[4 * lane + 2] = w2[lane];
      dst[4 * lane + 3] = w3[lane];
    }
  }
  if (i < nblocks) {
    philox_fill_scalar(key, stream, block0 + i, nblocks - i, out + 4 * i);
  }
}

void abs_sq_avx2(const std::complex<double>* h, double* out, std::size_t n) {
  const double* flat = reinterpret_cast<const double*>(h);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(flat + 2 * i);      // re0 im0 re1 im1
    const __m256d b = _mm256_loadu_pd(flat + 2 * i + 4);  // re2 im2 re3 im3
    const __m256d sum = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    // hadd interleaves the lanes as |h0| |h2| |h1| |h3|; restore order.
    _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(sum, 0b11011000));
  }
  for (; i < n; ++i) {
    const double re = h[i].real();
    const double im = h[i].imag();
    out[i] = re * re + im * im;
  }
}

std::pair<std::size_t, double> argmax_first_avx2(const double* values, std::size_t n) {
  std::size_t i = 0;
  std::size_t best_index = 0;
  double best_value = values[0];

  if (n >= 8) {
    __m256d best = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
    __m256i best_idx = _mm256_setzero_si256();
    __m256i idx = _mm256_set_epi64x(3, 2, 1, 0);
    const __m256i step = _mm256_set1_epi64x(4);
    for (; i + 4 <= n; i += 4) {
      const __m256d v = _mm256_loadu_pd(values + i);
      // Strict > keeps the earliest index within each lane's stride class.
      const __m256d gt = _mm256_cmp_pd(v, best, _CMP_GT_OQ);
      best = _mm256_blendv_pd(best, v, gt);
      best_idx = _mm256_blendv_epi8(best_idx, idx, _mm256_castpd_si256(gt));
      idx = _mm256_add_epi64(idx, step);
    }
    alignas(32) double lane_value[4];
    alignas(32) std::int64_t lane_index[4];
    _mm256_store_pd(lane_value, best);
    _mm256_store_si256(reinterpret_cast<__m256i*>(lane_index), best_idx);
    best_value = lane_value[0];
    best_index = static_cast<std::size_t>(lane_index[0]);
    for (int lane = 1; lane < 4; ++lane) {
      const auto li = static_cast<std::size_t>(lane_index[lane]);
      if (lane_value[lane] > best_value ||
          (lane_value[lane] == best_value && li < best_index)) {
        best_value = lane_value[lane];
        best_index = li;
      }
    }
  }
  for (; i < n; ++i) {
    if (values[i] > best_value) {
      best_value = values[i];
      best_index = i;
    }
  }
  return {best_index, best_value};
}

const Vtable avx2_vtable = {philox_fill_avx2, abs_sq_avx2, argmax_first_avx2};

}  // namespace sra::kernels::detail

#endif  // SRA_HAVE_AVX2_BUILD
