#pragma once
// Runtime-dispatched compute kernels for the Monte-Carlo inner loops.
//
// Every kernel has a scalar reference implementation and an AVX2 variant that
// produces bit-identical output. The fastest supported backend is selected
// once at startup; tests pin a backend explicitly to cross-check the two.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>

namespace sra::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
const char* backend_name(Backend backend);
bool backend_supported(Backend backend);

// Selects the backend for all subsequent kernel calls. Returns false (leaving
// the current selection in place) if this build or CPU lacks support.
bool select_backend(Backend backend);

// Philox4x32-10 block generation: writes nblocks * 4 output words for the
// counters {block0 + i, stream} under `key`. Stateless, so any - triple
// (key, stream, block) addresses the same word from any thread or backend.
void philox_fill(std::uint64_t key, std::uint64_t stream, std::uint64_t block0,
                 std::size_t nblocks, std::uint32_t* out);

// out[i] = |h[i]|^2, computed as re*re + im*im without FMA contraction.
void abs_sq(const std::complex<double>* h, double* out, std::size_t n);

// Index of the first maximum and its value. Requires n >= 1 and NaN-free
// input; ties resolve to the lowest index.
std::pair<std::size_t, double> argmax_first(const double* values, std::size_t n);

}  // namespace sra::kernels
