// Backend selection and dispatch for the compute kernels.

#include "sra/kernels.hpp"

#include <atomic>
#include <stdexcept>

#include "kernels_detail.hpp"

namespace sra::kernels {

namespace {

using detail::Vtable;

bool cpu_has_avx2() {
#if defined(SRA_HAVE_AVX2_BUILD)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Vtable* table_for(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return &detail::scalar_vtable;
    case Backend::avx2:
#if defined(SRA_HAVE_AVX2_BUILD)
      return &detail::avx2_vtable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::atomic<const Vtable*>& active_table() {
  static std::atomic<const Vtable*> table{
      cpu_has_avx2() ? table_for(Backend::avx2) : &detail::scalar_vtable};
  return table;
}

}  // namespace

Backend active_backend() {
  const Vtable* table = active_table().load(std::memory_order_relaxed);
  return table == &detail::scalar_vtable ? Backend::scalar : Backend::avx2;
}

const char* backend_name(Backend backend) {
  return backend == Backend::scalar ? "scalar" : "avx2";
}

bool backend_supported(Backend backend) {
  if (backend == Backend::scalar) return true;
  return cpu_has_avx2() && table_for(backend) != nullptr;
}

bool select_backend(Backend backend) {
  if (!backend_supported(backend)) return false;
  active_table().store(table_for(backend), std::memory_order_relaxed);
  return true;
}

void philox_fill(std::uint64_t key, std::uint64_t stream, std::uint64_t block0,
                 std::size_t nblocks, std::uint32_t* out) {
  active_table().load(std::memory_order_relaxed)->philox_fill(key, stream, block0, nblocks, out);
}

void abs_sq(const std::complex<double>* h, double* out, std::size_t n) {
  active_table().load(std::memory_order_relaxed)->abs_sq(h, out, n);
}

std::pair<std::size_t, double> argmax_first(const double* values, std::size_t n) {
  if (n == 0) throw std::invalid_argument("argmax_first: empty input");
  return active_table().load(std::memory_order_relaxed)->argmax_first(values, n);
}

}  // namespace sra::kernels
