#include <atomic>
#include <cstdlib>
#include <string>

#include "vcdim/simd/kernels.hpp"

namespace vcdim::simd {

namespace detail {
#ifndef VCDIM_HAVE_AVX2
const KernelSet* avx2_kernels() { return nullptr; }
#endif
#ifndef VCDIM_HAVE_NEON
const KernelSet* neon_kernels() { return nullptr; }
#endif
}  // namespace detail

namespace {

const KernelSet* find_kernels(std::string_view name) {
  for (const KernelSet* k : available_kernels()) {
    if (k->name == name) {
      return k;
    }
  }
  return nullptr;
}

const KernelSet* initial_kernels() {
  if (const char* env = std::getenv("VCDIM_SIMD"); env != nullptr && *env != '\0') {
    if (const KernelSet* k = find_kernels(env)) {
      return k;
    }
  }
  return available_kernels().back();
}

std::atomic<const KernelSet*>& active_slot() {
  static std::atomic<const KernelSet*> slot{initial_kernels()};
  return slot;
}

}  // namespace

std::vector<const KernelSet*> available_kernels() {
  std::vector<const KernelSet*> sets{&scalar_kernels()};
  if (const KernelSet* k = detail::neon_kernels()) {
    sets.push_back(k);
  }
  if (const KernelSet* k = detail::avx2_kernels()) {
    sets.push_back(k);
  }
  return sets;
}

const KernelSet& active_kernels() { return *active_slot().load(std::memory_order_acquire); }

bool select_kernels(std::string_view name) {
  const KernelSet* k = find_kernels(name);
  if (k == nullptr) {
    return false;
  }
  active_slot().store(k, std::memory_order_release);
  return true;
}

}  // namespace vcdim::simd
