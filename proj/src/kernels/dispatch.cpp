// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <stdexcept>
#include <string>

#include "ndspec/kernels.hpp"

namespace ndspec::kernels {

namespace {

struct Table {
  void (*axpy)(cd, std::span<const cd>, std::span<cd>);
  cd (*dotc)(std::span<const cd>, std::span<const cd>);
};

constexpr Table kScalar{&scalar::axpy, &scalar::dotc};
#ifdef NDSPEC_HAVE_AVX2_KERNELS
constexpr Table kAvx2{&avx2::axpy, &avx2::dotc};
#endif

const Table& table_for(Backend b) {
#ifdef NDSPEC_HAVE_AVX2_KERNELS
  if (b == Backend::Avx2) return kAvx2;
#endif
  (void)b;
  return kScalar;
}

std::atomic<Backend>& active() {
  static std::atomic<Backend> backend{detect_backend()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(NDSPEC_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

Backend detect_backend() noexcept {
  return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

Backend active_backend() noexcept { return active().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw std::invalid_argument("kernel backend not available on this CPU: " +
                                std::string(backend_name(b)));
  }
  active().store(b, std::memory_order_relaxed);
}

void axpy(cd a, std::span<const cd> x, std::span<cd> y) {
  table_for(active_backend()).axpy(a, x, y);
}

cd dotc(std::span<const cd> x, std::span<const cd> y) {
  return table_for(active_backend()).dotc(x, y);
}

}  // namespace ndspec::kernels
