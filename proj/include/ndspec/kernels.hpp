// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Complex double inner-loop kernels.
//
// Every kernel has a portable scalar reference implementation and, on x86-64,
// an AVX2+FMA variant. The variant is chosen once at runtime from CPUID and
// can be pinned with set_backend(). Results of the two backends agree to
// rounding; within one backend, results are deterministic.

#include <complex>
#include <span>
#include <string_view>

namespace ndspec::kernels {

using cd = std::complex<double>;

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b) noexcept;
bool backend_available(Backend b) noexcept;
/// Best available backend on this CPU.
Backend detect_backend() noexcept;
Backend active_backend() noexcept;
/// Throws std::invalid_argument if `b` is not available.
void set_backend(Backend b);

/// y += a * x
void axpy(cd a, std::span<const cd> x, std::span<cd> y);
/// sum_k x_k * conj(y_k)
cd dotc(std::span<const cd> x, std::span<const cd> y);

namespace scalar {
void axpy(cd a, std::span<const cd> x, std::span<cd> y);
cd dotc(std::span<const cd> x, std::span<const cd> y);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define NDSPEC_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy(cd a, std::span<const cd> x, std::span<cd> y);
cd dotc(std::span<const cd> x, std::span<const cd> y);
}  // namespace avx2
#endif

}  // namespace ndspec::kernels
