#ifndef ENTPS_KERNELS_HPP
#define ENTPS_KERNELS_HPP

#include <cstddef>
#include <span>

#include "entps/common.hpp"

// Hot inner loops over interleaved complex<double> arrays. A scalar
// reference implementation always exists; an AVX2 variant is selected at
// runtime when the CPU supports it. The two are equivalence-tested.
namespace entps::kernels {

enum class Isa { scalar, avx2 };

/// Instruction set the dispatcher currently resolves to.
Isa active_isa();

/// Pin the implementation (tests use this to compare variants).
/// Requesting an unsupported ISA throws DomainError.
void force_isa(Isa isa);
void reset_isa();

/// sum_i conj(a[i]) * b[i]
complexd cdot(std::span<const complexd> a, std::span<const complexd> b);

/// y[i] += s * x[i]
void axpy(complexd s, std::span<const complexd> x, std::span<complexd> y);

/// sum_i |a[i]|^2
double sum_abs2(std::span<const complexd> a);

namespace detail {
complexd cdot_scalar(const complexd* a, const complexd* b, std::size_t n);
void axpy_scalar(complexd s, const complexd* x, complexd* y, std::size_t n);
double sum_abs2_scalar(const complexd* a, std::size_t n);

complexd cdot_avx2(const complexd* a, const complexd* b, std::size_t n);
void axpy_avx2(complexd s, const complexd* x, complexd* y, std::size_t n);
double sum_abs2_avx2(const complexd* a, std::size_t n);
}  // namespace detail

}  // namespace entps::kernels

#endif
