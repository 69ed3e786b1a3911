#include "entps/kernels.hpp"

namespace entps::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa& current() {
    static Isa isa = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
    return isa;
}

}  // namespace

Isa active_isa() { return current(); }

void force_isa(Isa isa) {
    if (isa == Isa::avx2 && !cpu_has_avx2()) {
        throw DomainError("AVX2 not supported on this CPU");
    }
    current() = isa;
}

void reset_isa() { current() = cpu_has_avx2() ? Isa::avx2 : Isa::scalar; }

complexd cdot(std::span<const complexd> a, std::span<const complexd> b) {
    if (a.size() != b.size()) {
        throw DomainError("cdot: size mismatch");
    }
    return current() == Isa::avx2 ? detail::cdot_avx2(a.data(), b.data(), a.size())
                                  : detail::cdot_scalar(a.data(), b.data(), a.size());
}

void axpy(complexd s, std::span<const complexd> x, std::span<complexd> y) {
    if (x.size() != y.size()) {
        throw DomainError("axpy: size mismatch");
    }
    if (current() == Isa::avx2) {
        detail::axpy_avx2(s, x.data(), y.data(), x.size());
    } else {
        detail::axpy_scalar(s, x.data(), y.data(), x.size());
    }
}

double sum_abs2(std::span<const complexd> a) {
    return current() == Isa::avx2 ? detail::sum_abs2_avx2(a.data(), a.size())
                                  : detail::sum_abs2_scalar(a.data(), a.size());
}

}  // namespace entps::kernels
