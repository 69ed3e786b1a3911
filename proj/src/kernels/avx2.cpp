#include "entps/kernels.hpp"

#ifdef __AVX2__
#include <immintrin.h>
#endif

namespace entps::kernels::detail {

#ifdef __AVX2__

// Lanes hold interleaved [re0, im0, re1, im1].

complexd cdot_avx2(const complexd* a, const complexd* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d acc_same = _mm256_setzero_pd();  // a.re*b.re, a.im*b.im pairs
    __m256d acc_swap = _mm256_setzero_pd();  // a.re*b.im, a.im*b.re pairs
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        __m256d vbs = _mm256_permute_pd(vb, 0x5);  // [im0, re0, im1, re1]
        acc_same = _mm256_fmadd_pd(va, vb, acc_same);
        acc_swap = _mm256_fmadd_pd(va, vbs, acc_swap);
    }
    alignas(32) double s[4], w[4];
    _mm256_store_pd(s, acc_same);
    _mm256_store_pd(w, acc_swap);
    double re = s[0] + s[1] + s[2] + s[3];
    double im = w[0] - w[1] + w[2] - w[3];
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

void axpy_avx2(complexd sc, const complexd* x, complexd* y, std::size_t n) {
    double* py = reinterpret_cast<double*>(y);
    const double* px = reinterpret_cast<const double*>(x);
    const __m256d vre = _mm256_set1_pd(sc.real());
    const __m256d vim = _mm256_set1_pd(sc.imag());
    const __m256d flip_even = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(px + 2 * i);
        __m256d vy = _mm256_loadu_pd(py + 2 * i);
        // [-im(x0), re(x0), -im(x1), re(x1)]
        __m256d vxs = _mm256_xor_pd(_mm256_permute_pd(vx, 0x5), flip_even);
        vy = _mm256_fmadd_pd(vim, vxs, vy);
        vy = _mm256_fmadd_pd(vre, vx, vy);
        _mm256_storeu_pd(py + 2 * i, vy);
    }
    for (; i < n; ++i) {
        y[i] += sc * x[i];
    }
}

double sum_abs2_avx2(const complexd* a, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        acc = _mm256_fmadd_pd(va, va, acc);
    }
    alignas(32) double s[4];
    _mm256_store_pd(s, acc);
    double total = s[0] + s[1] + s[2] + s[3];
    for (; i < n; ++i) {
        total += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return total;
}

#else

complexd cdot_avx2(const complexd* a, const complexd* b, std::size_t n) {
    return cdot_scalar(a, b, n);
}
void axpy_avx2(complexd s, const complexd* x, complexd* y, std::size_t n) {
    axpy_scalar(s, x, y, n);
}
double sum_abs2_avx2(const complexd* a, std::size_t n) { return sum_abs2_scalar(a, n); }

#endif

}  // namespace entps::kernels::detail
