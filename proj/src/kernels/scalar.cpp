#include "entps/kernels.hpp"

namespace entps::kernels::detail {

complexd cdot_scalar(const complexd* a, const complexd* b, std::size_t n) {
    complexd acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

void axpy_scalar(complexd s, const complexd* x, complexd* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += s * x[i];
    }
}

double sum_abs2_scalar(const complexd* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return acc;
}

}  // namespace entps::kernels::detail
