#include "entps/analytic.hpp"

#include <cmath>

namespace entps::analytic {

namespace {

// exponent coefficients of the shared Gaussian envelope:
// c_eta = alpha*delta/(beta*gamma) < 0, c_xi = beta*gamma/(alpha*delta) < 0
double c_eta(const RepParams& p) {
    return p.alpha() * p.delta() / (p.beta() * p.gamma());
}
double c_xi(const RepParams& p) {
    return p.beta() * p.gamma() / (p.alpha() * p.delta());
}

}  // namespace

complexd complex_gaussian_integral(complexd zeta, complexd xi, complexd eta) {
    if (!(zeta.real() < 0.0)) {
        throw DomainError("complex_gaussian_integral: Re(zeta) must be negative");
    }
    return -(1.0 / zeta) * std::exp(-xi * eta / zeta);
}

complexd gamma_coherent_overlap(const GammaLabel& label, const RepParams& p, complexd z1,
                                complexd z2) {
    const double a = p.alpha(), b = p.beta(), g = p.gamma(), d = p.delta();
    const complexd sigma = label.sigma, tau = label.tau;
    const complexd exponent =
        -0.5 * std::norm(z1) - 0.5 * std::norm(z2) + a * std::norm(sigma) / (2.0 * d) -
        g * std::norm(tau) / (2.0 * b) +
        (a * std::conj(sigma) + g * std::conj(tau)) * z1 + (g * tau - a * sigma) * z2 -
        p.bg_plus_ad() * z1 * z2;
    return 2.0 * std::sqrt(p.neg_abgd()) * std::exp(exponent);
}

complexd gamma_gamma_inner(const GammaLabel& L, const GammaLabel& Lp, const RepParams& p) {
    const double a = p.alpha(), b = p.beta(), g = p.gamma(), d = p.delta();
    const complexd s = L.sigma, t = L.tau, sp = Lp.sigma, tp = Lp.tau;
    const complexd exponent =
        (a / (4.0 * b * g * d)) * std::norm(s - sp) -
        (1.0 / (4.0 * b * d)) *
            (tp * std::conj(s) - s * std::conj(tp) + sp * std::conj(t) -
             t * std::conj(sp)) +
        (g / (4.0 * a * b * d)) * std::norm(t - tp) -
        (p.bg_plus_ad() / (4.0 * b * d)) *
            (tp * std::conj(sp) - sp * std::conj(tp) + s * std::conj(t) -
             t * std::conj(s));
    return std::exp(exponent);
}

complexd eta_gamma_overlap(const EtaLabel& eta, const GammaLabel& L, const RepParams& p) {
    const double a = p.alpha(), b = p.beta(), d = p.delta();
    const complexd e = eta.value, sigma = L.sigma, tau = L.tau;
    const complexd exponent =
        0.5 * c_eta(p) * std::norm(sigma / d + e) +
        (1.0 / (2.0 * b)) * (tau * (std::conj(e) - a * std::conj(sigma)) -
                             std::conj(tau) * (e - a * sigma));
    return std::sqrt(-c_eta(p)) * std::exp(exponent);
}

complexd xi_gamma_overlap(const XiLabel& xi, const GammaLabel& L, const RepParams& p) {
    const double b = p.beta(), g = p.gamma(), d = p.delta();
    const complexd x = xi.value, sigma = L.sigma, tau = L.tau;
    const complexd exponent =
        0.5 * c_xi(p) * std::norm(tau / b - x) -
        (1.0 / (2.0 * d)) * (sigma * (std::conj(x) - g * std::conj(tau)) -
                             std::conj(sigma) * (x - g * tau));
    return std::sqrt(-c_xi(p)) * std::exp(exponent);
}

complexd eta_xi_overlap(const XiLabel& xi, const EtaLabel& eta) {
    const complexd x = xi.value, e = eta.value;
    return 0.5 * std::exp(0.5 * (std::conj(x) * e - x * std::conj(e)));
}

double gamma_wigner(const PhasePoint& point, const GammaLabel& L, const RepParams& p) {
    const double b = p.beta(), d = p.delta();
    const double exponent = c_eta(p) * std::norm(L.sigma / d + point.rho) +
                            c_xi(p) * std::norm(L.tau / b - point.varsigma);
    return std::exp(exponent) / (pi * pi);
}

double weyl_symbol_h(const PhasePoint& point, const GammaLabel& L, const RepParams& p) {
    const double a = p.alpha(), b = p.beta(), g = p.gamma(), d = p.delta();
    const double exponent =
        (a * d / (b * g)) * std::norm(L.sigma / d + point.rho) +
        (g * b / (a * d)) * std::norm(L.tau / b - point.varsigma);
    return 4.0 * std::exp(exponent);
}

double marginal_kernel_eta(complexd eta_value, const GammaLabel& L, const RepParams& p) {
    const double a = p.alpha(), b = p.beta(), g = p.gamma(), d = p.delta();
    return -(4.0 * a * b * d / g) *
           std::exp(c_eta(p) * std::norm(L.sigma / d + eta_value));
}

double marginal_kernel_xi(complexd xi_value, const GammaLabel& L, const RepParams& p) {
    const double a = p.alpha(), b = p.beta(), g = p.gamma(), d = p.delta();
    return -(4.0 * b * g * d / a) *
           std::exp(c_xi(p) * std::norm(L.tau / b - xi_value));
}

MomentSet gamma_moments(const GammaLabel& L, const RepParams& p) {
    const double b = p.beta(), d = p.delta();
    const double s1 = L.sigma.real(), s2 = L.sigma.imag();
    const double t1 = L.tau.real(), t2 = L.tau.imag();
    // Variances follow the Gaussian envelopes of the two conjugate
    // representations: the eta distribution carries (Q-, P+), the xi
    // distribution carries (Q+, P-).
    const double var_eta = -0.5 / c_eta(p);  // -beta*gamma/(2*alpha*delta)
    const double var_xi = -0.5 / c_xi(p);    // -alpha*delta/(2*beta*gamma)
    MomentSet m{};
    m.meanQminus = -s1 / d;
    m.meanQminusSq = m.meanQminus * m.meanQminus + var_eta;
    m.meanPplus = -s2 / d;
    m.meanPplusSq = m.meanPplus * m.meanPplus + var_eta;
    m.meanQplus = t1 / b;
    m.meanQplusSq = m.meanQplus * m.meanQplus + var_xi;
    m.meanPminus = t2 / b;
    m.meanPminusSq = m.meanPminus * m.meanPminus + var_xi;
    return m;
}

double coherent_wigner(const PhasePoint& point, complexd z1, complexd z2) {
    const double exponent = -std::norm(point.rho - (z1 - std::conj(z2))) -
                            std::norm(point.varsigma - (z1 + std::conj(z2)));
    return std::exp(exponent) / (pi * pi);
}

}  // namespace entps::analytic
