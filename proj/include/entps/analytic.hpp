#ifndef ENTPS_ANALYTIC_HPP
#define ENTPS_ANALYTIC_HPP

#include "entps/common.hpp"
#include "entps/params.hpp"

// Closed-form scalars of the representation: overlaps, Wigner function,
// Weyl symbol, marginal kernels and quadrature moments. These are the
// ground-truth side of every numerical verification pair; each formula is
// a direct transcription and is validated elsewhere against truncated
// Fock-space or quadrature oracles.
namespace entps::analytic {

/// int d2z/pi exp(zeta |z|^2 + xi z + eta z*) = -(1/zeta) exp(-xi eta/zeta),
/// valid for Re(zeta) < 0.
complexd complex_gaussian_integral(complexd zeta, complexd xi, complexd eta);

/// <Gamma(sigma,tau)| z1, z2>
complexd gamma_coherent_overlap(const GammaLabel& label, const RepParams& p, complexd z1,
                                complexd z2);

/// <Gamma(L)|Gamma(Lp)> for a shared parameter set.
complexd gamma_gamma_inner(const GammaLabel& L, const GammaLabel& Lp, const RepParams& p);

/// <eta|Gamma>
complexd eta_gamma_overlap(const EtaLabel& eta, const GammaLabel& L, const RepParams& p);

/// <xi|Gamma>
complexd xi_gamma_overlap(const XiLabel& xi, const GammaLabel& L, const RepParams& p);

/// <xi|eta>; magnitude is 1/2 for every pair of labels.
complexd eta_xi_overlap(const XiLabel& xi, const EtaLabel& eta);

/// Wigner function of |Gamma>; strictly positive, bounded by 1/pi^2.
double gamma_wigner(const PhasePoint& point, const GammaLabel& L, const RepParams& p);

/// Classical Weyl symbol of |Gamma><Gamma|; equals 4 pi^2 times the Wigner
/// function (transcribed independently so the ratio can be asserted).
double weyl_symbol_h(const PhasePoint& point, const GammaLabel& L, const RepParams& p);

/// Gaussian smoothing kernel of the eta-direction marginal, at c-number eta.
double marginal_kernel_eta(complexd eta_value, const GammaLabel& L, const RepParams& p);

/// Gaussian smoothing kernel of the xi-direction marginal, at c-number xi.
double marginal_kernel_xi(complexd xi_value, const GammaLabel& L, const RepParams& p);

/// First and second moments of the +/- quadrature pairs in |Gamma>.
struct MomentSet {
    double meanQminus, meanQplus, meanPminus, meanPplus;
    double meanQminusSq, meanQplusSq, meanPminusSq, meanPplusSq;

    double varQminus() const { return meanQminusSq - meanQminus * meanQminus; }
    double varQplus() const { return meanQplusSq - meanQplus * meanQplus; }
    double varPminus() const { return meanPminusSq - meanPminus * meanPminus; }
    double varPplus() const { return meanPplusSq - meanPplus * meanPplus; }
};

MomentSet gamma_moments(const GammaLabel& L, const RepParams& p);

/// Wigner function of the two-mode coherent state |z1, z2>.
double coherent_wigner(const PhasePoint& point, complexd z1, complexd z2);

}  // namespace entps::analytic

#endif
