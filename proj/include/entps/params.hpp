#ifndef ENTPS_PARAMS_HPP
#define ENTPS_PARAMS_HPP

#include "entps/common.hpp"

namespace entps {

/// The four real parameters (alpha, beta, gamma, delta) of the entangled
/// phase-space representation. Instances are always validated:
///   beta*gamma - alpha*delta = 1   (within 1e-12)
///   alpha/delta < 0,  gamma/beta > 0   (square integrability)
/// Immutable after construction; safe to share across threads.
class RepParams {
public:
    static constexpr double constraint_tol = 1e-12;

    /// Validates and constructs. Never renormalizes silently.
    /// Throws ConstraintViolation, SignViolation or NonFinite.
    static RepParams validate(double alpha, double beta, double gamma, double delta);

    /// The Husimi-type family: alpha = kappa/(1+kappa), beta = 1,
    /// gamma = 1/(1+kappa), delta = -1. Satisfies the constraint identically.
    static RepParams husimi(double kappa);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }
    double delta() const { return delta_; }

    /// beta*gamma + alpha*delta; zero in the canonical coherent regime.
    double bg_plus_ad() const { return beta_ * gamma_ + alpha_ * delta_; }
    /// -alpha*beta*gamma*delta; positive for every valid parameter set.
    double neg_abgd() const { return -alpha_ * beta_ * gamma_ * delta_; }

private:
    RepParams(double a, double b, double g, double d)
        : alpha_(a), beta_(b), gamma_(g), delta_(d) {}
    double alpha_, beta_, gamma_, delta_;
};

inline RepParams validate_params(double alpha, double beta, double gamma, double delta) {
    return RepParams::validate(alpha, beta, gamma, delta);
}

inline RepParams husimi_params(double kappa) { return RepParams::husimi(kappa); }

/// Labels (sigma, tau) of a |Gamma> ket.
struct GammaLabel {
    complexd sigma;
    complexd tau;
};

/// Label of a relative-position/total-momentum eigenket |eta>.
struct EtaLabel {
    complexd value;
};

/// Label of the conjugate eigenket |xi>.
struct XiLabel {
    complexd value;
};

/// Entangled phase-space coordinates (rho, varsigma).
struct PhasePoint {
    complexd rho;
    complexd varsigma;
};

}  // namespace entps

#endif
