#ifndef ENTPS_PHASESPACE_HPP
#define ENTPS_PHASESPACE_HPP

#include "entps/fockspace.hpp"
#include "entps/quadrature.hpp"

// Finite-cutoff realizations of the operator-valued phase-space objects:
// the entangled Wigner transform and its kernel matrix, the projection
// integrals over one coordinate, the smoothing reconstruction of
// |Gamma><Gamma|, and the squeeze ket-bra integral.
namespace entps::phasespace {

/// Precomputed polynomial form of eta |-> <eta|psi> for one state, so the
/// overlap can be evaluated per quadrature node in O(N^2) instead of
/// rebuilding an |eta> ket. Equivalence-tested against inner(eta_state, psi).
class EtaOverlapTable {
public:
    explicit EtaOverlapTable(const TwoModeState& psi);
    complexd operator()(complexd eta) const;
    int cutoff() const { return cutoff_; }

private:
    int cutoff_;
    std::vector<complexd> q_;  // coefficient of eta^a conj(eta)^b at a*(N+1)+b
};

/// Wigner function of a normalizable state at one phase point, by
/// quadrature over the eta plane. Throws NotNormalizable for
/// delta-normalized input.
double wigner_numeric(const TwoModeState& state, const PhasePoint& point,
                      const quadrature::PlaneRule& rule);

/// Same transform with the overlap table precomputed, for grid sweeps.
double wigner_numeric(const EtaOverlapTable& table, const PhasePoint& point,
                      const quadrature::PlaneRule& rule);

/// Wigner kernel matrix at a phase point via the generic normally ordered
/// Gaussian series (reference route).
OperatorMatrix wigner_op_matrix(const PhasePoint& point, int cutoff);

/// Same operator assembled as the tensor product of two single-mode
/// Wigner kernels (fast route; equivalence-tested against the reference).
OperatorMatrix wigner_op_matrix_factorized(const PhasePoint& point, int cutoff);

/// Single-mode Wigner kernel (1/pi) :exp(-2 (a+ - conj(abar))(a - abar)):
Eigen::MatrixXcd single_mode_wigner_matrix(complexd alpha_bar, int cutoff);

/// Integral of the Wigner kernel over the varsigma plane at rho = eta;
/// approaches (1/pi) |eta><eta|.
OperatorMatrix project_out_varsigma(const EtaLabel& eta_target, int cutoff,
                                    const quadrature::PlaneRule& rule);

/// Integral over the rho plane at varsigma = xi; approaches (1/pi)|xi><xi|.
OperatorMatrix project_out_rho(const XiLabel& xi_target, int cutoff,
                               const quadrature::PlaneRule& rule);

/// Weyl-symbol smoothing of the Wigner kernel over both planes; approaches
/// the projector |Gamma><Gamma|.
OperatorMatrix smoothed_projector(const GammaLabel& L, const RepParams& p, int cutoff,
                                  const quadrature::PlaneRule& outer,
                                  const quadrature::PlaneRule& inner);

/// int d2eta/(pi mu) |eta/mu><eta|; approaches the two-mode squeezing
/// operator with parameter ln(mu).
OperatorMatrix squeeze_integral(double mu, int cutoff,
                                const quadrature::PlaneRule& rule);

}  // namespace entps::phasespace

#endif
