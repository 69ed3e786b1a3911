#ifndef ENTPS_FOCKSPACE_HPP
#define ENTPS_FOCKSPACE_HPP

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "entps/common.hpp"
#include "entps/params.hpp"

namespace entps {

/// A ket of the two-mode oscillator truncated at occupation N per mode.
/// Coefficients are stored row-major over (n1, n2); the entry at (n1, n2)
/// is the amplitude on |n1, n2>. States normalized to a delta function
/// (|eta>, |xi>) carry the dirac flag so norm-based checks can skip them.
class TwoModeState {
public:
    explicit TwoModeState(int cutoff, bool dirac = false);

    int cutoff() const { return cutoff_; }
    int dim() const { return cutoff_ + 1; }
    bool dirac_normalized() const { return dirac_; }

    complexd& at(int n1, int n2) { return c_[n1 * (cutoff_ + 1) + n2]; }
    const complexd& at(int n1, int n2) const { return c_[n1 * (cutoff_ + 1) + n2]; }

    std::span<const complexd> coeffs() const { return c_; }
    std::span<complexd> coeffs() { return c_; }

    double norm() const;

    /// Squared norm restricted to n1, n2 <= cutoff - margin.
    double interior_norm2(int margin) const;

    /// Flat copy as an Eigen vector (index n1*(N+1)+n2).
    Eigen::VectorXcd as_vector() const;

private:
    int cutoff_;
    bool dirac_;
    std::vector<complexd> c_;
};

/// scale * exp(A a1+ + B a2+ + C a1+ a2+) |00> in the truncated basis.
/// The (m, n) coefficient is cutoff-independent (no renormalization).
TwoModeState exp_quadratic_ket(complexd A, complexd B, complexd C, complexd scale,
                               int cutoff);

/// The entangled representation ket |Gamma(sigma, tau)>.
TwoModeState gamma_state(const GammaLabel& label, const RepParams& p, int cutoff);

/// Relative-position / total-momentum eigenket |eta| (delta-normalized).
TwoModeState eta_state(const EtaLabel& eta, int cutoff);

/// Conjugate eigenket |xi> (delta-normalized).
TwoModeState xi_state(const XiLabel& xi, int cutoff);

/// Two-mode coherent state |z1, z2>.
TwoModeState coherent_state(complexd z1, complexd z2, int cutoff);

enum class Mode { one, two };
enum class Ladder { create, annihilate };
enum class QuadratureOp { q1, q2, p1, p2 };

/// Result of a (possibly truncating) linear operator application. Creation
/// out of the top level drops amplitude; the dropped squared weight is
/// reported instead of wrapping or resizing.
struct LadderResult {
    TwoModeState state;
    double dropped_weight = 0.0;
};

LadderResult apply_ladder(const TwoModeState& s, Mode mode, Ladder kind);

/// Q_i = (a_i + a_i+)/sqrt(2), P_i = (a_i - a_i+)/(sqrt(2) i).
LadderResult apply_quadrature(const TwoModeState& s, QuadratureOp which);

/// <bra|ket> over the common truncated basis. Throws CutoffMismatch.
complexd inner(const TwoModeState& bra, const TwoModeState& ket);

/// Dense operator on the truncated two-mode space; row/column index is
/// n1*(N+1)+n2.
struct OperatorMatrix {
    int cutoff = 0;
    Eigen::MatrixXcd mat;

    int dim() const { return (cutoff + 1) * (cutoff + 1); }
    TwoModeState apply(const TwoModeState& s) const;
};

/// Exponent data of a normally ordered two-mode Gaussian
///   prefactor * :exp( sum lambda_ij ai+ aj + cross_create a1+ a2+
///                     + cross_annih a1 a2 + sum u_i ai+ + sum v_i ai
///                     + constant ):
struct GaussianSymbol {
    complexd lambda[2][2]{};
    complexd cross_create{};
    complexd cross_annih{};
    complexd u[2]{};
    complexd v[2]{};
    complexd constant{};
    complexd prefactor{1.0, 0.0};
};

/// Matrix elements of a normally ordered Gaussian via its coherent-state
/// symbol, evaluated by truncated multivariate power-series arithmetic.
OperatorMatrix normally_ordered_gaussian_matrix(const GaussianSymbol& symbol, int cutoff);

/// Single-mode analogue of the above with exponent
///   lambda a+ a + u a+ + v a; closed-form coefficient sum, dimension
///   (N+1) x (N+1). prefactor multiplies everything.
Eigen::MatrixXcd single_mode_gaussian_matrix(complexd lambda, complexd u, complexd v,
                                             complexd prefactor, int cutoff);

/// exp[(a1+ a2+ - a1 a2) ln mu] on the truncated space, by scaling and
/// squaring of the truncated generator.
OperatorMatrix squeeze_operator_matrix(double mu, int cutoff);

/// Dense matrix exponential by scaling and squaring with a Taylor core.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

}  // namespace entps

#endif
