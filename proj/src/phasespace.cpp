#include "entps/phasespace.hpp"

#include <cmath>

#include "entps/analytic.hpp"
#include "entps/kernels.hpp"

namespace entps::phasespace {

using quadrature::PlaneRule;

EtaOverlapTable::EtaOverlapTable(const TwoModeState& psi) : cutoff_(psi.cutoff()) {
    const int N = cutoff_;
    const int D = N + 1;
    std::vector<double> sqf(D), inv_fact(D);
    sqf[0] = 1.0;
    inv_fact[0] = 1.0;
    for (int m = 1; m <= N; ++m) {
        sqf[m] = sqf[m - 1] * std::sqrt(static_cast<double>(m));
        inv_fact[m] = inv_fact[m - 1] / static_cast<double>(m);
    }
    // <eta|psi> = e^{-|eta|^2/2} sum_{a,b} q[a][b] eta^a conj(eta)^b with
    // q[a][b] = (-1)^a sum_k psi(b+k, a+k) sqrt((b+k)!(a+k)!) / (k! a! b!)
    q_.assign(static_cast<std::size_t>(D) * D, complexd{});
    for (int a = 0; a <= N; ++a) {
        for (int b = 0; b <= N; ++b) {
            complexd acc{};
            for (int k = 0; k + std::max(a, b) <= N; ++k) {
                acc += psi.at(b + k, a + k) * (sqf[b + k] * sqf[a + k] * inv_fact[k]);
            }
            const double sign = (a % 2 == 0) ? 1.0 : -1.0;
            q_[static_cast<std::size_t>(a) * D + b] =
                sign * inv_fact[a] * inv_fact[b] * acc;
        }
    }
}

complexd EtaOverlapTable::operator()(complexd eta) const {
    const int D = cutoff_ + 1;
    std::vector<complexd> pa(D), pb(D);
    pa[0] = pb[0] = 1.0;
    const complexd ec = std::conj(eta);
    for (int i = 1; i < D; ++i) {
        pa[i] = pa[i - 1] * eta;
        pb[i] = pb[i - 1] * ec;
    }
    complexd acc{};
    for (int a = 0; a < D; ++a) {
        complexd row{};
        const complexd* qrow = q_.data() + static_cast<std::size_t>(a) * D;
        for (int b = 0; b < D; ++b) {
            row += qrow[b] * pb[b];
        }
        acc += pa[a] * row;
    }
    return std::exp(-0.5 * std::norm(eta)) * acc;
}

double wigner_numeric(const TwoModeState& state, const PhasePoint& point,
                      const PlaneRule& rule) {
    if (state.dirac_normalized()) {
        throw NotNormalizable("wigner_numeric: delta-normalized subject state");
    }
    return wigner_numeric(EtaOverlapTable(state), point, rule);
}

double wigner_numeric(const EtaOverlapTable& table, const PhasePoint& point,
                      const PlaneRule& rule) {
    const complexd rho = point.rho, vs = point.varsigma;
    std::vector<complexd> values(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const complexd eta = rule.nodes[i];
        const complexd bra_side = std::conj(table(rho - eta));  // <Gamma|rho - eta>
        const complexd ket_side = table(rho + eta);             // <rho + eta|Gamma>
        const complexd phase = std::exp(eta * std::conj(vs) - vs * std::conj(eta));
        values[i] =
            rule.weights[i] * rule.gaussian_division(i) * bra_side * ket_side * phase;
    }
    const complexd total = quadrature::pairwise_sum(values) / (pi * pi * pi);
    if (std::abs(total.imag()) > 1e-8) {
        throw Error("wigner_numeric: imaginary residue " +
                    std::to_string(total.imag()));
    }
    return total.real();
}

OperatorMatrix wigner_op_matrix(const PhasePoint& point, int cutoff) {
    const complexd rho = point.rho, vs = point.varsigma;
    GaussianSymbol symbol;
    symbol.lambda[0][0] = -2.0;
    symbol.lambda[1][1] = -2.0;
    symbol.u[0] = rho + vs;
    symbol.u[1] = std::conj(vs) - std::conj(rho);
    symbol.v[0] = std::conj(rho) + std::conj(vs);
    symbol.v[1] = vs - rho;
    symbol.constant = -std::norm(rho) - std::norm(vs);
    symbol.prefactor = 1.0 / (pi * pi);
    return normally_ordered_gaussian_matrix(symbol, cutoff);
}

Eigen::MatrixXcd single_mode_wigner_matrix(complexd alpha_bar, int cutoff) {
    const complexd prefactor = std::exp(-2.0 * std::norm(alpha_bar)) / pi;
    return single_mode_gaussian_matrix(complexd{-2.0, 0.0}, 2.0 * alpha_bar,
                                       2.0 * std::conj(alpha_bar), prefactor, cutoff);
}

namespace {

// out(m1*D+m2, n1*D+n2) += c * m1m(m1, n1) * m2m(m2, n2), with the
// (m2, n2) block kept contiguous so the accumulation is a plain axpy.
struct KronAccumulator {
    int D;
    std::vector<std::vector<complexd>> blocks;  // indexed m1*D+n1

    explicit KronAccumulator(int dim)
        : D(dim),
          blocks(static_cast<std::size_t>(dim) * dim,
                 std::vector<complexd>(static_cast<std::size_t>(dim) * dim)) {}

    void add(complexd c, const Eigen::MatrixXcd& m1m, const Eigen::MatrixXcd& m2m) {
        std::vector<complexd> vec2(static_cast<std::size_t>(D) * D);
        for (int n2 = 0; n2 < D; ++n2) {
            for (int m2 = 0; m2 < D; ++m2) {
                vec2[static_cast<std::size_t>(m2) * D + n2] = m2m(m2, n2);
            }
        }
        for (int m1 = 0; m1 < D; ++m1) {
            for (int n1 = 0; n1 < D; ++n1) {
                kernels::axpy(c * m1m(m1, n1), vec2,
                              blocks[static_cast<std::size_t>(m1) * D + n1]);
            }
        }
    }

    OperatorMatrix assemble(int cutoff) const {
        OperatorMatrix out;
        out.cutoff = cutoff;
        out.mat.resize(D * D, D * D);
        for (int m1 = 0; m1 < D; ++m1) {
            for (int n1 = 0; n1 < D; ++n1) {
                const auto& blk = blocks[static_cast<std::size_t>(m1) * D + n1];
                for (int m2 = 0; m2 < D; ++m2) {
                    for (int n2 = 0; n2 < D; ++n2) {
                        out.mat(m1 * D + m2, n1 * D + n2) =
                            blk[static_cast<std::size_t>(m2) * D + n2];
                    }
                }
            }
        }
        return out;
    }
};

// Factor map between entangled coordinates and the two single-mode
// arguments: varsigma = abar + conj(bbar), rho = abar - conj(bbar).
void factor_coordinates(const PhasePoint& point, complexd& abar, complexd& bbar) {
    abar = 0.5 * (point.varsigma + point.rho);
    bbar = std::conj(0.5 * (point.varsigma - point.rho));
}

}  // namespace

OperatorMatrix wigner_op_matrix_factorized(const PhasePoint& point, int cutoff) {
    complexd abar, bbar;
    factor_coordinates(point, abar, bbar);
    const Eigen::MatrixXcd m1m = single_mode_wigner_matrix(abar, cutoff);
    const Eigen::MatrixXcd m2m = single_mode_wigner_matrix(bbar, cutoff);
    KronAccumulator acc(cutoff + 1);
    acc.add(complexd{1.0, 0.0}, m1m, m2m);
    return acc.assemble(cutoff);
}

OperatorMatrix project_out_varsigma(const EtaLabel& eta_target, int cutoff,
                                    const PlaneRule& rule) {
    KronAccumulator acc(cutoff + 1);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const PhasePoint pt{eta_target.value, rule.nodes[i]};
        complexd abar, bbar;
        factor_coordinates(pt, abar, bbar);
        acc.add(rule.weights[i] * rule.gaussian_division(i),
                single_mode_wigner_matrix(abar, cutoff),
                single_mode_wigner_matrix(bbar, cutoff));
    }
    return acc.assemble(cutoff);
}

OperatorMatrix project_out_rho(const XiLabel& xi_target, int cutoff,
                               const PlaneRule& rule) {
    KronAccumulator acc(cutoff + 1);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const PhasePoint pt{rule.nodes[i], xi_target.value};
        complexd abar, bbar;
        factor_coordinates(pt, abar, bbar);
        acc.add(rule.weights[i] * rule.gaussian_division(i),
                single_mode_wigner_matrix(abar, cutoff),
                single_mode_wigner_matrix(bbar, cutoff));
    }
    return acc.assemble(cutoff);
}

OperatorMatrix smoothed_projector(const GammaLabel& L, const RepParams& p, int cutoff,
                                  const PlaneRule& outer, const PlaneRule& inner) {
    // Center each plane's rule on the combined Gaussian of the kernel decay
    // (rate 1, center 0) and the smoothing envelope (rate |c|, center m).
    const double c_rho = p.alpha() * p.delta() / (p.beta() * p.gamma());
    const double c_vs = 1.0 / c_rho;
    const complexd m_rho = -L.sigma / p.delta();
    const complexd m_vs = L.tau / p.beta();
    const complexd center_rho = c_rho * m_rho / (c_rho - 1.0);
    const complexd center_vs = c_vs * m_vs / (c_vs - 1.0);

    KronAccumulator acc(cutoff + 1);
    for (std::size_t i = 0; i < outer.nodes.size(); ++i) {
        const complexd rho = center_rho + outer.nodes[i];
        const double wo = outer.weights[i] * outer.gaussian_division(i);
        for (std::size_t j = 0; j < inner.nodes.size(); ++j) {
            const complexd vs = center_vs + inner.nodes[j];
            const double wi = inner.weights[j] * inner.gaussian_division(j);
            const PhasePoint pt{rho, vs};
            const double h = analytic::weyl_symbol_h(pt, L, p);
            complexd abar, bbar;
            factor_coordinates(pt, abar, bbar);
            acc.add(wo * wi * h, single_mode_wigner_matrix(abar, cutoff),
                    single_mode_wigner_matrix(bbar, cutoff));
        }
    }
    return acc.assemble(cutoff);
}

OperatorMatrix squeeze_integral(double mu, int cutoff, const PlaneRule& rule) {
    if (!(mu > 0.0) || !std::isfinite(mu)) {
        throw DomainError("squeeze_integral: mu must be positive");
    }
    const int dim = (cutoff + 1) * (cutoff + 1);
    OperatorMatrix out;
    out.cutoff = cutoff;
    out.mat = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const complexd eta = rule.nodes[i];
        const Eigen::VectorXcd ket = eta_state(EtaLabel{eta / mu}, cutoff).as_vector();
        const Eigen::VectorXcd bra = eta_state(EtaLabel{eta}, cutoff).as_vector();
        const double w = rule.weights[i] * rule.gaussian_division(i) / (pi * mu);
        out.mat.noalias() += w * ket * bra.adjoint();
    }
    return out;
}

}  // namespace entps::phasespace
