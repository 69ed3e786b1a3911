#include "entps/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

#include "entps/analytic.hpp"
#include "entps/phasespace.hpp"
#include "entps/quadrature.hpp"

namespace entps::verify {

using quadrature::PlaneRule;

namespace {

double c_eta(const RepParams& p) {
    return p.alpha() * p.delta() / (p.beta() * p.gamma());
}

complexd unit_disk(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double r = std::sqrt(uni(rng));
    const double phi = 2.0 * pi * uni(rng);
    return {r * std::cos(phi), r * std::sin(phi)};
}

TwoModeState quad_pm(const TwoModeState& s, bool position, double sign) {
    const auto a = apply_quadrature(s, position ? QuadratureOp::q1 : QuadratureOp::p1);
    const auto b = apply_quadrature(s, position ? QuadratureOp::q2 : QuadratureOp::p2);
    TwoModeState out(s.cutoff(), s.dirac_normalized());
    const double inv = 1.0 / std::sqrt(2.0);
    for (int n1 = 0; n1 <= s.cutoff(); ++n1) {
        for (int n2 = 0; n2 <= s.cutoff(); ++n2) {
            out.at(n1, n2) = inv * (a.state.at(n1, n2) + sign * b.state.at(n1, n2));
        }
    }
    return out;
}

TwoModeState state_diff(const TwoModeState& x, const TwoModeState& y) {
    TwoModeState out(x.cutoff());
    for (int n1 = 0; n1 <= x.cutoff(); ++n1) {
        for (int n2 = 0; n2 <= x.cutoff(); ++n2) {
            out.at(n1, n2) = x.at(n1, n2) - y.at(n1, n2);
        }
    }
    return out;
}

void finish(CheckReport& r) { r.passed = r.max_abs_error <= r.tolerance; }

}  // namespace

CheckReport check_eigen_relations(const RepParams& p, const GammaLabel& L,
                                  const TwoModeState& psi, double step) {
    CheckReport r;
    r.name = "eigen_relations";
    r.identity =
        "<Gamma| carries Q+- and P+- as multiplication plus first-order label "
        "derivatives; commutator expectation is i<Gamma|psi>";
    // Central differencing is O(step^2); with step 1e-4 against O(1) values
    // the difference floor is ~1e-8, leaving 1e-6 as a safe gate.
    r.tolerance = 1e-6;
    const int N = psi.cutoff();

    const auto f = [&](double s1, double s2, double t1, double t2) {
        const GammaLabel lab{complexd{s1, s2}, complexd{t1, t2}};
        return inner(gamma_state(lab, p, N), psi);
    };
    const double s1 = L.sigma.real(), s2 = L.sigma.imag();
    const double t1 = L.tau.real(), t2 = L.tau.imag();
    const complexd f0 = f(s1, s2, t1, t2);

    // derivative of f along one label component, with a step-consistency
    // guard: the two one-sided slopes must agree to 10%
    const auto deriv = [&](int which) {
        double a1 = s1, a2 = s2, b1 = t1, b2 = t2;
        double* comp[4] = {&a1, &a2, &b1, &b2};
        const double base = *comp[which];
        *comp[which] = base + step;
        const complexd fp = f(a1, a2, b1, b2);
        *comp[which] = base - step;
        const complexd fm = f(a1, a2, b1, b2);
        *comp[which] = base;
        const complexd central = (fp - fm) / (2.0 * step);
        const complexd left = (f0 - fm) / step;
        const complexd right = (fp - f0) / step;
        if (std::abs(right - left) > 0.1 * (std::abs(central) + 1e-12)) {
            throw StepTooLarge("check_eigen_relations: one-sided slopes disagree");
        }
        return central;
    };

    const TwoModeState gam = gamma_state(L, p, N);
    const complexd i1{0.0, 1.0};
    double worst = 0.0;
    const auto record = [&](complexd lhs, complexd rhs) {
        worst = std::max(worst, std::abs(lhs - rhs));
    };
    // <Gamma|(Q1-Q2)/sqrt2 = (alpha sigma1 + i beta d/dtau2) <Gamma|
    record(inner(gam, quad_pm(psi, true, -1.0)),
           p.alpha() * s1 * f0 + i1 * p.beta() * deriv(3));
    // <Gamma|(P1-P2)/sqrt2 = (gamma tau2 + i delta d/dsigma1) <Gamma|
    record(inner(gam, quad_pm(psi, false, -1.0)),
           p.gamma() * t2 * f0 + i1 * p.delta() * deriv(0));
    // <Gamma|(Q1+Q2)/sqrt2 = (gamma tau1 - i delta d/dsigma2) <Gamma|
    record(inner(gam, quad_pm(psi, true, 1.0)),
           p.gamma() * t1 * f0 - i1 * p.delta() * deriv(1));
    // <Gamma|(P1+P2)/sqrt2 = (alpha sigma2 - i beta d/dtau1) <Gamma|
    record(inner(gam, quad_pm(psi, false, 1.0)),
           p.alpha() * s2 * f0 - i1 * p.beta() * deriv(2));
    r.details["derivative_error"] = worst;

    // commutator condition: both signs give i (beta gamma - alpha delta) f0
    double comm_err = 0.0;
    for (const double sign : {-1.0, 1.0}) {
        const TwoModeState qp = quad_pm(quad_pm(psi, false, sign), true, sign);
        const TwoModeState pq = quad_pm(quad_pm(psi, true, sign), false, sign);
        const complexd lhs = inner(gam, state_diff(qp, pq));
        comm_err = std::max(comm_err, std::abs(lhs - i1 * f0));
    }
    r.details["commutator_error"] = comm_err;
    r.details["cutoff"] = N;
    r.details["step"] = step;
    r.max_abs_error = std::max(worst, comm_err);
    finish(r);
    return r;
}

CheckReport check_ladder_relations(const RepParams& p, const GammaLabel& L, int cutoff) {
    CheckReport r;
    r.name = "ladder_relations";
    r.identity =
        "a_i |Gamma> equals a label term minus (beta gamma + alpha delta) "
        "times the opposite-mode creator acting on |Gamma>";
    // pure truncated Fock algebra; only rounding and the excluded edge remain
    r.tolerance = 1e-8;
    const TwoModeState gam = gamma_state(L, p, cutoff);
    const complexd A = p.alpha() * L.sigma + p.gamma() * L.tau;
    const complexd B = p.gamma() * std::conj(L.tau) - p.alpha() * std::conj(L.sigma);
    const complexd C = p.bg_plus_ad();

    double worst = 0.0;
    for (int rel = 0; rel < 2; ++rel) {
        const Mode lo = rel == 0 ? Mode::one : Mode::two;
        const Mode hi = rel == 0 ? Mode::two : Mode::one;
        const complexd lin = rel == 0 ? A : B;
        const TwoModeState lhs = apply_ladder(gam, lo, Ladder::annihilate).state;
        const TwoModeState created = apply_ladder(gam, hi, Ladder::create).state;
        TwoModeState resid(cutoff);
        for (int n1 = 0; n1 <= cutoff; ++n1) {
            for (int n2 = 0; n2 <= cutoff; ++n2) {
                resid.at(n1, n2) = lhs.at(n1, n2) - lin * gam.at(n1, n2) +
                                   C * created.at(n1, n2);
            }
        }
        worst = std::max(worst, std::sqrt(resid.interior_norm2(2)));
    }
    r.max_abs_error = worst;
    r.details["cutoff"] = cutoff;
    r.details["interior_margin"] = 2;
    finish(r);
    return r;
}

CheckReport check_completeness(const RepParams& p, const CompletenessOptions& opt) {
    CheckReport r;
    r.name = "completeness";
    r.identity =
        "(1/(4 pi^2 beta^2 delta^2)) integral d2sigma d2tau of "
        "|Gamma><Gamma| is the identity";
    r.tolerance = 1e-3;
    // The integrand is exactly the rule's Gaussian times a polynomial, so a
    // scale-matched rule is exact at machine precision for any order and
    // hides the convergence behaviour the tier comparison wants to see. The
    // stretch factor detunes the rule so the error is dominated by a
    // geometrically order-convergent remainder instead.
    const double s_sigma = std::sqrt(-p.delta() / p.alpha()) * opt.stretch;
    const double s_tau = std::sqrt(p.beta() / p.gamma()) * opt.stretch;
    const PlaneRule rs = quadrature::gauss_hermite_plane(opt.order, s_sigma);
    const PlaneRule rt = quadrature::gauss_hermite_plane(opt.order, s_tau);

    const int d = opt.subspace_max + 1;
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(d * d, d * d);
    Eigen::VectorXcd v(d * d);
    for (std::size_t i = 0; i < rs.nodes.size(); ++i) {
        const double wi = rs.weights[i] * rs.gaussian_division(i);
        for (std::size_t j = 0; j < rt.nodes.size(); ++j) {
            const double w = wi * rt.weights[j] * rt.gaussian_division(j);
            const GammaLabel lab{rs.nodes[i], rt.nodes[j]};
            const TwoModeState g = gamma_state(lab, p, opt.cutoff);
            for (int m1 = 0; m1 < d; ++m1) {
                for (int m2 = 0; m2 < d; ++m2) {
                    v(m1 * d + m2) = g.at(m1, m2);
                }
            }
            M.noalias() += w * v * v.adjoint();
        }
    }
    M *= 1.0 / (4.0 * pi * pi * p.beta() * p.beta() * p.delta() * p.delta());
    M -= Eigen::MatrixXcd::Identity(d * d, d * d);
    r.max_abs_error = M.cwiseAbs().maxCoeff();
    r.details["cutoff"] = opt.cutoff;
    r.details["subspace_max"] = opt.subspace_max;
    r.details["order"] = opt.order;
    r.details["stretch"] = opt.stretch;
    finish(r);
    return r;
}

CheckReport check_overlaps(const RepParams& p, int cutoff, int draws,
                           std::uint64_t seed) {
    CheckReport r;
    r.name = "overlaps";
    r.identity =
        "closed-form overlaps (Gamma-coherent, Gamma-Gamma, eta-Gamma, "
        "xi-Gamma, xi-eta) match truncated Fock inner products";
    // truncation tails at this cutoff measured well below 1e-8 for unit-disk
    // labels; 1e-7 leaves headroom
    r.tolerance = 1e-7;
    std::mt19937_64 rng(seed);
    double worst = 0.0, norm_err = 0.0, mag_err = 0.0;
    const auto rel = [](complexd got, complexd want) {
        return std::abs(got - want) / std::max(1e-30, std::abs(want));
    };
    for (int k = 0; k < draws; ++k) {
        const GammaLabel L{unit_disk(rng), unit_disk(rng)};
        const GammaLabel Lp{unit_disk(rng), unit_disk(rng)};
        const EtaLabel eta{unit_disk(rng)};
        const XiLabel xi{unit_disk(rng)};
        const complexd z1 = unit_disk(rng), z2 = unit_disk(rng);

        const TwoModeState g = gamma_state(L, p, cutoff);
        const TwoModeState gp = gamma_state(Lp, p, cutoff);
        const TwoModeState es = eta_state(eta, cutoff);
        const TwoModeState xs = xi_state(xi, cutoff);

        worst = std::max(worst, rel(inner(g, coherent_state(z1, z2, cutoff)),
                                    analytic::gamma_coherent_overlap(L, p, z1, z2)));
        worst = std::max(worst, rel(inner(g, gp), analytic::gamma_gamma_inner(L, Lp, p)));
        worst = std::max(worst, rel(inner(es, g), analytic::eta_gamma_overlap(eta, L, p)));
        worst = std::max(worst, rel(inner(xs, g), analytic::xi_gamma_overlap(xi, L, p)));
        // <xi|eta> cannot be checked by the truncated inner product (the
        // series alternates without decaying), so route it through the
        // label-space completeness of |Gamma>: both factors under the
        // integral are themselves verified against the Fock oracle above.
        const complexd xe = analytic::eta_xi_overlap(xi, eta);
        const double c1 = p.alpha() * p.delta() / (p.beta() * p.gamma());
        const double c2 = 1.0 / c1;
        const PlaneRule rs = quadrature::gauss_hermite_plane(
            32, std::abs(p.delta()) * std::sqrt(-2.0 / c1));
        const PlaneRule rt = quadrature::gauss_hermite_plane(
            32, std::abs(p.beta()) * std::sqrt(-2.0 / c2));
        const complexd center_s = -p.delta() * eta.value;
        const complexd center_t = p.beta() * xi.value;
        complexd acc{};
        for (std::size_t i = 0; i < rs.nodes.size(); ++i) {
            const double ws = rs.weights[i] * rs.gaussian_division(i);
            for (std::size_t j = 0; j < rt.nodes.size(); ++j) {
                const GammaLabel mid{center_s + rs.nodes[i], center_t + rt.nodes[j]};
                acc += ws * rt.weights[j] * rt.gaussian_division(j) *
                       analytic::xi_gamma_overlap(xi, mid, p) *
                       std::conj(analytic::eta_gamma_overlap(eta, mid, p));
            }
        }
        const double norm_c = 4.0 * pi * pi * p.beta() * p.beta() * p.delta() *
                              p.delta();
        worst = std::max(worst, rel(acc / norm_c, xe));
        mag_err = std::max(mag_err, std::abs(std::abs(xe) - 0.5));
        norm_err = std::max(norm_err, std::abs(inner(g, g) - 1.0));
    }
    r.max_abs_error = worst;
    r.details["cutoff"] = cutoff;
    r.details["draws"] = draws;
    r.details["self_inner_error"] = norm_err;        // |<Gamma|Gamma> - 1|
    r.details["eta_xi_magnitude_error"] = mag_err;   // | |<xi|eta>| - 1/2 |
    finish(r);
    return r;
}

CheckReport check_uncertainty(const RepParams& p, const GammaLabel& L, int order) {
    CheckReport r;
    r.name = "uncertainty";
    r.identity =
        "quadrature moments of the eta/xi label distributions match the "
        "closed forms; both variance products equal 1/4";
    r.tolerance = 1e-6;
    const analytic::MomentSet closed = analytic::gamma_moments(L, p);
    const double c1 = c_eta(p), c2 = 1.0 / c1;

    struct Observed {
        double norm, m1, m2, sq1, sq2;
    };
    // moments of |<label|Gamma>|^2 / pi over one complex label plane,
    // integrated about the distribution's own center
    const auto moments = [&](bool eta_side) {
        const double rate = eta_side ? -c1 : -c2;
        const complexd center =
            eta_side ? -L.sigma / p.delta() : L.tau / p.beta();
        const PlaneRule rule =
            quadrature::gauss_hermite_plane(order, 1.0 / std::sqrt(rate));
        Observed o{};
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const complexd lab = center + rule.nodes[i];
            const complexd ov =
                eta_side ? analytic::eta_gamma_overlap(EtaLabel{lab}, L, p)
                         : analytic::xi_gamma_overlap(XiLabel{lab}, L, p);
            const double w =
                rule.weights[i] * rule.gaussian_division(i) * std::norm(ov) / pi;
            o.norm += w;
            o.m1 += w * lab.real();
            o.m2 += w * lab.imag();
            o.sq1 += w * lab.real() * lab.real();
            o.sq2 += w * lab.imag() * lab.imag();
        }
        return o;
    };
    const Observed oe = moments(true);
    const Observed ox = moments(false);

    double worst = 0.0;
    const auto record = [&](double got, double want) {
        worst = std::max(worst, std::abs(got - want));
    };
    record(oe.norm, 1.0);
    record(ox.norm, 1.0);
    record(oe.m1, closed.meanQminus);
    record(oe.m2, closed.meanPplus);
    record(oe.sq1, closed.meanQminusSq);
    record(oe.sq2, closed.meanPplusSq);
    record(ox.m1, closed.meanQplus);
    record(ox.m2, closed.meanPminus);
    record(ox.sq1, closed.meanQplusSq);
    record(ox.sq2, closed.meanPminusSq);

    const double prod_minus = closed.varQminus() * closed.varPminus();
    const double prod_plus = closed.varQplus() * closed.varPplus();
    r.details["product_minus_error"] = std::abs(prod_minus - 0.25);
    r.details["product_plus_error"] = std::abs(prod_plus - 0.25);
    r.details["order"] = order;
    r.details["cutoff"] = 0;  // closed forms and label quadrature only
    r.max_abs_error = worst;
    finish(r);
    return r;
}

CheckReport check_marginals(const RepParams& p, const GammaLabel& L,
                            const TwoModeState& psi, int order) {
    CheckReport r;
    r.name = "marginals";
    r.identity =
        "integrating |Gamma><Gamma| over one label smears the conjugate "
        "EPR distribution of psi with the printed Gaussian kernel";
    r.tolerance = 1e-5;
    const int N = psi.cutoff();
    const double c1 = c_eta(p), c2 = 1.0 / c1;
    const bool vacuum = [&] {
        double off = 0.0;
        for (int n1 = 0; n1 <= N; ++n1) {
            for (int n2 = 0; n2 <= N; ++n2) {
                if (n1 + n2 > 0) off += std::norm(psi.at(n1, n2));
            }
        }
        return off < 1e-28 && std::abs(psi.at(0, 0) - 1.0) < 1e-14;
    }();

    double worst = 0.0;
    const auto record = [&](double a, double b) {
        worst = std::max(worst, std::abs(a - b));
    };

    // one direction: integrate the projector over `sigma_dir ? sigma : tau`,
    // smear |<conj state|psi>|^2 with the matching kernel, and (vacuum only)
    // close the smearing integral with the Gaussian integral formula
    const auto one_direction = [&](bool sigma_dir) {
        // LHS: label-plane quadrature of |<Gamma|psi>|^2 / pi
        const double lhs_rate = sigma_dir ? -p.alpha() / p.delta()
                                          : p.gamma() / p.beta();
        const PlaneRule lhs_rule = quadrature::gauss_hermite_plane(
            order, 1.3 / std::sqrt(lhs_rate));
        double lhs = 0.0;
        for (std::size_t i = 0; i < lhs_rule.nodes.size(); ++i) {
            const GammaLabel lab = sigma_dir ? GammaLabel{lhs_rule.nodes[i], L.tau}
                                             : GammaLabel{L.sigma, lhs_rule.nodes[i]};
            lhs += lhs_rule.weights[i] * lhs_rule.gaussian_division(i) *
                   std::norm(inner(gamma_state(lab, p, N), psi)) / pi;
        }

        // RHS: conjugate-representation quadrature against the kernel
        const double c = sigma_dir ? c2 : c1;
        const complexd m = sigma_dir ? L.tau / p.beta() : -L.sigma / p.delta();
        const complexd center = -c * m / (1.0 - c);
        const PlaneRule rhs_rule = quadrature::gauss_hermite_plane(
            order, 1.2 / std::sqrt(1.0 - c));
        const phasespace::EtaOverlapTable table(psi);
        double rhs = 0.0;
        for (std::size_t i = 0; i < rhs_rule.nodes.size(); ++i) {
            const complexd lab = center + rhs_rule.nodes[i];
            const double wave2 =
                sigma_dir ? std::norm(inner(xi_state(XiLabel{lab}, N), psi))
                          : std::norm(table(lab));
            const double kernel =
                sigma_dir ? analytic::marginal_kernel_xi(lab, L, p)
                          : analytic::marginal_kernel_eta(lab, L, p);
            rhs += rhs_rule.weights[i] * rhs_rule.gaussian_division(i) * wave2 *
                   kernel / pi;
        }
        record(lhs, rhs);

        if (vacuum) {
            // |<conj state|00>|^2 = e^{-|label|^2}; the smearing is then a
            // two-Gaussian integral with an exact closed form
            const double pref = sigma_dir
                                    ? -4.0 * p.beta() * p.gamma() * p.delta() / p.alpha()
                                    : -4.0 * p.alpha() * p.beta() * p.delta() / p.gamma();
            const complexd closed =
                pref * std::exp(c * std::norm(m)) *
                analytic::complex_gaussian_integral(c - 1.0, -c * std::conj(m), -c * m);
            record(rhs, closed.real());
            record(lhs, closed.real());
        }
    };
    one_direction(true);
    one_direction(false);

    r.max_abs_error = worst;
    r.details["cutoff"] = N;
    r.details["order"] = order;
    r.details["vacuum_subject"] = vacuum ? 1.0 : 0.0;
    finish(r);
    return r;
}

CheckReport check_wigner(const RepParams& p, const GammaLabel& L, int grid_axis_points,
                         int cutoff, int order) {
    CheckReport r;
    r.name = "wigner";
    r.identity =
        "the eta-plane quadrature Wigner transform of |Gamma> matches the "
        "closed-form Gaussian on a phase grid";
    r.tolerance = 1e-6;
    const TwoModeState g = gamma_state(L, p, cutoff);
    const phasespace::EtaOverlapTable table(g);
    const PlaneRule rule = quadrature::gauss_hermite_plane(
        order, 1.0 / std::sqrt(-c_eta(p)));

    double worst = 0.0;
    const int n = grid_axis_points;
    const auto axis = [&](int k) {
        return n == 1 ? 0.0 : -1.0 + 2.0 * k / (n - 1.0);
    };
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                for (int d = 0; d < n; ++d) {
                    const PhasePoint pt{complexd{axis(a), axis(b)},
                                        complexd{axis(c), axis(d)}};
                    const double wn = phasespace::wigner_numeric(table, pt, rule);
                    worst = std::max(worst,
                                     std::abs(wn - analytic::gamma_wigner(pt, L, p)));
                }
            }
        }
    }
    const PhasePoint peak{-L.sigma / p.delta(), L.tau / p.beta()};
    r.details["peak_value_error"] =
        std::abs(analytic::gamma_wigner(peak, L, p) - 1.0 / (pi * pi));
    r.details["cutoff"] = cutoff;
    r.details["order"] = order;
    r.details["grid_axis_points"] = n;
    r.max_abs_error = worst;
    finish(r);
    return r;
}

CheckReport check_factorization(std::span<const PhasePoint> points, int cutoff) {
    CheckReport r;
    r.name = "factorization";
    r.identity =
        "the two-mode Wigner kernel matrix equals the tensor product of two "
        "single-mode kernels under the phase-coordinate map";
    r.tolerance = 1e-8;
    double worst = 0.0, herm = 0.0;
    for (const PhasePoint& pt : points) {
        const OperatorMatrix generic = phasespace::wigner_op_matrix(pt, cutoff);
        const OperatorMatrix fact = phasespace::wigner_op_matrix_factorized(pt, cutoff);
        worst = std::max(worst, (generic.mat - fact.mat).cwiseAbs().maxCoeff());
        herm = std::max(
            herm, (generic.mat - generic.mat.adjoint()).cwiseAbs().maxCoeff());
    }
    r.max_abs_error = worst;
    r.details["cutoff"] = cutoff;
    r.details["points"] = static_cast<double>(points.size());
    r.details["hermiticity_error"] = herm;
    finish(r);
    return r;
}

CheckReport check_weyl_smoothing(const RepParams& p, const GammaLabel& L,
                                 const WeylOptions& opt) {
    CheckReport r;
    r.name = "weyl_smoothing";
    r.identity =
        "the Weyl symbol of |Gamma><Gamma| reproduces coherent expectations "
        "under phase-space smoothing and rebuilds the projector";
    r.tolerance = 1e-5;
    const double c1 = c_eta(p), c2 = 1.0 / c1;
    const complexd m_rho = -L.sigma / p.delta();
    const complexd m_vs = L.tau / p.beta();

    // pointwise symbol identity h = 4 pi^2 W (two transcriptions)
    double ratio_err = 0.0;
    for (const double x : {-0.7, 0.0, 0.4, 1.1}) {
        const PhasePoint pt{complexd{x, -x / 2}, complexd{0.3 * x, x}};
        ratio_err = std::max(
            ratio_err, std::abs(analytic::weyl_symbol_h(pt, L, p) -
                                4.0 * pi * pi * analytic::gamma_wigner(pt, L, p)));
    }
    r.details["symbol_ratio_error"] = ratio_err;

    // trace test: <z|Gamma><Gamma|z> three ways
    double worst = 0.0;
    const complexd zs[][2] = {{0.0, 0.0}, {{0.3, -0.2}, {-0.1, 0.25}},
                              {{-0.4, 0.1}, {0.2, 0.3}}};
    for (const auto& z : zs) {
        const complexd z1 = z[0], z2 = z[1];
        const double path1 = std::norm(analytic::gamma_coherent_overlap(L, p, z1, z2));

        const complexd a_rho = z1 - std::conj(z2);
        const complexd a_vs = z1 + std::conj(z2);
        // per-plane closed form of int exp(-|u-a|^2 + c|u-m|^2) d2u
        const auto plane = [&](complexd a, complexd m, double c) {
            return pi * std::exp(-std::norm(a) + c * std::norm(m)) *
                   analytic::complex_gaussian_integral(
                       complexd{c - 1.0}, std::conj(a) - c * std::conj(m),
                       a - c * m);
        };
        const complexd path3 = (4.0 / (pi * pi)) * plane(a_rho, m_rho, c1) *
                               plane(a_vs, m_vs, c2);

        const complexd center_rho = (a_rho - c1 * m_rho) / (1.0 - c1);
        const complexd center_vs = (a_vs - c2 * m_vs) / (1.0 - c2);
        const PlaneRule ro = quadrature::gauss_hermite_plane(
            opt.trace_order, 1.0 / std::sqrt(1.0 - c1));
        const PlaneRule ri = quadrature::gauss_hermite_plane(
            opt.trace_order, 1.0 / std::sqrt(1.0 - c2));
        double path2 = 0.0;
        for (std::size_t i = 0; i < ro.nodes.size(); ++i) {
            const complexd rho = center_rho + ro.nodes[i];
            const double wo = ro.weights[i] * ro.gaussian_division(i);
            for (std::size_t j = 0; j < ri.nodes.size(); ++j) {
                const complexd vs = center_vs + ri.nodes[j];
                const PhasePoint pt{rho, vs};
                path2 += wo * ri.weights[j] * ri.gaussian_division(j) *
                         analytic::coherent_wigner(pt, z1, z2) *
                         analytic::weyl_symbol_h(pt, L, p);
            }
        }
        worst = std::max({worst, std::abs(path1 - path2),
                          std::abs(path1 - path3.real()),
                          std::abs(path2 - path3.real()),
                          std::abs(path3.imag())});
    }
    r.details["trace_test_error"] = worst;
    r.details["cutoff"] = opt.matrix_test ? opt.matrix_cutoff : 0;
    r.details["trace_order"] = opt.trace_order;

    if (opt.matrix_test) {
        const PlaneRule outer = quadrature::gauss_hermite_plane(
            opt.matrix_order, 1.0 / std::sqrt(1.0 - c1));
        const PlaneRule inner_rule = quadrature::gauss_hermite_plane(
            opt.matrix_order, 1.0 / std::sqrt(1.0 - c2));
        const OperatorMatrix rec =
            phasespace::smoothed_projector(L, p, opt.matrix_cutoff, outer, inner_rule);
        const Eigen::VectorXcd g =
            gamma_state(L, p, opt.matrix_cutoff).as_vector();
        const Eigen::MatrixXcd target = g * g.adjoint();
        const int D = opt.matrix_cutoff + 1;
        double block_err = 0.0;
        for (int m1 = 0; m1 <= opt.block_max; ++m1) {
            for (int m2 = 0; m2 <= opt.block_max; ++m2) {
                for (int n1 = 0; n1 <= opt.block_max; ++n1) {
                    for (int n2 = 0; n2 <= opt.block_max; ++n2) {
                        block_err = std::max(
                            block_err, std::abs(rec.mat(m1 * D + m2, n1 * D + n2) -
                                                target(m1 * D + m2, n1 * D + n2)));
                    }
                }
            }
        }
        r.details["projector_block_error"] = block_err;
        r.details["projector_trace_error"] = std::abs(rec.mat.trace() - 1.0);
        // reconstruction gate is looser than the scalar trace test: the
        // block tolerance is the acceptance figure 1e-4
        worst = std::max(worst, block_err / 10.0);  // fold at 1e-4 via shared 1e-5 gate
    }
    r.max_abs_error = worst;
    finish(r);
    return r;
}

CheckReport check_squeeze(double mu, int cutoff, int order) {
    CheckReport r;
    r.name = "squeeze";
    r.identity =
        "the scaled EPR ket-bra integral equals the exponential of the "
        "two-mode squeezing generator";
    r.tolerance = 1e-5;
    // The integral entries on the compared block are exact once the rule
    // degree covers the polynomial content, so `cutoff` is the block bound.
    // The exponential route truncates the generator; its edge contamination
    // decays like tanh(ln mu)^margin, so the generator cutoff is enlarged
    // until that estimate drops below 1e-6.
    const double scale = std::sqrt(2.0 * mu * mu / (mu * mu + 1.0));
    const PlaneRule rule = quadrature::gauss_hermite_plane(order, scale);
    const OperatorMatrix lhs = phasespace::squeeze_integral(mu, cutoff, rule);

    const double lam = std::tanh(std::log(mu));
    const int margin =
        lam < 1e-12
            ? 2
            : std::clamp(static_cast<int>(
                             std::ceil(std::log(1e-6) / std::log(lam))),
                         6, 40);
    const int expm_cutoff = cutoff + margin;
    const OperatorMatrix rhs = squeeze_operator_matrix(mu, expm_cutoff);

    const int Ds = cutoff + 1;
    const int Db = expm_cutoff + 1;
    double worst = 0.0;
    for (int m1 = 0; m1 <= cutoff; ++m1) {
        for (int m2 = 0; m2 <= cutoff; ++m2) {
            for (int n1 = 0; n1 <= cutoff; ++n1) {
                for (int n2 = 0; n2 <= cutoff; ++n2) {
                    worst = std::max(worst,
                                     std::abs(lhs.mat(m1 * Ds + m2, n1 * Ds + n2) -
                                              rhs.mat(m1 * Db + m2, n1 * Db + n2)));
                }
            }
        }
    }
    r.max_abs_error = worst;
    r.details["cutoff"] = cutoff;
    r.details["order"] = order;
    r.details["mu"] = mu;
    r.details["expm_cutoff"] = expm_cutoff;
    finish(r);
    return r;
}

std::vector<CheckReport> run_all(const RunOptions& opt) {
    const bool full = opt.tier == Tier::full;
    std::mt19937_64 rng(opt.seed);
    const RepParams canonical = validate_params(0.5, 1.0, 0.5, -1.0);
    const RepParams husimi2 = husimi_params(2.0);
    const GammaLabel L{unit_disk(rng), unit_disk(rng)};

    std::vector<CheckReport> out;
    out.push_back(check_overlaps(canonical, full ? 30 : 16, full ? 50 : 15, opt.seed));
    out.push_back(check_overlaps(husimi2, full ? 30 : 22, full ? 50 : 15, opt.seed + 1));
    out.back().name += "_husimi";
    out.push_back(check_ladder_relations(husimi2, L, full ? 25 : 16));
    {
        TwoModeState vac(full ? 20 : 14);
        vac.at(0, 0) = 1.0;
        out.push_back(check_eigen_relations(husimi2, L, vac, 1e-4));
    }
    out.push_back(check_uncertainty(husimi2, L, full ? 32 : 24));
    out.push_back(check_factorization(
        std::vector<PhasePoint>{{{0.0, 0.0}, {0.0, 0.0}},
                                {{0.4, -0.3}, {-0.2, 0.6}},
                                {{-0.8, 0.1}, {0.5, -0.4}}},
        full ? 8 : 6));
    {
        TwoModeState vac(full ? 20 : 12);
        vac.at(0, 0) = 1.0;
        out.push_back(check_marginals(husimi2, L, vac, full ? 40 : 32));
    }
    out.push_back(check_wigner(canonical, L, full ? 5 : 3, full ? 25 : 12,
                               full ? 40 : 32));
    WeylOptions wopt;
    wopt.matrix_test = full;
    out.push_back(check_weyl_smoothing(husimi2, L, wopt));
    out.push_back(check_squeeze(1.5, full ? 8 : 6, full ? 32 : 24));
    if (full) {
        out.push_back(check_squeeze(1.0, 10, 32));
        out.back().name += "_identity";
        out.push_back(check_squeeze(2.0, 8, 32));
        out.back().name += "_mu2";
    }
    CompletenessOptions copt;
    if (!full) {
        copt.cutoff = 8;
        copt.subspace_max = 2;
        copt.order = 12;
    }
    out.push_back(check_completeness(canonical, copt));
    return out;
}

std::string reports_to_json(std::span<const CheckReport> reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckReport& r : reports) {
        nlohmann::json j{{"name", r.name},
                         {"identity", r.identity},
                         {"max_abs_error", r.max_abs_error},
                         {"tolerance", r.tolerance},
                         {"passed", r.passed},
                         {"details", r.details}};
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

void print_reports(std::ostream& os, std::span<const CheckReport> reports) {
    os << std::left << std::setw(24) << "check" << std::setw(14) << "max error"
       << std::setw(12) << "tolerance" << "status\n";
    for (const CheckReport& r : reports) {
        os << std::left << std::setw(24) << r.name << std::setw(14)
           << std::scientific << std::setprecision(3) << r.max_abs_error
           << std::setw(12) << r.tolerance << (r.passed ? "pass" : "FAIL")
           << "\n";
    }
    os.flags(std::ios::fmtflags{});
}

}  // namespace entps::verify
