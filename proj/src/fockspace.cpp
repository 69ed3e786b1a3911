#include "entps/fockspace.hpp"

#include <cmath>

#include "entps/kernels.hpp"

namespace entps {

namespace {

std::vector<double> sqrt_factorials(int up_to) {
    std::vector<double> s(up_to + 1);
    s[0] = 1.0;
    for (int m = 1; m <= up_to; ++m) {
        s[m] = s[m - 1] * std::sqrt(static_cast<double>(m));
    }
    return s;
}

// powers[i] = x^i / i!, built by the ratio recurrence.
std::vector<complexd> scaled_powers(complexd x, int up_to) {
    std::vector<complexd> f(up_to + 1);
    f[0] = 1.0;
    for (int i = 1; i <= up_to; ++i) {
        f[i] = f[i - 1] * x / static_cast<double>(i);
    }
    return f;
}

}  // namespace

TwoModeState::TwoModeState(int cutoff, bool dirac)
    : cutoff_(cutoff), dirac_(dirac), c_((cutoff + 1) * (cutoff + 1), complexd{}) {
    if (cutoff < 1) {
        throw CutoffTooSmall("cutoff must be >= 1");
    }
}

double TwoModeState::norm() const { return std::sqrt(kernels::sum_abs2(c_)); }

double TwoModeState::interior_norm2(int margin) const {
    const int top = cutoff_ - margin;
    double acc = 0.0;
    for (int n1 = 0; n1 <= top; ++n1) {
        for (int n2 = 0; n2 <= top; ++n2) {
            acc += std::norm(at(n1, n2));
        }
    }
    return acc;
}

Eigen::VectorXcd TwoModeState::as_vector() const {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = c_[i];
    }
    return v;
}

TwoModeState exp_quadratic_ket(complexd A, complexd B, complexd C, complexd scale,
                               int cutoff) {
    TwoModeState out(cutoff);
    const auto sqf = sqrt_factorials(cutoff);
    const auto fA = scaled_powers(A, cutoff);
    const auto fB = scaled_powers(B, cutoff);
    const auto fC = scaled_powers(C, cutoff);
    for (int m = 0; m <= cutoff; ++m) {
        for (int n = 0; n <= cutoff; ++n) {
            complexd sum{};
            const int kmax = std::min(m, n);
            for (int k = 0; k <= kmax; ++k) {
                sum += fC[k] * fA[m - k] * fB[n - k];
            }
            const complexd value = scale * sqf[m] * sqf[n] * sum;
            if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
                throw Overflow("exp_quadratic_ket: non-finite coefficient at (" +
                               std::to_string(m) + "," + std::to_string(n) + ")");
            }
            out.at(m, n) = value;
        }
    }
    return out;
}

TwoModeState gamma_state(const GammaLabel& label, const RepParams& p, int cutoff) {
    const double a = p.alpha(), b = p.beta(), g = p.gamma(), d = p.delta();
    const complexd sigma = label.sigma, tau = label.tau;
    const complexd A = a * sigma + g * tau;
    const complexd B = g * std::conj(tau) - a * std::conj(sigma);
    const complexd C = -(b * g + a * d);
    const complexd scale =
        2.0 * std::sqrt(p.neg_abgd()) *
        std::exp(a * std::norm(sigma) / (2.0 * d) - g * std::norm(tau) / (2.0 * b));
    return exp_quadratic_ket(A, B, C, scale, cutoff);
}

TwoModeState eta_state(const EtaLabel& eta, int cutoff) {
    const complexd e = eta.value;
    TwoModeState s = exp_quadratic_ket(e, -std::conj(e), complexd{1.0, 0.0},
                                       std::exp(-0.5 * std::norm(e)), cutoff);
    TwoModeState out(cutoff, /*dirac=*/true);
    std::copy(s.coeffs().begin(), s.coeffs().end(), out.coeffs().begin());
    return out;
}

TwoModeState xi_state(const XiLabel& xi, int cutoff) {
    const complexd x = xi.value;
    TwoModeState s = exp_quadratic_ket(x, std::conj(x), complexd{-1.0, 0.0},
                                       std::exp(-0.5 * std::norm(x)), cutoff);
    TwoModeState out(cutoff, /*dirac=*/true);
    std::copy(s.coeffs().begin(), s.coeffs().end(), out.coeffs().begin());
    return out;
}

TwoModeState coherent_state(complexd z1, complexd z2, int cutoff) {
    return exp_quadratic_ket(z1, z2, complexd{},
                             std::exp(-0.5 * (std::norm(z1) + std::norm(z2))), cutoff);
}

LadderResult apply_ladder(const TwoModeState& s, Mode mode, Ladder kind) {
    const int N = s.cutoff();
    LadderResult r{TwoModeState(N, s.dirac_normalized()), 0.0};
    const bool first = (mode == Mode::one);
    for (int n1 = 0; n1 <= N; ++n1) {
        for (int n2 = 0; n2 <= N; ++n2) {
            const complexd c = s.at(n1, n2);
            if (c == complexd{}) continue;
            const int n = first ? n1 : n2;
            if (kind == Ladder::annihilate) {
                if (n == 0) continue;
                const double f = std::sqrt(static_cast<double>(n));
                if (first) {
                    r.state.at(n1 - 1, n2) += f * c;
                } else {
                    r.state.at(n1, n2 - 1) += f * c;
                }
            } else {
                const double f = std::sqrt(static_cast<double>(n + 1));
                if (n == N) {
                    // amplitude pushed past the cutoff is dropped, not wrapped
                    r.dropped_weight += std::norm(f * c);
                    continue;
                }
                if (first) {
                    r.state.at(n1 + 1, n2) += f * c;
                } else {
                    r.state.at(n1, n2 + 1) += f * c;
                }
            }
        }
    }
    return r;
}

LadderResult apply_quadrature(const TwoModeState& s, QuadratureOp which) {
    const Mode mode =
        (which == QuadratureOp::q1 || which == QuadratureOp::p1) ? Mode::one : Mode::two;
    const bool is_q = (which == QuadratureOp::q1 || which == QuadratureOp::q2);
    LadderResult lo = apply_ladder(s, mode, Ladder::annihilate);
    LadderResult hi = apply_ladder(s, mode, Ladder::create);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // Q = (a + a+)/sqrt(2);  P = (a - a+)/(i sqrt(2))
    const complexd ca = is_q ? complexd{inv_sqrt2, 0.0} : complexd{0.0, -inv_sqrt2};
    const complexd cc = is_q ? complexd{inv_sqrt2, 0.0} : complexd{0.0, inv_sqrt2};
    LadderResult r{TwoModeState(s.cutoff(), s.dirac_normalized()), hi.dropped_weight * 0.5};
    auto out = r.state.coeffs();
    kernels::axpy(ca, lo.state.coeffs(), out);
    kernels::axpy(cc, hi.state.coeffs(), out);
    return r;
}

complexd inner(const TwoModeState& bra, const TwoModeState& ket) {
    if (bra.cutoff() != ket.cutoff()) {
        throw CutoffMismatch("inner: states have different cutoffs");
    }
    return kernels::cdot(bra.coeffs(), ket.coeffs());
}

TwoModeState OperatorMatrix::apply(const TwoModeState& s) const {
    if (s.cutoff() != cutoff) {
        throw CutoffMismatch("OperatorMatrix::apply: cutoff mismatch");
    }
    const Eigen::VectorXcd v = mat * s.as_vector();
    TwoModeState out(cutoff, s.dirac_normalized());
    for (int i = 0; i < v.size(); ++i) {
        out.coeffs()[static_cast<std::size_t>(i)] = v(i);
    }
    return out;
}

OperatorMatrix normally_ordered_gaussian_matrix(const GaussianSymbol& symbol, int cutoff) {
    if (cutoff < 1) {
        throw CutoffTooSmall("cutoff must be >= 1");
    }
    const int D = cutoff + 1;
    const std::size_t size = static_cast<std::size_t>(D) * D * D * D;
    const std::size_t s0 = static_cast<std::size_t>(D) * D * D;
    const std::size_t s1 = static_cast<std::size_t>(D) * D;
    const std::size_t s2 = static_cast<std::size_t>(D);

    // Exponent monomials in the four series variables
    // (zbar1, zbar2, w1, w2); the coherent-state overlap kernel
    // exp(zbar1 w1 + zbar2 w2) is folded into the diagonal terms.
    struct Monomial {
        complexd coef;
        int d[4];
    };
    std::vector<Monomial> mono;
    auto push = [&mono](complexd c, int a, int b, int cc, int dd) {
        if (c != complexd{}) mono.push_back({c, {a, b, cc, dd}});
    };
    push(symbol.lambda[0][0] + 1.0, 1, 0, 1, 0);
    push(symbol.lambda[0][1], 1, 0, 0, 1);
    push(symbol.lambda[1][0], 0, 1, 1, 0);
    push(symbol.lambda[1][1] + 1.0, 0, 1, 0, 1);
    push(symbol.cross_create, 1, 1, 0, 0);
    push(symbol.cross_annih, 0, 0, 1, 1);
    push(symbol.u[0], 1, 0, 0, 0);
    push(symbol.u[1], 0, 1, 0, 0);
    push(symbol.v[0], 0, 0, 1, 0);
    push(symbol.v[1], 0, 0, 0, 1);

    // series = exp(E), term by term: T_r = T_{r-1} * E / r
    std::vector<complexd> series(size, complexd{}), term(size, complexd{}),
        next(size, complexd{});
    series[0] = 1.0;
    term[0] = 1.0;
    const int max_order = 4 * cutoff;
    for (int r = 1; r <= max_order; ++r) {
        std::fill(next.begin(), next.end(), complexd{});
        const double inv_r = 1.0 / r;
        for (const auto& m : mono) {
            const complexd c = m.coef * inv_r;
            const std::size_t shift = static_cast<std::size_t>(m.d[0]) * s0 +
                                      static_cast<std::size_t>(m.d[1]) * s1 +
                                      static_cast<std::size_t>(m.d[2]) * s2 +
                                      static_cast<std::size_t>(m.d[3]);
            for (int i0 = 0; i0 <= cutoff - m.d[0]; ++i0) {
                for (int i1 = 0; i1 <= cutoff - m.d[1]; ++i1) {
                    for (int i2 = 0; i2 <= cutoff - m.d[2]; ++i2) {
                        const std::size_t base = static_cast<std::size_t>(i0) * s0 +
                                                 static_cast<std::size_t>(i1) * s1 +
                                                 static_cast<std::size_t>(i2) * s2;
                        const complexd* src = term.data() + base;
                        complexd* dst = next.data() + base + shift;
                        const int n3 = cutoff - m.d[3];
                        for (int i3 = 0; i3 <= n3; ++i3) {
                            dst[i3] += c * src[i3];
                        }
                    }
                }
            }
        }
        term.swap(next);
        double tmax = 0.0;
        for (const complexd& t : term) {
            tmax = std::max(tmax, std::abs(t.real()) + std::abs(t.imag()));
        }
        if (!std::isfinite(tmax)) {
            throw SeriesOverflow("normally_ordered_gaussian_matrix: series diverged");
        }
        if (tmax == 0.0) break;
        for (std::size_t i = 0; i < size; ++i) {
            series[i] += term[i];
        }
    }

    const auto sqf = sqrt_factorials(cutoff);
    const complexd front = symbol.prefactor * std::exp(symbol.constant);
    OperatorMatrix out;
    out.cutoff = cutoff;
    out.mat.resize(D * D, D * D);
    for (int m1 = 0; m1 <= cutoff; ++m1) {
        for (int m2 = 0; m2 <= cutoff; ++m2) {
            for (int n1 = 0; n1 <= cutoff; ++n1) {
                for (int n2 = 0; n2 <= cutoff; ++n2) {
                    const std::size_t idx = static_cast<std::size_t>(m1) * s0 +
                                            static_cast<std::size_t>(m2) * s1 +
                                            static_cast<std::size_t>(n1) * s2 +
                                            static_cast<std::size_t>(n2);
                    const complexd value =
                        front * sqf[m1] * sqf[m2] * sqf[n1] * sqf[n2] * series[idx];
                    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
                        throw SeriesOverflow(
                            "normally_ordered_gaussian_matrix: non-finite entry");
                    }
                    out.mat(m1 * D + m2, n1 * D + n2) = value;
                }
            }
        }
    }
    return out;
}

Eigen::MatrixXcd single_mode_gaussian_matrix(complexd lambda, complexd u, complexd v,
                                             complexd prefactor, int cutoff) {
    const int D = cutoff + 1;
    const auto sqf = sqrt_factorials(cutoff);
    const auto fu = scaled_powers(u, cutoff);
    const auto fv = scaled_powers(v, cutoff);
    const auto fl = scaled_powers(lambda + 1.0, cutoff);
    Eigen::MatrixXcd m(D, D);
    for (int r = 0; r <= cutoff; ++r) {
        for (int c = 0; c <= cutoff; ++c) {
            complexd sum{};
            for (int k = 0; k <= std::min(r, c); ++k) {
                sum += fl[k] * fu[r - k] * fv[c - k];
            }
            m(r, c) = prefactor * sqf[r] * sqf[c] * sum;
        }
    }
    return m;
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    const Eigen::MatrixXcd t = a / std::pow(2.0, squarings);
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
    Eigen::MatrixXcd term = result;
    for (int k = 1; k <= 40; ++k) {
        term = (term * t) / static_cast<double>(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-17 * result.cwiseAbs().maxCoeff()) {
            break;
        }
    }
    for (int i = 0; i < squarings; ++i) {
        result = result * result;
    }
    return result;
}

OperatorMatrix squeeze_operator_matrix(double mu, int cutoff) {
    if (!std::isfinite(mu) || mu <= 0.0) {
        throw DomainError("squeeze_operator_matrix: mu must be positive");
    }
    const int D = cutoff + 1;
    Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(D * D, D * D);
    for (int n1 = 0; n1 <= cutoff; ++n1) {
        for (int n2 = 0; n2 <= cutoff; ++n2) {
            const int col = n1 * D + n2;
            if (n1 < cutoff && n2 < cutoff) {
                gen((n1 + 1) * D + (n2 + 1), col) +=
                    std::sqrt(static_cast<double>((n1 + 1) * (n2 + 1)));
            }
            if (n1 > 0 && n2 > 0) {
                gen((n1 - 1) * D + (n2 - 1), col) -=
                    std::sqrt(static_cast<double>(n1 * n2));
            }
        }
    }
    OperatorMatrix out;
    out.cutoff = cutoff;
    out.mat = expm((std::log(mu) * gen).eval());
    return out;
}

}  // namespace entps
