#include <cmath>

#include <doctest.h>

#include "entps/analytic.hpp"
#include "entps/fockspace.hpp"
#include "entps/phasespace.hpp"
#include "entps/quadrature.hpp"

using namespace entps;
using namespace entps::phasespace;

namespace {

double block_max_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, int cutoff,
                      int block) {
    const int dim = cutoff + 1;
    double worst = 0.0;
    for (int m1 = 0; m1 <= block; ++m1)
        for (int m2 = 0; m2 <= block; ++m2)
            for (int n1 = 0; n1 <= block; ++n1)
                for (int n2 = 0; n2 <= block; ++n2) {
                    const int r = m1 * dim + m2;
                    const int c = n1 * dim + n2;
                    worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
                }
    return worst;
}

}  // namespace

TEST_CASE("eta overlap table reproduces the direct inner product") {
    const RepParams p = husimi_params(2.0);
    const GammaLabel L{{0.4, -0.2}, {0.1, 0.6}};
    const int N = 14;
    const TwoModeState psi = gamma_state(L, p, N);
    const EtaOverlapTable table(psi);
    for (const complexd eta :
         {complexd{0.0, 0.0}, complexd{0.7, -0.3}, complexd{-1.2, 0.5}}) {
        const complexd direct = inner(eta_state(EtaLabel{eta}, N), psi);
        CHECK(std::abs(table(eta) - direct) < 1e-12);
    }
}

TEST_CASE("numeric wigner transform of the vacuum peaks at 1/pi^2") {
    const TwoModeState vac = coherent_state(0.0, 0.0, 10);
    const auto rule = quadrature::gauss_hermite_plane(32, 1.0);
    const double w = wigner_numeric(vac, PhasePoint{complexd{}, complexd{}}, rule);
    CHECK(w == doctest::Approx(1.0 / (pi * pi)).epsilon(1e-10));
}

TEST_CASE("numeric wigner transform matches the closed form for |Gamma>") {
    const RepParams p = husimi_params(2.0);
    const GammaLabel L{{0.4, -0.2}, {0.1, 0.6}};
    const int N = 22;
    const double c1 = p.alpha() * p.delta() / (p.beta() * p.gamma());
    const auto rule = quadrature::gauss_hermite_plane(36, 1.0 / std::sqrt(-c1));
    const EtaOverlapTable table(gamma_state(L, p, N));
    for (const PhasePoint& pt :
         {PhasePoint{{0.0, 0.0}, {0.0, 0.0}}, PhasePoint{{0.5, -0.3}, {-0.2, 0.4}}}) {
        CHECK(wigner_numeric(table, pt, rule) ==
              doctest::Approx(analytic::gamma_wigner(pt, L, p)).epsilon(1e-8));
    }
}

TEST_CASE("delta-normalized subjects are rejected by the transform") {
    const auto rule = quadrature::gauss_hermite_plane(8, 1.0);
    CHECK_THROWS_AS(
        wigner_numeric(eta_state(EtaLabel{{0.1, 0.0}}, 8),
                       PhasePoint{complexd{}, complexd{}}, rule),
        NotNormalizable);
}

TEST_CASE("factorized kernel matrix matches the generic gaussian route") {
    const PhasePoint pt{{0.2, -0.1}, {-0.3, 0.4}};
    const int N = 6;
    const OperatorMatrix ref = wigner_op_matrix(pt, N);
    const OperatorMatrix fast = wigner_op_matrix_factorized(pt, N);
    CHECK((ref.mat - fast.mat).cwiseAbs().maxCoeff() < 1e-10);
    // hermitian at every phase point
    CHECK((fast.mat - fast.mat.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("kernel sandwich reproduces the coherent-state wigner function") {
    const complexd z1{0.3, 0.1}, z2{-0.2, 0.25};
    const int N = 20;
    const TwoModeState psi = coherent_state(z1, z2, N);
    const PhasePoint pt{{0.15, -0.1}, {0.2, 0.05}};
    const OperatorMatrix delta = wigner_op_matrix_factorized(pt, N);
    const complexd sandwiched = inner(psi, delta.apply(psi));
    CHECK(std::abs(sandwiched.imag()) < 1e-10);
    CHECK(sandwiched.real() ==
          doctest::Approx(analytic::coherent_wigner(pt, z1, z2)).epsilon(1e-8));
}

TEST_CASE("projecting out varsigma leaves (1/pi) |eta><eta|") {
    const EtaLabel eta{{0.3, -0.2}};
    const int N = 8;
    const auto rule = quadrature::gauss_hermite_plane(30, 1.0);
    const OperatorMatrix proj = project_out_varsigma(eta, N, rule);
    const Eigen::VectorXcd v = eta_state(eta, N).as_vector();
    const Eigen::MatrixXcd want = (v * v.adjoint()) / pi;
    CHECK(block_max_diff(proj.mat, want, N, 4) < 1e-6);
}

TEST_CASE("projecting out rho leaves (1/pi) |xi><xi|") {
    const XiLabel xi{{-0.25, 0.35}};
    const int N = 8;
    const auto rule = quadrature::gauss_hermite_plane(30, 1.0);
    const OperatorMatrix proj = project_out_rho(xi, N, rule);
    const Eigen::VectorXcd v = xi_state(xi, N).as_vector();
    const Eigen::MatrixXcd want = (v * v.adjoint()) / pi;
    CHECK(block_max_diff(proj.mat, want, N, 4) < 1e-6);
}

TEST_CASE("weyl smoothing of the kernel rebuilds the |Gamma> projector") {
    const RepParams p = husimi_params(2.0);
    const GammaLabel L{{0.2, -0.1}, {0.1, 0.3}};
    const int N = 6;
    const double c1 = p.alpha() * p.delta() / (p.beta() * p.gamma());
    const double c2 = 1.0 / c1;
    const auto outer =
        quadrature::gauss_hermite_plane(14, 1.0 / std::sqrt(1.0 - c1));
    const auto inner_rule =
        quadrature::gauss_hermite_plane(14, 1.0 / std::sqrt(1.0 - c2));
    const OperatorMatrix proj = smoothed_projector(L, p, N, outer, inner_rule);
    CHECK((proj.mat - proj.mat.adjoint()).cwiseAbs().maxCoeff() < 1e-8);
    const TwoModeState g = gamma_state(L, p, N);
    const complexd expectation = inner(g, proj.apply(g));
    CHECK(std::abs(expectation - 1.0) < 1e-3);
}

TEST_CASE("squeeze integral at mu = 1 resolves the identity") {
    const int N = 8;
    const auto rule = quadrature::gauss_hermite_plane(20, 1.0);
    const OperatorMatrix res = squeeze_integral(1.0, N, rule);
    const int dim = (N + 1) * (N + 1);
    CHECK((res.mat - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff() <
          1e-9);
}

TEST_CASE("squeeze integral matches the exponentiated generator away from the edge") {
    // the integral entries on the small space are exact; the exponential of
    // the truncated generator needs headroom above the compared block, since
    // its edge error decays like tanh(ln mu)^margin
    const double mu = 1.5;
    const int N = 6;
    const int N_expm = 21;
    const double scale = std::sqrt(2.0 * mu * mu / (mu * mu + 1.0));
    const auto rule = quadrature::gauss_hermite_plane(24, scale);
    const OperatorMatrix by_integral = squeeze_integral(mu, N, rule);
    const OperatorMatrix by_expm = squeeze_operator_matrix(mu, N_expm);
    double worst = 0.0;
    for (int m1 = 0; m1 <= N; ++m1)
        for (int m2 = 0; m2 <= N; ++m2)
            for (int n1 = 0; n1 <= N; ++n1)
                for (int n2 = 0; n2 <= N; ++n2)
                    worst = std::max(
                        worst,
                        std::abs(by_integral.mat(m1 * (N + 1) + m2, n1 * (N + 1) + n2) -
                                 by_expm.mat(m1 * (N_expm + 1) + m2,
                                             n1 * (N_expm + 1) + n2)));
    CHECK(worst < 1e-5);
}

TEST_CASE("squeeze integral rejects non-positive mu") {
    const auto rule = quadrature::gauss_hermite_plane(4, 1.0);
    CHECK_THROWS_AS(squeeze_integral(0.0, 4, rule), DomainError);
    CHECK_THROWS_AS(squeeze_integral(-2.0, 4, rule), DomainError);
}
