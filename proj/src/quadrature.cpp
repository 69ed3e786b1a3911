#include "entps/quadrature.hpp"

#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace entps::quadrature {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal
// Jacobi matrix, weights mu0 * (first eigenvector component)^2.
void golub_welsch(const std::vector<double>& offdiag, double mu0,
                  std::vector<double>& nodes, std::vector<double>& weights) {
    const int n = static_cast<int>(offdiag.size()) + 1;
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        j(k, k - 1) = offdiag[k - 1];
        j(k - 1, k) = offdiag[k - 1];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    nodes.resize(n);
    weights.resize(n);
    for (int k = 0; k < n; ++k) {
        nodes[k] = es.eigenvalues()(k);
        const double v0 = es.eigenvectors()(0, k);
        weights[k] = mu0 * v0 * v0;
    }
}

}  // namespace

void gauss_hermite_1d(int order, std::vector<double>& nodes,
                      std::vector<double>& weights) {
    if (order < 1) {
        throw DomainError("gauss_hermite_1d: order must be >= 1");
    }
    std::vector<double> offdiag(order - 1);
    for (int k = 1; k < order; ++k) {
        offdiag[k - 1] = std::sqrt(0.5 * k);
    }
    golub_welsch(offdiag, std::sqrt(pi), nodes, weights);
}

void gauss_legendre_1d(int order, std::vector<double>& nodes,
                       std::vector<double>& weights) {
    if (order < 1) {
        throw DomainError("gauss_legendre_1d: order must be >= 1");
    }
    std::vector<double> offdiag(order - 1);
    for (int k = 1; k < order; ++k) {
        offdiag[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    }
    golub_welsch(offdiag, 2.0, nodes, weights);
}

double PlaneRule::gaussian_division(std::size_t i) const {
    if (kind != Kind::gauss_hermite) {
        return 1.0;
    }
    return std::exp(std::norm(nodes[i]) / (scale * scale));
}

PlaneRule gauss_hermite_plane(int order, double scale) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw DomainError("gauss_hermite_plane: scale must be positive");
    }
    std::vector<double> x, w;
    gauss_hermite_1d(order, x, w);
    PlaneRule rule{PlaneRule::Kind::gauss_hermite, order, scale, {}, {}};
    rule.nodes.reserve(static_cast<std::size_t>(order) * order);
    rule.weights.reserve(static_cast<std::size_t>(order) * order);
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
            rule.nodes.emplace_back(scale * x[i], scale * x[j]);
            rule.weights.push_back(scale * scale * w[i] * w[j]);
        }
    }
    return rule;
}

PlaneRule tensor_legendre_plane(int order, double half_width) {
    if (!(half_width > 0.0) || !std::isfinite(half_width)) {
        throw DomainError("tensor_legendre_plane: half_width must be positive");
    }
    std::vector<double> x, w;
    gauss_legendre_1d(order, x, w);
    PlaneRule rule{PlaneRule::Kind::tensor_legendre, order, half_width, {}, {}};
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
            rule.nodes.emplace_back(half_width * x[i], half_width * x[j]);
            rule.weights.push_back(half_width * half_width * w[i] * w[j]);
        }
    }
    return rule;
}

complexd pairwise_sum(std::span<const complexd> values) {
    if (values.empty()) {
        return {};
    }
    if (values.size() <= 8) {
        complexd acc{};
        for (const complexd& v : values) {
            acc += v;
        }
        return acc;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.subspan(0, half)) + pairwise_sum(values.subspan(half));
}

complexd integrate_plane(const PlaneFn& f, const PlaneRule& rule, bool gaussian_included) {
    std::vector<complexd> values(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        complexd v = f(rule.nodes[i]);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw NonFiniteSample("integrand non-finite at z = (" +
                                  std::to_string(rule.nodes[i].real()) + ", " +
                                  std::to_string(rule.nodes[i].imag()) + ")");
        }
        if (gaussian_included) {
            v *= rule.gaussian_division(i);
        }
        values[i] = rule.weights[i] * v;
    }
    return pairwise_sum(values);
}

ConvergedIntegral integrate_plane_converged(const PlaneFn& f, const PlaneRule& rule,
                                            bool gaussian_included) {
    const PlaneRule refined_rule =
        rule.kind == PlaneRule::Kind::gauss_hermite
            ? gauss_hermite_plane(2 * rule.order, rule.scale)
            : tensor_legendre_plane(2 * rule.order, rule.scale);
    ConvergedIntegral out{};
    out.value = integrate_plane(f, rule, gaussian_included);
    out.refined = integrate_plane(f, refined_rule, gaussian_included);
    out.delta = std::abs(out.value - out.refined);
    return out;
}

complexd nested_plane_integral(const PlaneFn2& f, const PlaneRule& outer,
                               const PlaneRule& inner, bool gaussian_included) {
    std::vector<complexd> values(outer.nodes.size());
    for (std::size_t i = 0; i < outer.nodes.size(); ++i) {
        const complexd zo = outer.nodes[i];
        const complexd inner_value = integrate_plane(
            [&](complexd zi) { return f(zo, zi); }, inner, gaussian_included);
        double mult = gaussian_included ? outer.gaussian_division(i) : 1.0;
        values[i] = outer.weights[i] * mult * inner_value;
    }
    return pairwise_sum(values);
}

MonteCarloResult monte_carlo_plane(const PlaneFn& f, complexd importance_center,
                                   double importance_width, std::int64_t samples,
                                   std::uint64_t seed) {
    if (samples < 2) {
        throw DomainError("monte_carlo_plane: need at least 2 samples");
    }
    if (!(importance_width > 0.0)) {
        throw DomainError("monte_carlo_plane: width must be positive");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, importance_width / std::sqrt(2.0));
    const double norm_const = 1.0 / (pi * importance_width * importance_width);
    std::vector<complexd> values(static_cast<std::size_t>(samples));
    for (auto& v : values) {
        const complexd z =
            importance_center + complexd{gauss(rng), gauss(rng)};
        const double density =
            norm_const *
            std::exp(-std::norm(z - importance_center) /
                     (importance_width * importance_width));
        v = f(z) / density;
    }
    const complexd mean =
        pairwise_sum(values) / static_cast<double>(samples);
    double var = 0.0;
    for (const complexd& v : values) {
        var += std::norm(v - mean);
    }
    var /= static_cast<double>(samples) * static_cast<double>(samples - 1);
    return {mean, std::sqrt(var)};
}

}  // namespace entps::quadrature
