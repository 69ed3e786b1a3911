#ifndef ENTPS_QUADRATURE_HPP
#define ENTPS_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "entps/common.hpp"

// Deterministic and stochastic integration over a complex plane with
// measure d2z = d(Re z) d(Im z).
namespace entps::quadrature {

/// Tensor-product rule over one complex plane. For the gauss_hermite kind
/// the weights carry the Gaussian factor exp(-|z|^2/scale^2): supply the
/// integrand WITHOUT that Gaussian, or set gaussian_included when it
/// carries its own. The tensor_legendre kind covers the square
/// [-scale, scale]^2 with plain weights.
struct PlaneRule {
    enum class Kind { gauss_hermite, tensor_legendre };
    Kind kind;
    int order;     // points per real dimension
    double scale;  // Gaussian width resp. half-width of the square
    std::vector<complexd> nodes;
    std::vector<double> weights;

    /// Multiplier that divides the rule's Gaussian back out at node i
    /// (1 for tensor_legendre).
    double gaussian_division(std::size_t i) const;
};

PlaneRule gauss_hermite_plane(int order, double scale);
PlaneRule tensor_legendre_plane(int order, double half_width);

/// Physicists' Gauss-Hermite nodes/weights for weight exp(-x^2).
void gauss_hermite_1d(int order, std::vector<double>& nodes, std::vector<double>& weights);
/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre_1d(int order, std::vector<double>& nodes, std::vector<double>& weights);

/// Fixed-topology pairwise reduction; deterministic for a given length.
complexd pairwise_sum(std::span<const complexd> values);

using PlaneFn = std::function<complexd(complexd)>;
using PlaneFn2 = std::function<complexd(complexd, complexd)>;

complexd integrate_plane(const PlaneFn& f, const PlaneRule& rule,
                         bool gaussian_included = false);

/// Same integral evaluated at the rule's order and at double the order,
/// so callers can assert convergence rather than a bare value.
struct ConvergedIntegral {
    complexd value;
    complexd refined;
    double delta;
};
ConvergedIntegral integrate_plane_converged(const PlaneFn& f, const PlaneRule& rule,
                                            bool gaussian_included = false);

/// Tensor composition of two plane rules, reduced in fixed row-major order.
complexd nested_plane_integral(const PlaneFn2& f, const PlaneRule& outer,
                               const PlaneRule& inner, bool gaussian_included = false);

struct MonteCarloResult {
    complexd estimate;
    double stderr_estimate;
};

/// Gaussian importance sampling with density
/// p(z) = exp(-|z-center|^2/width^2) / (pi width^2); reproducible per seed.
MonteCarloResult monte_carlo_plane(const PlaneFn& f, complexd importance_center,
                                   double importance_width, std::int64_t samples,
                                   std::uint64_t seed);

}  // namespace entps::quadrature

#endif
