#include "entps/params.hpp"

#include <cmath>

namespace entps {

RepParams RepParams::validate(double alpha, double beta, double gamma, double delta) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma) ||
        !std::isfinite(delta)) {
        throw NonFinite("representation parameters must be finite");
    }
    const double residual = beta * gamma - alpha * delta - 1.0;
    if (std::abs(residual) > constraint_tol) {
        throw ConstraintViolation("beta*gamma - alpha*delta = " +
                                  std::to_string(beta * gamma - alpha * delta) +
                                  ", expected 1");
    }
    if (delta == 0.0 || !(alpha / delta < 0.0)) {
        throw SignViolation("alpha/delta must be strictly negative");
    }
    if (beta == 0.0 || !(gamma / beta > 0.0)) {
        throw SignViolation("gamma/beta must be strictly positive");
    }
    return RepParams(alpha, beta, gamma, delta);
}

RepParams RepParams::husimi(double kappa) {
    if (!std::isfinite(kappa) || kappa <= 0.0) {
        throw DomainError("kappa must be a finite positive real");
    }
    return validate(kappa / (1.0 + kappa), 1.0, 1.0 / (1.0 + kappa), -1.0);
}

}  // namespace entps
