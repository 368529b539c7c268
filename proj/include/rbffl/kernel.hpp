#pragma once

// Gaussian RBF phi(r) = exp(-eps^2 r^2) and its closed-form
// alpha-Laplacian (Lemma 1 / Eq. 6):
//   (-Delta)^{alpha/2} phi = c_{d,alpha} |eps|^alpha
//                            1F1((d+alpha)/2; d/2; -eps^2 r^2).

#include <cmath>
#include <stdexcept>

#include "rbffl/specfun.hpp"

namespace rbffl {

struct RbfKernel {
    double epsilon = 1.0;  // shape parameter, nonzero
    int dim = 1;           // d in {1,2,3}
    double alpha = 2.0;    // exponent in [0,2]
};

inline RbfKernel make_kernel(double epsilon, int dim, double alpha) {
    if (epsilon == 0.0 || !std::isfinite(epsilon))
        throw std::domain_error("kernel: epsilon must be nonzero and finite");
    if (dim < 1 || dim > 3) throw std::domain_error("kernel: dim must be 1, 2 or 3");
    if (!(alpha >= 0.0 && alpha <= 2.0)) throw std::domain_error("kernel: alpha in [0,2]");
    return RbfKernel{epsilon, dim, alpha};
}

inline double phi(const RbfKernel& k, double r) {
    if (r < 0.0) throw std::domain_error("phi: r >= 0 required");
    const double er = k.epsilon * r;
    return std::exp(-er * er);
}

inline double frac_lap_phi(const RbfKernel& k, double r) {
    if (r < 0.0) throw std::domain_error("frac_lap_phi: r >= 0 required");
    if (k.alpha == 0.0) return phi(k, r);  // identity operator
    const double e2 = k.epsilon * k.epsilon;
    const double e2r2 = e2 * r * r;
    if (k.alpha == 2.0) {
        // Lemma 1 at alpha = 2 collapses to the classical Laplacian of phi.
        return e2 * (2.0 * k.dim - 4.0 * e2r2) * std::exp(-e2r2);
    }
    const double eps_pow = std::exp(k.alpha * std::log(std::abs(k.epsilon)));
    const double f = hyp1f1((k.dim + k.alpha) / 2.0, k.dim / 2.0, -e2r2).value;
    return coeff_c(k.dim, k.alpha) * eps_pow * f;
}

}  // namespace rbffl
