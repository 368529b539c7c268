#pragma once

// Exterior integrals over Omega^c appearing in the unified scheme:
//   kernel integral  \int_{Omega^c} phi^eps(|y - x_i|) / |x_k - y|^{d+alpha} dy
//   data integral    \int_{Omega^c} g(y) / |x_k - y|^{d+alpha} dy
// plus the adaptive Gauss-Kronrod 7-15 engine they are built on.

#include <functional>

#include "rbffl/geometry.hpp"
#include "rbffl/kernel.hpp"

namespace rbffl {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-13;
    double truncation_tail_tol = 1e-13;
    int n_angles = 256;  // d=2 angular subdivision bound
};

// Adaptive Gauss-Kronrod 7-15 on the finite interval [a,b].
double adaptive_gk(const std::function<double(double)>& f, double a, double b,
                   double rel_tol, double abs_tol);

double exterior_kernel_integral(const Domain& domain, const Point& x_k, const Point& x_i,
                                const RbfKernel& kernel, const QuadratureSpec& spec);

// tail_exponent_hint: g decays like |y|^{-p} past the domain scale (p = 0
// means merely bounded); used to flatten the semi-infinite legs by the
// power-law substitution rho = w^{-(alpha+p)}.
double exterior_data_integral(const Domain& domain, const Point& x_k,
                              const std::function<double(const Point&)>& g, double alpha,
                              const QuadratureSpec& spec, double tail_exponent_hint = 0.0);

}  // namespace rbffl
