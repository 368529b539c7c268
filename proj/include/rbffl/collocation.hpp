#pragma once

// Assembly and solution of the unified collocation discretization:
// operator-approximation mode (Eq. 13) and steady Poisson mode (Eqs. 11-12).

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "rbffl/geometry.hpp"
#include "rbffl/kernel.hpp"
#include "rbffl/quadrature.hpp"

namespace rbffl {

struct CollocationProblem {
    Domain domain;
    RbfKernel kernel;
    PointCloud centers;  // S^c
    PointCloud tests;    // S^t (same cardinality as centers)
    std::function<double(const Point&)> rhs_f;
    std::function<double(const Point&)> boundary_g;
    bool g_is_zero = false;  // skips the exterior data integral exactly
    double g_tail_exponent = 0.0;
    QuadratureSpec quad;
};

enum class RowKind { Operator, Boundary };

struct LinearSystem {
    Eigen::MatrixXd matrix;
    Eigen::VectorXd rhs;
    std::vector<RowKind> row_kind;
};

struct SolveReport {
    Eigen::VectorXd lambda;
    double cond_estimate = 0.0;
    double residual_norm = 0.0;
    bool singular = false;
};

struct RbfApproximant {
    RbfKernel kernel;
    std::vector<Point> centers;
    Eigen::VectorXd lambda;
};

// Solves B lambda = samples with B[k][i] = phi(|x_k - x_i|).
std::pair<RbfApproximant, SolveReport> interpolate(const RbfKernel& kernel,
                                                   const PointCloud& centers,
                                                   const PointCloud& tests,
                                                   const Eigen::VectorXd& samples);

// Unified operator approximation (Eq. 13) at interior point x:
// sum_i lambda_i flap(|x - x_i|)
//   + zeta_alpha C_{d,alpha} [sum_i lambda_i K_i(x) - G(x)]
// where K_i is the exterior kernel integral and G the exterior data integral.
double apply_operator(const RbfApproximant& approx, const Domain& domain, double alpha,
                      const std::function<double(const Point&)>& boundary_g, bool g_is_zero,
                      double g_tail_exponent, const QuadratureSpec& quad, const Point& x);

LinearSystem assemble(const CollocationProblem& problem);

SolveReport solve(const LinearSystem& system);

double evaluate(const RbfApproximant& approx, const Point& x);

double rms_error(const std::vector<double>& approx, const std::vector<double>& exact);

// zeta_alpha = 1 - floor(alpha/2): 1 for alpha < 2 (nonlocal terms active),
// 0 at alpha = 2 (purely local scheme).
inline int zeta_alpha(double alpha) { return 1 - static_cast<int>(std::floor(alpha / 2.0)); }

}  // namespace rbffl
