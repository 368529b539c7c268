#pragma once

// Crank-Nicolson integration of the fractional diffusion problem
//   u_t + (-Delta)^{alpha/2} u = f  in Omega,  u = g  on Omega^c,
// in the coefficient space of the collocation expansion:
//   [B + (dt/2) A; C] Lambda^{n+1}
//     = [(B - (dt/2) A) Lambda^n + (dt/2)(f^n + f^{n+1} + w^n + w^{n+1}); g^{n+1}].

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "rbffl/collocation.hpp"

namespace rbffl {

struct DiffusionSetup {
    Domain domain;
    RbfKernel kernel;
    PointCloud cloud;
    QuadratureSpec quad;
    double dt = 1e-3;
    double t_end = 1.0;
    // f(x, t) at interior points.
    std::function<double(const Point&, double)> rhs_f;
    // Separable exterior data g(y, t) = g_time(t) * g_space(y); the exterior
    // data integral is computed once from g_space and scaled by g_time.
    std::function<double(const Point&)> g_space;
    std::function<double(double)> g_time;
    bool g_is_zero = false;
    double g_tail_exponent = 0.0;
    // Initial condition; null means u(., 0) = 0.
    std::function<double(const Point&)> initial_u;

    // Assembled once, reused at every step.
    Eigen::MatrixXd A;  // interior operator rows (N x Nbar), Eq. (11) brackets
    Eigen::MatrixXd B;  // interior kernel rows (N x Nbar)
    Eigen::MatrixXd C;  // boundary kernel rows ((Nbar-N) x Nbar)
    Eigen::VectorXd W;  // zeta C_{d,alpha} * exterior integral of g_space (length N)
};

struct TimestepState {
    int step_index = 0;
    double t = 0.0;
    Eigen::VectorXd lambda;  // length Nbar
    Eigen::VectorXd w;       // cached w^n (length N); identically 0 when alpha = 2
};

DiffusionSetup prepare_diffusion(const Domain& domain, const RbfKernel& kernel,
                                 const PointCloud& cloud, const QuadratureSpec& quad, double dt,
                                 double t_end,
                                 std::function<double(const Point&, double)> rhs_f,
                                 std::function<double(const Point&)> g_space,
                                 std::function<double(double)> g_time, bool g_is_zero,
                                 double g_tail_exponent,
                                 std::function<double(const Point&)> initial_u = nullptr);

class DiffusionStepper {
  public:
    explicit DiffusionStepper(const DiffusionSetup& setup);

    TimestepState init() const;
    // Advances one step of size setup.dt, reusing the cached factorization.
    void step(TimestepState& state) const;
    // Advances with an arbitrary step (factors the block matrix ad hoc);
    // negative dt steps backward in time.
    void step_with_dt(TimestepState& state, double dt) const;

    double cond_estimate() const { return cond_estimate_; }
    bool singular() const { return singular_; }

  private:
    const DiffusionSetup& setup_;
    Eigen::MatrixXd forward_;   // [B + (dt/2) A; C]
    Eigen::MatrixXd backward_;  // B - (dt/2) A
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    double cond_estimate_ = 0.0;
    bool singular_ = false;

    void advance(TimestepState& state, double dt,
                 const Eigen::PartialPivLU<Eigen::MatrixXd>& lu,
                 const Eigen::MatrixXd& backward) const;
};

struct TimeRecord {
    double t = 0.0;
    double rms = 0.0;
    double cond = 0.0;
};

// Iterates to t_end, recording RMS against exact_u(x, t) over the sample
// points at every output cadence (and at t_end).
std::vector<TimeRecord> run_diffusion(const DiffusionSetup& setup,
                                      const std::vector<Point>& sample_points,
                                      const std::function<double(const Point&, double)>& exact_u,
                                      double output_cadence = 0.1);

}  // namespace rbffl
