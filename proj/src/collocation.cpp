#include "rbffl/collocation.hpp"

#include <cmath>
#include <stdexcept>

#include "rbffl/specfun.hpp"

namespace rbffl {

namespace {

Eigen::MatrixXd kernel_matrix(const RbfKernel& kernel, const std::vector<Point>& rows,
                              const std::vector<Point>& cols) {
    Eigen::MatrixXd B(rows.size(), cols.size());
    for (Eigen::Index k = 0; k < B.rows(); ++k)
        for (Eigen::Index i = 0; i < B.cols(); ++i)
            B(k, i) = phi(kernel, dist(rows[k], cols[i]));
    return B;
}

double cond_from_svd(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    const double smin = s(s.size() - 1);
    if (smin <= 0.0) return std::numeric_limits<double>::infinity();
    return s(0) / smin;
}

}  // namespace

SolveReport solve(const LinearSystem& system) {
    if (system.matrix.rows() != system.matrix.cols() || system.matrix.rows() != system.rhs.size())
        throw std::invalid_argument("solve: square system required");
    SolveReport report;
    report.cond_estimate = cond_from_svd(system.matrix);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(system.matrix);
    report.lambda = lu.solve(system.rhs);
    report.residual_norm = (system.matrix * report.lambda - system.rhs).norm();
    report.singular = !report.lambda.allFinite() || !std::isfinite(report.residual_norm);
    return report;
}

std::pair<RbfApproximant, SolveReport> interpolate(const RbfKernel& kernel,
                                                   const PointCloud& centers,
                                                   const PointCloud& tests,
                                                   const Eigen::VectorXd& samples) {
    const std::vector<Point> c = centers.all();
    const std::vector<Point> t = tests.all();
    if (c.size() != t.size()) throw std::invalid_argument("interpolate: |tests| must equal |centers|");
    if (samples.size() != static_cast<Eigen::Index>(t.size()))
        throw std::invalid_argument("interpolate: samples size mismatch");
    LinearSystem sys{kernel_matrix(kernel, t, c), samples,
                     std::vector<RowKind>(t.size(), RowKind::Operator)};
    SolveReport report = solve(sys);
    return {RbfApproximant{kernel, c, report.lambda}, report};
}

double apply_operator(const RbfApproximant& approx, const Domain& domain, double alpha,
                      const std::function<double(const Point&)>& boundary_g, bool g_is_zero,
                      double g_tail_exponent, const QuadratureSpec& quad, const Point& x) {
    if (!(alpha > 0.0 && alpha <= 2.0)) throw std::domain_error("apply_operator: alpha in (0,2]");
    RbfKernel k = approx.kernel;
    k.alpha = alpha;
    double value = 0.0;
    for (std::size_t i = 0; i < approx.centers.size(); ++i)
        value += approx.lambda(i) * frac_lap_phi(k, dist(x, approx.centers[i]));
    if (zeta_alpha(alpha) == 0) return value;
    const double C = coeff_C(domain.dim(), alpha);
    double nonlocal = 0.0;
    for (std::size_t i = 0; i < approx.centers.size(); ++i)
        nonlocal += approx.lambda(i) * exterior_kernel_integral(domain, x, approx.centers[i], k, quad);
    if (!g_is_zero)
        nonlocal -= exterior_data_integral(domain, x, boundary_g, alpha, quad, g_tail_exponent);
    return value + C * nonlocal;
}

LinearSystem assemble(const CollocationProblem& problem) {
    const std::vector<Point> centers = problem.centers.all();
    const std::vector<Point>& ti = problem.tests.interior;
    const std::vector<Point>& tb = problem.tests.boundary;
    if (centers.size() != ti.size() + tb.size())
        throw std::invalid_argument("assemble: |tests| must equal |centers|");
    const Eigen::Index nbar = static_cast<Eigen::Index>(centers.size());
    const Eigen::Index n = static_cast<Eigen::Index>(ti.size());
    const double alpha = problem.kernel.alpha;
    const int zeta = zeta_alpha(alpha);
    const double C = zeta ? coeff_C(problem.domain.dim(), alpha) : 0.0;

    LinearSystem sys;
    sys.matrix.resize(nbar, nbar);
    sys.rhs.resize(nbar);
    sys.row_kind.assign(nbar, RowKind::Operator);

#pragma omp parallel for schedule(dynamic)
    for (Eigen::Index k = 0; k < n; ++k) {
        const Point& xk = ti[k];
        for (Eigen::Index i = 0; i < nbar; ++i) {
            double entry = frac_lap_phi(problem.kernel, dist(xk, centers[i]));
            if (zeta)
                entry += C * exterior_kernel_integral(problem.domain, xk, centers[i],
                                                      problem.kernel, problem.quad);
            sys.matrix(k, i) = entry;
        }
        double rhs = problem.rhs_f(xk);
        if (zeta && !problem.g_is_zero)
            rhs += C * exterior_data_integral(problem.domain, xk, problem.boundary_g, alpha,
                                              problem.quad, problem.g_tail_exponent);
        sys.rhs(k) = rhs;
    }
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(tb.size()); ++k) {
        const Point& xk = tb[k];
        for (Eigen::Index i = 0; i < nbar; ++i)
            sys.matrix(n + k, i) = phi(problem.kernel, dist(xk, centers[i]));
        sys.rhs(n + k) = problem.boundary_g(xk);
        sys.row_kind[n + k] = RowKind::Boundary;
    }
    if (!sys.matrix.allFinite() || !sys.rhs.allFinite())
        throw std::runtime_error("assemble: non-finite entry produced");
    return sys;
}

double evaluate(const RbfApproximant& approx, const Point& x) {
    double v = 0.0;
    for (std::size_t i = 0; i < approx.centers.size(); ++i)
        v += approx.lambda(i) * phi(approx.kernel, dist(x, approx.centers[i]));
    return v;
}

double rms_error(const std::vector<double>& approx, const std::vector<double>& exact) {
    if (approx.empty() || approx.size() != exact.size())
        throw std::invalid_argument("rms_error: equal non-empty lengths required");
    double s = 0.0;
    for (std::size_t i = 0; i < approx.size(); ++i) {
        const double d = approx[i] - exact[i];
        s += d * d;
    }
    return std::sqrt(s / approx.size());
}

}  // namespace rbffl
