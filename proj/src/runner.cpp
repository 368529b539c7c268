#include "rbffl/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace rbffl {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::vector<Point> sample_points_1d(double lo, double hi, int m) {
    if (m < 1 || !(hi > lo)) throw std::invalid_argument("sample_points_1d: bad arguments");
    std::vector<Point> pts;
    pts.reserve(m);
    for (int j = 1; j <= m; ++j)
        pts.push_back(Point{lo + j * (hi - lo) / (m + 1), 0.0, 1});
    return pts;
}

std::vector<Point> sample_points_2d(const Domain& domain, int per_side) {
    if (per_side < 2) throw std::invalid_argument("sample_points_2d: per_side >= 2 required");
    double ax, ay, bx, by;
    switch (domain.kind) {
        case Domain::Kind::Disk:
            ax = domain.cx - domain.radius, bx = domain.cx + domain.radius;
            ay = domain.cy - domain.radius, by = domain.cy + domain.radius;
            break;
        case Domain::Kind::Rectangle:
            ax = domain.ax, ay = domain.ay, bx = domain.bx, by = domain.by;
            break;
        case Domain::Kind::SquareMinusDisk:
            ax = ay = -domain.half_width, bx = by = domain.half_width;
            break;
        default:
            throw std::invalid_argument("sample_points_2d: 2D domain required");
    }
    // per_side interior nodes of a (per_side + 2)-point inclusive grid, then
    // clipped strictly inside Omega.
    std::vector<Point> pts;
    for (int i = 1; i <= per_side; ++i) {
        const double x = ax + i * (bx - ax) / (per_side + 1);
        for (int j = 1; j <= per_side; ++j) {
            const double y = ay + j * (by - ay) / (per_side + 1);
            Point p{x, y, 2};
            if (domain.contains(p) && domain.boundary_distance(p) > 1e-12) pts.push_back(p);
        }
    }
    return pts;
}

std::vector<Point> sample_points(const ProblemCase& c, int m_points) {
    // m_points <= 0 selects the defaults: 1000 uniform for d = 1, an 80 x 80
    // tensor for d = 2.
    if (c.dim == 1) {
        double lo = c.domain.a, hi = c.domain.b;
        if (c.sample_interval) {
            lo = c.sample_interval->first;
            hi = c.sample_interval->second;
        }
        return sample_points_1d(lo, hi, m_points > 0 ? m_points : 1000);
    }
    if (m_points <= 0) return sample_points_2d(c.domain, 80);
    const int per_side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m_points))));
    return sample_points_2d(c.domain, std::max(2, per_side));
}

PointCloud build_cloud(const ProblemCase& c, int nbar_or_n) {
    switch (c.domain.kind) {
        case Domain::Kind::Interval:
            return uniform_1d(nbar_or_n, c.domain.a, c.domain.b);
        case Domain::Kind::Disk:
            return disk_radial(nbar_or_n);
        case Domain::Kind::SquareMinusDisk:
            return annulus_mapped(nbar_or_n);
        case Domain::Kind::Rectangle:
            return tensor_2d(nbar_or_n, Point{c.domain.ax, c.domain.ay, 2},
                             Point{c.domain.bx, c.domain.by, 2});
    }
    throw std::logic_error("build_cloud: unhandled domain kind");
}

RunRow run_operator(const ProblemCase& c, double alpha, double epsilon, int nbar_or_n,
                    int m_points, const QuadratureSpec& quad) {
    if (!c.exact_u || !c.exact_Lu)
        throw std::invalid_argument("run_operator: case lacks a closed-form operator target");
    const auto start = Clock::now();
    const PointCloud cloud = build_cloud(c, nbar_or_n);
    const RbfKernel kernel = make_kernel(epsilon, c.dim, alpha);

    const std::vector<Point> pts = cloud.all();
    Eigen::VectorXd samples(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        samples(static_cast<Eigen::Index>(i)) = c.exact_u(pts[i], alpha);
    auto [approx, report] = interpolate(kernel, cloud, cloud, samples);

    RunRow row{c.name, c.dim, alpha, epsilon, cloud.nbar(), std::nullopt, report.cond_estimate,
               0.0};
    if (!report.singular) {
        const std::vector<Point> eval_pts = sample_points(c, m_points);
        std::vector<double> num(eval_pts.size()), ex(eval_pts.size());
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < eval_pts.size(); ++i) {
            num[i] = alpha == 0.0
                         ? evaluate(approx, eval_pts[i])
                         : apply_operator(approx, c.domain, alpha, c.boundary_g, c.g_is_zero,
                                          c.g_tail_exponent, quad, eval_pts[i]);
            ex[i] = c.exact_Lu(eval_pts[i], alpha);
        }
        row.rms = rms_error(num, ex);
    }
    row.seconds = elapsed_seconds(start);
    return row;
}

RunRow run_solve(const ProblemCase& c, double alpha, double epsilon, int nbar_or_n, int m_points,
                 const QuadratureSpec& quad) {
    if (!c.rhs_f || !c.exact_u)
        throw std::invalid_argument("run_solve: case lacks rhs or exact solution");
    const auto start = Clock::now();
    const PointCloud cloud = build_cloud(c, nbar_or_n);
    CollocationProblem problem;
    problem.domain = c.domain;
    problem.kernel = make_kernel(epsilon, c.dim, alpha);
    problem.centers = cloud;
    problem.tests = cloud;
    problem.rhs_f = [&](const Point& p) { return c.rhs_f(p, alpha); };
    problem.boundary_g = c.boundary_g;
    problem.g_is_zero = c.g_is_zero;
    problem.g_tail_exponent = c.g_tail_exponent;
    problem.quad = quad;

    const LinearSystem sys = assemble(problem);
    const SolveReport report = solve(sys);
    RunRow row{c.name, c.dim, alpha, epsilon, cloud.nbar(), std::nullopt, report.cond_estimate,
               0.0};
    if (!report.singular) {
        RbfApproximant approx{problem.kernel, cloud.all(), report.lambda};
        const std::vector<Point> eval_pts = sample_points(c, m_points);
        std::vector<double> num(eval_pts.size()), ex(eval_pts.size());
        for (std::size_t i = 0; i < eval_pts.size(); ++i) {
            num[i] = evaluate(approx, eval_pts[i]);
            ex[i] = c.exact_u(eval_pts[i], alpha);
        }
        row.rms = rms_error(num, ex);
    }
    row.seconds = elapsed_seconds(start);
    return row;
}

std::vector<RunRow> run_sweep(const ProblemCase& c, double alpha,
                              const std::vector<double>& epsilons, int nbar_or_n, int m_points,
                              const QuadratureSpec& quad) {
    if (epsilons.empty()) throw std::invalid_argument("run_sweep: empty epsilon list");
    std::vector<RunRow> rows;
    rows.reserve(epsilons.size());
    for (double eps : epsilons)
        rows.push_back(c.exact_Lu ? run_operator(c, alpha, eps, nbar_or_n, m_points, quad)
                                  : run_solve(c, alpha, eps, nbar_or_n, m_points, quad));
    return rows;
}

Target2d table2_target() {
    Target2d t;
    t.u = [](const Point& p) { return std::exp(-p.norm2()) * std::sin(p.y); };
    t.minus_lap_u = [](const Point& p) {
        const double r2 = p.norm2();
        return std::exp(-r2) * ((5.0 - 4.0 * r2) * std::sin(p.y) + 4.0 * p.y * std::cos(p.y));
    };
    return t;
}

std::vector<RunRow> run_compare_fdm(const Target2d& target, double epsilon,
                                    const std::vector<int>& n_sides, int m_points,
                                    const QuadratureSpec& quad) {
    std::vector<RunRow> rows;
    const Domain domain = Domain::rectangle(-1.0, -1.0, 1.0, 1.0);
    for (int n_side : n_sides) {
        if (n_side < 3) throw std::invalid_argument("run_compare_fdm: n_side >= 3 required");

        // RBF operator mode, alpha = 2, target interpolated on the grid.
        ProblemCase c;
        c.name = "rbf";
        c.dim = 2;
        c.domain = domain;
        c.exact_u = [&target](const Point& p, double) { return target.u(p); };
        c.exact_Lu = [&target](const Point& p, double) { return target.minus_lap_u(p); };
        c.boundary_g = target.u;
        rows.push_back(run_operator(c, 2.0, epsilon, n_side, m_points, quad));

        // 5-point stencil on the same grid, RMS at the interior grid points.
        const auto start = Clock::now();
        const double h = 2.0 / (n_side - 1);
        std::vector<double> grid(static_cast<std::size_t>(n_side) * n_side);
        std::vector<double> exact;
        for (int i = 0; i < n_side; ++i)
            for (int j = 0; j < n_side; ++j) {
                const Point p{-1.0 + i * h, -1.0 + j * h, 2};
                grid[static_cast<std::size_t>(i) * n_side + j] = target.u(p);
                if (i > 0 && i < n_side - 1 && j > 0 && j < n_side - 1)
                    exact.push_back(target.minus_lap_u(p));
            }
        const std::vector<double> fdm = fdm_laplacian_2d(grid, n_side, h);
        RunRow fdm_row{"fdm", 2, 2.0, epsilon,
                       static_cast<std::size_t>(n_side) * n_side, rms_error(fdm, exact), 0.0,
                       0.0};
        fdm_row.seconds = elapsed_seconds(start);
        rows.push_back(fdm_row);
    }
    return rows;
}

RunRow run_diffuse(const ProblemCase& c, double alpha, double epsilon, int n_side, double dt,
                   double t_end, int m_points, const QuadratureSpec& quad, std::ostream* log) {
    if (!c.exact_u || !c.exact_Lu)
        throw std::invalid_argument("run_diffuse: case lacks spatial profile data");
    const auto start = Clock::now();
    const PointCloud cloud = build_cloud(c, n_side);
    const RbfKernel kernel = make_kernel(epsilon, c.dim, alpha);

    // u(x, t) = t * profile(x): u_t = profile, so f = profile + t * L(profile)
    // and the exterior data g(y, t) = t * profile(y).
    auto profile = [&c](const Point& p) { return c.exact_u(p, 0.0); };
    auto rhs_f = [&c, alpha](const Point& p, double t) {
        return c.exact_u(p, alpha) + t * c.exact_Lu(p, alpha);
    };
    const DiffusionSetup setup =
        prepare_diffusion(c.domain, kernel, cloud, quad, dt, t_end, rhs_f, profile,
                          [](double t) { return t; }, c.g_is_zero, c.g_tail_exponent);

    const std::vector<Point> samples = sample_points(c, m_points);
    auto exact_u = [&profile](const Point& p, double t) { return t * profile(p); };
    const std::vector<TimeRecord> series = run_diffusion(setup, samples, exact_u);
    if (log)
        for (const TimeRecord& r : series)
            *log << "t=" << r.t << " rms=" << r.rms << " cond=" << r.cond << "\n";

    const TimeRecord& last = series.back();
    RunRow row{c.name, c.dim, alpha, epsilon, cloud.nbar(), std::nullopt, last.cond, 0.0};
    if (std::isfinite(last.rms)) row.rms = last.rms;
    row.seconds = elapsed_seconds(start);
    return row;
}

void write_csv(std::ostream& out, const std::vector<RunRow>& rows) {
    out << "case,d,alpha,epsilon,nbar,rms,cond,seconds\n";
    char buf[64];
    auto sci = [&buf](double v) {
        std::snprintf(buf, sizeof(buf), "%.5e", v);
        return std::string(buf);
    };
    for (const RunRow& r : rows) {
        out << r.case_label << ',' << r.d << ',' << sci(r.alpha) << ',' << sci(r.epsilon) << ','
            << r.nbar << ',' << (r.rms ? sci(*r.rms) : std::string()) << ',' << sci(r.cond) << ','
            << sci(r.seconds) << '\n';
    }
}

}  // namespace rbffl
