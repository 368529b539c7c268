#include "rbffl/timestepper.hpp"

#include <cmath>
#include <stdexcept>

#include "rbffl/specfun.hpp"

namespace rbffl {

DiffusionSetup prepare_diffusion(const Domain& domain, const RbfKernel& kernel,
                                 const PointCloud& cloud, const QuadratureSpec& quad, double dt,
                                 double t_end,
                                 std::function<double(const Point&, double)> rhs_f,
                                 std::function<double(const Point&)> g_space,
                                 std::function<double(double)> g_time, bool g_is_zero,
                                 double g_tail_exponent,
                                 std::function<double(const Point&)> initial_u) {
    if (!(dt > 0.0)) throw std::invalid_argument("prepare_diffusion: dt > 0 required");
    if (t_end < 0.0) throw std::invalid_argument("prepare_diffusion: t_end >= 0 required");
    DiffusionSetup s;
    s.domain = domain;
    s.kernel = kernel;
    s.cloud = cloud;
    s.quad = quad;
    s.dt = dt;
    s.t_end = t_end;
    s.rhs_f = std::move(rhs_f);
    s.g_space = std::move(g_space);
    s.g_time = std::move(g_time);
    s.g_is_zero = g_is_zero;
    s.g_tail_exponent = g_tail_exponent;
    s.initial_u = std::move(initial_u);

    const std::vector<Point> centers = s.cloud.all();
    const Eigen::Index nbar = static_cast<Eigen::Index>(centers.size());
    const Eigen::Index n = static_cast<Eigen::Index>(s.cloud.interior.size());
    const double alpha = kernel.alpha;
    const int zeta = zeta_alpha(alpha);
    const double Cda = zeta ? coeff_C(domain.dim(), alpha) : 0.0;

    s.A.resize(n, nbar);
    s.B.resize(n, nbar);
    s.C.resize(nbar - n, nbar);
    s.W = Eigen::VectorXd::Zero(n);

#pragma omp parallel for schedule(dynamic)
    for (Eigen::Index k = 0; k < n; ++k) {
        const Point& xk = s.cloud.interior[k];
        for (Eigen::Index i = 0; i < nbar; ++i) {
            const double r = dist(xk, centers[i]);
            s.B(k, i) = phi(kernel, r);
            double entry = frac_lap_phi(kernel, r);
            if (zeta) entry += Cda * exterior_kernel_integral(domain, xk, centers[i], kernel, quad);
            s.A(k, i) = entry;
        }
        if (zeta && !s.g_is_zero)
            s.W(k) = Cda * exterior_data_integral(domain, xk, s.g_space, alpha, quad,
                                                  s.g_tail_exponent);
    }
    for (Eigen::Index k = 0; k < nbar - n; ++k) {
        const Point& xk = s.cloud.boundary[k];
        for (Eigen::Index i = 0; i < nbar; ++i)
            s.C(k, i) = phi(kernel, dist(xk, centers[i]));
    }
    if (!s.A.allFinite() || !s.B.allFinite() || !s.C.allFinite() || !s.W.allFinite())
        throw std::runtime_error("prepare_diffusion: non-finite assembly entry");
    return s;
}

namespace {

Eigen::MatrixXd block_matrix(const DiffusionSetup& s, double dt) {
    const Eigen::Index n = s.A.rows(), nbar = s.A.cols();
    Eigen::MatrixXd m(nbar, nbar);
    m.topRows(n) = s.B + (dt / 2.0) * s.A;
    m.bottomRows(nbar - n) = s.C;
    return m;
}

double cond_from_svd(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin <= 0.0) return std::numeric_limits<double>::infinity();
    return sv(0) / smin;
}

}  // namespace

DiffusionStepper::DiffusionStepper(const DiffusionSetup& setup) : setup_(setup) {
    forward_ = block_matrix(setup_, setup_.dt);
    backward_ = setup_.B - (setup_.dt / 2.0) * setup_.A;
    cond_estimate_ = cond_from_svd(forward_);
    lu_.compute(forward_);
    // Probe the factorization once; a defective matrix surfaces as non-finite.
    singular_ = !lu_.solve(Eigen::VectorXd::Ones(forward_.rows())).allFinite();
}

TimestepState DiffusionStepper::init() const {
    const Eigen::Index nbar = setup_.A.cols();
    const Eigen::Index n = setup_.A.rows();
    TimestepState st;
    st.step_index = 0;
    st.t = 0.0;
    st.w = setup_.g_is_zero ? Eigen::VectorXd::Zero(n)
                            : Eigen::VectorXd(setup_.g_time(0.0) * setup_.W);
    if (!setup_.initial_u) {
        st.lambda = Eigen::VectorXd::Zero(nbar);
        return st;
    }
    // Interpolate u(., 0) over the full cloud.
    const std::vector<Point> pts = setup_.cloud.all();
    Eigen::VectorXd samples(nbar);
    for (Eigen::Index i = 0; i < nbar; ++i) samples(i) = setup_.initial_u(pts[i]);
    Eigen::MatrixXd interp(nbar, nbar);
    interp.topRows(n) = setup_.B;
    interp.bottomRows(nbar - n) = setup_.C;
    st.lambda = Eigen::PartialPivLU<Eigen::MatrixXd>(interp).solve(samples);
    if (!st.lambda.allFinite())
        throw std::runtime_error("init: singular interpolation matrix");
    return st;
}

void DiffusionStepper::advance(TimestepState& state, double dt,
                               const Eigen::PartialPivLU<Eigen::MatrixXd>& lu,
                               const Eigen::MatrixXd& backward) const {
    const Eigen::Index n = setup_.A.rows(), nbar = setup_.A.cols();
    const double t0 = state.t, t1 = state.t + dt;
    Eigen::VectorXd w1 = setup_.g_is_zero ? Eigen::VectorXd::Zero(n)
                                          : Eigen::VectorXd(setup_.g_time(t1) * setup_.W);
    Eigen::VectorXd rhs(nbar);
    Eigen::VectorXd interior = backward * state.lambda;
    for (Eigen::Index k = 0; k < n; ++k) {
        const Point& xk = setup_.cloud.interior[k];
        interior(k) += (dt / 2.0) *
                       (setup_.rhs_f(xk, t0) + setup_.rhs_f(xk, t1) + state.w(k) + w1(k));
    }
    rhs.head(n) = interior;
    for (Eigen::Index k = 0; k < nbar - n; ++k) {
        const Point& yk = setup_.cloud.boundary[k];
        rhs(n + k) = setup_.g_is_zero ? 0.0 : setup_.g_time(t1) * setup_.g_space(yk);
    }
    state.lambda = lu.solve(rhs);
    if (!state.lambda.allFinite()) throw std::runtime_error("step: non-finite solution");
    state.w = std::move(w1);
    state.t = t1;
    ++state.step_index;
}

void DiffusionStepper::step(TimestepState& state) const {
    advance(state, setup_.dt, lu_, backward_);
}

void DiffusionStepper::step_with_dt(TimestepState& state, double dt) const {
    if (dt == setup_.dt) {
        advance(state, dt, lu_, backward_);
        return;
    }
    Eigen::MatrixXd fwd = block_matrix(setup_, dt);
    Eigen::MatrixXd bwd = setup_.B - (dt / 2.0) * setup_.A;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(fwd);
    advance(state, dt, lu, bwd);
}

std::vector<TimeRecord> run_diffusion(const DiffusionSetup& setup,
                                      const std::vector<Point>& sample_points,
                                      const std::function<double(const Point&, double)>& exact_u,
                                      double output_cadence) {
    DiffusionStepper stepper(setup);
    TimestepState st = stepper.init();

    RbfApproximant approx{setup.kernel, setup.cloud.all(), st.lambda};
    auto record = [&](double t) {
        approx.lambda = st.lambda;
        double rms = 0.0;
        if (exact_u && !sample_points.empty()) {
            std::vector<double> num(sample_points.size()), ex(sample_points.size());
            for (std::size_t i = 0; i < sample_points.size(); ++i) {
                num[i] = evaluate(approx, sample_points[i]);
                ex[i] = exact_u(sample_points[i], t);
            }
            rms = rms_error(num, ex);
        }
        return TimeRecord{t, rms, stepper.cond_estimate()};
    };

    std::vector<TimeRecord> series;
    series.push_back(record(0.0));
    if (setup.t_end <= 0.0) return series;

    const long n_steps = std::lround(setup.t_end / setup.dt);
    if (n_steps < 1 || std::abs(n_steps * setup.dt - setup.t_end) > 1e-9 * setup.t_end)
        throw std::invalid_argument("run_diffusion: t_end must be an integer multiple of dt");
    double next_output = output_cadence;
    for (long i = 0; i < n_steps; ++i) {
        stepper.step(st);
        if (st.t >= next_output - 1e-12 || i == n_steps - 1) {
            series.push_back(record(st.t));
            while (next_output <= st.t + 1e-12) next_output += output_cadence;
        }
    }
    return series;
}

}  // namespace rbffl
