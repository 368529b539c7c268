#include <cmath>

#include "doctest.h"
#include "rbffl/reference.hpp"
#include "rbffl/runner.hpp"
#include "rbffl/timestepper.hpp"

using namespace rbffl;

namespace {

DiffusionSetup zero_setup(double alpha, double dt, double t_end) {
    const Domain dom = Domain::rectangle(-1, -1, 1, 1);
    const PointCloud cloud = tensor_2d(4, {-1, -1, 2}, {1, 1, 2});
    return prepare_diffusion(dom, make_kernel(1.9, 2, alpha), cloud, QuadratureSpec{}, dt, t_end,
                             [](const Point&, double) { return 0.0; },
                             [](const Point&) { return 0.0; }, [](double) { return 0.0; },
                             /*g_is_zero=*/true, 0.0);
}

}  // namespace

TEST_CASE("block dimensions and matrix reuse") {
    const DiffusionSetup s = zero_setup(1.0, 1e-2, 0.1);
    CHECK(s.A.rows() == 4);
    CHECK(s.A.cols() == 16);
    CHECK(s.B.rows() == 4);
    CHECK(s.C.rows() == 12);
    CHECK(s.W.size() == 4);
    // w vector vanishes for homogeneous exterior data.
    CHECK(s.W.norm() == 0.0);
}

TEST_CASE("zero data gives identically zero dynamics") {
    const DiffusionSetup s = zero_setup(1.3, 1e-2, 0.1);
    DiffusionStepper stepper(s);
    TimestepState st = stepper.init();
    CHECK(st.lambda.norm() == 0.0);
    CHECK(st.w.norm() == 0.0);
    for (int i = 0; i < 10; ++i) stepper.step(st);
    CHECK(st.lambda.norm() == 0.0);
    CHECK(st.step_index == 10);
    CHECK(st.t == doctest::Approx(0.1));
}

TEST_CASE("w vector is identically zero at alpha = 2 even with data") {
    const Domain dom = Domain::rectangle(-1, -1, 1, 1);
    const PointCloud cloud = tensor_2d(4, {-1, -1, 2}, {1, 1, 2});
    const DiffusionSetup s = prepare_diffusion(
        dom, make_kernel(1.9, 2, 2.0), cloud, QuadratureSpec{}, 1e-2, 0.1,
        [](const Point&, double) { return 1.0; }, [](const Point& p) { return diffusion_profile(p); },
        [](double t) { return t; }, /*g_is_zero=*/false, 3.0);
    CHECK(s.W.norm() == 0.0);
}

TEST_CASE("constant-in-time manufactured solution is a fixed point") {
    // u(x, t) = profile(x) for all t: f = L profile, g = profile, u0 = profile.
    const Domain dom = Domain::rectangle(-1, -1, 1, 1);
    const PointCloud cloud = tensor_2d(6, {-1, -1, 2}, {1, 1, 2});
    const double alpha = 1.0;
    const DiffusionSetup s = prepare_diffusion(
        dom, make_kernel(1.9, 2, alpha), cloud, QuadratureSpec{}, 1e-2, 0.1,
        [alpha](const Point& p, double) { return diffusion_profile_Lu(p, alpha); },
        [](const Point& p) { return diffusion_profile(p); }, [](double) { return 1.0; },
        /*g_is_zero=*/false, 3.0, [](const Point& p) { return diffusion_profile(p); });
    DiffusionStepper stepper(s);
    REQUIRE_FALSE(stepper.singular());
    TimestepState st = stepper.init();
    const Eigen::VectorXd lambda0 = st.lambda;
    for (int i = 0; i < 10; ++i) stepper.step(st);
    // Drift stays at the level of the spatial discretization error of the
    // interpolated initial state, far below the solution scale.
    const RbfApproximant a0{s.kernel, s.cloud.all(), lambda0};
    const RbfApproximant a1{s.kernel, s.cloud.all(), st.lambda};
    double drift = 0.0;
    for (const Point& p : sample_points_2d(dom, 20))
        drift = std::max(drift, std::abs(evaluate(a1, p) - evaluate(a0, p)));
    CHECK(drift < 5e-3);
}

TEST_CASE("Crank-Nicolson time symmetry: forward then backward returns") {
    const Domain dom = Domain::rectangle(-1, -1, 1, 1);
    const PointCloud cloud = tensor_2d(5, {-1, -1, 2}, {1, 1, 2});
    const double alpha = 2.0;  // local scheme: cheap and well-conditioned
    const DiffusionSetup s = prepare_diffusion(
        dom, make_kernel(1.5, 2, alpha), cloud, QuadratureSpec{}, 1e-2, 0.1,
        [alpha](const Point& p, double t) {
            return diffusion_profile(p) + t * diffusion_profile_Lu(p, alpha);
        },
        [](const Point& p) { return diffusion_profile(p); }, [](double t) { return t; },
        /*g_is_zero=*/false, 3.0);
    DiffusionStepper stepper(s);
    TimestepState st = stepper.init();
    for (int i = 0; i < 5; ++i) stepper.step(st);
    const Eigen::VectorXd mid = st.lambda;
    stepper.step_with_dt(st, -1e-2);
    stepper.step_with_dt(st, 1e-2);
    CHECK((st.lambda - mid).norm() <= 1e-9 * std::max(1.0, mid.norm()));
}

TEST_CASE("linear-in-t solution: halving dt changes the t=1 RMS by < 1%") {
    const ProblemCase c = diffusion_case();
    const QuadratureSpec quad;
    const RunRow a = run_diffuse(c, 1.0, 1.9, 5, 1e-2, 1.0, 400, quad);
    const RunRow b = run_diffuse(c, 1.0, 1.9, 5, 5e-3, 1.0, 400, quad);
    REQUIRE(a.rms.has_value());
    REQUIRE(b.rms.has_value());
    CHECK(std::abs(*a.rms - *b.rms) < 0.01 * *a.rms);
}

TEST_CASE("alpha = 2 diffusion matches the steady profile at t = 1") {
    // Spatial-error-dominated regime: the t = 1 state equals the spatial
    // profile; with an 8x8 tensor grid the RMS is small.
    const ProblemCase c = diffusion_case();
    const RunRow row = run_diffuse(c, 2.0, 1.9, 8, 1e-3, 1.0, 400, QuadratureSpec{});
    REQUIRE(row.rms.has_value());
    CHECK(*row.rms < 1e-2);
}

TEST_CASE("run_diffusion honors t_end = 0 and cadence") {
    DiffusionSetup s = zero_setup(1.0, 1e-2, 0.0);
    auto exact = [](const Point&, double) { return 0.0; };
    const auto series = run_diffusion(s, sample_points_2d(s.domain, 10), exact);
    REQUIRE(series.size() == 1);
    CHECK(series[0].t == 0.0);
    CHECK(series[0].rms == 0.0);

    DiffusionSetup s2 = zero_setup(1.0, 1e-2, 0.5);
    const auto series2 = run_diffusion(s2, sample_points_2d(s2.domain, 10), exact, 0.1);
    REQUIRE(series2.size() == 6);  // t = 0, 0.1, ..., 0.5
    CHECK(series2.back().t == doctest::Approx(0.5));
}

TEST_CASE("invalid arguments") {
    CHECK_THROWS_AS(zero_setup(1.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(zero_setup(1.0, -1e-3, 1.0), std::invalid_argument);
}
