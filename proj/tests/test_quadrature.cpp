#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rbffl/quadrature.hpp"

using namespace rbffl;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Composite Simpson oracle, independent of the adaptive Gauss-Kronrod engine.
double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

}  // namespace

TEST_CASE("adaptive_gk on closed-form integrals") {
    CHECK(rel_err(adaptive_gk([](double x) { return x * x * x; }, 0.0, 1.0, 1e-12, 1e-15), 0.25) <
          1e-13);
    CHECK(rel_err(adaptive_gk([](double x) { return std::sin(x); }, 0.0, kPi, 1e-12, 1e-15), 2.0) <
          1e-12);
    CHECK(rel_err(adaptive_gk([](double x) { return std::exp(-x * x); }, -6.0, 6.0, 1e-12, 1e-15),
                  std::sqrt(kPi)) < 1e-12);
    // Integrable endpoint singularity, handled by subdivision.
    CHECK(rel_err(adaptive_gk([](double x) { return 1.0 / std::sqrt(x); }, 1e-12, 1.0, 1e-9, 1e-12),
                  2.0) < 1e-5);
}

TEST_CASE("1D exterior kernel integral vs Simpson oracle") {
    const Domain dom = Domain::interval(-1.0, 1.0);
    for (double alpha : {0.4, 1.0, 1.7})
        for (double xi : {-0.5, 0.0, 0.9}) {
            const RbfKernel k = make_kernel(2.0, 1, alpha);
            const Point x_k{0.3, 0.0, 1}, x_i{xi, 0.0, 1};
            const double got = exterior_kernel_integral(dom, x_k, x_i, k, QuadratureSpec{});
            auto f = [&](double y) {
                return std::exp(-4.0 * (y - xi) * (y - xi)) *
                       std::pow(std::abs(y - 0.3), -1.0 - alpha);
            };
            // The Gaussian reach makes [edge, edge +- 8] fully converged.
            const double want = simpson(f, 1.0, 9.0, 40000) + simpson(f, -9.0, -1.0, 40000);
            CHECK(rel_err(got, want) < 1e-6);
        }
}

TEST_CASE("1D exterior data integral with g = 1 has a closed form") {
    // Integral of |x_k - y|^{-1-alpha} over R \ (a,b) = ((b-x)^-a + (x-a)^-a)/alpha.
    const Domain dom = Domain::interval(-2.0, 2.0);
    auto one = [](const Point&) { return 1.0; };
    for (double alpha : {0.3, 1.0, 1.9})
        for (double x : {-1.5, 0.0, 1.2}) {
            const double got =
                exterior_data_integral(dom, Point{x, 0.0, 1}, one, alpha, QuadratureSpec{});
            const double want =
                (std::pow(2.0 - x, -alpha) + std::pow(x + 2.0, -alpha)) / alpha;
            CHECK(rel_err(got, want) < 1e-9);
        }
}

TEST_CASE("1D exterior data integral vs Simpson oracle for decaying g") {
    const Domain dom = Domain::interval(-2.0, 2.0);
    auto g = [](const Point& p) { return 1.0 / (1.0 + p.x * p.x); };
    for (double alpha : {0.4, 1.3}) {
        const Point x_k{0.7, 0.0, 1};
        const double got = exterior_data_integral(dom, x_k, g, alpha, QuadratureSpec{}, 2.0);
        auto f = [&](double y) {
            return std::pow(std::abs(y - 0.7), -1.0 - alpha) / (1.0 + y * y);
        };
        // Truncated tails: the integrand decays like |y|^{-3-alpha}.
        const double want = simpson(f, 2.0, 3000.0, 400000) + simpson(f, -3000.0, -2.0, 400000);
        CHECK(rel_err(got, want) < 1e-5);
    }
}

TEST_CASE("2D disk: data integral of g = 1 from the center has a closed form") {
    const Domain dom = Domain::disk(0.0, 0.0, 1.0);
    auto one = [](const Point&) { return 1.0; };
    for (double alpha : {0.5, 1.0, 1.5}) {
        const double got =
            exterior_data_integral(dom, Point{0.0, 0.0, 2}, one, alpha, QuadratureSpec{});
        CHECK(rel_err(got, 2.0 * kPi / alpha) < 1e-9);
    }
}

TEST_CASE("2D disk exterior kernel integral vs polar Simpson oracle") {
    const Domain dom = Domain::disk(0.0, 0.0, 1.0);
    const double alpha = 0.8, eps = 1.5;
    const RbfKernel k = make_kernel(eps, 2, alpha);
    const Point x_k{0.3, -0.2, 2}, x_i{-0.4, 0.5, 2};
    const double got = exterior_kernel_integral(dom, x_k, x_i, k, QuadratureSpec{});

    // Oracle: theta via composite Simpson (4096 panels), radius via fine
    // Simpson on [exit, exit + 12] from x_k.
    auto radial = [&](double th) {
        const double c = std::cos(th), s = std::sin(th);
        const double p = (x_k.x * c + x_k.y * s);
        const double q = x_k.norm2() - 1.0;
        const double r0 = -p + std::sqrt(p * p - q);
        auto f = [&](double r) {
            const double dx = x_k.x + r * c - x_i.x, dy = x_k.y + r * s - x_i.y;
            return std::exp(-eps * eps * (dx * dx + dy * dy)) * std::pow(r, -1.0 - alpha);
        };
        return simpson(f, r0, r0 + 12.0, 3000);
    };
    const double want = simpson(radial, 0.0, 2.0 * kPi, 4096);
    CHECK(rel_err(got, want) < 1e-6);
}

TEST_CASE("2D square-minus-disk kernel integral: square part plus hole part") {
    const Domain smd = Domain::square_minus_disk(1.0, 0.5);
    const Domain square = Domain::rectangle(-1.0, -1.0, 1.0, 1.0);
    const double alpha = 1.0, eps = 1.5;
    const RbfKernel k = make_kernel(eps, 2, alpha);
    const Point x_k{0.75, 0.1, 2}, x_i{-0.6, -0.6, 2};
    const double whole = exterior_kernel_integral(smd, x_k, x_i, k, QuadratureSpec{});
    const double outside_square = exterior_kernel_integral(square, x_k, x_i, k, QuadratureSpec{});
    // Hole oracle: tensor Simpson in polar coordinates around the origin.
    auto ring = [&](double r) {
        auto f = [&](double th) {
            const double px = r * std::cos(th), py = r * std::sin(th);
            const double dx = px - x_i.x, dy = py - x_i.y;
            const double rk = std::hypot(px - x_k.x, py - x_k.y);
            return std::exp(-eps * eps * (dx * dx + dy * dy)) * std::pow(rk, -2.0 - alpha) * r;
        };
        return simpson(f, 0.0, 2.0 * kPi, 1024);
    };
    const double hole = simpson(ring, 0.0, 0.5, 1024);
    CHECK(rel_err(whole, outside_square + hole) < 1e-6);
}

TEST_CASE("kernel integrals are positive and translation invariant") {
    const double alpha = 0.9;
    const RbfKernel k = make_kernel(2.0, 1, alpha);
    const Domain d1 = Domain::interval(-1.0, 1.0);
    const Domain d2 = Domain::interval(4.0, 6.0);
    const double v1 =
        exterior_kernel_integral(d1, Point{0.2, 0, 1}, Point{-0.7, 0, 1}, k, QuadratureSpec{});
    const double v2 =
        exterior_kernel_integral(d2, Point{5.2, 0, 1}, Point{4.3, 0, 1}, k, QuadratureSpec{});
    CHECK(v1 > 0.0);
    CHECK(rel_err(v1, v2) < 1e-10);
}

TEST_CASE("kernel integral grows as the test point approaches the boundary") {
    const Domain dom = Domain::interval(-1.0, 1.0);
    const RbfKernel k = make_kernel(2.0, 1, 0.6);
    const Point x_i{0.9, 0.0, 1};
    double prev = 0.0;
    for (double x : {0.0, 0.5, 0.8, 0.95}) {
        const double v = exterior_kernel_integral(dom, Point{x, 0, 1}, x_i, k, QuadratureSpec{});
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("error conditions") {
    const Domain dom = Domain::interval(-1.0, 1.0);
    const RbfKernel k2 = make_kernel(1.0, 1, 2.0);
    CHECK_THROWS_AS(
        exterior_kernel_integral(dom, Point{0, 0, 1}, Point{0.5, 0, 1}, k2, QuadratureSpec{}),
        std::domain_error);
    const RbfKernel k = make_kernel(1.0, 1, 1.0);
    CHECK_THROWS_AS(
        exterior_kernel_integral(dom, Point{1.5, 0, 1}, Point{0.5, 0, 1}, k, QuadratureSpec{}),
        std::invalid_argument);
    auto bad_g = [](const Point&) { return std::nan(""); };
    CHECK_THROWS_AS(exterior_data_integral(dom, Point{0, 0, 1}, bad_g, 1.0, QuadratureSpec{}),
                    std::runtime_error);
}
