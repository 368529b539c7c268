#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "rbffl/kernel.hpp"

using namespace rbffl;

namespace {
bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}
}  // namespace

TEST_CASE("kernel validation") {
    CHECK_THROWS_AS(make_kernel(0.0, 1, 1.0), std::domain_error);
    CHECK_THROWS_AS(make_kernel(1.0, 4, 1.0), std::domain_error);
    CHECK_THROWS_AS(make_kernel(1.0, 1, 2.5), std::domain_error);
    CHECK_THROWS_AS(make_kernel(1.0, 1, -0.1), std::domain_error);
    const RbfKernel k = make_kernel(2.0, 1, 1.0);
    CHECK_THROWS_AS(phi(k, -1.0), std::domain_error);
    CHECK_THROWS_AS(frac_lap_phi(k, -1.0), std::domain_error);
}

TEST_CASE("phi is the Gaussian") {
    const RbfKernel k = make_kernel(3.0, 2, 1.0);
    CHECK(phi(k, 0.0) == 1.0);
    CHECK(rel_close(phi(k, 0.5), std::exp(-9.0 * 0.25), 1e-15));
}

TEST_CASE("alpha = 2 closed form equals classical Laplacian of the Gaussian") {
    // -Delta e^{-eps^2 r^2} = eps^2 (2d - 4 eps^2 r^2) e^{-eps^2 r^2}
    for (int d : {1, 2, 3})
        for (double eps : {0.7, 2.0})
            for (double r : {0.0, 0.3, 1.5}) {
                const RbfKernel k = make_kernel(eps, d, 2.0);
                const double e2 = eps * eps;
                const double expect = e2 * (2.0 * d - 4.0 * e2 * r * r) * std::exp(-e2 * r * r);
                CHECK(rel_close(frac_lap_phi(k, r), expect, 1e-13));
            }
}

TEST_CASE("alpha = 2 classical Laplacian via central differences (d = 1)") {
    const RbfKernel k = make_kernel(1.3, 1, 2.0);
    const double h = 1e-5;
    auto u = [&](double x) { return phi(k, std::abs(x)); };
    for (double x : {0.2, 0.9, 1.7}) {
        const double lap = (u(x + h) - 2.0 * u(x) + u(x - h)) / (h * h);
        CHECK(rel_close(frac_lap_phi(k, x), -lap, 1e-5));
    }
}

TEST_CASE("alpha = 0 is the identity") {
    for (int d : {1, 2})
        for (double r : {0.0, 0.4, 2.2}) {
            const RbfKernel k = make_kernel(1.5, d, 0.0);
            CHECK(frac_lap_phi(k, r) == phi(k, r));
        }
}

TEST_CASE("scaling law: flap_{eps}(r) = eps^alpha flap_1(eps r)") {
    for (int d : {1, 2})
        for (double alpha : {0.4, 1.0, 1.6, 2.0})
            for (double eps : {0.5, 2.0, 4.5})
                for (double r : {0.1, 0.7, 1.9}) {
                    const RbfKernel ke = make_kernel(eps, d, alpha);
                    const RbfKernel k1 = make_kernel(1.0, d, alpha);
                    const double lhs = frac_lap_phi(ke, r);
                    const double rhs = std::pow(eps, alpha) * frac_lap_phi(k1, eps * r);
                    CHECK(rel_close(lhs, rhs, 1e-11));
                }
}

TEST_CASE("epsilon sign symmetry") {
    for (double alpha : {0.7, 1.3}) {
        const RbfKernel kp = make_kernel(2.5, 1, alpha);
        const RbfKernel kn = make_kernel(-2.5, 1, alpha);
        for (double r : {0.0, 0.6, 1.4}) CHECK(frac_lap_phi(kp, r) == frac_lap_phi(kn, r));
    }
}

TEST_CASE("alpha continuity near the endpoints") {
    // Lemma 1 as alpha -> 2^- approaches the classical closed form, and
    // alpha -> 0^+ approaches phi.
    const double r = 0.8;
    for (int d : {1, 2}) {
        const RbfKernel k2 = make_kernel(1.7, d, 2.0);
        const RbfKernel k2m = make_kernel(1.7, d, 2.0 - 1e-9);
        CHECK(rel_close(frac_lap_phi(k2m, r), frac_lap_phi(k2, r), 1e-6));
        const RbfKernel k0 = make_kernel(1.7, d, 0.0);
        const RbfKernel k0p = make_kernel(1.7, d, 1e-9);
        CHECK(rel_close(frac_lap_phi(k0p, r), frac_lap_phi(k0, r), 1e-6));
    }
}

TEST_CASE("fractional values are finite and decay for large r") {
    for (double alpha : {0.3, 1.0, 1.9}) {
        const RbfKernel k = make_kernel(2.0, 1, alpha);
        double prev = std::abs(frac_lap_phi(k, 2.0));
        for (double r = 3.0; r <= 12.0; r += 1.0) {
            const double v = std::abs(frac_lap_phi(k, r));
            CHECK(std::isfinite(v));
            CHECK(v <= prev);
            prev = v;
        }
    }
}
