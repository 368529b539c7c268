#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "rbffl/geometry.hpp"

using namespace rbffl;

TEST_CASE("domain membership and boundary predicates") {
    const Domain iv = Domain::interval(-2.0, 2.0);
    CHECK(iv.contains({0.5, 0.0, 1}));
    CHECK_FALSE(iv.contains({2.0, 0.0, 1}));
    CHECK(iv.on_boundary({-2.0, 0.0, 1}));
    CHECK(iv.boundary_distance({1.5, 0.0, 1}) == doctest::Approx(0.5));

    const Domain dk = Domain::disk(0.0, 0.0, 1.0);
    CHECK(dk.contains({0.3, 0.4, 2}));
    CHECK(dk.on_boundary({0.6, 0.8, 2}));
    CHECK(dk.boundary_distance({0.3, 0.4, 2}) == doctest::Approx(0.5));

    const Domain rc = Domain::rectangle(-1.0, -1.0, 1.0, 1.0);
    CHECK(rc.contains({0.9, -0.9, 2}));
    CHECK(rc.on_boundary({1.0, 0.2, 2}));
    CHECK_FALSE(rc.on_boundary({1.5, 0.2, 2}));

    const Domain smd = Domain::square_minus_disk(1.0, 0.5);
    CHECK(smd.contains({0.75, 0.0, 2}));
    CHECK_FALSE(smd.contains({0.3, 0.0, 2}));  // inside the hole
    CHECK(smd.on_boundary({0.5, 0.0, 2}));     // inner circle
    CHECK(smd.on_boundary({1.0, 0.4, 2}));     // outer square
    CHECK(smd.boundary_distance({0.75, 0.0, 2}) == doctest::Approx(0.25));
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(Domain::interval(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Domain::disk(0, 0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Domain::rectangle(0, 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Domain::square_minus_disk(1.0, 1.5), std::invalid_argument);
}

TEST_CASE("uniform_1d counts and endpoints") {
    const PointCloud c = uniform_1d(9, -2.0, 2.0);
    CHECK(c.nbar() == 9);
    CHECK(c.interior.size() == 7);
    CHECK(c.boundary.size() == 2);
    CHECK(c.interior.front().x == doctest::Approx(-1.5));
    CHECK(c.boundary[0].x == -2.0);
    CHECK(c.boundary[1].x == 2.0);
    CHECK_THROWS_AS(uniform_1d(2, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("tensor_2d counts and edge classification") {
    const PointCloud c = tensor_2d(5, {-1.0, -1.0, 2}, {1.0, 1.0, 2});
    CHECK(c.nbar() == 25);
    CHECK(c.interior.size() == 9);
    CHECK(c.boundary.size() == 16);
    const Domain rc = Domain::rectangle(-1, -1, 1, 1);
    for (const Point& p : c.boundary) CHECK(rc.on_boundary(p));
    for (const Point& p : c.interior) CHECK(rc.contains(p));
}

TEST_CASE("disk_radial counts and layer structure") {
    for (int n : {1, 3, 7}) {
        const PointCloud c = disk_radial(n);
        CHECK(c.nbar() == static_cast<std::size_t>(2 * n * (n + 1) + 1));
        CHECK(c.boundary.size() == static_cast<std::size_t>(2 * (n + 1)));
        for (const Point& p : c.boundary) CHECK(p.norm() == doctest::Approx(1.0));
        for (const Point& p : c.interior) CHECK(p.norm() < 1.0);
    }
}

TEST_CASE("annulus_mapped counts and geometric bounds") {
    for (int n : {2, 3, 5}) {
        const PointCloud c = annulus_mapped(n);
        CHECK(c.nbar() == static_cast<std::size_t>(4 * n * (n + 1)));
        CHECK(c.boundary.size() == static_cast<std::size_t>(8 * n));
        // All points live between the inner circle and the unit square,
        // within the mapping's small inner-ring offset.
        for (const Point& p : c.all()) {
            CHECK(p.norm() >= 0.45);
            CHECK(std::abs(p.x) <= 1.0 + 1e-12);
            CHECK(std::abs(p.y) <= 1.0 + 1e-12);
        }
        // Outer boundary layer sits exactly on the square.
        int on_square = 0;
        for (const Point& p : c.boundary)
            if (std::abs(std::abs(p.x) - 1.0) < 1e-9 || std::abs(std::abs(p.y) - 1.0) < 1e-9)
                ++on_square;
        CHECK(on_square == 4 * n);
    }
}

TEST_CASE("elliptic mapping takes the unit circle onto the unit square frame") {
    // The annulus outer ring (rho = 1) maps to points with max-norm 1.
    const PointCloud c = annulus_mapped(4);
    int exact = 0;
    for (const Point& p : c.boundary) {
        const double mn = std::max(std::abs(p.x), std::abs(p.y));
        if (std::abs(mn - 1.0) < 1e-9) ++exact;
    }
    CHECK(exact == 16);
}

TEST_CASE("exit_radius leaves the domain exactly") {
    const Domain dk = Domain::disk(0.0, 0.0, 1.0);
    const Domain rc = Domain::rectangle(-1, -1, 1, 1);
    const Domain smd = Domain::square_minus_disk(1.0, 0.5);
    const Point x{0.3, -0.2, 2};
    for (double th = 0.1; th < 6.28; th += 0.37) {
        for (const Domain& dom : {dk, rc, smd}) {
            if (!dom.contains(x)) continue;
            const double t = exit_radius(dom, x, th);
            CHECK(t > 0.0);
            const Point edge{x.x + t * std::cos(th), x.y + t * std::sin(th), 2};
            // On the outward boundary (SquareMinusDisk exits through the square).
            if (dom.kind == Domain::Kind::SquareMinusDisk) {
                CHECK(std::max(std::abs(edge.x), std::abs(edge.y)) == doctest::Approx(1.0));
            } else {
                CHECK(dom.boundary_distance(edge) == doctest::Approx(0.0).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("exterior_rays properties") {
    const Domain iv = Domain::interval(-2.0, 2.0);
    const auto rays1 = exterior_rays(iv, {0.5, 0.0, 1}, 0);
    REQUIRE(rays1.size() == 2);
    CHECK(rays1[0].second == doctest::Approx(1.5));
    CHECK(rays1[1].second == doctest::Approx(2.5));

    const Domain dk = Domain::disk(0.0, 0.0, 1.0);
    const auto rays2 = exterior_rays(dk, {0.0, 0.0, 2}, 16);
    CHECK(rays2.size() == 16);
    for (const auto& [th, t] : rays2) CHECK(t == doctest::Approx(1.0));
    CHECK_THROWS_AS(exterior_rays(dk, {2.0, 0.0, 2}, 16), std::invalid_argument);
}

TEST_CASE("corner_angles") {
    const Domain rc = Domain::rectangle(-1, -1, 1, 1);
    const auto angles = corner_angles(rc, {0.0, 0.0, 2});
    REQUIRE(angles.size() == 4);
    CHECK(angles[0] == doctest::Approx(M_PI / 4));
    CHECK(corner_angles(Domain::disk(0, 0, 1), {0.0, 0.0, 2}).empty());
}
