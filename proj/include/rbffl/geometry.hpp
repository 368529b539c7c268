#pragma once

// Domains (with exterior parameterization for the Omega^c integrals),
// points, and the point-cloud generators used by the experiments.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace rbffl {

struct Point {
    double x = 0.0;
    double y = 0.0;
    int dim = 1;

    double norm() const { return dim == 1 ? std::abs(x) : std::hypot(x, y); }
    double norm2() const { return dim == 1 ? x * x : x * x + y * y; }
};

inline double dist(const Point& a, const Point& b) {
    return a.dim == 1 ? std::abs(a.x - b.x) : std::hypot(a.x - b.x, a.y - b.y);
}

struct Domain {
    enum class Kind { Interval, Disk, Rectangle, SquareMinusDisk };
    Kind kind = Kind::Interval;
    // Interval: a,b. Disk: center (cx,cy), radius. Rectangle: lo (ax,ay), hi (bx,by).
    // SquareMinusDisk: half_width, inner_radius (centered at origin).
    double a = -1.0, b = 1.0;
    double cx = 0.0, cy = 0.0, radius = 1.0;
    double ax = -1.0, ay = -1.0, bx = 1.0, by = 1.0;
    double half_width = 1.0, inner_radius = 0.5;

    static Domain interval(double a, double b);
    static Domain disk(double cx, double cy, double radius);
    static Domain rectangle(double ax, double ay, double bx, double by);
    static Domain square_minus_disk(double half_width, double inner_radius);

    int dim() const { return kind == Kind::Interval ? 1 : 2; }
    bool contains(const Point& p) const;           // open set Omega
    bool on_boundary(const Point& p, double tol = 1e-12) const;
    double boundary_distance(const Point& p) const;  // distance from interior p to dOmega
};

struct PointCloud {
    std::vector<Point> interior;  // S_Omega, size N
    std::vector<Point> boundary;  // S_dOmega, size Nbar - N
    std::size_t nbar() const { return interior.size() + boundary.size(); }
    // centers/tests ordering used by the collocation module: interior then boundary
    std::vector<Point> all() const;
};

// Nbar equally spaced points on [a,b] including both endpoints (the endpoints
// are the boundary set).
PointCloud uniform_1d(int nbar, double a, double b);

// n_side x n_side tensor grid on the rectangle; edge points are boundary.
PointCloud tensor_2d(int n_side, const Point& lo, const Point& hi);

// Radially distributed points on the closed unit disk: the origin plus n
// layers at radius l/n, each carrying 2(n+1) uniformly spaced angles
// theta_j = j*pi/(n+1), j = 0..2n+1; Nbar = 2n(n+1)+1. The outermost layer
// (radius 1) is the boundary set.
PointCloud disk_radial(int n);

// Annulus point set S-hat mapped by the elliptic grid mapping onto the region
// between the unit square and the circle of radius 1/2; Nbar = 4n(n+1).
// Images of the l=0 (inner circle) and l=n (outer ring) layers are boundary.
PointCloud annulus_mapped(int n);

// For each direction from interior point x, the radius at which the ray
// leaves Omega toward the unbounded exterior component. d=1: the two gap
// distances to the interval endpoints (angles 0 and pi). d=2: n_angles is a
// hint for callers that sample uniformly; for polygonal domains the corner
// directions are the natural split points (see corner_angles).
// For SquareMinusDisk the returned radius is the square exit radius; the
// bounded hole component is handled separately by the quadrature module.
std::vector<std::pair<double, double>> exterior_rays(const Domain& domain, const Point& x,
                                                     int n_angles);

// Exit radius of the single ray from interior x in direction theta (d=2)
// or direction +-1 encoded as theta=0 / theta=pi (d=1).
double exit_radius(const Domain& domain, const Point& x, double theta);

// Angles (as seen from x) at which the exterior-boundary distance is
// non-smooth (rectangle corners); empty for disks.
std::vector<double> corner_angles(const Domain& domain, const Point& x);

}  // namespace rbffl
