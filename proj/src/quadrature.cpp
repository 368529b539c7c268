#include "rbffl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace rbffl {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (QUADPACK constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct GkResult {
    double value;
    double error;
};

template <typename F>
GkResult gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double f0 = f(c);
    double kron = kWgk[7] * f0;
    double gauss = kWg[3] * f0;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const double fs = f(c - dx) + f(c + dx);
        kron += kWgk[i] * fs;
        if (i % 2 == 1) gauss += kWg[i / 2] * fs;
    }
    kron *= h;
    gauss *= h;
    return {kron, std::abs(kron - gauss)};
}

template <typename F>
double adapt(const F& f, double a, double b, double rel_tol, double abs_tol, int depth = 0) {
    GkResult r = gk15(f, a, b);
    if (depth >= 48 || r.error <= std::max(abs_tol, rel_tol * std::abs(r.value))) return r.value;
    const double m = 0.5 * (a + b);
    return adapt(f, a, m, rel_tol, abs_tol * 0.5, depth + 1) +
           adapt(f, m, b, rel_tol, abs_tol * 0.5, depth + 1);
}

// Integrate H over the semi-infinite leg w in [w0, inf) where H(w) behaves
// like w^{-1-alpha} * O(w^{-p}); substitution rho = w^{-q}, q = alpha + p,
// gives the bounded integrand (1/q) H(rho^{-1/q}) rho^{-1/q-1} on (0, w0^{-q}].
template <typename F>
double power_mapped_tail(const F& H, double w0, double q, double rel_tol, double abs_tol) {
    const double rho0 = std::pow(w0, -q);
    auto f = [&](double rho) {
        const double w = std::pow(rho, -1.0 / q);
        return H(w) * std::pow(rho, -1.0 / q - 1.0) / q;
    };
    return adapt(f, 0.0, rho0, rel_tol, abs_tol);
}

struct AngularInterval {
    double lo, hi;
};

// Split [0, 2pi) at the given break angles (plus quadrants as a baseline).
std::vector<AngularInterval> angular_partition(std::vector<double> breaks) {
    for (int q = 0; q < 4; ++q) breaks.push_back(q * kPi / 2.0);
    for (double& th : breaks) {
        th = std::fmod(th, 2.0 * kPi);
        if (th < 0.0) th += 2.0 * kPi;
    }
    breaks.push_back(0.0);
    breaks.push_back(2.0 * kPi);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-13; }),
                 breaks.end());
    std::vector<AngularInterval> out;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        if (breaks[i + 1] - breaks[i] > 1e-13) out.push_back({breaks[i], breaks[i + 1]});
    return out;
}

// Chord of the inner hole (SquareMinusDisk) along direction theta from x_k;
// returns false when the ray misses the hole.
bool hole_chord(const Domain& domain, const Point& x_k, double theta, double& t1, double& t2) {
    const double c = std::cos(theta), s = std::sin(theta);
    const double p = -(x_k.x * c + x_k.y * s);
    const double q = x_k.norm2() - domain.inner_radius * domain.inner_radius;
    const double disc = p * p - q;
    if (disc <= 0.0 || p <= 0.0) return false;
    const double root = std::sqrt(disc);
    t1 = p - root;
    t2 = p + root;
    return t2 > 0.0;
}

void require_fractional(double alpha) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::domain_error("exterior integral: alpha in (0,2) required");
}

void require_interior(const Domain& domain, const Point& x_k) {
    if (!domain.contains(x_k) || domain.boundary_distance(x_k) <= 0.0)
        throw std::invalid_argument("exterior integral: x_k must be strictly interior");
}

}  // namespace

double adaptive_gk(const std::function<double(double)>& f, double a, double b, double rel_tol,
                   double abs_tol) {
    return adapt(f, a, b, rel_tol, abs_tol);
}

double exterior_kernel_integral(const Domain& domain, const Point& x_k, const Point& x_i,
                                const RbfKernel& kernel, const QuadratureSpec& spec) {
    require_fractional(kernel.alpha);
    require_interior(domain, x_k);
    const double alpha = kernel.alpha;
    // Radius beyond which the Gaussian factor is below the truncation tolerance.
    const double gauss_reach =
        std::sqrt(std::log(1.0 / spec.truncation_tail_tol)) / std::abs(kernel.epsilon);

    if (domain.dim() == 1) {
        auto leg = [&](double edge, double dir) {
            // dir = +1: [edge, inf); dir = -1: (-inf, edge].
            const double far = dir > 0 ? std::max(edge, x_i.x) + gauss_reach
                                       : std::min(edge, x_i.x) - gauss_reach;
            auto f = [&](double y) {
                const double ri = std::abs(y - x_i.x);
                return std::exp(-kernel.epsilon * kernel.epsilon * ri * ri) *
                       std::pow(std::abs(x_k.x - y), -1.0 - alpha);
            };
            return dir > 0 ? adapt(f, edge, far, spec.rel_tol, spec.abs_tol)
                           : adapt(f, far, edge, spec.rel_tol, spec.abs_tol);
        };
        return leg(domain.b, +1.0) + leg(domain.a, -1.0);
    }

    const double e2 = kernel.epsilon * kernel.epsilon;
    const double d_ki = dist(x_k, x_i);
    auto radial = [&](double theta, double r_lo, double r_hi) {
        // \int phi(|x_k + r u - x_i|) r^{-1-alpha} dr along direction theta.
        if (r_hi <= r_lo) return 0.0;
        const double c = std::cos(theta), s = std::sin(theta);
        auto f = [&](double r) {
            const double dx = x_k.x + r * c - x_i.x;
            const double dy = x_k.y + r * s - x_i.y;
            return std::exp(-e2 * (dx * dx + dy * dy)) * std::pow(r, -1.0 - alpha);
        };
        return adapt(f, r_lo, r_hi, spec.rel_tol * 0.1, spec.abs_tol * 0.1);
    };

    std::vector<double> breaks = corner_angles(domain, x_k);
    breaks.push_back(std::atan2(x_i.y - x_k.y, x_i.x - x_k.x));
    double total = 0.0;
    for (const AngularInterval& iv : angular_partition(breaks)) {
        auto F = [&](double theta) {
            const double re = exit_radius(domain, x_k, theta);
            const double r_hi = d_ki + gauss_reach;
            return radial(theta, re, r_hi);
        };
        total += adapt(F, iv.lo, iv.hi, spec.rel_tol, spec.abs_tol);
    }
    if (domain.kind == Domain::Kind::SquareMinusDisk) {
        // Bounded exterior component: the hole, reached by chords from x_k.
        // The chord length vanishes like sqrt at the tangent angles; the
        // substitution theta = theta_c + half*sin(psi) removes that kink.
        const double rho = x_k.norm();
        const double theta_c = std::atan2(-x_k.y, -x_k.x);
        const double half = std::asin(std::min(1.0, domain.inner_radius / rho));
        auto F = [&](double psi) {
            const double theta = theta_c + half * std::sin(psi);
            double t1, t2;
            if (!hole_chord(domain, x_k, theta, t1, t2)) return 0.0;
            return half * std::cos(psi) *
                   radial(theta, std::max(t1, 0.0), std::min(t2, d_ki + gauss_reach));
        };
        total += adapt(F, -kPi / 2.0, kPi / 2.0, spec.rel_tol, spec.abs_tol);
    }
    return total;
}

double exterior_data_integral(const Domain& domain, const Point& x_k,
                              const std::function<double(const Point&)>& g, double alpha,
                              const QuadratureSpec& spec, double tail_exponent_hint) {
    require_fractional(alpha);
    require_interior(domain, x_k);
    const double q = alpha + std::max(0.0, tail_exponent_hint);

    if (domain.dim() == 1) {
        auto leg = [&](double w0, double dir) {
            auto H = [&](double w) {
                const double gv = g(Point{x_k.x + dir * w, 0.0, 1});
                if (!std::isfinite(gv)) throw std::runtime_error("exterior_data_integral: non-finite g sample");
                return gv * std::pow(w, -1.0 - alpha);
            };
            return power_mapped_tail(H, w0, q, spec.rel_tol, spec.abs_tol);
        };
        return leg(domain.b - x_k.x, +1.0) + leg(x_k.x - domain.a, -1.0);
    }

    auto radial_tail = [&](double theta, double r_lo) {
        const double c = std::cos(theta), s = std::sin(theta);
        auto H = [&](double r) {
            const double gv = g(Point{x_k.x + r * c, x_k.y + r * s, 2});
            if (!std::isfinite(gv)) throw std::runtime_error("exterior_data_integral: non-finite g sample");
            return gv * std::pow(r, -1.0 - alpha);
        };
        return power_mapped_tail(H, r_lo, q, spec.rel_tol * 0.1, spec.abs_tol * 0.1);
    };

    double total = 0.0;
    for (const AngularInterval& iv : angular_partition(corner_angles(domain, x_k))) {
        auto F = [&](double theta) { return radial_tail(theta, exit_radius(domain, x_k, theta)); };
        total += adapt(F, iv.lo, iv.hi, spec.rel_tol, spec.abs_tol);
    }
    if (domain.kind == Domain::Kind::SquareMinusDisk) {
        const double rho = x_k.norm();
        const double theta_c = std::atan2(-x_k.y, -x_k.x);
        const double half = std::asin(std::min(1.0, domain.inner_radius / rho));
        auto F = [&](double psi) {
            const double theta = theta_c + half * std::sin(psi);
            double t1, t2;
            if (!hole_chord(domain, x_k, theta, t1, t2)) return 0.0;
            const double c = std::cos(theta), s = std::sin(theta);
            auto f = [&](double r) {
                const double gv = g(Point{x_k.x + r * c, x_k.y + r * s, 2});
                return gv * std::pow(r, -1.0 - alpha);
            };
            return half * std::cos(psi) *
                   adapt(f, std::max(t1, 0.0), t2, spec.rel_tol * 0.1, spec.abs_tol * 0.1);
        };
        total += adapt(F, -kPi / 2.0, kPi / 2.0, spec.rel_tol, spec.abs_tol);
    }
    return total;
}

}  // namespace rbffl
