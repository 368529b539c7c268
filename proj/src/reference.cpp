#include "rbffl/reference.hpp"

#include <cmath>
#include <stdexcept>

#include "rbffl/specfun.hpp"

namespace rbffl {

namespace {

constexpr double kSqrtPi = 1.772453850905516027298167483341145183;

double pos_pow(double base, double expo) { return base <= 0.0 ? 0.0 : std::pow(base, expo); }

}  // namespace

ProblemCase lorentzian_case() {
    ProblemCase c;
    c.name = "lorentzian";
    c.dim = 1;
    c.domain = Domain::interval(-2.0, 2.0);
    auto u = [](const Point& p, double) { return 1.0 / (1.0 + p.x * p.x); };
    c.exact_u = u;
    // (-Delta)^{alpha/2} (1+x^2)^{-1} = Gamma(1+alpha)
    //   2F1((1+alpha)/2, (2+alpha)/2; 1/2; -x^2); alpha = 0 gives u itself.
    c.exact_Lu = [](const Point& p, double alpha) {
        return gamma_fn(1.0 + alpha) *
               hyp2f1((1.0 + alpha) / 2.0, (2.0 + alpha) / 2.0, 0.5, -p.x * p.x).value;
    };
    c.rhs_f = c.exact_Lu;
    c.boundary_g = [u](const Point& p) { return u(p, 0.0); };
    c.g_is_zero = false;
    c.g_tail_exponent = 2.0;
    return c;
}

ProblemCase compact_case(double p) {
    if (!(p > -1.0)) throw std::domain_error("compact_case: p > -1 required");
    ProblemCase c;
    c.name = "compact";
    c.dim = 1;
    c.domain = Domain::interval(-1.0, 1.0);
    c.exact_u = [p](const Point& q, double) {
        return q.x * pos_pow(1.0 - q.x * q.x, p);
    };
    c.exact_Lu = [p](const Point& q, double alpha) {
        const double x = q.x;
        const double pref = std::exp2(alpha) * (alpha + 1.0) * gamma_fn((1.0 + alpha) / 2.0) *
                            gamma_fn(p + 1.0) / kSqrtPi * rgamma(p + 1.0 - alpha / 2.0);
        return pref * x * hyp2f1((alpha + 3.0) / 2.0, alpha / 2.0 - p, 1.5, x * x).value;
    };
    c.rhs_f = c.exact_Lu;
    c.boundary_g = [](const Point&) { return 0.0; };
    c.g_is_zero = true;
    c.sample_interval = std::make_pair(-0.95, 0.95);
    return c;
}

ProblemCase benchmark_1d_case(int s) {
    if (s < 0) throw std::domain_error("benchmark_1d_case: s >= 0 required");
    ProblemCase c;
    c.name = "bench1d";
    c.dim = 1;
    c.domain = Domain::interval(-1.0, 1.0);
    c.exact_u = [s](const Point& q, double alpha) {
        return pos_pow(1.0 - q.x * q.x, s + alpha / 2.0);
    };
    c.rhs_f = [s](const Point& q, double alpha) {
        const double pref = std::exp2(alpha) * gamma_fn((alpha + 1.0) / 2.0) *
                            gamma_fn(s + 1.0 + alpha / 2.0) / (kSqrtPi * gamma_fn(s + 1.0));
        return pref * hyp2f1((alpha + 1.0) / 2.0, -static_cast<double>(s), 0.5, q.x * q.x).value;
    };
    c.boundary_g = [](const Point&) { return 0.0; };
    c.g_is_zero = true;
    return c;
}

ProblemCase disk_case() {
    ProblemCase c;
    c.name = "disk";
    c.dim = 2;
    c.domain = Domain::disk(0.0, 0.0, 1.0);
    c.exact_u = [](const Point& q, double alpha) {
        const double rg = rgamma(1.0 + alpha / 2.0);
        return std::exp2(-alpha) * rg * rg * pos_pow(1.0 - q.norm2(), alpha / 2.0);
    };
    c.rhs_f = [](const Point&, double) { return 1.0; };
    c.boundary_g = [](const Point&) { return 0.0; };
    c.g_is_zero = true;
    return c;
}

namespace {

double bump_lu(double r2, double alpha) {
    // (-Delta)^{alpha/2} (1+|x|^2)^{-3/2} in d = 2, valid for alpha in (0,2];
    // at alpha = 2 it reduces to -Delta u.
    return gamma_fn(2.0 + alpha) *
           hyp2f1((2.0 + alpha) / 2.0, (3.0 + alpha) / 2.0, 1.0, -r2).value;
}

}  // namespace

ProblemCase irregular_case() {
    ProblemCase c;
    c.name = "irregular";
    c.dim = 2;
    c.domain = Domain::square_minus_disk(1.0, 0.5);
    auto u = [](const Point& q, double) { return std::pow(1.0 + q.norm2(), -1.5); };
    c.exact_u = u;
    c.exact_Lu = [](const Point& q, double alpha) { return bump_lu(q.norm2(), alpha); };
    c.rhs_f = c.exact_Lu;
    c.boundary_g = [u](const Point& q) { return u(q, 0.0); };
    c.g_is_zero = false;
    c.g_tail_exponent = 3.0;
    return c;
}

double diffusion_profile(const Point& x) { return std::pow(1.0 + 0.5 * x.norm2(), -1.5); }

double diffusion_profile_Lu(const Point& x, double alpha) {
    // Scaling law: s(x) = v(kappa x) with v = (1+|.|^2)^{-3/2}, kappa = 1/sqrt(2)
    // gives (-Delta)^{alpha/2} s (x) = kappa^alpha (Lv)(kappa x).
    const double kappa2 = 0.5;
    return std::pow(kappa2, alpha / 2.0) * bump_lu(kappa2 * x.norm2(), alpha);
}

ProblemCase diffusion_case() {
    ProblemCase c;
    c.name = "diffusion";
    c.dim = 2;
    c.domain = Domain::rectangle(-1.0, -1.0, 1.0, 1.0);
    // Time-dependent exact solution u(x,t) = t * profile(x); the callables
    // below expose the spatial factor (evaluated by the time stepper).
    c.exact_u = [](const Point& q, double) { return diffusion_profile(q); };
    c.exact_Lu = [](const Point& q, double alpha) { return diffusion_profile_Lu(q, alpha); };
    c.boundary_g = [](const Point& q) { return diffusion_profile(q); };
    c.g_is_zero = false;
    c.g_tail_exponent = 3.0;
    return c;
}

std::vector<double> fdm_laplacian_2d(const std::vector<double>& u, int n_side, double h) {
    if (n_side < 3) throw std::invalid_argument("fdm_laplacian_2d: n_side >= 3 required");
    if (u.size() != static_cast<std::size_t>(n_side) * n_side)
        throw std::invalid_argument("fdm_laplacian_2d: grid size mismatch");
    if (!(h > 0.0)) throw std::invalid_argument("fdm_laplacian_2d: h > 0 required");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_side - 2) * (n_side - 2));
    const double inv_h2 = 1.0 / (h * h);
    auto at = [&](int i, int j) { return u[static_cast<std::size_t>(i) * n_side + j]; };
    for (int i = 1; i + 1 < n_side; ++i)
        for (int j = 1; j + 1 < n_side; ++j)
            out.push_back((4.0 * at(i, j) - at(i - 1, j) - at(i + 1, j) - at(i, j - 1) -
                           at(i, j + 1)) *
                          inv_h2);
    return out;
}

ProblemCase make_case(const std::string& name, double p, int s) {
    if (name == "lorentzian") return lorentzian_case();
    if (name == "compact") return compact_case(p);
    if (name == "bench1d") return benchmark_1d_case(s);
    if (name == "disk") return disk_case();
    if (name == "irregular") return irregular_case();
    if (name == "diffusion") return diffusion_case();
    throw std::invalid_argument("unknown case: " + name);
}

std::vector<std::string> case_names() {
    return {"lorentzian", "compact", "bench1d", "disk", "irregular", "diffusion"};
}

}  // namespace rbffl
