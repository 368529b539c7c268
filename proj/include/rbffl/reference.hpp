#pragma once

// Exact solutions, manufactured right-hand sides, and the finite-difference
// oracle backing the benchmark cases.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbffl/geometry.hpp"

namespace rbffl {

struct ProblemCase {
    std::string name;
    int dim = 1;
    Domain domain;
    // All callables take alpha so that alpha-dependent exact solutions
    // (bench1d, disk) fit the same mold.
    std::function<double(const Point&, double)> exact_u;   // may be null (no closed-form u)
    std::function<double(const Point&, double)> exact_Lu;  // operator-mode target; may be null
    std::function<double(const Point&, double)> rhs_f;     // solve-mode rhs; may be null
    std::function<double(const Point&)> boundary_g;        // extended Dirichlet data (spatial)
    bool g_is_zero = false;
    double g_tail_exponent = 0.0;
    // Error-sampling interval override for d=1 (the compact case samples
    // [-0.95, 0.95]; everything else samples the full domain).
    std::optional<std::pair<double, double>> sample_interval;
};

ProblemCase lorentzian_case();                 // u = 1/(1+x^2) on (-2,2)
ProblemCase compact_case(double p);            // u = x(1-x^2)_+^p on (-1,1)
ProblemCase benchmark_1d_case(int s);          // u = (1-x^2)_+^{s+alpha/2} on (-1,1)
ProblemCase disk_case();                       // f = 1 on the unit disk
ProblemCase irregular_case();                  // u = (1+|x|^2)^{-3/2}, square minus disk

// Diffusion problem u(x,t) = t (1 + |x|^2/2)^{-3/2} on (-1,1)^2.
// Spatial profile and its alpha-Laplacian (by the Lemma 2 scaling law).
double diffusion_profile(const Point& x);
double diffusion_profile_Lu(const Point& x, double alpha);
ProblemCase diffusion_case();

// Standard 5-point stencil for -Delta u on an n_side x n_side tensor grid
// with spacing h; u is row-major; returns values at the (n_side-2)^2
// interior grid points.
std::vector<double> fdm_laplacian_2d(const std::vector<double>& u, int n_side, double h);

// Registry addressable by name: lorentzian, compact, bench1d, disk,
// irregular, diffusion. p and s parameterize compact/bench1d.
ProblemCase make_case(const std::string& name, double p = 4.0, int s = 3);
std::vector<std::string> case_names();

}  // namespace rbffl
