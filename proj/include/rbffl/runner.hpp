#pragma once

// Experiment drivers behind the CLI: one function per subcommand, all
// returning CSV-ready rows.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rbffl/reference.hpp"
#include "rbffl/timestepper.hpp"

namespace rbffl {

struct RunRow {
    std::string case_label;
    int d = 1;
    double alpha = 0.0;
    double epsilon = 0.0;
    std::size_t nbar = 0;
    std::optional<double> rms;  // empty on conditioning failure
    double cond = 0.0;
    double seconds = 0.0;
};

// Error-sampling grids: m interior-offset uniform points on (lo, hi) for
// d = 1; a per_side x per_side tensor over the bounding box clipped strictly
// inside Omega for d = 2.
std::vector<Point> sample_points_1d(double lo, double hi, int m);
std::vector<Point> sample_points_2d(const Domain& domain, int per_side = 80);
std::vector<Point> sample_points(const ProblemCase& c, int m_points);

// Point cloud for a case: nbar_or_n is Nbar for 1D cases, the layer count n
// for disk/irregular, and the tensor side for diffusion.
PointCloud build_cloud(const ProblemCase& c, int nbar_or_n);

RunRow run_operator(const ProblemCase& c, double alpha, double epsilon, int nbar_or_n,
                    int m_points, const QuadratureSpec& quad);

RunRow run_solve(const ProblemCase& c, double alpha, double epsilon, int nbar_or_n, int m_points,
                 const QuadratureSpec& quad);

// One row per epsilon; operator mode when the case has a closed-form
// operator target, steady solve otherwise.
std::vector<RunRow> run_sweep(const ProblemCase& c, double alpha,
                              const std::vector<double>& epsilons, int nbar_or_n, int m_points,
                              const QuadratureSpec& quad);

struct Target2d {
    std::function<double(const Point&)> u;
    std::function<double(const Point&)> minus_lap_u;
};

// u = e^{-(x^2+y^2)} sin y on (-1,1)^2 with
// -Delta u = e^{-(x^2+y^2)} [(5-4x^2-4y^2) sin y + 4y cos y].
Target2d table2_target();

// Paired rows (method encoded in the case column as rbf/fdm) per grid side:
// RBF operator mode at alpha = 2 vs the 5-point stencil on the same grid.
std::vector<RunRow> run_compare_fdm(const Target2d& target, double epsilon,
                                    const std::vector<int>& n_sides, int m_points,
                                    const QuadratureSpec& quad);

// Crank-Nicolson diffusion run; logs the (t, rms, cond) series to *log when
// non-null and returns the summary row at t_end.
RunRow run_diffuse(const ProblemCase& c, double alpha, double epsilon, int n_side, double dt,
                   double t_end, int m_points, const QuadratureSpec& quad,
                   std::ostream* log = nullptr);

// Header `case,d,alpha,epsilon,nbar,rms,cond,seconds`; scientific notation
// with 6 significant digits; rms left empty when absent.
void write_csv(std::ostream& out, const std::vector<RunRow>& rows);

}  // namespace rbffl
