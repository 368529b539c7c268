// rbfbench: benchmark front end for the meshfree fractional-Laplacian solver.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rbffl/runner.hpp"

namespace {

using namespace rbffl;

struct Options {
    std::string case_name = "lorentzian";
    std::vector<double> alpha{1.0};
    std::vector<double> epsilon;
    std::vector<int> nbar;
    std::vector<int> n;
    int s = 3;
    double p = 4.0;
    double dt = 1e-3;
    double t_end = 1.0;
    std::string out_path;
    int m_points = 0;  // 0 = dimension default (1000 / 80x80)
    double quad_tol = 0.0;  // 0 = library default
    std::string config_path;
};

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> values;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ','))
        if (!item.empty()) values.push_back(std::stod(item));
    return values;
}

// Flat key=value config: applies only the keys whose flags the user did not
// pass explicitly (flags win). Keys mirror the long option names.
void apply_config(const CLI::App* cmd, Options& opt) {
    if (opt.config_path.empty()) return;
    std::ifstream f(opt.config_path);
    if (!f) throw CLI::ValidationError("cannot open config file " + opt.config_path);
    auto unset = [&](const std::string& flag) { return cmd->count("--" + flag) == 0; };
    std::string line;
    int line_no = 0;
    while (std::getline(f, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("config line " + std::to_string(line_no) +
                                       ": expected key=value");
        auto trim = [](std::string s) {
            const std::size_t b = s.find_first_not_of(" \t\r");
            const std::size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "case" && unset("case")) opt.case_name = val;
            else if (key == "alpha" && unset("alpha")) opt.alpha = parse_number_list(val);
            else if (key == "epsilon" && unset("epsilon")) opt.epsilon = parse_number_list(val);
            else if (key == "nbar" && unset("nbar")) {
                opt.nbar.clear();
                for (double v : parse_number_list(val)) opt.nbar.push_back(static_cast<int>(v));
            } else if (key == "n" && unset("n")) {
                opt.n.clear();
                for (double v : parse_number_list(val)) opt.n.push_back(static_cast<int>(v));
            } else if (key == "s" && unset("s")) opt.s = std::stoi(val);
            else if (key == "p" && unset("p")) opt.p = std::stod(val);
            else if (key == "dt" && unset("dt")) opt.dt = std::stod(val);
            else if (key == "t-end" && unset("t-end")) opt.t_end = std::stod(val);
            else if (key == "out" && unset("out")) opt.out_path = val;
            else if (key == "m-points" && unset("m-points")) opt.m_points = std::stoi(val);
            else if (key == "quad-tol" && unset("quad-tol")) opt.quad_tol = std::stod(val);
            else if (key != "case" && key != "alpha" && key != "epsilon" && key != "nbar" &&
                     key != "n" && key != "s" && key != "p" && key != "dt" && key != "t-end" &&
                     key != "out" && key != "m-points" && key != "quad-tol")
                throw CLI::ValidationError("config: unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw CLI::ValidationError("config: bad value for '" + key + "'");
        }
    }
}

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--config", opt.config_path, "flat key=value config file (flags win)");
    cmd->add_option("--case", opt.case_name, "problem case name (see list-cases)");
    cmd->add_option("--alpha", opt.alpha, "fractional exponent(s) in [0,2]");
    cmd->add_option("--epsilon", opt.epsilon, "shape parameter(s)");
    cmd->add_option("--nbar", opt.nbar, "total point count(s), 1D cases");
    cmd->add_option("--n", opt.n, "layer count / tensor side(s), 2D cases");
    cmd->add_option("--s", opt.s, "regularity exponent s (bench1d)");
    cmd->add_option("--p", opt.p, "compact-support exponent p (compact)");
    cmd->add_option("--dt", opt.dt, "time step (diffuse)");
    cmd->add_option("--t-end", opt.t_end, "final time (diffuse)");
    cmd->add_option("--out", opt.out_path, "CSV output path (default stdout)");
    cmd->add_option("--m-points", opt.m_points, "error-sampling point budget (0 = default)");
    cmd->add_option("--quad-tol", opt.quad_tol, "quadrature relative tolerance");
}

QuadratureSpec quad_spec(const Options& opt) {
    QuadratureSpec q;
    if (opt.quad_tol > 0.0) {
        q.rel_tol = opt.quad_tol;
        q.abs_tol = opt.quad_tol * 1e-3;
    }
    return q;
}

std::vector<int> sizes_for(const ProblemCase& c, const Options& opt) {
    if (c.dim == 1) return opt.nbar.empty() ? std::vector<int>{33} : opt.nbar;
    return opt.n.empty() ? std::vector<int>{3} : opt.n;
}

int emit(const Options& opt, const std::vector<RunRow>& rows) {
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        if (!f) {
            std::cerr << "error: cannot open output file " << opt.out_path << "\n";
            return 1;
        }
        write_csv(f, rows);
    } else {
        write_csv(std::cout, rows);
    }
    for (const RunRow& r : rows)
        if (!r.rms) return 2;  // conditioning failure: partial CSV already written
    return 0;
}

int list_registry(std::ostream& out) {
    for (const std::string& name : case_names()) out << name << "\n";
    return 0;
}

ProblemCase load_case(const Options& opt) {
    try {
        return make_case(opt.case_name, opt.p, opt.s);
    } catch (const std::invalid_argument&) {
        std::string msg = "error: unknown case '" + opt.case_name + "'; available:";
        for (const std::string& name : case_names()) msg += " " + name;
        throw CLI::ValidationError(msg);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"meshfree Gaussian-RBF solver for classical and fractional Laplacians"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* op_cmd = app.add_subcommand("operator", "approximate (-Delta)^{alpha/2} u");
    CLI::App* solve_cmd = app.add_subcommand("solve", "steady Poisson solve");
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "shape-parameter sweep");
    CLI::App* fdm_cmd = app.add_subcommand("compare-fdm", "RBF vs 5-point stencil, alpha = 2");
    CLI::App* diff_cmd = app.add_subcommand("diffuse", "Crank-Nicolson fractional diffusion");
    CLI::App* list_cmd = app.add_subcommand("list-cases", "print the case registry");
    for (CLI::App* cmd : {op_cmd, solve_cmd, sweep_cmd, fdm_cmd, diff_cmd})
        add_common_flags(cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        if (list_cmd->parsed()) return list_registry(std::cout);

        for (CLI::App* cmd : {op_cmd, solve_cmd, sweep_cmd, fdm_cmd, diff_cmd})
            if (cmd->parsed()) apply_config(cmd, opt);

        const ProblemCase c = load_case(opt);
        const QuadratureSpec quad = quad_spec(opt);
        const std::vector<double> eps = opt.epsilon.empty() ? std::vector<double>{2.0}
                                                            : opt.epsilon;
        std::vector<RunRow> rows;

        if (op_cmd->parsed() || solve_cmd->parsed()) {
            const bool operator_mode = op_cmd->parsed();
            for (double a : opt.alpha)
                for (double e : eps)
                    for (int size : sizes_for(c, opt))
                        rows.push_back(operator_mode
                                           ? run_operator(c, a, e, size, opt.m_points, quad)
                                           : run_solve(c, a, e, size, opt.m_points, quad));
        } else if (sweep_cmd->parsed()) {
            std::vector<double> grid = eps;
            if (opt.epsilon.empty()) {
                grid.clear();
                for (double e = 1.0; e <= 6.0 + 1e-9; e += 0.2) grid.push_back(e);
            }
            for (double a : opt.alpha)
                for (int size : sizes_for(c, opt)) {
                    auto part = run_sweep(c, a, grid, size, opt.m_points, quad);
                    rows.insert(rows.end(), part.begin(), part.end());
                }
        } else if (fdm_cmd->parsed()) {
            for (double a : opt.alpha)
                if (a != 2.0) {
                    std::cerr << "error: compare-fdm requires --alpha 2\n";
                    return 1;
                }
            const std::vector<int> sides = opt.n.empty() ? std::vector<int>{4, 5, 6, 7} : opt.n;
            for (double e : eps) {
                auto part = run_compare_fdm(table2_target(), e, sides, opt.m_points, quad);
                rows.insert(rows.end(), part.begin(), part.end());
            }
        } else if (diff_cmd->parsed()) {
            const std::vector<int> sides = opt.n.empty() ? std::vector<int>{6} : opt.n;
            for (double a : opt.alpha)
                for (double e : eps)
                    for (int side : sides)
                        rows.push_back(run_diffuse(c, a, e, side, opt.dt, opt.t_end,
                                                   opt.m_points, quad, &std::cerr));
        }
        return emit(opt, rows);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
