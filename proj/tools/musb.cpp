// Command-line front end: verify the measure/operator structure, tabulate
// densities and solution pairs, sweep over deformation parameters.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "musb/measures.hpp"
#include "musb/odesys.hpp"
#include "musb/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

void check_mu(double mu) {
    if (!(mu > -0.5)) {
        throw CLI::ValidationError("deformation parameter must satisfy mu > -1/2");
    }
}

int run_verify(double mu, double lambda, double tol, const std::string& out_path,
               musb::VerificationReport* report_out = nullptr) {
    check_mu(mu);
    const musb::VerificationReport report =
        musb::run_checks(musb::DeformationParams(mu, lambda), tol);
    write_output(out_path, musb::report_to_json(report));
    if (report_out) *report_out = report;
    return report.all_pass() ? kExitPass : kExitCheckFailed;
}

int run_tabulate(const std::string& target, double mu, double lambda,
                 const std::vector<double>& grid, const std::string& out_path) {
    if (grid.size() != 3) throw CLI::ValidationError("--r expects MIN MAX STEPS");
    const double r_min = grid[0], r_max = grid[1];
    const int steps = static_cast<int>(grid[2]);
    const bool single = steps == 1 && r_min == r_max;
    if (!single && !(steps >= 2 && r_min < r_max)) {
        throw CLI::ValidationError("--r needs MIN < MAX and STEPS >= 2");
    }
    if (target == "gaussian" ? r_min < 0.0 : r_min <= 0.0) {
        throw CLI::ValidationError("grid must start at r > 0 (r >= 0 for gaussian)");
    }

    std::function<std::string(double)> row;
    if (target == "density-even" || target == "density-odd") {
        check_mu(mu);
        const musb::DeformationParams params(mu, lambda);
        const bool even = target == "density-even";
        row = [params, even](double r) {
            const double v = even ? musb::density_even(params, r)
                                  : musb::density_odd(params, r);
            return format_value(r) + "," + format_value(v);
        };
    } else if (target == "pair-K" || target == "pair-I") {
        check_mu(mu);
        const musb::DensityPair pair = musb::analytic_pair(
            target == "pair-K" ? musb::PairKind::K : musb::PairKind::I, mu);
        row = [pair](double r) {
            return format_value(r) + "," + format_value(pair.even.eval(r)) + "," +
                   format_value(pair.odd.eval(r));
        };
    } else if (target == "gaussian") {
        row = [](double r) {
            return format_value(r) + "," + format_value(musb::gaussian_density(r));
        };
    } else {
        throw CLI::ValidationError("target", "unknown tabulation target: " + target);
    }

    std::ostringstream table;
    for (int i = 0; i < steps; ++i) {
        const double r =
            single ? r_min : r_min + (r_max - r_min) * i / (steps - 1);
        table << row(r) << "\n";
    }
    write_output(out_path, table.str());
    return kExitPass;
}

int run_sweep(const std::vector<double>& mu_list, double lambda, double tol,
              const std::string& out_path) {
    if (mu_list.empty()) throw CLI::ValidationError("--mu", "empty mu list");
    for (double mu : mu_list) check_mu(mu);

    // worst metric per check family across the sweep, one row per mu
    std::vector<std::string> families;
    std::map<double, std::map<std::string, double>> table;
    bool all_pass = true;
    for (double mu : mu_list) {
        const musb::VerificationReport report =
            musb::run_checks(musb::DeformationParams(mu, lambda), tol);
        all_pass = all_pass && report.all_pass();
        for (const musb::CheckResult& c : report.checks) {
            if (std::find(families.begin(), families.end(), c.name) == families.end()) {
                families.push_back(c.name);
            }
            const double m = std::isnan(c.metric)
                                 ? std::numeric_limits<double>::infinity()
                                 : c.metric;
            auto& cell = table[mu][c.name];
            cell = std::max(cell, m);
        }
    }

    std::ostringstream out;
    out << "mu";
    for (const std::string& f : families) out << "," << f;
    out << "\n";
    for (double mu : mu_list) {
        out << format_value(mu);
        for (const std::string& f : families) {
            auto it = table[mu].find(f);
            out << ",";
            out << (it == table[mu].end() ? "" : format_value(it->second));
        }
        out << "\n";
    }
    write_output(out_path, out.str());
    return all_pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mu-deformed Segal-Bargmann measure structure: verification and tabulation"};
    app.require_subcommand(1);

    double mu = 0.0, lambda = 1.0, tol = 0.0;
    std::string out_path;
    std::vector<double> grid;
    std::vector<double> mu_list;
    std::string target;

    CLI::App* verify = app.add_subcommand("verify", "run the verification battery");
    verify->add_option("--mu", mu, "deformation parameter (> -1/2)")->required();
    verify->add_option("--lambda", lambda, "scale parameter (> 0)");
    verify->add_option("--tol", tol, "uniform tolerance override");
    verify->add_option("--out", out_path, "write the JSON report here");

    CLI::App* tabulate = app.add_subcommand("tabulate", "tabulate a density or pair");
    tabulate->add_option("target", target,
                         "density-even | density-odd | pair-K | pair-I | gaussian")
        ->required();
    tabulate->add_option("--mu", mu, "deformation parameter (> -1/2)");
    tabulate->add_option("--lambda", lambda, "scale parameter (> 0)");
    tabulate->add_option("--r", grid, "grid: MIN MAX STEPS")->expected(3);
    tabulate->add_option("--out", out_path, "write the table here");

    CLI::App* sweep = app.add_subcommand("sweep", "verify across several mu values");
    sweep->add_option("--mu", mu_list, "comma-separated mu values")
        ->required()
        ->delimiter(',');
    sweep->add_option("--lambda", lambda, "scale parameter (> 0)");
    sweep->add_option("--tol", tol, "uniform tolerance override");
    sweep->add_option("--out", out_path, "write the summary table here");

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return run_verify(mu, lambda, tol, out_path);
        if (tabulate->parsed()) {
            if (grid.empty()) grid = {0.1, 4.0, 40.0};
            return run_tabulate(target, mu, lambda, grid, out_path);
        }
        if (sweep->parsed()) return run_sweep(mu_list, lambda, tol, out_path);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
