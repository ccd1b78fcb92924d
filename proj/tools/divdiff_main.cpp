#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divdiff/analysis.hpp"
#include "divdiff/core.hpp"
#include "divdiff/ddtable.hpp"
#include "divdiff/io.hpp"
#include "divdiff/newton.hpp"
#include "divdiff/opitz.hpp"
#include "divdiff/verify.hpp"

namespace {

using namespace divdiff;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return in;
}

HermiteDataset load_dataset(const std::string& path, double tol) {
    std::ifstream in = open_input(path);
    return read_dataset(in, tol);
}

NewtonPoly load_newton_form(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_newton_form(in);
}

void emit_newton_form(const NewtonPoly& p, const std::string& out_path) {
    if (out_path.empty()) {
        write_newton_form(std::cout, p);
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open file: " + out_path);
    write_newton_form(out, p);
}

int run_table(const std::string& data_path, double tol) {
    HermiteDataset data = load_dataset(data_path, tol);
    DDTable table(data);
    const std::size_t n = table.size();
    // One line per order: entries spanning order+1 consecutive nodes.
    for (std::size_t order = 0; order < n; ++order) {
        for (std::size_t i = 0; i + order < n; ++i) {
            std::cout << (i ? " " : "") << format_scalar(table.at(i, i + order));
        }
        std::cout << '\n';
    }
    return 0;
}

int run_interp(const std::string& data_path, const std::string& out_path) {
    emit_newton_form(hermite_interpolant(load_dataset(data_path, 0.0)), out_path);
    return 0;
}

int run_eval(const std::string& form_path, const std::string& at) {
    NewtonPoly p = load_newton_form(form_path);
    for (double z : parse_scalar_list(at)) {
        std::cout << format_scalar(evaluate(p, z)) << '\n';
    }
    return 0;
}

int run_rebase(const std::string& form_path, const std::string& centers, const std::string& out_path) {
    NewtonPoly p = load_newton_form(form_path);
    emit_newton_form(change_basis(p, parse_scalar_list(centers)), out_path);
    return 0;
}

int run_opitz(const std::string& nodes_text, const std::string& coeffs_text) {
    NodeSequence t = cluster_nodes(parse_scalar_list(nodes_text), 0.0);
    PowerPoly p(parse_scalar_list(coeffs_text));
    Matrix mat = matrix_polynomial(p, opitz_matrix(t));
    for (std::size_t i = 0; i < mat.n; ++i) {
        for (std::size_t j = 0; j < mat.n; ++j) {
            std::cout << (j ? " " : "") << format_scalar(mat(i, j));
        }
        std::cout << '\n';
    }
    return 0;
}

int run_bspline(const std::string& knots_text, const std::string& at, bool integrate) {
    NodeSequence knots = cluster_nodes(parse_scalar_list(knots_text), 0.0);
    if (!at.empty()) {
        for (double x : parse_scalar_list(at)) {
            std::cout << format_scalar(x) << ' ' << format_scalar(bspline_eval(x, knots)) << '\n';
        }
    } else if (!integrate) {
        throw std::runtime_error("bspline needs --at points or --integrate");
    }
    if (integrate) {
        std::cout << "integral " << format_scalar(bspline_integral(knots)) << '\n';
    }
    return 0;
}

int run_verify(const VerifyOptions& options) {
    std::cout << "seed " << options.seed << " trials " << options.trials << '\n';
    VerifyReport report = run_verification(options);
    int failed = 0;
    for (const CheckResult& check : report.checks) {
        failed += check.pass ? 0 : 1;
        std::cout << (check.pass ? "PASS " : "FAIL ") << check.name << "  (" << check.detail << ")\n";
    }
    if (failed == 0) {
        std::cout << "all " << report.checks.size() << " checks passed\n";
        return 0;
    }
    std::cout << failed << " of " << report.checks.size() << " checks failed\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"divided differences, Hermite interpolation, and their representations"};
    app.require_subcommand(1);

    std::string data_path, form_path, out_path, at_text, centers_text, nodes_text, coeffs_text,
        knots_text;
    double tol = 0.0;
    bool integrate = false;

    CLI::App* table = app.add_subcommand("table", "print the divided difference table of a dataset");
    table->add_option("--data", data_path, "dataset file of 't y' records")->required();
    table->add_option("--tol", tol, "merge nodes closer than this")->check(CLI::NonNegativeNumber);

    CLI::App* interp = app.add_subcommand("interp", "Hermite interpolant of a dataset, in Newton form");
    interp->add_option("--data", data_path, "dataset file of 't y' records")->required();
    interp->add_option("--out", out_path, "write the Newton form here instead of stdout");

    CLI::App* eval = app.add_subcommand("eval", "evaluate a Newton form");
    eval->add_option("--form", form_path, "Newton form file")->required();
    eval->add_option("--at", at_text, "comma-separated evaluation points")->required();

    CLI::App* rebase = app.add_subcommand("rebase", "re-express a Newton form with new centers");
    rebase->add_option("--form", form_path, "Newton form file")->required();
    rebase->add_option("--centers", centers_text, "comma-separated new centers")->required();
    rebase->add_option("--out", out_path, "write the Newton form here instead of stdout");

    CLI::App* opitz = app.add_subcommand("opitz", "polynomial of the node matrix: the full table at once");
    opitz->add_option("--nodes", nodes_text, "comma-separated nodes")->required();
    opitz->add_option("--power-coeffs", coeffs_text, "polynomial coefficients, constant term first")
        ->required();

    CLI::App* bspline = app.add_subcommand("bspline", "evaluate the B-spline with the given knots");
    bspline->add_option("--knots", knots_text, "comma-separated knots")->required();
    bspline->add_option("--at", at_text, "comma-separated evaluation points");
    bspline->add_flag("--integrate", integrate, "also print the integral over the support");

    VerifyOptions verify_options;
    bool seed_given = false;
    CLI::App* verify = app.add_subcommand("verify", "run the identity verification suite");
    CLI::Option* seed_opt = verify->add_option("--seed", verify_options.seed, "random seed");
    verify->add_option("--trials", verify_options.trials, "trials per check")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--inject-failure", verify_options.inject_failure)->group("");

    CLI11_PARSE(app, argc, argv);
    seed_given = seed_opt->count() > 0;

    try {
        if (table->parsed()) return run_table(data_path, tol);
        if (interp->parsed()) return run_interp(data_path, out_path);
        if (eval->parsed()) return run_eval(form_path, at_text);
        if (rebase->parsed()) return run_rebase(form_path, centers_text, out_path);
        if (opitz->parsed()) return run_opitz(nodes_text, coeffs_text);
        if (bspline->parsed()) return run_bspline(knots_text, at_text, integrate);
        if (verify->parsed()) {
            if (!seed_given) {
                if (const char* env = std::getenv("DIVDIFF_SEED")) {
                    verify_options.seed = std::strtoull(env, nullptr, 10);
                }
            }
            return run_verify(verify_options);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}
