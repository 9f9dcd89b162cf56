#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cvm/bench.hpp"
#include "cvm/confluent.hpp"
#include "cvm/errors.hpp"
#include "cvm/hermite.hpp"
#include "cvm/problem_io.hpp"

namespace {

// Exit codes: 0 success, 2 parse/validation error, 3 I/O error.
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

/// Writes the command's output to the given path, or to stdout when the
/// path is empty. Success of the command is defined by this write
/// completing.
void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text << std::flush;
        if (!std::cout)
            throw cvm::io_error("stdout: write failed");
        return;
    }
    cvm::write_file(out_path, text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Confluent Vandermonde matrix toolkit: construction, "
                 "closed-form determinant, quadratic-time inversion, linear "
                 "solves and Hermite interpolation."};
    app.require_subcommand(1);

    std::string in_path;
    std::string out_path;
    std::vector<int> sizes = {64, 128, 256};
    std::string mode_name = "single-root";

    CLI::App* cmd_build = app.add_subcommand(
        "build", "Write the confluent Vandermonde matrix as CSV");
    CLI::App* cmd_invert =
        app.add_subcommand("invert", "Write the structured inverse as CSV");
    CLI::App* cmd_det =
        app.add_subcommand("det", "Write the closed-form determinant");
    CLI::App* cmd_solve = app.add_subcommand(
        "solve", "Solve V x = rhs and write one entry per line");
    CLI::App* cmd_interpolate = app.add_subcommand(
        "interpolate",
        "Write ascending Hermite interpolant coefficients, one per line");
    CLI::App* cmd_bench = app.add_subcommand(
        "bench", "Time the structured inversion over a list of sizes");

    for (CLI::App* cmd :
         {cmd_build, cmd_invert, cmd_det, cmd_solve, cmd_interpolate}) {
        cmd->add_option("--in", in_path, "Problem JSON file")->required();
        cmd->add_option("--out", out_path, "Output file (default: stdout)");
    }
    cmd_bench->add_option("--out", out_path, "Output file (default: stdout)");
    cmd_bench->add_option("--sizes", sizes, "Comma-separated matrix sizes")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    cmd_bench
        ->add_option("--mode", mode_name, "Spec family: one root of full "
                                          "multiplicity, all-distinct roots, "
                                          "or a mix of multiplicities")
        ->check(CLI::IsMember({"single-root", "distinct-roots", "mixed"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitValidation;
    }

    try {
        if (*cmd_bench) {
            const cvm::BenchMode mode = cvm::parse_bench_mode(mode_name);
            emit(out_path, cvm::render_bench_table(cvm::run_bench(mode, sizes)));
            return 0;
        }

        const cvm::ProblemSpec problem = cvm::load_problem(in_path);
        if (*cmd_build) {
            emit(out_path, cvm::matrix_to_csv(cvm::build_matrix(problem.roots)));
        } else if (*cmd_invert) {
            emit(out_path, cvm::matrix_to_csv(cvm::invert(problem.roots)));
        } else if (*cmd_det) {
            emit(out_path,
                 cvm::format_double(cvm::determinant(problem.roots)) + "\n");
        } else if (*cmd_solve) {
            if (!problem.has_rhs())
                throw cvm::invalid_spec_error("rhs: required for solve");
            emit(out_path, cvm::vector_to_lines(
                               cvm::solve(problem.roots, problem.rhs)));
        } else if (*cmd_interpolate) {
            if (!problem.has_hermite())
                throw cvm::invalid_spec_error("hermite: required for interpolate");
            emit(out_path,
                 cvm::vector_to_lines(cvm::hermite_interpolate(
                     cvm::HermiteData{problem.roots, problem.hermite})));
        }
        return 0;
    } catch (const cvm::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const cvm::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
}
