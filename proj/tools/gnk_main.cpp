#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gnk/bench.hpp"
#include "gnk/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitSolverFailure = 3;

gnk::Vector parse_point(const std::string& text) {
    gnk::Vector point;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(token, &used);
        } catch (const std::exception&) {
            throw gnk::DomainError("parse_point: bad coordinate '" + token + "'");
        }
        while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
            ++used;
        if (used != token.size())
            throw gnk::DomainError("parse_point: bad coordinate '" + token + "'");
        point.push_back(value);
    }
    if (point.empty()) throw gnk::DomainError("parse_point: empty point");
    return point;
}

// Writes to --out if given (relative paths land under $GNK_OUTPUT_DIR when
// that is set), otherwise to stdout.
void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::filesystem::path target(out_path);
    if (target.is_relative()) {
        if (const char* base = std::getenv("GNK_OUTPUT_DIR"); base && *base)
            target = std::filesystem::path(base) / target;
    }
    std::ofstream out(target);
    if (!out) throw gnk::DomainError("emit: cannot open " + target.string());
    out << payload;
}

int run(int argc, char** argv) {
    CLI::App app{"Gauss-Newton solver for residuals with a nondifferentiable part"};
    app.require_subcommand(1);

    std::string problem_name;
    std::string method_name = "gnk";
    std::string x0_text;
    std::string format = "json";
    std::string out_path;
    std::string spec_path;
    std::string grid_text;
    double epsilon = 1e-8;
    int max_iter = 100;
    double ball_radius = 0.1;
    int samples = 2000;
    unsigned seed = 1;

    CLI::App* solve = app.add_subcommand("solve", "Run one solve and emit the full trace");
    solve->add_option("--problem", problem_name, "Problem name")->required();
    solve->add_option("--method", method_name, "gnk|gns|sec|kur");
    solve->add_option("--x0", x0_text, "Start point, comma-separated")->required();
    solve->add_option("--eps", epsilon, "Stopping tolerance");
    solve->add_option("--max-iter", max_iter, "Iteration cap");
    solve->add_option("--format", format, "json|csv");
    solve->add_option("--out", out_path, "Output file (default stdout)");

    CLI::App* bench = app.add_subcommand("bench", "Run a benchmark spec, emit CSV");
    bench->add_option("--spec", spec_path, "Benchmark spec JSON file")->required();
    bench->add_option("--out", out_path, "Output file (default stdout)");

    CLI::App* basin = app.add_subcommand("basin", "Grid scan of starts, emit CSV");
    basin->add_option("--problem", problem_name, "Problem name")->required();
    basin->add_option("--method", method_name, "gnk|gns|sec|kur");
    basin->add_option("--grid", grid_text, "xlo,xhi,steps;ylo,yhi,steps")->required();
    basin->add_option("--eps", epsilon, "Stopping tolerance");
    basin->add_option("--max-iter", max_iter, "Iteration cap");
    basin->add_option("--out", out_path, "Output file (default stdout)");

    CLI::App* radius = app.add_subcommand("radius", "Estimate constants, emit radius report");
    radius->add_option("--problem", problem_name, "Problem name")->required();
    radius->add_option("--radius", ball_radius, "Sampling ball radius");
    radius->add_option("--samples", samples, "Sample count");
    radius->add_option("--seed", seed, "RNG seed");
    radius->add_option("--out", out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (solve->parsed()) {
            if (format != "json" && format != "csv")
                throw gnk::DomainError("solve: format must be json or csv");
            const gnk::Problem p = gnk::find_problem(problem_name);
            const gnk::Method method = gnk::method_from_string(method_name);
            const gnk::Vector x0 = parse_point(x0_text);
            gnk::SolveConfig config;
            config.epsilon = epsilon;
            config.max_iter = max_iter;
            const gnk::IterationTrace trace = gnk::solve(p, x0, method, config);
            emit(format == "json" ? gnk::trace_to_json(trace, p.name, x0, method, epsilon)
                                  : gnk::trace_to_csv(trace),
                 out_path);
            if (trace.status == gnk::SolveStatus::Breakdown ||
                trace.status == gnk::SolveStatus::NonFinite) {
                std::cerr << "error: solver_failure: status " << gnk::to_string(trace.status)
                          << "\n";
                return kExitSolverFailure;
            }
            return kExitOk;
        }
        if (bench->parsed()) {
            gnk::BenchmarkSpec spec = gnk::load_benchmark_spec(spec_path);
            emit(gnk::benchmark_to_csv(gnk::run_benchmark(spec)), out_path);
            return kExitOk;
        }
        if (basin->parsed()) {
            const gnk::Problem p = gnk::find_problem(problem_name);
            const gnk::Method method = gnk::method_from_string(method_name);
            const gnk::GridSpec grid = gnk::parse_grid_spec(grid_text);
            gnk::SolveConfig config;
            config.epsilon = epsilon;
            config.max_iter = max_iter;
            emit(gnk::basin_to_csv(gnk::basin_scan(p, method, grid, config)), out_path);
            return kExitOk;
        }
        if (radius->parsed()) {
            const gnk::Problem p = gnk::find_problem(problem_name);
            if (!p.known_solution)
                throw gnk::DomainError("radius: problem has no reference solution");
            const gnk::Vector x_star = gnk::refine_solution(p);
            const gnk::LipschitzConstants constants =
                gnk::estimate_constants(p, x_star, ball_radius, samples, seed);
            emit(gnk::report_to_json(gnk::radius_report(constants)), out_path);
            return kExitOk;
        }
    } catch (const gnk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    std::cerr << "error: no subcommand\n";
    return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
