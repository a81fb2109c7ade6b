#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gnk/bench.hpp"
#include "gnk/serialize.hpp"
#include "gnk/theory.hpp"

using namespace gnk;

namespace {

BenchmarkSpec example1_spec() {
    BenchmarkSpec spec;
    spec.problems = {"example1"};
    spec.starts = {{1.0, 0.1}, {3.0, 1.0}, {0.5, 0.5}};
    spec.methods = {Method::GNK, Method::GNS, Method::SEC, Method::KUR};
    return spec;
}

}  // namespace

TEST_CASE("run_benchmark produces the full cross product in order") {
    const std::vector<BenchRow> rows = run_benchmark(example1_spec());
    REQUIRE(rows.size() == 12);

    // Rows iterate methods fastest, in canonical order, then starts.
    CHECK(rows[0].method == Method::GNK);
    CHECK(rows[1].method == Method::GNS);
    CHECK(rows[2].method == Method::SEC);
    CHECK(rows[3].method == Method::KUR);
    CHECK(rows[0].start == Vector{1.0, 0.1});
    CHECK(rows[4].start == Vector{3.0, 1.0});
    CHECK(rows[8].start == Vector{0.5, 0.5});

    // Published counts for the GNK column of example1.
    CHECK(rows[0].iterations == 5);
    CHECK(rows[4].iterations == 9);
    CHECK(rows[8].iterations == 10);
    for (const auto& row : rows) CHECK(row.status == SolveStatus::Converged);
}

TEST_CASE("benchmark rows do not depend on the order methods are listed") {
    BenchmarkSpec spec = example1_spec();
    const std::vector<BenchRow> base = run_benchmark(spec);
    spec.methods = {Method::KUR, Method::SEC, Method::GNS, Method::GNK, Method::GNK};
    const std::vector<BenchRow> permuted = run_benchmark(spec);
    REQUIRE(base.size() == permuted.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(base[i].method == permuted[i].method);
        CHECK(base[i].iterations == permuted[i].iterations);
    }
    CHECK(benchmark_to_csv(base) == benchmark_to_csv(permuted));
}

TEST_CASE("run_benchmark validates before any solve") {
    BenchmarkSpec spec = example1_spec();
    spec.problems = {"example1", "nonsense"};
    CHECK_THROWS_AS(run_benchmark(spec), UnknownProblem);

    spec = example1_spec();
    spec.starts.push_back({1.0, 2.0, 3.0});
    CHECK_THROWS_AS(run_benchmark(spec), DimensionMismatch);

    spec = example1_spec();
    spec.methods.clear();
    CHECK_THROWS_AS(run_benchmark(spec), DomainError);
}

TEST_CASE("benchmark CSV has a header and one line per row") {
    const std::string csv = benchmark_to_csv(run_benchmark(example1_spec()));
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "problem,start,method,status,iterations");
    int count = 0;
    while (std::getline(lines, line)) {
        CHECK(line.rfind("example1,", 0) == 0);
        ++count;
    }
    CHECK(count == 12);
}

TEST_CASE("benchmark specs load from JSON") {
    const std::string path = "bench_spec_test.json";
    {
        std::ofstream out(path);
        out << R"({
            "problems": ["example1"],
            "starts": [[1.0, 0.1], [3.0, 1.0]],
            "methods": ["gnk", "sec"],
            "config": {"epsilon": 1e-10, "max_iter": 60, "stop_index": "old"}
        })";
    }
    const BenchmarkSpec spec = load_benchmark_spec(path);
    CHECK(spec.problems == std::vector<std::string>{"example1"});
    CHECK(spec.starts.size() == 2);
    CHECK(spec.methods.size() == 2);
    CHECK(spec.config.epsilon == 1e-10);
    CHECK(spec.config.max_iter == 60);
    CHECK(spec.config.stop_index == StopIndex::OldIterate);

    {
        std::ofstream out(path);
        out << "{\"problems\": [\"example1\"]";  // truncated JSON
    }
    CHECK_THROWS_AS(load_benchmark_spec(path), DomainError);

    {
        std::ofstream out(path);
        out << R"({"problems": ["example1"], "starts": [[1,0]], "methods": ["newton"]})";
    }
    CHECK_THROWS_AS(load_benchmark_spec(path), DomainError);
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_benchmark_spec("no_such_spec.json"), DomainError);
}

TEST_CASE("grid strings parse and validate") {
    const GridSpec grid = parse_grid_spec("-1,1,10;0,2,5");
    CHECK(grid.x_lo == -1.0);
    CHECK(grid.x_hi == 1.0);
    CHECK(grid.x_steps == 10);
    CHECK(grid.y_lo == 0.0);
    CHECK(grid.y_hi == 2.0);
    CHECK(grid.y_steps == 5);

    CHECK_THROWS_AS(parse_grid_spec(""), DomainError);
    CHECK_THROWS_AS(parse_grid_spec("0,1,4"), DomainError);
    CHECK_THROWS_AS(parse_grid_spec("0,1,4;0,1"), DomainError);
    CHECK_THROWS_AS(parse_grid_spec("1,0,4;0,1,4"), DomainError);   // reversed range
    CHECK_THROWS_AS(parse_grid_spec("0,1,1;0,1,4"), DomainError);   // too few cells
    CHECK_THROWS_AS(parse_grid_spec("0,1,4;0,1,4 x"), DomainError); // trailing junk
}

TEST_CASE("basin_scan covers the grid with cell centers") {
    const Problem p = example1();
    const GridSpec grid = parse_grid_spec("0,1,2;0,1,2");
    const std::vector<GridCell> cells = basin_scan(p, Method::GNK, grid);
    REQUIRE(cells.size() == 4);
    CHECK(cells[0].x == doctest::Approx(0.25));
    CHECK(cells[0].y == doctest::Approx(0.25));
    CHECK(cells[1].x == doctest::Approx(0.75));
    CHECK(cells[3].y == doctest::Approx(0.75));

    const std::string csv = basin_to_csv(cells);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "x,y,status,iterations");
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == 4);
}

TEST_CASE("tiny grid around the solution converges everywhere") {
    const Problem p = example1();
    GridSpec grid;
    grid.x_lo = 0.89465537 - 1e-3;
    grid.x_hi = 0.89465537 + 1e-3;
    grid.y_lo = 0.32782652 - 1e-3;
    grid.y_hi = 0.32782652 + 1e-3;
    grid.x_steps = 4;
    grid.y_steps = 4;
    for (const Method method : {Method::GNK, Method::GNS, Method::SEC, Method::KUR})
        for (const GridCell& cell : basin_scan(p, method, grid))
            CHECK(cell.status == SolveStatus::Converged);
}

TEST_CASE("wide grid shows mixed behavior without crashing") {
    // Exploratory sweep: record the status mix, assert only sanity.
    const Problem p = example1();
    const GridSpec grid = parse_grid_spec("-5,5,6;-5,5,6");
    const std::vector<GridCell> cells = basin_scan(p, Method::SEC, grid);
    REQUIRE(cells.size() == 36);
    int converged = 0;
    int failed = 0;
    for (const GridCell& cell : cells)
        (cell.status == SolveStatus::Converged ? converged : failed) += 1;
    MESSAGE("wide-grid SEC outcome: ", converged, " converged, ", failed, " other");
    CHECK(converged + failed == 36);
    CHECK(converged > 0);
}

TEST_CASE("basin_scan requires a planar problem") {
    Problem p;
    p.name = "one_dim";
    p.n = 1;
    p.m = 1;
    p.F = [](const Vector& v) { return Vector{v[0]}; };
    p.G = [](const Vector&) { return Vector{0.0}; };
    p.jacobian_F = [](const Vector&) { return Matrix::identity(1); };
    CHECK_THROWS_AS(basin_scan(p, Method::GNK, parse_grid_spec("0,1,2;0,1,2")),
                    NonTwoDimensional);
}

TEST_CASE("trace serialization is stable and complete") {
    const Problem p = example1();
    const Vector x0{1.0, 0.1};
    const IterationTrace trace = solve(p, x0, Method::GNK);
    const std::string json = trace_to_json(trace, p.name, x0, Method::GNK, 1e-8);
    CHECK(json.find("\"method\": \"gnk\"") != std::string::npos);
    CHECK(json.find("\"problem\": \"example1\"") != std::string::npos);
    CHECK(json.find("\"status\": \"Converged\"") != std::string::npos);
    CHECK(json.find("\"iterations\": 5") != std::string::npos);
    CHECK(json.find("\"iterates\"") != std::string::npos);
    CHECK(json.find("\"step_norms\"") != std::string::npos);
    CHECK(json.find("\"grad_norms\"") != std::string::npos);
    // 17 significant digits survive: x0 carries the binary value of 0.1.
    CHECK(json.find("0.10000000000000001") != std::string::npos);
    CHECK(json == trace_to_json(trace, p.name, x0, Method::GNK, 1e-8));

    const std::string csv = trace_to_csv(trace);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "iter,step_norm,grad_norm,x0,x1");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == static_cast<int>(trace.iterates.size()));
    CHECK(csv.find("\n-1,,,") != std::string::npos);  // seed rows have no step data
}

TEST_CASE("radius report serializes optionals as null with reasons") {
    LipschitzConstants flat;
    flat.B = 1.0;
    flat.alpha = 0.2;
    const std::string json = report_to_json(radius_report(flat));
    CHECK(json.find("\"gamma\": null") != std::string::npos);
    CHECK(json.find("\"gamma_reason\": \"no_bracket\"") != std::string::npos);
    CHECK(json.find("\"r_star\": null") != std::string::npos);
    CHECK(json.find("\"constants_semantics\": \"sampled_lower_bounds\"") != std::string::npos);

    LipschitzConstants c;
    c.B = 1.0;
    c.alpha = 0.1;
    c.L0 = c.L = c.L1 = 1.0;
    c.M0 = c.M = 0.5;
    c.N0 = c.N = 1.0;
    const std::string full = report_to_json(radius_report(c));
    CHECK(full.find("\"r_star\": 0.") != std::string::npos);
    CHECK(full.find("r_star_reason") == std::string::npos);
    CHECK(full.find("\"condition15\": true") != std::string::npos);
    CHECK(full.find("\"C3\": ") != std::string::npos);
}

TEST_CASE("format_double round-trips doubles") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.1) == "0.10000000000000001");
    const double val = 0.8946553733346868;
    CHECK(std::stod(format_double(val)) == val);
}
