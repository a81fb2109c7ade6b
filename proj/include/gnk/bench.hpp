#pragma once

#include <string>
#include <vector>

#include "gnk/solver.hpp"

namespace gnk {

// Cross product of problems, starts, and methods to run under one config.
struct BenchmarkSpec {
    std::vector<std::string> problems;
    std::vector<Vector> starts;
    std::vector<Method> methods;
    SolveConfig config;
};

struct BenchRow {
    std::string problem;
    Vector start;
    Method method;
    SolveStatus status = SolveStatus::MaxIterations;
    int iterations = 0;
};

// One row per (problem, start, method), in that order, with methods in
// their canonical order regardless of how the spec lists them. All inputs
// are validated before the first solve runs.
std::vector<BenchRow> run_benchmark(const BenchmarkSpec& spec);

// JSON file: {"problems": [...], "starts": [[...], ...], "methods": [...],
// "config": {"epsilon", "max_iter", "x_minus1_offset", "stop_index"}};
// config and its fields are optional.
BenchmarkSpec load_benchmark_spec(const std::string& path);

std::string benchmark_to_csv(const std::vector<BenchRow>& rows);

// Axis ranges and cell counts parsed from "xlo,xhi,steps;ylo,yhi,steps".
struct GridSpec {
    double x_lo = 0.0, x_hi = 0.0;
    int x_steps = 0;
    double y_lo = 0.0, y_hi = 0.0;
    int y_steps = 0;
};
GridSpec parse_grid_spec(const std::string& text);

struct GridCell {
    double x = 0.0, y = 0.0;
    SolveStatus status = SolveStatus::MaxIterations;
    int iterations = 0;
};

// Independent solve per cell, started at the cell center, row-major from
// the low corner. Requires a two-dimensional problem.
std::vector<GridCell> basin_scan(const Problem& p, Method method, const GridSpec& grid,
                                 const SolveConfig& config = {});

std::string basin_to_csv(const std::vector<GridCell>& cells);

}  // namespace gnk
