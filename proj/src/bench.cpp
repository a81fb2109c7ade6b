#include "gnk/bench.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gnk/serialize.hpp"

namespace gnk {

namespace {

std::vector<Method> canonical_methods(std::vector<Method> methods) {
    std::sort(methods.begin(), methods.end());
    methods.erase(std::unique(methods.begin(), methods.end()), methods.end());
    return methods;
}

std::string format_start(const Vector& start) {
    std::string out;
    for (std::size_t i = 0; i < start.size(); ++i) {
        if (i) out += ";";
        out += format_double(start[i]);
    }
    return out;
}

}  // namespace

std::vector<BenchRow> run_benchmark(const BenchmarkSpec& spec) {
    if (spec.problems.empty()) throw DomainError("run_benchmark: no problems given");
    if (spec.starts.empty()) throw DomainError("run_benchmark: no starts given");
    if (spec.methods.empty()) throw DomainError("run_benchmark: no methods given");

    // Resolve and validate everything up front so a bad cell cannot leave a
    // half-written table behind.
    std::vector<Problem> problems;
    problems.reserve(spec.problems.size());
    for (const auto& name : spec.problems) problems.push_back(find_problem(name));
    for (const auto& p : problems)
        for (const auto& start : spec.starts)
            if (start.size() != p.n)
                throw DimensionMismatch("run_benchmark: start has wrong dimension for " +
                                        p.name);

    const std::vector<Method> methods = canonical_methods(spec.methods);
    std::vector<BenchRow> rows;
    rows.reserve(problems.size() * spec.starts.size() * methods.size());
    for (const auto& p : problems) {
        for (const auto& start : spec.starts) {
            for (const Method method : methods) {
                const IterationTrace trace = solve(p, start, method, spec.config);
                rows.push_back({p.name, start, method, trace.status, trace.iterations});
            }
        }
    }
    return rows;
}

BenchmarkSpec load_benchmark_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("load_benchmark_spec: cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("load_benchmark_spec: bad JSON: ") + e.what());
    }

    BenchmarkSpec spec;
    try {
        for (const auto& name : doc.at("problems"))
            spec.problems.push_back(name.get<std::string>());
        for (const auto& start : doc.at("starts"))
            spec.starts.push_back(start.get<Vector>());
        for (const auto& method : doc.at("methods"))
            spec.methods.push_back(method_from_string(method.get<std::string>()));
        if (doc.contains("config")) {
            const auto& cfg = doc["config"];
            if (cfg.contains("epsilon")) spec.config.epsilon = cfg["epsilon"].get<double>();
            if (cfg.contains("max_iter")) spec.config.max_iter = cfg["max_iter"].get<int>();
            if (cfg.contains("x_minus1_offset"))
                spec.config.x_minus1_offset = cfg["x_minus1_offset"].get<double>();
            if (cfg.contains("stop_index")) {
                const auto tag = cfg["stop_index"].get<std::string>();
                if (tag == "new")
                    spec.config.stop_index = StopIndex::NewIterate;
                else if (tag == "old")
                    spec.config.stop_index = StopIndex::OldIterate;
                else
                    throw DomainError("load_benchmark_spec: stop_index must be new or old");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("load_benchmark_spec: bad spec layout: ") + e.what());
    }
    return spec;
}

std::string benchmark_to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "problem,start,method,status,iterations\n";
    for (const auto& row : rows)
        out << row.problem << "," << format_start(row.start) << "," << to_string(row.method)
            << "," << to_string(row.status) << "," << row.iterations << "\n";
    return out.str();
}

GridSpec parse_grid_spec(const std::string& text) {
    GridSpec grid;
    char sep1 = 0;
    char sep2 = 0;
    char sep3 = 0;
    char sep4 = 0;
    char axis_sep = 0;
    std::istringstream in(text);
    in >> grid.x_lo >> sep1 >> grid.x_hi >> sep2 >> grid.x_steps >> axis_sep >> grid.y_lo >>
        sep3 >> grid.y_hi >> sep4 >> grid.y_steps;
    if (!in || sep1 != ',' || sep2 != ',' || sep3 != ',' || sep4 != ',' || axis_sep != ';')
        throw DomainError("parse_grid_spec: expected \"xlo,xhi,steps;ylo,yhi,steps\"");
    std::string rest;
    if (in >> rest) throw DomainError("parse_grid_spec: trailing characters");
    if (!(grid.x_lo < grid.x_hi) || !(grid.y_lo < grid.y_hi))
        throw DomainError("parse_grid_spec: ranges must be increasing");
    if (grid.x_steps < 2 || grid.y_steps < 2)
        throw DomainError("parse_grid_spec: need at least 2 steps per axis");
    return grid;
}

std::vector<GridCell> basin_scan(const Problem& p, Method method, const GridSpec& grid,
                                 const SolveConfig& config) {
    if (p.n != 2) throw NonTwoDimensional("basin_scan: problem is not two-dimensional");
    if (grid.x_steps < 2 || grid.y_steps < 2 || !(grid.x_lo < grid.x_hi) ||
        !(grid.y_lo < grid.y_hi))
        throw DomainError("basin_scan: invalid grid");

    const double dx = (grid.x_hi - grid.x_lo) / grid.x_steps;
    const double dy = (grid.y_hi - grid.y_lo) / grid.y_steps;
    std::vector<GridCell> cells;
    cells.reserve(static_cast<std::size_t>(grid.x_steps) * grid.y_steps);
    for (int iy = 0; iy < grid.y_steps; ++iy) {
        for (int ix = 0; ix < grid.x_steps; ++ix) {
            GridCell cell;
            cell.x = grid.x_lo + (ix + 0.5) * dx;
            cell.y = grid.y_lo + (iy + 0.5) * dy;
            const IterationTrace trace = solve(p, {cell.x, cell.y}, method, config);
            cell.status = trace.status;
            cell.iterations = trace.iterations;
            cells.push_back(cell);
        }
    }
    return cells;
}

std::string basin_to_csv(const std::vector<GridCell>& cells) {
    std::ostringstream out;
    out << "x,y,status,iterations\n";
    for (const auto& cell : cells)
        out << format_double(cell.x) << "," << format_double(cell.y) << ","
            << to_string(cell.status) << "," << cell.iterations << "\n";
    return out.str();
}

}  // namespace gnk
