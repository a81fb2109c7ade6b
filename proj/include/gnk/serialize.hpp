#pragma once

#include <string>

#include "gnk/solver.hpp"
#include "gnk/theory.hpp"

namespace gnk {

// Decimal form with 17 significant digits, enough to round-trip a double.
std::string format_double(double v);

std::string trace_to_json(const IterationTrace& trace, const std::string& problem_name,
                          const Vector& x0, Method method, double epsilon);

// One row per iterate, starting at index -1; step and gradient columns are
// empty for the two seed rows.
std::string trace_to_csv(const IterationTrace& trace);

std::string report_to_json(const RadiusReport& report);

}  // namespace gnk
