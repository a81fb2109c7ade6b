#include "gnk/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace gnk {

namespace {

std::string json_number_list(const Vector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_double(v[i]);
    }
    out += "]";
    return out;
}

std::string json_optional(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string("null");
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string trace_to_json(const IterationTrace& trace, const std::string& problem_name,
                          const Vector& x0, Method method, double epsilon) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"method\": " << json_string(to_string(method)) << ",\n";
    out << "  \"problem\": " << json_string(problem_name) << ",\n";
    out << "  \"x0\": " << json_number_list(x0) << ",\n";
    out << "  \"epsilon\": " << format_double(epsilon) << ",\n";
    out << "  \"status\": " << json_string(to_string(trace.status)) << ",\n";
    out << "  \"iterations\": " << trace.iterations << ",\n";
    out << "  \"iterates\": [\n";
    for (std::size_t i = 0; i < trace.iterates.size(); ++i)
        out << "    " << json_number_list(trace.iterates[i])
            << (i + 1 < trace.iterates.size() ? "," : "") << "\n";
    out << "  ],\n";
    out << "  \"step_norms\": [";
    for (std::size_t i = 0; i < trace.step_norms.size(); ++i)
        out << (i ? ", " : "") << format_double(trace.step_norms[i]);
    out << "],\n";
    out << "  \"grad_norms\": [";
    for (std::size_t i = 0; i < trace.grad_norms.size(); ++i)
        out << (i ? ", " : "") << format_double(trace.grad_norms[i]);
    out << "]\n";
    out << "}\n";
    return out.str();
}

std::string trace_to_csv(const IterationTrace& trace) {
    const std::size_t dim = trace.iterates.empty() ? 0 : trace.iterates.front().size();
    std::ostringstream out;
    out << "iter,step_norm,grad_norm";
    for (std::size_t j = 0; j < dim; ++j) out << ",x" << j;
    out << "\n";
    for (std::size_t i = 0; i < trace.iterates.size(); ++i) {
        const long long index = static_cast<long long>(i) - 1;
        out << index << ",";
        if (i >= 2) {
            out << format_double(trace.step_norms[i - 2]) << ","
                << format_double(trace.grad_norms[i - 2]);
        } else {
            out << ",";
        }
        for (std::size_t j = 0; j < dim; ++j) out << "," << format_double(trace.iterates[i][j]);
        out << "\n";
    }
    return out.str();
}

std::string report_to_json(const RadiusReport& report) {
    const LipschitzConstants& c = report.constants;
    std::ostringstream out;
    out << "{\n";
    out << "  \"constants\": {\n";
    out << "    \"B\": " << format_double(c.B) << ",\n";
    out << "    \"alpha\": " << format_double(c.alpha) << ",\n";
    out << "    \"eta\": " << format_double(c.eta) << ",\n";
    out << "    \"L0\": " << format_double(c.L0) << ",\n";
    out << "    \"M0\": " << format_double(c.M0) << ",\n";
    out << "    \"N0\": " << format_double(c.N0) << ",\n";
    out << "    \"L\": " << format_double(c.L) << ",\n";
    out << "    \"M\": " << format_double(c.M) << ",\n";
    out << "    \"N\": " << format_double(c.N) << ",\n";
    out << "    \"L1\": " << format_double(c.L1) << "\n";
    out << "  },\n";
    // Sampling can only ever observe lower bounds for the suprema the
    // analysis is stated in, so the report says so.
    out << "  \"constants_semantics\": \"sampled_lower_bounds\",\n";
    out << "  \"condition15\": " << (report.condition15 ? "true" : "false") << ",\n";
    out << "  \"gamma\": " << json_optional(report.gamma) << ",\n";
    if (!report.gamma)
        out << "  \"gamma_reason\": " << json_string(report.gamma_reason) << ",\n";
    out << "  \"r_star\": " << json_optional(report.r_star) << ",\n";
    if (!report.r_star)
        out << "  \"r_star_reason\": " << json_string(report.r_star_reason) << ",\n";
    out << "  \"r_star_prior\": " << json_optional(report.r_star_prior) << ",\n";
    if (!report.r_star_prior)
        out << "  \"r_star_prior_reason\": " << json_string(report.r_star_prior_reason)
            << ",\n";
    out << "  \"g_at_rstar\": " << json_optional(report.g_at_rstar) << ",\n";
    out << "  \"C1\": " << json_optional(report.c1) << ",\n";
    out << "  \"C2\": " << json_optional(report.c2) << ",\n";
    out << "  \"C3\": " << json_optional(report.c3) << ",\n";
    out << "  \"C4\": " << json_optional(report.c4) << ",\n";
    out << "  \"a_at_rstar\": " << json_optional(report.a_at_rstar) << ",\n";
    out << "  \"b_at_rstar\": " << json_optional(report.b_at_rstar) << "\n";
    out << "}\n";
    return out.str();
}

}  // namespace gnk
