#ifndef PROXPAIR_TRACE_IO_HPP
#define PROXPAIR_TRACE_IO_HPP

#include <ostream>
#include <string>

#include <json.hpp>

#include "proxpair/iteration.hpp"
#include "proxpair/report.hpp"

namespace proxpair {

/// Shortest round-trippable decimal form; keeps reports byte-identical
/// across runs.
std::string format_double(double value);

inline constexpr const char* kTraceCsvSchema = "# proxpair-trace-csv v1";
inline constexpr const char* kCoefficientsCsvSchema = "# proxpair-coefficients-csv v1";
inline constexpr const char* kReportCsvSchema = "# proxpair-report-csv v1";

/// CSV rows n, side, residual, gap, distance_to_reference, where the last
/// column measures ||u_n - reference|| in the trace's norm.
template <class V>
void write_trace_csv(std::ostream& os, const IterationTrace<V>& trace, const V& reference,
                     NormKind kind) {
  os << kTraceCsvSchema << "\n";
  os << "n,side,residual,gap,distance_to_reference\n";
  for (int n = 1; n <= trace.horizon; ++n) {
    const auto& point = trace.at(n);
    os << n << ',' << to_string(point.side) << ',' << format_double(trace.residuals[n - 1])
       << ',' << format_double(trace.gaps[n - 1]) << ','
       << format_double(norm_eval(sub(point.value, reference), kind)) << "\n";
  }
}

template <class V>
nlohmann::json trace_to_json(const IterationTrace<V>& trace, const V& reference, NormKind kind) {
  nlohmann::json rows = nlohmann::json::array();
  for (int n = 1; n <= trace.horizon; ++n) {
    const auto& point = trace.at(n);
    rows.push_back({{"n", n},
                    {"side", to_string(point.side)},
                    {"residual", trace.residuals[n - 1]},
                    {"gap", trace.gaps[n - 1]},
                    {"distance_to_reference", norm_eval(sub(point.value, reference), kind)},
                    {"point", vector_json(point.value)}});
  }
  return {{"schema", "proxpair-trace/v1"},
          {"start", vector_json(trace.start.value)},
          {"start_side", to_string(trace.start.side)},
          {"horizon", trace.horizon},
          {"rows", rows}};
}

}  // namespace proxpair

#endif  // PROXPAIR_TRACE_IO_HPP
