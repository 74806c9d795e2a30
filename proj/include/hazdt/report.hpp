#pragma once

#include <optional>
#include <string>

#include "hazdt/boolean_function.hpp"

namespace hazdt {

// One row of measures for a function. Fields over a feasibility limit
// stay empty and print as "skipped(limit)".
struct MeasureReport {
  std::string function_id;
  int n = 0;
  std::optional<int> depth, size, depth_u, size_u;
  std::optional<int> s_u, s_u_0, s_u_u, s_u_1;
  std::optional<int> bs_u, bs_u_0, bs_u_u, bs_u_1;
  std::optional<int> cc_u, cc_u_0, cc_u_u, cc_u_1;
  std::optional<int> k1, k2, m, M;
  std::optional<int> s, bs, cc;
  std::optional<int> stabs_v, slys_v;
};

MeasureReport analyze_function(const BooleanFunction& f, std::string function_id);

std::string measure_report_header();
std::string measure_report_row(const MeasureReport& r);

}  // namespace hazdt
