#include "hazdt/report.hpp"

#include <vector>

#include "hazdt/implicants.hpp"
#include "hazdt/measures.hpp"
#include "hazdt/optimal.hpp"
#include "hazdt/ternary_function.hpp"

namespace hazdt {

MeasureReport analyze_function(const BooleanFunction& f, std::string function_id) {
  MeasureReport r;
  r.function_id = std::move(function_id);
  r.n = f.n;

  if (f.n <= kMaxBooleanSearchVars) {
    r.depth = optimal_depth(f).value;
    r.size = optimal_size(f).value;
  }
  if (f.n <= kMaxTernarySearchVars) {
    r.depth_u = optimal_depth_u(f).value;
    r.size_u = optimal_size_u(f).value;
  }
  if (f.n <= kDefaultTableLimit) {
    TernaryFunction ext = hazard_free_extension(f);
    r.s_u = s_u(ext);
    r.s_u_0 = s_u_at(ext, t0);
    r.s_u_u = s_u_at(ext, tu);
    r.s_u_1 = s_u_at(ext, t1);
    r.stabs_v = stabs(ext);
    r.slys_v = slys(ext);
    ExtremalSizes sizes = extremal_sizes(f);
    r.k1 = sizes.k1;
    r.k2 = sizes.k2;
    r.m = sizes.m;
    r.M = sizes.M;
    if (f.n <= kMaxSubsetSearchVars) {
      r.bs_u = bs_u(ext);
      r.bs_u_0 = bs_u_at(ext, t0);
      r.bs_u_u = bs_u_at(ext, tu);
      r.bs_u_1 = bs_u_at(ext, t1);
      r.cc_u = cc_u(ext);
      r.cc_u_0 = cc_u_at(ext, t0);
      r.cc_u_u = cc_u_at(ext, tu);
      r.cc_u_1 = cc_u_at(ext, t1);
    }
  }
  if (f.n <= kMaxSubsetSearchVars) {
    BooleanMeasures bm = boolean_measures(f);
    r.s = bm.s;
    r.bs = bm.bs;
    r.cc = bm.cc;
  }
  return r;
}

namespace {

const std::vector<const char*>& field_names() {
  static const std::vector<const char*> names = {
      "function", "n",      "depth",  "size",   "depth_u", "size_u", "s_u",
      "s_u_0",    "s_u_u",  "s_u_1",  "bs_u",   "bs_u_0",  "bs_u_u", "bs_u_1",
      "cc_u",     "cc_u_0", "cc_u_u", "cc_u_1", "k1",      "k2",     "m",
      "M",        "s",      "bs",     "cc",     "stabs",   "slys"};
  return names;
}

std::string cell(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("skipped(limit)");
}

}  // namespace

std::string measure_report_header() {
  std::string out;
  for (const char* name : field_names()) {
    if (!out.empty()) out.push_back('\t');
    out += name;
  }
  return out;
}

std::string measure_report_row(const MeasureReport& r) {
  std::vector<std::string> cells = {
      r.function_id, std::to_string(r.n),
      cell(r.depth),  cell(r.size),   cell(r.depth_u), cell(r.size_u),
      cell(r.s_u),    cell(r.s_u_0),  cell(r.s_u_u),   cell(r.s_u_1),
      cell(r.bs_u),   cell(r.bs_u_0), cell(r.bs_u_u),  cell(r.bs_u_1),
      cell(r.cc_u),   cell(r.cc_u_0), cell(r.cc_u_u),  cell(r.cc_u_1),
      cell(r.k1),     cell(r.k2),     cell(r.m),       cell(r.M),
      cell(r.s),      cell(r.bs),     cell(r.cc),      cell(r.stabs_v),
      cell(r.slys_v)};
  std::string out;
  for (const std::string& c : cells) {
    if (!out.empty()) out.push_back('\t');
    out += c;
  }
  return out;
}

}  // namespace hazdt
