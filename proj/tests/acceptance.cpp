// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hazdt/construct.hpp"
#include "hazdt/families.hpp"
#include "hazdt/implicants.hpp"
#include "hazdt/measures.hpp"
#include "hazdt/optimal.hpp"
#include "hazdt/tree.hpp"
#include "hazdt/verify.hpp"
#include "oracles.hpp"

using namespace hazdt;

namespace {

int failures = 0;

struct Criterion {
  int index;
  const char* name;
  std::function<std::string()> run;  // empty string = pass, otherwise detail
};

void run_criterion(const Criterion& c) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  try {
    detail = c.run();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = detail.empty();
  std::printf("criterion %2d [%s]: %s (%.2fs)%s%s\n", c.index, c.name,
              ok ? "PASS" : "FAIL", seconds, ok ? "" : " ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string expect(bool ok, const std::string& detail) { return ok ? "" : detail; }

std::string sweep_with_checks(const std::vector<std::string>& ids, int max_n) {
  std::vector<TheoremCheck> checks = checks_by_ids(ids);
  for (int n = 0; n <= max_n; ++n) {
    VerifyReport report = run_checks(enumerate_functions(n, FunctionFilter::all), checks);
    if (report.failures != 0) {
      for (const auto& row : report.rows)
        if (row.status == CheckStatus::fail)
          return row.check_id + " fails at " + row.function_id + ": " + row.detail;
    }
  }
  return "";
}

std::string criterion_mux_depth() {
  for (int n : {1, 2}) {
    int got = optimal_depth_u(make_family(FamilySpec{Family::Mux, n})).value;
    int want = (1 << n) + n;
    if (got != want)
      return "depth_u(MUX_" + std::to_string(n) + ") = " + std::to_string(got) +
             ", expected " + std::to_string(want);
  }
  return "";
}

std::string criterion_mux_budgeted_depth() {
  BooleanFunction mux2 = make_family(FamilySpec{Family::Mux, 2});
  for (int k = 0; k <= 2; ++k) {
    int got = optimal_depth_k(mux2, k).value;
    int want = (1 << k) + 2;
    if (got != want)
      return "depth_k(MUX_2, " + std::to_string(k) + ") = " + std::to_string(got) +
             ", expected " + std::to_string(want);
  }
  return "";
}

std::string criterion_mux_size() {
  for (int n : {1, 2}) {
    BooleanFunction f = make_family(FamilySpec{Family::Mux, n});
    DecisionTree t = mux_trees(n).ternary_tree;
    const int want = n == 1 ? 13 : 55;
    if (t.size() != want)
      return "constructed MUX_" + std::to_string(n) + " tree has " +
             std::to_string(t.size()) + " leaves, expected " + std::to_string(want);
    if (!computes(t, f, ComputeMode::hazard_free()))
      return "constructed MUX_" + std::to_string(n) + " tree fails validation";
  }
  int opt = optimal_size_u(make_family(FamilySpec{Family::Mux, 1})).value;
  return expect(8 <= opt && opt <= 13,
                "size_u(MUX_1) = " + std::to_string(opt) + " outside [8, 13]");
}

std::string criterion_and_size() {
  using Node = DecisionTree::Node;
  for (int n : {1, 2, 3}) {
    BooleanFunction f = make_family(FamilySpec{Family::And, n});
    const int want = (1 << (n + 1)) - 1;
    int opt = optimal_size_u(f).value;
    if (opt != want)
      return "size_u(AND_" + std::to_string(n) + ") = " + std::to_string(opt) +
             ", expected " + std::to_string(want);
    Node chain = Node::leaf(t1);
    for (int i = n - 1; i >= 0; --i)
      chain = Node::internal(i, {Node::leaf(t0), std::move(chain)});
    DecisionTree converted = hazard_free_from_boolean(
        DecisionTree(DecisionTree::Arity::binary, std::move(chain)), f);
    if (converted.size() != want)
      return "converted AND_" + std::to_string(n) + " chain has " +
             std::to_string(converted.size()) + " leaves, expected " + std::to_string(want);
  }
  return "";
}

std::string criterion_product_construction() {
  std::string sweep = sweep_with_checks({"product-construction", "size-product-range"}, 3);
  if (!sweep.empty()) return sweep;
  for (int n : {2, 3}) {
    int got = optimal_size_u(make_family(FamilySpec{Family::Parity, n})).value;
    int want = (1 << (n + 1)) - 1;
    if (got != want)
      return "size_u(PARITY_" + std::to_string(n) + ") = " + std::to_string(got) +
             ", expected " + std::to_string(want);
  }
  return "";
}

std::string criterion_budgeted_construction() {
  return sweep_with_checks({"budgeted-construction"}, 3);
}

std::string criterion_implicant_bound() {
  return sweep_with_checks({"size-implicant-count"}, 3);
}

std::string criterion_low_depth_family() {
  for (int n : {1, 2}) {
    BooleanFunction f = make_family(FamilySpec{Family::Smalldepth, n});
    if (!is_nondegenerate(f)) return "f_" + std::to_string(n) + " is degenerate";
    DecisionTree t = smalldepth_tree(n);
    if (t.depth() != 2 * n + 1)
      return "smalldepth tree " + std::to_string(n) + " has depth " +
             std::to_string(t.depth());
    if (!computes(t, f, ComputeMode::hazard_free()))
      return "smalldepth tree " + std::to_string(n) + " fails exhaustive validation";
  }
  return "";
}

std::string criterion_sensitivity_chain() {
  std::string sweep = sweep_with_checks({"sensitivity-chain"}, 3);
  if (!sweep.empty()) return sweep;
  std::vector<TheoremCheck> checks = checks_by_ids({"sensitivity-chain"});
  VerifyReport report = run_checks(sample_functions(4, 1000, 0), checks);
  if (report.failures != 0) {
    for (const auto& row : report.rows)
      if (row.status == CheckStatus::fail)
        return "chain fails at sampled " + row.function_id + ": " + row.detail;
  }
  return "";
}

std::string criterion_depth_vs_certificate() {
  return sweep_with_checks({"depth-certificate-cube", "depth-certificate-product"}, 3);
}

std::string criterion_mux_measures() {
  TernaryFunction ext = make_family_extension(FamilySpec{Family::Mux, 2});
  int s = s_u(ext), bs = bs_u(ext), cc = cc_u(ext);
  return expect(s == 4 && bs == 4 && cc == 4,
                "s_u=" + std::to_string(s) + " bs_u=" + std::to_string(bs) +
                    " cc_u=" + std::to_string(cc) + ", expected all 4");
}

std::string criterion_maj_certificate() {
  TernaryFunction ext = make_family_extension(FamilySpec{Family::Maj, 3});
  int got = certificate_complexity_u(ext, TernaryWord::parse("01u"));
  return expect(got == 3, "cc_u(MAJ_3, 01u) = " + std::to_string(got) + ", expected 3");
}

std::string criterion_sensitivity_structure() {
  return sweep_with_checks({"sensitivity-maximizers", "unstable-vs-boolean-sensitivity",
                            "per-value-sensitivity", "per-value-certificate",
                            "stability-variants"},
                           3);
}

std::string criterion_ball_reconstruction() {
  return sweep_with_checks({"ball-reconstruction"}, 3);
}

std::string criterion_oracle_coherence() {
  for (int n = 0; n <= 2; ++n) {
    for (const BooleanFunction& f : enumerate_functions(n, FunctionFilter::all)) {
      TernaryFunction fast = hazard_free_extension(f);
      TernaryFunction slow = oracles::extension_by_resolutions(f);
      if (!(fast.table() == slow.table()))
        return "merge recurrence deviates from the resolution oracle on a " +
               std::to_string(n) + "-input function";
    }
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "mux-depth", criterion_mux_depth},
      {2, "mux-budgeted-depth", criterion_mux_budgeted_depth},
      {3, "mux-size", criterion_mux_size},
      {4, "and-size", criterion_and_size},
      {5, "product-construction", criterion_product_construction},
      {6, "budgeted-construction", criterion_budgeted_construction},
      {7, "implicant-bound", criterion_implicant_bound},
      {8, "low-depth-family", criterion_low_depth_family},
      {9, "sensitivity-chain", criterion_sensitivity_chain},
      {10, "depth-vs-certificate", criterion_depth_vs_certificate},
      {11, "mux-measures", criterion_mux_measures},
      {12, "maj-certificate", criterion_maj_certificate},
      {13, "sensitivity-structure", criterion_sensitivity_structure},
      {14, "ball-reconstruction", criterion_ball_reconstruction},
      {15, "oracle-coherence", criterion_oracle_coherence},
  };
  for (const Criterion& c : criteria) run_criterion(c);
  if (failures == 0)
    std::printf("all %zu criteria passed\n", criteria.size());
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
