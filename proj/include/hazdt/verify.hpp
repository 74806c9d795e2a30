#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hazdt/boolean_function.hpp"
#include "hazdt/implicants.hpp"
#include "hazdt/ternary_function.hpp"

namespace hazdt {

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus s);

struct CheckOutcome {
  CheckStatus status = CheckStatus::pass;
  std::string detail;

  static CheckOutcome pass() { return {CheckStatus::pass, ""}; }
  static CheckOutcome fail(std::string detail) { return {CheckStatus::fail, std::move(detail)}; }
  static CheckOutcome skip(std::string reason) {
    return {CheckStatus::skipped, std::move(reason)};
  }
};

// Shared lazily-computed data for one function under check.
class FunctionContext {
 public:
  FunctionContext(BooleanFunction f, std::string id);

  const BooleanFunction& fn() const { return f_; }
  const std::string& id() const { return id_; }

  const TernaryFunction& ext();
  const ExtremalSizes& sizes();
  const ImplicantSet& implicants();
  const ImplicantSet& implicates();

  int depth();
  int size();
  int depth_u();
  int size_u();

  int su();
  int su_at(Ternary b);
  int bsu();
  int ccu();
  int ccu_at(Ternary b);
  int boolean_s();

  bool is_constant() const;

 private:
  BooleanFunction f_;
  std::string id_;
  std::optional<TernaryFunction> ext_;
  std::optional<ExtremalSizes> sizes_;
  std::optional<ImplicantSet> implicants_, implicates_;
  std::optional<int> depth_, size_, depth_u_, size_u_;
  std::optional<int> su_, su_by_value_[3];
  std::optional<int> bsu_, ccu_, ccu_by_value_[3];
  std::optional<int> boolean_s_;
};

// One quantitative claim. Sweep checks run per function; standalone
// checks are self-contained (fixed families) and run once.
struct TheoremCheck {
  std::string id;
  std::string statement;
  std::function<CheckOutcome(FunctionContext&)> per_function;  // null for standalone
  std::function<CheckOutcome()> standalone;                    // null for sweeps
};

const std::vector<TheoremCheck>& all_checks();
std::vector<TheoremCheck> checks_by_ids(const std::vector<std::string>& ids);

enum class FunctionFilter { all, nondegenerate, npn_representatives };

// Deterministic enumeration, ascending truth-table value; one function
// per negation-permutation-negation class for the representatives filter.
std::vector<BooleanFunction> enumerate_functions(int n, FunctionFilter filter);

// Uniform random truth tables from a seeded generator.
std::vector<BooleanFunction> sample_functions(int n, int count, std::uint64_t seed);

std::uint64_t npn_canonical(std::uint64_t table, int n);

struct VerifyReport {
  struct Row {
    std::string function_id;
    std::string check_id;
    CheckStatus status;
    std::string detail;
  };
  std::vector<Row> rows;
  int passes = 0;
  int failures = 0;
  int skips = 0;

  std::string to_tsv() const;
};

VerifyReport run_checks(const std::vector<BooleanFunction>& fs,
                        const std::vector<TheoremCheck>& checks, int jobs = 1);

}  // namespace hazdt
