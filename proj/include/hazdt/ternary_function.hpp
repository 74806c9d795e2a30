#pragma once

#include <functional>
#include <vector>

#include "hazdt/boolean_function.hpp"
#include "hazdt/ternary.hpp"

namespace hazdt {

// Function {0,u,1}^n -> {0,u,1}. Either holds an explicit table of 3^n
// values or a pure evaluator for arities too large to tabulate.
class TernaryFunction {
 public:
  using Evaluator = std::function<Ternary(const TernaryWord&)>;

  TernaryFunction() = default;

  static TernaryFunction from_table(int n, std::vector<Ternary> table,
                                    bool known_extension = false);
  static TernaryFunction from_evaluator(int n, Evaluator eval,
                                        bool known_extension = false);

  int arity() const { return n_; }
  bool has_table() const { return has_table_; }

  Ternary value(const TernaryWord& x) const;
  Ternary value_index(std::uint64_t idx) const;  // explicit table only

  // True when the function is known by construction to be the hazard-free
  // extension of a Boolean function.
  bool known_extension() const { return known_extension_; }

  const std::vector<Ternary>& table() const;

  friend bool operator==(const TernaryFunction& a, const TernaryFunction& b) {
    return a.n_ == b.n_ && a.has_table_ && b.has_table_ && a.table_ == b.table_;
  }

 private:
  int n_ = 0;
  bool has_table_ = false;
  bool known_extension_ = false;
  std::vector<Ternary> table_;
  Evaluator eval_;
};

inline constexpr int kDefaultTableLimit = 12;

// The hazard-free extension of f as an explicit table, computed by the
// merge recurrence over words of ascending unstable count.
TernaryFunction hazard_free_extension(const BooleanFunction& f,
                                      int table_limit = kDefaultTableLimit);

// Lazy extension: evaluates f~ on demand by enumerating the 2^(#u)
// resolutions of the unstable positions only. `stable_eval` maps a
// Boolean table index to the function value.
TernaryFunction lazy_hazard_free_extension(
    int n, std::function<bool(std::uint64_t)> stable_eval);
TernaryFunction lazy_hazard_free_extension(const BooleanFunction& f);

// Monotone under the instability order and stable on stable inputs.
bool is_natural(const TernaryFunction& g);

// Monotone, and forced to agree whenever all strictly-more-stable inputs
// share one value.
bool is_weakly_hazard_free(const TernaryFunction& g);

// Fixes x_i = a; variable indices above i shift down by one.
TernaryFunction restrict_input(const TernaryFunction& g, int i, Ternary a);

// The Boolean function underneath a hazard-free extension (reads the
// stable entries).
BooleanFunction stable_part(const TernaryFunction& g);

}  // namespace hazdt
