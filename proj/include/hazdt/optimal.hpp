#pragma once

#include "hazdt/boolean_function.hpp"
#include "hazdt/tree.hpp"

namespace hazdt {

// Exact optima by memoized recursion over partial assignments. The
// witness achieves the reported value and validates in the matching
// computes() mode.
struct OptimalResult {
  int value;
  DecisionTree witness;
};

inline constexpr int kMaxBooleanSearchVars = 10;
inline constexpr int kMaxTernarySearchVars = 8;

OptimalResult optimal_depth(const BooleanFunction& f);
OptimalResult optimal_size(const BooleanFunction& f);

// Optima over ternary trees computing the hazard-free extension.
OptimalResult optimal_depth_u(const BooleanFunction& f);
OptimalResult optimal_size_u(const BooleanFunction& f);

// Optima over ternary trees required correct only on inputs with at most
// k unstable digits. Once the u-budget is spent, a query's u-child is a
// single u-labeled leaf (one leaf, no queries below it).
OptimalResult optimal_depth_k(const BooleanFunction& f, int k);
OptimalResult optimal_size_k(const BooleanFunction& f, int k);

}  // namespace hazdt
