#pragma once

#include "hazdt/boolean_function.hpp"
#include "hazdt/tree.hpp"

namespace hazdt {

// Converts a Boolean decision tree for f into a ternary tree computing
// the hazard-free extension. Bottom-up: each query node gets a u-subtree
// assembled by replacing every stable-b leaf of (a copy of) the converted
// 0-subtree with a copy of the converted 1-subtree, spliced past queries
// the leaf's path already answered and with its complement-of-b leaves
// relabeled u. Size of the result is at most 2^size(t) - 1.
DecisionTree hazard_free_from_boolean(const DecisionTree& t, const BooleanFunction& f);

// Budgeted variant: level tower T^0 = t with u-leaves attached, T^(j+1)
// built from the T^j subtrees the same way. The result is correct on
// inputs with at most k unstable digits, with size at most
// size(t)^(2^(k+1)-1) and depth at most 2^k * depth(t).
DecisionTree k_hazard_free_from_boolean(const DecisionTree& t, const BooleanFunction& f,
                                        int k);

// Boolean and hazard-free trees for the multiplexer. The Boolean tree
// queries the selectors then the indexed data bit (size 2^(n+1), depth
// n+1). The ternary tree queries all selectors, then scans the data bits
// indexed by resolutions of the selector outcome with early exits to u
// (size 4^(n+1) - 3^n, depth 2^n + n).
struct MuxTrees {
  DecisionTree boolean_tree;
  DecisionTree ternary_tree;
};
MuxTrees mux_trees(int n);

// Depth-(2n+1) hazard-free tree for the smalldepth family f_n: each level
// queries the next selector bit and y_(), dispatches among immediate
// leaves and relabeled recursive trees for the two prefix branches.
//
// The s_0 = 0 row recurses on y-variables with prefix 0 (y'_w = y_(0w)),
// the s_0 = 1 row on prefix 1, and the s_0 = u row uses the prefix-0
// recursion relabeled 1 -> u on the y_() = 0 side and the prefix-1
// recursion relabeled 0 -> u on the y_() = 1 side.
DecisionTree smalldepth_tree(int n);

}  // namespace hazdt
