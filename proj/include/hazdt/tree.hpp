#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hazdt/boolean_function.hpp"
#include "hazdt/ternary_function.hpp"

namespace hazdt {

// Query tree with 2 (binary) or 3 (ternary) children per internal node.
// Ternary children are ordered 0, u, 1 (matching the digit encoding);
// binary children 0, 1. Every root-to-leaf path queries distinct
// variables; binary leaves carry stable labels. Size is the number of
// leaves, depth the maximum number of queries on a path.
class DecisionTree {
 public:
  enum class Arity { binary, ternary };

  struct Node {
    int var = -1;  // -1 marks a leaf
    Ternary label = tu;
    std::vector<Node> kids;

    bool is_leaf() const { return var < 0; }
    static Node leaf(Ternary v) { return Node{-1, v, {}}; }
    static Node internal(int var, std::vector<Node> kids) {
      return Node{var, tu, std::move(kids)};
    }
  };

  DecisionTree(Arity arity, Node root);

  Arity arity() const { return arity_; }
  const Node& root() const { return root_; }

  int size() const;   // leaf count
  int depth() const;  // max queries on a root-to-leaf path
  int max_var() const;

  // Follows the child matching x at each query. Binary trees reject
  // unstable digits at queried positions.
  Ternary evaluate(const TernaryWord& x) const;

  std::string to_sexpr() const;
  static DecisionTree parse_sexpr(std::string_view text, Arity arity);

  friend bool operator==(const DecisionTree& a, const DecisionTree& b) {
    return a.arity_ == b.arity_ && a.to_sexpr() == b.to_sexpr();
  }

 private:
  Arity arity_;
  Node root_;
};

struct ComputeMode {
  enum class Kind { boolean, hazard_free, k_bit };
  Kind kind;
  int k = 0;

  static ComputeMode boolean() { return {Kind::boolean, 0}; }
  static ComputeMode hazard_free() { return {Kind::hazard_free, 0}; }
  static ComputeMode k_bit(int k) { return {Kind::k_bit, k}; }
};

// Does T compute f (boolean mode: all stable inputs), f~ (hazard_free:
// all 3^n words), or f~ on words with at most k unstable digits (k_bit)?
bool computes(const DecisionTree& t, const BooleanFunction& f, ComputeMode mode);

// Same with an explicit (possibly lazy) target extension.
bool computes(const DecisionTree& t, const TernaryFunction& target, ComputeMode mode);

// Deletes every u-child. If the input computes f~ the result computes f.
// Rejects trees where a u-labeled leaf survives at a stable-reachable
// position (in particular a u-leaf root).
DecisionTree strip_u_subtrees(const DecisionTree& t);

// Leaves whose root path follows at most k u-edges: the leaves an input
// within the u-budget can reach. A query whose budget is spent carries a
// structural u-leaf; those sit one u-edge past the budget and are not
// counted here.
int size_within_budget(const DecisionTree& t, int k);

}  // namespace hazdt
