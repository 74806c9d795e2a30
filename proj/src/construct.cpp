#include "hazdt/construct.hpp"

#include <array>
#include <stdexcept>

#include "hazdt/families.hpp"

namespace hazdt {

namespace {

using Node = DecisionTree::Node;
using Arity = DecisionTree::Arity;

// Assignment along a path: one slot per variable, -1 = unassigned,
// otherwise the answered digit.
using PathAssignment = std::vector<int>;

// Copy of `node` with queries already answered in `path` spliced out
// (replaced by the child along the assigned digit) and stable leaves
// labeled `flip` relabeled u.
Node splice_relabel(const Node& node, const PathAssignment& path, Ternary flip) {
  if (node.is_leaf()) {
    if (node.label == flip) return Node::leaf(tu);
    return node;
  }
  int assigned = path[static_cast<std::size_t>(node.var)];
  if (assigned >= 0) return splice_relabel(node.kids[static_cast<std::size_t>(assigned)], path, flip);
  std::vector<Node> kids;
  kids.reserve(node.kids.size());
  for (const Node& kid : node.kids) kids.push_back(splice_relabel(kid, path, flip));
  return Node::internal(node.var, std::move(kids));
}

// u-subtree of a query node from its converted 0- and 1-subtrees: walk a
// copy of t0, replacing each stable-b leaf by a copy of t1 consistent
// with the path to that leaf and with its (not b) stable leaves turned
// into u.
Node product_u_subtree(const Node& t0_node, const Node& t1, PathAssignment& path) {
  if (t0_node.is_leaf()) {
    if (!is_stable(t0_node.label)) return t0_node;
    Ternary flip = kleene_not(t0_node.label);
    return splice_relabel(t1, path, flip);
  }
  std::vector<Node> kids;
  kids.reserve(3);
  for (int d = 0; d < 3; ++d) {
    path[static_cast<std::size_t>(t0_node.var)] = d;
    kids.push_back(product_u_subtree(t0_node.kids[static_cast<std::size_t>(d)], t1, path));
  }
  path[static_cast<std::size_t>(t0_node.var)] = -1;
  return Node::internal(t0_node.var, std::move(kids));
}

Node convert_hazard_free(const Node& node, PathAssignment& path) {
  if (node.is_leaf()) return node;
  Node c0 = convert_hazard_free(node.kids[0], path);
  Node c1 = convert_hazard_free(node.kids[1], path);
  Node cu = product_u_subtree(c0, c1, path);
  std::vector<Node> kids;
  kids.push_back(std::move(c0));
  kids.push_back(std::move(cu));
  kids.push_back(std::move(c1));
  return Node::internal(node.var, std::move(kids));
}

int path_slots(const DecisionTree& t) { return t.max_var() + 1; }

}  // namespace

DecisionTree hazard_free_from_boolean(const DecisionTree& t, const BooleanFunction& f) {
  if (!computes(t, f, ComputeMode::boolean()))
    throw std::invalid_argument("input tree does not compute the function");
  PathAssignment path(static_cast<std::size_t>(path_slots(t)), -1);
  Node root = convert_hazard_free(t.root(), path);
  return DecisionTree(Arity::ternary, std::move(root));
}

namespace {

// Per node of the Boolean tree, the ternary trees for budgets 0..k.
// Level 0 attaches a u-leaf at every query; level j+1 reuses the child
// levels j for the u-subtree and j+1 for the stable children.
std::vector<Node> build_levels(const Node& node, int k, PathAssignment& path) {
  if (node.is_leaf()) return std::vector<Node>(static_cast<std::size_t>(k) + 1, node);
  std::vector<Node> left = build_levels(node.kids[0], k, path);
  std::vector<Node> right = build_levels(node.kids[1], k, path);
  std::vector<Node> out;
  out.reserve(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    Node cu = j == 0 ? Node::leaf(tu)
                     : product_u_subtree(left[static_cast<std::size_t>(j - 1)],
                                         right[static_cast<std::size_t>(j - 1)], path);
    std::vector<Node> kids;
    kids.push_back(left[static_cast<std::size_t>(j)]);
    kids.push_back(std::move(cu));
    kids.push_back(right[static_cast<std::size_t>(j)]);
    out.push_back(Node::internal(node.var, std::move(kids)));
  }
  return out;
}

}  // namespace

DecisionTree k_hazard_free_from_boolean(const DecisionTree& t, const BooleanFunction& f,
                                        int k) {
  if (k < 0) throw std::out_of_range("k must be nonnegative");
  if (!computes(t, f, ComputeMode::boolean()))
    throw std::invalid_argument("input tree does not compute the function");
  PathAssignment path(static_cast<std::size_t>(path_slots(t)), -1);
  std::vector<Node> levels = build_levels(t.root(), k, path);
  return DecisionTree(Arity::ternary, std::move(levels[static_cast<std::size_t>(k)]));
}

namespace {

// Data-bit scan expecting every remaining answer to equal `expect`.
Node mux_scan_chain(const std::vector<int>& data_vars, std::size_t from, Ternary expect) {
  if (from == data_vars.size()) return Node::leaf(expect);
  Node rest = mux_scan_chain(data_vars, from + 1, expect);
  std::vector<Node> kids(3, Node::leaf(tu));
  kids[static_cast<std::size_t>(digit(expect))] = std::move(rest);
  return Node::internal(data_vars[from], std::move(kids));
}

Node mux_ternary_data(const std::vector<int>& data_vars) {
  std::vector<Node> kids;
  kids.push_back(mux_scan_chain(data_vars, 1, t0));
  kids.push_back(Node::leaf(tu));
  kids.push_back(mux_scan_chain(data_vars, 1, t1));
  return Node::internal(data_vars[0], std::move(kids));
}

Node mux_ternary_selectors(int n, int level, TernaryWord& alpha) {
  if (level == n) {
    std::vector<int> data_vars;
    for (const TernaryWord& r : resolutions(alpha))
      data_vars.push_back(n + static_cast<int>(stable_index(r)));
    return mux_ternary_data(data_vars);
  }
  std::vector<Node> kids;
  kids.reserve(3);
  for (int d = 0; d < 3; ++d) {
    alpha.set(level, ternary_of_digit(d));
    kids.push_back(mux_ternary_selectors(n, level + 1, alpha));
  }
  return Node::internal(level, std::move(kids));
}

Node mux_boolean_selectors(int n, int level, std::uint64_t sel) {
  if (level == n) {
    int data_var = n + static_cast<int>(sel);
    std::vector<Node> kids;
    kids.push_back(Node::leaf(t0));
    kids.push_back(Node::leaf(t1));
    return Node::internal(data_var, std::move(kids));
  }
  std::vector<Node> kids;
  kids.push_back(mux_boolean_selectors(n, level + 1, sel << 1));
  kids.push_back(mux_boolean_selectors(n, level + 1, (sel << 1) | 1));
  return Node::internal(level, std::move(kids));
}

}  // namespace

MuxTrees mux_trees(int n) {
  if (n < 1 || n > 4) throw std::out_of_range("mux parameter must be 1..4");
  TernaryWord alpha(static_cast<std::size_t>(n), t0);
  return MuxTrees{
      DecisionTree(Arity::binary, mux_boolean_selectors(n, 0, 0)),
      DecisionTree(Arity::ternary, mux_ternary_selectors(n, 0, alpha)),
  };
}

namespace {

// Leaf relabelings used by the smalldepth construction.
using Relabel = std::array<Ternary, 3>;

constexpr Relabel kIdentity{t0, tu, t1};

constexpr Relabel compose(const Relabel& outer, const Relabel& inner) {
  return {outer[digit(inner[0])], outer[digit(inner[1])], outer[digit(inner[2])]};
}

constexpr Relabel relabel_zero_to_u(const Relabel& outer) {
  return compose(outer, Relabel{tu, tu, t1});
}

constexpr Relabel relabel_one_to_u(const Relabel& outer) {
  return compose(outer, Relabel{t0, tu, tu});
}

// vars[j] maps variable j of the m-level subproblem to a variable of the
// full function: m selector bits then y-variables in length-then-lex
// order.
struct SmalldepthVars {
  int m;
  std::vector<int> vars;

  int selector(int j) const { return vars[static_cast<std::size_t>(j)]; }
  int y(int length, std::uint32_t value) const {
    return vars[static_cast<std::size_t>(smalldepth_y_var(m, length, value))];
  }

  // Drop s_0 and keep the y-variables whose index starts with `bit`
  // (dropping that first index bit).
  SmalldepthVars child(int bit) const {
    SmalldepthVars out;
    out.m = m - 1;
    out.vars.resize(static_cast<std::size_t>(out.m + (1 << (out.m + 1)) - 1));
    for (int j = 0; j < out.m; ++j)
      out.vars[static_cast<std::size_t>(j)] = selector(j + 1);
    for (int len = 0; len <= out.m; ++len)
      for (std::uint32_t v = 0; v < (std::uint32_t{1} << len); ++v)
        out.vars[static_cast<std::size_t>(smalldepth_y_var(out.m, len, v))] =
            y(len + 1, (static_cast<std::uint32_t>(bit) << len) | v);
    return out;
  }
};

Node smalldepth_node(const SmalldepthVars& vars, const Relabel& rl) {
  auto leaf = [&](Ternary v) { return Node::leaf(rl[digit(v)]); };
  if (vars.m == 0) {
    // f_0 is the single variable y_().
    return Node::internal(vars.y(0, 0), {leaf(t0), leaf(tu), leaf(t1)});
  }
  SmalldepthVars a = vars.child(0);
  SmalldepthVars b = vars.child(1);
  const int y_root = vars.y(0, 0);

  Node row0 = Node::internal(
      y_root, {smalldepth_node(a, rl), smalldepth_node(a, relabel_zero_to_u(rl)), leaf(t1)});
  Node rowu = Node::internal(
      y_root, {smalldepth_node(a, relabel_one_to_u(rl)), leaf(tu),
               smalldepth_node(b, relabel_zero_to_u(rl))});
  Node row1 = Node::internal(
      y_root, {leaf(t0), smalldepth_node(b, relabel_one_to_u(rl)), smalldepth_node(b, rl)});

  std::vector<Node> kids;
  kids.push_back(std::move(row0));
  kids.push_back(std::move(rowu));
  kids.push_back(std::move(row1));
  return Node::internal(vars.selector(0), std::move(kids));
}

}  // namespace

DecisionTree smalldepth_tree(int n) {
  if (n < 1 || n > 3) throw std::out_of_range("smalldepth parameter must be 1..3");
  SmalldepthVars vars;
  vars.m = n;
  const int total = family_variable_count(FamilySpec{Family::Smalldepth, n});
  vars.vars.resize(static_cast<std::size_t>(total));
  for (int j = 0; j < total; ++j) vars.vars[static_cast<std::size_t>(j)] = j;
  return DecisionTree(Arity::ternary, smalldepth_node(vars, kIdentity));
}

}  // namespace hazdt
