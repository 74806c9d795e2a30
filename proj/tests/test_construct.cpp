#include <doctest.h>

#include <stdexcept>

#include <random>

#include "hazdt/construct.hpp"
#include "hazdt/families.hpp"
#include "hazdt/optimal.hpp"
#include "oracles.hpp"

using namespace hazdt;

namespace {

using Node = DecisionTree::Node;

DecisionTree and_chain(int n) {
  Node node = Node::leaf(t1);
  for (int i = n - 1; i >= 0; --i)
    node = Node::internal(i, {Node::leaf(t0), std::move(node)});
  return DecisionTree(DecisionTree::Arity::binary, std::move(node));
}

// size(T') + 1 <= (size(T'_0) + 1)(size(T'_1) + 1) at every internal node
void check_node_size_inequality(const Node& node) {
  if (node.is_leaf()) return;
  long long total = oracles::recount_node_leaves(node);
  long long s0 = oracles::recount_node_leaves(node.kids[0]);
  long long s1 = oracles::recount_node_leaves(node.kids[2]);
  CHECK(total + 1 <= (s0 + 1) * (s1 + 1));
  for (const Node& kid : node.kids) check_node_size_inequality(kid);
}

}  // namespace

TEST_CASE("product construction on AND chains") {
  for (int n = 1; n <= 4; ++n) {
    BooleanFunction f = make_family(FamilySpec{Family::And, n});
    DecisionTree converted = hazard_free_from_boolean(and_chain(n), f);
    CHECK(converted.size() == (1 << (n + 1)) - 1);
    CHECK(computes(converted, f, ComputeMode::hazard_free()));
  }
}

TEST_CASE("product construction base cases and validation") {
  BooleanFunction ones = BooleanFunction::from_uint(1, 0b11);
  DecisionTree leaf(DecisionTree::Arity::binary, Node::leaf(t1));
  DecisionTree converted = hazard_free_from_boolean(leaf, ones);
  CHECK(converted.size() == 1);
  CHECK(converted.root().is_leaf());

  BooleanFunction mux1 = make_family(FamilySpec{Family::Mux, 1});
  DecisionTree fig_a =
      DecisionTree::parse_sexpr("(x0 (x1 0 1) (x2 0 1))", DecisionTree::Arity::binary);
  DecisionTree hf = hazard_free_from_boolean(fig_a, mux1);
  CHECK(computes(hf, mux1, ComputeMode::hazard_free()));
  CHECK(hf.size() <= (1 << 4) - 1);
  check_node_size_inequality(hf.root());

  // rejects trees that do not compute the function
  BooleanFunction and3 = make_family(FamilySpec{Family::And, 3});
  CHECK_THROWS_AS(hazard_free_from_boolean(fig_a, and3), std::invalid_argument);
}

TEST_CASE("product construction validates for every n <= 3 function") {
  for (std::uint64_t bits = 0; bits < 256; ++bits) {
    BooleanFunction f = BooleanFunction::from_uint(3, bits);
    DecisionTree tree = optimal_size(f).witness;
    DecisionTree converted = hazard_free_from_boolean(tree, f);
    CHECK(computes(converted, f, ComputeMode::hazard_free()));
    CHECK(converted.size() <= (1LL << tree.size()) - 1);
    check_node_size_inequality(converted.root());

    // stripping the u-subtrees of any validating tree recovers f
    DecisionTree stripped = strip_u_subtrees(converted);
    CHECK(computes(stripped, f, ComputeMode::boolean()));
    CHECK(converted.size() >= 2 * stripped.size() - 1);
  }
}

TEST_CASE("budgeted construction") {
  BooleanFunction mux2 = make_family(FamilySpec{Family::Mux, 2});
  DecisionTree boolean_tree = mux_trees(2).boolean_tree;

  DecisionTree lifted = k_hazard_free_from_boolean(boolean_tree, mux2, 0);
  CHECK(computes(lifted, mux2, ComputeMode::k_bit(0)));
  CHECK(lifted.depth() == boolean_tree.depth());

  DecisionTree t1b = k_hazard_free_from_boolean(boolean_tree, mux2, 1);
  CHECK(computes(t1b, mux2, ComputeMode::k_bit(1)));
  CHECK(t1b.depth() <= 2 * boolean_tree.depth());

  BooleanFunction and2 = make_family(FamilySpec{Family::And, 2});
  DecisionTree t2 = k_hazard_free_from_boolean(and_chain(2), and2, 2);
  CHECK(computes(t2, and2, ComputeMode::k_bit(2)));
  long long bound = 1;
  for (int i = 0; i < 7; ++i) bound *= and_chain(2).size();
  CHECK(size_within_budget(t2, 2) <= bound);

  // budget-reachable leaves of the lifted base are the Boolean leaves
  CHECK(size_within_budget(lifted, 0) == boolean_tree.size());
}

TEST_CASE("budgeted construction at k >= n computes the full extension") {
  for (std::uint64_t bits : {0b0110ULL, 0b1000ULL, 0b1110ULL}) {
    BooleanFunction f = BooleanFunction::from_uint(2, bits);
    DecisionTree tree = optimal_size(f).witness;
    DecisionTree full = k_hazard_free_from_boolean(tree, f, 2);
    CHECK(computes(full, f, ComputeMode::hazard_free()));
  }
}

TEST_CASE("mux trees") {
  MuxTrees t1t = mux_trees(1);
  CHECK(t1t.boolean_tree.size() == 4);
  CHECK(t1t.boolean_tree.depth() == 2);
  CHECK(t1t.ternary_tree.size() == 13);
  CHECK(t1t.ternary_tree.depth() == 3);

  BooleanFunction mux1 = make_family(FamilySpec{Family::Mux, 1});
  CHECK(computes(t1t.boolean_tree, mux1, ComputeMode::boolean()));
  CHECK(computes(t1t.ternary_tree, mux1, ComputeMode::hazard_free()));

  MuxTrees t2t = mux_trees(2);
  CHECK(t2t.ternary_tree.size() == 55);
  CHECK(t2t.ternary_tree.depth() == 6);
  CHECK(t2t.boolean_tree.size() == 8);
  CHECK(t2t.boolean_tree.depth() == 3);
  BooleanFunction mux2 = make_family(FamilySpec{Family::Mux, 2});
  CHECK(computes(t2t.ternary_tree, mux2, ComputeMode::hazard_free()));

  CHECK_THROWS_AS(mux_trees(5), std::out_of_range);
}

TEST_CASE("constructed mux trees are depth-optimal for n <= 2") {
  for (int n = 1; n <= 2; ++n) {
    BooleanFunction f = make_family(FamilySpec{Family::Mux, n});
    CHECK(mux_trees(n).ternary_tree.depth() == optimal_depth_u(f).value);
  }
}

TEST_CASE("smalldepth trees") {
  DecisionTree d1 = smalldepth_tree(1);
  CHECK(d1.depth() == 3);
  BooleanFunction f1 = make_family(FamilySpec{Family::Smalldepth, 1});
  CHECK(computes(d1, f1, ComputeMode::hazard_free()));
  CHECK(optimal_depth_u(f1).value == 3);  // the construction is depth-optimal here

  DecisionTree d2 = smalldepth_tree(2);
  CHECK(d2.depth() == 5);
  BooleanFunction f2 = make_family(FamilySpec{Family::Smalldepth, 2});
  CHECK(computes(d2, f2, ComputeMode::hazard_free()));

  CHECK_THROWS_AS(smalldepth_tree(4), std::out_of_range);
}

TEST_CASE("smalldepth leaf for doubly unstable prefix") {
  DecisionTree d2 = smalldepth_tree(2);
  // s_0 = u and y_() = u forces the answer u regardless of the rest
  TernaryWord w(9, t1);
  w.set(0, tu);
  w.set(2, tu);  // y_() sits after the two selector bits
  CHECK(d2.evaluate(w) == tu);
}

TEST_CASE("smalldepth tree for n = 3 spot checks") {
  DecisionTree d3 = smalldepth_tree(3);
  CHECK(d3.depth() == 7);
  TernaryFunction lazy = make_family_extension(FamilySpec{Family::Smalldepth, 3});

  std::mt19937_64 gen(11);
  for (int round = 0; round < 300; ++round) {
    std::vector<Ternary> digits(18);
    for (auto& d : digits) d = ternary_of_digit(static_cast<int>(gen() % 3));
    TernaryWord w(std::move(digits));
    CHECK(d3.evaluate(w) == lazy.value(w));
  }
}
