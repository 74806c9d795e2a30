#include <doctest.h>

#include <stdexcept>

#include <random>

#include "hazdt/families.hpp"
#include "hazdt/tree.hpp"
#include "oracles.hpp"

using namespace hazdt;

namespace {

// Figure trees for MUX_1: variables s=x0, data bits x1, x2.
const char* kMux1Boolean = "(x0 (x1 0 1) (x2 0 1))";
const char* kMux1HazardFree =
    "(x0 (x1 0 u 1) (x1 (x2 0 u u) u (x2 u u 1)) (x2 0 u 1))";

DecisionTree mux1_boolean() {
  return DecisionTree::parse_sexpr(kMux1Boolean, DecisionTree::Arity::binary);
}
DecisionTree mux1_hazard_free() {
  return DecisionTree::parse_sexpr(kMux1HazardFree, DecisionTree::Arity::ternary);
}

}  // namespace

TEST_CASE("evaluate") {
  CHECK(mux1_boolean().evaluate(TernaryWord::parse("101")) == t1);
  CHECK(mux1_hazard_free().evaluate(TernaryWord::parse("u10")) == tu);
  DecisionTree leaf(DecisionTree::Arity::ternary, DecisionTree::Node::leaf(t0));
  CHECK(leaf.evaluate(TernaryWord::parse("u1")) == t0);
  CHECK_THROWS_AS(mux1_boolean().evaluate(TernaryWord::parse("u01")),
                  std::invalid_argument);
  CHECK_THROWS_AS(mux1_boolean().evaluate(TernaryWord::parse("1")), std::out_of_range);
}

TEST_CASE("size and depth") {
  CHECK(mux1_boolean().size() == 4);
  CHECK(mux1_boolean().depth() == 2);
  CHECK(mux1_hazard_free().size() == 13);
  CHECK(mux1_hazard_free().depth() == 3);
  DecisionTree leaf(DecisionTree::Arity::binary, DecisionTree::Node::leaf(t1));
  CHECK(leaf.size() == 1);
  CHECK(leaf.depth() == 0);

  // independent recount
  auto stats = oracles::recount(mux1_hazard_free());
  CHECK(stats.leaves == 13);
  CHECK(stats.depth == 3);
}

TEST_CASE("computes") {
  BooleanFunction f = make_family(FamilySpec{Family::Mux, 1});
  CHECK(computes(mux1_boolean(), f, ComputeMode::boolean()));
  CHECK(computes(mux1_hazard_free(), f, ComputeMode::hazard_free()));

  // the lifted Boolean tree is correct on stable inputs only
  DecisionTree lifted = DecisionTree::parse_sexpr("(x0 (x1 0 u 1) u (x2 0 u 1))",
                                                  DecisionTree::Arity::ternary);
  CHECK(computes(lifted, f, ComputeMode::k_bit(0)));
  CHECK_FALSE(computes(lifted, f, ComputeMode::hazard_free()));

  // wrong function
  BooleanFunction and3 = make_family(FamilySpec{Family::And, 3});
  CHECK_FALSE(computes(mux1_boolean(), and3, ComputeMode::boolean()));
}

TEST_CASE("strip_u_subtrees") {
  BooleanFunction f = make_family(FamilySpec{Family::Mux, 1});
  DecisionTree stripped = strip_u_subtrees(mux1_hazard_free());
  CHECK(stripped.arity() == DecisionTree::Arity::binary);
  CHECK(computes(stripped, f, ComputeMode::boolean()));
  CHECK(stripped.size() <= (13 + 1) / 2);
  CHECK(2 * stripped.size() - 1 <= 13);

  DecisionTree one(DecisionTree::Arity::ternary, DecisionTree::Node::leaf(t1));
  CHECK(strip_u_subtrees(one).size() == 1);

  DecisionTree uleaf(DecisionTree::Arity::ternary, DecisionTree::Node::leaf(tu));
  CHECK_THROWS_AS(strip_u_subtrees(uleaf), std::invalid_argument);
}

TEST_CASE("stripping a validating tree yields a Boolean tree for f (n <= 2 exhaustive)") {
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    BooleanFunction f = BooleanFunction::from_uint(2, bits);
    // built tree: query both variables, label by extension
    TernaryFunction ext = hazard_free_extension(f);
    using Node = DecisionTree::Node;
    std::vector<Node> outer;
    for (int d0 = 0; d0 < 3; ++d0) {
      std::vector<Node> inner;
      for (int d1 = 0; d1 < 3; ++d1)
        inner.push_back(Node::leaf(
            ext.value(TernaryWord({ternary_of_digit(d0), ternary_of_digit(d1)}))));
      outer.push_back(Node::internal(1, std::move(inner)));
    }
    DecisionTree full(DecisionTree::Arity::ternary, Node::internal(0, std::move(outer)));
    REQUIRE(computes(full, f, ComputeMode::hazard_free()));
    CHECK(computes(strip_u_subtrees(full), f, ComputeMode::boolean()));
  }
}

TEST_CASE("sexpr format is bit-exact") {
  CHECK(mux1_hazard_free().to_sexpr() == kMux1HazardFree);
  CHECK(mux1_boolean().to_sexpr() == kMux1Boolean);
  DecisionTree leaf(DecisionTree::Arity::ternary, DecisionTree::Node::leaf(tu));
  CHECK(leaf.to_sexpr() == "u");
}

TEST_CASE("sexpr round trip on random ternary trees") {
  std::mt19937_64 gen(7);
  using Node = DecisionTree::Node;
  for (int round = 0; round < 200; ++round) {
    // random tree over 5 variables, distinct per path
    auto build = [&](auto&& self, std::uint32_t used, int depth) -> Node {
      std::vector<int> avail;
      for (int i = 0; i < 5; ++i)
        if (!((used >> i) & 1)) avail.push_back(i);
      if (avail.empty() || depth > 3 || gen() % 3 == 0)
        return Node::leaf(ternary_of_digit(static_cast<int>(gen() % 3)));
      int var = avail[gen() % avail.size()];
      std::vector<Node> kids;
      for (int d = 0; d < 3; ++d)
        kids.push_back(self(self, used | (std::uint32_t{1} << var), depth + 1));
      return Node::internal(var, std::move(kids));
    };
    DecisionTree t(DecisionTree::Arity::ternary, build(build, 0, 0));
    DecisionTree back = DecisionTree::parse_sexpr(t.to_sexpr(), DecisionTree::Arity::ternary);
    CHECK(back == t);
    CHECK(back.size() == t.size());
    CHECK(back.depth() == t.depth());
  }
}

TEST_CASE("parser rejects malformed input") {
  using A = DecisionTree::Arity;
  CHECK_THROWS_AS(DecisionTree::parse_sexpr("(x0 0 1)", A::ternary), std::invalid_argument);
  CHECK_THROWS_AS(DecisionTree::parse_sexpr("(x0 0 u 1)", A::binary), std::invalid_argument);
  CHECK_THROWS_AS(DecisionTree::parse_sexpr("(y0 0 1)", A::binary), std::invalid_argument);
  CHECK_THROWS_AS(DecisionTree::parse_sexpr("(x0 0 1) junk", A::binary),
                  std::invalid_argument);
  CHECK_THROWS_AS(DecisionTree::parse_sexpr("2", A::binary), std::invalid_argument);
  // repeated query on a path
  CHECK_THROWS_AS(DecisionTree::parse_sexpr("(x0 (x0 0 1) 1)", A::binary),
                  std::invalid_argument);
  // u leaf in a binary tree
  CHECK_THROWS_AS(DecisionTree::parse_sexpr("(x0 u 1)", A::binary), std::invalid_argument);
}
