#include "hazdt/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace hazdt {

namespace {

using Node = DecisionTree::Node;
using Arity = DecisionTree::Arity;

int child_count(Arity a) { return a == Arity::binary ? 2 : 3; }

void validate_node(const Node& node, Arity arity, std::vector<bool>& on_path) {
  if (node.is_leaf()) {
    if (arity == Arity::binary && !is_stable(node.label))
      throw std::invalid_argument("binary tree leaf must be stable");
    return;
  }
  if (node.var < 0 || node.var > 1000000)
    throw std::invalid_argument("bad query variable");
  if (node.kids.size() != static_cast<std::size_t>(child_count(arity)))
    throw std::invalid_argument("internal node child count does not match arity");
  if (static_cast<std::size_t>(node.var) >= on_path.size())
    on_path.resize(static_cast<std::size_t>(node.var) + 1, false);
  if (on_path[static_cast<std::size_t>(node.var)])
    throw std::invalid_argument("repeated query on a path");
  on_path[static_cast<std::size_t>(node.var)] = true;
  for (const Node& kid : node.kids) validate_node(kid, arity, on_path);
  on_path[static_cast<std::size_t>(node.var)] = false;
}

int count_leaves(const Node& node) {
  if (node.is_leaf()) return 1;
  int total = 0;
  for (const Node& kid : node.kids) total += count_leaves(kid);
  return total;
}

int max_depth(const Node& node) {
  if (node.is_leaf()) return 0;
  int best = 0;
  for (const Node& kid : node.kids) best = std::max(best, max_depth(kid));
  return 1 + best;
}

int max_var_of(const Node& node) {
  if (node.is_leaf()) return -1;
  int best = node.var;
  for (const Node& kid : node.kids) best = std::max(best, max_var_of(kid));
  return best;
}

void format_node(const Node& node, Arity arity, std::string& out) {
  if (node.is_leaf()) {
    out.push_back(to_char(node.label));
    return;
  }
  out.push_back('(');
  out.push_back('x');
  out += std::to_string(node.var);
  for (const Node& kid : node.kids) {
    out.push_back(' ');
    format_node(kid, arity, out);
  }
  out.push_back(')');
}

struct SexprParser {
  std::string_view text;
  std::size_t pos = 0;

  char peek() {
    if (pos >= text.size()) throw std::invalid_argument("unexpected end of tree text");
    return text[pos];
  }
  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\n' ||
                                 text[pos] == '\t' || text[pos] == '\r'))
      ++pos;
  }
  void expect(char c) {
    if (peek() != c)
      throw std::invalid_argument(std::string("expected '") + c + "' in tree text");
    ++pos;
  }

  Node parse_node(Arity arity) {
    skip_ws();
    char c = peek();
    if (c == '0' || c == 'u' || c == '1') {
      ++pos;
      return Node::leaf(ternary_from_char(c));
    }
    expect('(');
    expect('x');
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw std::invalid_argument("expected variable index");
    int var = std::stoi(std::string(text.substr(start, pos - start)));
    std::vector<Node> kids;
    for (int i = 0; i < child_count(arity); ++i) kids.push_back(parse_node(arity));
    skip_ws();
    expect(')');
    return Node::internal(var, std::move(kids));
  }
};

}  // namespace

DecisionTree::DecisionTree(Arity arity, Node root) : arity_(arity), root_(std::move(root)) {
  std::vector<bool> on_path;
  validate_node(root_, arity_, on_path);
}

int DecisionTree::size() const { return count_leaves(root_); }

int DecisionTree::depth() const { return max_depth(root_); }

int DecisionTree::max_var() const { return max_var_of(root_); }

Ternary DecisionTree::evaluate(const TernaryWord& x) const {
  const Node* node = &root_;
  while (!node->is_leaf()) {
    if (node->var >= x.size()) throw std::out_of_range("word shorter than queried index");
    Ternary v = x[node->var];
    if (arity_ == Arity::binary) {
      if (!is_stable(v))
        throw std::invalid_argument("binary tree queried an unstable digit");
      node = &node->kids[v == t1 ? 1 : 0];
    } else {
      node = &node->kids[static_cast<std::size_t>(digit(v))];
    }
  }
  return node->label;
}

std::string DecisionTree::to_sexpr() const {
  std::string out;
  format_node(root_, arity_, out);
  return out;
}

DecisionTree DecisionTree::parse_sexpr(std::string_view text, Arity arity) {
  SexprParser parser{text};
  Node root = parser.parse_node(arity);
  parser.skip_ws();
  if (parser.pos != text.size())
    throw std::invalid_argument("trailing characters after tree text");
  return DecisionTree(arity, std::move(root));
}

namespace {

void check_vars(const DecisionTree& t, int n) {
  if (t.max_var() >= n)
    throw std::invalid_argument("tree queries a variable outside the function");
}

// Enumerates words of length n with at most max_u unstable digits.
template <typename Fn>
bool scan_limited(int n, int max_u, Fn&& fn) {
  std::vector<Ternary> digits(static_cast<std::size_t>(n), t0);
  bool ok = true;
  auto rec = [&](auto&& self, int pos, int used_u) -> void {
    if (!ok) return;
    if (pos == n) {
      if (!fn(TernaryWord(digits))) ok = false;
      return;
    }
    for (int d = 0; d < 3; ++d) {
      Ternary v = ternary_of_digit(d);
      if (v == tu && used_u == max_u) continue;
      digits[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, used_u + (v == tu ? 1 : 0));
    }
    digits[static_cast<std::size_t>(pos)] = t0;
  };
  rec(rec, 0, 0);
  return ok;
}

}  // namespace

bool computes(const DecisionTree& t, const TernaryFunction& target, ComputeMode mode) {
  const int n = target.arity();
  check_vars(t, n);
  switch (mode.kind) {
    case ComputeMode::Kind::boolean:
      throw std::invalid_argument("boolean mode needs a BooleanFunction target");
    case ComputeMode::Kind::hazard_free: {
      if (t.arity() != DecisionTree::Arity::ternary) return false;
      bool ok = true;
      for_each_word(n, [&](const TernaryWord& w, std::uint64_t) {
        if (ok && t.evaluate(w) != target.value(w)) ok = false;
      });
      return ok;
    }
    case ComputeMode::Kind::k_bit: {
      if (t.arity() != DecisionTree::Arity::ternary) return false;
      if (mode.k < 0 || mode.k > n) throw std::out_of_range("k out of range");
      return scan_limited(n, mode.k, [&](const TernaryWord& w) {
        return t.evaluate(w) == target.value(w);
      });
    }
  }
  return false;
}

bool computes(const DecisionTree& t, const BooleanFunction& f, ComputeMode mode) {
  if (mode.kind == ComputeMode::Kind::boolean) {
    check_vars(t, f.n);
    if (t.arity() != DecisionTree::Arity::binary) return false;
    bool ok = true;
    const std::uint64_t total = f.input_count();
    for (std::uint64_t idx = 0; idx < total && ok; ++idx) {
      std::vector<Ternary> d(static_cast<std::size_t>(f.n));
      for (int i = 0; i < f.n; ++i)
        d[static_cast<std::size_t>(i)] = stable_of((idx >> (f.n - 1 - i)) & 1);
      if (t.evaluate(TernaryWord(std::move(d))) != stable_of(f.value_index(idx))) ok = false;
    }
    return ok;
  }
  TernaryFunction ext = f.n <= kDefaultTableLimit ? hazard_free_extension(f)
                                                  : lazy_hazard_free_extension(f);
  return computes(t, ext, mode);
}

namespace {

// Only 0/1 edges are followed, so every leaf seen here is reachable by
// some stable input and must carry a stable label.
Node strip_node(const Node& node) {
  if (node.is_leaf()) {
    if (!is_stable(node.label))
      throw std::invalid_argument("u-labeled leaf reachable without a u-edge");
    return node;
  }
  return Node::internal(node.var, {strip_node(node.kids[0]), strip_node(node.kids[2])});
}

}  // namespace

DecisionTree strip_u_subtrees(const DecisionTree& t) {
  if (t.arity() != DecisionTree::Arity::ternary)
    throw std::invalid_argument("strip_u_subtrees takes a ternary tree");
  return DecisionTree(DecisionTree::Arity::binary, strip_node(t.root()));
}

namespace {

int count_within_budget(const Node& node, int left) {
  if (node.is_leaf()) return 1;
  int total = count_within_budget(node.kids[0], left) +
              count_within_budget(node.kids[2], left);
  if (left > 0) total += count_within_budget(node.kids[1], left - 1);
  return total;
}

}  // namespace

int size_within_budget(const DecisionTree& t, int k) {
  if (t.arity() != DecisionTree::Arity::ternary)
    throw std::invalid_argument("size_within_budget takes a ternary tree");
  if (k < 0) throw std::out_of_range("budget must be nonnegative");
  return count_within_budget(t.root(), k);
}

}  // namespace hazdt
