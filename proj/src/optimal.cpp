#include "hazdt/optimal.hpp"

#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "hazdt/ternary_function.hpp"

namespace hazdt {

namespace {

using Node = DecisionTree::Node;

enum class Objective { depth, size };

// Partial assignment entries: 0 = unset, otherwise digit + 1.
constexpr int kUnset = 0;

struct Entry {
  int value;
  int best_var;  // -1 when the state is constant (leaf)
};

// Search over {0,u,1}-branching trees against the hazard-free extension,
// with an optional u-budget (budget == n never binds and yields the plain
// hazard-free optimum).
class TernarySearch {
 public:
  TernarySearch(const BooleanFunction& f, Objective obj)
      : n_(f.n), obj_(obj), ext_(hazard_free_extension(f, kMaxTernarySearchVars)) {
    place_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) place_[static_cast<std::size_t>(i)] = pow3(n_ - 1 - i);
    assign_.assign(static_cast<std::size_t>(n_), kUnset);
  }

  OptimalResult run(int budget) {
    int value = solve(budget);
    Node witness = rebuild(budget);
    return {value, DecisionTree(DecisionTree::Arity::ternary, std::move(witness))};
  }

 private:
  std::uint64_t key(int budget) const {
    std::uint64_t k = 0;
    for (int i = n_ - 1; i >= 0; --i)
      k = (k << 2) | static_cast<std::uint64_t>(assign_[static_cast<std::size_t>(i)]);
    return (k << 5) | static_cast<std::uint64_t>(budget);
  }

  // Index of the word with unset positions set to u.
  std::uint64_t bottom_index() const {
    std::uint64_t idx = 0;
    for (int i = 0; i < n_; ++i) {
      int e = assign_[static_cast<std::size_t>(i)];
      idx += place_[static_cast<std::size_t>(i)] *
             static_cast<std::uint64_t>(e == kUnset ? 1 : e - 1);
    }
    return idx;
  }

  // Value forced over the allowed completions (at most `budget` u's among
  // unset positions), or nullopt when the extension is not constant
  // there. With budget >= m monotonicity shrinks the test: a stable value
  // at the all-u bottom word forces every completion, and a constant u
  // needs only the fully-stable completions checked (every completion
  // lies below one of them).
  std::optional<Ternary> constant_value(int budget) {
    std::vector<int> unset;
    for (int i = 0; i < n_; ++i)
      if (assign_[static_cast<std::size_t>(i)] == kUnset) unset.push_back(i);
    const int m = static_cast<int>(unset.size());
    if (m == 0) return ext_.value_index(bottom_index());
    if (budget >= m) {
      Ternary v = ext_.value_index(bottom_index());
      if (is_stable(v)) return v;
      if (all_stable_completions_are_u(unset)) return tu;
      return std::nullopt;
    }
    std::optional<Ternary> common;
    bool unanimous = true;
    std::uint64_t base = bottom_index();
    for (int i : unset) base -= place_[static_cast<std::size_t>(i)];  // unset -> digit 0
    enumerate_budgeted(unset, 0, budget, base, common, unanimous);
    if (!unanimous || !common) return std::nullopt;
    return common;
  }

  bool all_stable_completions_are_u(const std::vector<int>& unset) {
    const int m = static_cast<int>(unset.size());
    std::uint64_t base = bottom_index();
    for (int i : unset) base -= place_[static_cast<std::size_t>(i)];  // unset -> digit 0
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << m); ++k) {
      std::uint64_t idx = base;
      for (int j = 0; j < m; ++j)
        if ((k >> j) & 1) idx += 2 * place_[static_cast<std::size_t>(unset[static_cast<std::size_t>(j)])];
      if (is_stable(ext_.value_index(idx))) return false;
    }
    return true;
  }

  // Walks completions that place at most `left` u's among unset[from..).
  void enumerate_budgeted(const std::vector<int>& unset, std::size_t from, int left,
                          std::uint64_t idx, std::optional<Ternary>& common,
                          bool& unanimous) {
    if (!unanimous) return;
    if (from == unset.size()) {
      Ternary v = ext_.value_index(idx);
      if (!common)
        common = v;
      else if (*common != v)
        unanimous = false;
      return;
    }
    std::uint64_t p = place_[static_cast<std::size_t>(unset[from])];
    enumerate_budgeted(unset, from + 1, left, idx, common, unanimous);          // 0
    enumerate_budgeted(unset, from + 1, left, idx + 2 * p, common, unanimous);  // 1
    if (left > 0)
      enumerate_budgeted(unset, from + 1, left - 1, idx + p, common, unanimous);  // u
  }

  int solve(int budget) {
    std::uint64_t k = key(budget);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second.value;
    std::optional<Ternary> constant = constant_value(budget);
    if (constant) {
      memo_.emplace(k, Entry{obj_ == Objective::depth ? 0 : 1, -1});
      return memo_.at(k).value;
    }
    int best = -1, best_var = -1;
    for (int i = 0; i < n_; ++i) {
      if (assign_[static_cast<std::size_t>(i)] != kUnset) continue;
      int c0 = child(i, t0, budget);
      int c1 = child(i, t1, budget);
      int cu = budget > 0 ? child(i, tu, budget - 1)
                          : (obj_ == Objective::depth ? 0 : 1);
      int cand = obj_ == Objective::depth ? 1 + std::max(std::max(c0, c1), cu)
                                          : c0 + c1 + cu;
      if (best < 0 || cand < best) {
        best = cand;
        best_var = i;
      }
    }
    memo_.emplace(k, Entry{best, best_var});
    return best;
  }

  int child(int i, Ternary v, int budget) {
    assign_[static_cast<std::size_t>(i)] = digit(v) + 1;
    int result = solve(budget);
    assign_[static_cast<std::size_t>(i)] = kUnset;
    return result;
  }

  Node rebuild(int budget) {
    std::optional<Ternary> constant = constant_value(budget);
    if (constant) return Node::leaf(*constant);
    const Entry& e = memo_.at(key(budget));
    const int i = e.best_var;
    std::vector<Node> kids(3, Node::leaf(tu));
    assign_[static_cast<std::size_t>(i)] = digit(t0) + 1;
    kids[0] = rebuild(budget);
    if (budget > 0) {
      assign_[static_cast<std::size_t>(i)] = digit(tu) + 1;
      kids[1] = rebuild(budget - 1);
    }
    assign_[static_cast<std::size_t>(i)] = digit(t1) + 1;
    kids[2] = rebuild(budget);
    assign_[static_cast<std::size_t>(i)] = kUnset;
    return Node::internal(i, std::move(kids));
  }

  int n_;
  Objective obj_;
  TernaryFunction ext_;
  std::vector<std::uint64_t> place_;
  std::vector<int> assign_;
  std::unordered_map<std::uint64_t, Entry> memo_;
};

// Search over {0,1}-branching trees against f itself.
class BooleanSearch {
 public:
  BooleanSearch(const BooleanFunction& f, Objective obj) : f_(f), n_(f.n), obj_(obj) {
    assign_.assign(static_cast<std::size_t>(n_), kUnset);
  }

  OptimalResult run() {
    int value = solve();
    Node witness = rebuild();
    return {value, DecisionTree(DecisionTree::Arity::binary, std::move(witness))};
  }

 private:
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (int i = n_ - 1; i >= 0; --i)
      k = (k << 2) | static_cast<std::uint64_t>(assign_[static_cast<std::size_t>(i)]);
    return k;
  }

  std::optional<Ternary> constant_value() {
    std::vector<int> unset;
    std::uint64_t base = 0;
    for (int i = 0; i < n_; ++i) {
      int e = assign_[static_cast<std::size_t>(i)];
      if (e == kUnset)
        unset.push_back(i);
      else if (e - 1 == digit(t1))
        base |= std::uint64_t{1} << (n_ - 1 - i);
    }
    const std::size_t m = unset.size();
    bool first = true;
    bool common = false;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << m); ++k) {
      std::uint64_t idx = base;
      for (std::size_t j = 0; j < m; ++j)
        if ((k >> j) & 1) idx |= std::uint64_t{1} << (n_ - 1 - unset[j]);
      bool v = f_.value_index(idx);
      if (first) {
        common = v;
        first = false;
      } else if (v != common) {
        return std::nullopt;
      }
    }
    return stable_of(common);
  }

  int solve() {
    std::uint64_t k = key();
    if (auto it = memo_.find(k); it != memo_.end()) return it->second.value;
    std::optional<Ternary> constant = constant_value();
    if (constant) {
      memo_.emplace(k, Entry{obj_ == Objective::depth ? 0 : 1, -1});
      return memo_.at(k).value;
    }
    int best = -1, best_var = -1;
    for (int i = 0; i < n_; ++i) {
      if (assign_[static_cast<std::size_t>(i)] != kUnset) continue;
      int c0 = child(i, t0);
      int c1 = child(i, t1);
      int cand = obj_ == Objective::depth ? 1 + std::max(c0, c1) : c0 + c1;
      if (best < 0 || cand < best) {
        best = cand;
        best_var = i;
      }
    }
    memo_.emplace(k, Entry{best, best_var});
    return best;
  }

  int child(int i, Ternary v) {
    assign_[static_cast<std::size_t>(i)] = digit(v) + 1;
    int result = solve();
    assign_[static_cast<std::size_t>(i)] = kUnset;
    return result;
  }

  Node rebuild() {
    std::optional<Ternary> constant = constant_value();
    if (constant) return Node::leaf(*constant);
    const Entry& e = memo_.at(key());
    const int i = e.best_var;
    assign_[static_cast<std::size_t>(i)] = digit(t0) + 1;
    Node k0 = rebuild();
    assign_[static_cast<std::size_t>(i)] = digit(t1) + 1;
    Node k1 = rebuild();
    assign_[static_cast<std::size_t>(i)] = kUnset;
    std::vector<Node> kids;
    kids.push_back(std::move(k0));
    kids.push_back(std::move(k1));
    return Node::internal(i, std::move(kids));
  }

  const BooleanFunction& f_;
  int n_;
  Objective obj_;
  std::vector<int> assign_;
  std::unordered_map<std::uint64_t, Entry> memo_;
};

void check_boolean_limit(const BooleanFunction& f) {
  if (f.n > kMaxBooleanSearchVars)
    throw std::invalid_argument("variable count over Boolean search limit");
}

void check_ternary_limit(const BooleanFunction& f) {
  if (f.n > kMaxTernarySearchVars)
    throw std::invalid_argument("variable count over ternary search limit");
}

}  // namespace

OptimalResult optimal_depth(const BooleanFunction& f) {
  check_boolean_limit(f);
  return BooleanSearch(f, Objective::depth).run();
}

OptimalResult optimal_size(const BooleanFunction& f) {
  check_boolean_limit(f);
  return BooleanSearch(f, Objective::size).run();
}

OptimalResult optimal_depth_u(const BooleanFunction& f) {
  check_ternary_limit(f);
  return TernarySearch(f, Objective::depth).run(f.n);
}

OptimalResult optimal_size_u(const BooleanFunction& f) {
  check_ternary_limit(f);
  return TernarySearch(f, Objective::size).run(f.n);
}

OptimalResult optimal_depth_k(const BooleanFunction& f, int k) {
  check_ternary_limit(f);
  if (k < 0 || k > f.n) throw std::out_of_range("k out of range");
  return TernarySearch(f, Objective::depth).run(k);
}

OptimalResult optimal_size_k(const BooleanFunction& f, int k) {
  check_ternary_limit(f);
  if (k < 0 || k > f.n) throw std::out_of_range("k out of range");
  return TernarySearch(f, Objective::size).run(k);
}

}  // namespace hazdt
