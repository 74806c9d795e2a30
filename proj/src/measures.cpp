#include "hazdt/measures.hpp"

#include <algorithm>
#include <stdexcept>

namespace hazdt {

namespace {

void require_table(const TernaryFunction& g, const char* what) {
  if (!g.has_table()) throw std::invalid_argument(std::string(what) + " needs an explicit table");
}

void require_subset_limit(const TernaryFunction& g, const char* what) {
  if (g.arity() > kMaxSubsetSearchVars)
    throw std::invalid_argument(std::string(what) + " over the exact search limit");
}

// Max of fn(x) over inputs with g(x) = b; 0 when there are none.
template <typename Fn>
int max_over_value(const TernaryFunction& g, Ternary b, Fn&& fn) {
  require_table(g, "per-value measure");
  int best = 0;
  for_each_word(g.arity(), [&](const TernaryWord& w, std::uint64_t idx) {
    if (g.value_index(idx) != b) return;
    best = std::max(best, fn(w));
  });
  return best;
}

template <typename Fn>
int max_over_all(const TernaryFunction& g, Fn&& fn) {
  require_table(g, "measure");
  int best = 0;
  for_each_word(g.arity(), [&](const TernaryWord& w, std::uint64_t) {
    best = std::max(best, fn(w));
  });
  return best;
}

// All minimal output-changing blocks at x, as position bitmasks.
std::vector<std::uint32_t> minimal_sensitive_blocks(const TernaryFunction& g,
                                                    const TernaryWord& x) {
  const int n = x.size();
  const Ternary fx = g.value(x);
  std::vector<std::uint32_t> sensitive;
  for (std::uint32_t block = 1; block < (std::uint32_t{1} << n); ++block) {
    std::vector<int> pos;
    for (int i = 0; i < n; ++i)
      if ((block >> i) & 1) pos.push_back(i);
    bool hit = false;
    // every position in the block takes one of its two alternative digits
    const std::uint64_t choices = std::uint64_t{1} << pos.size();
    for (std::uint64_t c = 0; c < choices && !hit; ++c) {
      TernaryWord y = x;
      for (std::size_t j = 0; j < pos.size(); ++j) {
        int alt = 0;
        for (int d = 0; d < 3; ++d) {
          if (ternary_of_digit(d) == x[pos[j]]) continue;
          if (alt == static_cast<int>((c >> j) & 1)) {
            y.set(pos[j], ternary_of_digit(d));
            break;
          }
          ++alt;
        }
      }
      if (g.value(y) != fx) hit = true;
    }
    if (hit) sensitive.push_back(block);
  }
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t b : sensitive) {
    bool has_subset = false;
    for (std::uint32_t other : sensitive) {
      if (other != b && (other & b) == other) {
        has_subset = true;
        break;
      }
    }
    if (!has_subset) minimal.push_back(b);
  }
  return minimal;
}

// Exact maximum disjoint packing by branch and bound.
void pack(const std::vector<std::uint32_t>& blocks, std::size_t from, std::uint32_t used,
          int count, int& best) {
  best = std::max(best, count);
  if (count + static_cast<int>(blocks.size() - from) <= best) return;
  for (std::size_t i = from; i < blocks.size(); ++i) {
    if (blocks[i] & used) continue;
    pack(blocks, i + 1, used | blocks[i], count + 1, best);
  }
}

int max_disjoint_packing(const std::vector<std::uint32_t>& blocks) {
  int best = 0;
  pack(blocks, 0, 0, 0, best);
  return best;
}

}  // namespace

int sensitivity_u(const TernaryFunction& g, const TernaryWord& x) {
  if (x.size() != g.arity()) throw std::invalid_argument("word length mismatch");
  const Ternary fx = g.value(x);
  int count = 0;
  for (int i = 0; i < x.size(); ++i) {
    for (int d = 0; d < 3; ++d) {
      Ternary v = ternary_of_digit(d);
      if (v == x[i]) continue;
      if (g.value(x.with(i, v)) != fx) {
        ++count;
        break;
      }
    }
  }
  return count;
}

int s_u(const TernaryFunction& g) {
  return max_over_all(g, [&](const TernaryWord& w) { return sensitivity_u(g, w); });
}

int s_u_at(const TernaryFunction& g, Ternary b) {
  return max_over_value(g, b, [&](const TernaryWord& w) { return sensitivity_u(g, w); });
}

int block_sensitivity_u(const TernaryFunction& g, const TernaryWord& x) {
  require_subset_limit(g, "block_sensitivity_u");
  return max_disjoint_packing(minimal_sensitive_blocks(g, x));
}

int bs_u(const TernaryFunction& g) {
  require_subset_limit(g, "bs_u");
  return max_over_all(g, [&](const TernaryWord& w) { return block_sensitivity_u(g, w); });
}

int bs_u_at(const TernaryFunction& g, Ternary b) {
  require_subset_limit(g, "bs_u");
  return max_over_value(g, b, [&](const TernaryWord& w) { return block_sensitivity_u(g, w); });
}

namespace {

// Does fixing x on the positions of `mask` pin the output?
bool is_certificate(const TernaryFunction& g, const TernaryWord& x, std::uint32_t mask) {
  const int n = x.size();
  const Ternary fx = g.value(x);
  std::vector<int> free_pos;
  for (int i = 0; i < n; ++i)
    if (((mask >> i) & 1) == 0) free_pos.push_back(i);
  TernaryWord y = x;
  bool ok = true;
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (!ok) return;
    if (j == free_pos.size()) {
      if (g.value(y) != fx) ok = false;
      return;
    }
    for (int d = 0; d < 3; ++d) {
      y.set(free_pos[j], ternary_of_digit(d));
      self(self, j + 1);
    }
    y.set(free_pos[j], x[free_pos[j]]);
  };
  rec(rec, 0);
  return ok;
}

}  // namespace

int certificate_complexity_u(const TernaryFunction& g, const TernaryWord& x) {
  require_subset_limit(g, "certificate_complexity_u");
  const int n = x.size();
  for (int size = 0; size <= n; ++size) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      if (is_certificate(g, x, mask)) return size;
    }
  }
  return n;
}

int cc_u(const TernaryFunction& g) {
  require_subset_limit(g, "cc_u");
  return max_over_all(g, [&](const TernaryWord& w) { return certificate_complexity_u(g, w); });
}

int cc_u_at(const TernaryFunction& g, Ternary b) {
  require_subset_limit(g, "cc_u");
  return max_over_value(g, b,
                        [&](const TernaryWord& w) { return certificate_complexity_u(g, w); });
}

namespace {

int boolean_sensitivity_at(const BooleanFunction& f, std::uint64_t idx) {
  int count = 0;
  for (int i = 0; i < f.n; ++i) {
    std::uint64_t bit = std::uint64_t{1} << (f.n - 1 - i);
    if (f.value_index(idx) != f.value_index(idx ^ bit)) ++count;
  }
  return count;
}

int boolean_bs_at(const BooleanFunction& f, std::uint64_t idx) {
  const int n = f.n;
  std::vector<std::uint32_t> sensitive;
  for (std::uint32_t block = 1; block < (std::uint32_t{1} << n); ++block) {
    std::uint64_t flip = 0;
    for (int i = 0; i < n; ++i)
      if ((block >> i) & 1) flip |= std::uint64_t{1} << (n - 1 - i);
    if (f.value_index(idx) != f.value_index(idx ^ flip)) sensitive.push_back(block);
  }
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t b : sensitive) {
    bool has_subset = false;
    for (std::uint32_t other : sensitive)
      if (other != b && (other & b) == other) {
        has_subset = true;
        break;
      }
    if (!has_subset) minimal.push_back(b);
  }
  return max_disjoint_packing(minimal);
}

int boolean_cc_at(const BooleanFunction& f, std::uint64_t idx) {
  const int n = f.n;
  for (int size = 0; size <= n; ++size) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      std::uint64_t fixed = 0;
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) fixed |= std::uint64_t{1} << (n - 1 - i);
      bool pinned = true;
      for (std::uint64_t y = 0; y < f.input_count() && pinned; ++y) {
        if ((y & fixed) != (idx & fixed)) continue;
        if (f.value_index(y) != f.value_index(idx)) pinned = false;
      }
      if (pinned) return size;
    }
  }
  return n;
}

}  // namespace

BooleanMeasures boolean_measures(const BooleanFunction& f) {
  if (f.n > kMaxSubsetSearchVars)
    throw std::invalid_argument("boolean_measures over the exact search limit");
  BooleanMeasures out;
  for (std::uint64_t idx = 0; idx < f.input_count(); ++idx) {
    out.s = std::max(out.s, boolean_sensitivity_at(f, idx));
    out.bs = std::max(out.bs, boolean_bs_at(f, idx));
    out.cc = std::max(out.cc, boolean_cc_at(f, idx));
  }
  return out;
}

int stable_sensitivity(const TernaryFunction& g, const TernaryWord& x) {
  if (x.size() != g.arity()) throw std::invalid_argument("word length mismatch");
  if (!is_stable(g.value(x)))
    throw std::invalid_argument("stable_sensitivity needs a stable-output input");
  int count = 0;
  for (int i = 0; i < x.size(); ++i)
    if (!is_stable(g.value(x.with(i, tu)))) ++count;
  return count;
}

int stabs(const TernaryFunction& g) {
  require_table(g, "stabs");
  int best = 0;
  for_each_word(g.arity(), [&](const TernaryWord& w, std::uint64_t idx) {
    if (!is_stable(g.value_index(idx))) return;
    best = std::max(best, stable_sensitivity(g, w));
  });
  return best;
}

int stabs_at(const TernaryFunction& g, Ternary b) {
  if (!is_stable(b)) throw std::invalid_argument("stabs is defined for stable outputs");
  return max_over_value(g, b, [&](const TernaryWord& w) { return stable_sensitivity(g, w); });
}

int stability_sensitivity(const TernaryFunction& g, const TernaryWord& x) {
  if (x.size() != g.arity()) throw std::invalid_argument("word length mismatch");
  const bool fx_stable = is_stable(g.value(x));
  int count = 0;
  for (int i = 0; i < x.size(); ++i) {
    bool hit = false;
    if (x[i] == tu) {
      hit = is_stable(g.value(x.with(i, t0))) != fx_stable ||
            is_stable(g.value(x.with(i, t1))) != fx_stable;
    } else {
      hit = is_stable(g.value(x.with(i, tu))) != fx_stable;
    }
    if (hit) ++count;
  }
  return count;
}

int slys(const TernaryFunction& g) {
  return max_over_all(g, [&](const TernaryWord& w) { return stability_sensitivity(g, w); });
}

int slys_at(const TernaryFunction& g, Ternary b) {
  return max_over_value(g, b,
                        [&](const TernaryWord& w) { return stability_sensitivity(g, w); });
}

Ternary plurality(const std::vector<Ternary>& values) {
  if (values.empty()) throw std::invalid_argument("plurality of an empty multiset");
  int counts[3] = {0, 0, 0};
  for (Ternary v : values) ++counts[digit(v)];
  int best = 0;
  for (int d = 1; d < 3; ++d)
    if (counts[d] > counts[best]) best = d;
  for (int d = 0; d < 3; ++d)
    if (d != best && counts[d] == counts[best])
      throw std::runtime_error("plurality tie");
  return ternary_of_digit(best);
}

BallOracle BallOracle::probe(const TernaryFunction& g, const TernaryWord& center,
                             int radius) {
  if (center.size() != g.arity()) throw std::invalid_argument("word length mismatch");
  if (radius < 0) throw std::out_of_range("radius out of range");
  radius = std::min(radius, center.size());  // a radius past n is the whole space
  BallOracle oracle{center, radius, {}};
  for (const TernaryWord& w : ball(center, radius))
    oracle.known.emplace(w.index(), g.value(w));
  return oracle;
}

TernaryFunction reconstruct_from_ball(const BallOracle& oracle, int s) {
  const int n = oracle.center.size();
  const int needed = std::min(4 * s, n);
  if (oracle.radius < needed) throw std::invalid_argument("ball radius too small");
  std::vector<Ternary> table(pow3(n), tu);
  for (const auto& [idx, v] : oracle.known) table[idx] = v;

  for (int r = oracle.radius; r < n; ++r) {
    for (const TernaryWord& y : sphere(oracle.center, r + 1)) {
      std::vector<Ternary> votes;
      for (int i = 0; i < n; ++i) {
        if (y[i] == oracle.center[i]) continue;
        votes.push_back(table[y.with(i, oracle.center[i]).index()]);
      }
      table[y.index()] = plurality(votes);
    }
  }
  return TernaryFunction::from_table(n, std::move(table));
}

}  // namespace hazdt
