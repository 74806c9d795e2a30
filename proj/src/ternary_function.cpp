#include "hazdt/ternary_function.hpp"

#include <stdexcept>

namespace hazdt {

TernaryFunction TernaryFunction::from_table(int n, std::vector<Ternary> table,
                                            bool known_extension) {
  if (n < 0) throw std::invalid_argument("bad arity");
  if (table.size() != pow3(n))
    throw std::invalid_argument("value table length must be 3^n");
  TernaryFunction g;
  g.n_ = n;
  g.has_table_ = true;
  g.known_extension_ = known_extension;
  g.table_ = std::move(table);
  return g;
}

TernaryFunction TernaryFunction::from_evaluator(int n, Evaluator eval,
                                                bool known_extension) {
  if (n < 0) throw std::invalid_argument("bad arity");
  if (!eval) throw std::invalid_argument("null evaluator");
  TernaryFunction g;
  g.n_ = n;
  g.known_extension_ = known_extension;
  g.eval_ = std::move(eval);
  return g;
}

Ternary TernaryFunction::value(const TernaryWord& x) const {
  if (x.size() != n_) throw std::invalid_argument("word length mismatch");
  if (has_table_) return table_[x.index()];
  return eval_(x);
}

Ternary TernaryFunction::value_index(std::uint64_t idx) const {
  if (!has_table_) throw std::logic_error("function has no explicit table");
  return table_[idx];
}

const std::vector<Ternary>& TernaryFunction::table() const {
  if (!has_table_) throw std::logic_error("function has no explicit table");
  return table_;
}

TernaryFunction hazard_free_extension(const BooleanFunction& f, int table_limit) {
  if (f.n > table_limit) throw std::invalid_argument("arity over table limit");
  const int n = f.n;
  const std::uint64_t total = pow3(n);
  std::vector<Ternary> table(total);
  std::vector<std::uint8_t> ucount(total);
  std::vector<std::uint64_t> place(n);  // place[i] = 3^(n-1-i)
  for (int i = 0; i < n; ++i) place[i] = pow3(n - 1 - i);

  std::vector<std::vector<std::uint64_t>> buckets(static_cast<std::size_t>(n) + 1);
  for_each_word(n, [&](const TernaryWord& w, std::uint64_t idx) {
    int c = w.count_unstable();
    ucount[idx] = static_cast<std::uint8_t>(c);
    if (c == 0)
      table[idx] = stable_of(f.value(w));
    else
      buckets[static_cast<std::size_t>(c)].push_back(idx);
  });

  // f~(y) = merge(f~(y[i->0]), f~(y[i->1])) over any unstable position i;
  // words with fewer u's are already resolved.
  for (int c = 1; c <= n; ++c) {
    for (std::uint64_t idx : buckets[static_cast<std::size_t>(c)]) {
      std::uint64_t rest = idx;
      int i = 0;
      for (; i < n; ++i) {
        if (rest / place[i] % 3 == 1) break;
      }
      table[idx] = merge(table[idx - place[i]], table[idx + place[i]]);
    }
  }
  return TernaryFunction::from_table(n, std::move(table), /*known_extension=*/true);
}

TernaryFunction lazy_hazard_free_extension(
    int n, std::function<bool(std::uint64_t)> stable_eval) {
  auto eval = [n, fe = std::move(stable_eval)](const TernaryWord& x) -> Ternary {
    std::vector<int> upos;
    std::uint64_t base = 0;
    for (int i = 0; i < n; ++i) {
      if (x[i] == tu)
        upos.push_back(i);
      else
        base |= static_cast<std::uint64_t>(x[i] == t1) << (n - 1 - i);
    }
    const int m = static_cast<int>(upos.size());
    Ternary acc = tu;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << m); ++k) {
      std::uint64_t idx = base;
      for (int j = 0; j < m; ++j)
        if ((k >> j) & 1) idx |= std::uint64_t{1} << (n - 1 - upos[static_cast<std::size_t>(j)]);
      Ternary v = stable_of(fe(idx));
      if (k == 0)
        acc = v;
      else if (v != acc)
        return tu;
    }
    return acc;
  };
  return TernaryFunction::from_evaluator(n, std::move(eval), /*known_extension=*/true);
}

TernaryFunction lazy_hazard_free_extension(const BooleanFunction& f) {
  return lazy_hazard_free_extension(
      f.n, [f](std::uint64_t idx) { return f.value_index(idx); });
}

bool is_natural(const TernaryFunction& g) {
  if (!g.has_table()) throw std::invalid_argument("is_natural needs an explicit table");
  const int n = g.arity();
  bool ok = true;
  for_each_word(n, [&](const TernaryWord& w, std::uint64_t idx) {
    if (!ok) return;
    Ternary v = g.value_index(idx);
    if (w.all_stable()) {
      if (!is_stable(v)) ok = false;
      return;
    }
    // Monotonicity over covering pairs generates the full order.
    for (int i = 0; i < n && ok; ++i) {
      if (w[i] != tu) continue;
      std::uint64_t p = pow3(n - 1 - i);
      if (!value_leq(v, g.value_index(idx - p))) ok = false;
      if (!value_leq(v, g.value_index(idx + p))) ok = false;
    }
  });
  return ok;
}

bool is_weakly_hazard_free(const TernaryFunction& g) {
  if (!g.has_table())
    throw std::invalid_argument("is_weakly_hazard_free needs an explicit table");
  const int n = g.arity();
  const auto& table = g.table();

  // monotone wrt the instability order
  bool ok = true;
  for_each_word(n, [&](const TernaryWord& w, std::uint64_t idx) {
    if (!ok) return;
    for (int i = 0; i < n && ok; ++i) {
      if (w[i] != tu) continue;
      std::uint64_t p = pow3(n - 1 - i);
      if (!value_leq(table[idx], table[idx - p])) ok = false;
      if (!value_leq(table[idx], table[idx + p])) ok = false;
    }
  });
  if (!ok) return false;

  // agreement with any unanimous value strictly above
  for_each_word(n, [&](const TernaryWord& w, std::uint64_t idx) {
    if (!ok) return;
    std::vector<int> upos;
    for (int i = 0; i < n; ++i)
      if (w[i] == tu) upos.push_back(i);
    const int m = static_cast<int>(upos.size());
    if (m == 0) return;  // nothing strictly above
    bool first = true, unanimous = true;
    Ternary common = tu;
    const std::uint64_t strictly_above = pow3(m) - 1;
    for (std::uint64_t k = 1; k <= strictly_above && unanimous; ++k) {
      std::uint64_t y = idx;
      std::uint64_t kk = k;
      for (int j = m - 1; j >= 0; --j) {
        int d = static_cast<int>(kk % 3);
        kk /= 3;
        // d=0 keeps u, d=1 sets 0, d=2 sets 1
        std::uint64_t p = pow3(n - 1 - upos[static_cast<std::size_t>(j)]);
        if (d == 1) y -= p;
        if (d == 2) y += p;
      }
      Ternary v = table[y];
      if (first) {
        common = v;
        first = false;
      } else if (v != common) {
        unanimous = false;
      }
    }
    if (unanimous && table[idx] != common) ok = false;
  });
  return ok;
}

TernaryFunction restrict_input(const TernaryFunction& g, int i, Ternary a) {
  const int n = g.arity();
  if (i < 0 || i >= n) throw std::out_of_range("position out of range");
  const bool extension = g.known_extension() && is_stable(a);
  if (g.has_table()) {
    std::vector<Ternary> table(pow3(n - 1));
    for_each_word(n - 1, [&](const TernaryWord& w, std::uint64_t idx) {
      std::vector<Ternary> full(w.digits());
      full.insert(full.begin() + i, a);
      table[idx] = g.value(TernaryWord(std::move(full)));
    });
    return TernaryFunction::from_table(n - 1, std::move(table), extension);
  }
  return TernaryFunction::from_evaluator(
      n - 1,
      [g, i, a](const TernaryWord& w) {
        std::vector<Ternary> full(w.digits());
        full.insert(full.begin() + i, a);
        return g.value(TernaryWord(std::move(full)));
      },
      extension);
}

BooleanFunction stable_part(const TernaryFunction& g) {
  const int n = g.arity();
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < total; ++b) {
    std::vector<Ternary> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      d[static_cast<std::size_t>(i)] = stable_of((b >> (n - 1 - i)) & 1);
    Ternary v = g.value(TernaryWord(std::move(d)));
    if (!is_stable(v)) throw std::invalid_argument("function is unstable on a stable input");
    table[b] = v == t1;
  }
  return BooleanFunction(n, std::move(table));
}

}  // namespace hazdt
