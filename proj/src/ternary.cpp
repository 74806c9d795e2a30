#include "hazdt/ternary.hpp"

#include <algorithm>
#include <stdexcept>

namespace hazdt {

Ternary kleene_gate(Gate g, std::span<const Ternary> args) {
  switch (g) {
    case Gate::NOT:
      if (args.size() != 1) throw std::invalid_argument("NOT takes one argument");
      return kleene_not(args[0]);
    case Gate::AND:
      if (args.size() != 2) throw std::invalid_argument("AND takes two arguments");
      return kleene_and(args[0], args[1]);
    case Gate::OR:
      if (args.size() != 2) throw std::invalid_argument("OR takes two arguments");
      return kleene_or(args[0], args[1]);
  }
  throw std::invalid_argument("unknown gate");
}

char to_char(Ternary v) {
  switch (v) {
    case t0: return '0';
    case tu: return 'u';
    case t1: return '1';
  }
  return '?';
}

Ternary ternary_from_char(char c) {
  switch (c) {
    case '0': return t0;
    case 'u': return tu;
    case '1': return t1;
    default: throw std::invalid_argument(std::string("bad ternary digit '") + c + "'");
  }
}

std::uint64_t pow3(int n) {
  std::uint64_t p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

TernaryWord TernaryWord::parse(std::string_view text) {
  std::vector<Ternary> d;
  d.reserve(text.size());
  for (char c : text) d.push_back(ternary_from_char(c));
  return TernaryWord(std::move(d));
}

TernaryWord TernaryWord::from_index(int n, std::uint64_t index) {
  std::vector<Ternary> d(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    d[static_cast<std::size_t>(i)] = ternary_of_digit(static_cast<int>(index % 3));
    index /= 3;
  }
  if (index != 0) throw std::out_of_range("word index out of range");
  return TernaryWord(std::move(d));
}

TernaryWord TernaryWord::with(int i, Ternary v) const {
  TernaryWord copy = *this;
  copy.set(i, v);
  return copy;
}

std::uint64_t TernaryWord::index() const {
  std::uint64_t idx = 0;
  for (Ternary v : digits_) idx = idx * 3 + static_cast<std::uint64_t>(digit(v));
  return idx;
}

int TernaryWord::count_unstable() const {
  return static_cast<int>(std::count(digits_.begin(), digits_.end(), tu));
}

bool TernaryWord::all_stable() const { return count_unstable() == 0; }

std::string TernaryWord::str() const {
  std::string s;
  s.reserve(digits_.size());
  for (Ternary v : digits_) s.push_back(to_char(v));
  return s;
}

namespace {

void require_same_length(const TernaryWord& x, const TernaryWord& y) {
  if (x.size() != y.size()) throw std::invalid_argument("word length mismatch");
}

}  // namespace

bool leq(const TernaryWord& x, const TernaryWord& y) {
  require_same_length(x, y);
  for (int i = 0; i < x.size(); ++i)
    if (!value_leq(x[i], y[i])) return false;
  return true;
}

std::vector<TernaryWord> resolutions(const TernaryWord& x) {
  std::vector<int> upos;
  for (int i = 0; i < x.size(); ++i)
    if (x[i] == tu) upos.push_back(i);
  const int m = static_cast<int>(upos.size());
  std::vector<TernaryWord> out;
  out.reserve(std::size_t{1} << m);
  // Assigning 0 before 1 at the most significant free position keeps the
  // enumeration in ascending table-index order.
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << m); ++k) {
    TernaryWord r = x;
    for (int j = 0; j < m; ++j) {
      bool bit = (k >> (m - 1 - j)) & 1;
      r.set(upos[static_cast<std::size_t>(j)], stable_of(bit));
    }
    out.push_back(std::move(r));
  }
  return out;
}

int hamming_distance(const TernaryWord& x, const TernaryWord& y) {
  require_same_length(x, y);
  int d = 0;
  for (int i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) ++d;
  return d;
}

namespace {

void sphere_rec(const TernaryWord& center, int from, int left, TernaryWord& cur,
                std::vector<TernaryWord>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = from; i <= center.size() - left; ++i) {
    for (int d = 0; d < 3; ++d) {
      Ternary v = ternary_of_digit(d);
      if (v == center[i]) continue;
      cur.set(i, v);
      sphere_rec(center, i + 1, left - 1, cur, out);
      cur.set(i, center[i]);
    }
  }
}

}  // namespace

std::vector<TernaryWord> sphere(const TernaryWord& center, int r) {
  if (r < 0 || r > center.size()) throw std::out_of_range("radius out of range");
  std::vector<TernaryWord> out;
  TernaryWord cur = center;
  sphere_rec(center, 0, r, cur, out);
  std::sort(out.begin(), out.end(), [](const TernaryWord& a, const TernaryWord& b) {
    return a.index() < b.index();
  });
  return out;
}

std::vector<TernaryWord> ball(const TernaryWord& center, int r) {
  if (r < 0 || r > center.size()) throw std::out_of_range("radius out of range");
  std::vector<TernaryWord> out;
  for (int k = 0; k <= r; ++k) {
    auto s = sphere(center, k);
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end(), [](const TernaryWord& a, const TernaryWord& b) {
    return a.index() < b.index();
  });
  return out;
}

std::vector<TernaryWord> neighborhood(const TernaryWord& x) {
  std::vector<TernaryWord> out;
  out.reserve(2 * static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) {
    auto ni = neighborhood_at(x, i);
    out.insert(out.end(), ni.begin(), ni.end());
  }
  return out;
}

std::vector<TernaryWord> neighborhood_at(const TernaryWord& x, int i) {
  if (i < 0 || i >= x.size()) throw std::out_of_range("position out of range");
  std::vector<TernaryWord> out;
  for (int d = 0; d < 3; ++d) {
    Ternary v = ternary_of_digit(d);
    if (v != x[i]) out.push_back(x.with(i, v));
  }
  return out;
}

}  // namespace hazdt
