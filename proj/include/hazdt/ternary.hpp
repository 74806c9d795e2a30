#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hazdt {

// The three-valued Kleene domain. 0 and 1 are stable, u is unstable.
// Digit encoding d(0)=0, d(u)=1, d(1)=2 is the single table-index
// convention used everywhere in this library.
enum class Ternary : std::uint8_t { zero = 0, unstable = 1, one = 2 };

inline constexpr Ternary t0 = Ternary::zero;
inline constexpr Ternary tu = Ternary::unstable;
inline constexpr Ternary t1 = Ternary::one;

constexpr bool is_stable(Ternary v) { return v != tu; }

constexpr Ternary stable_of(bool b) { return b ? t1 : t0; }

constexpr int digit(Ternary v) { return static_cast<int>(v); }

constexpr Ternary ternary_of_digit(int d) { return static_cast<Ternary>(d); }

// Instability order: u < 0 and u < 1; 0 and 1 incomparable.
constexpr bool value_leq(Ternary a, Ternary b) { return a == tu || a == b; }

// Combine the outputs of two resolutions: stable agreement survives,
// anything else is u.
constexpr Ternary merge(Ternary a, Ternary b) { return a == b ? a : tu; }

constexpr Ternary kleene_not(Ternary a) {
  return a == tu ? tu : (a == t0 ? t1 : t0);
}
constexpr Ternary kleene_and(Ternary a, Ternary b) {
  if (a == t0 || b == t0) return t0;
  if (a == t1 && b == t1) return t1;
  return tu;
}
constexpr Ternary kleene_or(Ternary a, Ternary b) {
  if (a == t1 || b == t1) return t1;
  if (a == t0 && b == t0) return t0;
  return tu;
}

enum class Gate { AND, OR, NOT };

Ternary kleene_gate(Gate g, std::span<const Ternary> args);

char to_char(Ternary v);
Ternary ternary_from_char(char c);

std::uint64_t pow3(int n);

// Fixed-length word over {0,u,1}. Position 0 is the most significant
// digit of the canonical table index and the leftmost character of the
// text form.
class TernaryWord {
 public:
  TernaryWord() = default;
  explicit TernaryWord(std::vector<Ternary> digits) : digits_(std::move(digits)) {}
  TernaryWord(std::size_t n, Ternary fill) : digits_(n, fill) {}

  static TernaryWord parse(std::string_view text);
  static TernaryWord from_index(int n, std::uint64_t index);

  int size() const { return static_cast<int>(digits_.size()); }
  Ternary operator[](int i) const { return digits_[static_cast<std::size_t>(i)]; }
  void set(int i, Ternary v) { digits_[static_cast<std::size_t>(i)] = v; }

  // Copy with one digit replaced.
  TernaryWord with(int i, Ternary v) const;

  std::uint64_t index() const;
  int count_unstable() const;
  bool all_stable() const;

  std::string str() const;

  const std::vector<Ternary>& digits() const { return digits_; }

  friend bool operator==(const TernaryWord&, const TernaryWord&) = default;

 private:
  std::vector<Ternary> digits_;
};

// Componentwise instability order. Throws on length mismatch.
bool leq(const TernaryWord& x, const TernaryWord& y);

// All fully-stable words above x, in ascending table-index order.
std::vector<TernaryWord> resolutions(const TernaryWord& x);

// Number of positions where the digits differ (u is a digit of its own).
int hamming_distance(const TernaryWord& x, const TernaryWord& y);

// Words at distance exactly r / at most r, ascending table-index order.
std::vector<TernaryWord> sphere(const TernaryWord& center, int r);
std::vector<TernaryWord> ball(const TernaryWord& center, int r);

// N(x): words differing from x in exactly one position; N_i(x) fixes the
// position. |N(x)| = 2n, |N_i(x)| = 2.
std::vector<TernaryWord> neighborhood(const TernaryWord& x);
std::vector<TernaryWord> neighborhood_at(const TernaryWord& x, int i);

// Runs fn over all 3^n words of length n in ascending index order.
template <typename Fn>
void for_each_word(int n, Fn&& fn) {
  TernaryWord w(static_cast<std::size_t>(n), t0);
  const std::uint64_t total = pow3(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    fn(w, idx);
    // ternary odometer, least significant digit is the last position
    for (int i = n - 1; i >= 0; --i) {
      int d = digit(w[i]);
      if (d < 2) {
        w.set(i, ternary_of_digit(d + 1));
        break;
      }
      w.set(i, t0);
    }
  }
}

}  // namespace hazdt
