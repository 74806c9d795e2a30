#pragma once

#include <cstdint>
#include <vector>

#include "hazdt/ternary.hpp"

namespace hazdt {

// Truth table over 2^n stable inputs. The bit at index sum x_i * 2^(n-1-i)
// holds f(x); position 0 is most significant, matching the ternary word
// index convention.
struct BooleanFunction {
  int n = 0;
  std::vector<std::uint8_t> table;  // one byte per input, values 0/1

  BooleanFunction() = default;
  BooleanFunction(int n_, std::vector<std::uint8_t> table_);

  static BooleanFunction from_uint(int n, std::uint64_t bits);  // bit i = table index i

  std::uint64_t input_count() const { return std::uint64_t{1} << n; }
  bool value_index(std::uint64_t idx) const { return table[idx] != 0; }
  bool value(const TernaryWord& x) const;  // x must be fully stable

  std::uint64_t as_uint() const;  // n <= 6 only

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;
};

// Table index of a fully-stable word.
std::uint64_t stable_index(const TernaryWord& x);

bool depends_on(const BooleanFunction& f, int i);
bool is_nondegenerate(const BooleanFunction& f);

}  // namespace hazdt
