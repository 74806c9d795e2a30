#include "hazdt/boolean_function.hpp"

#include <stdexcept>

namespace hazdt {

BooleanFunction::BooleanFunction(int n_, std::vector<std::uint8_t> table_)
    : n(n_), table(std::move(table_)) {
  if (n < 0 || n > 30) throw std::invalid_argument("bad input count");
  if (table.size() != (std::size_t{1} << n))
    throw std::invalid_argument("truth table length must be 2^n");
  for (auto& b : table) b = b ? 1 : 0;
}

BooleanFunction BooleanFunction::from_uint(int n, std::uint64_t bits) {
  if (n < 0 || n > 6) throw std::invalid_argument("from_uint supports n <= 6");
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = (bits >> i) & 1;
  return BooleanFunction(n, std::move(t));
}

bool BooleanFunction::value(const TernaryWord& x) const {
  if (x.size() != n) throw std::invalid_argument("word length mismatch");
  return value_index(stable_index(x));
}

std::uint64_t BooleanFunction::as_uint() const {
  if (n > 6) throw std::invalid_argument("as_uint supports n <= 6");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i]) bits |= std::uint64_t{1} << i;
  return bits;
}

std::uint64_t stable_index(const TernaryWord& x) {
  std::uint64_t idx = 0;
  for (int i = 0; i < x.size(); ++i) {
    if (!is_stable(x[i])) throw std::invalid_argument("word has unstable digits");
    idx = (idx << 1) | (x[i] == t1 ? 1 : 0);
  }
  return idx;
}

bool depends_on(const BooleanFunction& f, int i) {
  if (i < 0 || i >= f.n) throw std::out_of_range("position out of range");
  const std::uint64_t bit = std::uint64_t{1} << (f.n - 1 - i);
  for (std::uint64_t idx = 0; idx < f.input_count(); ++idx) {
    if (idx & bit) continue;
    if (f.value_index(idx) != f.value_index(idx | bit)) return true;
  }
  return false;
}

bool is_nondegenerate(const BooleanFunction& f) {
  for (int i = 0; i < f.n; ++i)
    if (!depends_on(f, i)) return false;
  return true;
}

}  // namespace hazdt
