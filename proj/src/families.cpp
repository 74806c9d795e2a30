#include "hazdt/families.hpp"

#include <stdexcept>

namespace hazdt {

FamilySpec FamilySpec::parse(std::string_view name, int n) {
  Family f;
  if (name == "mux")
    f = Family::Mux;
  else if (name == "and")
    f = Family::And;
  else if (name == "or")
    f = Family::Or;
  else if (name == "parity")
    f = Family::Parity;
  else if (name == "maj")
    f = Family::Maj;
  else if (name == "smalldepth")
    f = Family::Smalldepth;
  else
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
  FamilySpec spec{f, n};
  family_variable_count(spec);  // validates the range
  return spec;
}

std::string FamilySpec::name() const {
  switch (family) {
    case Family::Mux: return "mux";
    case Family::And: return "and";
    case Family::Or: return "or";
    case Family::Parity: return "parity";
    case Family::Maj: return "maj";
    case Family::Smalldepth: return "smalldepth";
  }
  return "?";
}

int family_variable_count(const FamilySpec& spec) {
  const int n = spec.n;
  switch (spec.family) {
    case Family::Mux:
      if (n < 1 || n > 4) throw std::out_of_range("mux parameter must be 1..4");
      return n + (1 << n);
    case Family::Smalldepth:
      if (n < 1 || n > 3) throw std::out_of_range("smalldepth parameter must be 1..3");
      return n + (1 << (n + 1)) - 1;
    case Family::And:
    case Family::Or:
    case Family::Parity:
    case Family::Maj:
      if (n < 1 || n > 16) throw std::out_of_range("family parameter must be 1..16");
      return n;
  }
  throw std::invalid_argument("unknown family");
}

int smalldepth_y_var(int n, int length, std::uint32_t value) {
  if (length < 0 || length > n) throw std::out_of_range("y index length out of range");
  if (value >= (std::uint32_t{1} << length)) throw std::out_of_range("y index value out of range");
  // y-variables come after the n selector bits; strings of length L start
  // at offset 2^L - 1 within the block and are ordered by value.
  return n + (1 << length) - 1 + static_cast<int>(value);
}

namespace {

// g_v(y) = z_0 op_0 (z_1 op_1 (... op_{n-1} z_n)...) with z_j the
// y-variable indexed by the length-j prefix of v, and op_j Boolean OR
// when v_j = 0, AND otherwise. Bits of v are read most significant first.
bool smalldepth_selected_value(int n, std::uint32_t v, std::uint64_t input,
                               int vars) {
  auto y_bit = [&](int length, std::uint32_t prefix) -> bool {
    int var = smalldepth_y_var(n, length, prefix);
    return (input >> (vars - 1 - var)) & 1;
  };
  std::uint32_t full_prefix = v;
  bool acc = y_bit(n, full_prefix);  // z_n
  for (int j = n - 1; j >= 0; --j) {
    std::uint32_t prefix = v >> (n - j);  // first j bits of v
    bool z = y_bit(j, prefix);
    bool op_is_or = ((v >> (n - 1 - j)) & 1) == 0;
    acc = op_is_or ? (z || acc) : (z && acc);
  }
  return acc;
}

bool family_value(const FamilySpec& spec, std::uint64_t input, int vars) {
  const int n = spec.n;
  switch (spec.family) {
    case Family::And: {
      return input == (std::uint64_t{1} << n) - 1;
    }
    case Family::Or: {
      return input != 0;
    }
    case Family::Parity: {
      // 1 on even weight, so the all-zero input is a 1-input
      return (__builtin_popcountll(input) & 1) == 0;
    }
    case Family::Maj: {
      return 2 * __builtin_popcountll(input) > n;
    }
    case Family::Mux: {
      std::uint64_t sel = input >> (1 << n);  // top n bits are selectors
      int data_var = n + static_cast<int>(sel);
      return (input >> (vars - 1 - data_var)) & 1;
    }
    case Family::Smalldepth: {
      std::uint64_t sel = input >> (vars - n);
      return smalldepth_selected_value(n, static_cast<std::uint32_t>(sel), input, vars);
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace

BooleanFunction make_family(const FamilySpec& spec) {
  const int vars = family_variable_count(spec);
  std::vector<std::uint8_t> table(std::size_t{1} << vars);
  for (std::uint64_t idx = 0; idx < table.size(); ++idx)
    table[idx] = family_value(spec, idx, vars);
  return BooleanFunction(vars, std::move(table));
}

TernaryFunction make_family_extension(const FamilySpec& spec, int table_limit) {
  const int vars = family_variable_count(spec);
  if (vars <= table_limit) return hazard_free_extension(make_family(spec), table_limit);
  return lazy_hazard_free_extension(
      vars, [spec, vars](std::uint64_t idx) { return family_value(spec, idx, vars); });
}

}  // namespace hazdt
