#pragma once

#include <string>
#include <string_view>

#include "hazdt/boolean_function.hpp"
#include "hazdt/ternary_function.hpp"

namespace hazdt {

enum class Family { Mux, And, Or, Parity, Maj, Smalldepth };

// A named function family instance. Feasible parameter ranges:
//   mux: 1..4 (n + 2^n variables), smalldepth: 1..3 (n + 2^(n+1) - 1
//   variables), and/or/parity/maj: 1..16.
struct FamilySpec {
  Family family;
  int n;

  static FamilySpec parse(std::string_view name, int n);
  std::string name() const;
};

int family_variable_count(const FamilySpec& spec);

// Explicit truth table.
//
// Variable orders: mux takes s_0..s_{n-1} then data bits x_b in ascending
// index(b); smalldepth takes s_0..s_{n-1} then y-variables indexed by bit
// sequences of length 0..n in length-then-lexicographic order.
BooleanFunction make_family(const FamilySpec& spec);

// Hazard-free extension of the family: explicit table when 3^vars is
// tabulable, otherwise a lazy resolution-enumerating evaluator.
TernaryFunction make_family_extension(const FamilySpec& spec,
                                      int table_limit = kDefaultTableLimit);

// Variable index of y_w within the smalldepth function f_n, where w is a
// bit sequence of length 0..n given as (length, value).
int smalldepth_y_var(int n, int length, std::uint32_t value);

}  // namespace hazdt
