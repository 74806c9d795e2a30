#pragma once

#include <string>
#include <vector>

#include "hazdt/boolean_function.hpp"
#include "hazdt/ternary_function.hpp"

namespace hazdt {

enum class ImplicantKind { implicant, implicate };

// Prime implicants or implicates of a Boolean function as ternary words:
// the word's resolutions are exactly the inputs forced to 1 (implicant)
// or 0 (implicate); u marks an absent variable. Words are sorted by
// table index.
struct ImplicantSet {
  ImplicantKind kind;
  std::vector<TernaryWord> words;
};

bool is_implicant(const TernaryWord& w, const BooleanFunction& f);
bool is_implicate(const TernaryWord& w, const BooleanFunction& f);

ImplicantSet prime_implicants(const BooleanFunction& f);
ImplicantSet prime_implicates(const BooleanFunction& f);

// k1/k2: maximum literal count over prime implicants/implicates.
// m/M: their cardinalities. Constant functions keep one empty term or
// clause on the matching side (k = 0) and an empty other side.
struct ExtremalSizes {
  int k1 = 0;
  int k2 = 0;
  int m = 0;
  int M = 0;
};

ExtremalSizes extremal_sizes(const BooleanFunction& f);

// Renders a word as a term ("x0·~x2") or clause ("x0+~x2"); the empty
// term renders as "1", the empty clause as "0".
std::string literal_notation(const TernaryWord& w, ImplicantKind kind);

}  // namespace hazdt
