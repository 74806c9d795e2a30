#pragma once

#include <unordered_map>
#include <vector>

#include "hazdt/boolean_function.hpp"
#include "hazdt/ternary_function.hpp"

namespace hazdt {

// Exponential block/subset searches stay exact up to this many variables.
inline constexpr int kMaxSubsetSearchVars = 6;

// Position i is sensitive at x when either alternative digit at i changes
// the output. s_u is the maximum over all inputs; the _at variants
// restrict to inputs with the given output value (0 when none exist).
int sensitivity_u(const TernaryFunction& g, const TernaryWord& x);
int s_u(const TernaryFunction& g);
int s_u_at(const TernaryFunction& g, Ternary b);

// Maximum number of pairwise-disjoint blocks, each flippable (every
// position in the block changed, any alternative digits) to change the
// output. Exact packing over minimal sensitive blocks.
int block_sensitivity_u(const TernaryFunction& g, const TernaryWord& x);
int bs_u(const TernaryFunction& g);
int bs_u_at(const TernaryFunction& g, Ternary b);

// Minimum number of positions whose values pin the output: every y
// agreeing with x there satisfies g(y) = g(x).
int certificate_complexity_u(const TernaryFunction& g, const TernaryWord& x);
int cc_u(const TernaryFunction& g);
int cc_u_at(const TernaryFunction& g, Ternary b);

// Classical Boolean measures (stable inputs, bit/bit-block flips).
struct BooleanMeasures {
  int s = 0;
  int bs = 0;
  int cc = 0;
};
BooleanMeasures boolean_measures(const BooleanFunction& f);

// stabs: positions whose digit set to u makes a stable output unstable.
// Rejects inputs with unstable output.
int stable_sensitivity(const TernaryFunction& g, const TernaryWord& x);
int stabs(const TernaryFunction& g);
int stabs_at(const TernaryFunction& g, Ternary b);

// slys: positions where a stability swap (stable digit -> u, or u ->
// either stable digit) flips output stability in either direction.
int stability_sensitivity(const TernaryFunction& g, const TernaryWord& x);
int slys(const TernaryFunction& g);
int slys_at(const TernaryFunction& g, Ternary b);

// The strictly most frequent value; a tie signals ambiguity.
Ternary plurality(const std::vector<Ternary>& values);

// Known values of a function on a Hamming ball.
struct BallOracle {
  TernaryWord center;
  int radius = 0;
  std::unordered_map<std::uint64_t, Ternary> known;  // word index -> value

  static BallOracle probe(const TernaryFunction& g, const TernaryWord& center,
                          int radius);
};

// Extends the oracle sphere by sphere: each word one step further out
// gets the plurality of its inward neighbors (the words restoring one
// differing digit to the center's digit). Requires radius >= min(4s, n);
// a plurality tie means the sensitivity bound was violated.
TernaryFunction reconstruct_from_ball(const BallOracle& oracle, int s);

}  // namespace hazdt
