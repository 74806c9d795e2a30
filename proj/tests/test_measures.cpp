#include <doctest.h>

#include <stdexcept>

#include <random>

#include "hazdt/families.hpp"
#include "hazdt/implicants.hpp"
#include "hazdt/measures.hpp"
#include "oracles.hpp"

using namespace hazdt;

namespace {

TernaryFunction ext_of(Family f, int n) {
  return make_family_extension(FamilySpec{f, n});
}

}  // namespace

TEST_CASE("sensitivity") {
  TernaryFunction mux2 = ext_of(Family::Mux, 2);
  CHECK(sensitivity_u(mux2, TernaryWord::parse("uu1111")) == 4);
  CHECK(s_u_at(ext_of(Family::And, 3), t1) == 3);

  TernaryFunction constant = TernaryFunction::from_table(2, std::vector<Ternary>(9, t0));
  for_each_word(2, [&](const TernaryWord& w, std::uint64_t) {
    CHECK(sensitivity_u(constant, w) == 0);
  });
  CHECK(s_u(constant) == 0);
}

TEST_CASE("block sensitivity") {
  TernaryFunction mux2 = ext_of(Family::Mux, 2);
  CHECK(bs_u(mux2) == 4);
  CHECK(bs_u_at(mux2, t1) == 4);  // all-u selectors, all-one data

  TernaryFunction parity2 = ext_of(Family::Parity, 2);
  CHECK(bs_u(parity2) == 2);

  // singleton blocks give bs >= s at every input
  TernaryFunction maj3 = ext_of(Family::Maj, 3);
  for_each_word(3, [&](const TernaryWord& w, std::uint64_t) {
    CHECK(block_sensitivity_u(maj3, w) >= sensitivity_u(maj3, w));
  });
}

TEST_CASE("block sensitivity matches the brute-force oracle (n = 2 exhaustive)") {
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    TernaryFunction ext = hazard_free_extension(BooleanFunction::from_uint(2, bits));
    for_each_word(2, [&](const TernaryWord& w, std::uint64_t) {
      CHECK(block_sensitivity_u(ext, w) == oracles::brute_block_sensitivity(ext, w));
    });
  }
}

TEST_CASE("certificate complexity") {
  TernaryFunction maj3 = ext_of(Family::Maj, 3);
  CHECK(certificate_complexity_u(maj3, TernaryWord::parse("01u")) == 3);

  TernaryFunction mux2 = ext_of(Family::Mux, 2);
  CHECK(cc_u(mux2) == 4);

  TernaryFunction constant = TernaryFunction::from_table(2, std::vector<Ternary>(9, t1));
  for_each_word(2, [&](const TernaryWord& w, std::uint64_t) {
    CHECK(certificate_complexity_u(constant, w) == 0);
  });
}

TEST_CASE("boolean measures") {
  CHECK(boolean_measures(make_family(FamilySpec{Family::And, 3})).s == 3);
  for (int n = 1; n <= 4; ++n)
    CHECK(boolean_measures(make_family(FamilySpec{Family::Parity, n})).s == n);
  BooleanMeasures mux1 = boolean_measures(make_family(FamilySpec{Family::Mux, 1}));
  CHECK(mux1.s == 2);
  CHECK(mux1.bs >= mux1.s);
  CHECK(mux1.cc >= mux1.bs);
}

TEST_CASE("stabs and slys") {
  TernaryFunction and3 = ext_of(Family::And, 3);
  CHECK(stable_sensitivity(and3, TernaryWord::parse("111")) == 3);
  CHECK_THROWS_AS(stable_sensitivity(and3, TernaryWord::parse("u11")),
                  std::invalid_argument);

  TernaryFunction constant = TernaryFunction::from_table(2, std::vector<Ternary>(9, t0));
  CHECK(stabs(constant) == 0);
  CHECK(slys(constant) == 0);

  // stabs witnesses are slys witnesses on stable-output inputs
  TernaryFunction mux1 = ext_of(Family::Mux, 1);
  for_each_word(3, [&](const TernaryWord& w, std::uint64_t) {
    if (!is_stable(mux1.value(w))) return;
    CHECK(stability_sensitivity(mux1, w) >= stable_sensitivity(mux1, w));
  });
}

TEST_CASE("plurality") {
  CHECK(plurality({t0, t0, t1}) == t0);
  CHECK(plurality({tu, tu, tu, t0, t1}) == tu);
  CHECK_THROWS_AS(plurality({t0, t1}), std::runtime_error);
  CHECK_THROWS_AS(plurality({}), std::invalid_argument);
}

TEST_CASE("ball oracle") {
  TernaryFunction mux1 = ext_of(Family::Mux, 1);
  BallOracle oracle = BallOracle::probe(mux1, TernaryWord::parse("000"), 1);
  CHECK(oracle.known.size() == 7);  // center + 2n neighbors
  CHECK(oracle.known.at(TernaryWord::parse("000").index()) == t0);
}

TEST_CASE("reconstruction identities") {
  // constant function from a radius-0 ball
  TernaryFunction constant = TernaryFunction::from_table(2, std::vector<Ternary>(9, t1));
  BallOracle tiny = BallOracle::probe(constant, TernaryWord::parse("uu"), 0);
  TernaryFunction rebuilt = reconstruct_from_ball(tiny, 0);
  CHECK(rebuilt == constant);

  // parity needs the whole space, radius n
  TernaryFunction parity2 = ext_of(Family::Parity, 2);
  CHECK(s_u(parity2) == 2);
  BallOracle full = BallOracle::probe(parity2, TernaryWord::parse("00"), 2);
  CHECK(reconstruct_from_ball(full, 2) == parity2);

  CHECK_THROWS_AS(reconstruct_from_ball(tiny, 1), std::invalid_argument);
}

TEST_CASE("reconstruction recovers random n = 3 extensions from measured-radius balls") {
  std::mt19937_64 gen(3);
  for (int round = 0; round < 40; ++round) {
    BooleanFunction f = BooleanFunction::from_uint(3, gen() & 0xFF);
    TernaryFunction ext = hazard_free_extension(f);
    int s = s_u(ext);
    int radius = std::min(4 * s, 3);
    TernaryWord center = TernaryWord::from_index(3, gen() % 27);
    BallOracle oracle = BallOracle::probe(ext, center, radius);
    CHECK(reconstruct_from_ball(oracle, s) == ext);
  }
}

TEST_CASE("fast path: per-value sensitivity and certificates equal the literal widths") {
  for (std::uint64_t bits = 0; bits < 256; bits += 5) {
    BooleanFunction f = BooleanFunction::from_uint(3, bits);
    TernaryFunction ext = hazard_free_extension(f);
    ExtremalSizes sz = extremal_sizes(f);
    CHECK(s_u_at(ext, t1) == sz.k1);
    CHECK(s_u_at(ext, t0) == sz.k2);
    CHECK(cc_u_at(ext, t1) == sz.k1);
    CHECK(cc_u_at(ext, t0) == sz.k2);
  }
}

TEST_CASE("exact search limits") {
  TernaryFunction big = TernaryFunction::from_table(7, std::vector<Ternary>(pow3(7), t0));
  CHECK_THROWS_AS(bs_u(big), std::invalid_argument);
  CHECK_THROWS_AS(cc_u(big), std::invalid_argument);
}
