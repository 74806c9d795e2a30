#include "hazdt/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hazdt/construct.hpp"
#include "hazdt/families.hpp"
#include "hazdt/function_spec.hpp"
#include "hazdt/measures.hpp"
#include "hazdt/optimal.hpp"
#include "hazdt/tree.hpp"

namespace hazdt {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

FunctionContext::FunctionContext(BooleanFunction f, std::string id)
    : f_(std::move(f)), id_(std::move(id)) {}

const TernaryFunction& FunctionContext::ext() {
  if (!ext_) ext_ = hazard_free_extension(f_);
  return *ext_;
}

const ExtremalSizes& FunctionContext::sizes() {
  if (!sizes_) sizes_ = extremal_sizes(f_);
  return *sizes_;
}

const ImplicantSet& FunctionContext::implicants() {
  if (!implicants_) implicants_ = prime_implicants(f_);
  return *implicants_;
}

const ImplicantSet& FunctionContext::implicates() {
  if (!implicates_) implicates_ = prime_implicates(f_);
  return *implicates_;
}

int FunctionContext::depth() {
  if (!depth_) depth_ = optimal_depth(f_).value;
  return *depth_;
}
int FunctionContext::size() {
  if (!size_) size_ = optimal_size(f_).value;
  return *size_;
}
int FunctionContext::depth_u() {
  if (!depth_u_) depth_u_ = optimal_depth_u(f_).value;
  return *depth_u_;
}
int FunctionContext::size_u() {
  if (!size_u_) size_u_ = optimal_size_u(f_).value;
  return *size_u_;
}

int FunctionContext::su() {
  if (!su_) su_ = s_u(ext());
  return *su_;
}
int FunctionContext::su_at(Ternary b) {
  auto& slot = su_by_value_[digit(b)];
  if (!slot) slot = s_u_at(ext(), b);
  return *slot;
}
int FunctionContext::bsu() {
  if (!bsu_) bsu_ = bs_u(ext());
  return *bsu_;
}
int FunctionContext::ccu() {
  if (!ccu_) ccu_ = cc_u(ext());
  return *ccu_;
}
int FunctionContext::ccu_at(Ternary b) {
  auto& slot = ccu_by_value_[digit(b)];
  if (!slot) slot = cc_u_at(ext(), b);
  return *slot;
}
int FunctionContext::boolean_s() {
  if (!boolean_s_) boolean_s_ = boolean_measures(f_).s;
  return *boolean_s_;
}

bool FunctionContext::is_constant() const {
  for (std::uint8_t b : f_.table)
    if (b != f_.table[0]) return false;
  return true;
}

namespace {

std::string fmt(std::initializer_list<std::pair<const char*, long long>> kv) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) out << ' ';
    first = false;
    out << k << '=' << v;
  }
  return out.str();
}

bool has_value(const TernaryFunction& ext, Ternary b) {
  const auto& table = ext.table();
  return std::find(table.begin(), table.end(), b) != table.end();
}

long long ipow(long long base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

DecisionTree and_chain_tree(int n) {
  using Node = DecisionTree::Node;
  Node node = Node::leaf(t1);
  for (int i = n - 1; i >= 0; --i) {
    std::vector<Node> kids;
    kids.push_back(Node::leaf(t0));
    kids.push_back(std::move(node));
    node = Node::internal(i, std::move(kids));
  }
  return DecisionTree(DecisionTree::Arity::binary, std::move(node));
}

// ---- sweep checks ----

CheckOutcome check_extension_natural(FunctionContext& c) {
  const TernaryFunction& ext = c.ext();
  if (!is_natural(ext)) return CheckOutcome::fail("extension is not natural");
  if (stable_part(ext) != c.fn())
    return CheckOutcome::fail("extension disagrees with f on a stable input");
  return CheckOutcome::pass();
}

CheckOutcome check_implicant_structure(FunctionContext& c) {
  const TernaryFunction& ext = c.ext();
  const int n = c.fn().n;
  for (const TernaryWord& w : c.implicants().words)
    if (ext.value(w) != t1)
      return CheckOutcome::fail("extension not 1 at prime implicant " + w.str());
  for (const TernaryWord& w : c.implicates().words)
    if (ext.value(w) != t0)
      return CheckOutcome::fail("extension not 0 at prime implicate " + w.str());
  std::string bad;
  for_each_word(n, [&](const TernaryWord& w, std::uint64_t idx) {
    if (!bad.empty()) return;
    Ternary v = ext.value_index(idx);
    if (!is_stable(v)) return;
    const auto& primes = v == t1 ? c.implicants().words : c.implicates().words;
    for (const TernaryWord& p : primes)
      if (leq(p, w)) return;
    bad = w.str();
  });
  if (!bad.empty()) return CheckOutcome::fail("stable-valued word " + bad + " above no prime");
  return CheckOutcome::pass();
}

CheckOutcome check_size_implicant_count(FunctionContext& c) {
  const ExtremalSizes& sz = c.sizes();
  if (c.size_u() < sz.m + sz.M)
    return CheckOutcome::fail(fmt({{"size_u", c.size_u()}, {"m", sz.m}, {"M", sz.M}}));
  return CheckOutcome::pass();
}

CheckOutcome check_size_product_range(FunctionContext& c) {
  const long long lo = 2LL * c.size() - 1;
  const long long hi = ipow(2, c.size()) - 1;
  if (c.size_u() < lo || c.size_u() > hi)
    return CheckOutcome::fail(
        fmt({{"size", c.size()}, {"size_u", c.size_u()}, {"lo", lo}, {"hi", hi}}));
  return CheckOutcome::pass();
}

CheckOutcome check_product_construction(FunctionContext& c) {
  DecisionTree boolean_tree = optimal_size(c.fn()).witness;
  DecisionTree converted = hazard_free_from_boolean(boolean_tree, c.fn());
  if (!computes(converted, c.fn(), ComputeMode::hazard_free()))
    return CheckOutcome::fail("converted tree does not compute the extension");
  const long long bound = ipow(2, boolean_tree.size()) - 1;
  if (converted.size() > bound)
    return CheckOutcome::fail(fmt({{"converted", converted.size()}, {"bound", bound}}));
  return CheckOutcome::pass();
}

// The size bound counts the leaves an input within the budget can reach;
// the structural u-leaves standing for spent budget would already push
// the k = 0 count to 2s - 1.
CheckOutcome check_budgeted_construction(FunctionContext& c) {
  DecisionTree boolean_tree = optimal_size(c.fn()).witness;
  const long long s = boolean_tree.size();
  const long long d = boolean_tree.depth();
  for (int k = 0; k <= 2 && k <= c.fn().n; ++k) {
    DecisionTree t = k_hazard_free_from_boolean(boolean_tree, c.fn(), k);
    if (!computes(t, c.fn(), ComputeMode::k_bit(k)))
      return CheckOutcome::fail("budget " + std::to_string(k) + " tree fails validation");
    const long long size_bound = ipow(s, (1 << (k + 1)) - 1);
    const long long depth_bound = (1LL << k) * d;
    if (size_within_budget(t, k) > size_bound || t.depth() > depth_bound)
      return CheckOutcome::fail(fmt({{"k", k},
                                     {"size", size_within_budget(t, k)},
                                     {"size_bound", size_bound},
                                     {"depth", t.depth()},
                                     {"depth_bound", depth_bound}}));
  }
  return CheckOutcome::pass();
}

CheckOutcome check_sensitivity_chain(FunctionContext& c) {
  if (c.is_constant()) return CheckOutcome::skip("constant function has no CNF/DNF widths");
  const ExtremalSizes& sz = c.sizes();
  const int lo = std::max(sz.k1, sz.k2);
  const int hi = sz.k1 + sz.k2 - 1;
  if (!(lo <= c.su() && c.su() <= c.bsu() && c.bsu() <= c.ccu() && c.ccu() <= hi))
    return CheckOutcome::fail(fmt({{"k1", sz.k1},
                                   {"k2", sz.k2},
                                   {"s_u", c.su()},
                                   {"bs_u", c.bsu()},
                                   {"cc_u", c.ccu()}}));
  return CheckOutcome::pass();
}

CheckOutcome check_depth_certificate_cube(FunctionContext& c) {
  const long long cc = c.ccu();
  if (!(cc <= c.depth_u() && c.depth_u() <= 4 * cc * cc * cc))
    return CheckOutcome::fail(fmt({{"cc_u", cc}, {"depth_u", c.depth_u()}}));
  return CheckOutcome::pass();
}

CheckOutcome check_depth_certificate_product(FunctionContext& c) {
  const long long bound = static_cast<long long>(c.ccu_at(tu)) * (c.ccu_at(t0) + 1) *
                          (c.ccu_at(t1) + 1);
  if (c.depth_u() > bound)
    return CheckOutcome::fail(fmt({{"depth_u", c.depth_u()},
                                   {"cc_u_u", c.ccu_at(tu)},
                                   {"cc_u_0", c.ccu_at(t0)},
                                   {"cc_u_1", c.ccu_at(t1)}}));
  return CheckOutcome::pass();
}

CheckOutcome check_sensitivity_maximizers(FunctionContext& c) {
  const TernaryFunction& ext = c.ext();
  const int n = c.fn().n;

  int best_pi = 0;
  for (const TernaryWord& w : c.implicants().words)
    best_pi = std::max(best_pi, sensitivity_u(ext, w));
  if (!c.implicants().words.empty() && best_pi != c.su_at(t1))
    return CheckOutcome::fail(fmt({{"s_u_1", c.su_at(t1)}, {"max_at_implicants", best_pi}}));

  int best_pc = 0;
  for (const TernaryWord& w : c.implicates().words)
    best_pc = std::max(best_pc, sensitivity_u(ext, w));
  if (!c.implicates().words.empty() && best_pc != c.su_at(t0))
    return CheckOutcome::fail(fmt({{"s_u_0", c.su_at(t0)}, {"max_at_implicates", best_pc}}));

  if (has_value(ext, tu)) {
    int best_single = 0;
    for_each_word(n, [&](const TernaryWord& w, std::uint64_t idx) {
      if (w.count_unstable() != 1 || ext.value_index(idx) != tu) return;
      best_single = std::max(best_single, sensitivity_u(ext, w));
    });
    if (best_single != c.su_at(tu))
      return CheckOutcome::fail(
          fmt({{"s_u_u", c.su_at(tu)}, {"max_at_single_u", best_single}}));
  }
  return CheckOutcome::pass();
}

CheckOutcome check_unstable_vs_boolean_sensitivity(FunctionContext& c) {
  if (!has_value(c.ext(), tu)) return CheckOutcome::skip("no u-inputs (constant function)");
  if (c.su_at(tu) > 2 * c.boolean_s() - 1)
    return CheckOutcome::fail(fmt({{"s_u_u", c.su_at(tu)}, {"s", c.boolean_s()}}));
  return CheckOutcome::pass();
}

CheckOutcome check_per_value_sensitivity(FunctionContext& c) {
  const ExtremalSizes& sz = c.sizes();
  if (c.su_at(t1) != sz.k1 || c.su_at(t0) != sz.k2)
    return CheckOutcome::fail(fmt({{"s_u_1", c.su_at(t1)},
                                   {"k1", sz.k1},
                                   {"s_u_0", c.su_at(t0)},
                                   {"k2", sz.k2}}));
  return CheckOutcome::pass();
}

CheckOutcome check_per_value_certificate(FunctionContext& c) {
  const ExtremalSizes& sz = c.sizes();
  if (c.ccu_at(t1) != sz.k1 || c.ccu_at(t0) != sz.k2)
    return CheckOutcome::fail(fmt({{"cc_u_1", c.ccu_at(t1)},
                                   {"k1", sz.k1},
                                   {"cc_u_0", c.ccu_at(t0)},
                                   {"k2", sz.k2}}));
  if (has_value(c.ext(), tu) && c.ccu_at(tu) > sz.k1 + sz.k2 - 1)
    return CheckOutcome::fail(
        fmt({{"cc_u_u", c.ccu_at(tu)}, {"k1", sz.k1}, {"k2", sz.k2}}));
  return CheckOutcome::pass();
}

CheckOutcome check_colorful_cube(FunctionContext& c) {
  const TernaryFunction& ext = c.ext();
  const int n = c.fn().n;
  std::string bad;
  for_each_word(n, [&](const TernaryWord& w, std::uint64_t idx) {
    if (!bad.empty() || ext.value_index(idx) != tu) return;
    // minimal colorful cube: in every unstable dimension at least one of
    // the two half-cubes is monochromatic
    for (int i = 0; i < n; ++i) {
      if (w[i] != tu) continue;
      if (!is_stable(ext.value(w.with(i, t0))) && !is_stable(ext.value(w.with(i, t1))))
        return;
    }
    int ones = 0, zeros = 0;
    for (const TernaryWord& r : resolutions(w)) (c.fn().value(r) ? ones : zeros) += 1;
    if (std::min(ones, zeros) != 1) bad = w.str();
  });
  if (!bad.empty())
    return CheckOutcome::fail("minimal colorful cube " + bad + " not one-against-rest");
  return CheckOutcome::pass();
}

CheckOutcome check_stability_variants(FunctionContext& c) {
  const TernaryFunction& ext = c.ext();
  for (Ternary b : {t0, t1}) {
    int st = stabs_at(ext, b), sl = slys_at(ext, b), su = c.su_at(b);
    if (st != sl || sl != su)
      return CheckOutcome::fail(fmt({{"b", digit(b)}, {"stabs", st}, {"slys", sl}, {"s_u", su}}));
  }
  if (slys_at(ext, tu) > c.su_at(tu))
    return CheckOutcome::fail(fmt({{"slys_u", slys_at(ext, tu)}, {"s_u_u", c.su_at(tu)}}));
  const int st = stabs(ext), sl = slys(ext), su = c.su();
  if (!(su <= 2 * st && st <= sl && sl <= su))
    return CheckOutcome::fail(fmt({{"s_u", su}, {"stabs", st}, {"slys", sl}}));
  return CheckOutcome::pass();
}

CheckOutcome check_ball_reconstruction(FunctionContext& c) {
  const TernaryFunction& ext = c.ext();
  const int n = c.fn().n;
  const int radius = std::min(4 * s_u(ext), n);
  std::string bad;
  for_each_word(n, [&](const TernaryWord& center, std::uint64_t) {
    if (!bad.empty()) return;
    BallOracle oracle = BallOracle::probe(ext, center, radius);
    try {
      TernaryFunction rebuilt = reconstruct_from_ball(oracle, s_u(ext));
      if (!(rebuilt == ext)) bad = "mismatch at center " + center.str();
    } catch (const std::exception& e) {
      bad = std::string(e.what()) + " at center " + center.str();
    }
  });
  if (!bad.empty()) return CheckOutcome::fail(bad);
  return CheckOutcome::pass();
}

CheckOutcome check_neighborhood_plurality(FunctionContext& c) {
  const TernaryFunction& ext = c.ext();
  const int n = c.fn().n;
  const int s = c.su();
  const int need = 4 * s + 1;
  if (need > 2 * n) return CheckOutcome::skip("4s+1 exceeds the neighborhood size");
  std::string bad;
  for_each_word(n, [&](const TernaryWord& w, std::uint64_t idx) {
    if (!bad.empty()) return;
    std::vector<TernaryWord> nb = neighborhood(w);
    const int total = static_cast<int>(nb.size());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << total); ++mask) {
      if (__builtin_popcount(mask) < need) continue;
      std::vector<Ternary> values;
      for (int j = 0; j < total; ++j)
        if ((mask >> j) & 1) values.push_back(ext.value(nb[static_cast<std::size_t>(j)]));
      try {
        if (plurality(values) != ext.value_index(idx)) {
          bad = "plurality mismatch at " + w.str();
          return;
        }
      } catch (const std::exception&) {
        bad = "plurality tie at " + w.str();
        return;
      }
    }
  });
  if (!bad.empty()) return CheckOutcome::fail(bad);
  return CheckOutcome::pass();
}

// ---- standalone checks (fixed families) ----

CheckOutcome check_mux_depth() {
  for (int n : {1, 2}) {
    BooleanFunction f = make_family(FamilySpec{Family::Mux, n});
    int got = optimal_depth_u(f).value;
    int want = (1 << n) + n;
    if (got != want) return CheckOutcome::fail(fmt({{"n", n}, {"got", got}, {"want", want}}));
  }
  return CheckOutcome::pass();
}

CheckOutcome check_mux_budgeted_depth() {
  for (auto [n, kmax] : {std::pair{1, 1}, std::pair{2, 2}}) {
    BooleanFunction f = make_family(FamilySpec{Family::Mux, n});
    for (int k = 0; k <= kmax; ++k) {
      int got = optimal_depth_k(f, k).value;
      int want = (1 << k) + n;
      if (got != want)
        return CheckOutcome::fail(fmt({{"n", n}, {"k", k}, {"got", got}, {"want", want}}));
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome check_mux_size() {
  for (int n : {1, 2}) {
    BooleanFunction f = make_family(FamilySpec{Family::Mux, n});
    MuxTrees trees = mux_trees(n);
    const long long want = ipow(4, n + 1) - ipow(3, n);
    if (trees.ternary_tree.size() != want)
      return CheckOutcome::fail(fmt({{"n", n}, {"size", trees.ternary_tree.size()}}));
    if (!computes(trees.ternary_tree, f, ComputeMode::hazard_free()))
      return CheckOutcome::fail("constructed tree fails validation, n=" + std::to_string(n));
    if (!computes(trees.boolean_tree, f, ComputeMode::boolean()))
      return CheckOutcome::fail("Boolean tree fails validation, n=" + std::to_string(n));
  }
  BooleanFunction mux1 = make_family(FamilySpec{Family::Mux, 1});
  int opt = optimal_size_u(mux1).value;
  if (opt < 2 * 4 || opt > 13) return CheckOutcome::fail(fmt({{"size_u_mux1", opt}}));
  return CheckOutcome::pass();
}

CheckOutcome check_mux_budgeted_size() {
  BooleanFunction f = make_family(FamilySpec{Family::Mux, 2});
  const int binom[3] = {1, 2, 1};
  int cumulative = 0;
  for (int k = 0; k <= 2; ++k) {
    cumulative += binom[k];
    int bound = 4 * cumulative;
    int got = optimal_size_k(f, k).value;
    if (got < bound)
      return CheckOutcome::fail(fmt({{"k", k}, {"got", got}, {"bound", bound}}));
  }
  return CheckOutcome::pass();
}

CheckOutcome check_mux_measures() {
  TernaryFunction ext = make_family_extension(FamilySpec{Family::Mux, 2});
  const int want = 4;
  int s = s_u(ext), bs = bs_u(ext), cc = cc_u(ext);
  if (s != want || bs != want || cc != want)
    return CheckOutcome::fail(fmt({{"s_u", s}, {"bs_u", bs}, {"cc_u", cc}}));
  return CheckOutcome::pass();
}

CheckOutcome check_and_size() {
  for (int n : {1, 2, 3}) {
    BooleanFunction f = make_family(FamilySpec{Family::And, n});
    const int want = (1 << (n + 1)) - 1;
    int opt = optimal_size_u(f).value;
    if (opt != want) return CheckOutcome::fail(fmt({{"n", n}, {"size_u", opt}, {"want", want}}));
    DecisionTree converted = hazard_free_from_boolean(and_chain_tree(n), f);
    if (converted.size() != want)
      return CheckOutcome::fail(fmt({{"n", n}, {"constructed", converted.size()}, {"want", want}}));
  }
  return CheckOutcome::pass();
}

CheckOutcome check_low_depth_family() {
  for (int n : {1, 2}) {
    FamilySpec spec{Family::Smalldepth, n};
    BooleanFunction f = make_family(spec);
    if (!is_nondegenerate(f))
      return CheckOutcome::fail("f_" + std::to_string(n) + " is degenerate");
    DecisionTree t = smalldepth_tree(n);
    if (t.depth() != 2 * n + 1)
      return CheckOutcome::fail(fmt({{"n", n}, {"depth", t.depth()}}));
    if (!computes(t, f, ComputeMode::hazard_free()))
      return CheckOutcome::fail("tree fails validation, n=" + std::to_string(n));
  }
  return CheckOutcome::pass();
}

CheckOutcome check_majority_plurality() {
  for (int len = 1; len <= 5; ++len) {
    TernaryFunction maj = make_family_extension(FamilySpec{Family::Maj, len});
    std::string bad;
    for_each_word(len, [&](const TernaryWord& w, std::uint64_t) {
      if (!bad.empty()) return;
      int counts[3] = {0, 0, 0};
      for (int i = 0; i < len; ++i) ++counts[digit(w[i])];
      int best = std::max({counts[0], counts[1], counts[2]});
      if (2 * best <= len) return;  // no strict majority
      if (plurality(w.digits()) != maj.value(w)) bad = w.str();
    });
    if (!bad.empty()) return CheckOutcome::fail("mismatch at " + bad);
  }
  return CheckOutcome::pass();
}

}  // namespace

const std::vector<TheoremCheck>& all_checks() {
  static const std::vector<TheoremCheck> checks = {
      {"extension-natural",
       "the hazard-free extension is natural and agrees with f on stable inputs",
       check_extension_natural, nullptr},
      {"implicant-structure",
       "f~ is 1 on prime implicant words, 0 on prime implicate words, and every "
       "stable-valued word lies above a prime",
       check_implicant_structure, nullptr},
      {"size-implicant-count", "size_u(f) >= m + M", check_size_implicant_count, nullptr},
      {"size-product-range", "2*size(f) - 1 <= size_u(f) <= 2^size(f) - 1",
       check_size_product_range, nullptr},
      {"product-construction",
       "converting a Boolean tree yields a validating hazard-free tree of size <= "
       "2^size - 1",
       check_product_construction, nullptr},
      {"budgeted-construction",
       "the k-budget conversion validates with depth <= 2^k*d and at most s^(2^(k+1)-1) "
       "leaves reachable within the budget, for k in {0,1,2}",
       check_budgeted_construction, nullptr},
      {"sensitivity-chain", "max{k1,k2} <= s_u <= bs_u <= cc_u <= k1 + k2 - 1",
       check_sensitivity_chain, nullptr},
      {"depth-certificate-cube", "cc_u <= depth_u <= 4*cc_u^3", check_depth_certificate_cube,
       nullptr},
      {"depth-certificate-product", "depth_u <= cc_u^(u) * (cc_u^(0)+1) * (cc_u^(1)+1)",
       check_depth_certificate_product, nullptr},
      {"sensitivity-maximizers",
       "per-value sensitivity maxima occur at prime implicants, prime implicates, and "
       "single-u words",
       check_sensitivity_maximizers, nullptr},
      {"unstable-vs-boolean-sensitivity", "s_u^(u)(f~) <= 2*s(f) - 1",
       check_unstable_vs_boolean_sensitivity, nullptr},
      {"per-value-sensitivity", "s_u^(1) = k1 and s_u^(0) = k2", check_per_value_sensitivity,
       nullptr},
      {"per-value-certificate", "cc_u^(1) = k1, cc_u^(0) = k2, cc_u^(u) <= k1 + k2 - 1",
       check_per_value_certificate, nullptr},
      {"colorful-cube",
       "a minimal colorful cube has exactly one resolution of one color",
       check_colorful_cube, nullptr},
      {"stability-variants",
       "stabs^(b) = slys^(b) = s_u^(b) for stable b; slys^(u) <= s_u^(u); s_u/2 <= stabs "
       "<= slys <= s_u",
       check_stability_variants, nullptr},
      {"ball-reconstruction",
       "values on a ball of radius min(4*s_u, n) determine f~ everywhere, any center",
       check_ball_reconstruction, nullptr},
      {"neighborhood-plurality",
       "f~(x) equals the plurality over any 4s+1 of its neighbors",
       check_neighborhood_plurality, nullptr},
      {"mux-depth", "depth_u(MUX_n) = 2^n + n for n in {1,2}", nullptr, check_mux_depth},
      {"mux-budgeted-depth", "depth_k(MUX_n, k) = 2^k + n", nullptr,
       check_mux_budgeted_depth},
      {"mux-size",
       "the constructed hazard-free MUX trees have 4^(n+1) - 3^n leaves and validate; "
       "size_u(MUX_1) lies in [8, 13]",
       nullptr, check_mux_size},
      {"mux-budgeted-size", "size_k(MUX_2, k) >= 4 * sum_{i<=k} C(2,i)", nullptr,
       check_mux_budgeted_size},
      {"mux-measures", "s_u = bs_u = cc_u = 4 for MUX_2", nullptr, check_mux_measures},
      {"and-size", "size_u(AND_n) = 2^(n+1) - 1 for n in {1,2,3}, met by the conversion "
                   "of the chain tree",
       nullptr, check_and_size},
      {"low-depth-family",
       "smalldepth trees have depth 2n+1 and validate; f_n is nondegenerate",
       nullptr, check_low_depth_family},
      {"majority-plurality",
       "plurality equals the hazard-free majority on strict-majority words", nullptr,
       check_majority_plurality},
  };
  return checks;
}

std::vector<TheoremCheck> checks_by_ids(const std::vector<std::string>& ids) {
  std::vector<TheoremCheck> out;
  for (const std::string& id : ids) {
    bool found = false;
    for (const TheoremCheck& check : all_checks()) {
      if (check.id == id) {
        out.push_back(check);
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("unknown check '" + id + "'");
  }
  return out;
}

std::uint64_t npn_canonical(std::uint64_t table, int n) {
  if (n < 0 || n > 4) throw std::invalid_argument("npn canonization supports n <= 4");
  const int inputs = 1 << n;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      std::uint64_t transformed = 0;
      for (int x = 0; x < inputs; ++x) {
        int y = 0;
        for (int i = 0; i < n; ++i) {
          int bit = (x >> (n - 1 - i)) & 1;
          bit ^= (mask >> i) & 1;
          if (bit) y |= 1 << (n - 1 - perm[static_cast<std::size_t>(i)]);
        }
        if ((table >> y) & 1) transformed |= std::uint64_t{1} << x;
      }
      std::uint64_t flipped = (~transformed) & ((inputs == 64 ? ~std::uint64_t{0}
                                                              : (std::uint64_t{1} << inputs) - 1));
      best = std::min({best, transformed, flipped});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<BooleanFunction> enumerate_functions(int n, FunctionFilter filter) {
  if (n < 0 || n > 4) throw std::invalid_argument("enumeration supports n <= 4");
  const std::uint64_t count = std::uint64_t{1} << (1 << n);
  std::vector<BooleanFunction> out;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    BooleanFunction f = BooleanFunction::from_uint(n, bits);
    switch (filter) {
      case FunctionFilter::all:
        break;
      case FunctionFilter::nondegenerate:
        if (!is_nondegenerate(f)) continue;
        break;
      case FunctionFilter::npn_representatives:
        if (npn_canonical(bits, n) != bits) continue;
        break;
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<BooleanFunction> sample_functions(int n, int count, std::uint64_t seed) {
  if (n < 0 || n > 4) throw std::invalid_argument("sampling supports n <= 4");
  std::mt19937_64 gen(seed);
  const std::uint64_t mask = (std::uint64_t{1} << (1 << n)) - 1;
  std::vector<BooleanFunction> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    out.push_back(BooleanFunction::from_uint(n, gen() & mask));
  return out;
}

std::string VerifyReport::to_tsv() const {
  std::string out = "function\tcheck\tstatus\tdetail\n";
  for (const Row& row : rows) {
    out += row.function_id;
    out.push_back('\t');
    out += row.check_id;
    out.push_back('\t');
    out += to_string(row.status);
    out.push_back('\t');
    out += row.detail;
    out.push_back('\n');
  }
  return out;
}

VerifyReport run_checks(const std::vector<BooleanFunction>& fs,
                        const std::vector<TheoremCheck>& checks, int jobs) {
  VerifyReport report;

  for (const TheoremCheck& check : checks) {
    if (!check.standalone) continue;
    CheckOutcome outcome = check.standalone();
    report.rows.push_back({"-", check.id, outcome.status, outcome.detail});
  }

  std::vector<const TheoremCheck*> sweeps;
  for (const TheoremCheck& check : checks)
    if (check.per_function) sweeps.push_back(&check);

  std::vector<std::vector<VerifyReport::Row>> slots(fs.size());
  auto work = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      FunctionContext context(fs[i], render_function_spec(fs[i]));
      for (const TheoremCheck* check : sweeps) {
        CheckOutcome outcome = check->per_function(context);
        slots[i].push_back({context.id(), check->id, outcome.status, outcome.detail});
      }
    }
  };

  if (jobs <= 1 || fs.size() < 2) {
    work(0, fs.size());
  } else {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), fs.size());
    std::vector<std::thread> threads;
    const std::size_t chunk = (fs.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t from = w * chunk;
      std::size_t to = std::min(fs.size(), from + chunk);
      if (from >= to) break;
      threads.emplace_back(work, from, to);
    }
    for (std::thread& t : threads) t.join();
  }

  for (auto& rows : slots)
    for (auto& row : rows) report.rows.push_back(std::move(row));

  for (const VerifyReport::Row& row : report.rows) {
    switch (row.status) {
      case CheckStatus::pass: ++report.passes; break;
      case CheckStatus::fail: ++report.failures; break;
      case CheckStatus::skipped: ++report.skips; break;
    }
  }
  return report;
}

}  // namespace hazdt
