#include "hazdt/implicants.hpp"

#include <algorithm>
#include <stdexcept>

namespace hazdt {

namespace {

bool all_resolutions_are(const TernaryWord& w, const BooleanFunction& f, bool b) {
  if (w.size() != f.n) throw std::invalid_argument("word length mismatch");
  for (const TernaryWord& r : resolutions(w))
    if (f.value(r) != b) return false;
  return true;
}

// Words w with f~(w) = b, kept when no single stable digit can be relaxed
// to u while the value stays b. These are the minimal such words in the
// instability order, i.e. the maximal monochromatic subcubes.
ImplicantSet prime_words(const BooleanFunction& f, Ternary b, ImplicantKind kind) {
  TernaryFunction ext = hazard_free_extension(f);
  const int n = f.n;
  ImplicantSet out{kind, {}};
  for_each_word(n, [&](const TernaryWord& w, std::uint64_t idx) {
    if (ext.value_index(idx) != b) return;
    for (int i = 0; i < n; ++i) {
      if (w[i] == tu) continue;
      std::uint64_t p = pow3(n - 1 - i);
      std::uint64_t relaxed = w[i] == t0 ? idx + p : idx - p;
      if (ext.value_index(relaxed) == b) return;
    }
    out.words.push_back(w);
  });
  return out;
}

}  // namespace

bool is_implicant(const TernaryWord& w, const BooleanFunction& f) {
  return all_resolutions_are(w, f, true);
}

bool is_implicate(const TernaryWord& w, const BooleanFunction& f) {
  return all_resolutions_are(w, f, false);
}

ImplicantSet prime_implicants(const BooleanFunction& f) {
  return prime_words(f, t1, ImplicantKind::implicant);
}

ImplicantSet prime_implicates(const BooleanFunction& f) {
  return prime_words(f, t0, ImplicantKind::implicate);
}

ExtremalSizes extremal_sizes(const BooleanFunction& f) {
  ExtremalSizes sizes;
  for (const TernaryWord& w : prime_implicants(f).words) {
    sizes.m += 1;
    sizes.k1 = std::max(sizes.k1, w.size() - w.count_unstable());
  }
  for (const TernaryWord& w : prime_implicates(f).words) {
    sizes.M += 1;
    sizes.k2 = std::max(sizes.k2, w.size() - w.count_unstable());
  }
  return sizes;
}

std::string literal_notation(const TernaryWord& w, ImplicantKind kind) {
  // Implicant words record satisfying assignments (1 = positive literal),
  // implicate words record falsifying assignments (0 = positive literal).
  const bool term = kind == ImplicantKind::implicant;
  const Ternary positive = term ? t1 : t0;
  std::string out;
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] == tu) continue;
    if (!out.empty()) out += term ? "·" : "+";
    if (w[i] != positive) out += "~";
    out += "x" + std::to_string(i);
  }
  if (out.empty()) return term ? "1" : "0";
  return out;
}

}  // namespace hazdt
