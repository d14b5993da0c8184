#pragma once

#include "linkhom/hlink.hpp"
#include "linkhom/rf.hpp"

#include <random>

namespace linkhom::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random word over x_1..x_m with exponents in [-2,2].
inline Word random_word(Rng& rng, int m, int max_len) {
  Word w;
  int len = uniform(rng, 0, max_len);
  for (int i = 0; i < len; ++i) {
    int e = uniform(rng, -2, 2);
    w *= Word::gen(uniform(rng, 1, m), e == 0 ? 1 : e);
  }
  return w;
}

/// Random elementary commutator of the given weight with signed leaves.
inline ElementaryCommutator random_elementary(Rng& rng, int m, int weight) {
  if (weight == 1) return ElementaryCommutator::leaf(uniform(rng, 1, m), uniform(rng, 0, 1) ? 1 : -1);
  int left = uniform(rng, 1, weight - 1);
  return ElementaryCommutator::bracket(random_elementary(rng, m, left), random_elementary(rng, m, weight - left));
}

/// Random H(n) word as a product of generator powers.
inline GroupExpr random_h_expr(Rng& rng, int n, int max_len) {
  std::vector<GroupExpr> xs;
  int len = uniform(rng, 1, max_len);
  for (int c = 0; c < len; ++c) {
    int i = uniform(rng, 1, n - 1);
    int j = uniform(rng, i + 1, n);
    xs.push_back(h_generator(i, j, uniform(rng, 0, 1) ? 1 : -1));
  }
  return GroupExpr::product(std::move(xs));
}

inline H4NormalForm random_nf(Rng& rng, int bound) {
  H4NormalForm nf;
  for (auto& a : nf.a) a = uniform(rng, -bound, bound);
  return nf;
}

inline ReducedPolynomial poly(int m, std::vector<std::pair<std::vector<int>, long>> terms) {
  std::vector<ReducedPolynomial::Term> ts;
  for (auto& [idx, c] : terms) ts.push_back({Monomial::from(idx), Int(c)});
  return ReducedPolynomial::from_terms(m, std::move(ts));
}

}  // namespace linkhom::testing
