#pragma once

#include "linkhom/hlink.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace linkhom {

/// x_{ij}^exp
struct HSyllable {
  int i = 0;
  int j = 0;
  Int exp = 0;
  bool operator==(const HSyllable&) const = default;
};

/// Free-reduced word over the H(n) generators x_{ij}.
class HWord {
 public:
  HWord() = default;
  static HWord gen(int i, int j, const Int& e = 1);
  /// Image of an RF(m) word under x_a -> x_{a,k}.
  static HWord lift(const Word& w, int k);

  const std::vector<HSyllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  HWord operator*(const HWord& o) const;
  HWord inverse() const;
  GroupExpr to_expr() const;
  std::string to_string() const;
  bool operator==(const HWord&) const = default;

 private:
  void push(int i, int j, const Int& e);
  std::vector<HSyllable> syl_;
};

LongitudeTuple hword_tuple(const HWord& w, int n);

enum class MoveKind { Crossing, Delta };

/// Crossing: W^-1 x_{ij}^sign W (W = conj).
/// Delta: V^-1 [R x_{ik}^inner_sign R^-1, x_{jk}]^sign V (V = conj, R = inner).
struct Move {
  MoveKind kind = MoveKind::Crossing;
  int i = 0, j = 0, k = 0;
  int sign = 1;
  int inner_sign = 1;
  HWord inner;
  HWord conj;

  HWord word() const;
  bool operator==(const Move&) const = default;
};

struct MoveSequence {
  int n = 0;
  std::vector<Move> moves;
};

MoveSequence synthesize_crossings(const LongitudeTuple& t);
/// Throws DomainError when a pairwise linking number is nonzero (no finite sequence exists).
MoveSequence synthesize_delta(const LongitudeTuple& t);
bool verify_moves(const LongitudeTuple& t, const MoveSequence& seq);
/// Swaps factors at position and position+1; the factor moving right is conjugated by the other.
MoveSequence reorder_moves(const MoveSequence& seq, std::size_t position);

LongitudeTuple move_tuple(const Move& m, int n);
/// Number of crossing moves between each pair of components.
std::map<std::pair<int, int>, int> crossings_per_pair(const MoveSequence& seq);

}  // namespace linkhom
