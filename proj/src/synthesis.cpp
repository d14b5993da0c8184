#include "linkhom/synthesis.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace linkhom {

// ---------------------------------------------------------------- HWord

void HWord::push(int i, int j, const Int& e) {
  if (e == 0) return;
  if (!syl_.empty() && syl_.back().i == i && syl_.back().j == j) {
    syl_.back().exp += e;
    if (syl_.back().exp == 0) syl_.pop_back();
    return;
  }
  syl_.push_back({i, j, e});
}

HWord HWord::gen(int i, int j, const Int& e) {
  if (i == j) throw DomainError("generator needs distinct indices");
  HWord w;
  w.push(std::min(i, j), std::max(i, j), e);
  return w;
}

HWord HWord::lift(const Word& w, int k) {
  HWord r;
  for (const auto& s : w.syllables()) {
    if (s.index >= k) throw DomainError("lifted word uses an index at or above the target component");
    r.push(s.index, k, s.exp);
  }
  return r;
}

HWord HWord::operator*(const HWord& o) const {
  HWord r = *this;
  for (const auto& s : o.syl_) r.push(s.i, s.j, s.exp);
  return r;
}

HWord HWord::inverse() const {
  HWord r;
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.push(it->i, it->j, -it->exp);
  return r;
}

GroupExpr HWord::to_expr() const {
  std::vector<GroupExpr> xs;
  for (const auto& s : syl_) xs.push_back(GroupExpr::generator({s.i, s.j}, s.exp));
  if (xs.size() == 1) return xs[0];
  return GroupExpr::product(std::move(xs));
}

std::string HWord::to_string() const {
  if (syl_.empty()) return "";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syl_) {
    if (!first) os << ' ';
    first = false;
    if (s.i <= 9 && s.j <= 9)
      os << 'x' << s.i << s.j;
    else
      os << "x{" << s.i << ',' << s.j << '}';
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

namespace {

const std::pair<LongitudeTuple, LongitudeTuple>& generator_pair(int i, int j, int n) {
  thread_local std::map<std::tuple<int, int, int>, std::pair<LongitudeTuple, LongitudeTuple>> cache;
  auto key = std::make_tuple(i, j, n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    LongitudeTuple g = sl_generator(i, j, n);
    it = cache.emplace(key, std::make_pair(g, sl_invert(g))).first;
  }
  return it->second;
}

}  // namespace

LongitudeTuple hword_tuple(const HWord& w, int n) {
  LongitudeTuple r = LongitudeTuple::trivial(n);
  for (const auto& s : w.syllables()) {
    const auto& [g, gi] = generator_pair(s.i, s.j, n);
    const LongitudeTuple& base = s.exp > 0 ? g : gi;
    Int e = boost::multiprecision::abs(s.exp);
    if (e <= 4) {
      for (Int c = 0; c < e; ++c) r = sl_stack(r, base);
    } else {
      r = sl_stack(r, sl_power(base, e));
    }
  }
  return r;
}

// ---------------------------------------------------------------- moves

HWord Move::word() const {
  if (kind == MoveKind::Crossing) return conj.inverse() * HWord::gen(i, j, sign) * conj;
  HWord a = inner * HWord::gen(i, k, inner_sign) * inner.inverse();
  HWord b = HWord::gen(j, k);
  HWord c = a.inverse() * b.inverse() * a * b;
  if (sign < 0) c = c.inverse();
  return conj.inverse() * c * conj;
}

LongitudeTuple move_tuple(const Move& m, int n) {
  LongitudeTuple w = hword_tuple(m.conj, n);
  LongitudeTuple core;
  if (m.kind == MoveKind::Crossing) {
    const auto& [g, gi] = generator_pair(std::min(m.i, m.j), std::max(m.i, m.j), n);
    core = m.sign > 0 ? g : gi;
  } else {
    LongitudeTuple r = hword_tuple(m.inner, n);
    const auto& [gik, gik_inv] = generator_pair(m.i, m.k, n);
    LongitudeTuple a = sl_stack(sl_stack(r, m.inner_sign > 0 ? gik : gik_inv), sl_invert(r));
    core = sl_commutator(a, generator_pair(m.j, m.k, n).first);
    if (m.sign < 0) core = sl_invert(core);
  }
  if (m.conj.empty()) return core;
  return sl_stack(sl_stack(sl_invert(w), core), w);
}

bool verify_moves(const LongitudeTuple& t, const MoveSequence& seq) {
  if (seq.n != t.n()) return false;
  LongitudeTuple r = LongitudeTuple::trivial(t.n());
  for (const auto& m : seq.moves) r = sl_stack(r, move_tuple(m, t.n()));
  return sl_equal(r, t);
}

MoveSequence reorder_moves(const MoveSequence& seq, std::size_t position) {
  if (position + 1 >= seq.moves.size()) throw DomainError("reorder position out of range");
  MoveSequence r = seq;
  Move left = seq.moves[position];
  const Move& right = seq.moves[position + 1];
  // A B = B (B^-1 A B)
  left.conj = left.conj * right.word();
  r.moves[position] = right;
  r.moves[position + 1] = left;
  return r;
}

std::map<std::pair<int, int>, int> crossings_per_pair(const MoveSequence& seq) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& m : seq.moves)
    if (m.kind == MoveKind::Crossing) ++out[{std::min(m.i, m.j), std::max(m.i, m.j)}];
  return out;
}

namespace {

int sgn(const Int& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

// Moves for phi(w) with w in RF(n-1), generator/commutator rewriting plus cancellation.
std::vector<Move> crossing_block(const Word& w, int n) {
  const int m = n - 1;
  RewrittenForm f = rewrite_generators_commutators(w, m);
  std::vector<Move> seq;
  std::vector<int> tag;  // k for the trivially conjugated half of z_k, else 0
  auto crossing = [&](int k, int sign, HWord conj) {
    Move mv;
    mv.kind = MoveKind::Crossing;
    mv.i = k;
    mv.j = n;
    mv.sign = sign;
    mv.conj = std::move(conj);
    return mv;
  };
  for (int k = m; k >= 1; --k) {
    Int a = boost::multiprecision::abs(f.alphas[k]);
    for (Int c = 0; c < a; ++c) {
      seq.push_back(crossing(k, sgn(f.alphas[k]), {}));
      tag.push_back(0);
    }
  }
  for (int k = 1; k <= m - 1; ++k) {
    if (expand(f.z(k), m).is_one()) continue;
    HWord om = HWord::lift(f.omegas[k], n);
    int t = f.alphas[k] != 0 ? k : 0;
    if (f.right_side[k]) {  // [x, w] = x^-1 . w^-1 x w
      seq.push_back(crossing(k, -1, {}));
      tag.push_back(t);
      seq.push_back(crossing(k, 1, om));
      tag.push_back(0);
    } else {  // [w, x] = w^-1 x^-1 w . x
      seq.push_back(crossing(k, -1, om));
      tag.push_back(0);
      seq.push_back(crossing(k, 1, {}));
      tag.push_back(t);
    }
  }
  // Slide each tagged factor left until it meets a prefix factor x_k of opposite sign.
  for (int k = 1; k <= m - 1; ++k) {
    auto it = std::find(tag.begin(), tag.end(), k);
    if (it == tag.end()) continue;
    std::size_t p = static_cast<std::size_t>(it - tag.begin());
    std::size_t q = p;
    for (std::size_t r = 0; r < p; ++r) {
      const Move& c = seq[r];
      if (tag[r] == 0 && c.i == k && c.conj.empty() && c.sign == -seq[p].sign) q = r;
    }
    if (q == p) throw InternalError("no prefix factor to cancel against");
    for (std::size_t r = p; r > q + 1; --r) {
      Move a = seq[r - 1];
      a.conj = a.conj * seq[r].word();  // A F = F (F^-1 A F)
      seq[r - 1] = seq[r];
      seq[r] = a;
      std::swap(tag[r - 1], tag[r]);
    }
    seq.erase(seq.begin() + static_cast<long>(q), seq.begin() + static_cast<long>(q) + 2);
    tag.erase(tag.begin() + static_cast<long>(q), tag.begin() + static_cast<long>(q) + 2);
  }
  return seq;
}

std::vector<Move> delta_block(const Word& w, int n) {
  const int m = n - 1;
  DeltaForm f = rewrite_delta_form(w, m);
  for (int k = 1; k <= m; ++k)
    if (f.alphas[k] != 0) throw InternalError("delta block with nonzero linking");
  std::vector<Move> seq;
  auto delta = [&](int i, int j, int sign, int inner_sign, HWord inner, HWord conj) {
    Move mv;
    mv.kind = MoveKind::Delta;
    mv.i = i;
    mv.j = j;
    mv.k = n;
    mv.sign = sign;
    mv.inner_sign = inner_sign;
    mv.inner = std::move(inner);
    mv.conj = std::move(conj);
    return mv;
  };
  // [x_j, x_i]^b = [x_i, x_j]^-b
  for (const auto& [ij, b] : f.betas) {
    Int a = boost::multiprecision::abs(b);
    for (Int c = 0; c < a; ++c) seq.push_back(delta(ij.first, ij.second, -sgn(b), 1, {}, {}));
  }
  // [[w, x_a], x_b] = x_a^-1 [w^-1 x_a^-1 w, x_b] x_a . [x_a, x_b]
  for (const auto& [ab, om] : f.omegas) {
    if (om.empty()) continue;
    seq.push_back(delta(ab.first, ab.second, 1, -1, HWord::lift(om.inverse(), n), HWord::gen(ab.first, n)));
    seq.push_back(delta(ab.first, ab.second, 1, 1, {}, {}));
  }
  return seq;
}

MoveSequence synthesize(const LongitudeTuple& t, bool delta) {
  MoveSequence seq;
  seq.n = t.n();
  if (t.n() == 1) return seq;
  const int n = t.n();
  // t = phi(l_n) . s(t minus its last component)
  Word last = word_from_poly(t.longitude(n).with_rank(n - 1));
  seq.moves = delta ? delta_block(last, n) : crossing_block(last, n);
  MoveSequence rest = synthesize(sl_delete_component(t, n), delta);
  seq.moves.insert(seq.moves.end(), rest.moves.begin(), rest.moves.end());
  return seq;
}

}  // namespace

MoveSequence synthesize_crossings(const LongitudeTuple& t) { return synthesize(t, false); }

MoveSequence synthesize_delta(const LongitudeTuple& t) {
  MilnorVector v = milnor(t);
  for (int i = 1; i <= t.n(); ++i)
    for (int j = i + 1; j <= t.n(); ++j)
      if (v.get({i, j}) != 0) throw DomainError("infinite: Delta moves cannot change a nonzero linking number");
  return synthesize(t, true);
}

}  // namespace linkhom
