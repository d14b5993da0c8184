#include "linkhom/rf.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace linkhom {

// ---------------------------------------------------------------- Word

Word::Word(std::vector<Syllable> s) {
  for (auto& x : s) push(x.index, x.exp);
}

Word Word::gen(int i, const Int& e) {
  Word w;
  w.push(i, e);
  return w;
}

void Word::push(int index, const Int& e) {
  if (e == 0) return;
  if (!syl_.empty() && syl_.back().index == index) {
    syl_.back().exp += e;
    if (syl_.back().exp == 0) syl_.pop_back();
    return;
  }
  syl_.push_back({index, e});
}

Word Word::operator*(const Word& o) const {
  Word r = *this;
  r *= o;
  return r;
}

Word& Word::operator*=(const Word& o) {
  for (const auto& s : o.syl_) push(s.index, s.exp);
  return *this;
}

Word Word::inverse() const {
  Word r;
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.push(it->index, -it->exp);
  return r;
}

Word Word::pow(const Int& k) const {
  if (k == 0 || syl_.empty()) return {};
  if (syl_.size() == 1) return gen(syl_[0].index, syl_[0].exp * k);
  Word base = k < 0 ? inverse() : *this;
  Int n = boost::multiprecision::abs(k);
  Word r;
  for (Int c = 0; c < n; ++c) r *= base;
  return r;
}

std::vector<Letter> Word::letters(std::size_t max_letters) const {
  std::vector<Letter> out;
  for (const auto& s : syl_) {
    Int a = boost::multiprecision::abs(s.exp);
    if (a > Int(max_letters) || out.size() + a.convert_to<std::size_t>() > max_letters)
      throw DomainError("word too long to flatten");
    int sign = s.exp > 0 ? 1 : -1;
    for (std::size_t c = 0; c < a.convert_to<std::size_t>(); ++c) out.push_back({s.index, sign});
  }
  return out;
}

std::size_t Word::length() const {
  Int n = 0;
  for (const auto& s : syl_) n += boost::multiprecision::abs(s.exp);
  return n.convert_to<std::size_t>();
}

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) os << ' ';
    first = false;
    os << 'x' << s.index;
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

// ---------------------------------------------------------------- GroupExpr

GroupExpr GroupExpr::generator(Gen g, const Int& e) {
  GroupExpr x;
  x.kind = Kind::GenPower;
  x.gen = g;
  x.exponent = e;
  return x;
}

GroupExpr GroupExpr::product(std::vector<GroupExpr> xs) {
  GroupExpr x;
  x.kind = Kind::Product;
  x.children = std::move(xs);
  return x;
}

GroupExpr GroupExpr::comm(GroupExpr a, GroupExpr b) {
  GroupExpr x;
  x.kind = Kind::Commutator;
  x.children.push_back(std::move(a));
  x.children.push_back(std::move(b));
  return x;
}

GroupExpr GroupExpr::power(GroupExpr a, const Int& e) {
  GroupExpr x;
  x.kind = Kind::Power;
  x.exponent = e;
  x.children.push_back(std::move(a));
  return x;
}

GroupExpr GroupExpr::inverse(GroupExpr a) { return power(std::move(a), -1); }

Word to_word(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::GenPower:
      return Word::gen(e.gen.i, e.exponent);
    case GroupExpr::Kind::Product: {
      Word w;
      for (const auto& c : e.children) w *= to_word(c);
      return w;
    }
    case GroupExpr::Kind::Commutator:
      return commutator(to_word(e.children[0]), to_word(e.children[1]));
    case GroupExpr::Kind::Power:
      return to_word(e.children[0]).pow(e.exponent);
  }
  return {};
}

GroupExpr from_word(const Word& w) {
  std::vector<GroupExpr> xs;
  for (const auto& s : w.syllables()) xs.push_back(GroupExpr::generator({s.index, 0}, s.exp));
  if (xs.size() == 1) return xs[0];
  return GroupExpr::product(std::move(xs));
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::from(const std::vector<int>& idx) {
  Monomial m;
  for (int i : idx) {
    if (i < 1 || i > kMaxRank) throw DomainError("monomial index out of range");
    if (m.contains(i)) throw DomainError("repeated index in monomial");
    m.key |= static_cast<std::uint64_t>(i) << (60 - 4 * m.len);
    m.mask |= static_cast<std::uint16_t>(1u << i);
    ++m.len;
  }
  return m;
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  for (int p = 0; p < len; ++p) out.push_back(at(p));
  return out;
}

Monomial Monomial::concat(const Monomial& o) const {
  Monomial m;
  m.key = key | (o.key >> (4 * len));
  m.mask = mask | o.mask;
  m.len = static_cast<std::uint8_t>(len + o.len);
  return m;
}

// ---------------------------------------------------------------- ReducedPolynomial

namespace {

struct Acc {
  std::unordered_map<std::uint64_t, std::pair<Monomial, Int>> map;
  void add(const Monomial& m, const Int& c) {
    auto [it, fresh] = map.try_emplace(m.key, m, c);
    if (!fresh) it->second.second += c;
  }
};

}  // namespace

ReducedPolynomial::ReducedPolynomial(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxRank) throw DomainError("rank out of range");
}

ReducedPolynomial ReducedPolynomial::one(int rank) {
  ReducedPolynomial p(rank);
  p.terms_.push_back({Monomial{}, Int(1)});
  return p;
}

ReducedPolynomial ReducedPolynomial::var(int rank, int i) {
  if (i < 1 || i > rank) throw DomainError("generator index out of range");
  ReducedPolynomial p(rank);
  p.terms_.push_back({Monomial::from({i}), Int(1)});
  return p;
}

ReducedPolynomial ReducedPolynomial::generator(int rank, int i, const Int& e) {
  if (i < 1 || i > rank) throw DomainError("generator index out of range");
  ReducedPolynomial p = one(rank);
  if (e != 0) p.terms_.push_back({Monomial::from({i}), e});
  return p;
}

ReducedPolynomial ReducedPolynomial::from_terms(int rank, std::vector<Term> terms) {
  ReducedPolynomial p(rank);
  for (const auto& t : terms)
    if (t.mono.len > rank || (t.mono.mask >> (rank + 1)) != 0) throw DomainError("monomial index exceeds rank");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void ReducedPolynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coef += t.coef;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coef == 0; }), out.end());
  terms_ = std::move(out);
}

Int ReducedPolynomial::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.mono < x; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return 0;
}

Int ReducedPolynomial::coeff(const std::vector<int>& idx) const {
  for (int i : idx)
    if (i < 1 || i > rank_) return 0;
  std::vector<int> s = idx;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return 0;
  return coeff(Monomial::from(idx));
}

Int ReducedPolynomial::constant() const { return coeff(Monomial{}); }

bool ReducedPolynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.len == 0 && terms_[0].coef == 1;
}

int ReducedPolynomial::max_degree() const { return terms_.empty() ? -1 : terms_.back().mono.len; }

ReducedPolynomial ReducedPolynomial::operator+(const ReducedPolynomial& o) const {
  if (rank_ != o.rank_) throw DomainError("rank mismatch");
  ReducedPolynomial r(rank_);
  r.terms_ = terms_;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  r.normalize();
  return r;
}

ReducedPolynomial ReducedPolynomial::operator-(const ReducedPolynomial& o) const { return *this + o.scaled(-1); }

ReducedPolynomial ReducedPolynomial::scaled(const Int& c) const {
  ReducedPolynomial r(rank_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

ReducedPolynomial ReducedPolynomial::operator*(const ReducedPolynomial& o) const {
  if (rank_ != o.rank_) throw DomainError("rank mismatch");
  Acc acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      if (a.mono.mask & b.mono.mask) continue;
      acc.add(a.mono.concat(b.mono), a.coef * b.coef);
    }
  ReducedPolynomial r(rank_);
  r.terms_.reserve(acc.map.size());
  for (auto& [k, v] : acc.map)
    if (v.second != 0) r.terms_.push_back({v.first, std::move(v.second)});
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  return r;
}

bool ReducedPolynomial::operator==(const ReducedPolynomial& o) const {
  if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

ReducedPolynomial ReducedPolynomial::homogeneous(int d) const {
  ReducedPolynomial r(rank_);
  for (const auto& t : terms_)
    if (t.mono.len == d) r.terms_.push_back(t);
  return r;
}

int ReducedPolynomial::lowest_positive_degree() const {
  for (const auto& t : terms_)
    if (t.mono.len > 0) return t.mono.len;
  return rank_ + 1;
}

ReducedPolynomial ReducedPolynomial::strip(int k) const {
  ReducedPolynomial r(rank_);
  for (const auto& t : terms_)
    if (!t.mono.contains(k)) r.terms_.push_back(t);
  return r;
}

ReducedPolynomial ReducedPolynomial::delete_index(int k) const {
  if (k < 1 || k > rank_) throw DomainError("index out of range");
  ReducedPolynomial r(rank_ - 1);
  for (const auto& t : terms_) {
    if (t.mono.contains(k)) continue;
    std::vector<int> idx = t.mono.indices();
    for (int& i : idx)
      if (i > k) --i;
    r.terms_.push_back({Monomial::from(idx), t.coef});
  }
  r.normalize();
  return r;
}

ReducedPolynomial ReducedPolynomial::with_rank(int rank) const {
  for (const auto& t : terms_)
    if (t.mono.len > 0 && (t.mono.mask >> (rank + 1)) != 0) throw DomainError("index exceeds new rank");
  ReducedPolynomial r(rank);
  r.terms_ = terms_;
  return r;
}

ReducedPolynomial ReducedPolynomial::relabel(const std::vector<int>& perm) const {
  ReducedPolynomial r(rank_);
  for (const auto& t : terms_) {
    std::vector<int> idx = t.mono.indices();
    for (int& i : idx) i = perm.at(i);
    r.terms_.push_back({Monomial::from(idx), t.coef});
  }
  r.normalize();
  return r;
}

ReducedPolynomial ReducedPolynomial::substitute(const std::vector<ReducedPolynomial>& images) const {
  ReducedPolynomial r(rank_);
  Acc acc;
  for (const auto& t : terms_) {
    ReducedPolynomial cur = ReducedPolynomial::one(rank_).scaled(t.coef);
    for (int p = 0; p < t.mono.len && !cur.is_zero(); ++p) cur = cur * images.at(t.mono.at(p));
    for (auto& u : cur.terms_) acc.add(u.mono, u.coef);
  }
  for (auto& [k, v] : acc.map)
    if (v.second != 0) r.terms_.push_back({v.first, std::move(v.second)});
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  return r;
}

std::string ReducedPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Int c = t.coef;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = boost::multiprecision::abs(c);
    if (t.mono.len == 0) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      for (int p = 0; p < t.mono.len; ++p) os << (p ? "*" : "") << 'X' << t.mono.at(p);
    }
    first = false;
  }
  return os.str();
}

ReducedPolynomial poly_multiply(const ReducedPolynomial& p, const ReducedPolynomial& q) { return p * q; }

ReducedPolynomial poly_inverse(const ReducedPolynomial& p) {
  if (p.constant() != 1) throw DomainError("poly_inverse needs constant term 1");
  ReducedPolynomial one = ReducedPolynomial::one(p.rank());
  ReducedPolynomial neg = (one - p);
  ReducedPolynomial result = one, power = one;
  for (int d = 1; d <= p.rank(); ++d) {
    power = power * neg;
    if (power.is_zero()) break;
    result = result + power;
  }
  return result;
}

// ---------------------------------------------------------------- expansion

ReducedPolynomial expand(const Word& w, int m) {
  ReducedPolynomial p = ReducedPolynomial::one(m);
  for (const auto& s : w.syllables()) {
    if (s.index < 1 || s.index > m) throw DomainError("generator index out of range");
    p = p * ReducedPolynomial::generator(m, s.index, s.exp);
  }
  return p;
}

namespace {

ReducedPolynomial poly_pow(const ReducedPolynomial& p, const Int& k) {
  ReducedPolynomial base = k < 0 ? poly_inverse(p) : p;
  Int n = boost::multiprecision::abs(k);
  ReducedPolynomial r = ReducedPolynomial::one(p.rank());
  while (n > 0) {
    if (boost::multiprecision::bit_test(n, 0)) r = r * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return r;
}

}  // namespace

ReducedPolynomial expand(const GroupExpr& e, int m) {
  switch (e.kind) {
    case GroupExpr::Kind::GenPower:
      return ReducedPolynomial::generator(m, e.gen.i, e.exponent);
    case GroupExpr::Kind::Product: {
      ReducedPolynomial p = ReducedPolynomial::one(m);
      for (const auto& c : e.children) p = p * expand(c, m);
      return p;
    }
    case GroupExpr::Kind::Commutator: {
      ReducedPolynomial a = expand(e.children[0], m), b = expand(e.children[1], m);
      return poly_inverse(a) * poly_inverse(b) * a * b;
    }
    case GroupExpr::Kind::Power:
      return poly_pow(expand(e.children[0], m), e.exponent);
  }
  return ReducedPolynomial::one(m);
}

bool rf_equal(const GroupExpr& a, const GroupExpr& b, int m) { return expand(a, m) == expand(b, m); }
bool rf_equal(const Word& a, const Word& b, int m) { return expand(a, m) == expand(b, m); }

int lcs_weight(const ReducedPolynomial& p) { return p.lowest_positive_degree(); }
int lcs_weight(const GroupExpr& w, int m) { return lcs_weight(expand(w, m)); }

// ---------------------------------------------------------------- elementary commutators

ElementaryCommutator ElementaryCommutator::leaf(int index, int sign) {
  auto n = std::make_shared<Node>();
  n->letter = {index, sign};
  return ElementaryCommutator(n);
}

ElementaryCommutator ElementaryCommutator::bracket(const ElementaryCommutator& a, const ElementaryCommutator& b) {
  auto n = std::make_shared<Node>();
  n->left = a.node_;
  n->right = b.node_;
  n->weight = a.weight() + b.weight();
  return ElementaryCommutator(n);
}

int ElementaryCommutator::multiplicity(int i) const {
  if (is_leaf()) return letter().index == i ? 1 : 0;
  return left().multiplicity(i) + right().multiplicity(i);
}

ElementaryCommutator ElementaryCommutator::inverse() const {
  if (is_leaf()) return leaf(letter().index, -letter().sign);
  return bracket(right(), left());
}

Word ElementaryCommutator::to_word() const {
  if (is_leaf()) return Word::gen(letter().index, letter().sign);
  return commutator(left().to_word(), right().to_word());
}

GroupExpr ElementaryCommutator::to_expr() const {
  if (is_leaf()) return GroupExpr::generator({letter().index, 0}, letter().sign);
  return GroupExpr::comm(left().to_expr(), right().to_expr());
}

std::string ElementaryCommutator::to_string() const {
  if (is_leaf()) return "x" + std::to_string(letter().index) + (letter().sign < 0 ? "^-1" : "");
  return "[" + left().to_string() + "," + right().to_string() + "]";
}

bool ElementaryCommutator::operator==(const ElementaryCommutator& o) const {
  if (is_leaf() != o.is_leaf()) return false;
  if (is_leaf()) return letter() == o.letter();
  return left() == o.left() && right() == o.right();
}

ElementaryCommutator basis_commutator(int j, const std::vector<int>& rest) {
  ElementaryCommutator c = ElementaryCommutator::leaf(j);
  for (int i : rest) c = ElementaryCommutator::bracket(c, ElementaryCommutator::leaf(i));
  return c;
}

std::vector<GradedTerm> decompose_graded(const ReducedPolynomial& p, int degree) {
  if (degree < 1) throw DomainError("degree must be positive");
  if (p.constant() != 1) throw DomainError("not a group element expansion");
  if (p.lowest_positive_degree() < degree) throw DomainError("element has lower central weight below the requested degree");
  const int m = p.rank();
  std::vector<GradedTerm> out;
  ReducedPolynomial check(m);
  for (const auto& t : p.terms()) {
    if (t.mono.len != degree) continue;
    std::vector<int> idx = t.mono.indices();
    if (idx[0] != *std::max_element(idx.begin(), idx.end())) continue;
    if (degree == 1) {
      out.push_back({ElementaryCommutator::leaf(idx[0]), t.coef});
      continue;
    }
    ElementaryCommutator c = basis_commutator(idx[0], std::vector<int>(idx.begin() + 1, idx.end()));
    out.push_back({c, t.coef});
  }
  for (const auto& g : out) check = check + expand(g.comm.to_word(), m).homogeneous(degree).scaled(g.exponent);
  if (!(check == p.homogeneous(degree))) throw InternalError("graded decomposition does not reproduce the degree block");
  return out;
}

std::vector<GradedTerm> decompose_graded(const GroupExpr& w, int degree, int m) {
  return decompose_graded(expand(w, m), degree);
}

namespace {

void nice_rec(const ElementaryCommutator& c, int m, std::vector<std::pair<ElementaryCommutator, int>>& out) {
  if (c.is_leaf()) throw DomainError("nice_product needs weight at least 2");
  ElementaryCommutator a = c.left(), b = c.right();
  if (a.contains(m) && b.contains(m)) throw DomainError("commutator is trivial in RF(m)");
  if (a.contains(m) || (!b.contains(m) && b.weight() < a.weight())) {
    ElementaryCommutator na = b.inverse();
    b = a;
    a = na;
  }
  if (a.is_leaf()) {
    int i = a.letter().index;
    if (a.letter().sign > 0)
      out.emplace_back(b.inverse(), i);
    else
      out.emplace_back(b, i);
    return;
  }
  std::vector<std::pair<ElementaryCommutator, int>> parts;
  nice_rec(a, m, parts);
  for (const auto& [aj, ij] : parts) {
    ElementaryCommutator t =
        ElementaryCommutator::bracket(ElementaryCommutator::bracket(b, ElementaryCommutator::leaf(ij)), aj);
    nice_rec(t, m, out);
    out.emplace_back(ElementaryCommutator::bracket(aj, b), ij);
  }
}

}  // namespace

std::vector<std::pair<ElementaryCommutator, int>> nice_product(const ElementaryCommutator& c, int m) {
  if (c.weight() < 2) throw DomainError("nice_product needs weight at least 2");
  if (c.weight() > m || expand(c.to_word(), m).is_one()) throw DomainError("commutator is trivial in RF(m)");
  std::vector<std::pair<ElementaryCommutator, int>> out;
  nice_rec(c, m, out);
  return out;
}

namespace {

// c^e as a word with the exponent on the innermost leaf: [a,b]^e = [a^e,b] in RF(m)
// for elementary a, b, so the length does not grow with |e|.
Word power_word(const ElementaryCommutator& c, const Int& e) {
  if (c.is_leaf()) return Word::gen(c.letter().index, e * c.letter().sign);
  return commutator(power_word(c.left(), e), c.right().to_word());
}

}  // namespace

Word word_from_poly(const ReducedPolynomial& p) {
  if (p.constant() != 1) throw DomainError("not a group element expansion");
  const int m = p.rank();
  Word w;
  ReducedPolynomial cur = ReducedPolynomial::one(m);
  int last = 0;
  for (int guard = 0; guard <= m + 1; ++guard) {
    ReducedPolynomial r = poly_inverse(cur) * p;
    if (r.is_one()) return w;
    int d = r.lowest_positive_degree();
    if (d <= last) throw InternalError("word reconstruction did not advance");
    last = d;
    for (const auto& g : decompose_graded(r, d)) {
      Word piece = power_word(g.comm, g.exponent);
      w *= piece;
      cur = cur * expand(piece, m);
    }
  }
  throw InternalError("word reconstruction did not terminate");
}

// ---------------------------------------------------------------- rewriting

Word RewrittenForm::z(int k) const {
  const Word& w = omegas.at(k);
  Word x = Word::gen(k);
  return right_side.at(k) ? commutator(x, w) : commutator(w, x);
}

Word RewrittenForm::reassemble() const {
  Word w;
  for (int k = m; k >= 1; --k) w *= Word::gen(k, alphas[k]);
  for (int k = 1; k <= m - 1; ++k) w *= z(k);
  return w;
}

namespace {

ReducedPolynomial poly_commutator(const ReducedPolynomial& a, const ReducedPolynomial& b) {
  return poly_inverse(a) * poly_inverse(b) * a * b;
}

}  // namespace

// Each omega is tracked as an expansion and re-emitted as a short basis-commutator
// word; flat concatenation grows to ~10^5 letters at m = 5.
RewrittenForm rewrite_generators_commutators(const Word& word, int m) {
  if (m < 1) throw DomainError("rank must be positive");
  ReducedPolynomial target = expand(word, m);
  RewrittenForm f;
  f.m = m;
  f.alphas.assign(m + 1, 0);
  f.right_side.assign(m + 1, false);
  f.omegas.assign(m + 1, Word{});
  for (int k = 1; k <= m; ++k) f.alphas[k] = target.coeff(std::vector<int>{k});
  for (int k = 1; k <= m; ++k) f.right_side[k] = f.alphas[k] > 0;
  ReducedPolynomial head_poly = ReducedPolynomial::one(m);
  for (int k = m; k >= 1; --k) head_poly = head_poly * ReducedPolynomial::generator(m, k, f.alphas[k]);
  std::vector<ReducedPolynomial> om(m + 1, ReducedPolynomial::one(m));
  int last = 1;
  for (int guard = 0; guard <= m + 1; ++guard) {
    ReducedPolynomial built = head_poly;
    for (int k = 1; k <= m - 1; ++k) {
      ReducedPolynomial x = ReducedPolynomial::generator(m, k);
      built = built * (f.right_side[k] ? poly_commutator(x, om[k]) : poly_commutator(om[k], x));
    }
    ReducedPolynomial r = poly_inverse(built) * target;
    if (r.is_one()) {
      for (int k = 1; k <= m - 1; ++k) f.omegas[k] = word_from_poly(om[k]);
      return f;
    }
    int d = r.lowest_positive_degree();
    if (d <= last) throw InternalError("generator/commutator rewrite did not advance");
    last = d;
    std::vector<ReducedPolynomial> D(m + 1, ReducedPolynomial::one(m));
    for (const auto& g : decompose_graded(r, d)) {
      int i = g.comm.right().letter().index;
      if (i == m) throw InternalError("basis commutator ends in the top generator");
      ReducedPolynomial head = expand(g.comm.left().to_word(), m);
      D[i] = D[i] * poly_pow(head, f.right_side[i] ? Int(-g.exponent) : g.exponent);
    }
    for (int i = 1; i <= m - 1; ++i) om[i] = om[i] * D[i];
  }
  throw InternalError("generator/commutator rewrite did not terminate");
}

Word DeltaForm::reassemble() const {
  Word w;
  for (int i = 1; i <= m; ++i) w *= Word::gen(i, alphas[i]);
  for (const auto& [ij, b] : betas) w *= commutator(Word::gen(ij.second), Word::gen(ij.first)).pow(b);
  for (const auto& [ij, om] : omegas)
    w *= commutator(commutator(om, Word::gen(ij.first)), Word::gen(ij.second));
  return w;
}

DeltaForm rewrite_delta_form(const Word& word, int m) {
  if (m < 1) throw DomainError("rank must be positive");
  ReducedPolynomial target = expand(word, m);
  DeltaForm f;
  f.m = m;
  f.alphas.assign(m + 1, 0);
  for (int k = 1; k <= m; ++k) f.alphas[k] = target.coeff(std::vector<int>{k});
  ReducedPolynomial head_poly = ReducedPolynomial::one(m);
  for (int i = 1; i <= m; ++i) head_poly = head_poly * ReducedPolynomial::generator(m, i, f.alphas[i]);
  auto x = [m](int i) { return ReducedPolynomial::generator(m, i); };
  std::map<std::pair<int, int>, ReducedPolynomial> om;
  int last = 1;
  for (int guard = 0; guard <= m + 1; ++guard) {
    ReducedPolynomial built = head_poly;
    for (const auto& [ij, b] : f.betas) built = built * poly_pow(poly_commutator(x(ij.second), x(ij.first)), b);
    for (const auto& [ij, p] : om) built = built * poly_commutator(poly_commutator(p, x(ij.first)), x(ij.second));
    ReducedPolynomial r = poly_inverse(built) * target;
    if (r.is_one()) {
      for (const auto& [ij, p] : om) f.omegas[ij] = word_from_poly(p);
      return f;
    }
    int d = r.lowest_positive_degree();
    if (d <= last) throw InternalError("delta rewrite did not advance");
    last = d;
    for (const auto& g : decompose_graded(r, d)) {
      if (d == 2) {
        int j = g.comm.left().letter().index, i = g.comm.right().letter().index;
        f.betas[{i, j}] += g.exponent;
        continue;
      }
      int b = g.comm.right().letter().index;
      ElementaryCommutator inner = g.comm.left();
      int a = inner.right().letter().index;
      auto it = om.try_emplace({a, b}, ReducedPolynomial::one(m)).first;
      it->second = it->second * poly_pow(expand(inner.left().to_word(), m), g.exponent);
    }
  }
  throw InternalError("delta rewrite did not terminate");
}

}  // namespace linkhom
