#include "linkhom/hlink.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace linkhom {

// ---------------------------------------------------------------- tuples

LongitudeTuple LongitudeTuple::trivial(int n) {
  if (n < 1 || n > kMaxRank) throw DomainError("component count out of range");
  LongitudeTuple t;
  t.n_ = n;
  t.ls_.assign(n + 1, ReducedPolynomial::one(n));
  return t;
}

LongitudeTuple LongitudeTuple::from_longitudes(std::vector<ReducedPolynomial> ls) {
  if (ls.size() < 2) throw DomainError("empty longitude tuple");
  LongitudeTuple t;
  t.n_ = static_cast<int>(ls.size()) - 1;
  for (int k = 1; k <= t.n_; ++k) {
    if (ls[k].rank() != t.n_) throw DomainError("longitude rank mismatch");
    if (ls[k].constant() != 1) throw DomainError("longitude is not a group element");
    for (const auto& term : ls[k].terms())
      if (term.mono.contains(k)) throw DomainError("longitude uses its own component index");
  }
  t.ls_ = std::move(ls);
  t.ls_[0] = ReducedPolynomial::one(t.n_);
  return t;
}

const ReducedPolynomial& LongitudeTuple::longitude(int k) const {
  if (k < 1 || k > n_) throw DomainError("component index out of range");
  return ls_[k];
}

Word LongitudeTuple::longitude_word(int k) const { return word_from_poly(longitude(k)); }

Int MilnorVector::get(const std::vector<int>& idx) const {
  auto it = mu.find(idx);
  return it == mu.end() ? Int(0) : it->second;
}

LongitudeTuple sl_generator(int i, int j, int n) {
  if (i < 1 || i >= j || j > n) throw DomainError("generator needs 1 <= i < j <= n");
  LongitudeTuple t = LongitudeTuple::trivial(n);
  std::vector<ReducedPolynomial> ls = t.longitudes();
  ls[i] = ReducedPolynomial::generator(n, j);
  ls[j] = ReducedPolynomial::generator(n, i);
  // Strands strictly between i and j see the clasp as the commutator [x_j, x_i].
  ReducedPolynomial between = expand(commutator(Word::gen(j), Word::gen(i)), n);
  for (int k = i + 1; k < j; ++k) ls[k] = between;
  return LongitudeTuple::from_longitudes(std::move(ls));
}

std::vector<ReducedPolynomial> conjugation_images(const LongitudeTuple& t) {
  const int n = t.n();
  std::vector<ReducedPolynomial> img(n + 1, ReducedPolynomial(n));
  for (int m = 1; m <= n; ++m) {
    const ReducedPolynomial& l = t.longitude(m);
    img[m] = poly_inverse(l) * ReducedPolynomial::var(n, m) * l;
  }
  return img;
}

LongitudeTuple sl_stack(const LongitudeTuple& t, const LongitudeTuple& s) {
  if (t.n() != s.n()) throw DomainError("stacking tuples of different sizes");
  const int n = t.n();
  auto img = conjugation_images(t);
  std::vector<ReducedPolynomial> ls(n + 1, ReducedPolynomial::one(n));
  for (int k = 1; k <= n; ++k) ls[k] = (t.longitude(k) * s.longitude(k).substitute(img)).strip(k);
  return LongitudeTuple::from_longitudes(std::move(ls));
}

bool sl_equal(const LongitudeTuple& a, const LongitudeTuple& b) {
  if (a.n() != b.n()) return false;
  for (int k = 1; k <= a.n(); ++k)
    if (!(a.longitude(k) == b.longitude(k))) return false;
  return true;
}

bool sl_is_trivial(const LongitudeTuple& t) {
  for (int k = 1; k <= t.n(); ++k)
    if (!t.longitude(k).is_one()) return false;
  return true;
}

namespace {

LongitudeTuple approx_inverse(const LongitudeTuple& t) {
  std::vector<ReducedPolynomial> ls = t.longitudes();
  for (int k = 1; k <= t.n(); ++k) ls[k] = poly_inverse(ls[k]);
  return LongitudeTuple::from_longitudes(std::move(ls));
}

}  // namespace

LongitudeTuple sl_invert(const LongitudeTuple& t) {
  // Each correction step pushes the defect one degree higher.
  LongitudeTuple u = approx_inverse(t);
  for (int it = 0; it <= t.n() + 1; ++it) {
    LongitudeTuple r = sl_stack(t, u);
    if (sl_is_trivial(r)) return u;
    u = sl_stack(u, approx_inverse(r));
  }
  throw InternalError("tuple inversion did not converge");
}

LongitudeTuple sl_power(const LongitudeTuple& t, const Int& k) {
  LongitudeTuple base = k < 0 ? sl_invert(t) : t;
  Int e = boost::multiprecision::abs(k);
  LongitudeTuple r = LongitudeTuple::trivial(t.n());
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) r = sl_stack(r, base);
    e >>= 1;
    if (e > 0) base = sl_stack(base, base);
  }
  return r;
}

LongitudeTuple sl_commutator(const LongitudeTuple& a, const LongitudeTuple& b) {
  return sl_stack(sl_stack(sl_invert(a), sl_invert(b)), sl_stack(a, b));
}

LongitudeTuple sl_delete_component(const LongitudeTuple& t, int k) {
  if (k < 1 || k > t.n()) throw DomainError("component index out of range");
  if (t.n() < 2) throw DomainError("cannot delete the only component");
  std::vector<ReducedPolynomial> ls(1, ReducedPolynomial::one(t.n() - 1));
  for (int m = 1; m <= t.n(); ++m)
    if (m != k) ls.push_back(t.longitude(m).delete_index(k));
  return LongitudeTuple::from_longitudes(std::move(ls));
}

LongitudeTuple sl_add_trivial(const LongitudeTuple& t) {
  const int n = t.n() + 1;
  if (n > kMaxRank) throw DomainError("component count out of range");
  std::vector<ReducedPolynomial> ls(n + 1, ReducedPolynomial::one(n));
  for (int m = 1; m < n; ++m) ls[m] = t.longitude(m).with_rank(n);
  return LongitudeTuple::from_longitudes(std::move(ls));
}

namespace {

// Swaps components k and k+1 by conjugating with the braid generator
// x_k -> x_{k+1}, x_{k+1} -> x_{k+1} x_k x_{k+1}^-1.
LongitudeTuple swap_adjacent(const LongitudeTuple& t, int k) {
  const int n = t.n();
  std::vector<ReducedPolynomial> fwd(n + 1, ReducedPolynomial(n)), back(n + 1, ReducedPolynomial(n));
  for (int m = 1; m <= n; ++m) fwd[m] = back[m] = ReducedPolynomial::var(n, m);
  ReducedPolynomial one = ReducedPolynomial::one(n);
  fwd[k] = ReducedPolynomial::var(n, k + 1);
  fwd[k + 1] = expand(Word::gen(k + 1) * Word::gen(k) * Word::gen(k + 1, -1), n) - one;
  back[k + 1] = ReducedPolynomial::var(n, k);
  back[k] = expand(Word::gen(k, -1) * Word::gen(k + 1) * Word::gen(k), n) - one;

  auto img = conjugation_images(t);
  std::vector<ReducedPolynomial> ls(n + 1, one);
  for (int j = 1; j <= n; ++j) {
    ReducedPolynomial p = back[j].substitute(img).substitute(fwd);
    std::vector<ReducedPolynomial::Term> terms;
    for (const auto& term : p.terms()) {
      if (term.mono.len == 0 || term.mono.at(0) != j) continue;
      std::vector<int> idx = term.mono.indices();
      terms.push_back({Monomial::from(std::vector<int>(idx.begin() + 1, idx.end())), term.coef});
    }
    ls[j] = ReducedPolynomial::from_terms(n, std::move(terms));
  }
  return LongitudeTuple::from_longitudes(std::move(ls));
}

}  // namespace

LongitudeTuple sl_permute(const LongitudeTuple& t, const std::vector<int>& sigma) {
  const int n = t.n();
  if (static_cast<int>(sigma.size()) != n + 1) throw DomainError("permutation has the wrong length");
  std::vector<int> arr(sigma.begin(), sigma.end());
  std::vector<int> seen(n + 1, 0);
  for (int p = 1; p <= n; ++p) {
    if (arr[p] < 1 || arr[p] > n || seen[arr[p]]++) throw DomainError("not a permutation");
  }
  LongitudeTuple r = t;
  // Sorting arr by adjacent swaps factors sigma; the swaps apply in the order performed.
  for (int pass = 0; pass < n; ++pass)
    for (int p = 1; p < n; ++p)
      if (arr[p] > arr[p + 1]) {
        std::swap(arr[p], arr[p + 1]);
        r = swap_adjacent(r, p);
      }
  return r;
}

MilnorVector milnor(const LongitudeTuple& t) {
  MilnorVector v;
  v.n = t.n();
  for (int k = 1; k <= t.n(); ++k)
    for (const auto& term : t.longitude(k).terms()) {
      if (term.mono.len == 0) continue;
      std::vector<int> idx = term.mono.indices();
      idx.push_back(k);
      v.mu[idx] = term.coef;
    }
  return v;
}

GroupExpr h_generator(int i, int j, const Int& e) { return GroupExpr::generator({i, j}, e); }

GroupExpr h_triple(int i, int j, int k) { return GroupExpr::comm(h_generator(i, k), h_generator(i, j)); }

GroupExpr h_quad(int i, int j, int k, int l) {
  return GroupExpr::comm(GroupExpr::comm(h_generator(i, l), h_generator(i, k)), h_generator(i, j));
}

LongitudeTuple sl_evaluate(const GroupExpr& e, int n) {
  switch (e.kind) {
    case GroupExpr::Kind::GenPower:
      return sl_power(sl_generator(e.gen.i, e.gen.j, n), e.exponent);
    case GroupExpr::Kind::Product: {
      LongitudeTuple r = LongitudeTuple::trivial(n);
      for (const auto& c : e.children) r = sl_stack(r, sl_evaluate(c, n));
      return r;
    }
    case GroupExpr::Kind::Commutator:
      return sl_commutator(sl_evaluate(e.children[0], n), sl_evaluate(e.children[1], n));
    case GroupExpr::Kind::Power:
      return sl_power(sl_evaluate(e.children[0], n), e.exponent);
  }
  return LongitudeTuple::trivial(n);
}

// ---------------------------------------------------------------- H(4) normal form

const std::array<const char*, H4NormalForm::kSize>& H4NormalForm::labels() {
  static const std::array<const char*, kSize> l = {"12",  "13",  "14",  "23",   "24",  "34",
                                                   "123", "124", "134", "234", "1234", "1324"};
  return l;
}

int H4NormalForm::index_of(const std::string& label) {
  const auto& l = labels();
  for (int i = 0; i < kSize; ++i)
    if (label == l[i]) return i;
  throw DomainError("unknown normal form label: " + label);
}

bool H4NormalForm::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

std::string H4NormalForm::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < kSize; ++i) os << (i ? " " : "") << labels()[i] << '=' << a[i];
  return os.str();
}

int pair_slot(int i, int j) {
  static const int slot[5][5] = {
      {-1, -1, -1, -1, -1}, {-1, -1, A12, A13, A14}, {-1, -1, -1, A23, A24}, {-1, -1, -1, -1, A34}, {-1, -1, -1, -1, -1}};
  if (i < 1 || j > 4 || i >= j) throw DomainError("not a pair of H(4)");
  return slot[i][j];
}

namespace {

const int kPairs[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
const int kTriples[4][3] = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};

}  // namespace

GroupExpr h4_basis_expr(int slot) {
  if (slot < 0 || slot >= H4NormalForm::kSize) throw DomainError("basis slot out of range");
  if (slot <= A34) return h_generator(kPairs[slot][0], kPairs[slot][1]);
  if (slot <= A234) {
    const int* t = kTriples[slot - A123];
    return h_triple(t[0], t[1], t[2]);
  }
  return slot == A1234 ? h_quad(1, 2, 3, 4) : h_quad(1, 3, 2, 4);
}

const LongitudeTuple& h4_basis_tuple(int slot) {
  static const std::vector<LongitudeTuple> cache = [] {
    std::vector<LongitudeTuple> v;
    for (int s = 0; s < H4NormalForm::kSize; ++s) v.push_back(sl_evaluate(h4_basis_expr(s), 4));
    return v;
  }();
  if (slot < 0 || slot >= H4NormalForm::kSize) throw DomainError("basis slot out of range");
  return cache[slot];
}

LongitudeTuple h4_realize(const H4NormalForm& nf) {
  LongitudeTuple r = LongitudeTuple::trivial(4);
  for (int s = 0; s < H4NormalForm::kSize; ++s)
    if (nf[s] != 0) r = sl_stack(r, sl_power(h4_basis_tuple(s), nf[s]));
  return r;
}

namespace {

// Coefficients of all degree-d monomials across the four longitudes, in a fixed order.
std::vector<Int> degree_vector(const LongitudeTuple& t, int d) {
  std::vector<Int> v;
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int k) {
    if (static_cast<int>(idx.size()) == d) {
      v.push_back(t.longitude(k).coeff(Monomial::from(idx)));
      return;
    }
    for (int i = 1; i <= 4; ++i) {
      if (i == k || std::find(idx.begin(), idx.end(), i) != idx.end()) continue;
      idx.push_back(i);
      rec(k);
      idx.pop_back();
    }
  };
  for (int k = 1; k <= 4; ++k) rec(k);
  return v;
}

// Exact integer solution of sum_c x_c cols[c] = target, if one exists.
std::optional<std::vector<Int>> solve_exact(const std::vector<std::vector<Int>>& cols, const std::vector<Int>& target) {
  const std::size_t rows = target.size(), nc = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(nc + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < nc; ++c) m[r][c] = Rational(cols[c][r]);
    m[r][nc] = Rational(target[r]);
  }
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < nc && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[row][c];
      for (std::size_t k = c; k <= nc; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  if (static_cast<std::size_t>(pivot_col.size()) != nc) throw InternalError("normal form basis is degenerate");
  for (std::size_t r = row; r < rows; ++r)
    if (m[r][nc] != 0) return std::nullopt;
  std::vector<Int> x(nc);
  for (std::size_t r = 0; r < nc; ++r) {
    Rational v = m[r][nc] / m[r][pivot_col[r]];
    if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
    x[pivot_col[r]] = boost::multiprecision::numerator(v);
  }
  return x;
}

void peel(LongitudeTuple& t, H4NormalForm& nf, int first, int last, int degree) {
  std::vector<std::vector<Int>> cols;
  for (int s = first; s <= last; ++s) cols.push_back(degree_vector(h4_basis_tuple(s), degree));
  auto x = solve_exact(cols, degree_vector(t, degree));
  if (!x) throw DomainError("tuple is not an element of H(4)");
  H4NormalForm part;
  for (int s = first; s <= last; ++s) part[s] = nf[s] = (*x)[s - first];
  t = sl_stack(sl_invert(h4_realize(part)), t);
}

}  // namespace

H4NormalForm h4_normalize(const LongitudeTuple& t) {
  if (t.n() != 4) throw DomainError("h4_normalize needs a 4-component tuple");
  H4NormalForm nf, first;
  for (int s = A12; s <= A34; ++s) nf[s] = first[s] = t.longitude(kPairs[s][1]).coeff(std::vector<int>{kPairs[s][0]});
  LongitudeTuple rest = sl_stack(sl_invert(h4_realize(first)), t);
  peel(rest, nf, A123, A234, 2);
  peel(rest, nf, A1234, A1324, 3);
  if (!sl_is_trivial(rest)) throw DomainError("tuple is not an element of H(4)");
  return nf;
}

// ---------------------------------------------------------------- multiplication table

namespace {

using Entry = std::vector<std::pair<int, int>>;

// [A, x_g] for A a pair or triple basis element and g a pair.
const std::array<std::array<Entry, 6>, 10>& commutator_table() {
  static const std::array<std::array<Entry, 6>, 10> t = [] {
    std::array<std::array<Entry, 6>, 10> r{};
    auto set = [&](int a, int g, Entry e) { r[a][g] = std::move(e); };
    set(A12, A13, {{A123, -1}});
    set(A12, A14, {{A124, -1}});
    set(A12, A23, {{A123, 1}});
    set(A12, A24, {{A124, 1}});
    set(A13, A12, {{A123, 1}});
    set(A13, A14, {{A134, -1}});
    set(A13, A23, {{A123, -1}});
    set(A13, A24, {{A1324, 1}});
    set(A13, A34, {{A134, 1}});
    set(A14, A12, {{A124, 1}});
    set(A14, A13, {{A134, 1}});
    set(A14, A24, {{A124, -1}});
    set(A14, A34, {{A134, -1}});
    set(A23, A12, {{A123, -1}});
    set(A23, A13, {{A123, 1}});
    set(A23, A24, {{A234, -1}});
    set(A23, A34, {{A234, 1}});
    set(A24, A12, {{A124, -1}});
    set(A24, A13, {{A1324, -1}});
    set(A24, A14, {{A124, 1}});
    set(A24, A23, {{A234, 1}});
    set(A24, A34, {{A234, -1}});
    set(A34, A13, {{A134, -1}});
    set(A34, A14, {{A134, 1}});
    set(A34, A23, {{A234, -1}});
    set(A34, A24, {{A234, 1}});
    set(A123, A14, {{A1234, -1}, {A1324, 1}});
    set(A123, A24, {{A1324, -1}});
    set(A123, A34, {{A1234, 1}});
    set(A124, A13, {{A1324, 1}});
    set(A124, A23, {{A1234, 1}, {A1324, -1}});
    set(A124, A34, {{A1234, -1}});
    set(A134, A12, {{A1234, 1}});
    set(A134, A23, {{A1234, -1}, {A1324, 1}});
    set(A134, A24, {{A1324, -1}});
    set(A234, A12, {{A1234, -1}});
    set(A234, A13, {{A1324, 1}});
    set(A234, A14, {{A1234, 1}, {A1324, -1}});
    return r;
  }();
  return t;
}

// Adds scale * [v, x_g] to out, v supported on triples.
void add_triple_commutator(H4NormalForm& out, const H4NormalForm& v, int g, const Int& scale) {
  if (scale == 0) return;
  for (int s = A123; s <= A234; ++s) {
    if (v[s] == 0) continue;
    for (const auto& [q, e] : commutator_table()[s][g]) out[q] += scale * v[s] * e;
  }
}

// x * x_f^d by collection.
void right_multiply_pair(H4NormalForm& x, int f, const Int& d) {
  if (d == 0) return;
  // Pull x_f^d left past A2; the commutator is central.
  H4NormalForm central;
  add_triple_commutator(central, x, f, d);
  H4NormalForm triples;  // K-terms that end up in A2
  for (int h = A34; h > f; --h) {
    const Int& a = x[h];
    if (a == 0) continue;
    // [x_h^a, x_f^d] = c^{ad} [c,x_h]^{d C(a,2)} [c,x_f]^{a C(d,2)}, c = [x_h, x_f].
    H4NormalForm c;
    for (const auto& [q, e] : commutator_table()[h][f]) c[q] += e;
    H4NormalForm k2;
    for (int s = A123; s <= A234; ++s) k2[s] = c[s] * a * d;
    for (int s = A1234; s <= A1324; ++s) central[s] += c[s] * a * d;
    add_triple_commutator(central, c, h, d * binom2(a));
    add_triple_commutator(central, c, f, a * binom2(d));
    // The triple part of K sits left of the later pair powers; move it right.
    for (int h2 = h + 1; h2 <= A34; ++h2) add_triple_commutator(central, k2, h2, x[h2]);
    for (int s = A123; s <= A234; ++s) triples[s] += k2[s];
  }
  x[f] += d;
  for (int s = A123; s <= A234; ++s) x[s] += triples[s];
  for (int s = A1234; s <= A1324; ++s) x[s] += central[s];
}

}  // namespace

H4NormalForm h4_basis(int slot, const Int& e) {
  if (slot < 0 || slot >= H4NormalForm::kSize) throw DomainError("basis slot out of range");
  H4NormalForm nf;
  nf[slot] = e;
  return nf;
}

H4NormalForm h4_multiply(const H4NormalForm& x, const H4NormalForm& y) {
  H4NormalForm r = x;
  for (int f = A12; f <= A34; ++f) right_multiply_pair(r, f, y[f]);
  for (int s = A123; s <= A1324; ++s) r[s] += y[s];
  return r;
}

H4NormalForm h4_inverse(const H4NormalForm& x) {
  H4NormalForm r;
  for (int s = A123; s <= A1324; ++s) r[s] = -x[s];
  for (int f = A34; f >= A12; --f) right_multiply_pair(r, f, -x[f]);
  return r;
}

H4NormalForm h4_power(const H4NormalForm& x, const Int& k) {
  H4NormalForm base = k < 0 ? h4_inverse(x) : x;
  Int e = boost::multiprecision::abs(k);
  H4NormalForm r;
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) r = h4_multiply(r, base);
    e >>= 1;
    if (e > 0) base = h4_multiply(base, base);
  }
  return r;
}

H4NormalForm h4_commutator_entry(int basis_slot, int g) {
  if (basis_slot < 0 || basis_slot > A234) throw DomainError("not a pair or triple basis element");
  if (g < A12 || g > A34) throw DomainError("not a generator pair");
  return h4_normalize(sl_commutator(h4_basis_tuple(basis_slot), h4_basis_tuple(g)));
}

H4NormalForm h4_table_entry(int basis_slot, int g) {
  if (basis_slot < 0 || basis_slot > A234) throw DomainError("not a pair or triple basis element");
  if (g < A12 || g > A34) throw DomainError("not a generator pair");
  H4NormalForm nf;
  for (const auto& [q, e] : commutator_table()[basis_slot][g]) nf[q] += e;
  return nf;
}

// ---------------------------------------------------------------- conjugate families

namespace {

struct FamilyShape {
  int pair, t1, t2;  // the two triples that may appear
  bool has_delta;    // free (gamma, delta) with gamma + delta = alpha*beta
  int fixed_slot;    // slot tied to alpha*beta (sign below), or -1
  int fixed_sign;
  int gamma_slot;    // free slot
};

FamilyShape family_shape(int i, int j) {
  switch (pair_slot(i, j)) {
    case A12: return {A12, A123, A124, false, A1324, -1, A1234};
    case A13: return {A13, A123, A134, false, A1234, 1, A1324};
    case A14: return {A14, A124, A134, true, -1, 0, A1234};
    case A23: return {A23, A123, A234, true, -1, 0, A1234};
    case A24: return {A24, A124, A234, false, A1234, 1, A1324};
    default: return {A34, A134, A234, false, A1324, -1, A1234};
  }
}

}  // namespace

H4NormalForm h4_conjugate_family(const ConjugateParams& p) {
  FamilyShape f = family_shape(p.i, p.j);
  H4NormalForm nf;
  nf[f.pair] = 1;
  nf[f.t1] = p.alpha;
  nf[f.t2] = p.beta;
  nf[f.gamma_slot] = p.gamma;
  if (f.has_delta) {
    if (p.gamma + p.delta != p.alpha * p.beta) throw DomainError("family constraint gamma + delta = alpha*beta violated");
    nf[A1324] = p.delta;
  } else {
    nf[f.fixed_slot] = f.fixed_sign * p.alpha * p.beta;
  }
  return nf;
}

std::optional<ConjugateParams> h4_is_conjugate(const H4NormalForm& nf, int i, int j) {
  FamilyShape f = family_shape(i, j);
  for (int s = 0; s < H4NormalForm::kSize; ++s) {
    bool allowed = s == f.pair || s == f.t1 || s == f.t2 || s == A1234 || s == A1324;
    if (!allowed && nf[s] != 0) return std::nullopt;
  }
  if (nf[f.pair] != 1) return std::nullopt;
  ConjugateParams p;
  p.i = i;
  p.j = j;
  p.alpha = nf[f.t1];
  p.beta = nf[f.t2];
  p.gamma = nf[f.gamma_slot];
  if (f.has_delta) {
    p.delta = nf[A1324];
    if (p.gamma + p.delta != p.alpha * p.beta) return std::nullopt;
  } else if (nf[f.fixed_slot] != f.fixed_sign * p.alpha * p.beta) {
    return std::nullopt;
  }
  return p;
}

}  // namespace linkhom
