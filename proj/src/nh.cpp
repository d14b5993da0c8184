#include "linkhom/nh.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace linkhom {

namespace {

using i64 = std::int64_t;

i64 abs_of(i64 a) { return a < 0 ? -a : a; }
Int abs_of(const Int& a) { return boost::multiprecision::abs(a); }
i64 gcd_of2(i64 a, i64 b) { return std::gcd(a, b); }
Int gcd_of2(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
bool odd(i64 a) { return (a & 1) != 0; }
bool odd(const Int& a) { return is_odd(a); }

template <class T>
bool member(const T& a, std::initializer_list<T> gens) {
  T g = 0;
  for (const T& x : gens) g = gcd_of2(g, x);
  g = abs_of(g);
  if (g == 0) return a == 0;
  return a % g == 0;
}

template <class T>
std::optional<T> zero_linking_value(const std::array<T, 12>& a) {
  const T &t123 = a[A123], &t124 = a[A124], &t134 = a[A134], &t234 = a[A234];
  const T &q1 = a[A1234], &q2 = a[A1324];
  const T qs = q1 + q2;
  if (t123 == 0 && t124 == 0 && t134 == 0 && t234 == 0 && q1 == 0 && q2 == 0) return T(0);
  bool two = (member(q2, {t123, t124}) && t134 == 0 && t234 == 0) ||
             (member(q1, {t123, t134}) && t124 == 0 && t234 == 0) ||
             (member(qs, {t124, t134}) && t123 == 0 && t234 == 0) ||
             (member(qs, {t123, t234}) && t124 == 0 && t134 == 0) ||
             (member(q1, {t124, t234}) && t123 == 0 && t134 == 0) ||
             (member(q2, {t134, t234}) && t123 == 0 && t124 == 0);
  if (two) return T(2);
  bool four = t123 == 0 || t124 == 0 || t134 == 0 || t234 == 0 || member(q2, {t123, t124, t134, t234}) ||
              member(q1, {t123, t124, t134, t234}) || member(qs, {t123, t124, t134, t234});
  return T(four ? 4 : 6);
}

// Case tables for a link whose linking pattern is already in normalized position
// (lk12 > 0 and maximal in absolute value).  `relaxed` drops the maximality
// requirement for the patterns whose value is Lambda outright.
template <class T>
std::optional<T> case_value(const std::array<T, 12>& a, bool relaxed) {
  T lam = 0;
  for (int s = A12; s <= A34; ++s) lam += abs_of(a[s]);
  if (lam == 0) return zero_linking_value(a);

  bool nz[6];
  for (int s = A12; s <= A34; ++s) nz[s] = a[s] != 0;
  bool path = nz[A12] && nz[A23] && nz[A34];
  bool triangle = nz[A12] && nz[A13] && nz[A23];
  if (relaxed) {
    if (a[A12] > 0 && (path || triangle)) return lam;
    return std::nullopt;
  }

  const T& lk = a[A12];
  if (lk <= 0) return std::nullopt;
  for (int s = A13; s <= A34; ++s)
    if (abs_of(a[s]) > lk) return std::nullopt;

  const T &t123 = a[A123], &t124 = a[A124], &t134 = a[A134], &t234 = a[A234], &q2 = a[A1324];
  int count = 0;
  for (bool b : nz) count += b;
  auto only = [&](std::initializer_list<int> slots) {
    if (static_cast<int>(slots.size()) != count) return false;
    for (int s : slots)
      if (!nz[s]) return false;
    return true;
  };

  if (only({A12})) {
    if (lk == 1) {
      if (t134 == 0 && t234 == 0 && q2 == -t123 * t124) return T(1);
      if (t134 == 0 || t234 == 0 || member(T(q2 + t123 * t124), {t134, t234})) return T(3);
      return T(5);
    }
    if (lk == 2) {
      if (t134 == 0 && t234 == 0 && (odd(t123) || odd(t124) || !odd(q2))) return T(2);
      if (t134 == 0 || t234 == 0 || odd(t123) || odd(t124) || odd(t134) || odd(t234) || !odd(q2)) return T(4);
      return T(6);
    }
    return (t134 == 0 && t234 == 0) ? lam : T(lam + 2);
  }
  if (only({A12, A34})) {
    const T& lk34 = a[A34];
    if (lk34 <= 0) return std::nullopt;
    if (lk == 1) return q2 == -t123 * t124 - t134 * t234 ? T(2) : T(4);
    if (lk == 2 && lk34 == 1) return (!odd(T(q2 + t134 * t234)) || odd(t123) || odd(t124)) ? T(3) : T(5);
    if (lk == 2) {
      bool some_odd = odd(t123) || odd(t124) || odd(t134) || odd(t234);
      return (some_odd || !odd(q2)) ? lam : T(lam + 2);
    }
    return lam;
  }
  if (only({A12, A13})) return t234 == 0 ? lam : T(lam + 2);
  if (count >= 3 && (path || triangle)) return lam;
  if (only({A12, A13, A14})) return t234 == 0 ? lam : T(lam + 2);
  return std::nullopt;
}

std::array<Int, 12> to_array(const H4NormalForm& nf) { return nf.a; }

// Component bitmask (bit c-1) of each normal-form slot.
const std::array<int, 12>& slot_components() {
  static const std::array<int, 12> bits = {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100,
                                           0b0111, 0b1011, 0b1101, 0b1110, 0b1111, 0b1111};
  return bits;
}

struct PermutationImages {
  std::vector<std::array<H4NormalForm, 12>> img;  // [perm][slot]
  std::vector<std::array<std::array<i64, 6>, 6>> linear;  // [perm][row s-6][col t-6]
};

H4NormalForm h4_comm(const H4NormalForm& g, const H4NormalForm& h) {
  return h4_multiply(h4_multiply(h4_inverse(g), h4_inverse(h)), h4_multiply(g, h));
}

const PermutationImages& permutation_images() {
  static const PermutationImages cache = [] {
    PermutationImages p;
    for (const auto& sigma : h4_permutations()) {
      std::array<H4NormalForm, 12> im;
      for (int s = A12; s <= A34; ++s) im[s] = h4_normalize(sl_permute(h4_basis_tuple(s), sigma));
      // Higher basis elements are iterated commutators; the permutation acts as an automorphism.
      im[A123] = h4_comm(im[A13], im[A12]);
      im[A124] = h4_comm(im[A14], im[A12]);
      im[A134] = h4_comm(im[A14], im[A13]);
      im[A234] = h4_comm(im[A24], im[A23]);
      im[A1234] = h4_comm(h4_comm(im[A14], im[A13]), im[A12]);
      im[A1324] = h4_comm(h4_comm(im[A14], im[A12]), im[A13]);
      std::array<std::array<i64, 6>, 6> lin{};
      for (int t = A123; t <= A1324; ++t) {
        for (int s = A12; s <= A34; ++s)
          if (im[t][s] != 0) throw InternalError("permuted higher basis element has linking");
        for (int s = A123; s <= A1324; ++s) lin[s - A123][t - A123] = static_cast<i64>(im[t][s]);
      }
      p.img.push_back(im);
      p.linear.push_back(lin);
    }
    return p;
  }();
  return cache;
}

bool fits_fast_path(const H4NormalForm& nf) {
  static const Int limit = Int(1) << 20;
  for (int s = A12; s <= A34; ++s)
    if (nf[s] != 0) return false;
  for (int s = A123; s <= A1324; ++s)
    if (abs_of(nf[s]) > limit) return false;
  return true;
}

template <class T>
void apply_mask(std::array<T, 12>& a, int mask) {
  const auto& bits = slot_components();
  for (int s = 0; s < 12; ++s)
    if (__builtin_popcount(bits[s] & mask) & 1) a[s] = -a[s];
}

template <class T>
void collect(const std::array<T, 12>& image, std::optional<T>& value, bool relaxed) {
  for (int mask = 0; mask < 16; ++mask) {
    std::array<T, 12> b = image;
    apply_mask(b, mask);
    auto v = case_value(b, relaxed);
    if (!v) continue;
    if (value && *value != *v) throw InternalError("symmetry images disagree on n_h");
    value = v;
  }
}

i64 nh_exact_4_fast(const H4NormalForm& nf) {
  const auto& pi = permutation_images();
  std::array<i64, 6> x;
  for (int t = 0; t < 6; ++t) x[t] = static_cast<i64>(nf[A123 + t]);
  std::optional<i64> value;
  for (std::size_t p = 0; p < pi.linear.size(); ++p) {
    std::array<i64, 12> image{};
    for (int s = 0; s < 6; ++s) {
      i64 acc = 0;
      for (int t = 0; t < 6; ++t) acc += pi.linear[p][s][t] * x[t];
      image[A123 + s] = acc;
    }
    collect(image, value, false);
  }
  if (!value) throw InternalError("no symmetry image matches a case table");
  return *value;
}

}  // namespace

Int lambda(const MilnorVector& v) {
  Int s = 0;
  for (int i = 1; i <= v.n; ++i)
    for (int j = i + 1; j <= v.n; ++j) s += abs_of(v.get({i, j}));
  return s;
}

Int lambda3(const MilnorVector& v) {
  Int s = 0;
  for (int i = 1; i <= v.n; ++i)
    for (int j = i + 1; j <= v.n; ++j)
      for (int k = j + 1; k <= v.n; ++k) s += abs_of(v.get({i, j, k}));
  return s;
}

Int lambda(const H4NormalForm& nf) {
  Int s = 0;
  for (int p = A12; p <= A34; ++p) s += abs_of(nf[p]);
  return s;
}

int q_count(const MilnorVector& v, int n) {
  int q = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      if (v.get({i, j}) == 0) ++q;
  return q;
}

Int nh_exact_3(const MilnorVector& v) {
  if (v.n != 3) throw DomainError("nh_exact_3 needs a 3-component vector");
  Int lam = lambda(v);
  if (lam != 0) return lam;
  return v.get({1, 2, 3}) != 0 ? Int(2) : Int(0);
}

bool in_ideal(const Int& a, const std::vector<Int>& gens) {
  Int g = gcd_of(gens);
  if (g == 0) return a == 0;
  return a % g == 0;
}

MilnorVector reorient(const MilnorVector& v, const OrientationMask& mask) {
  if (static_cast<int>(mask.size()) != v.n + 1) throw DomainError("mask has the wrong length");
  MilnorVector r = v;
  for (auto& [idx, val] : r.mu) {
    int flips = 0;
    for (int c : idx) flips += mask.at(c) < 0;
    if (flips & 1) val = -val;
  }
  return r;
}

H4NormalForm reorient(const H4NormalForm& nf, const OrientationMask& mask) {
  if (mask.size() != 5) throw DomainError("mask has the wrong length");
  int bits = 0;
  for (int c = 1; c <= 4; ++c)
    if (mask[c] < 0) bits |= 1 << (c - 1);
  H4NormalForm r = nf;
  apply_mask(r.a, bits);
  return r;
}

const std::vector<std::vector<int>>& h4_permutations() {
  static const std::vector<std::vector<int>> perms = [] {
    std::vector<std::vector<int>> out;
    std::vector<int> p = {0, 1, 2, 3, 4};
    do out.push_back(p);
    while (std::next_permutation(p.begin() + 1, p.end()));
    return out;
  }();
  return perms;
}

H4NormalForm h4_permute(const H4NormalForm& nf, int perm_index) {
  const auto& pi = permutation_images();
  const auto& im = pi.img.at(perm_index);
  H4NormalForm r;
  for (int s = A12; s <= A34; ++s)
    if (nf[s] != 0) r = h4_multiply(r, h4_power(im[s], nf[s]));
  for (int t = A123; t <= A1324; ++t)
    if (nf[t] != 0)
      for (int s = A123; s <= A1324; ++s) r[s] += im[t][s] * nf[t];
  return r;
}

std::optional<Int> h4_case_value(const H4NormalForm& nf) { return case_value(to_array(nf), false); }

Int nh_exact_4(const H4NormalForm& nf) {
  if (fits_fast_path(nf)) return Int(nh_exact_4_fast(nf));
  const std::size_t np = h4_permutations().size();
  std::vector<std::array<Int, 12>> images;
  for (std::size_t p = 0; p < np; ++p) images.push_back(to_array(h4_permute(nf, static_cast<int>(p))));
  std::optional<Int> value;
  for (const auto& im : images) collect(im, value, false);
  if (!value) {
    // A path whose heaviest edge is in the middle never reaches the normalized position.
    for (const auto& im : images) collect(im, value, true);
  }
  if (!value) throw InternalError("no symmetry image matches a case table");
  return *value;
}

bool nh_gap_six(const H4NormalForm& nf) {
  if (lambda(nf) != 0) return false;
  const Int &t123 = nf[A123], &t124 = nf[A124], &t134 = nf[A134], &t234 = nf[A234];
  if (t123 == 0 || t124 == 0 || t134 == 0 || t234 == 0) return false;
  std::vector<Int> gens = {t123, t124, t134, t234};
  return !in_ideal(nf[A1234], gens) && !in_ideal(nf[A1324], gens) && !in_ideal(nf[A1234] + nf[A1324], gens);
}

namespace {

LongitudeTuple sublink(const LongitudeTuple& t, const std::vector<int>& keep) {
  LongitudeTuple r = t;
  for (int c = t.n(); c >= 1; --c)
    if (std::find(keep.begin(), keep.end(), c) == keep.end()) r = sl_delete_component(r, c);
  return r;
}

void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 1);
  while (true) {
    if (!f(s)) return;
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i + 1) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

Int ceil_div(const Int& a, const Int& b) { return (a + b - 1) / b; }

}  // namespace

BoundReport nh_bounds(const LongitudeTuple& t) {
  const int n = t.n();
  MilnorVector v = milnor(t);
  Int lam = lambda(v);
  BoundReport r;
  r.lower = lam;
  r.notes.push_back("lower: sum of absolute pairwise linking numbers");

  // Lambda + 2Q minimized over component orderings.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  int best_q = n * n;
  do {
    int q = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 2; b < n; ++b)
        if (v.get({std::min(order[a], order[b]), std::max(order[a], order[b])}) == 0) ++q;
    best_q = std::min(best_q, q);
  } while (std::next_permutation(order.begin(), order.end()));
  r.upper = lam + 2 * best_q;
  r.notes.push_back("upper: linking sum plus twice the zero-linking non-adjacent pairs, best ordering");

  // Components whose deletion trivializes the link: the link is a single lifted block.
  for (int c = 1; c <= n && n >= 2; ++c) {
    if (!sl_is_trivial(sl_delete_component(t, c))) continue;
    int z = 0;
    for (int d = 1; d <= n; ++d)
      if (d != c && v.get({std::min(c, d), std::max(c, d)}) == 0) ++z;
    Int cand = lam + 2 * std::max(0, z - 1);
    if (cand < *r.upper) {
      r.upper = cand;
      r.notes.push_back("upper: deleting one component leaves a trivial link");
    }
  }

  if (lam == 0 && n >= 3) {
    bool all3 = true;
    for_each_subset(n, 3, [&](const std::vector<int>& s) {
      all3 = nh_exact_3(milnor(sublink(t, s))) != 0;
      return all3;
    });
    if (all3) {
      Int b = 2 * (Int(n - 1) * (n - 1) / 4);
      if (b > r.lower) {
        r.lower = b;
        r.notes.push_back("lower: every 3-component sublink is nontrivial (triangle-free complement count)");
      }
    }
  }
  if (lam == 0 && n >= 4) {
    bool all4 = true;
    for_each_subset(n, 4, [&](const std::vector<int>& s) {
      all4 = nh_exact_4(h4_normalize(sublink(t, s))) == 6;
      return all4;
    });
    if (all4) {
      Int b = 2 * ceil_div(Int(n) * (n - 2), 3);
      if (b > r.lower) {
        r.lower = b;
        r.notes.push_back("lower: every 4-component sublink needs six crossing changes (weighted graph bound)");
      }
    }
  }

  if (n == 1) r.exact = 0;
  if (n == 2) r.exact = lam;
  if (n == 3) r.exact = nh_exact_3(v);
  if (n == 4) r.exact = nh_exact_4(h4_normalize(t));
  if (r.exact) {
    r.notes.push_back("exact: classification for at most four components");
    if (*r.exact < r.lower || *r.exact > *r.upper) throw InternalError("exact value outside the bound interval");
  }
  if (r.lower > *r.upper) throw InternalError("lower bound exceeds upper bound");
  return r;
}

BoundReport ndelta_bounds(const MilnorVector& v) {
  BoundReport r;
  r.lower = lambda3(v);
  r.notes.push_back("lower: sum of absolute triple linking numbers");
  if (lambda(v) != 0) {
    r.upper = std::nullopt;
    r.notes.push_back("upper: infinite, Delta moves preserve pairwise linking");
    return r;
  }
  const Int n = v.n;
  r.upper = r.lower + 2 * (n - 1) * (n - 2) * (n - 3) / 3;
  r.notes.push_back("upper: triple sum plus (2/3)(n-1)(n-2)(n-3)");
  return r;
}

std::pair<Int, Int> cn_bounds(int n) {
  if (n < 3) throw DomainError("cn_bounds needs n >= 3");
  return {2 * ceil_div(Int(n) * (n - 2), 3), Int(n - 1) * (n - 2)};
}

// ---------------------------------------------------------------- sweep

namespace {

void sweep_one(i64 code, int bound, SweepStats& st) {
  const int w = 2 * bound + 1;
  H4NormalForm nf;
  for (int s = A123; s <= A1324; ++s) {
    nf[s] = static_cast<int>(code % w) - bound;
    code /= w;
  }
  int value = static_cast<int>(nh_exact_4_fast(nf));
  ++st.histogram[value];
  ++st.cases;
  st.max_value = std::max(st.max_value, value);
  if (nh_gap_six(nf) != (value == 6)) ++st.predicate_mismatches;
}

i64 sweep_size(int bound) {
  if (bound < 0) throw DomainError("sweep bound must be non-negative");
  i64 total = 1;
  for (int s = 0; s < 6; ++s) total *= 2 * bound + 1;
  return total;
}

void merge(SweepStats& into, const SweepStats& part) {
  for (const auto& [k, c] : part.histogram) into.histogram[k] += c;
  into.cases += part.cases;
  into.predicate_mismatches += part.predicate_mismatches;
  into.max_value = std::max(into.max_value, part.max_value);
}

}  // namespace

SweepStats c4_sweep_serial(int bound) {
  const i64 total = sweep_size(bound);
  permutation_images();
  SweepStats st;
  for (i64 c = 0; c < total; ++c) sweep_one(c, bound, st);
  return st;
}

SweepStats c4_sweep_parallel(int bound, int threads) {
  const i64 total = sweep_size(bound);
  permutation_images();  // build the shared cache before fanning out
  SweepStats st;
#ifdef _OPENMP
  if (threads < 1) threads = omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    SweepStats local;
#pragma omp for schedule(static)
    for (i64 c = 0; c < total; ++c) sweep_one(c, bound, local);
#pragma omp critical
    merge(st, local);
  }
#else
  (void)threads;
  for (i64 c = 0; c < total; ++c) sweep_one(c, bound, st);
#endif
  return st;
}

}  // namespace linkhom
