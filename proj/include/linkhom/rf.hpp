#pragma once

#include "linkhom/integer.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace linkhom {

/// Largest rank supported by the packed monomial keys.
constexpr int kMaxRank = 15;
/// Default rank cap for user-facing commands.
constexpr int kDefaultRankCap = 8;

struct Letter {
  int index;
  int sign;
  bool operator==(const Letter&) const = default;
};

/// A free-reduced word stored as syllables x_i^e.
struct Syllable {
  int index;
  Int exp;
  bool operator==(const Syllable&) const = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> s);

  static Word gen(int i, const Int& e = 1);

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }

  Word operator*(const Word& o) const;
  Word& operator*=(const Word& o);
  Word inverse() const;
  Word pow(const Int& k) const;

  /// Letter sequence; throws DomainError when it would exceed max_letters.
  std::vector<Letter> letters(std::size_t max_letters = 1u << 22) const;
  std::size_t length() const;

  bool operator==(const Word&) const = default;

 private:
  void push(int index, const Int& e);
  std::vector<Syllable> syl_;
};

Word commutator(const Word& a, const Word& b);

/// Generator label: RF context uses i only, H(n) context uses the pair (i, j).
struct Gen {
  int i = 0;
  int j = 0;
  bool operator==(const Gen&) const = default;
};

struct GroupExpr {
  enum class Kind { GenPower, Product, Commutator, Power };
  Kind kind = Kind::Product;
  Gen gen;
  Int exponent = 1;
  std::vector<GroupExpr> children;

  static GroupExpr generator(Gen g, const Int& e = 1);
  static GroupExpr product(std::vector<GroupExpr> xs);
  static GroupExpr comm(GroupExpr a, GroupExpr b);
  static GroupExpr power(GroupExpr a, const Int& e);
  static GroupExpr inverse(GroupExpr a);
  static GroupExpr identity() { return product({}); }

  bool operator==(const GroupExpr&) const = default;
};

/// Flattens an RF-context expression to a word.
Word to_word(const GroupExpr& e);
GroupExpr from_word(const Word& w);

/// Monomial X_{i1}...X_{ik} with pairwise distinct indices, packed four bits per index.
struct Monomial {
  std::uint64_t key = 0;
  std::uint16_t mask = 0;
  std::uint8_t len = 0;

  static Monomial from(const std::vector<int>& idx);
  std::vector<int> indices() const;
  int at(int pos) const { return static_cast<int>((key >> (60 - 4 * pos)) & 0xF); }
  bool contains(int i) const { return (mask >> i) & 1u; }
  Monomial concat(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return key == o.key; }
  bool operator<(const Monomial& o) const { return len != o.len ? len < o.len : key < o.key; }
};

/// Element of the truncated multilinear ring Z<<X_1..X_m>> / (repeated-index monomials).
class ReducedPolynomial {
 public:
  struct Term {
    Monomial mono;
    Int coef;
  };

  ReducedPolynomial() = default;
  explicit ReducedPolynomial(int rank);

  static ReducedPolynomial one(int rank);
  static ReducedPolynomial var(int rank, int i);
  static ReducedPolynomial generator(int rank, int i, const Int& e = 1);
  /// Builds from arbitrary terms; duplicates are merged and zeros dropped.
  static ReducedPolynomial from_terms(int rank, std::vector<Term> terms);

  int rank() const { return rank_; }
  const std::vector<Term>& terms() const { return terms_; }

  Int coeff(const std::vector<int>& idx) const;
  Int coeff(const Monomial& m) const;
  Int constant() const;
  bool is_one() const;
  bool is_zero() const { return terms_.empty(); }
  int max_degree() const;

  ReducedPolynomial operator+(const ReducedPolynomial& o) const;
  ReducedPolynomial operator-(const ReducedPolynomial& o) const;
  ReducedPolynomial operator*(const ReducedPolynomial& o) const;
  ReducedPolynomial scaled(const Int& c) const;
  bool operator==(const ReducedPolynomial& o) const;

  /// Part of exact degree d.
  ReducedPolynomial homogeneous(int d) const;
  /// Lowest degree >= 1 with a nonzero coefficient, or rank+1 when none.
  int lowest_positive_degree() const;

  /// Drops monomials that contain index k (quotient by the normal closure of x_k).
  ReducedPolynomial strip(int k) const;
  /// Strips k, then renumbers indices above k down by one; rank drops by one.
  ReducedPolynomial delete_index(int k) const;
  ReducedPolynomial with_rank(int rank) const;
  /// Renames index i to perm[i] (perm is 1-based, perm[0] unused).
  ReducedPolynomial relabel(const std::vector<int>& perm) const;

  /// Ring endomorphism X_m -> images[m] (images[0] unused).
  ReducedPolynomial substitute(const std::vector<ReducedPolynomial>& images) const;

  std::string to_string() const;

 private:
  void normalize();
  int rank_ = 0;
  std::vector<Term> terms_;
};

ReducedPolynomial poly_multiply(const ReducedPolynomial& p, const ReducedPolynomial& q);
/// Inverse of a unit (constant term 1) via the truncating geometric series.
ReducedPolynomial poly_inverse(const ReducedPolynomial& p);

ReducedPolynomial expand(const Word& w, int m);
ReducedPolynomial expand(const GroupExpr& e, int m);
bool rf_equal(const GroupExpr& a, const GroupExpr& b, int m);
bool rf_equal(const Word& a, const Word& b, int m);
int lcs_weight(const GroupExpr& w, int m);
int lcs_weight(const ReducedPolynomial& p);

/// Elementary commutator: a binary tree with letter leaves.
class ElementaryCommutator {
 public:
  static ElementaryCommutator leaf(int index, int sign = 1);
  static ElementaryCommutator bracket(const ElementaryCommutator& a, const ElementaryCommutator& b);

  bool is_leaf() const { return !node_->left; }
  const Letter& letter() const { return node_->letter; }
  const ElementaryCommutator left() const { return ElementaryCommutator(node_->left); }
  const ElementaryCommutator right() const { return ElementaryCommutator(node_->right); }

  int weight() const { return node_->weight; }
  int multiplicity(int i) const;
  bool contains(int i) const { return multiplicity(i) > 0; }
  /// [a,b]^-1 = [b,a]; leaf inverse flips the sign.
  ElementaryCommutator inverse() const;

  Word to_word() const;
  GroupExpr to_expr() const;
  std::string to_string() const;

  bool operator==(const ElementaryCommutator& o) const;

 private:
  struct Node {
    Letter letter{0, 1};
    std::shared_ptr<const Node> left, right;
    int weight = 1;
  };
  explicit ElementaryCommutator(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Left-normed basis commutator [[..[x_j, x_{i_1}], ..], x_{i_{p-1}}].
ElementaryCommutator basis_commutator(int j, const std::vector<int>& rest);

struct GradedTerm {
  ElementaryCommutator comm;
  Int exponent;
};

/// Degree-p components of an element of RF(m)_p in the left-normed basis.
std::vector<GradedTerm> decompose_graded(const ReducedPolynomial& p, int degree);
std::vector<GradedTerm> decompose_graded(const GroupExpr& w, int degree, int m);

/// Factors [c_j, x_{i_j}] with every i_j < m, equal to c modulo weight wt(c)+1.
std::vector<std::pair<ElementaryCommutator, int>> nice_product(const ElementaryCommutator& c, int m);

/// Canonical word for an RF(m) element: ordered product of basis commutator powers.
Word word_from_poly(const ReducedPolynomial& p);

struct RewrittenForm {
  int m = 0;
  std::vector<Int> alphas;             // 1-based, alphas[0] unused
  std::vector<bool> right_side;        // 1..m-1: true means z_k = [x_k, w_k]
  std::vector<Word> omegas;            // 1..m-1

  Word z(int k) const;
  Word reassemble() const;
};

struct DeltaForm {
  int m = 0;
  std::vector<Int> alphas;                          // 1..m
  std::map<std::pair<int, int>, Int> betas;         // (i,j), i<j: exponent of [x_j, x_i]
  std::map<std::pair<int, int>, Word> omegas;       // (i,j), i,j <= m-1: [[w, x_i], x_j]

  Word reassemble() const;
};

RewrittenForm rewrite_generators_commutators(const Word& w, int m);
DeltaForm rewrite_delta_form(const Word& w, int m);

std::string format_word(const Word& w);

}  // namespace linkhom
