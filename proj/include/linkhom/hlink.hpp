#pragma once

#include "linkhom/rf.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace linkhom {

/// Element of H(n) stored as its longitude expansions. Longitude k lives in
/// RF(n) with index k unused; longitudes[0] is a placeholder.
class LongitudeTuple {
 public:
  LongitudeTuple() = default;
  static LongitudeTuple trivial(int n);
  static LongitudeTuple from_longitudes(std::vector<ReducedPolynomial> ls);

  int n() const { return n_; }
  const ReducedPolynomial& longitude(int k) const;
  const std::vector<ReducedPolynomial>& longitudes() const { return ls_; }
  /// Canonical word for longitude k, rebuilt from the expansion.
  Word longitude_word(int k) const;

 private:
  int n_ = 0;
  std::vector<ReducedPolynomial> ls_;
};

struct MilnorVector {
  int n = 0;
  std::map<std::vector<int>, Int> mu;  // nonzero entries only

  Int get(const std::vector<int>& idx) const;
  Int linking(int i, int j) const { return get({i, j}); }
};

LongitudeTuple sl_generator(int i, int j, int n);
LongitudeTuple sl_stack(const LongitudeTuple& t, const LongitudeTuple& s);
LongitudeTuple sl_invert(const LongitudeTuple& t);
LongitudeTuple sl_power(const LongitudeTuple& t, const Int& k);
LongitudeTuple sl_commutator(const LongitudeTuple& a, const LongitudeTuple& b);
bool sl_equal(const LongitudeTuple& a, const LongitudeTuple& b);
bool sl_is_trivial(const LongitudeTuple& t);
LongitudeTuple sl_delete_component(const LongitudeTuple& t, int k);
LongitudeTuple sl_add_trivial(const LongitudeTuple& t);
/// Component c becomes component sigma[c] (sigma 1-based, sigma[0] ignored).
LongitudeTuple sl_permute(const LongitudeTuple& t, const std::vector<int>& sigma);
MilnorVector milnor(const LongitudeTuple& t);

/// Images X_m -> L_m^-1 X_m L_m of the conjugation action attached to t.
std::vector<ReducedPolynomial> conjugation_images(const LongitudeTuple& t);

/// Evaluates an expression over H(n) generators x_{ij} (Gen{i,j}).
LongitudeTuple sl_evaluate(const GroupExpr& e, int n);

GroupExpr h_generator(int i, int j, const Int& e = 1);
/// x_{ijk} = [x_{ik}, x_{ij}]
GroupExpr h_triple(int i, int j, int k);
/// x_{ijkl} = [[x_{il}, x_{ik}], x_{ij}]
GroupExpr h_quad(int i, int j, int k, int l);

// ---------------------------------------------------------------- H(4)

struct H4NormalForm {
  static constexpr int kSize = 12;
  static const std::array<const char*, kSize>& labels();
  static int index_of(const std::string& label);

  std::array<Int, kSize> a{};

  Int& operator[](int i) { return a[i]; }
  const Int& operator[](int i) const { return a[i]; }
  Int& at(const std::string& label) { return a[index_of(label)]; }
  const Int& at(const std::string& label) const { return a[index_of(label)]; }

  bool is_zero() const;
  bool operator==(const H4NormalForm&) const = default;
  std::string to_string() const;
};

/// Index constants into H4NormalForm::a, in normal-form order.
enum H4Index : int { A12, A13, A14, A23, A24, A34, A123, A124, A134, A234, A1234, A1324 };

/// Pair index (i<j) -> A12..A34.
int pair_slot(int i, int j);

/// Expression and tuple for basis element `slot`.
GroupExpr h4_basis_expr(int slot);
const LongitudeTuple& h4_basis_tuple(int slot);

LongitudeTuple h4_realize(const H4NormalForm& nf);
H4NormalForm h4_normalize(const LongitudeTuple& t);

H4NormalForm h4_multiply(const H4NormalForm& x, const H4NormalForm& y);
H4NormalForm h4_inverse(const H4NormalForm& x);
H4NormalForm h4_power(const H4NormalForm& x, const Int& k);
H4NormalForm h4_basis(int slot, const Int& e = 1);

/// [A, x_g] computed by stacking longitudes and normalizing.
H4NormalForm h4_commutator_entry(int basis_slot, int pair_slot);
/// [A, x_g] as recorded in the multiplication table used by h4_multiply.
H4NormalForm h4_table_entry(int basis_slot, int pair_slot);

struct ConjugateParams {
  int i = 1, j = 2;
  Int alpha = 0, beta = 0, gamma = 0, delta = 0;
  bool operator==(const ConjugateParams&) const = default;
};

H4NormalForm h4_conjugate_family(const ConjugateParams& p);
std::optional<ConjugateParams> h4_is_conjugate(const H4NormalForm& nf, int i, int j);

}  // namespace linkhom
