#pragma once

#include "linkhom/hlink.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace linkhom {

struct BoundReport {
  Int lower = 0;
  std::optional<Int> upper;  // nullopt means infinite
  std::optional<Int> exact;
  std::vector<std::string> notes;
};

/// Per-component orientation, sign[c] in {+1,-1} for c = 1..n (sign[0] unused).
using OrientationMask = std::vector<int>;

Int lambda(const MilnorVector& v);
Int lambda3(const MilnorVector& v);
Int lambda(const H4NormalForm& nf);
int q_count(const MilnorVector& v, int n);

Int nh_exact_3(const MilnorVector& v);

/// gcd(gens) | a, with gcd() = 0 and 0 | a iff a = 0.
bool in_ideal(const Int& a, const std::vector<Int>& gens);

MilnorVector reorient(const MilnorVector& v, const OrientationMask& mask);
/// Orientation law applied to normal-form coordinates: a_I flips sign when an
/// odd number of flipped components lie in I.
H4NormalForm reorient(const H4NormalForm& nf, const OrientationMask& mask);

/// All 24 permutations of {1,2,3,4} as 1-based arrays.
const std::vector<std::vector<int>>& h4_permutations();
/// Normal form of sl_permute(h4_realize(nf), sigma), computed from cached basis images.
H4NormalForm h4_permute(const H4NormalForm& nf, int perm_index);

/// Evaluates n_h by the case tables when the linking pattern of nf is in
/// the normalized position the tables assume; nullopt otherwise.
std::optional<Int> h4_case_value(const H4NormalForm& nf);

Int nh_exact_4(const H4NormalForm& nf);

/// n_h - Lambda = 6 criterion: vanishing linking, all four triple exponents
/// nonzero, and none of a_1234, a_1324, a_1234 + a_1324 in their ideal.
bool nh_gap_six(const H4NormalForm& nf);

BoundReport nh_bounds(const LongitudeTuple& t);
BoundReport ndelta_bounds(const MilnorVector& v);
std::pair<Int, Int> cn_bounds(int n);

struct SweepStats {
  std::map<int, std::int64_t> histogram;  // n_h value -> count
  std::int64_t cases = 0;
  std::int64_t predicate_mismatches = 0;
  int max_value = -1;
  bool operator==(const SweepStats&) const = default;
};

/// Every zero-linking normal form with |a_I| <= bound.
SweepStats c4_sweep_serial(int bound);
SweepStats c4_sweep_parallel(int bound, int threads);

}  // namespace linkhom
