#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "posetlie/algebra.hpp"

namespace posetlie {

enum class Provenance {
  derived_algebra,   // b(L) <= dim [L, L]
  center_quotient,   // b(L) <= dim L/Z(L) - 1
  double_fan_block,  // b(L) <= r1 (r0 + r2 - r1) for fans with r1 < r0, r2
  closed_form,       // exact value of a proven breadth formula
};

struct Bound {
  std::int64_t value = 0;
  Provenance provenance = Provenance::derived_algebra;
  std::string theorem;  // only for closed_form, e.g. "thm2b"

  std::string provenance_name() const;
};

enum class BreadthStatus { certified, probabilistic };
enum class BreadthMode { fast, certified };

std::string_view to_string(BreadthStatus s);

struct BreadthOptions {
  BreadthMode mode = BreadthMode::certified;
  std::uint64_t seed = 1;
  std::int64_t coeff_bound = 1'000'000;
  int trials = 3;
  int retry_cap = 3;
};

struct BreadthReport {
  std::int64_t value = 0;
  BreadthStatus status = BreadthStatus::probabilistic;
  AlgebraElement witness;
  std::int64_t witness_rank = 0;
  Bound best_upper;
  std::vector<Bound> upper_bounds;
  int trials = 0;
  std::uint64_t seed = 0;
  std::int64_t coeff_bound = 0;
};

// Bounds that hold for `a`, computed from its structure: the derived algebra
// and center quotient for every variant, plus the block bound for double fans
// with r1 < r0 and r1 < r2 (nilpotent variant). Closed forms are never
// included, so a certificate never rests on the formula it is checked against.
std::vector<Bound> upper_bounds(const LiePosetAlgebra& a);

// The explicit maximizing element from the matching breadth argument:
//   full / type A, any poset:  sum_{i != 1} i (E_{1,1} - E_{i,i})
//   nilpotent chain:           sum of E_{i,i+1}
//   nilpotent 2 x n grid:      sum of the horizontal covers in both rows
//   nilpotent tree:            sum of all covers
//   nilpotent double fan:      sum_{i<=r0} E_{b_i,m_i} if r1 >= r0,
//                              sum_{i<=r2} E_{m_i,t_i} if r1 >= r2,
//                              sum_{i<=r1} (E_{b_i,m_i} - E_{m_i,t_i}) otherwise
// Raises NoKnownWitness for other nilpotent algebras.
AlgebraElement paper_witness(const LiePosetAlgebra& a);
std::optional<AlgebraElement> try_paper_witness(const LiePosetAlgebra& a);

struct SampleResult {
  std::int64_t max_rank = 0;
  AlgebraElement best;
};

// Exact ad-rank of `trials` elements with integer coordinates drawn uniformly
// from [-coeff_bound, coeff_bound]. Trial t draws from a generator seeded by
// (seed, t); the first maximizer is kept.
SampleResult sample_generic(const LiePosetAlgebra& a, std::uint64_t seed, std::int64_t coeff_bound, int trials);

AlgebraElement random_element(const LiePosetAlgebra& a, std::uint64_t seed, std::uint64_t stream,
                              std::int64_t coeff_bound);

BreadthReport breadth(const LiePosetAlgebra& a, const BreadthOptions& options = {});

// Closed-form breadth for (family, variant) pairs with a proven formula.
std::int64_t formula_breadth(const FamilyDescriptor& d, AlgebraVariant v);
Bound closed_form_bound(const FamilyDescriptor& d, AlgebraVariant v);

// ad_x of a nilpotent double-fan algebra with columns ordered B1, B2, B3 and
// rows B3, B2, B1, where B1 = {E_{b_i,m_j}}, B2 = {E_{m_j,t_k}},
// B3 = {E_{b_i,t_k}}, first index varying fastest.
struct BlockReport {
  std::size_t r0 = 0, r1 = 0, r2 = 0;
  RationalMatrix a_block;               // r0 x r1, entries a_{b_i,m_j}
  bool lower_rows_zero = false;         // rows labelled by B2 and B1 vanish
  bool b3_columns_zero = false;         // columns labelled by B3 vanish
  bool scaled_identity_blocks = false;  // B3 x B1 blocks are -a_{m_j,t_k} I
  bool block_diagonal_a = false;        // B3 x B2 is diag(A, ..., A)
  std::size_t rank = 0;

  bool matches_layout() const {
    return lower_rows_zero && b3_columns_zero && scaled_identity_blocks && block_diagonal_a;
  }
};

struct OrderedAdjoint {
  RationalMatrix matrix;
  BlockReport report;
};

OrderedAdjoint mx_ordered(const LiePosetAlgebra& a, const AlgebraElement& x);

// Breadths of sampled elements, the zero element, every basis element and the
// known witness. Experimental; no completeness claim.
std::set<std::int64_t> breadth_spectrum_sample(const LiePosetAlgebra& a, std::uint64_t seed, int trials);

}  // namespace posetlie
