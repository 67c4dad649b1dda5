#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "posetlie/exactla.hpp"
#include "posetlie/poset.hpp"

namespace posetlie {

enum class AlgebraVariant { full, type_a, nilpotent };

std::string_view to_string(AlgebraVariant v);
AlgebraVariant parse_variant(std::string_view text);

// E_{p,q} (p < q, or p == q for the diagonal of the full algebra), or the
// traceless diagonal E_{1,1} - E_{p,p} of the type-A algebra.
struct BasisElement {
  enum class Kind { matrix_unit, traceless_diagonal };

  Kind kind = Kind::matrix_unit;
  ElementId p = 0;
  ElementId q = 0;

  static BasisElement unit(ElementId p, ElementId q) { return {Kind::matrix_unit, p, q}; }
  static BasisElement traceless(ElementId p) { return {Kind::traceless_diagonal, p, p}; }

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

struct StructureTerm {
  std::size_t index;
  Scalar coeff;
};

class LiePosetAlgebra;

// Coordinates over the basis of one algebra.
struct AlgebraElement {
  std::uint64_t algebra_id = 0;
  RationalVector coeffs;

  bool is_zero() const;
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

class LiePosetAlgebra {
public:
  const FinitePoset& poset() const noexcept { return poset_; }
  AlgebraVariant variant() const noexcept { return variant_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::uint64_t id() const noexcept { return id_; }

  const std::vector<BasisElement>& basis() const noexcept { return basis_; }

  // Structure constants of [basis_i, basis_j].
  const std::vector<StructureTerm>& structure(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  std::optional<std::size_t> unit_index(ElementId p, ElementId q) const;

  AlgebraElement zero() const;
  AlgebraElement basis_element(std::size_t i) const;
  AlgebraElement element(RationalVector coeffs) const;

  // The element as an n x n matrix.
  RationalMatrix to_matrix(const AlgebraElement& x) const;
  // Inverse of to_matrix; throws InvalidInput when the matrix lies outside
  // the algebra.
  AlgebraElement from_matrix(const RationalMatrix& m) const;

  void check_member(const AlgebraElement& x) const;

  // Readable form such as "E_{1,2} - 3 E_{2,3}".
  std::string describe(const AlgebraElement& x) const;

private:
  friend LiePosetAlgebra build_algebra(const FinitePoset&, AlgebraVariant);

  FinitePoset poset_;
  AlgebraVariant variant_ = AlgebraVariant::full;
  std::uint64_t id_ = 0;
  std::vector<BasisElement> basis_;
  std::vector<std::size_t> unit_lookup_;  // p*n+q -> basis index + 1, 0 = absent
  std::vector<std::vector<StructureTerm>> table_;
};

// Basis: strict units E_{p,q} in (p, q) order, then the diagonal part
// (E_{p,p} for full, E_{1,1} - E_{p,p} for p != 1 for type A).
LiePosetAlgebra build_algebra(const FinitePoset& p, AlgebraVariant v);

AlgebraElement bracket(const LiePosetAlgebra& a, const AlgebraElement& x, const AlgebraElement& y);

// Column j is [x, basis_j] in coordinates.
RationalMatrix ad_matrix(const LiePosetAlgebra& a, const AlgebraElement& x);

std::size_t element_breadth(const LiePosetAlgebra& a, const AlgebraElement& x);

// Dimension of [L, L], from the span of all basis brackets.
std::size_t derived_dim(const LiePosetAlgebra& a);

std::vector<AlgebraElement> center_basis(const LiePosetAlgebra& a);
std::size_t center_dim(const LiePosetAlgebra& a);

}  // namespace posetlie
