#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posetlie/error.hpp"

namespace posetlie {

// Internal element index, 0-based and contiguous. Whenever a < b in the
// poset, id(a) < id(b).
using ElementId = std::size_t;

// A strict relation lesser < greater.
struct Relation {
  ElementId lesser = 0;
  ElementId greater = 0;

  friend auto operator<=>(const Relation&, const Relation&) = default;
};

enum class FamilyKind { chain, grid, tree, double_fan };

// Parameterized poset families:
//   chain(n)              1 < 2 < ... < n
//   grid(m, n)            m rows of n columns, i_j < i_{j+1}, (i+1)_j
//   tree(m, n)            full m-ary tree of depth n, root at the bottom
//   double_fan(r0,r1,r2)  every b_i < every m_j < every t_k
struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::chain;
  std::array<std::int64_t, 3> params{};

  static FamilyDescriptor chain(std::int64_t n) { return {FamilyKind::chain, {n, 0, 0}}; }
  static FamilyDescriptor grid(std::int64_t m, std::int64_t n) { return {FamilyKind::grid, {m, n, 0}}; }
  static FamilyDescriptor tree(std::int64_t m, std::int64_t n) { return {FamilyKind::tree, {m, n, 0}}; }
  static FamilyDescriptor double_fan(std::int64_t r0, std::int64_t r1, std::int64_t r2) {
    return {FamilyKind::double_fan, {r0, r1, r2}};
  }

  // e.g. "chain(5)", "fan(4,2,3)"
  std::string to_string() const;

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

// Element ids of a three-level poset where every bottom element is below every
// middle element, which is below every top element.
struct DoubleFanShape {
  std::vector<ElementId> bottom;
  std::vector<ElementId> middle;
  std::vector<ElementId> top;
};

class FinitePoset {
public:
  FinitePoset() = default;

  std::size_t size() const noexcept { return n_; }

  bool less(ElementId a, ElementId b) const { return less_[a * n_ + b] != 0; }
  bool covers(ElementId a, ElementId b) const { return cover_[a * n_ + b] != 0; }

  const std::string& label(ElementId id) const { return labels_[id]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Position of element `id` in the input handed to from_covers.
  std::size_t source_index(ElementId id) const { return source_index_[id]; }

  const std::optional<FamilyDescriptor>& family() const noexcept { return family_; }

  // Sorted lexicographically by (lesser, greater).
  const std::vector<Relation>& strict_relations() const noexcept { return strict_; }
  const std::vector<Relation>& covering_relations() const noexcept { return covering_; }
  std::vector<Relation> non_covering_relations() const;
  std::vector<Relation> non_covering_at(ElementId p) const;

  bool is_minimal(ElementId p) const;
  bool is_maximal(ElementId p) const;
  std::vector<ElementId> extremal_elements() const;
  std::vector<Relation> extremal_relations() const;

  bool is_chain() const noexcept { return strict_.size() == n_ * (n_ > 0 ? n_ - 1 : 0) / 2; }

  std::optional<ElementId> find_label(const std::string& label) const;

private:
  friend FinitePoset from_covers(std::size_t, const std::vector<Relation>&, std::vector<std::string>);
  friend FinitePoset build_family(const FamilyDescriptor&);

  std::size_t n_ = 0;
  std::vector<char> less_;
  std::vector<char> cover_;
  std::vector<Relation> strict_;
  std::vector<Relation> covering_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> source_index_;
  std::optional<FamilyDescriptor> family_;
};

// Transitive closure of `covers`. Elements are renumbered into a stable
// topological order (the identity when the input already is one); labels
// travel with their elements. Empty `labels` means "1".."n".
FinitePoset from_covers(std::size_t n, const std::vector<Relation>& covers,
                        std::vector<std::string> labels = {});

FinitePoset antichain(std::size_t n);

FinitePoset build_family(const FamilyDescriptor& d);

// Each pair i < j becomes a relation with probability `edge_probability`,
// then the result is closed. Deterministic in `seed`.
FinitePoset random_poset(std::size_t n, double edge_probability, std::uint64_t seed);

// Number of non-covering relations from the closed-form counts for chains,
// 2 x n grids and m-ary trees. Other families raise UnsupportedFamily.
std::int64_t count_non_covering_closed_form(const FamilyDescriptor& d);

// Number of strict relations of a family, from its shape.
std::int64_t count_relations_closed_form(const FamilyDescriptor& d);

std::optional<DoubleFanShape> detect_double_fan(const FinitePoset& p);

// Hasse diagram in Graphviz DOT, drawn bottom to top.
std::string hasse_dot(const FinitePoset& p);

}  // namespace posetlie
