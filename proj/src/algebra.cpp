#include "posetlie/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>

namespace posetlie {

namespace {

std::atomic<std::uint64_t> next_algebra_id{1};

struct MatrixEntry {
  ElementId row;
  ElementId col;
  std::int64_t value;
};

std::vector<MatrixEntry> entries_of(const BasisElement& b) {
  if (b.kind == BasisElement::Kind::traceless_diagonal) return {{0, 0, 1}, {b.p, b.p, -1}};
  return {{b.p, b.q, 1}};
}

std::map<std::pair<ElementId, ElementId>, std::int64_t> commutator(const std::vector<MatrixEntry>& x,
                                                                   const std::vector<MatrixEntry>& y) {
  std::map<std::pair<ElementId, ElementId>, std::int64_t> out;
  for (const auto& a : x) {
    for (const auto& b : y) {
      if (a.col == b.row) out[{a.row, b.col}] += a.value * b.value;
      if (b.col == a.row) out[{b.row, a.col}] -= a.value * b.value;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

std::string_view to_string(AlgebraVariant v) {
  switch (v) {
    case AlgebraVariant::full: return "full";
    case AlgebraVariant::type_a: return "typea";
    case AlgebraVariant::nilpotent: return "nilpotent";
  }
  return "full";
}

AlgebraVariant parse_variant(std::string_view text) {
  if (text == "full") return AlgebraVariant::full;
  if (text == "typea") return AlgebraVariant::type_a;
  if (text == "nilpotent") return AlgebraVariant::nilpotent;
  throw Error(ErrorCode::invalid_input, "unknown variant '" + std::string(text) + "'");
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::optional<std::size_t> LiePosetAlgebra::unit_index(ElementId p, ElementId q) const {
  const std::size_t n = poset_.size();
  if (p >= n || q >= n) return std::nullopt;
  const std::size_t slot = unit_lookup_[p * n + q];
  if (slot == 0) return std::nullopt;
  return slot - 1;
}

AlgebraElement LiePosetAlgebra::zero() const { return {id_, RationalVector(dim())}; }

AlgebraElement LiePosetAlgebra::basis_element(std::size_t i) const {
  if (i >= dim()) throw Error(ErrorCode::out_of_range, "basis index " + std::to_string(i));
  AlgebraElement x = zero();
  x.coeffs[i] = 1;
  return x;
}

AlgebraElement LiePosetAlgebra::element(RationalVector coeffs) const {
  if (coeffs.size() != dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "element has " + std::to_string(coeffs.size()) + " coordinates, algebra dimension is " +
                    std::to_string(dim()));
  }
  return {id_, std::move(coeffs)};
}

void LiePosetAlgebra::check_member(const AlgebraElement& x) const {
  if (x.algebra_id != id_ || x.coeffs.size() != dim()) {
    throw Error(ErrorCode::algebra_mismatch, "element does not belong to this algebra");
  }
}

RationalMatrix LiePosetAlgebra::to_matrix(const AlgebraElement& x) const {
  check_member(x);
  RationalMatrix m(poset_.size(), poset_.size());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x.coeffs[i].is_zero()) continue;
    for (const auto& e : entries_of(basis_[i])) m(e.row, e.col) += x.coeffs[i] * e.value;
  }
  return m;
}

AlgebraElement LiePosetAlgebra::from_matrix(const RationalMatrix& m) const {
  const std::size_t n = poset_.size();
  if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::invalid_input, "matrix shape does not match poset");
  AlgebraElement x = zero();
  Scalar trace = 0;
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = 0; j < n; ++j) {
      const Scalar& v = m(i, j);
      if (v.is_zero()) continue;
      if (i != j) {
        auto idx = unit_index(i, j);
        if (!idx) {
          throw Error(ErrorCode::invalid_input,
                      "entry (" + poset_.label(i) + "," + poset_.label(j) + ") is not a relation");
        }
        x.coeffs[*idx] = v;
        continue;
      }
      trace += v;
      switch (variant_) {
        case AlgebraVariant::full: x.coeffs[*unit_index(i, i)] = v; break;
        case AlgebraVariant::type_a:
          if (i != 0) x.coeffs[poset_.strict_relations().size() + i - 1] = -v;
          break;
        case AlgebraVariant::nilpotent:
          throw Error(ErrorCode::invalid_input, "nilpotent algebra has no diagonal entries");
      }
    }
  }
  if (variant_ == AlgebraVariant::type_a && !trace.is_zero()) {
    throw Error(ErrorCode::invalid_input, "type-A element must be trace free");
  }
  return x;
}

std::string LiePosetAlgebra::describe(const AlgebraElement& x) const {
  check_member(x);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar& c = x.coeffs[i];
    if (c.is_zero()) continue;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    const Scalar mag = boost::multiprecision::abs(c);
    if (mag != 1) os << mag.str() << " ";
    const auto& b = basis_[i];
    if (b.kind == BasisElement::Kind::traceless_diagonal) {
      os << "(E_{" << poset_.label(0) << "," << poset_.label(0) << "} - E_{" << poset_.label(b.p) << ","
         << poset_.label(b.p) << "})";
    } else {
      os << "E_{" << poset_.label(b.p) << "," << poset_.label(b.q) << "}";
    }
    first = false;
  }
  return first ? "0" : os.str();
}

LiePosetAlgebra build_algebra(const FinitePoset& p, AlgebraVariant v) {
  if (v == AlgebraVariant::type_a && p.size() == 0) {
    throw Error(ErrorCode::invalid_parameter, "type-A algebra needs a nonempty poset");
  }
  LiePosetAlgebra a;
  a.poset_ = p;
  a.variant_ = v;
  a.id_ = next_algebra_id.fetch_add(1);

  const std::size_t n = p.size();
  for (const auto& r : p.strict_relations()) a.basis_.push_back(BasisElement::unit(r.lesser, r.greater));
  if (v == AlgebraVariant::full) {
    for (ElementId e = 0; e < n; ++e) a.basis_.push_back(BasisElement::unit(e, e));
  } else if (v == AlgebraVariant::type_a) {
    for (ElementId e = 1; e < n; ++e) a.basis_.push_back(BasisElement::traceless(e));
  }

  a.unit_lookup_.assign(n * n, 0);
  for (std::size_t i = 0; i < a.basis_.size(); ++i) {
    const auto& b = a.basis_[i];
    if (b.kind == BasisElement::Kind::matrix_unit) a.unit_lookup_[b.p * n + b.q] = i + 1;
  }

  const std::size_t dim = a.basis_.size();
  const std::size_t strict_count = p.strict_relations().size();
  std::vector<std::vector<MatrixEntry>> entries;
  entries.reserve(dim);
  for (const auto& b : a.basis_) entries.push_back(entries_of(b));

  a.table_.assign(dim * dim, {});
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      const auto product = commutator(entries[i], entries[j]);
      if (product.empty()) continue;

      std::map<std::size_t, std::int64_t> coords;
      std::vector<std::int64_t> diagonal(n, 0);
      bool has_diagonal = false;
      for (const auto& [pos, value] : product) {
        const auto [row, col] = pos;
        if (row == col) {
          diagonal[row] += value;
          has_diagonal = true;
          continue;
        }
        auto idx = a.unit_index(row, col);
        if (!idx) throw std::logic_error("bracket left the incidence algebra");
        coords[*idx] += value;
      }
      if (has_diagonal) {
        switch (v) {
          case AlgebraVariant::full:
            for (ElementId e = 0; e < n; ++e) {
              if (diagonal[e] != 0) coords[*a.unit_index(e, e)] += diagonal[e];
            }
            break;
          case AlgebraVariant::type_a: {
            // sum_e d_e E_{e,e} with zero trace equals sum_{e>0} -d_e (E_{0,0} - E_{e,e})
            std::int64_t trace = 0;
            for (auto d : diagonal) trace += d;
            if (trace != 0) throw std::logic_error("type-A bracket with nonzero trace");
            for (ElementId e = 1; e < n; ++e) {
              if (diagonal[e] != 0) coords[strict_count + e - 1] -= diagonal[e];
            }
            break;
          }
          case AlgebraVariant::nilpotent:
            throw std::logic_error("nilpotent bracket with diagonal part");
        }
      }
      for (const auto& [k, value] : coords) {
        if (value == 0) continue;
        a.table_[i * dim + j].push_back({k, Scalar(value)});
        a.table_[j * dim + i].push_back({k, Scalar(-value)});
      }
    }
  }
  return a;
}

AlgebraElement bracket(const LiePosetAlgebra& a, const AlgebraElement& x, const AlgebraElement& y) {
  a.check_member(x);
  a.check_member(y);
  AlgebraElement out = a.zero();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (x.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (y.coeffs[j].is_zero()) continue;
      const auto& terms = a.structure(i, j);
      if (terms.empty()) continue;
      const Scalar w = x.coeffs[i] * y.coeffs[j];
      for (const auto& t : terms) out.coeffs[t.index] += w * t.coeff;
    }
  }
  return out;
}

RationalMatrix ad_matrix(const LiePosetAlgebra& a, const AlgebraElement& x) {
  a.check_member(x);
  RationalMatrix m(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Scalar& xi = x.coeffs[i];
    if (xi.is_zero()) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (const auto& t : a.structure(i, j)) m(t.index, j) += xi * t.coeff;
    }
  }
  return m;
}

std::size_t element_breadth(const LiePosetAlgebra& a, const AlgebraElement& x) { return rank(ad_matrix(a, x)); }

std::size_t derived_dim(const LiePosetAlgebra& a) {
  std::vector<RationalVector> brackets;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const auto& terms = a.structure(i, j);
      if (terms.empty()) continue;
      RationalVector v(a.dim());
      for (const auto& t : terms) v[t.index] = t.coeff;
      brackets.push_back(std::move(v));
    }
  }
  return span_dim(brackets);
}

std::vector<AlgebraElement> center_basis(const LiePosetAlgebra& a) {
  // z is central iff ad_{b_i} z = 0 for every basis element b_i
  const std::size_t dim = a.dim();
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < dim; ++i) {
    std::map<std::size_t, RationalVector> by_output;
    for (std::size_t j = 0; j < dim; ++j) {
      for (const auto& t : a.structure(i, j)) {
        auto [it, inserted] = by_output.try_emplace(t.index, RationalVector(dim));
        it->second[j] += t.coeff;
      }
    }
    for (auto& [k, row] : by_output) rows.push_back(std::move(row));
  }
  RationalMatrix stacked = rows.empty() ? RationalMatrix(0, dim) : RationalMatrix::from_rows(rows);
  std::vector<AlgebraElement> out;
  for (auto& v : nullspace_basis(stacked)) out.push_back(a.element(std::move(v)));
  return out;
}

std::size_t center_dim(const LiePosetAlgebra& a) { return center_basis(a).size(); }

}  // namespace posetlie
