#include "posetlie/breadth.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace posetlie {

namespace {

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

AlgebraElement sum_of_units(const LiePosetAlgebra& a, const std::vector<Relation>& units, int sign = 1) {
  AlgebraElement x = a.zero();
  for (const auto& r : units) x.coeffs[*a.unit_index(r.lesser, r.greater)] += sign;
  return x;
}

AlgebraElement fan_witness(const LiePosetAlgebra& a, const DoubleFanShape& s) {
  const std::size_t r0 = s.bottom.size(), r1 = s.middle.size(), r2 = s.top.size();
  AlgebraElement x = a.zero();
  auto add = [&](ElementId p, ElementId q, int c) { x.coeffs[*a.unit_index(p, q)] += c; };
  if (r1 >= r0) {
    for (std::size_t i = 0; i < r0; ++i) add(s.bottom[i], s.middle[i], 1);
  } else if (r1 >= r2) {
    for (std::size_t i = 0; i < r2; ++i) add(s.middle[i], s.top[i], 1);
  } else {
    for (std::size_t i = 0; i < r1; ++i) {
      add(s.bottom[i], s.middle[i], 1);
      add(s.middle[i], s.top[i], -1);
    }
  }
  return x;
}

std::optional<AlgebraElement> nilpotent_witness(const LiePosetAlgebra& a) {
  const FinitePoset& p = a.poset();
  if (const auto& fam = p.family()) {
    switch (fam->kind) {
      case FamilyKind::chain:
      case FamilyKind::tree:
        return sum_of_units(a, p.covering_relations());
      case FamilyKind::grid:
        if (fam->params[0] == 2) {
          // covers that stay inside one row: i_j < (i+1)_j
          const auto n = static_cast<ElementId>(fam->params[1]);
          std::vector<Relation> horizontal;
          for (const auto& r : p.covering_relations()) {
            if (r.lesser / n == r.greater / n) horizontal.push_back(r);
          }
          return sum_of_units(a, horizontal);
        }
        break;
      case FamilyKind::double_fan:
        break;
    }
  }
  if (p.is_chain()) return sum_of_units(a, p.covering_relations());
  if (auto shape = detect_double_fan(p)) return fan_witness(a, *shape);
  return std::nullopt;
}

SampleResult sample_streams(const LiePosetAlgebra& a, std::uint64_t seed, std::int64_t coeff_bound,
                            std::uint64_t first_stream, int count) {
  SampleResult best{-1, a.zero()};
  for (int t = 0; t < count; ++t) {
    AlgebraElement x = random_element(a, seed, first_stream + static_cast<std::uint64_t>(t), coeff_bound);
    const auto r = static_cast<std::int64_t>(element_breadth(a, x));
    if (r > best.max_rank) best = {r, std::move(x)};
  }
  if (best.max_rank < 0) best.max_rank = 0;
  return best;
}

void require_positive_params(const FamilyDescriptor& d) {
  const int used = d.kind == FamilyKind::chain ? 1 : d.kind == FamilyKind::double_fan ? 3 : 2;
  for (int i = 0; i < used; ++i) {
    if (d.params[i] < 1) throw Error(ErrorCode::invalid_parameter, d.to_string());
  }
  if (d.kind == FamilyKind::tree && d.params[0] < 2) throw Error(ErrorCode::invalid_parameter, d.to_string());
}

}  // namespace

std::string Bound::provenance_name() const {
  switch (provenance) {
    case Provenance::derived_algebra: return "derived_algebra";
    case Provenance::center_quotient: return "center_quotient";
    case Provenance::double_fan_block: return "double_fan_block";
    case Provenance::closed_form: return "closed_form:" + theorem;
  }
  return "unknown";
}

std::string_view to_string(BreadthStatus s) {
  return s == BreadthStatus::certified ? "certified" : "probabilistic";
}

std::vector<Bound> upper_bounds(const LiePosetAlgebra& a) {
  std::vector<Bound> out;
  const auto dim = static_cast<std::int64_t>(a.dim());
  out.push_back({static_cast<std::int64_t>(derived_dim(a)), Provenance::derived_algebra, {}});
  const auto center = static_cast<std::int64_t>(center_dim(a));
  out.push_back({dim > center ? dim - center - 1 : 0, Provenance::center_quotient, {}});
  if (a.variant() == AlgebraVariant::nilpotent) {
    if (auto shape = detect_double_fan(a.poset())) {
      const auto r0 = static_cast<std::int64_t>(shape->bottom.size());
      const auto r1 = static_cast<std::int64_t>(shape->middle.size());
      const auto r2 = static_cast<std::int64_t>(shape->top.size());
      if (r1 < r0 && r1 < r2) out.push_back({r1 * (r0 + r2 - r1), Provenance::double_fan_block, {}});
    }
  }
  return out;
}

std::optional<AlgebraElement> try_paper_witness(const LiePosetAlgebra& a) {
  if (a.variant() == AlgebraVariant::nilpotent) return nilpotent_witness(a);

  // sum_{i != 1} i (E_{1,1} - E_{i,i}) with 1-based labels i
  AlgebraElement x = a.zero();
  const std::size_t n = a.poset().size();
  const std::size_t strict_count = a.poset().strict_relations().size();
  for (ElementId e = 1; e < n; ++e) {
    const auto weight = static_cast<long>(e + 1);
    if (a.variant() == AlgebraVariant::type_a) {
      x.coeffs[strict_count + e - 1] = weight;
    } else {
      x.coeffs[*a.unit_index(0, 0)] += weight;
      x.coeffs[*a.unit_index(e, e)] = -weight;
    }
  }
  return x;
}

AlgebraElement paper_witness(const LiePosetAlgebra& a) {
  if (auto x = try_paper_witness(a)) return *std::move(x);
  throw Error(ErrorCode::no_known_witness,
              "no explicit witness for " + std::string(to_string(a.variant())) + " algebra over this poset");
}

AlgebraElement random_element(const LiePosetAlgebra& a, std::uint64_t seed, std::uint64_t stream,
                              std::int64_t coeff_bound) {
  auto rng = stream_rng(seed, stream);
  std::uniform_int_distribution<std::int64_t> coeff(-coeff_bound, coeff_bound);
  AlgebraElement x = a.zero();
  for (auto& c : x.coeffs) c = coeff(rng);
  return x;
}

SampleResult sample_generic(const LiePosetAlgebra& a, std::uint64_t seed, std::int64_t coeff_bound, int trials) {
  if (trials < 1) throw Error(ErrorCode::invalid_parameter, "trials must be at least 1");
  if (coeff_bound < 1) throw Error(ErrorCode::invalid_parameter, "coefficient bound must be at least 1");
  return sample_streams(a, seed, coeff_bound, 0, trials);
}

BreadthReport breadth(const LiePosetAlgebra& a, const BreadthOptions& options) {
  if (options.trials < 1) throw Error(ErrorCode::invalid_parameter, "trials must be at least 1");
  if (options.coeff_bound < 1) throw Error(ErrorCode::invalid_parameter, "coefficient bound must be at least 1");

  BreadthReport report;
  report.seed = options.seed;
  report.coeff_bound = options.coeff_bound;
  report.upper_bounds = upper_bounds(a);
  report.best_upper = *std::min_element(report.upper_bounds.begin(), report.upper_bounds.end(),
                                        [](const Bound& x, const Bound& y) { return x.value < y.value; });

  report.witness = a.zero();
  report.witness_rank = 0;
  if (auto w = try_paper_witness(a)) {
    report.witness_rank = static_cast<std::int64_t>(element_breadth(a, *w));
    report.witness = *std::move(w);
  }

  const int rounds = options.mode == BreadthMode::certified ? options.retry_cap + 1 : 1;
  std::int64_t bound = options.coeff_bound;
  for (int round = 0; round < rounds; ++round) {
    if (round > 0 && report.witness_rank == report.best_upper.value) break;
    auto sample = sample_streams(a, options.seed, bound, static_cast<std::uint64_t>(round) * options.trials,
                                 options.trials);
    report.trials += options.trials;
    report.coeff_bound = bound;
    if (sample.max_rank > report.witness_rank) {
      report.witness_rank = sample.max_rank;
      report.witness = std::move(sample.best);
    }
    bound *= 2;
  }

  report.value = report.witness_rank;
  if (report.value > report.best_upper.value) {
    throw std::logic_error("element rank exceeds a proven upper bound");
  }
  report.status = report.value == report.best_upper.value ? BreadthStatus::certified : BreadthStatus::probabilistic;
  return report;
}

std::int64_t formula_breadth(const FamilyDescriptor& d, AlgebraVariant v) {
  require_positive_params(d);
  if (v != AlgebraVariant::nilpotent) return count_relations_closed_form(d);

  const auto [a, b, c] = d.params;
  switch (d.kind) {
    case FamilyKind::chain:
    case FamilyKind::tree:
      return count_non_covering_closed_form(d);
    case FamilyKind::grid:
      if (a == 2) return count_non_covering_closed_form(d);
      break;
    case FamilyKind::double_fan:
      if (b < a && b < c) return b * (a + c - b);
      return a * c;
  }
  throw Error(ErrorCode::no_known_formula, d.to_string() + " (" + std::string(to_string(v)) + ")");
}

Bound closed_form_bound(const FamilyDescriptor& d, AlgebraVariant v) {
  const std::int64_t value = formula_breadth(d, v);
  std::string theorem;
  if (v != AlgebraVariant::nilpotent) {
    theorem = "thm1";
  } else {
    switch (d.kind) {
      case FamilyKind::chain: theorem = "thm2a"; break;
      case FamilyKind::grid: theorem = "thm2b"; break;
      case FamilyKind::tree: theorem = "thm2c"; break;
      case FamilyKind::double_fan: theorem = "thm6"; break;
    }
  }
  return {value, Provenance::closed_form, theorem};
}

OrderedAdjoint mx_ordered(const LiePosetAlgebra& a, const AlgebraElement& x) {
  a.check_member(x);
  auto shape = a.variant() == AlgebraVariant::nilpotent ? detect_double_fan(a.poset()) : std::nullopt;
  if (!shape) throw Error(ErrorCode::not_double_fan, "algebra is not a nilpotent double-fan algebra");

  const auto& bs = shape->bottom;
  const auto& ms = shape->middle;
  const auto& ts = shape->top;
  const std::size_t r0 = bs.size(), r1 = ms.size(), r2 = ts.size();

  std::vector<std::size_t> b1, b2, b3;
  for (std::size_t j = 0; j < r1; ++j) {
    for (std::size_t i = 0; i < r0; ++i) b1.push_back(*a.unit_index(bs[i], ms[j]));
  }
  for (std::size_t k = 0; k < r2; ++k) {
    for (std::size_t j = 0; j < r1; ++j) b2.push_back(*a.unit_index(ms[j], ts[k]));
  }
  for (std::size_t k = 0; k < r2; ++k) {
    for (std::size_t i = 0; i < r0; ++i) b3.push_back(*a.unit_index(bs[i], ts[k]));
  }
  std::vector<std::size_t> cols = b1, rows = b3;
  cols.insert(cols.end(), b2.begin(), b2.end());
  cols.insert(cols.end(), b3.begin(), b3.end());
  rows.insert(rows.end(), b2.begin(), b2.end());
  rows.insert(rows.end(), b1.begin(), b1.end());

  const RationalMatrix ad = ad_matrix(a, x);
  OrderedAdjoint out;
  out.matrix = RationalMatrix(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out.matrix(r, c) = ad(rows[r], cols[c]);
  }

  BlockReport& rep = out.report;
  rep.r0 = r0;
  rep.r1 = r1;
  rep.r2 = r2;
  rep.a_block = RationalMatrix(r0, r1);
  for (std::size_t i = 0; i < r0; ++i) {
    for (std::size_t j = 0; j < r1; ++j) rep.a_block(i, j) = x.coeffs[*a.unit_index(bs[i], ms[j])];
  }
  auto coeff_mt = [&](std::size_t j, std::size_t k) -> const Scalar& {
    return x.coeffs[*a.unit_index(ms[j], ts[k])];
  };

  const RationalMatrix& m = out.matrix;
  const std::size_t n1 = b1.size(), n2 = b2.size(), n3 = b3.size();

  rep.lower_rows_zero = true;
  for (std::size_t r = n3; r < rows.size() && rep.lower_rows_zero; ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!m(r, c).is_zero()) {
        rep.lower_rows_zero = false;
        break;
      }
    }
  }
  rep.b3_columns_zero = true;
  for (std::size_t r = 0; r < rows.size() && rep.b3_columns_zero; ++r) {
    for (std::size_t c = n1 + n2; c < n1 + n2 + n3; ++c) {
      if (!m(r, c).is_zero()) {
        rep.b3_columns_zero = false;
        break;
      }
    }
  }
  rep.scaled_identity_blocks = true;
  for (std::size_t k = 0; k < r2; ++k) {
    for (std::size_t i = 0; i < r0; ++i) {
      for (std::size_t j = 0; j < r1; ++j) {
        for (std::size_t i2 = 0; i2 < r0; ++i2) {
          const Scalar expected = i == i2 ? Scalar(-coeff_mt(j, k)) : Scalar(0);
          if (m(k * r0 + i, j * r0 + i2) != expected) rep.scaled_identity_blocks = false;
        }
      }
    }
  }
  rep.block_diagonal_a = true;
  for (std::size_t k = 0; k < r2; ++k) {
    for (std::size_t i = 0; i < r0; ++i) {
      for (std::size_t k2 = 0; k2 < r2; ++k2) {
        for (std::size_t j = 0; j < r1; ++j) {
          const Scalar expected = k == k2 ? rep.a_block(i, j) : Scalar(0);
          if (m(k * r0 + i, n1 + k2 * r1 + j) != expected) rep.block_diagonal_a = false;
        }
      }
    }
  }
  rep.rank = rank(m);
  return out;
}

std::set<std::int64_t> breadth_spectrum_sample(const LiePosetAlgebra& a, std::uint64_t seed, int trials) {
  if (trials < 1) throw Error(ErrorCode::invalid_parameter, "trials must be at least 1");
  std::set<std::int64_t> seen{0};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    seen.insert(static_cast<std::int64_t>(element_breadth(a, a.basis_element(i))));
  }
  if (auto w = try_paper_witness(a)) seen.insert(static_cast<std::int64_t>(element_breadth(a, *w)));

  // sparse small elements reach the intermediate ranks that generic ones skip
  constexpr double densities[] = {0.15, 0.3, 0.5, 0.75, 1.0};
  for (int t = 0; t < trials; ++t) {
    auto rng = stream_rng(seed, static_cast<std::uint64_t>(t));
    std::bernoulli_distribution keep(densities[t % 5]);
    std::uniform_int_distribution<int> coeff(-3, 3);
    AlgebraElement x = a.zero();
    for (auto& c : x.coeffs) {
      if (keep(rng)) c = coeff(rng);
    }
    seen.insert(static_cast<std::int64_t>(element_breadth(a, x)));
  }
  return seen;
}

}  // namespace posetlie
