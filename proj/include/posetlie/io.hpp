#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "posetlie/breadth.hpp"

namespace posetlie {

using Json = nlohmann::ordered_json;

// {"n": 4, "covers": [[1,2],[2,3],[2,4]], "labels": ["1","2","3","4"]}
// Cover endpoints are 1-based positions in "labels"; "labels" is optional.
Json poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const nlohmann::json& j);
FinitePoset read_poset_file(const std::string& path);

struct WitnessEntry {
  std::string row;  // element labels
  std::string col;
  Scalar value;

  friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

struct BoundRecord {
  std::int64_t value = 0;
  std::string provenance;

  friend bool operator==(const BoundRecord&, const BoundRecord&) = default;
};

// Field-by-field image of the report JSON.
struct ReportRecord {
  std::int64_t dim = 0;
  std::string variant;
  std::int64_t value = 0;
  std::string status;
  std::vector<WitnessEntry> witness;
  std::vector<BoundRecord> upper_bounds;
  std::uint64_t seed = 0;
  std::int64_t trials = 0;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

// The witness is written as the nonzero entries of its n x n matrix.
Json report_to_json(const LiePosetAlgebra& a, const BreadthReport& r);
ReportRecord report_record(const LiePosetAlgebra& a, const BreadthReport& r);
ReportRecord report_from_json(const nlohmann::json& j);
AlgebraElement witness_from_record(const LiePosetAlgebra& a, const ReportRecord& r);

}  // namespace posetlie
