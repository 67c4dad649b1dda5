#include "posetlie/io.hpp"

#include <fstream>
#include <sstream>

namespace posetlie {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::invalid_input, what); }

template <typename T>
T get_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) malformed(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    malformed(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

Json poset_to_json(const FinitePoset& p) {
  Json j;
  j["n"] = p.size();
  Json covers = Json::array();
  for (const auto& r : p.covering_relations()) covers.push_back({r.lesser + 1, r.greater + 1});
  j["covers"] = std::move(covers);
  j["labels"] = p.labels();
  return j;
}

FinitePoset poset_from_json(const nlohmann::json& j) {
  if (!j.is_object()) malformed("poset must be a JSON object");
  const auto& n_field = j.contains("n") ? j.at("n") : nlohmann::json();
  if (!n_field.is_number_integer() || n_field.get<std::int64_t>() < 0) malformed("'n' must be a non-negative integer");
  const auto n = n_field.get<std::size_t>();

  std::vector<Relation> covers;
  if (j.contains("covers")) {
    const auto& cs = j.at("covers");
    if (!cs.is_array()) malformed("'covers' must be an array");
    for (const auto& c : cs) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
        malformed("each cover must be a pair of integers");
      }
      const auto lo = c[0].get<std::int64_t>(), hi = c[1].get<std::int64_t>();
      if (lo < 1 || hi < 1 || lo > static_cast<std::int64_t>(n) || hi > static_cast<std::int64_t>(n)) {
        throw Error(ErrorCode::out_of_range, "cover [" + std::to_string(lo) + "," + std::to_string(hi) +
                                                 "] outside 1.." + std::to_string(n));
      }
      covers.push_back({static_cast<ElementId>(lo - 1), static_cast<ElementId>(hi - 1)});
    }
  }

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& ls = j.at("labels");
    if (!ls.is_array() || ls.size() != n) malformed("'labels' must be an array of n strings");
    for (const auto& l : ls) {
      if (!l.is_string()) malformed("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return from_covers(n, covers, std::move(labels));
}

FinitePoset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    malformed("'" + path + "' is not valid JSON: " + e.what());
  }
  return poset_from_json(j);
}

ReportRecord report_record(const LiePosetAlgebra& a, const BreadthReport& r) {
  ReportRecord rec;
  rec.dim = static_cast<std::int64_t>(a.dim());
  rec.variant = std::string(to_string(a.variant()));
  rec.value = r.value;
  rec.status = std::string(to_string(r.status));
  const RationalMatrix m = a.to_matrix(r.witness);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (!m(i, k).is_zero()) rec.witness.push_back({a.poset().label(i), a.poset().label(k), m(i, k)});
    }
  }
  for (const auto& b : r.upper_bounds) rec.upper_bounds.push_back({b.value, b.provenance_name()});
  rec.seed = r.seed;
  rec.trials = r.trials;
  return rec;
}

Json report_to_json(const LiePosetAlgebra& a, const BreadthReport& r) {
  const ReportRecord rec = report_record(a, r);
  Json j;
  j["dim"] = rec.dim;
  j["variant"] = rec.variant;
  j["value"] = rec.value;
  j["status"] = rec.status;
  Json witness = Json::array();
  for (const auto& e : rec.witness) witness.push_back({e.row, e.col, to_fraction_string(e.value)});
  j["witness"] = std::move(witness);
  Json bounds = Json::array();
  for (const auto& b : rec.upper_bounds) bounds.push_back({{"value", b.value}, {"provenance", b.provenance}});
  j["upper_bounds"] = std::move(bounds);
  j["seed"] = rec.seed;
  j["trials"] = rec.trials;
  return j;
}

ReportRecord report_from_json(const nlohmann::json& j) {
  if (!j.is_object()) malformed("report must be a JSON object");
  ReportRecord rec;
  rec.dim = get_field<std::int64_t>(j, "dim");
  rec.variant = get_field<std::string>(j, "variant");
  rec.value = get_field<std::int64_t>(j, "value");
  rec.status = get_field<std::string>(j, "status");
  if (rec.status != "certified" && rec.status != "probabilistic") malformed("unknown status '" + rec.status + "'");
  const auto witness = get_field<nlohmann::json>(j, "witness");
  if (!witness.is_array()) malformed("'witness' must be an array");
  for (const auto& e : witness) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() || !e[2].is_string()) {
      malformed("witness entries must be [label, label, \"num/den\"]");
    }
    rec.witness.push_back({e[0].get<std::string>(), e[1].get<std::string>(), parse_fraction(e[2].get<std::string>())});
  }
  const auto bounds = get_field<nlohmann::json>(j, "upper_bounds");
  if (!bounds.is_array()) malformed("'upper_bounds' must be an array");
  for (const auto& b : bounds) {
    if (!b.is_object()) malformed("upper bound must be an object");
    rec.upper_bounds.push_back({get_field<std::int64_t>(b, "value"), get_field<std::string>(b, "provenance")});
  }
  rec.seed = get_field<std::uint64_t>(j, "seed");
  rec.trials = get_field<std::int64_t>(j, "trials");
  return rec;
}

AlgebraElement witness_from_record(const LiePosetAlgebra& a, const ReportRecord& r) {
  if (r.dim != static_cast<std::int64_t>(a.dim()) || r.variant != to_string(a.variant())) {
    throw Error(ErrorCode::algebra_mismatch, "report describes a different algebra");
  }
  const FinitePoset& p = a.poset();
  RationalMatrix m(p.size(), p.size());
  for (const auto& e : r.witness) {
    auto row = p.find_label(e.row);
    auto col = p.find_label(e.col);
    if (!row || !col) malformed("witness refers to unknown element '" + (row ? e.col : e.row) + "'");
    m(*row, *col) = e.value;
  }
  return a.from_matrix(m);
}

}  // namespace posetlie
