#include "catch_amalgamated.hpp"
#include "posetlie/io.hpp"

using namespace posetlie;

namespace {

std::vector<LiePosetAlgebra> report_algebras() {
  std::vector<LiePosetAlgebra> out;
  const FinitePoset star = from_covers(4, {{0, 1}, {1, 2}, {1, 3}});
  for (auto v : {AlgebraVariant::full, AlgebraVariant::type_a, AlgebraVariant::nilpotent}) out.push_back(build_algebra(star, v));
  out.push_back(build_algebra(build_family(FamilyDescriptor::double_fan(4, 2, 3)), AlgebraVariant::nilpotent));
  out.push_back(build_algebra(build_family(FamilyDescriptor::grid(3, 2)), AlgebraVariant::nilpotent));
  out.push_back(build_algebra(random_poset(6, 0.5, 12), AlgebraVariant::type_a));
  out.push_back(build_algebra(antichain(2), AlgebraVariant::nilpotent));
  return out;
}

Json valid_report() {
  const auto a = build_algebra(build_family(FamilyDescriptor::chain(4)), AlgebraVariant::nilpotent);
  return report_to_json(a, breadth(a));
}

}  // namespace

TEST_CASE("report JSON layout") {
  const auto a = build_algebra(build_family(FamilyDescriptor::double_fan(4, 2, 3)), AlgebraVariant::nilpotent);
  const auto j = report_to_json(a, breadth(a));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"dim", "variant", "value", "status", "witness", "upper_bounds", "seed", "trials"});
  CHECK(j["dim"] == 26);
  CHECK(j["variant"] == "nilpotent");
  CHECK(j["value"] == 10);
  CHECK(j["status"] == "certified");
  for (const auto& e : j["witness"]) {
    REQUIRE(e.size() == 3);
    CHECK(e[2].get<std::string>().find('/') != std::string::npos);
  }
}

TEST_CASE("report round trip") {
  for (const auto& a : report_algebras()) {
    BreadthOptions opts;
    opts.seed = 3;
    const auto rep = breadth(a, opts);
    const auto j = report_to_json(a, rep);
    const auto rec = report_from_json(nlohmann::json::parse(j.dump()));
    CHECK(rec == report_record(a, rep));
    CHECK(report_to_json(a, rep).dump() == j.dump());

    const auto w = witness_from_record(a, rec);
    CHECK(w == rep.witness);
    CHECK(element_breadth(a, w) == rec.value);
  }
}

TEST_CASE("witness of a type A report keeps the trace zero") {
  const auto a = build_algebra(from_covers(3, {{0, 1}, {1, 2}}), AlgebraVariant::type_a);
  const auto rec = report_record(a, breadth(a));
  Scalar trace = 0;
  for (const auto& e : rec.witness)
    if (e.row == e.col) trace += e.value;
  CHECK(trace == 0);
}

TEST_CASE("malformed reports") {
  CHECK_NOTHROW(report_from_json(valid_report()));
  CHECK_THROWS_AS(report_from_json(nlohmann::json::array()), Error);

  auto missing = valid_report();
  missing.erase("value");
  CHECK_THROWS_AS(report_from_json(missing), Error);

  auto wrong_type = valid_report();
  wrong_type["dim"] = "six";
  CHECK_THROWS_AS(report_from_json(wrong_type), Error);

  auto bad_status = valid_report();
  bad_status["status"] = "maybe";
  CHECK_THROWS_AS(report_from_json(bad_status), Error);

  auto bad_entry = valid_report();
  bad_entry["witness"] = nlohmann::json::array({nlohmann::json::array({"1", "2"})});
  CHECK_THROWS_AS(report_from_json(bad_entry), Error);

  auto bad_fraction = valid_report();
  bad_fraction["witness"] = nlohmann::json::array({nlohmann::json::array({"1", "2", "1/0"})});
  CHECK_THROWS_AS(report_from_json(bad_fraction), Error);
}

TEST_CASE("witness records must fit the algebra") {
  const auto a = build_algebra(build_family(FamilyDescriptor::chain(4)), AlgebraVariant::nilpotent);
  auto rec = report_from_json(valid_report());

  auto unknown = rec;
  unknown.witness.push_back({"9", "1", Scalar(1)});
  CHECK_THROWS_AS(witness_from_record(a, unknown), Error);

  auto outside = rec;
  outside.witness.push_back({"2", "1", Scalar(1)});
  CHECK_THROWS_AS(witness_from_record(a, outside), Error);

  const auto other = build_algebra(a.poset(), AlgebraVariant::full);
  try {
    witness_from_record(other, rec);
    FAIL("expected AlgebraMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::algebra_mismatch);
  }
}
