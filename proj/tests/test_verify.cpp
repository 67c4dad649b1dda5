#include "catch_amalgamated.hpp"
#include "posetlie/verify.hpp"

using namespace posetlie;

namespace {

bool all_ok(const VerificationOutcome& o) {
  for (const auto& c : o.cases)
    if (!c.ok) return false;
  return true;
}

}  // namespace

TEST_CASE("built-in campaigns pass") {
  CampaignOptions opts;
  const std::vector<std::pair<std::string, std::size_t>> expected_sizes{
      {"thm2", 8 + 6 + 5}, {"thm6", 64}, {"thm1", 400}};
  for (const auto& [name, size] : expected_sizes) {
    const auto out = run_campaign(name, opts);
    CHECK(out.campaign == name);
    CHECK(out.cases.size() == size);
    CHECK(out.pass);
    CHECK_FALSE(out.report_only);
    CHECK(all_ok(out));
    for (const auto& c : out.cases) CHECK(c.status == "certified");
  }

  const auto counts = run_campaign("lemma-counts", opts);
  CHECK(counts.pass);
  CHECK(all_ok(counts));
  for (const auto& c : counts.cases) CHECK(c.status == "exact");
}

TEST_CASE("campaigns are reproducible") {
  CampaignOptions opts;
  opts.random_posets = 20;
  const auto a = outcome_to_json(run_campaign("thm1", opts)).dump();
  CHECK(a == outcome_to_json(run_campaign("thm1", opts)).dump());
  opts.seed = 12;
  CHECK(a != outcome_to_json(run_campaign("thm1", opts)).dump());
}

TEST_CASE("conjecture campaign is report only") {
  CampaignOptions opts;
  const auto out = run_campaign("conjecture-grid", opts);
  CHECK(out.report_only);
  CHECK(out.pass);
  CHECK(out.cases.size() == 4);
  const auto j = outcome_to_json(out);
  CHECK(j["report_only"] == true);
}

TEST_CASE("unknown campaign") {
  CHECK_THROWS_AS(run_campaign("thm9", CampaignOptions{}), Error);
  CHECK(campaign_names().size() == 5);
}
