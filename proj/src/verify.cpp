#include "posetlie/verify.hpp"

#include <random>
#include <sstream>

namespace posetlie {

namespace {

VerificationCase breadth_case(const FinitePoset& p, AlgebraVariant v, std::int64_t expected, std::string input,
                              const BreadthOptions& options) {
  const auto a = build_algebra(p, v);
  const auto report = breadth(a, options);
  VerificationCase c;
  c.input = std::move(input) + " " + std::string(to_string(v));
  c.expected = expected;
  c.computed = report.value;
  c.status = std::string(to_string(report.status));
  c.ok = c.expected == c.computed && report.status == BreadthStatus::certified;
  return c;
}

VerificationCase family_case(const FamilyDescriptor& d, AlgebraVariant v, const BreadthOptions& options) {
  return breadth_case(build_family(d), v, formula_breadth(d, v), d.to_string(), options);
}

VerificationCase count_case(std::string input, std::int64_t expected, std::int64_t computed) {
  return {std::move(input), expected, computed, "exact", expected == computed};
}

void run_thm1(VerificationOutcome& out, const CampaignOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> size(1, o.max_random_size);
  std::uniform_real_distribution<double> density(0.15, 0.85);
  for (int k = 0; k < o.random_posets; ++k) {
    const std::size_t n = size(rng);
    const double prob = density(rng);
    const std::uint64_t poset_seed = rng();
    const FinitePoset p = random_poset(n, prob, poset_seed);
    std::ostringstream name;
    name << "random(n=" << n << ",p=" << prob << ",seed=" << poset_seed << ")";
    const auto expected = static_cast<std::int64_t>(p.strict_relations().size());
    out.cases.push_back(breadth_case(p, AlgebraVariant::full, expected, name.str(), o.breadth));
    out.cases.push_back(breadth_case(p, AlgebraVariant::type_a, expected, name.str(), o.breadth));
  }
}

void run_thm2(VerificationOutcome& out, const CampaignOptions& o) {
  for (int n = 2; n <= o.max_chain; ++n) {
    out.cases.push_back(family_case(FamilyDescriptor::chain(n), AlgebraVariant::nilpotent, o.breadth));
  }
  for (int n = 1; n <= o.max_grid_columns; ++n) {
    out.cases.push_back(family_case(FamilyDescriptor::grid(2, n), AlgebraVariant::nilpotent, o.breadth));
  }
  for (auto [m, n] : default_tree_sweep()) {
    out.cases.push_back(family_case(FamilyDescriptor::tree(m, n), AlgebraVariant::nilpotent, o.breadth));
  }
}

void run_thm6(VerificationOutcome& out, const CampaignOptions& o) {
  for (int r0 = 1; r0 <= o.max_fan_param; ++r0) {
    for (int r1 = 1; r1 <= o.max_fan_param; ++r1) {
      for (int r2 = 1; r2 <= o.max_fan_param; ++r2) {
        out.cases.push_back(family_case(FamilyDescriptor::double_fan(r0, r1, r2), AlgebraVariant::nilpotent, o.breadth));
      }
    }
  }
}

void run_lemma_counts(VerificationOutcome& out, const CampaignOptions& o) {
  auto enumerated = [](const FamilyDescriptor& d) {
    return static_cast<std::int64_t>(build_family(d).non_covering_relations().size());
  };
  for (int n = 2; n <= o.max_chain; ++n) {
    const auto d = FamilyDescriptor::chain(n);
    out.cases.push_back(count_case(d.to_string() + " non-covering", count_non_covering_closed_form(d), enumerated(d)));
  }
  for (int n = 1; n <= o.max_grid_columns; ++n) {
    const auto d = FamilyDescriptor::grid(2, n);
    out.cases.push_back(count_case(d.to_string() + " non-covering", count_non_covering_closed_form(d), enumerated(d)));
  }
  for (auto [m, n] : default_tree_sweep()) {
    const auto d = FamilyDescriptor::tree(m, n);
    out.cases.push_back(count_case(d.to_string() + " non-covering", count_non_covering_closed_form(d), enumerated(d)));
    if (n > 2) {
      // f(n) = m f(n-1) + m^2 (m^(n-2) - 1) / (m - 1)
      std::int64_t mp = 1;
      for (int i = 0; i < n - 2; ++i) mp *= m;
      const std::int64_t recursion =
          m * enumerated(FamilyDescriptor::tree(m, n - 1)) + std::int64_t{m} * m * (mp - 1) / (m - 1);
      out.cases.push_back(count_case(d.to_string() + " recursion", recursion, enumerated(d)));
    }
  }
}

void run_conjecture(VerificationOutcome& out, const CampaignOptions& o) {
  for (int n = 1; n <= o.conjecture_max_columns; ++n) {
    const auto d = FamilyDescriptor::grid(o.conjecture_rows, n);
    const FinitePoset p = build_family(d);
    const auto expected = static_cast<std::int64_t>(p.non_covering_relations().size());
    auto c = breadth_case(p, AlgebraVariant::nilpotent, expected, d.to_string(), o.breadth);
    c.ok = c.expected == c.computed;
    out.cases.push_back(std::move(c));
  }
}

}  // namespace

const std::vector<std::pair<int, int>>& default_tree_sweep() {
  static const std::vector<std::pair<int, int>> sweep{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
  return sweep;
}

std::vector<std::string> campaign_names() { return {"thm1", "thm2", "thm6", "lemma-counts", "conjecture-grid"}; }

VerificationOutcome run_campaign(std::string_view campaign, const CampaignOptions& options) {
  VerificationOutcome out;
  out.campaign = std::string(campaign);
  if (campaign == "thm1") run_thm1(out, options);
  else if (campaign == "thm2") run_thm2(out, options);
  else if (campaign == "thm6") run_thm6(out, options);
  else if (campaign == "lemma-counts") run_lemma_counts(out, options);
  else if (campaign == "conjecture-grid") {
    out.report_only = true;
    run_conjecture(out, options);
  } else {
    throw Error(ErrorCode::invalid_input, "unknown campaign '" + std::string(campaign) + "'");
  }

  out.pass = true;
  if (!out.report_only) {
    for (const auto& c : out.cases) out.pass = out.pass && c.ok;
  }
  return out;
}

Json outcome_to_json(const VerificationOutcome& o) {
  Json j;
  j["campaign"] = o.campaign;
  j["pass"] = o.pass;
  j["report_only"] = o.report_only;
  Json cases = Json::array();
  for (const auto& c : o.cases) {
    cases.push_back({{"input", c.input}, {"expected", c.expected}, {"computed", c.computed}, {"status", c.status},
                     {"ok", c.ok}});
  }
  j["cases"] = std::move(cases);
  return j;
}

}  // namespace posetlie
