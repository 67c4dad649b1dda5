#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "posetlie/breadth.hpp"
#include "posetlie/io.hpp"

namespace posetlie {

struct VerificationCase {
  std::string input;
  std::int64_t expected = 0;
  std::int64_t computed = 0;
  std::string status;  // "certified", "probabilistic" or "exact" for pure counts
  bool ok = false;
};

struct VerificationOutcome {
  std::string campaign;
  std::vector<VerificationCase> cases;
  bool pass = false;
  bool report_only = false;
};

// Built-in sweep parameters; every field can be overridden from the CLI.
struct CampaignOptions {
  std::uint64_t seed = 11;
  int random_posets = 200;     // thm1
  std::size_t max_random_size = 7;
  int max_chain = 9;           // thm2: chains 2..max_chain
  int max_grid_columns = 6;    // thm2: 2 x n grids, n = 1..max
  int max_fan_param = 4;       // thm6: 1 <= r_i <= max
  int conjecture_rows = 3;     // conjecture-grid: m x n, n = 1..max
  int conjecture_max_columns = 4;
  BreadthOptions breadth;
};

// Trees swept by thm2 and lemma-counts.
const std::vector<std::pair<int, int>>& default_tree_sweep();

std::vector<std::string> campaign_names();

// thm1 | thm2 | thm6 | lemma-counts | conjecture-grid
VerificationOutcome run_campaign(std::string_view campaign, const CampaignOptions& options);

Json outcome_to_json(const VerificationOutcome& o);

}  // namespace posetlie
