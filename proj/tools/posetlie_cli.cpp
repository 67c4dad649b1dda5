// posetlie: build posets and Lie poset algebras, compute breadth, and run the
// verification campaigns.
//
// Exit status: 0 success, 1 verification failure, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "posetlie/verify.hpp"

using namespace posetlie;

namespace {

struct PosetSource {
  std::string family;
  std::vector<std::int64_t> params;
  std::string input;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "chain | grid | tree | fan")
        ->check(CLI::IsMember({"chain", "grid", "tree", "fan"}));
    cmd->add_option("--params", params, "family parameters, e.g. 4,2,3")->delimiter(',');
    cmd->add_option("--input", input, "poset JSON file");
  }

  FinitePoset load() const {
    if (!input.empty()) {
      if (!family.empty()) throw Error(ErrorCode::invalid_input, "give either --family or --input, not both");
      return read_poset_file(input);
    }
    if (family.empty()) throw Error(ErrorCode::invalid_input, "a poset source (--family or --input) is required");
    auto need = [&](std::size_t k) {
      if (params.size() != k) {
        throw Error(ErrorCode::invalid_input, family + " takes " + std::to_string(k) + " parameter(s)");
      }
    };
    if (family == "chain") {
      need(1);
      return build_family(FamilyDescriptor::chain(params[0]));
    }
    if (family == "grid") {
      need(2);
      return build_family(FamilyDescriptor::grid(params[0], params[1]));
    }
    if (family == "tree") {
      need(2);
      return build_family(FamilyDescriptor::tree(params[0], params[1]));
    }
    need(3);
    return build_family(FamilyDescriptor::double_fan(params[0], params[1], params[2]));
  }
};

std::uint64_t default_seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("POSETLIE_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::invalid_input, "POSETLIE_SEED is not an unsigned integer");
  }
  return fallback;
}

std::string relation_text(const FinitePoset& p, const Relation& r) {
  return p.label(r.lesser) + "<" + p.label(r.greater);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::invalid_input, "cannot write '" + path + "'");
  out << text;
}

int cmd_poset(const PosetSource& src, const std::string& dot_path, const std::string& output_path, bool as_json) {
  const FinitePoset p = src.load();
  if (!dot_path.empty()) write_file(dot_path, hasse_dot(p));
  if (!output_path.empty()) write_file(output_path, poset_to_json(p).dump(2) + "\n");

  const auto non_covering = p.non_covering_relations();
  const auto ext = p.extremal_elements();
  const auto rel_e = p.extremal_relations();
  if (as_json) {
    Json j;
    j["elements"] = p.size();
    j["relations"] = p.strict_relations().size();
    j["covers"] = p.covering_relations().size();
    j["non_covering"] = non_covering.size();
    Json e = Json::array();
    for (auto id : ext) e.push_back(p.label(id));
    j["extremal"] = std::move(e);
    Json re = Json::array();
    for (const auto& r : rel_e) re.push_back({p.label(r.lesser), p.label(r.greater)});
    j["extremal_relations"] = std::move(re);
    j["poset"] = poset_to_json(p);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "elements: " << p.size() << "\n";
  std::cout << "relations: " << p.strict_relations().size() << "\n";
  std::cout << "covers: " << p.covering_relations().size() << "\n";
  std::cout << "non_covering: " << non_covering.size() << "\n";
  std::cout << "extremal:";
  for (auto id : ext) std::cout << " " << p.label(id);
  std::cout << "\nextremal_relations:";
  for (const auto& r : rel_e) std::cout << " " << relation_text(p, r);
  std::cout << "\n";
  return 0;
}

BreadthMode parse_mode(const std::string& mode) {
  return mode == "fast" ? BreadthMode::fast : BreadthMode::certified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie poset algebra breadth toolkit"};
  app.require_subcommand(1);

  PosetSource poset_src, breadth_src, spectrum_src;
  std::string dot_path, output_path;
  bool poset_json = false;
  auto* poset_cmd = app.add_subcommand("poset", "summarize a poset, optionally writing DOT or JSON");
  poset_src.attach(poset_cmd);
  poset_cmd->add_option("--dot", dot_path, "write the Hasse diagram to this file");
  poset_cmd->add_option("--output", output_path, "write the poset JSON to this file");
  poset_cmd->add_flag("--json", poset_json, "print the summary as JSON");

  std::string variant = "nilpotent", mode = "certified";
  std::optional<std::uint64_t> seed;
  int trials = 3;
  std::int64_t coeff_bound = 1'000'000;
  auto* breadth_cmd = app.add_subcommand("breadth", "compute the breadth of a Lie poset algebra");
  breadth_src.attach(breadth_cmd);
  breadth_cmd->add_option("--variant", variant)->check(CLI::IsMember({"full", "typea", "nilpotent"}));
  breadth_cmd->add_option("--mode", mode)->check(CLI::IsMember({"fast", "certified"}));
  breadth_cmd->add_option("--seed", seed);
  breadth_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
  breadth_cmd->add_option("--coeff-bound", coeff_bound)->check(CLI::PositiveNumber);

  std::string campaign;
  std::optional<std::uint64_t> verify_seed;
  CampaignOptions campaign_options;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification campaign");
  verify_cmd->add_option("--campaign", campaign)->required()->check(CLI::IsMember(campaign_names()));
  verify_cmd->add_option("--seed", verify_seed);
  verify_cmd->add_option("--count", campaign_options.random_posets, "random posets (thm1)")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-n", campaign_options.max_random_size, "largest random poset (thm1)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--trials", campaign_options.breadth.trials)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--coeff-bound", campaign_options.breadth.coeff_bound)->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify_json, "print the outcome as JSON");

  std::string spectrum_variant = "nilpotent";
  std::optional<std::uint64_t> spectrum_seed;
  int spectrum_trials = 200;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "sample the set of element breadths (experimental)");
  spectrum_src.attach(spectrum_cmd);
  spectrum_cmd->add_option("--variant", spectrum_variant)->check(CLI::IsMember({"full", "typea", "nilpotent"}));
  spectrum_cmd->add_option("--seed", spectrum_seed);
  spectrum_cmd->add_option("--trials", spectrum_trials)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*poset_cmd) return cmd_poset(poset_src, dot_path, output_path, poset_json);

    if (*breadth_cmd) {
      const FinitePoset p = breadth_src.load();
      const auto a = build_algebra(p, parse_variant(variant));
      BreadthOptions opts;
      opts.mode = parse_mode(mode);
      opts.seed = seed ? *seed : default_seed(1);
      opts.trials = trials;
      opts.coeff_bound = coeff_bound;
      std::cout << report_to_json(a, breadth(a, opts)).dump(2) << "\n";
      return 0;
    }

    if (*verify_cmd) {
      campaign_options.seed = verify_seed ? *verify_seed : default_seed(campaign_options.seed);
      const auto outcome = run_campaign(campaign, campaign_options);
      if (verify_json) {
        std::cout << outcome_to_json(outcome).dump(2) << "\n";
      } else {
        for (const auto& c : outcome.cases) {
          std::cout << (c.ok ? "ok   " : (outcome.report_only ? "diff " : "FAIL ")) << c.input
                    << " expected=" << c.expected << " computed=" << c.computed << " " << c.status << "\n";
        }
        std::cout << outcome.campaign << ": " << (outcome.report_only ? "report only, " : "")
                  << (outcome.pass ? "pass" : "FAIL") << " (" << outcome.cases.size() << " cases)\n";
      }
      return outcome.pass ? 0 : 1;
    }

    if (*spectrum_cmd) {
      const FinitePoset p = spectrum_src.load();
      const auto a = build_algebra(p, parse_variant(spectrum_variant));
      const std::uint64_t s = spectrum_seed ? *spectrum_seed : default_seed(1);
      Json j;
      j["dim"] = a.dim();
      j["variant"] = spectrum_variant;
      j["values"] = breadth_spectrum_sample(a, s, spectrum_trials);
      j["seed"] = s;
      j["trials"] = spectrum_trials;
      j["experimental"] = true;
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
