#pragma once

// The genus_lab command line. Every subcommand builds an ordered JSON report
// ("schema": "genus-lab/1") that is then rendered as table, json or csv.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace genuslab {

struct RunConfig {
  int degree_bound = 8;
  std::uint64_t budget = 10'000'000;
  unsigned workers = 1;
  std::string format = "table";
  std::uint64_t seed = 1;
};

using Report = nlohmann::ordered_json;

/// Exit codes of run().
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kBadInput = 2, kBudget = 3 };

std::string render(const Report& report, const std::string& format);

/// The replayed example claims; exit status follows the FAIL rows.
Report example_replay_report(const RunConfig& cfg);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genuslab
