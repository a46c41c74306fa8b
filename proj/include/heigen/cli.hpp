#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace heigen {

constexpr std::uint64_t kDefaultSeed = 20240601;

struct CliConfig {
  std::string command;  // solve | sample-start | bench | verify
  std::string input;
  std::string output;   // empty: stdout
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t samples = 100;
  int n = 2, d = 2;
  int refine = 3;
  double epsilon = 0.04;
};

// Exit status: 0 ok, 1 solver failure (or a failed check), 2 invalid input.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv (CLI11), folding in HEIGEN_SEED when --seed is absent.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heigen
