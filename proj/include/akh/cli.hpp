#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "akh/error.hpp"
#include "akh/skein.hpp"

namespace akh::cli {

enum Exit : int { ok = 0, check_failed = 1, parse_error = 2, capacity_error = 3, invariant_error = 4 };

struct RunConfig {
  std::string subcommand;
  std::string suite;  // for "check"
  std::optional<std::string> braid;
  std::optional<std::string> pd_path;
  bool reduced = false;
  bool meridians = false;
  bool mirror = false;
  bool unshifted = false;
  Mode mode = Mode::skein;
  int r_max = 3;
  std::string format = "table";
  int cap = kDefaultCap;
  std::optional<int> random;
  int max_crossings = 6;
  std::optional<std::uint64_t> seed;
};

// Throws ParseError when the configuration breaks its own rules.
void validate(const RunConfig& cfg);

// Parses argv and dispatches. The capacity default comes from AKH_CAP when set.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace akh::cli
