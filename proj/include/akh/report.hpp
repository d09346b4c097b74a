#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "akh/complex.hpp"
#include "akh/skein.hpp"

namespace akh {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  bool operator==(const Check&) const = default;
};

bool all_pass(const std::vector<Check>& checks);

using Bigraded = std::map<std::pair<int, int>, int>;
// Sums a (degree, q, level) table over the level.
Bigraded bigraded(const f2::RankTable& t);

struct RankDocument {
  std::string mode;
  Shift shifts;
  f2::RankTable ranks;  // keyed (i, j, k)
  std::vector<Check> checks;
  bool operator==(const RankDocument&) const = default;
};

std::string render_json(const RankDocument& doc);
RankDocument parse_rank_json(const std::string& text);

// (j, k) grid, k decreasing downwards, j increasing to the right; a cell lists
// F^rank_i for each homological degree present.
std::string render_grid(const f2::RankTable& ranks);
// (i, j) table for bigraded groups.
std::string render_bigraded(const Bigraded& ranks);

}  // namespace akh
