#include "akh/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "akh/error.hpp"

namespace akh {

using nlohmann::json;

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Bigraded bigraded(const f2::RankTable& t) {
  Bigraded out;
  for (const auto& [k, r] : t)
    if (r) out[{k[0], k[1]}] += r;
  return out;
}

std::string render_json(const RankDocument& doc) {
  json j;
  j["mode"] = doc.mode;
  j["shifts"] = {{"i", doc.shifts.i}, {"j", doc.shifts.j}, {"k", doc.shifts.k}};
  j["ranks"] = json::array();
  for (const auto& [key, r] : doc.ranks)
    if (r) j["ranks"].push_back({{"i", key[0]}, {"j", key[1]}, {"k", key[2]}, {"rank", r}});
  j["checks"] = json::array();
  for (const Check& c : doc.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return j.dump(2);
}

RankDocument parse_rank_json(const std::string& text) {
  try {
    json j = json::parse(text);
    RankDocument doc;
    doc.mode = j.at("mode").get<std::string>();
    const json& s = j.at("shifts");
    doc.shifts = {s.at("i").get<int>(), s.at("j").get<int>(), s.at("k").get<int>()};
    for (const json& r : j.at("ranks")) {
      int rank = r.at("rank").get<int>();
      if (rank < 0) throw ParseError("negative rank");
      doc.ranks[{r.at("i").get<int>(), r.at("j").get<int>(), r.at("k").get<int>()}] += rank;
    }
    for (const json& c : j.at("checks"))
      doc.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.value("detail", "")});
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed rank document: ") + e.what());
  }
}

namespace {

std::string cell_text(const std::vector<std::pair<int, int>>& entries) {
  std::string s;
  for (const auto& [i, r] : entries) {
    if (!s.empty()) s += "+";
    s += "F";
    if (r != 1) s += "^" + std::to_string(r);
    s += "_" + std::to_string(i);
  }
  return s;
}

}  // namespace

std::string render_grid(const f2::RankTable& ranks) {
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> cells;  // (k, j) -> (i, rank)
  std::set<int> js, ks;
  for (const auto& [key, r] : ranks) {
    if (!r) continue;
    cells[{key[2], key[1]}].push_back({key[0], r});
    js.insert(key[1]);
    ks.insert(key[2]);
  }
  if (cells.empty()) return "(zero)\n";
  const int jmin = *js.begin(), jmax = *js.rbegin();
  const int kmin = *ks.begin(), kmax = *ks.rbegin();
  // columns step by one unit; show every j between extremes that shares parity
  std::vector<int> columns;
  for (int j = jmin; j <= jmax; ++j)
    if ((j - jmin) % 2 == 0 || js.count(j)) columns.push_back(j);
  std::vector<int> rows;
  for (int k = kmax; k >= kmin; --k)
    if ((kmax - k) % 2 == 0 || ks.count(k)) rows.push_back(k);

  std::size_t width = 3;
  for (const auto& [pos, entries] : cells) width = std::max(width, cell_text(entries).size());
  for (int j : columns) width = std::max(width, std::to_string(j).size());
  std::size_t label = 1;
  for (int k : rows) label = std::max(label, std::to_string(k).size());

  std::ostringstream out;
  for (int k : rows) {
    out << std::setw(static_cast<int>(label)) << k << " |";
    for (int j : columns) {
      auto it = cells.find({k, j});
      std::string text = it == cells.end() ? "." : cell_text(it->second);
      out << " " << std::setw(static_cast<int>(width)) << text;
    }
    out << "\n";
  }
  out << std::string(label, ' ') << " +" << std::string(columns.size() * (width + 1), '-') << "\n";
  out << std::string(label, ' ') << "  ";
  for (int j : columns) out << " " << std::setw(static_cast<int>(width)) << j;
  out << "\n";
  out << std::string(label, ' ') << "   rows: k, columns: j, entries F^rank_i\n";
  return out.str();
}

std::string render_bigraded(const Bigraded& ranks) {
  std::set<int> is, js;
  for (const auto& [key, r] : ranks)
    if (r) {
      is.insert(key.first);
      js.insert(key.second);
    }
  if (is.empty()) return "(zero)\n";
  std::ostringstream out;
  out << std::setw(5) << "j\\i";
  for (int i : is) out << std::setw(5) << i;
  out << "\n";
  for (auto jt = js.rbegin(); jt != js.rend(); ++jt) {
    out << std::setw(5) << *jt;
    for (int i : is) {
      auto it = ranks.find({i, *jt});
      out << std::setw(5) << (it == ranks.end() || it->second == 0 ? std::string(".") : std::to_string(it->second));
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace akh
