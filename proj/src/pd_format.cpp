#include "akh/pd_format.hpp"

#include <map>

#include <json.hpp>

namespace akh {

using nlohmann::json;

AnnularDiagram parse_annular_pd(const std::string& document, int cap) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("annular PD is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.contains("arcs") || !doc.contains("marked")) throw ParseError("annular PD needs \"arcs\" and \"marked\"");
    std::map<int, int> index;
    std::vector<Arc> arcs;
    std::vector<int> orientation;
    for (const auto& a : doc.at("arcs")) {
      int id = a.at("id").get<int>();
      if (index.count(id)) throw ParseError("arc id " + std::to_string(id) + " listed twice");
      index[id] = static_cast<int>(arcs.size());
      Arc arc;
      arc.label = id;
      arc.ray = a.value("ray", 0);
      arcs.push_back(arc);
      orientation.push_back(a.value("orientation", 0));
    }
    std::vector<std::array<int, 4>> xs;
    std::vector<std::vector<Endpoint>> occurrences(arcs.size());
    const json crossings = doc.value("crossings", json::array());
    for (const auto& x : crossings) {
      if (!x.is_array() || x.size() != 4) throw ParseError("each crossing lists exactly four arc ids");
      std::array<int, 4> row{};
      for (int s = 0; s < 4; ++s) {
        int id = x[s].get<int>();
        auto it = index.find(id);
        if (it == index.end()) throw ParseError("crossing uses undeclared arc " + std::to_string(id));
        row[s] = it->second;
        occurrences[it->second].push_back({static_cast<int>(xs.size()), s});
      }
      xs.push_back(row);
    }
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const auto& occ = occurrences[a];
      if (occ.empty()) continue;
      if (occ.size() != 2)
        throw ParseError("arc " + std::to_string(arcs[a].label) + " appears " + std::to_string(occ.size()) + " times");
      int o = orientation[a];
      if (o == 0) {
        for (int t = 0; t < 2; ++t) {
          if (occ[t].slot == 0) o = t == 1 ? 1 : -1;
          if (occ[t].slot == 2) o = t == 0 ? 1 : -1;
        }
        if (o == 0) throw ParseError("arc " + std::to_string(arcs[a].label) + " needs an orientation");
      }
      arcs[a].tail = o > 0 ? occ[0] : occ[1];
      arcs[a].head = o > 0 ? occ[1] : occ[0];
    }
    int marked_id = doc.at("marked").get<int>();
    auto mk = index.find(marked_id);
    if (mk == index.end()) throw ParseError("marked arc " + std::to_string(marked_id) + " is not declared");
    bool axis_left = arcs[mk->second].ray >= 0;
    if (doc.contains("axis")) {
      std::string side = doc.at("axis").get<std::string>();
      if (side != "left" && side != "right") throw ParseError("axis must be \"left\" or \"right\"");
      axis_left = side == "left";
    }
    AnnularDiagram d(std::move(xs), std::move(arcs), mk->second, axis_left);
    if (doc.contains("odd_linking")) d.set_odd_linking(doc.at("odd_linking").get<bool>());
    if (doc.value("meridians", false)) d.flag_meridians();
    validate_windings(d, cap);
    return d;
  } catch (const InvariantError& e) {
    throw ParseError(std::string("invalid annular PD: ") + e.what());
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed annular PD: ") + e.what());
  }
}

std::string to_annular_pd(const AnnularDiagram& d) {
  json doc;
  doc["crossings"] = json::array();
  for (const Crossing& c : d.crossings()) {
    json row = json::array();
    for (int a : c.arcs) row.push_back(d.arc(a).label);
    doc["crossings"].push_back(row);
  }
  doc["arcs"] = json::array();
  for (const Arc& a : d.arcs()) {
    json entry{{"id", a.label}, {"ray", a.ray}};
    if (!a.closed()) {
      bool tail_first = std::pair(a.tail.crossing, a.tail.slot) < std::pair(a.head.crossing, a.head.slot);
      entry["orientation"] = tail_first ? 1 : -1;
    }
    doc["arcs"].push_back(entry);
  }
  doc["marked"] = d.arc(d.marked()).label;
  doc["axis"] = d.axis_left() ? "left" : "right";
  doc["odd_linking"] = d.odd_linking();
  if (d.meridians()) doc["meridians"] = true;
  return doc.dump(1);
}

}  // namespace akh
