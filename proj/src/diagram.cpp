#include "akh/diagram.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>

namespace akh {

namespace {

std::string where(int c, int s) { return "crossing " + std::to_string(c) + " slot " + std::to_string(s); }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

AnnularDiagram::AnnularDiagram(std::vector<std::array<int, 4>> crossing_arcs, std::vector<Arc> arcs, int marked,
                               bool axis_left)
    : arcs_(std::move(arcs)), marked_(marked), axis_left_(axis_left) {
  const int na = static_cast<int>(arcs_.size());
  if (marked_ < 0 || marked_ >= na) throw InvariantError("marked arc out of range");
  crossings_.resize(crossing_arcs.size());
  for (std::size_t c = 0; c < crossing_arcs.size(); ++c) {
    crossings_[c].arcs = crossing_arcs[c];
    for (int s = 0; s < 4; ++s) {
      int a = crossing_arcs[c][s];
      if (a < 0 || a >= na) throw InvariantError("arc index out of range", where(static_cast<int>(c), s));
      Endpoint e{static_cast<int>(c), s};
      if (arcs_[a].tail != e && arcs_[a].head != e)
        throw InvariantError("crossing slot not matched by an arc endpoint", where(static_cast<int>(c), s));
    }
  }
  for (int a = 0; a < na; ++a) {
    Arc& arc = arcs_[a];
    if (arc.label == 0) arc.label = a + 1;
    if (arc.tail.valid() != arc.head.valid()) throw InvariantError("arc with a single endpoint", "arc " + std::to_string(arc.label));
    if (arc.closed()) continue;
    for (const Endpoint& e : {arc.tail, arc.head}) {
      if (e.crossing >= static_cast<int>(crossings_.size()) || e.slot < 0 || e.slot > 3 ||
          crossings_[e.crossing].arcs[e.slot] != a)
        throw InvariantError("arc endpoint does not point back at the arc", "arc " + std::to_string(arc.label));
    }
    if (arc.tail == arc.head) throw InvariantError("arc with coincident endpoints", "arc " + std::to_string(arc.label));
  }
  for (int c = 0; c < crossing_count(); ++c) {
    if (!is_head(c, 0)) throw InvariantError("slot 0 must be the incoming under-arc", where(c, 0));
    if (is_head(c, 2)) throw InvariantError("slot 2 must be the outgoing under-arc", where(c, 2));
    if (is_head(c, 1) == is_head(c, 3)) throw InvariantError("over strand must enter and leave", where(c, 1));
    crossings_[c].sign = is_head(c, 3) ? +1 : -1;
  }
}

int AnnularDiagram::n_plus() const {
  return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(), [](const Crossing& x) { return x.sign > 0; }));
}

int AnnularDiagram::n_minus() const { return crossing_count() - n_plus(); }

int AnnularDiagram::ray_total() const {
  int t = 0;
  for (const Arc& a : arcs_) t += std::abs(a.ray);
  return t;
}

int AnnularDiagram::component_count() const {
  std::vector<char> seen(arcs_.size(), 0);
  int comps = 0;
  for (int a = 0; a < arc_count(); ++a) {
    if (seen[a]) continue;
    ++comps;
    int cur = a;
    while (!seen[cur]) {
      seen[cur] = 1;
      if (arcs_[cur].closed()) break;
      const Endpoint& h = arcs_[cur].head;
      cur = crossings_[h.crossing].arcs[(h.slot + 2) % 4];
    }
  }
  return comps;
}

void AnnularDiagram::set_odd_linking(bool flag) {
  if (flag != odd_linking())
    throw InvariantError(flag ? "odd-linking flag set but the ray meets the link an even number of times"
                              : "odd-linking flag cleared but the ray meets the link an odd number of times");
}

bool AnnularDiagram::operator==(const AnnularDiagram& o) const {
  if (crossings_.size() != o.crossings_.size() || arcs_.size() != o.arcs_.size()) return false;
  for (std::size_t c = 0; c < crossings_.size(); ++c)
    if (crossings_[c].arcs != o.crossings_[c].arcs || crossings_[c].sign != o.crossings_[c].sign) return false;
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    const Arc& x = arcs_[a];
    const Arc& y = o.arcs_[a];
    if (x.tail != y.tail || x.head != y.head || x.ray != y.ray) return false;
  }
  return marked_ == o.marked_ && axis_left_ == o.axis_left_ && meridians_ == o.meridians_;
}

int CircleConfiguration::weight() const { return std::popcount(resolution); }

AnnularDiagram parse_braid_word(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("braid word must look like \"n: w1 w2 ...\"");
  int n = 0;
  std::vector<int> word;
  try {
    std::size_t used = 0;
    std::string head = text.substr(0, colon);
    n = std::stoi(head, &used);
    if (head.find_first_not_of(" \t", used) != std::string::npos) throw ParseError("bad strand count");
    std::string body = text.substr(colon + 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::string tok;
    while (in >> tok) {
      std::size_t u = 0;
      int w = std::stoi(tok, &u);
      if (u != tok.size()) throw ParseError("bad braid letter '" + tok + "'");
      word.push_back(w);
    }
  } catch (const std::logic_error&) {
    throw ParseError("malformed braid word \"" + text + "\"");
  }
  if (n < 1) throw ParseError("braid needs at least one strand");
  for (int w : word)
    if (w == 0 || std::abs(w) > n - 1)
      throw ParseError("generator " + std::to_string(w) + " out of range for " + std::to_string(n) + " strands");

  std::vector<Arc> arcs;
  std::vector<std::array<int, 4>> xs;
  auto fresh = [&]() {
    arcs.emplace_back();
    return static_cast<int>(arcs.size()) - 1;
  };
  std::vector<int> first(n), cur(n);
  for (int p = 0; p < n; ++p) first[p] = cur[p] = fresh();
  for (int w : word) {
    const int i = std::abs(w) - 1;
    const int c = static_cast<int>(xs.size());
    int li = cur[i], ri = cur[i + 1];
    int lo = fresh(), ro = fresh();
    std::array<int, 4> x = w > 0 ? std::array<int, 4>{ri, ro, lo, li} : std::array<int, 4>{li, ri, ro, lo};
    for (int s = 0; s < 4; ++s) {
      if (x[s] == li || x[s] == ri)
        arcs[x[s]].head = {c, s};
      else
        arcs[x[s]].tail = {c, s};
    }
    xs.push_back(x);
    cur[i] = lo;
    cur[i + 1] = ro;
  }
  std::vector<char> dead(arcs.size(), 0);
  for (int p = 0; p < n; ++p) {
    arcs[first[p]].ray = 1;
    if (cur[p] == first[p]) continue;
    Endpoint t = arcs[cur[p]].tail;
    arcs[first[p]].tail = t;
    xs[t.crossing][t.slot] = first[p];
    dead[cur[p]] = 1;
  }
  std::vector<int> index(arcs.size(), -1);
  std::vector<Arc> kept;
  for (std::size_t a = 0; a < arcs.size(); ++a)
    if (!dead[a]) {
      index[a] = static_cast<int>(kept.size());
      kept.push_back(arcs[a]);
      kept.back().label = static_cast<int>(kept.size());
    }
  for (auto& x : xs)
    for (int& a : x) a = index[a];
  AnnularDiagram d(std::move(xs), std::move(kept), index[first[0]], true);
  return d;
}

AnnularDiagram mirror(const AnnularDiagram& d) {
  std::vector<std::array<int, 4>> xs(d.crossing_count());
  std::vector<Arc> arcs = d.arcs();
  auto moved = [&](Endpoint e) {
    if (!e.valid()) return e;
    int rot = d.crossing(e.crossing).sign > 0 ? 1 : 3;
    return Endpoint{e.crossing, (e.slot + rot) % 4};
  };
  for (Arc& a : arcs) {
    a.tail = moved(a.tail);
    a.head = moved(a.head);
  }
  for (int c = 0; c < d.crossing_count(); ++c) {
    int rot = d.crossing(c).sign > 0 ? 1 : 3;
    for (int s = 0; s < 4; ++s) xs[c][(s + rot) % 4] = d.crossing(c).arcs[s];
  }
  AnnularDiagram out(std::move(xs), std::move(arcs), d.marked(), d.axis_left());
  out.meridians_ = d.meridians_;
  return out;
}

AnnularDiagram add_split_meridians(const AnnularDiagram& d) {
  std::vector<std::array<int, 4>> xs;
  for (const Crossing& c : d.crossings()) xs.push_back(c.arcs);
  std::vector<Arc> arcs = d.arcs();
  const int inner = static_cast<int>(arcs.size());
  for (int t = 0; t < 2; ++t) {
    Arc a;
    a.label = static_cast<int>(arcs.size()) + 1;
    a.ray = 1;
    arcs.push_back(a);
  }
  AnnularDiagram out(std::move(xs), std::move(arcs), inner, true);
  out.meridians_ = true;
  return out;
}

CircleConfiguration resolve(const AnnularDiagram& d, Resolution r) {
  const int na = d.arc_count();
  CircleConfiguration cfg;
  cfg.resolution = r;
  cfg.crossings = d.crossing_count();
  std::vector<int> owner(na, -1);
  std::vector<Circle> found;
  for (int start = 0; start < na; ++start) {
    if (owner[start] >= 0) continue;
    Circle circ;
    const int id = static_cast<int>(found.size());
    int a = start;
    bool forward = true;
    do {
      owner[a] = id;
      circ.arcs.push_back(a);
      const Arc& arc = d.arc(a);
      circ.winding += forward ? arc.ray : -arc.ray;
      if (arc.closed()) break;
      Endpoint e = forward ? arc.head : arc.tail;
      int p = smoothing_partner((r >> e.crossing) & 1u, e.slot);
      int b = d.crossing(e.crossing).arcs[p];
      forward = d.arc(b).tail == Endpoint{e.crossing, p};
      a = b;
    } while (a != start);
    if (std::abs(circ.winding) > 1)
      throw InvariantError("resolved circle winds more than once around the axis",
                           "resolution " + std::to_string(r) + ", arc " + std::to_string(d.arc(start).label));
    std::sort(circ.arcs.begin(), circ.arcs.end());
    circ.marked = owner[d.marked()] == id;
    found.push_back(std::move(circ));
  }
  auto rank = [](const Circle& c) { return c.marked ? 0 : (c.trivial() ? 2 : 1); };
  std::sort(found.begin(), found.end(), [&](const Circle& x, const Circle& y) {
    if (rank(x) != rank(y)) return rank(x) < rank(y);
    return x.arcs.front() < y.arcs.front();
  });
  cfg.circle_of_arc.assign(na, -1);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (int a : found[i].arcs) cfg.circle_of_arc[a] = static_cast<int>(i);
    (found[i].trivial() ? cfg.m : cfg.l) += 1;
  }
  cfg.circles = std::move(found);
  return cfg;
}

void check_capacity(const AnnularDiagram& d, int cap) {
  if (cap > kHardCap) throw CapacityError("cube-size cap " + std::to_string(cap) + " exceeds the hard limit " + std::to_string(kHardCap));
  if (d.crossing_count() > cap)
    throw CapacityError(std::to_string(d.crossing_count()) + " crossings exceed the cube-size cap " + std::to_string(cap));
}

void all_resolutions(const AnnularDiagram& d, const std::function<void(const CircleConfiguration&)>& visit, int cap) {
  check_capacity(d, cap);
  const Resolution total = Resolution{1} << d.crossing_count();
  for (Resolution r = 0; r < total; ++r) visit(resolve(d, r));
}

void validate_windings(const AnnularDiagram& d, int cap) {
  all_resolutions(d, [](const CircleConfiguration&) {}, cap);
}

AnnularDiagram smooth_crossings(const AnnularDiagram& d, const std::vector<int>& choice) {
  if (static_cast<int>(choice.size()) != d.crossing_count()) throw std::invalid_argument("one choice per crossing required");
  std::vector<int> new_index(d.crossing_count(), -1);
  int kept = 0;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (choice[c] < 0) new_index[c] = kept++;

  struct Step {
    int arc;
    bool forward;
  };
  struct Segment {
    std::vector<Step> steps;
    Endpoint tail, head;  // old crossing, old slot
  };
  std::vector<Segment> segments;
  std::vector<char> seen(d.arc_count(), 0);
  // under_in_slot[c] = old slot where the new orientation enters the under strand
  std::vector<int> under_in(d.crossing_count(), -1);

  auto next = [&](Step s, bool& through_kept, Endpoint& at) {
    const Arc& arc = d.arc(s.arc);
    Endpoint e = s.forward ? arc.head : arc.tail;
    at = e;
    int p = choice[e.crossing] < 0 ? (e.slot + 2) % 4 : smoothing_partner(choice[e.crossing], e.slot);
    through_kept = choice[e.crossing] < 0;
    int b = d.crossing(e.crossing).arcs[p];
    return Step{b, d.arc(b).tail == Endpoint{e.crossing, p}};
  };

  for (int start = 0; start < d.arc_count(); ++start) {
    if (seen[start]) continue;
    std::vector<Step> cycle;
    std::vector<char> kept_after;
    std::vector<Endpoint> junction;
    Step s{start, true};
    do {
      seen[s.arc] = 1;
      cycle.push_back(s);
      if (d.arc(s.arc).closed()) {
        kept_after.push_back(0);
        junction.push_back({});
        break;
      }
      bool through = false;
      Endpoint at;
      s = next(s, through, at);
      kept_after.push_back(through ? 1 : 0);
      junction.push_back(at);
    } while (s.arc != start);

    auto cut = std::find(kept_after.begin(), kept_after.end(), 1);
    if (cut == kept_after.end()) {
      segments.push_back({cycle, {}, {}});
      continue;
    }
    // Rotate so the cycle starts right after a passage through a kept crossing.
    std::size_t k = static_cast<std::size_t>(cut - kept_after.begin()) + 1;
    std::size_t n = cycle.size();
    Segment seg;
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t i = (k + t) % n;
      if (seg.steps.empty()) {
        const Arc& arc = d.arc(cycle[i].arc);
        seg.tail = cycle[i].forward ? arc.tail : arc.head;
      }
      seg.steps.push_back(cycle[i]);
      if (kept_after[i]) {
        seg.head = junction[i];
        int slot = seg.head.slot;
        if (slot == 0 || slot == 2) under_in[seg.head.crossing] = slot;
        segments.push_back(std::move(seg));
        seg = Segment{};
      }
    }
  }

  std::vector<std::array<int, 4>> xs(kept);
  std::vector<Arc> arcs;
  int marked = -1;
  bool axis_left = d.axis_left();
  auto convert = [&](Endpoint e) {
    int rot = under_in[e.crossing] == 2 ? 2 : 0;
    return Endpoint{new_index[e.crossing], (e.slot + rot) % 4};
  };
  for (const Segment& seg : segments) {
    Arc a;
    a.label = static_cast<int>(arcs.size()) + 1;
    const int id = static_cast<int>(arcs.size());
    for (const Step& s : seg.steps) {
      a.ray += s.forward ? d.arc(s.arc).ray : -d.arc(s.arc).ray;
      if (s.arc == d.marked()) {
        marked = id;
        if (!s.forward) axis_left = !axis_left;
      }
    }
    if (seg.tail.valid()) {
      a.tail = convert(seg.tail);
      a.head = convert(seg.head);
      xs[a.tail.crossing][a.tail.slot] = id;
      xs[a.head.crossing][a.head.slot] = id;
    }
    arcs.push_back(a);
  }
  return AnnularDiagram(std::move(xs), std::move(arcs), marked, axis_left);
}

AnnularDiagram stack(const AnnularDiagram& inner, const AnnularDiagram& outer) {
  const int na = inner.arc_count();
  const int nc = inner.crossing_count();
  std::vector<std::array<int, 4>> xs;
  for (const Crossing& c : inner.crossings()) xs.push_back(c.arcs);
  for (const Crossing& c : outer.crossings()) {
    std::array<int, 4> x = c.arcs;
    for (int& a : x) a += na;
    xs.push_back(x);
  }
  std::vector<Arc> arcs = inner.arcs();
  for (Arc a : outer.arcs()) {
    if (a.tail.valid()) {
      a.tail.crossing += nc;
      a.head.crossing += nc;
    }
    arcs.push_back(a);
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) arcs[a].label = static_cast<int>(a) + 1;
  return AnnularDiagram(std::move(xs), std::move(arcs), inner.marked(), inner.axis_left());
}

AnnularDiagram add_kink(const AnnularDiagram& d, int a, int form) {
  if (a < 0 || a >= d.arc_count()) throw std::invalid_argument("arc out of range");
  if (d.arc(a).closed()) throw DomainError("kinks are only inserted on arcs between crossings");
  if (form < 0 || form > 3) throw std::invalid_argument("kink form must be 0..3");
  // Roles per slot: 'i' end of the first half, 'o' start of the second half,
  // 'H'/'T' head/tail of the loop.
  static constexpr std::array<std::array<char, 4>, 4> kRoles = {
      {{'i', 'H', 'T', 'o'}, {'i', 'o', 'T', 'H'}, {'H', 'i', 'o', 'T'}, {'H', 'T', 'o', 'i'}}};
  std::vector<std::array<int, 4>> xs;
  for (const Crossing& c : d.crossings()) xs.push_back(c.arcs);
  std::vector<Arc> arcs = d.arcs();
  const int c = static_cast<int>(xs.size());
  const int first = a;
  const int loop = static_cast<int>(arcs.size());
  const int second = loop + 1;
  Arc l, x2;
  x2.head = arcs[a].head;
  x2.ray = arcs[a].ray;
  arcs[first].ray = 0;
  xs[x2.head.crossing][x2.head.slot] = second;
  arcs.push_back(l);
  arcs.push_back(x2);
  std::array<int, 4> x{};
  for (int s = 0; s < 4; ++s) {
    Endpoint e{c, s};
    switch (kRoles[form][s]) {
      case 'i': x[s] = first; arcs[first].head = e; break;
      case 'o': x[s] = second; arcs[second].tail = e; break;
      case 'H': x[s] = loop; arcs[loop].head = e; break;
      default: x[s] = loop; arcs[loop].tail = e; break;
    }
  }
  xs.push_back(x);
  for (std::size_t i = 0; i < arcs.size(); ++i) arcs[i].label = static_cast<int>(i) + 1;
  return AnnularDiagram(std::move(xs), std::move(arcs), d.marked() == a ? second : d.marked(), d.axis_left());
}

bool is_connected(const AnnularDiagram& d) {
  if (d.arc_count() == 0) return true;
  UnionFind uf(d.arc_count());
  for (const Crossing& c : d.crossings())
    for (int s = 1; s < 4; ++s) uf.unite(c.arcs[0], c.arcs[s]);
  int root = uf.find(0);
  for (int a = 1; a < d.arc_count(); ++a)
    if (uf.find(a) != root) return false;
  return true;
}

bool is_alternating(const AnnularDiagram& d) {
  for (const Arc& a : d.arcs()) {
    if (a.closed()) continue;
    if ((a.tail.slot == 2) == (a.head.slot == 0)) return false;
  }
  return true;
}

}  // namespace akh
