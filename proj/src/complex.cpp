#include "akh/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "akh/error.hpp"

namespace akh::f2 {

namespace {

std::string entry_name(std::size_t x, std::size_t y) {
  return "d(" + std::to_string(x) + ") -> " + std::to_string(y);
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Gaussian elimination on a complex (the cancellation lemma).
// Rows mirror columns so that every z with y in d(z) is found directly.
class Reducer {
public:
  explicit Reducer(const ChainComplexF2& c)
      : c_(c), col_(c.differential().columns()), row_(c.size()), alive_(c.size(), 1) {
    for (std::size_t x = 0; x < col_.size(); ++x)
      for (Index y : col_[x]) row_[y].push_back(static_cast<Index>(x));
  }

  bool alive(Index x) const { return alive_[x] != 0; }
  const Column& targets(Index x) const { return col_[x]; }
  std::size_t size() const { return col_.size(); }

  bool has_components() const {
    return std::any_of(col_.begin(), col_.end(), [](const Column& c) { return !c.empty(); });
  }

  void cancel(Index x, Index y) {
    const Column cx = col_[x];
    const Column sources = row_[y];
    for (Index z : sources) {
      if (z == x) continue;
      add_into(col_[z], cx);
      for (Index w : cx) toggle(row_[w], z);
    }
    for (Index w : col_[x]) toggle(row_[w], x);
    for (Index z : row_[x]) toggle(col_[z], x);
    for (Index w : col_[y]) toggle(row_[w], y);
    for (Index z : row_[y]) toggle(col_[z], y);
    col_[x].clear();
    row_[x].clear();
    col_[y].clear();
    row_[y].clear();
    alive_[x] = alive_[y] = 0;
  }

  ChainComplexF2 survivors() const {
    std::vector<long> local(size(), -1);
    std::vector<Grading> gens;
    for (std::size_t x = 0; x < size(); ++x)
      if (alive_[x]) {
        local[x] = static_cast<long>(gens.size());
        gens.push_back(c_.grading(x));
      }
    std::vector<Column> cols;
    cols.reserve(gens.size());
    for (std::size_t x = 0; x < size(); ++x) {
      if (!alive_[x]) continue;
      Column c;
      for (Index y : col_[x]) c.push_back(static_cast<Index>(local[y]));
      cols.push_back(std::move(c));
    }
    const std::size_t n = gens.size();
    return ChainComplexF2(std::move(gens), SparseMatrixF2::from_columns(n, std::move(cols)));
  }

  template <class Pred>
  int sweep(Pred accept, RankTable* cancelled, Axis axis) {
    int total = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (Index x = 0; x < size(); ++x) {
        if (!alive_[x]) continue;
        for (Index y : col_[x]) {
          if (!accept(x, y)) continue;
          if (cancelled) {
            const Grading& g = c_.grading(x);
            ++(*cancelled)[{g.degree, g.q, level(g, axis)}];
          }
          cancel(x, y);
          ++total;
          changed = true;
          break;
        }
      }
    }
    return total;
  }

  RankTable alive_ranks(Axis axis) const {
    RankTable t;
    for (std::size_t x = 0; x < size(); ++x)
      if (alive_[x]) {
        const Grading& g = c_.grading(x);
        ++t[{g.degree, g.q, level(g, axis)}];
      }
    return t;
  }

private:
  const ChainComplexF2& c_;
  std::vector<Column> col_;
  std::vector<Column> row_;
  std::vector<char> alive_;
};

}  // namespace

ChainComplexF2::ChainComplexF2(std::vector<Grading> gens, SparseMatrixF2 d) : gens_(std::move(gens)), d_(std::move(d)) {
  if (d_.rows() != gens_.size() || d_.cols() != gens_.size())
    throw std::invalid_argument("differential shape does not match generator count");
  for (std::size_t x = 0; x < gens_.size(); ++x) {
    for (Index y : d_.column(x)) {
      const Grading& a = gens_[x];
      const Grading& b = gens_[y];
      if (b.degree != a.degree + 1) throw InvariantError("differential does not raise degree by one", entry_name(x, y));
      if (b.q != a.q) throw InvariantError("differential does not preserve q", entry_name(x, y));
      if (b.f > a.f) throw InvariantError("differential raises the f filtration", entry_name(x, y));
      if (b.g > a.g) throw InvariantError("differential raises the g filtration", entry_name(x, y));
    }
  }
}

void ChainComplexF2::check_square_zero() const {
  for (std::size_t x = 0; x < size(); ++x) {
    Column dd = d_.apply(d_.column(x));
    if (!dd.empty())
      throw InvariantError("d^2 != 0", "generator " + std::to_string(x) + " (d^2 hits " + std::to_string(dd.front()) + ")");
  }
}

bool ChainComplexF2::preserves(Axis axis) const {
  for (std::size_t x = 0; x < size(); ++x)
    for (Index y : d_.column(x))
      if (level(gens_[y], axis) != level(gens_[x], axis)) return false;
  return true;
}

ChainComplexF2 ChainComplexF2::permuted(const std::vector<std::size_t>& order) const {
  if (order.size() != size()) throw std::invalid_argument("permutation length mismatch");
  std::vector<Index> where(size());
  for (std::size_t n = 0; n < order.size(); ++n) where[order[n]] = static_cast<Index>(n);
  std::vector<Grading> gens(size());
  std::vector<Column> cols(size());
  for (std::size_t n = 0; n < order.size(); ++n) {
    gens[n] = gens_[order[n]];
    for (Index y : d_.column(order[n])) cols[n].push_back(where[y]);
    std::sort(cols[n].begin(), cols[n].end());
  }
  return ChainComplexF2(std::move(gens), SparseMatrixF2::from_columns(size(), std::move(cols)));
}

int total_rank(const RankTable& t) {
  int n = 0;
  for (const auto& [k, v] : t) n += v;
  return n;
}

Homology homology(const ChainComplexF2& c, Blocks blocks) {
  c.check_square_zero();
  std::map<std::pair<int, int>, std::vector<Index>> block_members;
  for (std::size_t x = 0; x < c.size(); ++x) {
    const Grading& g = c.grading(x);
    block_members[{g.q, blocks == Blocks::q_and_f ? g.f : 0}].push_back(static_cast<Index>(x));
  }
  if (blocks == Blocks::q_and_f && !c.preserves(Axis::f))
    throw InvariantError("homology split by f requested for a differential that changes f");

  Homology h;
  std::vector<long> local(c.size(), -1);
  for (auto& [key, members] : block_members) {
    std::stable_sort(members.begin(), members.end(),
                     [&](Index a, Index b) { return c.grading(a).degree > c.grading(b).degree; });
    for (std::size_t n = 0; n < members.size(); ++n) local[members[n]] = static_cast<long>(n);

    const std::size_t m = members.size();
    std::vector<Column> r(m), v(m);
    std::vector<long> pivot_owner(m, -1);
    for (std::size_t n = 0; n < m; ++n) {
      for (Index y : c.differential().column(members[n])) r[n].push_back(static_cast<Index>(local[y]));
      std::sort(r[n].begin(), r[n].end());
      v[n] = {static_cast<Index>(n)};
      while (!r[n].empty() && pivot_owner[r[n].back()] >= 0) {
        long o = pivot_owner[r[n].back()];
        add_into(r[n], r[o]);
        add_into(v[n], v[o]);
      }
      if (!r[n].empty()) pivot_owner[r[n].back()] = static_cast<long>(n);
    }
    for (std::size_t n = 0; n < m; ++n) {
      if (!r[n].empty() || pivot_owner[n] >= 0) continue;
      Column cycle;
      for (Index t : v[n]) cycle.push_back(members[t]);
      std::sort(cycle.begin(), cycle.end());
      const Grading& g = c.grading(members[n]);
      RankKey k{g.degree, g.q, blocks == Blocks::q_and_f ? g.f : 0};
      ++h.ranks[k];
      h.classes.push_back({k, std::move(cycle)});
    }
  }
  std::stable_sort(h.classes.begin(), h.classes.end(),
                   [](const HomologyClass& a, const HomologyClass& b) { return a.key < b.key; });
  return h;
}

ChainComplexF2 mapping_cone(const ChainComplexF2& a, const ChainComplexF2& b, const SparseMatrixF2& f) {
  if (f.rows() != b.size() || f.cols() != a.size()) throw std::invalid_argument("chain map has the wrong shape");
  for (std::size_t x = 0; x < a.size(); ++x)
    for (Index y : f.column(x)) {
      const Grading& s = a.grading(x);
      const Grading& t = b.grading(y);
      if (s.degree != t.degree || s.q != t.q) throw InvariantError("map does not preserve degree and q", entry_name(x, y));
      if (t.f > s.f || t.g > s.g) throw InvariantError("map is not filtered", entry_name(x, y));
    }
  SparseMatrixF2 lhs = b.differential() * f;
  SparseMatrixF2 rhs = f * a.differential();
  for (std::size_t x = 0; x < a.size(); ++x)
    if (lhs.column(x) != rhs.column(x)) throw InvariantError("map is not a chain map", "source generator " + std::to_string(x));

  const Index shift = static_cast<Index>(a.size());
  std::vector<Grading> gens;
  std::vector<Column> cols;
  for (std::size_t x = 0; x < a.size(); ++x) {
    Grading g = a.grading(x);
    --g.degree;
    gens.push_back(g);
    Column col = a.differential().column(x);
    for (Index y : f.column(x)) col.push_back(y + shift);
    cols.push_back(std::move(col));
  }
  for (std::size_t x = 0; x < b.size(); ++x) {
    gens.push_back(b.grading(x));
    Column col;
    for (Index y : b.differential().column(x)) col.push_back(y + shift);
    cols.push_back(std::move(col));
  }
  const std::size_t n = gens.size();
  return ChainComplexF2(std::move(gens), SparseMatrixF2::from_columns(n, std::move(cols)));
}

ChainComplexF2 reduce_bifiltered(const ChainComplexF2& c) {
  c.check_square_zero();
  Reducer red(c);
  red.sweep(
      [&](Index x, Index y) {
        return c.grading(x).f == c.grading(y).f && c.grading(x).g == c.grading(y).g;
      },
      nullptr, Axis::f);
  return red.survivors();
}

SpectralSequence spectral_pages(const ChainComplexF2& c, int r_max, Axis axis, int step) {
  if (r_max < 0 || step < 1) throw std::invalid_argument("r_max must be >= 0 and step >= 1");
  c.check_square_zero();
  auto unit = [&](Index x) { return floor_div(level(c.grading(x), axis), step); };

  Reducer red(c);
  std::vector<SpectralPage> computed;
  computed.push_back({0, red.alive_ranks(axis), {}});
  int last_cancel_stage = -1;
  for (int s = 0; red.has_components(); ++s) {
    RankTable diff;
    int n = red.sweep([&](Index x, Index y) { return unit(x) - unit(y) == s; }, &diff, axis);
    computed.back().differential_ranks = std::move(diff);
    if (n > 0) last_cancel_stage = s;
    computed.push_back({s + 1, red.alive_ranks(axis), {}});
  }

  SpectralSequence out;
  out.infinity = computed.back().ranks;
  out.degeneration = last_cancel_stage + 1;
  for (int r = 0; r <= r_max; ++r) {
    if (r < static_cast<int>(computed.size())) {
      out.pages.push_back(computed[r]);
    } else {
      out.pages.push_back({r, out.infinity, {}});
    }
  }
  return out;
}

std::string dump_complex(const ChainComplexF2& c) {
  nlohmann::json doc;
  doc["generators"] = nlohmann::json::array();
  for (std::size_t x = 0; x < c.size(); ++x) {
    const Grading& g = c.grading(x);
    doc["generators"].push_back({{"id", x}, {"degree", g.degree}, {"q", g.q}, {"f", g.f}, {"g", g.g}});
  }
  doc["differential"] = nlohmann::json::array();
  for (std::size_t x = 0; x < c.size(); ++x) doc["differential"].push_back(c.differential().column(x));
  return doc.dump(1);
}

ChainComplexF2 load_complex(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  std::vector<Grading> gens;
  for (const auto& g : doc.at("generators"))
    gens.push_back({g.at("degree").get<int>(), g.at("q").get<int>(), g.value("f", 0), g.value("g", 0)});
  std::vector<Column> cols;
  for (const auto& c : doc.at("differential")) cols.push_back(c.get<Column>());
  if (cols.size() != gens.size()) throw std::invalid_argument("differential length does not match generators");
  const std::size_t n = gens.size();
  return ChainComplexF2(std::move(gens), SparseMatrixF2::from_columns(n, std::move(cols)));
}

}  // namespace akh::f2
