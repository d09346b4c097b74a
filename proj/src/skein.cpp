#include "akh/skein.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

namespace akh {

namespace {

// One output of a local rule: labels of the resulting circle(s), '+' or '-',
// and whether the term belongs to d1 (the k-lowering part).
struct Term {
  char first;
  char second;
  bool boxed;
};

// Keys: "<input types>><output types><input labels>", with V a non-trivial circle
// and W a trivial one. For a split, the first output circle is the one through
// slot 0 of the crossing.
const std::map<std::string, std::vector<Term>>& rule_table() {
  static const std::map<std::string, std::vector<Term>> table = {
      {"WW>W++", {{'+', 0, false}}},
      {"WW>W+-", {{'-', 0, false}}},
      {"WW>W-+", {{'-', 0, false}}},
      {"WW>W--", {}},
      {"VV>W++", {{'+', 0, true}}},
      {"VV>W+-", {{'-', 0, false}}},
      {"VV>W-+", {{'-', 0, false}}},
      {"VV>W--", {}},
      {"VW>V++", {{'+', 0, false}}},
      {"VW>V-+", {{'-', 0, false}}},
      {"VW>V+-", {{'-', 0, true}}},
      {"VW>V--", {}},
      {"WV>V++", {{'+', 0, false}}},
      {"WV>V+-", {{'-', 0, false}}},
      {"WV>V-+", {{'-', 0, true}}},
      {"WV>V--", {}},
      {"W>WW+", {{'+', '-', false}, {'-', '+', false}}},
      {"W>WW-", {{'-', '-', false}}},
      {"W>VV+", {{'+', '-', false}, {'-', '+', false}}},
      {"W>VV-", {{'-', '-', true}}},
      {"V>VW+", {{'+', '-', false}, {'-', '+', true}}},
      {"V>VW-", {{'-', '-', false}}},
      {"V>WV+", {{'-', '+', false}, {'+', '-', true}}},
      {"V>WV-", {{'-', '-', false}}},
  };
  return table;
}

char type_of(const Circle& c) { return c.trivial() ? 'W' : 'V'; }
char label_of(std::uint32_t minus, int circle) { return ((minus >> circle) & 1u) ? '-' : '+'; }

std::pair<int, int> tau_psi(const CircleConfiguration& cfg, std::uint32_t minus) {
  int tau = 0, psi = 0;
  for (std::size_t c = 0; c < cfg.circles.size(); ++c) {
    int s = ((minus >> c) & 1u) ? -1 : 1;
    (cfg.circles[c].trivial() ? tau : psi) += s;
  }
  return {tau, psi};
}

std::string state_name(Resolution r, std::uint32_t minus) {
  return "resolution " + std::to_string(r) + " labels " + std::to_string(minus);
}

void finish_column(f2::Column& col) {
  std::sort(col.begin(), col.end());
  f2::Column out;
  for (std::size_t t = 0; t < col.size();) {
    std::size_t u = t;
    while (u < col.size() && col[u] == col[t]) ++u;
    if ((u - t) % 2 == 1) out.push_back(col[t]);
    t = u;
  }
  col = std::move(out);
}

void check_square_zero(const f2::SparseMatrixF2& a, const f2::SparseMatrixF2& b, const char* what) {
  for (std::size_t x = 0; x < a.cols(); ++x) {
    f2::Column v = a.apply(b.column(x));
    if (a.cols() == b.cols() && &a != &b) f2::add_into(v, b.apply(a.column(x)));
    if (!v.empty()) throw InvariantError(std::string(what) + " is not zero", "generator " + std::to_string(x));
  }
}

}  // namespace

f2::Grading SkeinComplex::grading(std::size_t g) const {
  const EnhancedState& s = states_[g];
  Shift sh = applied_shift();
  return {s.I + sh.i, s.J() + sh.j, s.Psi + sh.k, 0};
}

f2::ChainComplexF2 SkeinComplex::complex(Mode m) const {
  std::vector<f2::Grading> gens(size());
  for (std::size_t g = 0; g < size(); ++g) gens[g] = grading(g);
  return f2::ChainComplexF2(std::move(gens), m == Mode::skein ? d0_ : d0_ + d1_);
}

std::optional<std::size_t> SkeinComplex::find(Resolution r, std::uint32_t minus) const {
  if (r + 1 >= offsets_.size()) return std::nullopt;
  if (reduced_ && (minus & 1u)) return std::nullopt;
  std::size_t local = reduced_ ? (minus >> 1) : minus;
  std::size_t at = offsets_[r] + local;
  if (at >= offsets_[r + 1]) return std::nullopt;
  return at;
}

std::vector<EnhancedState> enumerate_states(const AnnularDiagram& d, bool reduced, int cap) {
  std::vector<EnhancedState> out;
  all_resolutions(
      d,
      [&](const CircleConfiguration& cfg) {
        const std::uint32_t count = std::uint32_t{1} << cfg.circles.size();
        for (std::uint32_t minus = 0; minus < count; ++minus) {
          if (reduced && (minus & 1u)) continue;
          auto [tau, psi] = tau_psi(cfg, minus);
          out.push_back({cfg.resolution, minus, cfg.weight(), tau, psi});
        }
      },
      cap);
  return out;
}

SkeinComplex assemble_differential(const AnnularDiagram& d, std::vector<EnhancedState> states, bool reduced, Mode mode,
                                   int cap) {
  check_capacity(d, cap);
  SkeinComplex sc;
  sc.diagram_ = d;
  sc.reduced_ = reduced;
  sc.mode_ = mode;
  const int nc = d.crossing_count();
  const Resolution total = Resolution{1} << nc;
  sc.configs_.reserve(total);
  sc.offsets_.assign(total + 1, 0);
  for (Resolution r = 0; r < total; ++r) {
    sc.configs_.push_back(resolve(d, r));
    std::size_t n = std::size_t{1} << sc.configs_.back().circles.size();
    sc.offsets_[r + 1] = sc.offsets_[r] + (reduced ? n / 2 : n);
  }
  if (states.size() != sc.offsets_.back())
    throw InvariantError("state list does not match the resolution cube",
                         std::to_string(states.size()) + " states, expected " + std::to_string(sc.offsets_.back()));
  for (std::size_t g = 0; g < states.size(); ++g) {
    auto at = sc.find(states[g].resolution, states[g].minus);
    if (!at || *at != g) throw InvariantError("state list is not in canonical order", state_name(states[g].resolution, states[g].minus));
  }
  sc.shift_.i = -d.n_minus();
  sc.shift_.j = d.n_plus() - 2 * d.n_minus();
  if (d.meridians() && reduced) {
    sc.shift_.j -= 1;
    sc.shift_.k = -1;
  }

  const auto& rules = rule_table();
  std::vector<f2::Column> col0(states.size()), col1(states.size());
  for (Resolution r = 0; r < total; ++r) {
    const CircleConfiguration& from = sc.configs_[r];
    for (int c = 0; c < nc; ++c) {
      if ((r >> c) & 1u) continue;
      const Resolution r2 = r | (Resolution{1} << c);
      const CircleConfiguration& to = sc.configs_[r2];
      const auto& slots = d.crossing(c).arcs;
      const int a = from.circle_of_arc[slots[0]];
      const int b = from.circle_of_arc[slots[2]];
      const bool merge = a != b;
      int out1, out2 = -1;
      std::string key;
      if (merge) {
        out1 = to.circle_of_arc[slots[0]];
        key = {type_of(from.circles[a]), type_of(from.circles[b]), '>', type_of(to.circles[out1])};
      } else {
        out1 = to.circle_of_arc[slots[0]];
        out2 = to.circle_of_arc[slots[1]];
        if (out1 == out2) throw InvariantError("split produced a single circle", "crossing " + std::to_string(c));
        key = {type_of(from.circles[a]), '>', type_of(to.circles[out1]), type_of(to.circles[out2])};
      }
      std::vector<int> image(from.circles.size(), -1);
      for (std::size_t x = 0; x < from.circles.size(); ++x)
        if (static_cast<int>(x) != a && static_cast<int>(x) != b) image[x] = to.circle_of_arc[from.circles[x].arcs.front()];

      const std::uint32_t count = std::uint32_t{1} << from.circles.size();
      for (std::uint32_t minus = 0; minus < count; ++minus) {
        if (reduced && (minus & 1u)) continue;
        std::string full = key;
        full += label_of(minus, a);
        if (merge) full += label_of(minus, b);
        auto rule = rules.find(full);
        if (rule == rules.end())
          throw InvariantError("merge/split violates the circle-type constraints",
                               state_name(r, minus) + " at crossing " + std::to_string(c) + " (" + key + ")");
        std::uint32_t base = 0;
        for (std::size_t x = 0; x < from.circles.size(); ++x)
          if (image[x] >= 0 && ((minus >> x) & 1u)) base |= std::uint32_t{1} << image[x];
        const std::size_t src = *sc.find(r, minus);
        for (const Term& t : rule->second) {
          std::uint32_t target = base;
          if (t.first == '-') target |= std::uint32_t{1} << out1;
          if (!merge && t.second == '-') target |= std::uint32_t{1} << out2;
          auto dst = sc.find(r2, target);
          if (!dst) continue;  // lands on a '-' marked state: zero in the quotient
          const EnhancedState& s = states[src];
          const EnhancedState& e = states[*dst];
          const int dpsi = t.boxed ? -2 : 0;
          if (e.I != s.I + 1 || e.J() != s.J() || e.Psi != s.Psi + dpsi)
            throw InvariantError("differential term breaks the grading law", state_name(r, minus) + " -> " + state_name(r2, target));
          (t.boxed ? col1 : col0)[src].push_back(static_cast<f2::Index>(*dst));
        }
      }
    }
  }
  for (auto& c : col0) finish_column(c);
  for (auto& c : col1) finish_column(c);
  sc.d0_ = f2::SparseMatrixF2::from_columns(states.size(), std::move(col0));
  sc.d1_ = f2::SparseMatrixF2::from_columns(states.size(), std::move(col1));
  sc.states_ = std::move(states);

  check_square_zero(sc.d0_, sc.d0_, "d0^2");
  check_square_zero(sc.d1_, sc.d1_, "d1^2");
  check_square_zero(sc.d0_, sc.d1_, "d0 d1 + d1 d0");
  return sc;
}

SkeinComplex apply_final_shift(SkeinComplex c) {
  if (c.shifted_) throw DomainError("final shift already applied");
  c.shifted_ = true;
  return c;
}

AnnularDiagram prepared_diagram(const AnnularDiagram& d, const SkeinOptions& options) {
  AnnularDiagram out = options.mirror ? mirror(d) : d;
  if (options.meridians && !out.meridians()) out = add_split_meridians(out);
  return out;
}

SkeinComplex build(const AnnularDiagram& d, const SkeinOptions& options) {
  AnnularDiagram prepared = prepared_diagram(d, options);
  auto states = enumerate_states(prepared, options.reduced, options.cap);
  SkeinComplex c = assemble_differential(prepared, std::move(states), options.reduced, options.mode, options.cap);
  return options.shifted ? apply_final_shift(std::move(c)) : c;
}

f2::ChainComplexF2 plain_khovanov_complex(const AnnularDiagram& d, bool reduced, int cap) {
  check_capacity(d, cap);
  const int nc = d.crossing_count();
  const int na = d.arc_count();
  const Resolution total = Resolution{1} << nc;

  // circles as union-find classes of arcs; indices ordered by least arc
  std::vector<std::vector<int>> circle_of(total, std::vector<int>(na));
  std::vector<int> circle_count(total);
  for (Resolution r = 0; r < total; ++r) {
    std::vector<int> parent(na);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int c = 0; c < nc; ++c) {
      const auto& s = d.crossing(c).arcs;
      if ((r >> c) & 1u) {
        parent[find(s[0])] = find(s[3]);
        parent[find(s[1])] = find(s[2]);
      } else {
        parent[find(s[0])] = find(s[1]);
        parent[find(s[2])] = find(s[3]);
      }
    }
    std::vector<int> id(na, -1);
    int n = 0;
    for (int a = 0; a < na; ++a) {
      int root = find(a);
      if (id[root] < 0) id[root] = n++;
      circle_of[r][a] = id[root];
    }
    circle_count[r] = n;
  }

  std::vector<std::size_t> offset(total + 1, 0);
  for (Resolution r = 0; r < total; ++r) offset[r + 1] = offset[r] + (std::size_t{1} << circle_count[r]);
  const int np = d.n_plus(), nm = d.n_minus();
  std::vector<f2::Grading> gens(offset[total]);
  std::vector<char> keep(offset[total], 1);
  for (Resolution r = 0; r < total; ++r) {
    const int marked = circle_of[r][d.marked()];
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << circle_count[r]); ++x) {
      const int ones = circle_count[r] - std::popcount(x);
      const int xs = std::popcount(x);
      const int h = std::popcount(r);
      gens[offset[r] + x] = {h - nm, h + ones - xs + np - 2 * nm, 0, 0};
      if (reduced && ((x >> marked) & 1u)) keep[offset[r] + x] = 0;
    }
  }

  std::vector<f2::Column> cols(offset[total]);
  for (Resolution r = 0; r < total; ++r) {
    for (int c = 0; c < nc; ++c) {
      if ((r >> c) & 1u) continue;
      const Resolution r2 = r | (Resolution{1} << c);
      const auto& s = d.crossing(c).arcs;
      const int a = circle_of[r][s[0]], b = circle_of[r][s[2]];
      for (std::uint32_t x = 0; x < (std::uint32_t{1} << circle_count[r]); ++x) {
        std::uint32_t rest = 0;
        for (int k = 0; k < circle_count[r]; ++k) {
          if (k == a || k == b || !((x >> k) & 1u)) continue;
          int arc = 0;
          while (circle_of[r][arc] != k) ++arc;
          rest |= std::uint32_t{1} << circle_of[r2][arc];
        }
        std::vector<std::uint32_t> targets;
        const bool xa = (x >> a) & 1u;
        if (a != b) {
          const bool xb = (x >> b) & 1u;
          const int m = circle_of[r2][s[0]];
          if (!(xa && xb)) targets.push_back(rest | ((xa || xb) ? std::uint32_t{1} << m : 0u));
        } else {
          const int p = circle_of[r2][s[0]], q = circle_of[r2][s[1]];
          const std::uint32_t xp = std::uint32_t{1} << p, xq = std::uint32_t{1} << q;
          if (xa) {
            targets.push_back(rest | xp | xq);
          } else {
            targets.push_back(rest | xp);
            targets.push_back(rest | xq);
          }
        }
        for (std::uint32_t t : targets) cols[offset[r] + x].push_back(static_cast<f2::Index>(offset[r2] + t));
      }
    }
  }

  std::vector<long> index(gens.size(), -1);
  std::vector<f2::Grading> kept_gens;
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (keep[g]) {
      index[g] = static_cast<long>(kept_gens.size());
      kept_gens.push_back(gens[g]);
    }
  std::vector<f2::Column> kept_cols;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (!keep[g]) continue;
    f2::Column col;
    for (f2::Index t : cols[g])
      if (keep[t]) col.push_back(static_cast<f2::Index>(index[t]));
    finish_column(col);
    kept_cols.push_back(std::move(col));
  }
  const std::size_t kept = kept_gens.size();
  f2::ChainComplexF2 out(std::move(kept_gens), f2::SparseMatrixF2::from_columns(kept, std::move(kept_cols)));
  out.check_square_zero();
  return out;
}

}  // namespace akh
