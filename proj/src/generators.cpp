#include "akh/generators.hpp"

#include <algorithm>

namespace akh::gen {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<int> open_arcs(const AnnularDiagram& d) {
  std::vector<int> out;
  for (int a = 0; a < d.arc_count(); ++a)
    if (!d.arc(a).closed()) out.push_back(a);
  return out;
}

}  // namespace

std::string braid_text(int strands, const std::vector<int>& word) {
  std::string s = std::to_string(strands) + ":";
  for (int w : word) s += " " + std::to_string(w);
  return s;
}

std::vector<int> random_word(Rng& rng, int strands, int letters) {
  std::vector<int> w;
  if (strands < 2) return w;
  for (int t = 0; t < letters; ++t) {
    int g = uniform(rng, 1, strands - 1);
    w.push_back(uniform(rng, 0, 1) ? g : -g);
  }
  return w;
}

AnnularDiagram random_annular(Rng& rng, int max_crossings) {
  const int strands = uniform(rng, 1, 4);
  const int letters = strands < 2 ? 0 : uniform(rng, 0, max_crossings);
  AnnularDiagram d = parse_braid_word(braid_text(strands, random_word(rng, strands, letters)));
  if (d.crossing_count() < max_crossings && uniform(rng, 0, 2) == 0) {
    auto arcs = open_arcs(d);
    if (!arcs.empty()) d = add_kink(d, arcs[uniform(rng, 0, static_cast<int>(arcs.size()) - 1)], uniform(rng, 0, 3));
  }
  if (d.crossing_count() > 0 && uniform(rng, 0, 2) == 0) {
    std::vector<int> choice(d.crossing_count(), -1);
    const int smooth = std::min(d.crossing_count(), uniform(rng, 1, 2));
    for (int t = 0; t < smooth; ++t) choice[uniform(rng, 0, d.crossing_count() - 1)] = uniform(rng, 0, 1);
    d = smooth_crossings(d, choice);
  }
  return d;
}

MovePair random_move(Rng& rng, int max_crossings) {
  const int kind = uniform(rng, 0, 3);
  if (kind == 0 || max_crossings < 3) {
    for (;;) {
      AnnularDiagram base = random_annular(rng, std::max(0, max_crossings - 1));
      auto arcs = open_arcs(base);
      if (arcs.empty()) continue;
      int a = arcs[uniform(rng, 0, static_cast<int>(arcs.size()) - 1)];
      int form = uniform(rng, 0, 3);
      return {"RI", "kink form " + std::to_string(form) + " on arc " + std::to_string(base.arc(a).label), base,
              add_kink(base, a, form)};
    }
  }
  if (kind == 1) {
    const int strands = uniform(rng, 2, 4);
    std::vector<int> w = random_word(rng, strands, uniform(rng, 0, max_crossings - 2));
    std::vector<int> with = w;
    int g = uniform(rng, 1, strands - 1) * (uniform(rng, 0, 1) ? 1 : -1);
    auto pos = with.begin() + uniform(rng, 0, static_cast<int>(w.size()));
    with.insert(pos, {g, -g});
    return {"RII", braid_text(strands, w) + " vs " + braid_text(strands, with),
            parse_braid_word(braid_text(strands, w)), parse_braid_word(braid_text(strands, with))};
  }
  if (kind == 2) {
    const int strands = uniform(rng, 3, 4);
    std::vector<int> pre = random_word(rng, strands, uniform(rng, 0, std::max(0, max_crossings - 3)));
    auto split = uniform(rng, 0, static_cast<int>(pre.size()));
    const int i = uniform(rng, 1, strands - 2);
    std::vector<int> lhs, rhs;
    switch (uniform(rng, 0, 2)) {
      case 0: lhs = {i, i + 1, i}; rhs = {i + 1, i, i + 1}; break;
      case 1: lhs = {-i, -(i + 1), -i}; rhs = {-(i + 1), -i, -(i + 1)}; break;
      default: lhs = {i, i + 1, -i}; rhs = {-(i + 1), i, i + 1}; break;
    }
    std::vector<int> a(pre.begin(), pre.begin() + split), b = a;
    a.insert(a.end(), lhs.begin(), lhs.end());
    b.insert(b.end(), rhs.begin(), rhs.end());
    a.insert(a.end(), pre.begin() + split, pre.end());
    b.insert(b.end(), pre.begin() + split, pre.end());
    return {"RIII", braid_text(strands, a) + " vs " + braid_text(strands, b), parse_braid_word(braid_text(strands, a)),
            parse_braid_word(braid_text(strands, b))};
  }
  // The rotated letter must not involve the innermost strand, which carries the marking.
  const int strands = uniform(rng, 3, 4);
  std::vector<int> w = random_word(rng, strands, uniform(rng, 1, max_crossings));
  w[0] = uniform(rng, 2, strands - 1) * (uniform(rng, 0, 1) ? 1 : -1);
  std::vector<int> r = w;
  std::rotate(r.begin(), r.begin() + 1, r.end());
  return {"conjugation", braid_text(strands, w) + " vs " + braid_text(strands, r),
          parse_braid_word(braid_text(strands, w)), parse_braid_word(braid_text(strands, r))};
}

std::vector<std::string> twisted_unknot_words(int max_crossings) {
  std::vector<std::string> out;
  for (int b = 1; b - 1 <= max_crossings; ++b) {
    const int n = b - 1;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> w;
      for (int g = 1; g <= n; ++g) w.push_back(((mask >> (g - 1)) & 1) ? -g : g);
      out.push_back(braid_text(b, w));
    }
  }
  return out;
}

std::vector<std::string> alternating_odd_words() {
  return {"1:",
          "3: 1 -2",
          "3: 1 -2 1 -2",
          "3: 1 1 -2",
          "3: 1 -2 -2",
          "3: 1 1 -2 -2",
          "3: 1 1 1 -2",
          "3: 1 -2 -2 -2",
          "3: 1 1 -2 1 -2",
          "3: 1 -2 1 -2 1 -2",
          "3: 1 1 1 -2 -2",
          "3: 1 1 -2 -2 -2",
          "5: 1 -2 3 -4",
          "5: 1 -2 3 -4 1",
          "5: 1 -2 3 -4 -2",
          "5: 1 -2 -4 3"};
}

}  // namespace akh::gen

namespace akh::gen {

namespace {

struct Labelled {
  std::vector<f2::Grading> gens;
  std::vector<char> in_b;
  f2::SparseMatrixF2 d;
};

Labelled random_labelled(Rng& rng, int max_generators, bool labels) {
  const int n = uniform(rng, 1, std::max(1, max_generators));
  Labelled out;
  std::vector<std::pair<int, int>> pairs;
  while (static_cast<int>(out.gens.size()) < n) {
    const bool pair = static_cast<int>(out.gens.size()) + 2 <= n && uniform(rng, 0, 2) > 0;
    f2::Grading x{uniform(rng, 0, 2), uniform(rng, 0, 1), uniform(rng, 0, 3), uniform(rng, 0, 3)};
    if (!pair) {
      out.gens.push_back(x);
      out.in_b.push_back(labels ? static_cast<char>(uniform(rng, 0, 1)) : 0);
      continue;
    }
    f2::Grading y = x;
    y.degree += 1;
    y.f -= uniform(rng, 0, 2);
    y.g -= uniform(rng, 0, 2);
    int kind = labels ? uniform(rng, 0, 2) : 0;  // 0: A A, 1: B B, 2: A B
    pairs.push_back({static_cast<int>(out.gens.size()), static_cast<int>(out.gens.size()) + 1});
    out.gens.push_back(x);
    out.gens.push_back(y);
    out.in_b.push_back(kind == 1);
    out.in_b.push_back(kind >= 1);
  }
  const std::size_t m = out.gens.size();
  std::vector<f2::Column> dcols(m);
  for (auto [x, y] : pairs) dcols[x] = {static_cast<f2::Index>(y)};

  std::vector<f2::Column> pcols(m);
  for (std::size_t x = 0; x < m; ++x) {
    pcols[x] = {static_cast<f2::Index>(x)};
    for (std::size_t y = 0; y < x; ++y) {
      const f2::Grading& gx = out.gens[x];
      const f2::Grading& gy = out.gens[y];
      if (gy.degree != gx.degree || gy.q != gx.q || gy.f > gx.f || gy.g > gx.g) continue;
      if (out.in_b[x] && !out.in_b[y]) continue;
      if (uniform(rng, 0, 1)) f2::toggle(pcols[x], static_cast<f2::Index>(y));
    }
  }
  const auto p = f2::SparseMatrixF2::from_columns(m, std::move(pcols));
  const auto d = f2::SparseMatrixF2::from_columns(m, std::move(dcols));
  std::vector<f2::Column> inv(m);
  for (std::size_t x = 0; x < m; ++x) inv[x] = *f2::rank_and_solve(p, f2::Column{static_cast<f2::Index>(x)}).solution;
  out.d = p * d * f2::SparseMatrixF2::from_columns(m, std::move(inv));
  return out;
}

}  // namespace

f2::ChainComplexF2 random_filtered_complex(Rng& rng, int max_generators) {
  Labelled l = random_labelled(rng, max_generators, false);
  return f2::ChainComplexF2(std::move(l.gens), std::move(l.d));
}

ConeInstance random_filtered_map(Rng& rng, int max_generators) {
  Labelled l = random_labelled(rng, max_generators, true);
  std::vector<long> local(l.gens.size());
  std::vector<f2::Grading> ga, gb;
  for (std::size_t x = 0; x < l.gens.size(); ++x) {
    if (l.in_b[x]) {
      local[x] = static_cast<long>(gb.size());
      gb.push_back(l.gens[x]);
    } else {
      local[x] = static_cast<long>(ga.size());
      f2::Grading g = l.gens[x];
      g.degree += 1;
      ga.push_back(g);
    }
  }
  std::vector<f2::Column> da(ga.size()), db(gb.size()), f(ga.size());
  for (std::size_t x = 0; x < l.gens.size(); ++x)
    for (f2::Index y : l.d.column(x)) {
      const auto t = static_cast<f2::Index>(local[y]);
      if (l.in_b[x])
        db[local[x]].push_back(t);
      else
        (l.in_b[y] ? f : da)[local[x]].push_back(t);
    }
  ConeInstance c;
  c.a = f2::ChainComplexF2(ga, f2::SparseMatrixF2::from_columns(ga.size(), std::move(da)));
  c.b = f2::ChainComplexF2(gb, f2::SparseMatrixF2::from_columns(gb.size(), std::move(db)));
  c.f = f2::SparseMatrixF2::from_columns(gb.size(), std::move(f));
  return c;
}

}  // namespace akh::gen
