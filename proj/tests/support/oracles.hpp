#pragma once

// Reference computations for the tests. They work on dense 0/1 matrices and
// textbook formulas, and share no code with the library beyond its data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "akh/complex.hpp"

namespace oracle {

using Bits = std::vector<std::uint8_t>;

inline int dense_rank(std::vector<Bits> vecs) {
  int rank = 0;
  if (vecs.empty()) return 0;
  const std::size_t n = vecs.front().size();
  for (std::size_t row = 0; row < n && rank < static_cast<int>(vecs.size()); ++row) {
    std::size_t p = rank;
    while (p < vecs.size() && !vecs[p][row]) ++p;
    if (p == vecs.size()) continue;
    std::swap(vecs[p], vecs[rank]);
    for (std::size_t k = 0; k < vecs.size(); ++k)
      if (k != static_cast<std::size_t>(rank) && vecs[k][row])
        for (std::size_t t = 0; t < n; ++t) vecs[k][t] ^= vecs[rank][t];
    ++rank;
  }
  return rank;
}

inline Bits to_bits(const akh::f2::Column& c, std::size_t n) {
  Bits b(n, 0);
  for (auto i : c) b[i] = 1;
  return b;
}

// Null space of the linear map sending basis vector k to images[k].
inline std::vector<Bits> dense_kernel(const std::vector<Bits>& images, std::size_t target_dim) {
  const std::size_t m = images.size();
  // rows: target coordinates, then an identity block recording combinations
  std::vector<Bits> aug(m, Bits(target_dim + m, 0));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t t = 0; t < target_dim; ++t) aug[k][t] = images[k][t];
    aug[k][target_dim + k] = 1;
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < target_dim; ++col) {
    std::size_t p = rank;
    while (p < m && !aug[p][col]) ++p;
    if (p == m) continue;
    std::swap(aug[p], aug[rank]);
    for (std::size_t k = 0; k < m; ++k)
      if (k != rank && aug[k][col])
        for (std::size_t t = 0; t < aug[k].size(); ++t) aug[k][t] ^= aug[rank][t];
    ++rank;
  }
  std::vector<Bits> out;
  for (std::size_t k = rank; k < m; ++k) out.emplace_back(aug[k].begin() + target_dim, aug[k].end());
  return out;
}

struct Dense {
  std::size_t n = 0;
  std::vector<Bits> d;  // d[x] = image of generator x
  std::vector<akh::f2::Grading> g;
};

inline Dense densify(const akh::f2::ChainComplexF2& c) {
  Dense out;
  out.n = c.size();
  out.g = c.gradings();
  for (std::size_t x = 0; x < c.size(); ++x) out.d.push_back(to_bits(c.differential().column(x), c.size()));
  return out;
}

inline Bits apply(const Dense& c, const Bits& v) {
  Bits out(c.n, 0);
  for (std::size_t x = 0; x < c.n; ++x)
    if (v[x])
      for (std::size_t t = 0; t < c.n; ++t) out[t] ^= c.d[x][t];
  return out;
}

inline int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// Page r of the spectral sequence of the increasing filtration F_p = span{level <= p},
// with levels measured in units of `step`:
//   E^r_p = Z^r_p / (Z^{r-1}_{p-1} + d Z^{r-1}_{p+r-1}),  Z^r_p = {x in F_p : dx in F_{p-r}}.
// Keys are (degree, q, unit level). Pass a large r for the limit page.
inline akh::f2::RankTable page(const akh::f2::ChainComplexF2& c, int r, akh::f2::Axis axis, int step = 1) {
  const Dense dc = densify(c);
  auto lev = [&](std::size_t x) { return floor_div(akh::f2::level(dc.g[x], axis), step); };
  std::set<std::pair<int, int>> blocks;  // (degree, q)
  std::set<int> levels;
  for (std::size_t x = 0; x < dc.n; ++x) {
    blocks.insert({dc.g[x].degree, dc.g[x].q});
    levels.insert(lev(x));
  }
  // Z^s_p within the block (deg, q): chains of that degree, supported on level <= p,
  // whose boundary has no component above level p - s.
  auto z = [&](int deg, int q, int s, int p) {
    std::vector<std::size_t> basis;
    for (std::size_t x = 0; x < dc.n; ++x)
      if (dc.g[x].degree == deg && dc.g[x].q == q && lev(x) <= p) basis.push_back(x);
    std::vector<Bits> images;
    for (std::size_t x : basis) {
      Bits im(dc.n, 0);
      for (std::size_t t = 0; t < dc.n; ++t)
        if (dc.d[x][t] && lev(t) > p - s) im[t] = 1;
      images.push_back(im);
    }
    std::vector<Bits> out;
    for (const Bits& comb : dense_kernel(images, dc.n)) {
      Bits v(dc.n, 0);
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (comb[k]) v[basis[k]] = 1;
      out.push_back(v);
    }
    return out;
  };
  akh::f2::RankTable out;
  if (levels.empty()) return out;
  for (auto [deg, q] : blocks)
    for (int p : levels) {
      const auto zr = z(deg, q, r, p);
      std::vector<Bits> denom = z(deg, q, r - 1, p - 1);
      for (const Bits& y : z(deg - 1, q, r - 1, p + r - 1)) denom.push_back(apply(dc, y));
      const int dim = dense_rank(zr);
      const int sub = dense_rank(denom);
      if (dim - sub) out[{deg, q, p}] = dim - sub;
    }
  return out;
}

// Homology per (degree, q) by rank-nullity on dense blocks; level key 0.
inline akh::f2::RankTable homology(const akh::f2::ChainComplexF2& c) {
  const Dense dc = densify(c);
  std::map<std::pair<int, int>, std::vector<std::size_t>> blocks;
  for (std::size_t x = 0; x < dc.n; ++x) blocks[{dc.g[x].degree, dc.g[x].q}].push_back(x);
  akh::f2::RankTable out;
  for (const auto& [key, members] : blocks) {
    std::vector<Bits> outgoing;
    for (auto x : members) outgoing.push_back(dc.d[x]);
    const int rank_out = dense_rank(outgoing);
    std::vector<Bits> incoming;
    if (auto it = blocks.find({key.first - 1, key.second}); it != blocks.end())
      for (auto y : it->second) incoming.push_back(dc.d[y]);
    const int h = static_cast<int>(members.size()) - rank_out - dense_rank(incoming);
    if (h) out[{key.first, key.second, 0}] = h;
  }
  return out;
}

inline akh::f2::RankTable nonzero(akh::f2::RankTable t) {
  std::erase_if(t, [](const auto& e) { return e.second == 0; });
  return t;
}

}  // namespace oracle
