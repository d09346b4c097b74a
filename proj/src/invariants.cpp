#include "akh/invariants.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "akh/planar.hpp"

namespace akh {

namespace {

std::string key_text(const f2::RankKey& k) {
  return "(" + std::to_string(k[0]) + ";" + std::to_string(k[1]) + "," + std::to_string(k[2]) + ")";
}

Shift shift_for(const AnnularDiagram& d, const SkeinOptions& o) {
  if (!o.shifted) return {};
  Shift s{-d.n_minus(), d.n_plus() - 2 * d.n_minus(), 0};
  if (d.meridians() && o.reduced) {
    s.j -= 1;
    s.k = -1;
  }
  return s;
}

// Winding of every link component, traversed along its orientation.
std::vector<int> component_windings(const AnnularDiagram& d) {
  std::vector<char> seen(d.arc_count(), 0);
  std::vector<int> out;
  for (int a = 0; a < d.arc_count(); ++a) {
    if (seen[a]) continue;
    int w = 0;
    int cur = a;
    while (!seen[cur]) {
      seen[cur] = 1;
      w += d.arc(cur).ray;
      if (d.arc(cur).closed()) break;
      const Endpoint& h = d.arc(cur).head;
      cur = d.crossing(h.crossing).arcs[(h.slot + 2) % 4];
    }
    out.push_back(w);
  }
  return out;
}

std::vector<int> single_choice(const AnnularDiagram& d, int c, int bit) {
  std::vector<int> ch(d.crossing_count(), -1);
  ch[c] = bit;
  return ch;
}

int oriented_bit(const AnnularDiagram& d, int c) { return d.crossing(c).sign > 0 ? 0 : 1; }

}  // namespace

TrigradedRanks skein_homology(const AnnularDiagram& d, const SkeinOptions& options) {
  SkeinOptions o = options;
  o.mode = Mode::skein;
  SkeinComplex c = build(d, o);
  return {f2::homology(c.complex(Mode::skein), f2::Blocks::q_and_f).ranks, c.applied_shift(), o};
}

KhovanovResult khovanov_homology(const AnnularDiagram& d, const SkeinOptions& options) {
  SkeinOptions o = options;
  o.mode = Mode::khovanov;
  SkeinComplex c = build(d, o);
  f2::ChainComplexF2 cx = c.complex(Mode::khovanov);
  KhovanovResult r;
  r.ranks = bigraded(f2::homology(cx, f2::Blocks::q).ranks);
  r.sequence = f2::spectral_pages(cx, 3, f2::Axis::f, 2);
  r.e2 = bigraded(r.sequence.pages[2].ranks);
  r.collapse = r.sequence.pages[2].ranks == r.sequence.infinity;
  return r;
}

Laurent euler_statesum(const AnnularDiagram& d, const SkeinOptions& options) {
  const AnnularDiagram prepared = prepared_diagram(d, options);
  const Shift s = shift_for(prepared, options);
  const Laurent trivial = Laurent::monomial(0, 1, 0) + Laurent::monomial(0, -1, 0);
  const Laurent nontrivial = circle_class();
  Laurent total;
  all_resolutions(
      prepared,
      [&](const CircleConfiguration& cfg) {
        Laurent term = Laurent::monomial(cfg.weight(), cfg.weight(), 0);
        for (const Circle& c : cfg.circles) {
          if (c.marked && options.reduced)
            term = term * Laurent::monomial(0, 1, c.trivial() ? 0 : 1);
          else
            term = term * (c.trivial() ? trivial : nontrivial);
        }
        total += term;
      },
      options.cap);
  return total.shifted(s.i, s.j, s.k);
}

Laurent euler_from_homology(const f2::RankTable& ranks) { return poincare(ranks).at_t_minus_one(); }

int t_value(const SkeinComplex& c, int i, int j, const f2::Column& cycle) {
  const f2::ChainComplexF2 cx = c.complex(Mode::khovanov);
  const auto& d = cx.differential();
  if (cycle.empty()) throw DomainError("target class is zero");
  for (f2::Index g : cycle) {
    const f2::Grading& gr = cx.grading(g);
    if (gr.degree != i || gr.q != j) throw DomainError("target cycle is not homogeneous in (i, j)");
  }
  if (!d.apply(cycle).empty()) throw DomainError("target chain is not a cycle");

  std::vector<f2::Index> level;
  std::vector<f2::Column> boundaries;
  for (std::size_t g = 0; g < cx.size(); ++g) {
    const f2::Grading& gr = cx.grading(g);
    if (gr.q != j) continue;
    if (gr.degree == i) level.push_back(static_cast<f2::Index>(g));
    if (gr.degree == i - 1 && !d.column(g).empty()) boundaries.push_back(d.column(g));
  }
  if (f2::rank_and_solve(f2::SparseMatrixF2::from_columns(cx.size(), boundaries), cycle).solution)
    throw DomainError("target class is zero");
  std::stable_sort(level.begin(), level.end(),
                   [&](f2::Index a, f2::Index b) { return cx.grading(a).f < cx.grading(b).f; });
  std::set<int> ks;
  for (f2::Index g : level) ks.insert(cx.grading(g).f);
  for (int k : ks) {
    std::vector<f2::Index> sub;
    std::vector<f2::Column> cols;
    for (f2::Index g : level)
      if (cx.grading(g).f <= k) {
        sub.push_back(g);
        cols.push_back(d.column(g));
      }
    std::vector<f2::Column> span = boundaries;
    for (const f2::Column& combo : f2::kernel_basis(f2::SparseMatrixF2::from_columns(cx.size(), cols))) {
      f2::Column z;
      for (f2::Index t : combo) z.push_back(sub[t]);
      std::sort(z.begin(), z.end());
      span.push_back(std::move(z));
    }
    if (f2::rank_and_solve(f2::SparseMatrixF2::from_columns(cx.size(), span), cycle).solution) return k;
  }
  throw InvariantError("cycle not reached by the top filtration level");
}

int t_value(const AnnularDiagram& d, int i, int j, const SkeinOptions& options) {
  SkeinOptions o = options;
  o.mode = Mode::khovanov;
  SkeinComplex c = build(d, o);
  f2::Homology h = f2::homology(c.complex(Mode::khovanov), f2::Blocks::q);
  const f2::HomologyClass* found = nullptr;
  int count = 0;
  for (const auto& cls : h.classes)
    if (cls.key[0] == i && cls.key[1] == j) {
      found = &cls;
      ++count;
    }
  if (count != 1) throw DomainError("Khovanov group at (" + std::to_string(i) + "," + std::to_string(j) + ") has rank " + std::to_string(count) + ", not 1");
  return t_value(c, i, j, found->cycle);
}

UnknotT unknot_t_values(const AnnularDiagram& d) {
  SkeinOptions o;
  o.mode = Mode::khovanov;
  SkeinComplex c = build(d, o);
  f2::Homology h = f2::homology(c.complex(Mode::khovanov), f2::Blocks::q);
  Bigraded expected{{{0, -1}, 1}, {{0, 1}, 1}};
  if (bigraded(h.ranks) != expected) throw DomainError("Khovanov homology is not that of the unknot");
  UnknotT t;
  for (const auto& cls : h.classes) (cls.key[1] > 0 ? t.plus : t.minus) = t_value(c, 0, cls.key[1], cls.cycle);
  return t;
}

std::optional<int> braid_strands(const AnnularDiagram& d) {
  Resolution r = 0;
  for (int c = 0; c < d.crossing_count(); ++c) r |= Resolution(oriented_bit(d, c)) << c;
  CircleConfiguration cfg = resolve(d, r);
  int direction = 0;
  for (const Circle& c : cfg.circles) {
    if (c.trivial()) return std::nullopt;
    if (direction == 0) direction = c.winding;
    if (c.winding != direction) return std::nullopt;
  }
  return static_cast<int>(cfg.circles.size());
}

PlamenevskayaReport plamenevskaya(const AnnularDiagram& d) {
  PlamenevskayaReport rep;
  rep.diagram = d.meridians() ? d : add_split_meridians(d);
  auto b = braid_strands(rep.diagram);
  if (!b) throw DomainError("diagram is not a braid closure");
  rep.strands = *b;
  SkeinOptions o;
  o.reduced = true;
  o.meridians = true;
  o.mode = Mode::khovanov;
  SkeinComplex c = build(rep.diagram, o);

  Resolution r = 0;
  for (int x = 0; x < rep.diagram.crossing_count(); ++x) r |= Resolution(oriented_bit(rep.diagram, x)) << x;
  const std::uint32_t n = static_cast<std::uint32_t>(c.configuration(r).circles.size());
  const std::uint32_t minus = ((std::uint32_t{1} << n) - 1) & ~std::uint32_t{1};
  auto idx = c.find(r, minus);
  if (!idx) throw InvariantError("oriented resolution state missing from the reduced complex");
  rep.index = *idx;
  rep.state = c.states()[*idx];
  rep.grading = c.grading(*idx);

  const bool d0_closed = c.d0().column(*idx).empty();
  const bool kh_closed = f2::sum(c.d0().column(*idx), c.d1().column(*idx)).empty();
  rep.checks.push_back({"closed under d0", d0_closed, ""});
  rep.checks.push_back({"closed under d0+d1", kh_closed, ""});
  rep.checks.push_back({"Psi = 1 - b", rep.grading.f == 1 - rep.strands,
                        "Psi = " + std::to_string(rep.grading.f) + ", b = " + std::to_string(rep.strands)});

  int kmin = rep.grading.f;
  for (std::size_t g = 0; g < c.size(); ++g) kmin = std::min(kmin, c.grading(g).f);
  int at_min = 0;
  for (std::size_t g = 0; g < c.size(); ++g) at_min += c.grading(g).f == kmin;
  rep.checks.push_back({"unique generator at minimal Psi", kmin == rep.grading.f && at_min == 1,
                        std::to_string(at_min) + " generator(s) at k = " + std::to_string(kmin)});

  f2::Homology h = f2::homology(c.complex(Mode::skein), f2::Blocks::q_and_f);
  int rank_min = 0;
  for (const auto& [k, v] : h.ranks)
    if (k[2] == kmin) rank_min += v;
  rep.checks.push_back({"generates minimal-k skein homology", rank_min == 1 && kmin == rep.grading.f,
                        "rank " + std::to_string(rank_min) + " at k = " + std::to_string(kmin)});
  return rep;
}

TwistProfile twist_profile(const AnnularDiagram& d) {
  TwistProfile t;
  for (int c = 0; c < d.crossing_count(); ++c) {
    AnnularDiagram s = smooth_crossings(d, single_choice(d, c, oriented_bit(d, c)));
    if (is_connected(s)) continue;
    auto w = component_windings(s);
    if (w.size() == 2 && w[0] != 0 && w[1] != 0) (d.crossing(c).sign > 0 ? t.plus : t.minus) += 1;
  }
  return t;
}

bool all_nugatory(const AnnularDiagram& d) {
  for (int c = 0; c < d.crossing_count(); ++c) {
    bool split = false;
    for (int bit : {0, 1}) split = split || !is_connected(smooth_crossings(d, single_choice(d, c, bit)));
    if (!split) return false;
  }
  return true;
}

AlternatingReport check_alternating_support(const AnnularDiagram& d) {
  AlternatingReport rep;
  rep.alternating = is_alternating(d);
  GoeritzData g = goeritz(d);
  rep.sigma = g.signature;
  rep.determinant = g.determinant;
  rep.M = g.coloring.M;
  const bool odd = d.ray_total() % 2 == 1;
  const bool twisted_unknot = d.component_count() == 1 && all_nugatory(d);
  rep.form = odd ? "sigma" : "M";
  rep.target = odd ? rep.sigma : rep.M;
  rep.claim_applies = rep.alternating && (odd || twisted_unknot);

  for (const auto& [k, r] : skein_homology(d).ranks)
    if (r && k[2] - k[1] + 2 * k[0] != rep.target) rep.offending.push_back(k);
  SkeinOptions reduced;
  reduced.reduced = true;
  for (const auto& [k, r] : khovanov_homology(d, reduced).ranks) rep.reduced_rank += r;

  std::string advisory = rep.claim_applies ? "" : "advisory: ";
  if (!rep.alternating) advisory += "diagram is not alternating; ";
  else if (!rep.claim_applies) advisory += "even linking and not a twisted unknot; ";
  std::string offenders;
  for (const auto& k : rep.offending) offenders += key_text(k) + " ";
  rep.checks.push_back({"support on k - j + 2i = " + rep.form,
                        rep.claim_applies ? rep.offending.empty() : true,
                        advisory + rep.form + " = " + std::to_string(rep.target) +
                            (rep.offending.empty() ? "" : ", offending " + offenders)});
  if (rep.alternating)
    rep.checks.push_back({"reduced Khovanov rank = det", rep.reduced_rank == rep.determinant,
                          "rank " + std::to_string(rep.reduced_rank) + ", det " + std::to_string(rep.determinant)});
  return rep;
}

SpanningReport spanning_leaves(const AnnularDiagram& d, int cap) {
  check_capacity(d, cap);
  if (!is_connected(d)) throw DomainError("split diagram: no admissible crossing at the root");
  SpanningReport rep;
  const int nc = d.crossing_count();

  std::function<void(std::vector<int>)> visit = [&](std::vector<int> choice) {
    for (int c = 0; c < nc; ++c) {
      if (choice[c] >= 0) continue;
      std::vector<int> zero = choice, one = choice;
      zero[c] = 0;
      one[c] = 1;
      if (is_connected(smooth_crossings(d, zero)) && is_connected(smooth_crossings(d, one))) {
        rep.order.push_back(c);
        visit(zero);
        visit(one);
        return;
      }
    }
    SpanningLeaf leaf;
    leaf.choice = choice;
    leaf.diagram = smooth_crossings(d, choice);
    leaf.writhe = leaf.diagram.writhe();
    int t = 0;
    for (int c = 0; c < nc; ++c) {
      int bit = choice[c];
      if (bit < 0) bit = leaf.diagram.crossing(t++).sign > 0 ? 1 : 0;
      leaf.smoothing |= Resolution(bit) << c;
    }
    if (resolve(d, leaf.smoothing).circles.size() != 1)
      throw InvariantError("leaf smoothing is not a single circle", "resolution " + std::to_string(leaf.smoothing));
    leaf.r = std::popcount(leaf.smoothing);
    leaf.twists = twist_profile(leaf.diagram);
    rep.leaves.push_back(std::move(leaf));
  };
  visit(std::vector<int>(nc, -1));

  SkeinOptions unshifted;
  unshifted.shifted = false;
  unshifted.cap = cap;
  Laurent assembled;
  int leaf_rank = 0;
  for (const SpanningLeaf& leaf : rep.leaves) {
    TrigradedRanks h = skein_homology(leaf.diagram);
    leaf_rank += f2::total_rank(h.ranks);
    assembled += poincare(h.ranks).shifted(leaf.r - leaf.writhe, leaf.r - 2 * leaf.writhe, 0);
  }
  Laurent full = euler_statesum(d, unshifted).at_t_minus_one();
  rep.checks.push_back({"leaf Euler characteristic", assembled.at_t_minus_one() == full, full.to_string()});
  const int rank = f2::total_rank(skein_homology(d, unshifted).ranks);
  rep.checks.push_back({"rank bounded by leaves", rank <= leaf_rank,
                        std::to_string(rank) + " <= " + std::to_string(leaf_rank)});

  int one_circle = 0;
  all_resolutions(d, [&](const CircleConfiguration& cfg) { one_circle += cfg.circles.size() == 1; }, cap);
  rep.checks.push_back({"one leaf per one-circle smoothing", one_circle == static_cast<int>(rep.leaves.size()),
                        std::to_string(rep.leaves.size()) + " leaves, " + std::to_string(one_circle) + " smoothings"});

  if (is_alternating(d) && nc > 0) {
    const int sigma = goeritz(d).signature;
    bool constant = true;
    for (const SpanningLeaf& leaf : rep.leaves) constant = constant && leaf.r == rep.leaves.front().r;
    const int r = rep.leaves.front().r;
    rep.checks.push_back({"r(S) constant", constant, "r = " + std::to_string(r)});
    rep.checks.push_back({"r(S) - n+ = sigma", constant && r - d.n_plus() == sigma,
                          std::to_string(r) + " - " + std::to_string(d.n_plus()) + " vs " + std::to_string(sigma)});
  }
  return rep;
}

f2::RankTable convolve(const f2::RankTable& a, const f2::RankTable& b) {
  f2::RankTable out;
  for (const auto& [x, r] : a)
    for (const auto& [y, s] : b)
      if (r && s) out[{x[0] + y[0], x[1] + y[1], x[2] + y[2]}] += r * s;
  return out;
}

namespace {

f2::Column tensor_cycle(const SkeinComplex& a, const f2::Column& za, const SkeinComplex& b, const f2::Column& zb,
                        const SkeinComplex& u) {
  const int ca = a.diagram().crossing_count();
  const int na = a.diagram().arc_count();
  f2::Column z;
  for (f2::Index ga : za)
    for (f2::Index gb : zb) {
      const EnhancedState& sa = a.states()[ga];
      const EnhancedState& sb = b.states()[gb];
      const Resolution r = sa.resolution | (sb.resolution << ca);
      const CircleConfiguration& cu = u.configuration(r);
      const CircleConfiguration& cfa = a.configuration(sa.resolution);
      const CircleConfiguration& cfb = b.configuration(sb.resolution);
      std::uint32_t minus = 0;
      for (std::size_t c = 0; c < cu.circles.size(); ++c) {
        const int arc = cu.circles[c].arcs.front();
        const bool m = arc < na ? (sa.minus >> cfa.circle_of_arc[arc]) & 1u : (sb.minus >> cfb.circle_of_arc[arc - na]) & 1u;
        if (m) minus |= std::uint32_t{1} << c;
      }
      auto at = u.find(r, minus);
      if (!at) throw InvariantError("product state missing from the union complex");
      f2::toggle(z, static_cast<f2::Index>(*at));
    }
  return z;
}

}  // namespace

SplitUnionReport split_union_check(const AnnularDiagram& inner, const AnnularDiagram& outer) {
  SplitUnionReport rep;
  const AnnularDiagram u = stack(inner, outer);
  rep.union_ranks = skein_homology(u).ranks;
  rep.convolution = convolve(skein_homology(inner).ranks, skein_homology(outer).ranks);
  rep.checks.push_back({"tensor law", rep.union_ranks == rep.convolution,
                        "union rank " + std::to_string(f2::total_rank(rep.union_ranks)) + ", product rank " +
                            std::to_string(f2::total_rank(rep.convolution))});

  SkeinOptions kh;
  kh.mode = Mode::khovanov;
  SkeinComplex ca = build(inner, kh), cb = build(outer, kh), cu = build(u, kh);
  f2::Homology ha = f2::homology(ca.complex(Mode::khovanov), f2::Blocks::q);
  f2::Homology hb = f2::homology(cb.complex(Mode::khovanov), f2::Blocks::q);
  const Bigraded unknot{{{0, -1}, 1}, {{0, 1}, 1}};
  if (bigraded(ha.ranks) != unknot || bigraded(hb.ranks) != unknot) return rep;
  for (const auto& x : ha.classes)
    for (const auto& y : hb.classes) {
      const int tx = t_value(ca, 0, x.key[1], x.cycle);
      const int ty = t_value(cb, 0, y.key[1], y.cycle);
      f2::Column z = tensor_cycle(ca, x.cycle, cb, y.cycle, cu);
      const int tz = t_value(cu, 0, x.key[1] + y.key[1], z);
      std::string name = std::string("T additivity u") + (x.key[1] > 0 ? "+" : "-") + " u" + (y.key[1] > 0 ? "+" : "-");
      rep.checks.push_back({name, tz == tx + ty,
                            std::to_string(tz) + " = " + std::to_string(tx) + " + " + std::to_string(ty)});
    }
  return rep;
}

}  // namespace akh
