// One PASS/FAIL line per acceptance criterion; exits nonzero when any line fails.

#include <cstdio>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>

#include "akh/checks.hpp"
#include "akh/diagram.hpp"
#include "akh/generators.hpp"
#include "akh/invariants.hpp"
#include "akh/planar.hpp"

using namespace akh;

namespace {

int failures = 0;

void report(const std::string& id, const std::string& what, bool pass, const std::string& detail = "") {
  if (!pass) ++failures;
  std::cout << (pass ? "PASS" : "FAIL") << " [" << id << "] " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
}

// Runs `body`, turning an escaped exception into a failed line.
void guarded(const std::string& id, const std::string& what, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, what, false, std::string("exception: ") + e.what());
  }
}

f2::RankTable without_zeros(const f2::RankTable& t) {
  f2::RankTable out;
  for (const auto& [k, r] : t)
    if (r) out[k] = r;
  return out;
}

std::string table_text(const f2::RankTable& t) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [k, r] : t) {
    if (!r) continue;
    s << (first ? "" : " ") << r << "@(" << k[0] << ";" << k[1] << "," << k[2] << ")";
    first = false;
  }
  return s.str();
}

std::string first_failure(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
  return "";
}

void exact_table(const std::string& id, const std::string& word, const f2::RankTable& expected) {
  guarded(id, "skein homology of " + word, [&] {
    const auto got = without_zeros(skein_homology(parse_braid_word(word)).ranks);
    report(id, "skein homology of \"" + word + "\" is exactly " + table_text(expected), got == expected,
           "engine: " + table_text(got));
  });
}

Laurent m(int t, int q, int x, long long c = 1) { return Laurent::monomial(t, q, x, c); }

void figure_eight() {
  const auto d = parse_braid_word("3: 1 -2 1 -2");
  const Laurent displayed = m(-2, -4, 0) + m(2, 4, 0) + m(-1, -2, 0, 2) + m(1, 2, 0, 2) + m(0, 2, 2) + m(0, 0, 0) +
                            m(0, -2, -2) + m(1, 0, 0) + m(0, 0, 0);
  const Laurent pair = m(1, 0, 0) + m(0, 0, 0);

  const auto unreduced = skein_homology(d);
  const auto q1 = poincare(unreduced.ranks).divided_by(circle_class());
  report("4", "P(H(L))/(qx+1/qx) = displayed polynomial minus the cancelling pair t+1", q1 && *q1 == displayed - pair,
         q1 ? q1->to_string() : "not divisible");
  const auto chi = euler_from_homology(unreduced.ranks).divided_by(circle_class());
  report("4", "Euler characteristic /(qx+1/qx) = displayed polynomial at t = -1",
         chi && *chi == displayed.at_t_minus_one(), chi ? chi->to_string() : "not divisible");
  const auto statesum = euler_statesum(d, {.reduced = true, .meridians = true}).at_t_minus_one();
  const auto twice = statesum.divided_by(circle_class() * circle_class());
  report("4", "meridian-normalized state sum at t = -1 /(qx+1/qx)^2 = displayed polynomial at t = -1",
         twice && *twice == displayed.at_t_minus_one(), twice ? twice->to_string() : "not divisible");

  const auto normalized_homology = skein_homology(d, {.reduced = true, .meridians = true});
  const auto q2 = poincare(normalized_homology.ranks).divided_by(circle_class() * circle_class());
  report("4", "meridian-normalized homology /(qx+1/qx)^2 agrees with the unreduced quotient", q2 && q1 && *q2 == *q1,
         q2 ? q2->to_string() : "not divisible");
  if (!q1) return;
  const auto normalized = ranks_of(*q1);
  if (!normalized) {
    report("4", "normalized polynomial has nonnegative coefficients", false);
    return;
  }
  const int total = f2::total_rank(*normalized);
  report("4", "normalized homology total rank 10", total == 10, "engine: " + std::to_string(total));

  bool row = true;
  const int row_i[] = {-2, -1, 0, 1, 2}, row_j[] = {-4, -2, 0, 2, 4}, row_r[] = {1, 2, 1, 2, 1};
  int row_total = 0;
  for (const auto& [k, r] : *normalized)
    if (k[2] == 0) row_total += r;
  for (int n = 0; n < 5; ++n) {
    auto it = normalized->find({row_i[n], row_j[n], 0});
    if (it == normalized->end() || it->second != row_r[n]) row = false;
  }
  report("4", "k=0 row ranks (1,2,1,2,1) at (i;j) = (-2;-4) (-1;-2) (0;0) (1;2) (2;4)", row && row_total == 7,
         table_text(*normalized));

  std::vector<std::pair<f2::RankKey, int>> off_row;
  for (const auto& [k, r] : *normalized)
    if (k[2] != 0) off_row.push_back({k, r});
  const bool one_each = off_row.size() == 2 && off_row[0].first[2] == -2 && off_row[0].second == 1 &&
                        off_row[1].first[2] == 2 && off_row[1].second == 1;
  std::string where;
  for (const auto& [k, r] : off_row)
    where += (where.empty() ? "" : ", ") + std::string("k=") + std::to_string(k[2]) + " at (i;j) = (" +
             std::to_string(k[0]) + ";" + std::to_string(k[1]) + ")";
  report("4", "one rank-1 group at k=+2 and one at k=-2", one_each, where);
  bool matches = one_each;
  for (const auto& [k, r] : off_row) matches = matches && displayed.coefficient(k[0], k[1], k[2]) == r;
  report("4", "k=+-2 positions match the q^2x^2 and q^-2x^-2 terms of the polynomial", matches, where);
  bool law = true;
  for (const auto& [k, r] : *normalized) law = law && k[2] - k[1] + 2 * k[0] == 0;
  report("4", "normalized groups satisfy k - j + 2i = sigma = 0", law);
}

}  // namespace

int main() {
  exact_table("1", "2: -1", {{{-1, -3, 0}, 1}, {{0, -3, -2}, 1}, {{0, -1, 0}, 1}, {{0, 1, 2}, 1}});
  exact_table("2", "2: 1", {{{1, 3, 0}, 1}, {{0, -1, -2}, 1}, {{0, 1, 0}, 1}, {{0, 3, 2}, 1}});
  exact_table("3", "1:", {{{0, 1, 1}, 1}, {{0, -1, -1}, 1}});
  guarded("4", "figure-eight example", figure_eight);

  std::vector<AnnularDiagram> corpus;
  {
    gen::Rng rng(20240501);
    for (int n = 0; n < 50; ++n) corpus.push_back(gen::random_annular(rng, 6));
  }
  guarded("5", "collapse law", [&] {
    int bad = 0;
    std::string first;
    for (const auto& d : corpus) {
      const auto kh = khovanov_homology(d);
      const bool ok = kh.consistent() && kh.ranks == bigraded(f2::homology(plain_khovanov_complex(d, false), f2::Blocks::q).ranks);
      if (!ok && bad++ == 0) first = std::to_string(d.crossing_count()) + " crossings";
    }
    report("5", "E2 = E-infinity = Khovanov homology on 50 random annular diagrams", bad == 0,
           std::to_string(bad) + " failures" + (first.empty() ? "" : ", first with " + first));
  });
  guarded("6", "mirror duality", [&] {
    int bad = 0;
    for (const auto& d : corpus) {
      f2::RankTable dual;
      for (const auto& [k, r] : skein_homology(mirror(d)).ranks)
        if (r) dual[{-k[0], -k[1], -k[2]}] = r;
      if (without_zeros(skein_homology(d).ranks) != dual) ++bad;
    }
    report("6", "H(L) at (i;j,k) = H(mirror) at (-i;-j,-k) on the same 50 diagrams", bad == 0,
           std::to_string(bad) + " failures");
  });
  guarded("7", "Reidemeister invariance", [&] {
    gen::Rng rng(7);
    int bad = 0;
    std::map<std::string, int> kinds;
    for (int n = 0; n < 30; ++n) {
      const auto mv = gen::random_move(rng, 6);
      ++kinds[mv.kind];
      if (without_zeros(skein_homology(mv.before).ranks) != without_zeros(skein_homology(mv.after).ranks)) ++bad;
    }
    std::string mix;
    for (const auto& [k, c] : kinds) mix += (mix.empty() ? "" : " ") + k + " x" + std::to_string(c);
    report("7", "30 move pairs give identical shifted rank tables", bad == 0,
           std::to_string(bad) + " failures; " + mix);
  });
  guarded("8", "alternating support", [&] {
    int bad = 0, count = 0;
    std::string first;
    for (const auto& w : gen::alternating_odd_words()) {
      const auto d = parse_braid_word(w);
      ++count;
      const auto rep = check_alternating_support(d);
      bool ok = rep.claim_applies && all_pass(rep.checks);
      const int sigma = goeritz(d).signature;
      const long long det = goeritz(d).determinant;
      for (const auto& [k, r] : skein_homology(d).ranks) ok = ok && (!r || k[2] - k[1] + 2 * k[0] == sigma);
      int reduced_total = 0;
      for (const auto& [k, r] : khovanov_homology(d, {.reduced = true}).ranks) reduced_total += r;
      ok = ok && reduced_total == det;
      if (!ok && bad++ == 0) first = w + ": " + first_failure(rep.checks);
    }
    report("8", std::to_string(count) + " alternating odd-linking closures: support on k - j + 2i = sigma, reduced rank = det",
           bad == 0 && count >= 15, std::to_string(bad) + " failures" + (first.empty() ? "" : "; " + first));
  });
  guarded("9", "twisted unknots", [&] {
    int bad = 0, count = 0;
    std::string first;
    for (const auto& w : gen::twisted_unknot_words(6)) {
      const auto d = parse_braid_word(w);
      ++count;
      const auto t = unknot_t_values(d), tm = unknot_t_values(mirror(d));
      const int T = twist_profile(d).T();
      const bool ok = t.plus == T + 1 && t.minus == T - 1 && t.plus == -tm.minus && t.minus == -tm.plus;
      if (!ok && bad++ == 0) first = w;
    }
    report("9", std::to_string(count) + " twisted unknots: T(u+-) = T(L) +- 1 and T(u+-) = -T_mirror(u-+)", bad == 0,
           std::to_string(bad) + " failures" + (first.empty() ? "" : "; first " + first));
  });
  guarded("10", "Plamenevskaya", [&] {
    gen::Rng rng(10);
    int bad = 0;
    std::string first;
    for (int n = 0; n < 20; ++n) {
      const int strands = std::uniform_int_distribution<int>(2, 4)(rng);
      const int letters = std::uniform_int_distribution<int>(1, 6)(rng);
      const std::string w = gen::braid_text(strands, gen::random_word(rng, strands, letters));
      const auto rep = plamenevskaya(parse_braid_word(w));
      if (!all_pass(rep.checks) && bad++ == 0) first = w + ": " + first_failure(rep.checks);
    }
    report("10", "20 braid closures with meridians: psi closed, Psi = 1 - b, unique at minimal Psi", bad == 0,
           std::to_string(bad) + " failures" + (first.empty() ? "" : "; " + first));
  });
  guarded("11", "spanning trees", [&] {
    int bad = 0, count = 0;
    std::string first;
    auto run = [&](const AnnularDiagram& d, const std::string& label) {
      ++count;
      const auto rep = spanning_leaves(d);
      if (!all_pass(rep.checks) && bad++ == 0) first = label + ": " + first_failure(rep.checks);
    };
    for (const auto& w : gen::alternating_odd_words())
      if (w != "1:") run(parse_braid_word(w), w);
    gen::Rng rng(11);
    for (int n = 0; n < 20; ++n) {
      const auto d = gen::random_annular(rng, 6);
      if (is_connected(d)) run(d, "random " + std::to_string(n));
    }
    report("11", std::to_string(count) + " diagrams: leaf Euler characteristic, rank bound, r(S) law", bad == 0,
           std::to_string(bad) + " failures" + (first.empty() ? "" : "; " + first));
  });
  guarded("12", "homological algebra", [&] {
    gen::Rng rng(12);
    int cone_bad = 0, reduce_bad = 0;
    for (int n = 0; n < 100; ++n) {
      if (!all_pass(checks::cone_law(gen::random_filtered_map(rng, 10)))) ++cone_bad;
      if (!all_pass(checks::bifiltered_reduction(gen::random_filtered_complex(rng, 10)))) ++reduce_bad;
    }
    report("12", "E1 of 100 random mapping cones matches the cone of E1(f)", cone_bad == 0,
           std::to_string(cone_bad) + " failures");
    report("12", "bifiltered reduction on 100 random complexes: d'00 = 0 and pages r <= 4 preserved", reduce_bad == 0,
           std::to_string(reduce_bad) + " failures");
  });
  guarded("13", "split unions", [&] {
    gen::Rng rng(13);
    int bad = 0;
    std::string first;
    for (int n = 0; n < 10; ++n) {
      const auto rep = split_union_check(gen::random_annular(rng, 3), gen::random_annular(rng, 3));
      if (!all_pass(rep.checks) && bad++ == 0) first = first_failure(rep.checks);
    }
    report("13", "tensor law and T additivity on 10 stacked pairs", bad == 0,
           std::to_string(bad) + " failures" + (first.empty() ? "" : "; " + first));
  });

  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " line(s) failed\n" : "acceptance: all passed\n");
  return failures ? 1 : 0;
}
