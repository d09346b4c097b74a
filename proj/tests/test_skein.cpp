#include <doctest.h>

#include <algorithm>

#include "akh/diagram.hpp"
#include "akh/generators.hpp"
#include "akh/invariants.hpp"
#include "akh/pd_format.hpp"
#include "akh/skein.hpp"
#include "support/oracles.hpp"

using namespace akh;

namespace {

f2::RankTable ranks_of_complex(const f2::ChainComplexF2& c) { return oracle::homology(c); }

f2::RankTable negated(const f2::RankTable& t) {
  f2::RankTable out;
  for (const auto& [k, r] : t)
    if (r) out[{-k[0], -k[1], -k[2]}] = r;
  return out;
}

f2::RankTable without_zeros(const f2::RankTable& t) {
  f2::RankTable out;
  for (const auto& [k, r] : t)
    if (r) out[k] = r;
  return out;
}

f2::Column sorted(f2::Column c) {
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

TEST_SUITE("skein") {
  TEST_CASE("states of crossingless circles") {
    const auto essential = enumerate_states(parse_braid_word("1:"), false);
    REQUIRE(essential.size() == 2);
    std::vector<std::array<int, 3>> seen;
    for (const auto& s : essential) seen.push_back({s.I, s.J(), s.Psi});
    std::sort(seen.begin(), seen.end());
    CHECK(seen == std::vector<std::array<int, 3>>{{0, -1, -1}, {0, 1, 1}});

    const auto trivial = enumerate_states(parse_annular_pd(R"({"crossings": [], "arcs": [{"id": 1, "ray": 0}], "marked": 1})"), false);
    REQUIRE(trivial.size() == 2);
    seen.clear();
    for (const auto& s : trivial) seen.push_back({s.I, s.J(), s.Psi});
    std::sort(seen.begin(), seen.end());
    CHECK(seen == std::vector<std::array<int, 3>>{{0, -1, 0}, {0, 1, 0}});

    CHECK(enumerate_states(parse_braid_word("1:"), true).size() == 1);
    CHECK(build(parse_braid_word("1:")).size() == 2);
  }

  TEST_CASE("the sigma_1 closure has six states and a rank one differential") {
    const auto c = build(parse_braid_word("2: 1"), {.shifted = false});
    CHECK(c.size() == 6);
    CHECK(f2::rank(c.d0()) == 1);
    CHECK(f2::rank(c.d0() + c.d1()) == 2);
  }

  TEST_CASE("merge of two essential circles") {
    const auto skein = build(parse_braid_word("2: 1"), {.shifted = false});
    const auto pp = *skein.find(0, 0), pm = *skein.find(0, 2), mp = *skein.find(0, 1), mm = *skein.find(0, 3);
    const auto wp = *skein.find(1, 0), wm = *skein.find(1, 1);
    CHECK(skein.d0().column(pp).empty());
    CHECK(skein.d1().column(pp) == f2::Column{static_cast<f2::Index>(wp)});
    CHECK(skein.d0().column(pm) == f2::Column{static_cast<f2::Index>(wm)});
    CHECK(skein.d0().column(mp) == f2::Column{static_cast<f2::Index>(wm)});
    CHECK(skein.d0().column(mm).empty());
    CHECK(skein.d1().column(mm).empty());
  }

  TEST_CASE("split of a trivial circle into two essential ones") {
    const auto c = build(parse_braid_word("2: -1"), {.shifted = false});
    REQUIRE(c.configuration(0).circles.size() == 1);
    CHECK(c.configuration(0).circles[0].trivial());
    const auto wp = *c.find(0, 0), wm = *c.find(0, 1);
    const f2::Column expected = sorted({static_cast<f2::Index>(*c.find(1, 1)), static_cast<f2::Index>(*c.find(1, 2))});
    CHECK(sorted(c.d0().column(wp)) == expected);
    CHECK(c.d1().column(wp).empty());
    CHECK(c.d0().column(wm).empty());
    CHECK(c.d1().column(wm) == f2::Column{static_cast<f2::Index>(*c.find(1, 3))});
  }

  TEST_CASE("final shifts") {
    const auto u = build(parse_braid_word("1:"));
    CHECK(u.final_shift() == Shift{0, 0, 0});
    const auto neg = build(parse_braid_word("2: -1"));
    CHECK(neg.final_shift() == Shift{-1, -2, 0});
    CHECK(neg.applied_shift() == neg.final_shift());
    const auto fig8 = build(parse_braid_word("3: 1 -2 1 -2"), {.reduced = true, .meridians = true});
    CHECK(fig8.final_shift() == Shift{-2, 2 - 4 - 1, -1});
    CHECK_THROWS_AS(apply_final_shift(neg), DomainError);

    const auto raw = build(parse_braid_word("2: -1"), {.shifted = false});
    CHECK(raw.applied_shift() == Shift{});
    const auto shifted = apply_final_shift(raw);
    for (std::size_t g = 0; g < raw.size(); ++g) {
      const auto a = raw.grading(g), b = shifted.grading(g);
      CHECK(b.degree == a.degree - 1);
      CHECK(b.q == a.q - 2);
      CHECK(b.f == a.f);
    }
  }

  TEST_CASE("skein homology of the two one-crossing closures") {
    const f2::RankTable neg{{{-1, -3, 0}, 1}, {{0, -3, -2}, 1}, {{0, -1, 0}, 1}, {{0, 1, 2}, 1}};
    CHECK(without_zeros(skein_homology(parse_braid_word("2: -1")).ranks) == neg);
    f2::RankTable flattened;
    for (const auto& [k, r] : neg) flattened[{k[0], k[1], 0}] += r;
    CHECK(ranks_of_complex(build(parse_braid_word("2: -1")).complex(Mode::skein)) == flattened);
    const f2::RankTable pos{{{1, 3, 0}, 1}, {{0, -1, -2}, 1}, {{0, 1, 0}, 1}, {{0, 3, 2}, 1}};
    CHECK(without_zeros(skein_homology(parse_braid_word("2: 1")).ranks) == pos);
  }

  TEST_CASE("differential laws on random diagrams") {
    gen::Rng rng(31);
    for (int t = 0; t < 40; ++t) {
      const auto d = gen::random_annular(rng, 6);
      for (bool reduced : {false, true}) {
        const auto c = build(d, {.reduced = reduced, .shifted = false});
        const auto& st = c.states();
        CHECK((c.d0() * c.d0()).is_zero());
        const auto total = c.d0() + c.d1();
        CHECK((total * total).is_zero());
        for (std::size_t g = 0; g < c.size(); ++g) {
          for (auto h : c.d0().column(g)) {
            CHECK(st[h].I == st[g].I + 1);
            CHECK(st[h].J() == st[g].J());
            CHECK(st[h].Psi == st[g].Psi);
          }
          for (auto h : c.d1().column(g)) {
            CHECK(st[h].I == st[g].I + 1);
            CHECK(st[h].J() == st[g].J());
            CHECK(st[h].Psi == st[g].Psi - 2);
          }
          if (reduced) CHECK((st[g].minus & 1u) == 0);
        }
        std::size_t expected = 0;
        all_resolutions(d, [&](const CircleConfiguration& cfg) {
          expected += std::size_t{1} << (cfg.circles.size() - (reduced ? 1 : 0));
        });
        CHECK(c.size() == expected);
      }
    }
  }

  TEST_CASE("reduced complex equals the quotient by the minus-marked subcomplex") {
    gen::Rng rng(32);
    for (int t = 0; t < 30; ++t) {
      const auto d = gen::random_annular(rng, 6);
      for (Mode mode : {Mode::skein, Mode::khovanov}) {
        const auto full = build(d, {.shifted = false, .mode = mode});
        const auto red = build(d, {.reduced = true, .shifted = false, .mode = mode});
        const auto fc = full.complex();
        std::vector<std::size_t> keep;
        std::vector<long> where(full.size(), -1);
        for (std::size_t g = 0; g < full.size(); ++g)
          if ((full.states()[g].minus & 1u) == 0) {
            where[g] = static_cast<long>(keep.size());
            keep.push_back(g);
          }
        for (std::size_t g = 0; g < full.size(); ++g)
          if (where[g] < 0)
            for (auto h : fc.differential().column(g)) CHECK(where[h] < 0);
        std::vector<f2::Grading> gens;
        std::vector<f2::Column> cols;
        for (std::size_t g : keep) {
          gens.push_back(fc.grading(g));
          f2::Column col;
          for (auto h : fc.differential().column(g))
            if (where[h] >= 0) col.push_back(static_cast<f2::Index>(where[h]));
          std::sort(col.begin(), col.end());
          cols.push_back(col);
        }
        const std::size_t n = gens.size();
        const f2::ChainComplexF2 quotient(std::move(gens), f2::SparseMatrixF2::from_columns(n, std::move(cols)));
        CHECK(ranks_of_complex(quotient) == ranks_of_complex(red.complex()));
      }
    }
  }

  TEST_CASE("khovanov mode agrees with the plain Khovanov complex") {
    gen::Rng rng(33);
    for (int t = 0; t < 30; ++t) {
      const auto d = gen::random_annular(rng, 6);
      for (bool reduced : {false, true}) {
        const auto annular = build(d, {.reduced = reduced, .mode = Mode::khovanov}).complex();
        const auto forgotten = f2::homology(annular, f2::Blocks::q).ranks;
        const auto plain = f2::homology(plain_khovanov_complex(d, reduced), f2::Blocks::q).ranks;
        CHECK(without_zeros(forgotten) == without_zeros(plain));
      }
    }
  }

  TEST_CASE("mirror option negates gradings") {
    gen::Rng rng(34);
    for (int t = 0; t < 20; ++t) {
      const auto d = gen::random_annular(rng, 5);
      const auto a = skein_homology(d).ranks;
      const auto b = skein_homology(d, {.mirror = true}).ranks;
      CHECK(without_zeros(b) == negated(a));
      CHECK(without_zeros(skein_homology(mirror(d)).ranks) == without_zeros(b));
      CHECK(prepared_diagram(d, {.mirror = true}) == mirror(d));
    }
  }

  TEST_CASE("capacity") {
    CHECK_THROWS_AS(build(parse_braid_word("2: 1 1 1"), {.cap = 2}), CapacityError);
    CHECK_THROWS_AS(enumerate_states(parse_braid_word("2: 1 1 1"), false, 2), CapacityError);
  }
}
