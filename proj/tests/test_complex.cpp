#include <doctest.h>

#include "akh/checks.hpp"
#include "akh/complex.hpp"
#include "akh/error.hpp"
#include "akh/generators.hpp"
#include "akh/skein.hpp"
#include "oracles.hpp"

using namespace akh;
using namespace akh::f2;

namespace {

ChainComplexF2 pair_complex() {
  // x -> y, same levels
  return ChainComplexF2({{0, 0, 1, 1}, {1, 0, 1, 1}}, SparseMatrixF2::from_columns(2, {{1}, {}}));
}

// Pages report raw levels; the oracle counts in units of `step`.
RankTable in_units(const RankTable& t, int step) {
  RankTable out;
  for (const auto& [k, r] : t)
    if (r) out[{k[0], k[1], oracle::floor_div(k[2], step)}] += r;
  return out;
}

int level_span(const ChainComplexF2& c, Axis axis) {
  int lo = 0, hi = 0;
  for (const auto& g : c.gradings()) {
    lo = std::min(lo, level(g, axis));
    hi = std::max(hi, level(g, axis));
  }
  return hi - lo + 2;
}

// Rank of H(f) : H(A) -> H(B) on a (degree, q, level) block of f-preserving complexes.
RankTable dense_induced(const ChainComplexF2& a, const ChainComplexF2& b, const SparseMatrixF2& f) {
  const auto da = oracle::densify(a);
  const auto db = oracle::densify(b);
  std::map<RankKey, std::vector<std::size_t>> blocks_a;
  for (std::size_t x = 0; x < a.size(); ++x) blocks_a[{a.grading(x).degree, a.grading(x).q, a.grading(x).f}].push_back(x);
  RankTable out;
  for (const auto& [key, members] : blocks_a) {
    std::vector<oracle::Bits> images;
    for (auto x : members) images.push_back(da.d[x]);
    std::vector<oracle::Bits> boundaries;
    for (std::size_t y = 0; y < b.size(); ++y)
      if (b.grading(y).degree + 1 == key[0] && b.grading(y).q == key[1] && b.grading(y).f == key[2])
        boundaries.push_back(db.d[y]);
    const int base = oracle::dense_rank(boundaries);
    for (const auto& comb : oracle::dense_kernel(images, a.size())) {
      oracle::Bits v(b.size(), 0);
      for (std::size_t k = 0; k < members.size(); ++k)
        if (comb[k])
          for (auto t : f.column(members[k])) v[t] ^= 1;
      boundaries.push_back(v);
    }
    out[key] = oracle::dense_rank(boundaries) - base;
  }
  return out;
}

ChainComplexF2 graded_piece(const ChainComplexF2& c) {
  std::vector<Column> cols(c.size());
  for (std::size_t x = 0; x < c.size(); ++x)
    for (auto y : c.differential().column(x))
      if (c.grading(y).f == c.grading(x).f) cols[x].push_back(y);
  return ChainComplexF2(c.gradings(), SparseMatrixF2::from_columns(c.size(), std::move(cols)));
}

}  // namespace

TEST_SUITE("complex") {
  TEST_CASE("constructor enforces the grading laws") {
    CHECK_THROWS_AS(ChainComplexF2({{0, 0, 0, 0}, {2, 0, 0, 0}}, SparseMatrixF2::from_columns(2, {{1}, {}})),
                    InvariantError);
    CHECK_THROWS_AS(ChainComplexF2({{0, 0, 0, 0}, {1, 1, 0, 0}}, SparseMatrixF2::from_columns(2, {{1}, {}})),
                    InvariantError);
    CHECK_THROWS_AS(ChainComplexF2({{0, 0, 0, 0}, {1, 0, 1, 0}}, SparseMatrixF2::from_columns(2, {{1}, {}})),
                    InvariantError);
    CHECK_THROWS_AS(ChainComplexF2({{0, 0, 0, 0}, {1, 0, 0, 1}}, SparseMatrixF2::from_columns(2, {{1}, {}})),
                    InvariantError);
  }

  TEST_CASE("square-zero failures name a witness") {
    ChainComplexF2 c({{0, 0, 0, 0}, {1, 0, 0, 0}, {2, 0, 0, 0}}, SparseMatrixF2::from_columns(3, {{1}, {2}, {}}));
    try {
      c.check_square_zero();
      FAIL("expected an invariant error");
    } catch (const InvariantError& e) {
      CHECK(e.witness().find("generator 0") != std::string::npos);
    }
  }

  TEST_CASE("homology agrees with rank-nullity") {
    gen::Rng rng(99);
    for (int t = 0; t < 80; ++t) {
      const auto c = gen::random_filtered_complex(rng, 10);
      CHECK(oracle::nonzero(homology(c, Blocks::q).ranks) == oracle::homology(c));
      for (const auto& cls : homology(c, Blocks::q).classes) {
        CHECK(c.differential().apply(cls.cycle).empty());
      }
    }
  }

  TEST_CASE("homology split by f needs an f-preserving differential") {
    ChainComplexF2 c({{0, 0, 1, 0}, {1, 0, 0, 0}}, SparseMatrixF2::from_columns(2, {{1}, {}}));
    CHECK_THROWS_AS(homology(c, Blocks::q_and_f), InvariantError);
    CHECK(homology(c, Blocks::q).ranks.empty());
  }

  TEST_CASE("spectral pages agree with the Z/B formula") {
    gen::Rng rng(5);
    for (int t = 0; t < 60; ++t) {
      const auto c = gen::random_filtered_complex(rng, 10);
      for (Axis axis : {Axis::f, Axis::g})
        for (int step : {1, 2}) {
          const auto ss = spectral_pages(c, 4, axis, step);
          REQUIRE(ss.pages.size() == 5);
          for (int r = 0; r <= 4; ++r) CHECK(in_units(ss.pages[r].ranks, step) == oracle::page(c, r, axis, step));
          CHECK(in_units(ss.infinity, step) == oracle::page(c, level_span(c, axis), axis, step));
        }
    }
  }

  TEST_CASE("degeneration index is the first stable page") {
    const auto c = pair_complex();
    auto ss = spectral_pages(c, 3);
    CHECK(ss.degeneration == 1);
    CHECK(total_rank(ss.pages[0].ranks) == 2);
    CHECK(total_rank(ss.pages[1].ranks) == 0);
    ChainComplexF2 jump({{0, 0, 2, 0}, {1, 0, 0, 0}}, SparseMatrixF2::from_columns(2, {{1}, {}}));
    ss = spectral_pages(jump, 3);
    CHECK(ss.degeneration == 3);
    CHECK(total_rank(ss.pages[2].ranks) == 2);
    CHECK(total_rank(ss.pages[3].ranks) == 0);
    CHECK(spectral_pages(jump, 3, Axis::f, 2).degeneration == 2);
  }

  TEST_CASE("cone of the zero map is a shifted direct sum") {
    gen::Rng rng(17);
    for (int t = 0; t < 30; ++t) {
      const auto a = gen::random_filtered_complex(rng, 6);
      const auto b = gen::random_filtered_complex(rng, 6);
      const auto cone = mapping_cone(a, b, SparseMatrixF2(b.size(), a.size()));
      RankTable expected = spectral_pages(b, 1).pages[1].ranks;
      const auto pa = spectral_pages(a, 1);
      for (const auto& [k, r] : pa.pages[1].ranks) expected[{k[0] - 1, k[1], k[2]}] += r;
      CHECK(oracle::nonzero(spectral_pages(cone, 1).pages[1].ranks) == oracle::nonzero(expected));
    }
  }

  TEST_CASE("cone of the identity is acyclic") {
    gen::Rng rng(18);
    for (int t = 0; t < 30; ++t) {
      const auto a = gen::random_filtered_complex(rng, 8);
      const auto cone = mapping_cone(a, a, SparseMatrixF2::identity(a.size()));
      CHECK(oracle::homology(cone).empty());
      CHECK(oracle::page(cone, 1, Axis::f).empty());
    }
  }

  TEST_CASE("cone rejects maps that are not filtered chain maps") {
    ChainComplexF2 a({{0, 0, 0, 0}}, SparseMatrixF2(1, 1));
    ChainComplexF2 b({{0, 0, 1, 0}}, SparseMatrixF2(1, 1));
    CHECK_THROWS_AS(mapping_cone(a, b, SparseMatrixF2::identity(1)), InvariantError);
    ChainComplexF2 c({{0, 0, 0, 0}, {1, 0, 0, 0}}, SparseMatrixF2::from_columns(2, {{1}, {}}));
    ChainComplexF2 z({{0, 0, 0, 0}, {1, 0, 0, 0}}, SparseMatrixF2(2, 2));
    CHECK_THROWS_AS(mapping_cone(z, c, SparseMatrixF2::from_columns(2, {{0}, {}})), InvariantError);
  }

  TEST_CASE("E1 of a random cone matches coker and ker of the induced map") {
    gen::Rng rng(2718);
    for (int t = 0; t < 100; ++t) {
      const auto inst = gen::random_filtered_map(rng, 8);
      const auto cone = mapping_cone(inst.a, inst.b, inst.f);
      const auto ga = graded_piece(inst.a);
      const auto gb = graded_piece(inst.b);
      std::vector<Column> f0(inst.a.size());
      for (std::size_t x = 0; x < inst.a.size(); ++x)
        for (auto y : inst.f.column(x))
          if (inst.b.grading(y).f == inst.a.grading(x).f) f0[x].push_back(y);
      const auto induced = dense_induced(ga, gb, SparseMatrixF2::from_columns(inst.b.size(), std::move(f0)));
      RankTable expected;
      for (const auto& [k, r] : oracle::page(inst.b, 1, Axis::f)) {
        auto it = induced.find(k);
        expected[k] += r - (it == induced.end() ? 0 : it->second);
      }
      for (const auto& [k, r] : oracle::page(inst.a, 1, Axis::f)) {
        auto it = induced.find(k);
        expected[{k[0] - 1, k[1], k[2]}] += r - (it == induced.end() ? 0 : it->second);
      }
      CHECK(oracle::page(cone, 1, Axis::f) == oracle::nonzero(expected));
      CHECK(oracle::nonzero(spectral_pages(cone, 1).pages[1].ranks) == oracle::nonzero(expected));
    }
  }

  TEST_CASE("bifiltered reduction") {
    SUBCASE("an already reduced complex keeps its generators") {
      ChainComplexF2 c({{0, 0, 1, 0}, {1, 0, 0, 0}}, SparseMatrixF2::from_columns(2, {{1}, {}}));
      const auto r = reduce_bifiltered(c);
      CHECK(r.size() == 2);
      CHECK(r.differential() == c.differential());
    }
    SUBCASE("a single cancelling pair disappears") { CHECK(reduce_bifiltered(pair_complex()).size() == 0); }
    SUBCASE("random complexes keep their pages") {
      gen::Rng rng(31);
      for (int t = 0; t < 100; ++t) {
        const auto c = gen::random_filtered_complex(rng, 10);
        const auto r = reduce_bifiltered(c);
        for (std::size_t x = 0; x < r.size(); ++x)
          for (auto y : r.differential().column(x))
            CHECK_FALSE((r.grading(x).f == r.grading(y).f && r.grading(x).g == r.grading(y).g));
        for (Axis axis : {Axis::f, Axis::g})
          for (int p = 1; p <= 4; ++p) CHECK(oracle::page(c, p, axis) == oracle::page(r, p, axis));
        CHECK(oracle::homology(c) == oracle::homology(r));
      }
    }
    SUBCASE("figure eight skein complex reduces to its skein homology") {
      SkeinOptions o;
      o.mode = Mode::khovanov;
      const auto c = build(parse_braid_word("3: 1 -2 1 -2"), o).complex();
      const auto r = reduce_bifiltered(c);
      SkeinOptions s;
      s.mode = Mode::skein;
      const auto skein = build(parse_braid_word("3: 1 -2 1 -2"), s).complex();
      CHECK(r.size() == static_cast<std::size_t>(total_rank(oracle::homology(skein))));
      CHECK(r.size() == 18);
    }
  }

  TEST_CASE("complex dumps round-trip") {
    gen::Rng rng(3);
    for (int t = 0; t < 10; ++t) {
      const auto c = gen::random_filtered_complex(rng, 8);
      const auto back = load_complex(dump_complex(c));
      CHECK(back.gradings() == c.gradings());
      CHECK(back.differential() == c.differential());
    }
    CHECK_THROWS(load_complex("{\"generators\": 3}"));
  }

  TEST_CASE("permuting generators preserves homology") {
    gen::Rng rng(8);
    const auto c = gen::random_filtered_complex(rng, 10);
    std::vector<std::size_t> order(c.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
    CHECK(oracle::homology(c.permuted(order)) == oracle::homology(c));
  }
}
