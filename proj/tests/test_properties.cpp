#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "akh/checks.hpp"
#include "akh/diagram.hpp"
#include "akh/generators.hpp"
#include "akh/invariants.hpp"
#include "akh/pd_format.hpp"
#include "akh/planar.hpp"
#include "support/oracles.hpp"

using namespace akh;

namespace {

f2::RankTable without_zeros(const f2::RankTable& t) {
  f2::RankTable out;
  for (const auto& [k, r] : t)
    if (r) out[k] = r;
  return out;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("annular homology is invariant under moves") {
    gen::Rng rng(61);
    for (int t = 0; t < 60; ++t) {
      const auto mv = gen::random_move(rng, 6);
      CAPTURE(mv.kind);
      CAPTURE(mv.description);
      CHECK(without_zeros(skein_homology(mv.before).ranks) == without_zeros(skein_homology(mv.after).ranks));
      CHECK(without_zeros(skein_homology(mv.before, {.reduced = true, .meridians = true}).ranks) ==
            without_zeros(skein_homology(mv.after, {.reduced = true, .meridians = true}).ranks));
      CHECK(khovanov_homology(mv.before).ranks == khovanov_homology(mv.after).ranks);
    }
  }

  TEST_CASE("homology does not depend on generator order") {
    gen::Rng rng(62);
    for (int t = 0; t < 20; ++t) {
      const auto c = build(gen::random_annular(rng, 5), {.mode = Mode::khovanov}).complex();
      std::vector<std::size_t> order(c.size());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      const auto p = c.permuted(order);
      CHECK(f2::homology(p, f2::Blocks::q).ranks == f2::homology(c, f2::Blocks::q).ranks);
      CHECK(f2::spectral_pages(p, 3, f2::Axis::f, 2).pages[2].ranks ==
            f2::spectral_pages(c, 3, f2::Axis::f, 2).pages[2].ranks);
    }
  }

  TEST_CASE("both front ends agree") {
    gen::Rng rng(63);
    for (int t = 0; t < 20; ++t) {
      const auto d = gen::random_annular(rng, 6);
      const auto e = parse_annular_pd(to_annular_pd(d));
      CHECK(skein_homology(d).ranks == skein_homology(e).ranks);
      if (d.crossing_count() > 0 && is_connected(d)) {
        CHECK(goeritz(d).signature == goeritz(e).signature);
        CHECK(goeritz(d).determinant == goeritz(e).determinant);
      }
    }
  }

  TEST_CASE("support law for alternating odd-linking braids") {
    for (const auto& w : gen::alternating_odd_words()) {
      CAPTURE(w);
      const auto d = parse_braid_word(w);
      const int sigma = goeritz(d).signature;
      for (const auto& [k, r] : skein_homology(d).ranks)
        if (r) CHECK(k[2] - k[1] + 2 * k[0] == sigma);
    }
  }

  TEST_CASE("skein homology agrees with the Z/B page formula") {
    gen::Rng rng(64);
    for (int t = 0; t < 15; ++t) {
      const auto d = gen::random_annular(rng, 5);
      const auto c = build(d, {.mode = Mode::khovanov}).complex();
      f2::RankTable halved;
      for (const auto& [k, r] : skein_homology(d).ranks)
        if (r) halved[{k[0], k[1], oracle::floor_div(k[2], 2)}] += r;
      CHECK(halved == oracle::page(c, 1, f2::Axis::f, 2));
    }
  }

  TEST_CASE("property suites") {
    for (const auto& suite : checks::suite_names()) {
      CAPTURE(suite);
      gen::Rng rng(65);
      for (int t = 0; t < 8; ++t)
        for (const auto& c : checks::on_random(suite, rng, 5)) {
          CAPTURE(c.detail);
          CHECK_MESSAGE(c.pass, c.name);
        }
    }
  }
}
