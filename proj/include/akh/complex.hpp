#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "akh/f2.hpp"

namespace akh::f2 {

struct Grading {
  int degree = 0;  // the differential raises it by exactly one
  int q = 0;       // preserved by the differential
  int f = 0;       // primary filtration: never raised by the differential
  int g = 0;       // secondary filtration: never raised either
  auto operator<=>(const Grading&) const = default;
};

enum class Axis { f, g };

inline int level(const Grading& gr, Axis axis) { return axis == Axis::f ? gr.f : gr.g; }

class ChainComplexF2 {
public:
  ChainComplexF2() = default;
  // Checks shape and the per-entry grading laws; d^2 is checked separately.
  ChainComplexF2(std::vector<Grading> gens, SparseMatrixF2 d);

  std::size_t size() const { return gens_.size(); }
  const Grading& grading(std::size_t i) const { return gens_[i]; }
  const std::vector<Grading>& gradings() const { return gens_; }
  const SparseMatrixF2& differential() const { return d_; }

  // Throws InvariantError naming a generator x with d(d(x)) != 0.
  void check_square_zero() const;
  bool preserves(Axis axis) const;
  ChainComplexF2 permuted(const std::vector<std::size_t>& order) const;

private:
  std::vector<Grading> gens_;
  SparseMatrixF2 d_;
};

// Keys are (degree, q, filtration level); tables built with Blocks::q use level 0.
using RankKey = std::array<int, 3>;
using RankTable = std::map<RankKey, int>;
int total_rank(const RankTable& t);

enum class Blocks { q, q_and_f };

struct HomologyClass {
  RankKey key;
  Column cycle;
};

struct Homology {
  RankTable ranks;
  std::vector<HomologyClass> classes;
};

Homology homology(const ChainComplexF2& c, Blocks blocks = Blocks::q_and_f);

// Cochain cone of f: A -> B. Generators of A come first with degree lowered by one.
ChainComplexF2 mapping_cone(const ChainComplexF2& a, const ChainComplexF2& b, const SparseMatrixF2& f);

// Cancels every differential component that preserves both f and g.
ChainComplexF2 reduce_bifiltered(const ChainComplexF2& c);

struct SpectralPage {
  int r = 0;
  RankTable ranks;             // keyed (degree, q, raw level of the surviving generator)
  RankTable differential_ranks;  // keyed by the source of d^r
};

struct SpectralSequence {
  std::vector<SpectralPage> pages;  // r = 0 .. r_max
  RankTable infinity;
  int degeneration = 0;  // least r with E^r = E^infinity
};

// Pages of the filtration `axis`, counting jumps in units of `step`.
SpectralSequence spectral_pages(const ChainComplexF2& c, int r_max, Axis axis = Axis::f, int step = 1);

std::string dump_complex(const ChainComplexF2& c);
ChainComplexF2 load_complex(const std::string& text);

}  // namespace akh::f2
