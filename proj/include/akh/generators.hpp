#pragma once

#include <random>
#include <string>
#include <vector>

#include "akh/complex.hpp"
#include "akh/diagram.hpp"

namespace akh::gen {

using Rng = std::mt19937_64;

std::string braid_text(int strands, const std::vector<int>& word);
std::vector<int> random_word(Rng& rng, int strands, int letters);

// Braid closures with optional kinks and partial smoothings, so that trivial
// circles and non-braid-like diagrams occur.
AnnularDiagram random_annular(Rng& rng, int max_crossings);

struct MovePair {
  std::string kind;  // "RI", "RII", "RIII", "conjugation"
  std::string description;
  AnnularDiagram before;
  AnnularDiagram after;
};

MovePair random_move(Rng& rng, int max_crossings);

// sigma_1^{+-1} sigma_2^{+-1} ... sigma_{b-1}^{+-1}, one crossing per generator.
std::vector<std::string> twisted_unknot_words(int max_crossings);
// Alternating braid closures with an odd number of strands.
std::vector<std::string> alternating_odd_words();


struct ConeInstance {
  f2::ChainComplexF2 a;
  f2::ChainComplexF2 b;
  f2::SparseMatrixF2 f;  // b.size() x a.size()
};

// Built from cancelling pairs and singletons, then conjugated by a random
// filtered change of basis, so the homology is known in advance but hidden.
f2::ChainComplexF2 random_filtered_complex(Rng& rng, int max_generators);
// A filtered chain map, read off a random complex with a subcomplex.
ConeInstance random_filtered_map(Rng& rng, int max_generators);

}  // namespace akh::gen
