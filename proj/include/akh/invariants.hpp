#pragma once

#include <optional>
#include <vector>

#include "akh/complex.hpp"
#include "akh/diagram.hpp"
#include "akh/polynomial.hpp"
#include "akh/report.hpp"
#include "akh/skein.hpp"

namespace akh {

struct TrigradedRanks {
  f2::RankTable ranks;  // (i, j, k)
  Shift shift;
  SkeinOptions options;
};

TrigradedRanks skein_homology(const AnnularDiagram& d, const SkeinOptions& options = {});

struct KhovanovResult {
  Bigraded ranks;  // homology of d0 + d1 with k forgotten
  Bigraded e2;     // page two of the k filtration
  f2::SpectralSequence sequence;
  bool collapse = false;  // E^2 = E^infinity
  bool consistent() const { return collapse && e2 == ranks; }
};

KhovanovResult khovanov_homology(const AnnularDiagram& d, const SkeinOptions& options = {});

// Chain-level Poincare polynomial sum over states of t^i q^j x^k, computed from
// circle counts alone. At t = -1 it equals the graded Euler characteristic.
Laurent euler_statesum(const AnnularDiagram& d, const SkeinOptions& options = {});
Laurent euler_from_homology(const f2::RankTable& ranks);

// Least k such that the class of `cycle` (homogeneous of degree i, quantum grading j
// in the Khovanov-mode complex `c`) comes from the subcomplex of filtration <= k.
int t_value(const SkeinComplex& c, int i, int j, const f2::Column& cycle);
// Same, for the unique class of a rank-one Khovanov group at (i, j).
int t_value(const AnnularDiagram& d, int i, int j, const SkeinOptions& options = {});

struct UnknotT {
  int plus = 0;   // T(u+), class at (0, 1)
  int minus = 0;  // T(u-), class at (0, -1)
};
// Requires the Khovanov homology of an unknot.
UnknotT unknot_t_values(const AnnularDiagram& d);

// Circles of the oriented resolution, when they are all non-trivial and wind the same way.
std::optional<int> braid_strands(const AnnularDiagram& d);

struct PlamenevskayaReport {
  AnnularDiagram diagram;  // with meridians
  int strands = 0;
  EnhancedState state;
  std::size_t index = 0;
  f2::Grading grading;
  std::vector<Check> checks;
};

PlamenevskayaReport plamenevskaya(const AnnularDiagram& d);

struct TwistProfile {
  int plus = 0;
  int minus = 0;
  int T() const { return minus - plus; }
};

// Crossings of a one-component diagram whose oriented smoothing splits it into
// two pieces that both wind around the axis. Nugatory kinks with a contractible
// lobe are not counted.
TwistProfile twist_profile(const AnnularDiagram& d);
// Every crossing has a smoothing that disconnects the diagram.
bool all_nugatory(const AnnularDiagram& d);

struct AlternatingReport {
  bool alternating = false;
  bool claim_applies = false;  // alternating with odd linking, or a twisted unknot
  int sigma = 0;
  int M = 0;
  long long determinant = 0;
  int target = 0;
  std::string form;  // "sigma" or "M"
  std::vector<f2::RankKey> offending;
  int reduced_rank = 0;
  std::vector<Check> checks;
};

AlternatingReport check_alternating_support(const AnnularDiagram& d);

struct SpanningLeaf {
  std::vector<int> choice;  // per crossing of the input: -1 kept, else the smoothing taken
  AnnularDiagram diagram;
  int writhe = 0;
  int r = 0;
  Resolution smoothing = 0;  // the complete one-circle smoothing of the input
  TwistProfile twists;
};

struct SpanningReport {
  std::vector<int> order;  // crossings resolved, in the order the recursion met them
  std::vector<SpanningLeaf> leaves;
  std::vector<Check> checks;
};

SpanningReport spanning_leaves(const AnnularDiagram& d, int cap = kDefaultCap);

struct SplitUnionReport {
  f2::RankTable union_ranks;
  f2::RankTable convolution;
  std::vector<Check> checks;
};

f2::RankTable convolve(const f2::RankTable& a, const f2::RankTable& b);
SplitUnionReport split_union_check(const AnnularDiagram& inner, const AnnularDiagram& outer);

}  // namespace akh
