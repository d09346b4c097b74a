#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "akh/complex.hpp"
#include "akh/diagram.hpp"

namespace akh {

enum class Mode { skein, khovanov };

struct Shift {
  int i = 0;
  int j = 0;
  int k = 0;
  bool operator==(const Shift&) const = default;
};

struct EnhancedState {
  Resolution resolution = 0;
  std::uint32_t minus = 0;  // bit c set: circle c of resolve(d, resolution) is labelled '-'
  int I = 0;
  int tau = 0;
  int Psi = 0;
  int J() const { return I + tau + Psi; }
};

struct SkeinOptions {
  bool reduced = false;
  bool meridians = false;
  bool mirror = false;
  bool shifted = true;
  Mode mode = Mode::skein;
  int cap = kDefaultCap;
};

class SkeinComplex {
public:
  const AnnularDiagram& diagram() const { return diagram_; }
  bool reduced() const { return reduced_; }
  Mode mode() const { return mode_; }
  bool shifted() const { return shifted_; }
  // The shift this diagram calls for, whether or not it has been applied.
  Shift final_shift() const { return shift_; }
  Shift applied_shift() const { return shifted_ ? shift_ : Shift{}; }

  const std::vector<EnhancedState>& states() const { return states_; }
  const CircleConfiguration& configuration(Resolution r) const { return configs_[r]; }
  std::size_t size() const { return states_.size(); }
  const f2::SparseMatrixF2& d0() const { return d0_; }
  const f2::SparseMatrixF2& d1() const { return d1_; }

  // (degree, q, f, g) = (i, j, k, 0), shifted when the shift has been applied.
  f2::Grading grading(std::size_t g) const;
  f2::ChainComplexF2 complex(Mode m) const;
  f2::ChainComplexF2 complex() const { return complex(mode_); }
  std::optional<std::size_t> find(Resolution r, std::uint32_t minus) const;

private:
  friend SkeinComplex assemble_differential(const AnnularDiagram&, std::vector<EnhancedState>, bool, Mode, int);
  friend SkeinComplex apply_final_shift(SkeinComplex);

  AnnularDiagram diagram_;
  bool reduced_ = false;
  Mode mode_ = Mode::skein;
  bool shifted_ = false;
  Shift shift_;
  std::vector<EnhancedState> states_;
  std::vector<CircleConfiguration> configs_;
  std::vector<std::size_t> offsets_;
  f2::SparseMatrixF2 d0_;
  f2::SparseMatrixF2 d1_;
};

std::vector<EnhancedState> enumerate_states(const AnnularDiagram& d, bool reduced, int cap = kDefaultCap);
SkeinComplex assemble_differential(const AnnularDiagram& d, std::vector<EnhancedState> states, bool reduced, Mode mode,
                                   int cap = kDefaultCap);
SkeinComplex apply_final_shift(SkeinComplex c);
SkeinComplex build(const AnnularDiagram& d, const SkeinOptions& options = {});
// The diagram `build` actually works on: mirror and meridians applied as requested.
AnnularDiagram prepared_diagram(const AnnularDiagram& d, const SkeinOptions& options);

// Ordinary Khovanov complex (shifted) built without any annular data; gradings (i, j, 0, 0).
f2::ChainComplexF2 plain_khovanov_complex(const AnnularDiagram& d, bool reduced, int cap = kDefaultCap);

}  // namespace akh
