#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "akh/error.hpp"

namespace akh {

// Bit i holds the smoothing chosen at crossing i.
using Resolution = std::uint32_t;

struct Endpoint {
  int crossing = -1;
  int slot = -1;
  bool valid() const { return crossing >= 0; }
  bool operator==(const Endpoint&) const = default;
};

struct Arc {
  int label = 0;
  Endpoint tail;
  Endpoint head;
  // Signed intersections with the reference ray, counted along the arc's orientation;
  // positive when the axis lies on the arc's left.
  int ray = 0;
  bool closed() const { return !tail.valid(); }
};

// Slots are counterclockwise from the incoming under-arc, so slot 2 is the outgoing
// under-arc. The 0-smoothing joins slots (0,1) and (2,3); the 1-smoothing (0,3) and (1,2).
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 0;
};

class AnnularDiagram {
public:
  AnnularDiagram() = default;
  // Arc endpoints must already be filled in; crossing signs are derived from them.
  AnnularDiagram(std::vector<std::array<int, 4>> crossing_arcs, std::vector<Arc> arcs, int marked, bool axis_left = true);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Crossing& crossing(int c) const { return crossings_[c]; }
  const Arc& arc(int a) const { return arcs_[a]; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  int marked() const { return marked_; }
  bool axis_left() const { return axis_left_; }
  int n_plus() const;
  int n_minus() const;
  int writhe() const { return n_plus() - n_minus(); }
  int ray_total() const;
  int component_count() const;

  // The ray meets the link an odd number of times.
  bool odd_linking() const { return ray_total() % 2 != 0; }
  // Validates a declared parity against the diagram.
  void set_odd_linking(bool flag);
  bool meridians() const { return meridians_; }
  void flag_meridians() { meridians_ = true; }

  // Whether the endpoint (c, s) is the head of the arc sitting in that slot.
  bool is_head(int c, int s) const { return arcs_[crossings_[c].arcs[s]].head == Endpoint{c, s}; }

  bool operator==(const AnnularDiagram&) const;

private:
  friend AnnularDiagram add_split_meridians(const AnnularDiagram&);
  friend AnnularDiagram mirror(const AnnularDiagram&);

  std::vector<Crossing> crossings_;
  std::vector<Arc> arcs_;
  int marked_ = 0;
  bool axis_left_ = true;
  bool meridians_ = false;
};

struct Circle {
  std::vector<int> arcs;  // sorted
  int winding = 0;
  bool marked = false;
  bool trivial() const { return winding == 0; }
};

struct CircleConfiguration {
  Resolution resolution = 0;
  int crossings = 0;
  // Marked circle first, then non-trivial, then trivial; ties broken by least arc.
  std::vector<Circle> circles;
  std::vector<int> circle_of_arc;
  int l = 0;  // non-trivial
  int m = 0;  // trivial
  int weight() const;
};

inline int smoothing_partner(int bit, int slot) { return bit == 0 ? (slot ^ 1) : 3 - slot; }

AnnularDiagram parse_braid_word(const std::string& text);
AnnularDiagram mirror(const AnnularDiagram& d);
AnnularDiagram add_split_meridians(const AnnularDiagram& d);

CircleConfiguration resolve(const AnnularDiagram& d, Resolution r);
// Calls `visit` for every resolution in increasing word order.
void all_resolutions(const AnnularDiagram& d, const std::function<void(const CircleConfiguration&)>& visit,
                     int cap = kDefaultCap);
void check_capacity(const AnnularDiagram& d, int cap);
// Throws InvariantError when some complete resolution has a circle of winding outside {-1,0,1}.
void validate_windings(const AnnularDiagram& d, int cap = kDefaultCap);

// Smooths the crossings with choice 0 or 1 and keeps those marked -1.
// Components are re-oriented along a traversal; rays and the marked arc are carried over.
AnnularDiagram smooth_crossings(const AnnularDiagram& d, const std::vector<int>& choice);

// `inner` keeps the axis side and the marked arc; `outer` is placed around it.
AnnularDiagram stack(const AnnularDiagram& inner, const AnnularDiagram& outer);

// Inserts a Reidemeister I kink on arc `a`. form 0..3 selects the lobe side and sign:
// 0 and 2 give a negative crossing, 1 and 3 a positive one.
AnnularDiagram add_kink(const AnnularDiagram& d, int a, int form);

bool is_connected(const AnnularDiagram& d);
bool is_alternating(const AnnularDiagram& d);

}  // namespace akh
