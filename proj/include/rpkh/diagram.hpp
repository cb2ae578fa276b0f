#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rpkh {

// An arc end: either a crossing slot or a boundary point of the disk model.
// Slots are numbered 0..3 counterclockwise around the crossing; boundary
// points 0..2k-1 counterclockwise around the disk, with point j glued to
// point j+k (RP2 as a disk with antipodal boundary identification).
struct Endpoint {
  int crossing = -1;  // >= 0 for a slot endpoint
  int slot = -1;      // 0..3 when crossing >= 0
  int boundary = -1;  // >= 0 for a boundary endpoint

  bool is_slot() const { return crossing >= 0; }
  bool is_boundary() const { return boundary >= 0; }
  bool operator==(const Endpoint& o) const {
    return crossing == o.crossing && slot == o.slot && boundary == o.boundary;
  }
};

inline Endpoint slot_ep(int c, int s) { return Endpoint{c, s, -1}; }
inline Endpoint boundary_ep(int b) { return Endpoint{-1, -1, b}; }

// Which opposite slot pair carries the over strand.
enum class OverPair : uint8_t { O02, O13, Invalid };

OverPair over_pair_from_string(const std::string& s);
std::string over_pair_to_string(OverPair op);
inline OverPair toggled(OverPair op) {
  return op == OverPair::O02 ? OverPair::O13 : (op == OverPair::O13 ? OverPair::O02 : op);
}

struct Crossing {
  OverPair over_pair = OverPair::O13;
  std::string raw;  // original file text, kept for diagnostics
};

struct Arc {
  Endpoint end[2];
};

// A link diagram on RP2 in the disk model. Arcs live in the open disk; an
// arc end on boundary point j continues from point j+k on the far side.
//
// Crossingless closed circles ("free loops") are supported only for the
// degenerate n = 0, k = 0 diagrams (disjoint unions of circles drawn side by
// side in the disk); everything else must be connected through its arcs.
struct DiagramRP2 {
  std::string name;
  int boundary_points = 0;  // 2k
  std::vector<Crossing> crossings;
  std::vector<Arc> arcs;
  int free_loops = 0;

  // One (arc, direction) seed per link component; direction 0 walks the arc
  // end[0] -> end[1]. Filled with defaults when absent from the file.
  std::vector<std::pair<int, int>> orientation_seeds;

  std::optional<int> basepoint_face;                      // override for P
  std::optional<int> marked_arc;                          // override for M
  std::optional<std::pair<int, int>> crosscap_face_dart;  // k = 0 only: (arc, end)

  int n() const { return static_cast<int>(crossings.size()); }
  int k() const { return boundary_points / 2; }
  int num_arcs() const { return static_cast<int>(arcs.size()); }
  // Arc-like edge count including free loops (free loop i is edge num_arcs()+i).
  int num_edges() const { return num_arcs() + free_loops; }
};

// Endpoint incidence tables plus link components of a structurally sound
// diagram. Construction throws on malformed incidence.
struct DiagramIndex {
  // (arc, end) occupying each crossing slot / boundary point
  std::vector<std::pair<int, int>> at_slot;      // 4n entries
  std::vector<std::pair<int, int>> at_boundary;  // 2k entries

  // Link components: strands run straight through crossings (slot s to s+2)
  // and through the antipodal boundary identification. Free loops are their
  // own components. component_of covers arc ids then free-loop edge ids.
  std::vector<int> component_of;
  int num_components = 0;
  std::vector<int> component_passages;  // boundary passages per component

  DiagramIndex() = default;
  explicit DiagramIndex(const DiagramRP2& d);

  std::pair<int, int> slot_end(int c, int s) const { return at_slot[4 * c + s]; }
  std::pair<int, int> boundary_end(int b) const { return at_boundary[b]; }
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<int> component_class;  // Z/2 class per link component
  int total_class = 0;               // k mod 2
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const DiagramRP2& d);

// A state of the cube of resolutions, one bit per crossing.
struct State {
  uint32_t bits = 0;
  int size = 0;

  int bit(int i) const { return (bits >> i) & 1; }
  State with_bit(int i) const { return State{bits | (uint32_t(1) << i), size}; }
  int weight() const { return __builtin_popcount(bits); }
  bool operator==(const State& o) const { return bits == o.bits && size == o.size; }
  std::string str() const;
};

// Slot pairing of one smoothed crossing; pairs are {a joins b, c joins d}.
struct SlotPairing {
  int partner[4];
};

// 0/1-smoothing rule. For over_pair {1,3} the 0-smoothing joins 0-1 / 2-3
// and the 1-smoothing joins 0-3 / 1-2; toggling the over pair swaps the two.
SlotPairing smoothing_pairing(OverPair op, int bit);

// Per-crossing orientation data: in/out status of each slot once every
// component is oriented.
struct OrientationData {
  std::vector<uint8_t> slot_in;  // 4n entries, 1 when the strand flows into the crossing
};

OrientationData orient(const DiagramRP2& d, const DiagramIndex& idx);

std::pair<int, int> crossing_signs(const DiagramRP2& d);
int crossing_sign(const DiagramRP2& d, const OrientationData& o, int c);

// Per-crossing bit selecting the orientation-preserving smoothing.
State seifert_state(const DiagramRP2& d);

DiagramRP2 mirror(const DiagramRP2& d);

}  // namespace rpkh
