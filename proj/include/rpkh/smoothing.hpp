#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <vector>

#include "rpkh/cover.hpp"
#include "rpkh/diagram.hpp"

namespace rpkh {

// A face of RP2 minus the diagram: a deck orbit of double-cover faces.
struct FaceRef {
  int orbit = -1;
  bool operator==(const FaceRef& o) const { return orbit == o.orbit; }
};

// One circle of a smoothing. `arcs` lists the downstairs edge-arcs in
// traversal order; `sheet[i]` is the sheet on which the lift starting on
// sheet 0 traverses arcs[i] (only meaningful when crosscap_parity == 0,
// where the preimage is two disjoint circles).
struct Circle {
  std::vector<int> arcs;
  std::vector<uint8_t> sheet;
  int crosscap_parity = 0;

  int min_arc() const { return arcs.empty() ? -1 : *std::min_element(arcs.begin(), arcs.end()); }
};

struct Smoothing {
  State state;
  std::vector<Circle> circles;  // ordered by minimal arc id
  std::vector<int> circle_of;   // edge-arc id -> index into circles

  int k() const { return static_cast<int>(circles.size()); }
  // index of the unique crosscap-parity-1 circle, or -1
  int special_circle() const;
};

// Precomputed geometry of one diagram: incidence tables, the double cover,
// its face orbits and the dual paths used for encircling parities. All
// queries are const; instances are safe to share across threads.
class Geometry {
 public:
  explicit Geometry(const DiagramRP2& d);

  const DiagramRP2& diagram() const { return d_; }
  const DiagramIndex& index() const { return idx_; }
  const CoverMap& cover() const { return cover_; }
  int num_face_orbits() const { return static_cast<int>(cover_.orbits.size()); }

  Smoothing resolve(const State& s) const;

  // True iff P lies in the disk bounded by c: the two lifts of P are
  // separated on the sphere by the two lifts of c, which happens exactly
  // when the dual path between the lifts crosses one lift an odd number of
  // times. Throws if c is essential (no disk side exists).
  bool encircles(const Circle& c, FaceRef P) const;

  // Parity of the number of null homologous circles of sm encircling P.
  int encircling_number(const Smoothing& sm, FaceRef P) const;

  // Parity of lk(L, C_P) computed through the Seifert resolution.
  int region_parity(FaceRef P) const;

  // Lowest face orbit in R0.
  FaceRef canonical_base_face() const;

  // File override when present, else the canonical choice.
  FaceRef default_basepoint() const;
  int default_marked_arc() const;

  // Double cover of a smoothing, with its own face complex (used by the
  // flood-fill oracle and the Euler checks).
  CoverMap smoothing_cover(const State& s) const;

  State all_zero_state() const { return State{0, d_.n()}; }

 private:
  const std::vector<uint8_t>& path_parity(int orbit) const;

  DiagramRP2 d_;
  DiagramIndex idx_;
  CoverMap cover_;
  mutable std::vector<std::vector<uint8_t>> path_parity_;  // per orbit, lazily filled
};

// Flood-fill oracle for encircles: builds the smoothing cover and checks
// whether the lifts of P end up in distinct components of the sphere minus
// the two lifts of the circle. Kept independent of the path-parity route.
bool encircles_floodfill(const Geometry& g, const Smoothing& sm, int circle_index, FaceRef P);

}  // namespace rpkh
