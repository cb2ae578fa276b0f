#pragma once

#include <vector>

#include "rpkh/diagram.hpp"

namespace rpkh {

// Rotation map of the orientation double cover on S2.
//
// RP2 is the disk with antipodal boundary identification; its double cover
// is built from two copies of the disk glued along the equator, with the
// second copy carrying the reversed rotation system. Every diagram query
// that involves sides of circles happens here, where the surface is a
// sphere and rotation systems determine faces.
//
// Edge layout:
//   e in [0, 2*Ae): lift of downstairs edge-arc (e >> 1) on sheet (e & 1);
//     edge-arcs are the diagram arcs followed by the free loops.
//   e in [2*Ae, 2*Ae + n_eq): equator segments (for k = 0 a synthetic bigon
//     placed inside the crosscap face).
// Darts are 2e (at the lift of end[0]) and 2e+1; rev(d) = d ^ 1.
struct CoverMap {
  int Ae = 0;
  int n_eq = 0;
  int nverts = 0, nedges = 0;

  std::vector<int> at;   // dart -> vertex
  std::vector<int> nxt;  // counterclockwise rotation successor
  std::vector<int> prv;

  std::vector<int> face_of;  // dart -> face id (after crosscap merging)
  int n_faces = 0;
  std::vector<int> face_min_dart;
  std::vector<int> deck_face;

  // Face orbits under the deck involution, the diagram-level faces of RP2.
  // Sorted by minimal incident dart, which fixes FaceRef numbering.
  std::vector<std::pair<int, int>> orbits;
  std::vector<int> orbit_of_face;

  int num_darts() const { return 2 * nedges; }
  bool is_arc_edge(int e) const { return e < 2 * Ae; }
  int arc_of_edge(int e) const { return e >> 1; }
  int sheet_of_edge(int e) const { return e & 1; }
  int arc_lift_edge(int arc, int sheet) const { return 2 * arc + sheet; }

  int deck_dart(int d) const;
  int face_next(int d) const { return prv[d ^ 1]; }

  // Euler characteristic check, per connected component of the cover graph.
  bool euler_ok() const;

  // Faces adjacent across edge e.
  std::pair<int, int> edge_faces(int e) const { return {face_of[2 * e], face_of[2 * e + 1]}; }
};

// Builds the double cover of the diagram (state == nullptr) or of the
// smoothing given by state (crossings replaced by joint vertices).
CoverMap build_cover(const DiagramRP2& d, const DiagramIndex& idx, const State* state);

}  // namespace rpkh
