#pragma once

#include <vector>

#include "rpkh/smoothing.hpp"

namespace rpkh {

// Reidemeister moves as local rewrites of the disk-model combinatorics.
// R1-R3 are the interior moves; R4 pushes an arc across the crosscap line
// (boundary_points changes by 4, one passage pair in and out); R5 slides a
// crossing across the line, re-gluing boundary incidences only.
//
// Appliers throw std::runtime_error("pattern mismatch...") when the site
// does not match. Site finders return only sites that will apply cleanly.

// ---- R1 ----
DiagramRP2 r1_insert(const DiagramRP2& d, int arc, OverPair over);
DiagramRP2 r1_delete(const DiagramRP2& d, int crossing);
std::vector<int> r1_delete_sites(const DiagramRP2& d);

// ---- R2 ----
// dart_a / dart_b: darts of the diagram double cover lying on a common
// sheet-0 face, on lifts of distinct arcs. first_over selects which strand
// goes on top.
struct R2Site {
  int dart_a = -1, dart_b = -1;
  bool first_over = true;
};
DiagramRP2 r2_insert(const DiagramRP2& d, const Geometry& g, const R2Site& site);
std::vector<R2Site> r2_sites(const Geometry& g);
DiagramRP2 r2_delete(const DiagramRP2& d, int c1, int c2);
std::vector<std::pair<int, int>> r2_delete_sites(const Geometry& g);

// ---- R3 ----
// site: minimal dart of a triangular sheet-0 face whose three corners are
// distinct crossings with height-consistent over data.
DiagramRP2 r3_slide(const DiagramRP2& d, const Geometry& g, int face_dart);
std::vector<int> r3_sites(const Geometry& g);

// ---- R4 ----
struct R4PushSite {
  int arc = -1, arc_end = 0;  // the arc being pushed, directed end->other
  int gap = -1;               // boundary gap (between positions gap, gap+1); -1 for k = 0
};
DiagramRP2 r4_push(const DiagramRP2& d, const Geometry& g, const R4PushSite& site);
std::vector<R4PushSite> r4_push_sites(const Geometry& g);
// cap_arc: the arc joining two adjacent boundary points on the far side
DiagramRP2 r4_pull(const DiagramRP2& d, const Geometry& g, int cap_arc);
std::vector<int> r4_pull_sites(const Geometry& g);

// ---- R5 ----
struct R5Site {
  int crossing = -1;
  int slot_u = -1, slot_w = -1;  // adjacent slots wired straight to the line
};
DiagramRP2 r5_slide(const DiagramRP2& d, const Geometry& g, const R5Site& site);
std::vector<R5Site> r5_sites(const Geometry& g);

}  // namespace rpkh
