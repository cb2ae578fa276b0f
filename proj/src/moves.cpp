#include "rpkh/moves.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rpkh {

namespace {

[[noreturn]] void mismatch(const char* what) {
  throw std::runtime_error(std::string("pattern mismatch at site: ") + what);
}

// strips stale per-diagram overrides after a rewrite
void reset_overrides(DiagramRP2& d) {
  d.orientation_seeds.clear();
  d.basepoint_face.reset();
  d.marked_arc.reset();
}

// Relative component orientations are part of the theory's input, so moves
// carry them across the rewrite. An arc that keeps one of its endpoints (up
// to index renumbering) anchors the traversal direction of its component.
void transport_orientation(const DiagramRP2& before, DiagramRP2& after,
                           const std::vector<int>& arc_map,
                           const std::vector<int>& crossing_map,
                           const std::function<int(int)>& boundary_map) {
  DiagramIndex idx_before(before);
  // per-arc traversal direction (entered-at end) in `before`
  std::vector<int> dir(before.num_arcs(), -1);
  std::vector<std::pair<int, int>> seeds = before.orientation_seeds;
  if (seeds.empty()) {
    std::vector<int> seen(idx_before.num_components, 0);
    for (int a = 0; a < before.num_arcs(); a++)
      if (!seen[idx_before.component_of[a]]) {
        seen[idx_before.component_of[a]] = 1;
        seeds.push_back({a, 0});
      }
  }
  const int k = before.k();
  for (auto [a0, d0] : seeds) {
    if (a0 >= before.num_arcs()) continue;  // free loop
    int arc = a0, from = d0;
    do {
      dir[arc] = from;
      const Endpoint& ep = before.arcs[arc].end[1 - from];
      std::pair<int, int> nxt;
      if (ep.is_slot())
        nxt = idx_before.slot_end(ep.crossing, (ep.slot + 2) % 4);
      else
        nxt = idx_before.boundary_end((ep.boundary + k) % (2 * k));
      arc = nxt.first;
      from = nxt.second;
    } while (arc != a0 || from != d0);
  }

  auto endpoint_preserved = [&](const Endpoint& olde, const Endpoint& newe) {
    if (olde.is_slot())
      return newe.is_slot() && crossing_map[olde.crossing] == newe.crossing &&
             olde.slot == newe.slot;
    return newe.is_boundary() && boundary_map(olde.boundary) == newe.boundary;
  };

  DiagramIndex idx_after(after);
  std::vector<std::pair<int, int>> out(idx_after.num_components, {-1, -1});
  for (int oa = 0; oa < before.num_arcs(); oa++) {
    int na = arc_map.empty() ? oa : arc_map[oa];
    if (na < 0 || dir[oa] < 0) continue;
    for (int e = 0; e < 2; e++) {
      if (!endpoint_preserved(before.arcs[oa].end[e], after.arcs[na].end[e])) continue;
      int comp = idx_after.component_of[na];
      if (out[comp].first < 0) out[comp] = {na, dir[oa]};
      break;
    }
  }
  for (int comp = 0; comp < idx_after.num_components; comp++) {
    if (out[comp].first >= 0) continue;
    // fall back to a default seed (new or fully rewired component)
    for (int a = 0; a < after.num_edges(); a++)
      if (idx_after.component_of[a] == comp) {
        out[comp] = {a, 0};
        break;
      }
  }
  after.orientation_seeds = out;
}

std::vector<int> identity_map(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

int boundary_identity(int b) { return b; }

// dart of the sheet-0 arc lift, as (arc, from_end)
std::pair<int, int> downstairs(const CoverMap& cm, int dart) {
  int e = dart >> 1;
  if (!cm.is_arc_edge(e) || cm.sheet_of_edge(e) != 0) mismatch("dart is not a sheet-0 arc lift");
  return {cm.arc_of_edge(e), dart & 1};
}

// walk of the traversal face containing dart (uses face_next; faces that the
// crosscap merge glued together are walked piecewise, which is what the
// local rewrites want)
std::vector<int> face_walk(const CoverMap& cm, int dart) {
  std::vector<int> walk;
  int d = dart;
  do {
    walk.push_back(d);
    d = cm.face_next(d);
  } while (d != dart);
  return walk;
}

// deletes crossings and arcs, renumbering endpoints; arc_map/crossing_map
// return the new index of every kept item
DiagramRP2 compact(const DiagramRP2& d, const std::set<int>& drop_crossings,
                   const std::set<int>& drop_arcs, std::vector<int>* arc_map_out = nullptr,
                   std::vector<int>* crossing_map_out = nullptr) {
  DiagramRP2 r;
  r.name = d.name;
  r.boundary_points = d.boundary_points;
  r.free_loops = d.free_loops;
  std::vector<int> cmap(d.n(), -1);
  int cn = 0;
  for (int c = 0; c < d.n(); c++) {
    if (drop_crossings.count(c)) continue;
    cmap[c] = cn++;
    r.crossings.push_back(d.crossings[c]);
  }
  std::vector<int> amap(d.num_arcs(), -1);
  for (int a = 0; a < d.num_arcs(); a++) {
    if (drop_arcs.count(a)) continue;
    Arc arc = d.arcs[a];
    for (int e = 0; e < 2; e++) {
      if (arc.end[e].is_slot()) {
        if (cmap[arc.end[e].crossing] < 0) mismatch("arc still references a removed crossing");
        arc.end[e].crossing = cmap[arc.end[e].crossing];
      }
    }
    amap[a] = static_cast<int>(r.arcs.size());
    r.arcs.push_back(arc);
  }
  if (d.crosscap_face_dart) {
    auto [a, e] = *d.crosscap_face_dart;
    if (amap[a] >= 0) r.crosscap_face_dart = {{amap[a], e}};
  }
  if (arc_map_out) *arc_map_out = amap;
  if (crossing_map_out) *crossing_map_out = cmap;
  return r;
}

}  // namespace

DiagramRP2 r1_insert(const DiagramRP2& d, int arc, OverPair over) {
  if (arc < 0 || arc >= d.num_arcs()) mismatch("no such arc");
  DiagramRP2 r = d;
  reset_overrides(r);
  int c = r.n();
  r.crossings.push_back({over, ""});
  Endpoint e1 = r.arcs[arc].end[0], e2 = r.arcs[arc].end[1];
  r.arcs[arc] = {{e1, slot_ep(c, 0)}};
  r.arcs.push_back({{slot_ep(c, 2), slot_ep(c, 1)}});
  r.arcs.push_back({{slot_ep(c, 3), e2}});
  transport_orientation(d, r, identity_map(d.num_arcs()), identity_map(d.n()), boundary_identity);
  return r;
}

std::vector<int> r1_delete_sites(const DiagramRP2& d) {
  std::vector<int> out;
  DiagramIndex idx(d);
  for (int c = 0; c < d.n(); c++) {
    for (int s = 0; s < 4; s++) {
      auto [a, e] = idx.slot_end(c, s);
      const Endpoint& other = d.arcs[a].end[1 - e];
      if (other.is_slot() && other.crossing == c && other.slot == (s + 1) % 4) {
        // loop between adjacent slots; outer arcs must be distinct
        auto [u, ue] = idx.slot_end(c, (s + 2) % 4);
        auto [w, we] = idx.slot_end(c, (s + 3) % 4);
        (void)ue;
        (void)we;
        if (u != w && u != a && w != a) out.push_back(c);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DiagramRP2 r1_delete(const DiagramRP2& d, int crossing) {
  if (crossing < 0 || crossing >= d.n()) mismatch("no such crossing");
  DiagramIndex idx(d);
  int loop_arc = -1, loop_slot = -1;
  for (int s = 0; s < 4 && loop_arc < 0; s++) {
    auto [a, e] = idx.slot_end(crossing, s);
    const Endpoint& other = d.arcs[a].end[1 - e];
    if (other.is_slot() && other.crossing == crossing && other.slot == (s + 1) % 4) {
      loop_arc = a;
      loop_slot = s;
    }
  }
  if (loop_arc < 0) mismatch("crossing carries no kink loop");
  auto [u, ue] = idx.slot_end(crossing, (loop_slot + 2) % 4);
  auto [w, we] = idx.slot_end(crossing, (loop_slot + 3) % 4);
  if (u == w || u == loop_arc || w == loop_arc) mismatch("kink deletion would orphan a circle");
  DiagramRP2 r = d;
  reset_overrides(r);
  // join the outer arcs: u's crossing end is replaced by w's far end
  r.arcs[u].end[ue] = d.arcs[w].end[1 - we];
  std::vector<int> amap, cmap;
  DiagramRP2 out = compact(r, {crossing}, {loop_arc, w}, &amap, &cmap);
  transport_orientation(d, out, amap, cmap, boundary_identity);
  return out;
}

std::vector<R2Site> r2_sites(const Geometry& g) {
  std::vector<R2Site> out;
  const CoverMap& cm = g.cover();
  std::set<int> seen;
  for (int dart = 0; dart < cm.num_darts(); dart++) {
    int e = dart >> 1;
    if (!cm.is_arc_edge(e) || cm.sheet_of_edge(e) != 0) continue;
    std::vector<int> walk = face_walk(cm, dart);
    int mind = *std::min_element(walk.begin(), walk.end());
    if (!seen.insert(mind).second) continue;
    for (size_t i = 0; i < walk.size(); i++) {
      for (size_t j = i + 1; j < walk.size(); j++) {
        int ea = walk[i] >> 1, eb = walk[j] >> 1;
        if (!cm.is_arc_edge(ea) || !cm.is_arc_edge(eb)) continue;
        if (cm.arc_of_edge(ea) == cm.arc_of_edge(eb)) continue;
        out.push_back({walk[i], walk[j], true});
        out.push_back({walk[i], walk[j], false});
      }
    }
  }
  return out;
}

DiagramRP2 r2_insert(const DiagramRP2& d, const Geometry& g, const R2Site& site) {
  const CoverMap& cm = g.cover();
  // the darts must share a face
  if (cm.face_of[site.dart_a] != cm.face_of[site.dart_b]) mismatch("darts not on a common face");
  auto [a, ea] = downstairs(cm, site.dart_a);
  auto [b, eb] = downstairs(cm, site.dart_b);
  if (a == b) mismatch("R2 needs two distinct arcs");

  DiagramRP2 r = d;
  reset_overrides(r);
  // c1 is the crossing of the outgoing finger branch, c2 of the returning
  // one. Along b, the returning branch is met first from B1: the finger's
  // return point sits between its base and A2, which mirrors the order of
  // the two crossings on the other strand.
  int c1 = r.n(), c2 = r.n() + 1;
  OverPair op = site.first_over ? OverPair::O02 : OverPair::O13;
  r.crossings.push_back({op, ""});
  r.crossings.push_back({op, ""});
  Endpoint A1 = d.arcs[a].end[ea], A2 = d.arcs[a].end[1 - ea];
  Endpoint B1 = d.arcs[b].end[eb], B2 = d.arcs[b].end[1 - eb];
  r.arcs[a] = {{A1, slot_ep(c1, 0)}};
  r.arcs[b] = {{B1, slot_ep(c2, 1)}};
  r.arcs.push_back({{slot_ep(c1, 2), slot_ep(c2, 2)}});  // finger tip
  r.arcs.push_back({{slot_ep(c2, 3), slot_ep(c1, 1)}});  // b between the crossings
  r.arcs.push_back({{slot_ep(c2, 0), A2}});
  r.arcs.push_back({{slot_ep(c1, 3), B2}});
  transport_orientation(d, r, identity_map(d.num_arcs()), identity_map(d.n()), boundary_identity);
  return r;
}

std::vector<std::pair<int, int>> r2_delete_sites(const Geometry& g) {
  std::vector<std::pair<int, int>> out;
  const CoverMap& cm = g.cover();
  const DiagramRP2& d = g.diagram();
  DiagramIndex idx(d);
  std::set<int> seen;
  for (int dart = 0; dart < cm.num_darts(); dart++) {
    int e = dart >> 1;
    if (!cm.is_arc_edge(e) || cm.sheet_of_edge(e) != 0) continue;
    std::vector<int> walk = face_walk(cm, dart);
    if (walk.size() != 2) continue;
    int mind = std::min(walk[0], walk[1]);
    if (!seen.insert(mind).second) continue;
    int e0 = walk[0] >> 1, e1 = walk[1] >> 1;
    if (!cm.is_arc_edge(e0) || !cm.is_arc_edge(e1)) continue;
    int p = cm.arc_of_edge(e0), q = cm.arc_of_edge(e1);
    if (p == q) continue;
    const Arc &ap = d.arcs[p], &aq = d.arcs[q];
    if (!ap.end[0].is_slot() || !ap.end[1].is_slot() || !aq.end[0].is_slot() ||
        !aq.end[1].is_slot())
      continue;
    // both bigon sides run between the same two distinct crossings
    int c1 = ap.end[0].crossing, c2 = ap.end[1].crossing;
    if (c1 == c2) continue;
    if (!((aq.end[0].crossing == c1 && aq.end[1].crossing == c2) ||
          (aq.end[0].crossing == c2 && aq.end[1].crossing == c1)))
      continue;
    // over coherence: the strand of p is over at both crossings or under at both
    int s1 = ap.end[0].slot, t1 = ap.end[1].slot;
    bool over1 = (d.crossings[c1].over_pair == OverPair::O02) == (s1 % 2 == 0);
    bool over2 = (d.crossings[c2].over_pair == OverPair::O02) == (t1 % 2 == 0);
    if (over1 != over2) continue;
    // outer arcs must be four distinct arcs, distinct from the bigon sides
    auto outer = [&](int c, int s) { return idx.slot_end(c, (s + 2) % 4).first; };
    int s2 = aq.end[aq.end[0].crossing == c1 ? 0 : 1].slot;
    int t2 = aq.end[aq.end[0].crossing == c1 ? 1 : 0].slot;
    std::set<int> six = {p, q, outer(c1, s1), outer(c1, s2), outer(c2, t1), outer(c2, t2)};
    if (six.size() != 6) continue;
    out.push_back({std::min(c1, c2), std::max(c1, c2)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DiagramRP2 r2_delete(const DiagramRP2& d, int c1, int c2) {
  if (c1 == c2 || c1 < 0 || c2 < 0 || c1 >= d.n() || c2 >= d.n()) mismatch("bad crossing pair");
  DiagramIndex idx(d);
  // locate the two bigon sides: arcs with one end on each crossing, bounding
  // a common face; accept any pair of parallel arcs with coherent over data
  std::vector<int> sides;
  for (int a = 0; a < d.num_arcs(); a++) {
    const Arc& arc = d.arcs[a];
    if (!arc.end[0].is_slot() || !arc.end[1].is_slot()) continue;
    int x = arc.end[0].crossing, y = arc.end[1].crossing;
    if ((x == c1 && y == c2) || (x == c2 && y == c1)) sides.push_back(a);
  }
  if (sides.size() < 2) mismatch("crossings are not joined by a bigon");
  // pick the pair whose slots are adjacent at both crossings
  int p = -1, q = -1;
  for (size_t i = 0; i < sides.size() && p < 0; i++) {
    for (size_t j = i + 1; j < sides.size() && p < 0; j++) {
      auto slot_at = [&](int arc, int c) {
        const Arc& ar = d.arcs[arc];
        return ar.end[0].crossing == c ? ar.end[0].slot : ar.end[1].slot;
      };
      int si = slot_at(sides[i], c1), sj = slot_at(sides[j], c1);
      int ti = slot_at(sides[i], c2), tj = slot_at(sides[j], c2);
      if ((si + 1) % 4 != sj && (sj + 1) % 4 != si) continue;
      if ((ti + 1) % 4 != tj && (tj + 1) % 4 != ti) continue;
      p = sides[i];
      q = sides[j];
    }
  }
  if (p < 0) mismatch("no parallel bigon sides");
  auto slot_at = [&](int arc, int c) {
    const Arc& ar = d.arcs[arc];
    return ar.end[0].crossing == c ? ar.end[0].slot : ar.end[1].slot;
  };
  int s1 = slot_at(p, c1), t1 = slot_at(p, c2);
  int s2 = slot_at(q, c1), t2 = slot_at(q, c2);
  bool over1 = (d.crossings[c1].over_pair == OverPair::O02) == (s1 % 2 == 0);
  bool over2 = (d.crossings[c2].over_pair == OverPair::O02) == (t1 % 2 == 0);
  if (over1 != over2) mismatch("bigon is a clasp, not an R2 pair");

  auto [u1, u1e] = idx.slot_end(c1, (s1 + 2) % 4);
  auto [u2, u2e] = idx.slot_end(c1, (s2 + 2) % 4);
  auto [w1, w1e] = idx.slot_end(c2, (t1 + 2) % 4);
  auto [w2, w2e] = idx.slot_end(c2, (t2 + 2) % 4);
  std::set<int> six = {p, q, u1, u2, w1, w2};
  if (six.size() != 6) mismatch("R2 deletion would orphan a circle");

  DiagramRP2 r = d;
  reset_overrides(r);
  r.arcs[u1].end[u1e] = d.arcs[w1].end[1 - w1e];
  r.arcs[u2].end[u2e] = d.arcs[w2].end[1 - w2e];
  std::vector<int> amap, cmap;
  DiagramRP2 out = compact(r, {c1, c2}, {p, q, w1, w2}, &amap, &cmap);
  transport_orientation(d, out, amap, cmap, boundary_identity);
  return out;
}

std::vector<int> r3_sites(const Geometry& g) {
  std::vector<int> out;
  const CoverMap& cm = g.cover();
  const DiagramRP2& d = g.diagram();
  std::set<int> seen;
  for (int dart = 0; dart < cm.num_darts(); dart++) {
    int e = dart >> 1;
    if (!cm.is_arc_edge(e) || cm.sheet_of_edge(e) != 0) continue;
    std::vector<int> walk = face_walk(cm, dart);
    if (walk.size() != 3) continue;
    int mind = *std::min_element(walk.begin(), walk.end());
    if (!seen.insert(mind).second) continue;
    walk = face_walk(cm, mind);
    bool good = true;
    std::vector<std::pair<int, int>> ends;  // crossing, entering slot per side
    for (int dd : walk) {
      int ee = dd >> 1;
      if (!cm.is_arc_edge(ee) || cm.sheet_of_edge(ee) != 0) {
        good = false;
        break;
      }
      auto [a, from] = downstairs(cm, dd);
      const Endpoint& head = d.arcs[a].end[1 - from];
      const Endpoint& tail = d.arcs[a].end[from];
      if (!head.is_slot() || !tail.is_slot()) {
        good = false;
        break;
      }
      ends.push_back({head.crossing, head.slot});
    }
    if (!good) continue;
    std::set<int> crossings;
    for (auto& [c, s] : ends) crossings.insert(c);
    if (crossings.size() != 3) continue;
    // height consistency: the three strands' over relations admit a total order
    int adj[3][3] = {};
    for (int i = 0; i < 3; i++) {
      int c = ends[i].first;
      int s_in = ends[i].second;
      // the side leaving this crossing is the next dart in the walk
      int j = (i + 1) % 3;
      auto [a2, from2] = downstairs(cm, walk[j]);
      const Endpoint& tail2 = d.arcs[a2].end[from2];
      if (!tail2.is_slot() || tail2.crossing != c) {
        good = false;
        break;
      }
      int s_out = tail2.slot;
      if (s_in % 2 == s_out % 2) {
        good = false;  // both sides on the same strand: not a genuine triangle
        break;
      }
      bool in_over = (d.crossings[c].over_pair == OverPair::O02) == (s_in % 2 == 0);
      // strand of side i is over strand of side j at this crossing
      if (in_over)
        adj[i][j] = 1;
      else
        adj[j][i] = 1;
    }
    if (!good) continue;
    // acyclic iff some side dominates, some side is dominated (3 nodes)
    bool cyclic = (adj[0][1] && adj[1][2] && adj[2][0]) || (adj[1][0] && adj[2][1] && adj[0][2]);
    if (cyclic) continue;
    out.push_back(mind);
  }
  return out;
}

DiagramRP2 r3_slide(const DiagramRP2& d, const Geometry& g, int face_dart) {
  const CoverMap& cm = g.cover();
  std::vector<int> walk = face_walk(cm, face_dart);
  if (walk.size() != 3) mismatch("face is not a triangle");
  DiagramRP2 r = d;
  reset_overrides(r);
  // swap each triangle corner with its opposite slot
  DiagramIndex idx(d);
  std::set<std::pair<int, int>> corner_slots;  // (crossing, slot) on the triangle
  for (int dd : walk) {
    auto [a, from] = downstairs(cm, dd);
    for (int e = 0; e < 2; e++) {
      const Endpoint& ep = d.arcs[a].end[e];
      if (!ep.is_slot()) mismatch("triangle side touches the boundary");
      corner_slots.insert({ep.crossing, ep.slot});
    }
  }
  if (corner_slots.size() != 6) mismatch("degenerate triangle");
  // reattach: ends on a triangle slot move to slot+2, and vice versa
  for (auto& arc : r.arcs) {
    for (int e = 0; e < 2; e++) {
      Endpoint& ep = arc.end[e];
      if (!ep.is_slot()) continue;
      bool on_triangle = corner_slots.count({ep.crossing, ep.slot}) > 0;
      bool opp_on_triangle = corner_slots.count({ep.crossing, (ep.slot + 2) % 4}) > 0;
      if (on_triangle || opp_on_triangle) ep.slot = (ep.slot + 2) % 4;
    }
  }
  transport_orientation(d, r, identity_map(d.num_arcs()), identity_map(d.n()), boundary_identity);
  return r;
}

std::vector<R4PushSite> r4_push_sites(const Geometry& g) {
  std::vector<R4PushSite> out;
  const CoverMap& cm = g.cover();
  const DiagramRP2& d = g.diagram();
  std::set<std::tuple<int, int, int>> seen;
  for (int dart = 0; dart < cm.num_darts(); dart++) {
    int e = dart >> 1;
    if (!cm.is_arc_edge(e) || cm.sheet_of_edge(e) != 0) continue;
    if (d.k() == 0) {
      // the synthetic bigon is merged into the crosscap face
      int eqf = cm.face_of[2 * (2 * cm.Ae)];
      if (cm.face_of[dart] != eqf && cm.face_of[dart] != cm.deck_face[eqf]) continue;
      auto [a, from] = downstairs(cm, dart);
      if (!seen.insert({a, from, -1}).second) continue;
      out.push_back({a, from, -1});
      continue;
    }
    std::vector<int> walk = face_walk(cm, dart);
    for (int dd : walk) {
      int ee = dd >> 1;
      if (cm.is_arc_edge(ee)) continue;
      int t = ee - 2 * cm.Ae;
      auto [a, from] = downstairs(cm, dart);
      if (!seen.insert({a, from, t}).second) continue;
      out.push_back({a, from, t});
    }
  }
  return out;
}

DiagramRP2 r4_push(const DiagramRP2& d, const Geometry& g, const R4PushSite& site) {
  const CoverMap& cm = g.cover();
  if (site.arc < 0 || site.arc >= d.num_arcs()) mismatch("no such arc");
  int arc_dart = 2 * (2 * site.arc + 0) + site.arc_end;
  int twok = d.boundary_points;
  int gap = site.gap;
  if (twok == 0) {
    // arc must border the crosscap face
    int f = cm.face_of[arc_dart];
    int eqf = cm.face_of[2 * (2 * cm.Ae + 0)];
    int eqb = cm.face_of[2 * (2 * cm.Ae + 0) + 1];
    if (f != eqf && f != eqb) {
      // the other direction of the arc may border it
      arc_dart ^= 1;
      f = cm.face_of[arc_dart];
      if (f != eqf && f != eqb) mismatch("arc does not border the crosscap face");
    }
  } else {
    if (gap < 0 || gap >= twok) mismatch("bad boundary gap");
    int eq_edge = 2 * cm.Ae + gap;
    if (cm.face_of[arc_dart] != cm.face_of[2 * eq_edge] &&
        cm.face_of[arc_dart] != cm.face_of[2 * eq_edge + 1])
      mismatch("arc and gap do not border a common face");
  }

  int k = d.k();
  int t = twok == 0 ? 0 : gap;
  int t2 = twok == 0 ? 0 : (t + k) % twok;
  // new boundary positions: two fresh points after t and two after t2
  auto remap = [&](int x) {
    if (twok == 0) return x;  // unused
    int nx = x;
    if (x > t) nx += 2;
    if (x > t2) nx += 2;
    return nx;
  };
  int x1, x2, xbar1, xbar2;
  if (twok == 0) {
    x1 = 0;
    x2 = 1;
    xbar1 = 2;
    xbar2 = 3;
  } else {
    // new points land right after t and right after t2 in the widened circle
    x1 = remap(t) + 1;
    x2 = x1 + 1;
    xbar1 = remap(t2) + 1;
    xbar2 = xbar1 + 1;
    int K = k + 2, TWOK = twok + 4;
    if ((x1 + K) % TWOK != xbar1 % TWOK || (x2 + K) % TWOK != xbar2 % TWOK)
      throw std::runtime_error("boundary reindexing is inconsistent");
  }

  DiagramRP2 r = d;
  reset_overrides(r);
  r.crosscap_face_dart.reset();  // no longer affine
  r.boundary_points = twok + 4;
  for (auto& arc : r.arcs)
    for (int e = 0; e < 2; e++)
      if (arc.end[e].is_boundary()) arc.end[e].boundary = remap(arc.end[e].boundary);
  Endpoint A1 = r.arcs[site.arc].end[site.arc_end];
  Endpoint A2 = r.arcs[site.arc].end[1 - site.arc_end];
  // walking from A1, the bulge pierces the line at the ccw-later new point
  // first; the returning branch uses the ccw-earlier one
  r.arcs[site.arc] = {{A1, boundary_ep(x2)}};
  r.arcs.push_back({{boundary_ep(xbar1), boundary_ep(xbar2)}});
  r.arcs.push_back({{boundary_ep(x1), A2}});
  if (twok == 0)
    transport_orientation(d, r, identity_map(d.num_arcs()), identity_map(d.n()),
                          boundary_identity);
  else
    transport_orientation(d, r, identity_map(d.num_arcs()), identity_map(d.n()), remap);
  return r;
}

std::vector<int> r4_pull_sites(const Geometry& g) {
  std::vector<int> out;
  const CoverMap& cm = g.cover();
  const DiagramRP2& d = g.diagram();
  int twok = d.boundary_points;
  if (twok < 4) return out;
  DiagramIndex idx(d);
  for (int a = 0; a < d.num_arcs(); a++) {
    const Arc& arc = d.arcs[a];
    if (!arc.end[0].is_boundary() || !arc.end[1].is_boundary()) continue;
    int y0 = arc.end[0].boundary, y1 = arc.end[1].boundary;
    if ((y0 + 1) % twok != y1 && (y1 + 1) % twok != y0) continue;
    int lo = ((y0 + 1) % twok == y1) ? y0 : y1;
    if ((lo + 1) % twok == 0) continue;  // seam-wrapping caps stay put
    // empty bigon between the cap and its boundary gap, in either sheet
    std::vector<int> walk0 = face_walk(cm, 2 * (2 * a + 0));
    std::vector<int> walk1 = face_walk(cm, 2 * (2 * a + 0) + 1);
    if (walk0.size() != 2 && walk1.size() != 2) continue;
    // the partner ends must join two distinct arcs
    int k = d.k();
    int p0 = (lo + k) % twok, p1 = (lo + 1 + k) % twok;
    auto [u, ue] = idx.boundary_end(p0);
    auto [w, we] = idx.boundary_end(p1);
    (void)ue;
    (void)we;
    if (u == w || u == a || w == a) continue;
    out.push_back(a);
  }
  return out;
}

DiagramRP2 r4_pull(const DiagramRP2& d, const Geometry& g, int cap_arc) {
  (void)g;
  int twok = d.boundary_points;
  if (cap_arc < 0 || cap_arc >= d.num_arcs()) mismatch("no such arc");
  const Arc& cap = d.arcs[cap_arc];
  if (!cap.end[0].is_boundary() || !cap.end[1].is_boundary()) mismatch("arc is not a boundary cap");
  int y0 = cap.end[0].boundary, y1 = cap.end[1].boundary;
  int lo;
  if ((y0 + 1) % twok == y1)
    lo = y0;
  else if ((y1 + 1) % twok == y0)
    lo = y1;
  else
    mismatch("cap does not join adjacent boundary points");
  if ((lo + 1) % twok == 0) mismatch("cap wraps the seam");  // keep the reindexing simple
  int k = d.k();
  DiagramIndex idx(d);
  int p0 = (lo + k) % twok, p1 = (lo + 1 + k) % twok;
  auto [u, ue] = idx.boundary_end(p0);
  auto [w, we] = idx.boundary_end(p1);
  if (u == w || u == cap_arc || w == cap_arc) mismatch("pull would orphan a circle");

  DiagramRP2 r = d;
  reset_overrides(r);
  // join u and w through the old passage
  r.arcs[u].end[ue] = d.arcs[w].end[1 - we];
  std::vector<int> amap, cmap;
  DiagramRP2 out = compact(r, {}, {cap_arc, w}, &amap, &cmap);
  out.boundary_points = twok - 4;
  // drop the four removed positions lo, lo+1, p0, p1
  auto remap = [&](int x) {
    int nx = x;
    for (int gone : {lo, lo + 1, p0, p1})
      if (x > gone) nx--;
    return nx;
  };
  for (auto& arc : out.arcs)
    for (int e = 0; e < 2; e++)
      if (arc.end[e].is_boundary()) arc.end[e].boundary = remap(arc.end[e].boundary);
  transport_orientation(d, out, amap, cmap, remap);
  return out;
}

std::vector<R5Site> r5_sites(const Geometry& g) {
  std::vector<R5Site> out;
  const CoverMap& cm = g.cover();
  const DiagramRP2& d = g.diagram();
  if (d.k() == 0) return out;
  DiagramIndex idx(d);
  std::set<int> seen;
  for (int dart = 0; dart < cm.num_darts(); dart++) {
    int e = dart >> 1;
    if (!cm.is_arc_edge(e) || cm.sheet_of_edge(e) != 0) continue;
    std::vector<int> walk = face_walk(cm, dart);
    if (walk.size() != 3) continue;
    int mind = *std::min_element(walk.begin(), walk.end());
    if (!seen.insert(mind).second) continue;
    // pattern: [arc u, arc w, one equator segment]
    int eq = -1;
    std::vector<int> arcs;
    for (int dd : walk) {
      int ee = dd >> 1;
      if (cm.is_arc_edge(ee))
        arcs.push_back(cm.arc_of_edge(ee));
      else
        eq = ee;
    }
    if (eq < 0 || arcs.size() != 2 || arcs[0] == arcs[1]) continue;
    // both arcs run from the same crossing to the gap's two boundary points
    auto arc_ok = [&](int a, int& crossing, int& slot, int& bpoint) {
      const Arc& ar = d.arcs[a];
      int se = ar.end[0].is_slot() ? 0 : 1;
      if (!ar.end[se].is_slot() || !ar.end[1 - se].is_boundary()) return false;
      crossing = ar.end[se].crossing;
      slot = ar.end[se].slot;
      bpoint = ar.end[1 - se].boundary;
      return true;
    };
    int c0, s0, b0, c1o, s1, b1;
    if (!arc_ok(arcs[0], c0, s0, b0) || !arc_ok(arcs[1], c1o, s1, b1)) continue;
    if (c0 != c1o) continue;
    // orient the pattern: slot_u = slot_w + 1 and u's boundary point follows
    // w's counterclockwise
    int twok = d.boundary_points;
    int su = -1, sw = -1;
    if ((s1 + 1) % 4 == s0 && (b1 + 1) % twok == b0) {
      su = s0;
      sw = s1;
    } else if ((s0 + 1) % 4 == s1 && (b0 + 1) % twok == b1) {
      su = s1;
      sw = s0;
    } else {
      continue;
    }
    // far continuations and away arcs must all be distinct
    int k = d.k();
    int bu = su == s0 ? b0 : b1, bw = su == s0 ? b1 : b0;
    int B1 = idx.boundary_end((bu + k) % twok).first;
    int B2 = idx.boundary_end((bw + k) % twok).first;
    int C1 = idx.slot_end(c0, (su + 2) % 4).first;
    int C2 = idx.slot_end(c0, (sw + 2) % 4).first;
    std::set<int> six = {arcs[0], arcs[1], B1, B2, C1, C2};
    if (six.size() != 6) continue;
    out.push_back({c0, su, sw});
  }
  return out;
}

DiagramRP2 r5_slide(const DiagramRP2& d, const Geometry& g, const R5Site& site) {
  (void)g;
  DiagramIndex idx(d);
  int c = site.crossing, su = site.slot_u, sw = site.slot_w;
  if (c < 0 || c >= d.n()) mismatch("no such crossing");
  if ((sw + 1) % 4 != su) mismatch("site slots are not oriented");
  auto [u, ue] = idx.slot_end(c, su);
  auto [w, we] = idx.slot_end(c, sw);
  const Endpoint& ub = d.arcs[u].end[1 - ue];
  const Endpoint& wb = d.arcs[w].end[1 - we];
  if (!ub.is_boundary() || !wb.is_boundary()) mismatch("slots are not wired to the boundary");
  int twok = d.boundary_points, k = d.k();
  int x = ub.boundary, y = wb.boundary;
  if ((y + 1) % twok != x) mismatch("boundary points not oriented with the slots");
  int xb = (x + k) % twok, yb = (y + k) % twok;
  auto [B1, b1e] = idx.boundary_end(xb);
  auto [B2, b2e] = idx.boundary_end(yb);
  auto [C1, c1e] = idx.slot_end(c, (su + 2) % 4);
  auto [C2, c2e] = idx.slot_end(c, (sw + 2) % 4);
  std::set<int> six = {u, w, B1, B2, C1, C2};
  if (six.size() != 6) mismatch("crossing slide needs six distinct arcs");

  Endpoint X = d.arcs[B1].end[1 - b1e];
  Endpoint Y = d.arcs[B2].end[1 - b2e];
  Endpoint Z = d.arcs[C1].end[1 - c1e];
  Endpoint W = d.arcs[C2].end[1 - c2e];
  DiagramRP2 r = d;
  reset_overrides(r);
  // Crosscap transport mirrors the crossing neighborhood and, because RP3
  // is the twisted I-bundle over RP2, also swaps over and under. The two
  // effects cancel in the smoothing bookkeeping: states, signs, and the
  // whole chain complex are carried over verbatim.
  r.crossings[c].over_pair = toggled(d.crossings[c].over_pair);
  r.arcs[u] = {{X, slot_ep(c, su)}};
  r.arcs[w] = {{Y, slot_ep(c, (su + 1) % 4)}};
  r.arcs[B1] = {{slot_ep(c, sw), boundary_ep(xb)}};
  r.arcs[B2] = {{slot_ep(c, (su + 2) % 4), boundary_ep(yb)}};
  r.arcs[C1] = {{boundary_ep(y), Z}};
  r.arcs[C2] = {{boundary_ep(x), W}};
  transport_orientation(d, r, identity_map(d.num_arcs()), identity_map(d.n()), boundary_identity);
  return r;
}

}  // namespace rpkh
