#include "rpkh/smoothing.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace rpkh {

int Smoothing::special_circle() const {
  for (int i = 0; i < k(); i++)
    if (circles[i].crosscap_parity == 1) return i;
  return -1;
}

Geometry::Geometry(const DiagramRP2& d) : d_(d), idx_(d), cover_(build_cover(d, idx_, nullptr)) {
  path_parity_.resize(cover_.orbits.size());
}

Smoothing Geometry::resolve(const State& s) const {
  if (s.size != d_.n()) throw std::runtime_error("state length mismatch");
  Smoothing sm;
  sm.state = s;
  const int k = d_.k();
  const int E = d_.num_edges();
  sm.circle_of.assign(E, -1);

  std::vector<SlotPairing> pairing(d_.n());
  for (int c = 0; c < d_.n(); c++)
    pairing[c] = smoothing_pairing(d_.crossings[c].over_pair, s.bit(c));

  for (int a0 = 0; a0 < d_.num_arcs(); a0++) {
    if (sm.circle_of[a0] >= 0) continue;
    Circle circ;
    int arc = a0, from_end = 0, sheet = 0;
    do {
      sm.circle_of[arc] = static_cast<int>(sm.circles.size());
      circ.arcs.push_back(arc);
      circ.sheet.push_back(static_cast<uint8_t>(sheet));
      const Endpoint& ep = d_.arcs[arc].end[1 - from_end];
      std::pair<int, int> nxt;
      if (ep.is_slot()) {
        nxt = idx_.slot_end(ep.crossing, pairing[ep.crossing].partner[ep.slot]);
      } else {
        circ.crosscap_parity ^= 1;
        sheet ^= 1;
        nxt = idx_.boundary_end((ep.boundary + k) % (2 * k));
      }
      arc = nxt.first;
      from_end = nxt.second;
    } while (arc != a0 || from_end != 0);
    sm.circles.push_back(std::move(circ));
  }
  for (int l = 0; l < d_.free_loops; l++) {
    Circle circ;
    circ.arcs = {d_.num_arcs() + l};
    circ.sheet = {0};
    sm.circle_of[d_.num_arcs() + l] = static_cast<int>(sm.circles.size());
    sm.circles.push_back(std::move(circ));
  }

  std::sort(sm.circles.begin(), sm.circles.end(),
            [](const Circle& x, const Circle& y) { return x.min_arc() < y.min_arc(); });
  for (int i = 0; i < sm.k(); i++)
    for (int a : sm.circles[i].arcs) sm.circle_of[a] = i;
  return sm;
}

const std::vector<uint8_t>& Geometry::path_parity(int orbit) const {
  auto& slot = path_parity_[orbit];
  if (!slot.empty()) return slot;
  // BFS in the dual graph from one lift of the face orbit to the other,
  // then record which edges the tree path crosses.
  auto [fa, fb] = cover_.orbits[orbit];
  std::vector<int> via_edge(cover_.n_faces, -1);
  std::vector<int> from(cover_.n_faces, -1);
  std::deque<int> queue{fa};
  from[fa] = fa;
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    if (f == fb) break;
    for (int e = 0; e < cover_.nedges; e++) {
      auto [x, y] = cover_.edge_faces(e);
      int other = -1;
      if (x == f)
        other = y;
      else if (y == f)
        other = x;
      if (other >= 0 && from[other] < 0) {
        from[other] = f;
        via_edge[other] = e;
        queue.push_back(other);
      }
    }
  }
  if (from[fb] < 0) throw std::runtime_error("double cover dual graph is not connected");
  slot.assign(cover_.nedges, 0);
  for (int f = fb; f != fa; f = from[f]) slot[via_edge[f]] ^= 1;
  return slot;
}

bool Geometry::encircles(const Circle& c, FaceRef P) const {
  if (c.crosscap_parity != 0)
    throw std::runtime_error("circle is essential in RP2: no disk side exists");
  if (P.orbit < 0 || P.orbit >= num_face_orbits()) throw std::runtime_error("bad face orbit");
  const auto& w = path_parity(P.orbit);
  int parity = 0;
  for (size_t i = 0; i < c.arcs.size(); i++)
    parity ^= w[cover_.arc_lift_edge(c.arcs[i], c.sheet[i])];
  return parity != 0;
}

int Geometry::encircling_number(const Smoothing& sm, FaceRef P) const {
  int e = 0;
  for (const Circle& c : sm.circles) {
    if (c.crosscap_parity != 0) continue;  // essential circles have no disk side
    if (encircles(c, P)) e ^= 1;
  }
  return e;
}

int Geometry::region_parity(FaceRef P) const {
  return encircling_number(resolve(seifert_state(d_)), P);
}

FaceRef Geometry::canonical_base_face() const {
  State seif = seifert_state(d_);
  Smoothing sm = resolve(seif);
  for (int orbit = 0; orbit < num_face_orbits(); orbit++)
    if (encircling_number(sm, FaceRef{orbit}) == 0) return FaceRef{orbit};
  throw std::runtime_error("no face with region parity 0; diagram is inconsistent");
}

FaceRef Geometry::default_basepoint() const {
  if (d_.basepoint_face) {
    if (*d_.basepoint_face < 0 || *d_.basepoint_face >= num_face_orbits())
      throw std::runtime_error("basepoint_face out of range");
    return FaceRef{*d_.basepoint_face};
  }
  return canonical_base_face();
}

int Geometry::default_marked_arc() const {
  if (d_.marked_arc) return *d_.marked_arc;
  if (d_.num_edges() == 0) throw std::runtime_error("empty diagram has no marked point");
  return 0;
}

CoverMap Geometry::smoothing_cover(const State& s) const {
  return build_cover(d_, idx_, &s);
}

bool encircles_floodfill(const Geometry& g, const Smoothing& sm, int circle_index, FaceRef P) {
  const Circle& c = sm.circles[circle_index];
  if (c.crosscap_parity != 0)
    throw std::runtime_error("circle is essential in RP2: no disk side exists");
  CoverMap cm = g.smoothing_cover(sm.state);

  // blocked edges: both lifts of every arc of the circle
  std::vector<uint8_t> blocked(cm.nedges, 0);
  for (int a : c.arcs) {
    blocked[cm.arc_lift_edge(a, 0)] = 1;
    blocked[cm.arc_lift_edge(a, 1)] = 1;
  }

  // the lifts of P in the smoothing cover, located through a shared dart
  auto [fa, fb] = g.cover().orbits[P.orbit];
  int da = g.cover().face_min_dart[fa];
  int db = g.cover().face_min_dart[fb];
  int start = cm.face_of[da], goal = cm.face_of[db];

  std::vector<uint8_t> seen(cm.n_faces, 0);
  std::deque<int> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (int e = 0; e < cm.nedges; e++) {
      if (blocked[e]) continue;
      auto [x, y] = cm.edge_faces(e);
      int other = x == f ? y : (y == f ? x : -1);
      if (other >= 0 && !seen[other]) {
        seen[other] = 1;
        queue.push_back(other);
      }
    }
  }
  return !seen[goal];
}

}  // namespace rpkh
