#include "rpkh/diagram.hpp"

#include <sstream>
#include <stdexcept>

#include "rpkh/cover.hpp"

namespace rpkh {

OverPair over_pair_from_string(const std::string& s) {
  if (s == "02") return OverPair::O02;
  if (s == "13") return OverPair::O13;
  return OverPair::Invalid;
}

std::string over_pair_to_string(OverPair op) {
  switch (op) {
    case OverPair::O02:
      return "02";
    case OverPair::O13:
      return "13";
    default:
      return "invalid";
  }
}

std::string State::str() const {
  std::string s(size, '0');
  for (int i = 0; i < size; i++)
    if (bit(i)) s[i] = '1';
  return s;
}

SlotPairing smoothing_pairing(OverPair op, int bit) {
  bool joins01 = (op == OverPair::O13) == (bit == 0);
  if (joins01) return SlotPairing{{1, 0, 3, 2}};  // 0-1 / 2-3
  return SlotPairing{{3, 2, 1, 0}};               // 0-3 / 1-2
}

DiagramIndex::DiagramIndex(const DiagramRP2& d) {
  const int n = d.n();
  const int B = d.boundary_points;
  at_slot.assign(4 * n, {-1, -1});
  at_boundary.assign(B, {-1, -1});
  for (int a = 0; a < d.num_arcs(); a++) {
    for (int e = 0; e < 2; e++) {
      const Endpoint& ep = d.arcs[a].end[e];
      if (ep.is_slot()) {
        if (ep.crossing >= n || ep.slot < 0 || ep.slot > 3)
          throw std::runtime_error("arc endpoint references a bad crossing slot");
        auto& cell = at_slot[4 * ep.crossing + ep.slot];
        if (cell.first >= 0) throw std::runtime_error("crossing slot used twice");
        cell = {a, e};
      } else if (ep.is_boundary()) {
        if (ep.boundary >= B) throw std::runtime_error("arc endpoint references a bad boundary point");
        auto& cell = at_boundary[ep.boundary];
        if (cell.first >= 0) throw std::runtime_error("boundary point used twice");
        cell = {a, e};
      } else {
        throw std::runtime_error("malformed endpoint");
      }
    }
  }
  for (auto& cell : at_slot)
    if (cell.first < 0) throw std::runtime_error("unused crossing slot");
  for (auto& cell : at_boundary)
    if (cell.first < 0) throw std::runtime_error("unused boundary point");

  // Trace link components through crossings and boundary gluings.
  const int k = d.k();
  component_of.assign(d.num_edges(), -1);
  for (int a0 = 0; a0 < d.num_arcs(); a0++) {
    if (component_of[a0] >= 0) continue;
    int comp = num_components++;
    int passages = 0;
    int arc = a0, from_end = 0;
    // walk forward: enter arc at from_end, leave at the other end
    do {
      component_of[arc] = comp;
      const Endpoint& ep = d.arcs[arc].end[1 - from_end];
      std::pair<int, int> nxt;
      if (ep.is_slot()) {
        nxt = slot_end(ep.crossing, (ep.slot + 2) % 4);
      } else {
        passages++;
        nxt = boundary_end((ep.boundary + k) % (2 * k));
      }
      arc = nxt.first;
      from_end = nxt.second;
    } while (arc != a0 || from_end != 0);
    component_passages.push_back(passages);
  }
  for (int l = 0; l < d.free_loops; l++) {
    component_of[d.num_arcs() + l] = num_components++;
    component_passages.push_back(0);
  }
}

ValidationReport validate(const DiagramRP2& d) {
  ValidationReport rep;
  if (d.boundary_points % 2 != 0) rep.violations.push_back("boundary_points must be even (2k)");
  for (int c = 0; c < d.n(); c++)
    if (d.crossings[c].over_pair == OverPair::Invalid) {
      std::ostringstream os;
      os << "crossing " << c << ": over_pair ill-formed";
      if (!d.crossings[c].raw.empty()) os << " (" << d.crossings[c].raw << ")";
      rep.violations.push_back(os.str());
    }
  if (d.free_loops > 0 && (d.n() > 0 || d.boundary_points > 0)) {
    rep.violations.push_back("free loops are only supported on crossingless affine diagrams");
  }
  if (!rep.violations.empty()) return rep;

  DiagramIndex idx;
  try {
    idx = DiagramIndex(d);
  } catch (const std::exception& e) {
    rep.violations.push_back(e.what());
    return rep;
  }

  // Connectivity of the 4-valent graph union boundary gluings, except for
  // crossingless diagrams which may be disjoint unions of circles.
  if (d.n() > 0 || d.k() > 0) {
    // union-find over arcs: join at crossings and at boundary pairs
    std::vector<int> parent(d.num_arcs());
    for (int i = 0; i < d.num_arcs(); i++) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    for (int c = 0; c < d.n(); c++)
      for (int s = 1; s < 4; s++) unite(idx.slot_end(c, 0).first, idx.slot_end(c, s).first);
    for (int j = 0; j < d.k(); j++)
      unite(idx.boundary_end(j).first, idx.boundary_end(j + d.k()).first);
    int root = d.num_arcs() ? find(0) : -1;
    for (int a = 1; a < d.num_arcs(); a++)
      if (find(a) != root) {
        rep.violations.push_back("diagram is not connected");
        break;
      }
  }

  if (d.crosscap_face_dart) {
    auto [a, e] = *d.crosscap_face_dart;
    if (d.k() != 0)
      rep.violations.push_back("crosscap_face_dart is only meaningful for affine diagrams");
    else if (a < 0 || a >= d.num_arcs() || (e != 0 && e != 1))
      rep.violations.push_back("crosscap_face_dart out of range");
  }
  if (rep.violations.empty()) {
    // the rotation system must actually embed in RP2: the double cover is a
    // sphere, checked component by component
    try {
      CoverMap cm = build_cover(d, idx, nullptr);
      if (!cm.euler_ok())
        rep.violations.push_back("rotation system does not embed in RP2 (double cover is not a sphere)");
    } catch (const std::exception& e) {
      rep.violations.push_back(e.what());
    }
  }
  if (d.marked_arc && (*d.marked_arc < 0 || *d.marked_arc >= d.num_edges()))
    rep.violations.push_back("marked_arc out of range");

  if (!d.orientation_seeds.empty()) {
    if (static_cast<int>(d.orientation_seeds.size()) != idx.num_components)
      rep.violations.push_back("orientation_seeds must list one directed arc per component");
  }

  for (int comp = 0; comp < idx.num_components; comp++)
    rep.component_class.push_back(idx.component_passages[comp] % 2);
  rep.total_class = d.k() % 2;
  return rep;
}

OrientationData orient(const DiagramRP2& d, const DiagramIndex& idx) {
  OrientationData od;
  od.slot_in.assign(4 * d.n(), 2);
  std::vector<std::pair<int, int>> seeds = d.orientation_seeds;
  if (seeds.empty()) {
    // default: per component, lowest arc id walked end[0] -> end[1]
    std::vector<int> seen(idx.num_components, 0);
    for (int a = 0; a < d.num_arcs(); a++) {
      int comp = idx.component_of[a];
      if (!seen[comp]) {
        seen[comp] = 1;
        seeds.push_back({a, 0});
      }
    }
  }
  const int k = d.k();
  for (auto [a0, dir0] : seeds) {
    if (a0 < 0 || a0 >= d.num_arcs()) {
      if (a0 >= d.num_arcs() && a0 < d.num_edges()) continue;  // free loop: nothing to record
      throw std::runtime_error("orientation seed references a bad arc");
    }
    int arc = a0, from_end = dir0;
    do {
      const Endpoint& ep = d.arcs[arc].end[1 - from_end];
      std::pair<int, int> nxt;
      if (ep.is_slot()) {
        od.slot_in[4 * ep.crossing + ep.slot] = 1;
        int out_slot = (ep.slot + 2) % 4;
        od.slot_in[4 * ep.crossing + out_slot] = 0;
        nxt = idx.slot_end(ep.crossing, out_slot);
      } else {
        nxt = idx.boundary_end((ep.boundary + k) % (2 * k));
      }
      arc = nxt.first;
      from_end = nxt.second;
    } while (arc != a0 || from_end != dir0);
  }
  for (auto v : od.slot_in)
    if (v == 2) throw std::runtime_error("unoriented component");
  return od;
}

int crossing_sign(const DiagramRP2& d, const OrientationData& o, int c) {
  int over_lo = d.crossings[c].over_pair == OverPair::O02 ? 0 : 1;
  int under_lo = 1 - over_lo;
  int over_out = o.slot_in[4 * c + over_lo] ? over_lo + 2 : over_lo;
  int under_out = o.slot_in[4 * c + under_lo] ? under_lo + 2 : under_lo;
  // positive exactly when the under direction is the over direction rotated
  // counterclockwise by one slot
  return ((under_out - over_out) % 4 + 4) % 4 == 1 ? 1 : -1;
}

std::pair<int, int> crossing_signs(const DiagramRP2& d) {
  DiagramIndex idx(d);
  OrientationData o = orient(d, idx);
  int np = 0, nm = 0;
  for (int c = 0; c < d.n(); c++) (crossing_sign(d, o, c) > 0 ? np : nm)++;
  return {np, nm};
}

State seifert_state(const DiagramRP2& d) {
  DiagramIndex idx(d);
  OrientationData o = orient(d, idx);
  State s;
  s.size = d.n();
  for (int c = 0; c < d.n(); c++) {
    // bit 0 is orientation preserving iff its joined slots have opposite flow
    SlotPairing p0 = smoothing_pairing(d.crossings[c].over_pair, 0);
    bool ok0 = o.slot_in[4 * c + 0] != o.slot_in[4 * c + p0.partner[0]];
    if (!ok0) s.bits |= uint32_t(1) << c;
  }
  return s;
}

DiagramRP2 mirror(const DiagramRP2& d) {
  DiagramRP2 m = d;
  m.name = d.name + "!";
  for (auto& c : m.crossings) c.over_pair = toggled(c.over_pair);
  return m;
}

}  // namespace rpkh
