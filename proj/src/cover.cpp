#include "rpkh/cover.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rpkh {

int CoverMap::deck_dart(int d) const {
  int e = d >> 1, sub = d & 1;
  int img;
  if (is_arc_edge(e)) {
    img = e ^ 1;  // flip sheet
  } else {
    int t = e - 2 * Ae;
    img = 2 * Ae + (t + n_eq / 2) % n_eq;
  }
  return 2 * img + sub;
}

bool CoverMap::euler_ok() const {
  std::vector<int> parent(nverts);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < nedges; e++) parent[find(at[2 * e])] = find(at[2 * e + 1]);

  std::map<int, std::array<long, 3>> counts;  // root -> V, E, F(traversal)
  for (int v = 0; v < nverts; v++) counts[find(v)][0]++;
  for (int e = 0; e < nedges; e++) counts[find(at[2 * e])][1]++;
  // traversal faces per component: count orbits of face_next per component,
  // ignoring the crosscap merge (which glues across components)
  std::vector<int> seen(num_darts(), 0);
  for (int d0 = 0; d0 < num_darts(); d0++) {
    if (seen[d0]) continue;
    int d = d0;
    do {
      seen[d] = 1;
      d = face_next(d);
    } while (d != d0);
    counts[find(at[d0])][2]++;
  }
  for (auto& [root, vef] : counts)
    if (vef[0] - vef[1] + vef[2] != 2) return false;
  return true;
}

namespace {

struct Builder {
  const DiagramRP2& d;
  const DiagramIndex& idx;
  const State* state;
  CoverMap cm;

  std::vector<std::vector<int>> rot;  // per-vertex ccw dart list

  int A, FL, k, n;

  explicit Builder(const DiagramRP2& dd, const DiagramIndex& ii, const State* ss)
      : d(dd), idx(ii), state(ss) {
    A = d.num_arcs();
    FL = d.free_loops;
    k = d.k();
    n = d.n();
  }

  int arc_dart(int a, int sheet, int end) const { return 2 * (2 * a + sheet) + end; }

  // dart of the arc end sitting in crossing slot (c, s), lifted to sheet
  int slot_dart(int c, int s, int sheet) const {
    auto [a, e] = idx.slot_end(c, s);
    return arc_dart(a, sheet, e);
  }

  int eq_edge(int t) const { return 2 * (A + FL) + t; }

  void build() {
    cm.Ae = A + FL;
    cm.n_eq = (k >= 1) ? 2 * k : 2;
    cm.nedges = 2 * cm.Ae + cm.n_eq;

    int vbase_cross;
    int verts_per_crossing = state ? 4 : 2;
    vbase_cross = (k >= 1) ? 2 * k : 2;
    int vbase_loops = vbase_cross + verts_per_crossing * n;
    cm.nverts = vbase_loops + 2 * FL;

    rot.assign(cm.nverts, {});
    cm.at.assign(cm.num_darts(), -1);

    // equator vertices and edges
    if (k >= 1) {
      for (int t = 0; t < 2 * k; t++) {
        int ef = eq_edge(t);
        attach(2 * ef, t);
        attach(2 * ef + 1, (t + 1) % (2 * k));
      }
      for (int t = 0; t < 2 * k; t++) {
        int eb = eq_edge((t - 1 + 2 * k) % (2 * k));
        // ccw at u_t: [equator forward, sheet-0 arc, equator backward, sheet-1 arc]
        auto [a0, e0] = idx.boundary_end(t);
        auto [a1, e1] = idx.boundary_end((t + k) % (2 * k));
        rot[t] = {2 * eq_edge(t), arc_dart(a0, 0, e0), 2 * eb + 1, arc_dart(a1, 1, e1)};
        cm.at[arc_dart(a0, 0, e0)] = t;
        cm.at[arc_dart(a1, 1, e1)] = t;
      }
    } else {
      // synthetic equator bigon on vertices 0, 1
      int E0 = eq_edge(0), E1 = eq_edge(1);
      attach(2 * E0, 0);
      attach(2 * E0 + 1, 1);
      attach(2 * E1, 1);
      attach(2 * E1 + 1, 0);
      rot[0] = {2 * E0, 2 * E1 + 1};
      rot[1] = {2 * E1, 2 * E0 + 1};
    }

    // crossings: true vertices or smoothing joints
    for (int c = 0; c < n; c++) {
      for (int sheet = 0; sheet < 2; sheet++) {
        if (!state) {
          int v = vbase_cross + 2 * c + sheet;
          static const int order0[4] = {0, 1, 2, 3};
          static const int order1[4] = {0, 3, 2, 1};
          const int* ord = sheet == 0 ? order0 : order1;
          for (int i = 0; i < 4; i++) {
            int dart = slot_dart(c, ord[i], sheet);
            rot[v].push_back(dart);
            cm.at[dart] = v;
          }
        } else {
          SlotPairing p = smoothing_pairing(d.crossings[c].over_pair, state->bit(c));
          int used[4] = {0, 0, 0, 0};
          int which = 0;
          for (int s = 0; s < 4; s++) {
            if (used[s]) continue;
            used[s] = used[p.partner[s]] = 1;
            int v = vbase_cross + 4 * c + 2 * sheet + which;
            which++;
            for (int s2 : {s, p.partner[s]}) {
              int dart = slot_dart(c, s2, sheet);
              rot[v].push_back(dart);
              cm.at[dart] = v;
            }
          }
        }
      }
    }

    // free loops: one joint per loop per sheet carrying a self-loop edge
    for (int l = 0; l < FL; l++) {
      for (int sheet = 0; sheet < 2; sheet++) {
        int v = vbase_loops + 2 * l + sheet;
        int e = 2 * (A + l) + sheet;
        rot[v] = {2 * e, 2 * e + 1};
        cm.at[2 * e] = v;
        cm.at[2 * e + 1] = v;
      }
    }

    for (int dart = 0; dart < cm.num_darts(); dart++)
      if (cm.at[dart] < 0) throw std::runtime_error("cover construction left a dangling dart");

    // rotation successor/predecessor
    cm.nxt.assign(cm.num_darts(), -1);
    cm.prv.assign(cm.num_darts(), -1);
    for (int v = 0; v < cm.nverts; v++) {
      int deg = static_cast<int>(rot[v].size());
      for (int i = 0; i < deg; i++) {
        int a = rot[v][i], b = rot[v][(i + 1) % deg];
        cm.nxt[a] = b;
        cm.prv[b] = a;
      }
    }

    faces();
  }

  void attach(int dart, int v) { cm.at[dart] = v; }

  void faces() {
    // traversal faces
    std::vector<int> trav(cm.num_darts(), -1);
    std::vector<int> trav_min_dart;
    int nf = 0;
    for (int d0 = 0; d0 < cm.num_darts(); d0++) {
      if (trav[d0] >= 0) continue;
      int dd = d0;
      trav_min_dart.push_back(d0);
      do {
        trav[dd] = nf;
        dd = cm.face_next(dd);
      } while (dd != d0);
      nf++;
    }

    // crosscap merge for affine diagrams: glue the synthetic bigon into the
    // designated crosscap face, sheet by sheet
    std::vector<int> parent(nf);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

    auto deck_of_trav = [&](int f) {
      // valid pre-merge too: any dart of f works
      for (int dd = 0; dd < cm.num_darts(); dd++)
        if (trav[dd] == f) return trav[deck_dart_raw(dd) ^ 1];
      throw std::runtime_error("empty face");
    };

    if (k == 0) {
      int bigonN = trav[2 * eq_edge(0)];
      int bigonS = deck_of_trav(bigonN);
      if (A > 0) {
        int ca = 0, ce = 0;
        if (d.crosscap_face_dart) {
          ca = d.crosscap_face_dart->first;
          ce = d.crosscap_face_dart->second;
        }
        int f0 = trav[arc_dart(ca, 0, ce)];
        unite(f0, bigonN);
        unite(deck_of_trav(f0), bigonS);
      } else {
        // side-by-side free loops: all outside faces share the crosscap region
        for (int l = 0; l < FL; l++) {
          int fN = trav[arc_dart(A + l, 0, 1)];
          unite(fN, bigonN);
          unite(deck_of_trav(fN), bigonS);
        }
      }
    }

    // compact merged ids in deterministic order
    std::vector<int> order;
    for (int f = 0; f < nf; f++)
      if (find(f) == f) order.push_back(f);
    std::map<int, int> newid;
    // order roots by the minimal traversal dart over their class
    std::vector<int> class_min(nf, cm.num_darts());
    for (int f = 0; f < nf; f++) class_min[find(f)] = std::min(class_min[find(f)], trav_min_dart[f]);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return class_min[x] < class_min[y]; });
    for (int i = 0; i < static_cast<int>(order.size()); i++) newid[order[i]] = i;

    cm.n_faces = static_cast<int>(order.size());
    cm.face_of.assign(cm.num_darts(), -1);
    for (int dd = 0; dd < cm.num_darts(); dd++) cm.face_of[dd] = newid[find(trav[dd])];
    cm.face_min_dart.assign(cm.n_faces, cm.num_darts());
    for (int dd = 0; dd < cm.num_darts(); dd++)
      cm.face_min_dart[cm.face_of[dd]] = std::min(cm.face_min_dart[cm.face_of[dd]], dd);

    cm.deck_face.assign(cm.n_faces, -1);
    for (int dd = 0; dd < cm.num_darts(); dd++)
      cm.deck_face[cm.face_of[dd]] = cm.face_of[deck_dart_raw(dd) ^ 1];
    for (int f = 0; f < cm.n_faces; f++) {
      if (cm.deck_face[f] == f)
        throw std::runtime_error("deck involution fixes a face; cover construction is broken");
      if (cm.deck_face[cm.deck_face[f]] != f)
        throw std::runtime_error("deck involution is not an involution on faces");
    }

    // face orbits, ordered by minimal incident dart
    cm.orbit_of_face.assign(cm.n_faces, -1);
    std::vector<std::pair<int, std::pair<int, int>>> keyed;
    for (int f = 0; f < cm.n_faces; f++) {
      int g = cm.deck_face[f];
      if (f < g) keyed.push_back({std::min(cm.face_min_dart[f], cm.face_min_dart[g]), {f, g}});
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto& [key, fg] : keyed) {
      (void)key;
      cm.orbit_of_face[fg.first] = static_cast<int>(cm.orbits.size());
      cm.orbit_of_face[fg.second] = static_cast<int>(cm.orbits.size());
      cm.orbits.push_back(fg);
    }
  }

  int deck_dart_raw(int dart) const {
    int e = dart >> 1, sub = dart & 1;
    int img;
    if (e < 2 * (A + FL)) {
      img = e ^ 1;
    } else {
      int t = e - 2 * (A + FL);
      int n_eq = (k >= 1) ? 2 * k : 2;
      img = 2 * (A + FL) + (t + n_eq / 2) % n_eq;
    }
    return 2 * img + sub;
  }
};

}  // namespace

CoverMap build_cover(const DiagramRP2& d, const DiagramIndex& idx, const State* state) {
  Builder b(d, idx, state);
  b.build();
  return b.cm;
}

}  // namespace rpkh
