// Acceptance suite: one test per criterion, each printing a pass/fail line.
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <map>
#include <set>

#include "rpkh/corpus.hpp"
#include "rpkh/homology.hpp"
#include "rpkh/moves.hpp"
#include "rpkh/skein.hpp"
#include "rpkh/verify.hpp"

using namespace rpkh;

namespace {

struct Gate {
  const char* name;
  bool ok = true;
  ~Gate() { std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", name); }
};

PoincarePoly reduced_poly(const DiagramRP2& d, const Dyad& dy) {
  Geometry g(d);
  return poincare(homology_dims(build_reduced_complex(g, dy, g.default_basepoint(),
                                                      g.default_marked_arc())));
}

const Dyad& dy(const char* name) { return *find_builtin_dyad(name); }

// ---------------------------------------------------------------------------
// Independent planar reduced Khovanov over F2, for the affine-reduction
// criterion. Self-contained: own circle tracing, own differential assembly,
// own dense elimination.
namespace oracle {

struct Mini {
  const DiagramRP2& d;
  int n;
  std::vector<int> sign;  // +1 / -1 per crossing
  int np = 0, nm = 0;

  explicit Mini(const DiagramRP2& dd) : d(dd), n(dd.n()) {
    // orientation: propagate along strands from arc 0 of each component
    std::map<std::pair<int, int>, std::pair<int, int>> slot_owner;  // (c,s) -> (arc,end)
    for (int a = 0; a < d.num_arcs(); a++)
      for (int e = 0; e < 2; e++)
        if (d.arcs[a].end[e].is_slot())
          slot_owner[{d.arcs[a].end[e].crossing, d.arcs[a].end[e].slot}] = {a, e};
    std::vector<int> dir(d.num_arcs(), 0);  // 0 unknown, 1 = end0->end1, 2 = reverse
    std::vector<uint8_t> in_flag(4 * n, 2);
    for (int a0 = 0; a0 < d.num_arcs(); a0++) {
      if (dir[a0]) continue;
      int arc = a0, from = 0;
      do {
        dir[arc] = from == 0 ? 1 : 2;
        auto ep = d.arcs[arc].end[1 - from];
        in_flag[4 * ep.crossing + ep.slot] = 1;
        int out = (ep.slot + 2) % 4;
        in_flag[4 * ep.crossing + out] = 0;
        auto [na, ne] = slot_owner[{ep.crossing, out}];
        arc = na;
        from = ne;
      } while (arc != a0 || from != 0);
    }
    for (int c = 0; c < n; c++) {
      int over_lo = d.crossings[c].over_pair == OverPair::O02 ? 0 : 1;
      int under_lo = 1 - over_lo;
      int over_out = in_flag[4 * c + over_lo] ? over_lo + 2 : over_lo;
      int under_out = in_flag[4 * c + under_lo] ? under_lo + 2 : under_lo;
      int s = ((under_out - over_out) % 4 + 4) % 4 == 1 ? 1 : -1;
      sign.push_back(s);
      (s > 0 ? np : nm)++;
    }
  }

  // circles of a state via union-find over arc ids
  std::vector<int> circles_of(uint32_t bits, int& count) const {
    std::vector<int> parent(d.num_arcs());
    for (int i = 0; i < d.num_arcs(); i++) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::map<std::pair<int, int>, int> arc_at;  // (c,s) -> arc
    for (int a = 0; a < d.num_arcs(); a++)
      for (int e = 0; e < 2; e++)
        if (d.arcs[a].end[e].is_slot())
          arc_at[{d.arcs[a].end[e].crossing, d.arcs[a].end[e].slot}] = a;
    for (int c = 0; c < n; c++) {
      bool joins01 = (d.crossings[c].over_pair == OverPair::O13) == (((bits >> c) & 1) == 0);
      int pa = joins01 ? 1 : 3;
      parent[find(arc_at[{c, 0}])] = find(arc_at[{c, pa}]);
      parent[find(arc_at[{c, pa == 1 ? 2 : 1}])] = find(arc_at[{c, pa == 1 ? 3 : 2}]);
    }
    std::map<int, int> label;
    std::vector<int> out(d.num_arcs());
    for (int a = 0; a < d.num_arcs(); a++) {
      int root = find(a);
      if (!label.count(root)) {
        int next = static_cast<int>(label.size());
        label[root] = next;
      }
      out[a] = label[root];
    }
    count = static_cast<int>(label.size());
    return out;
  }

  // reduced Khovanov homology dims (i, q) -> dim
  std::map<std::pair<int, int>, int> homology(int marked_arc) const {
    struct Block {
      uint32_t bits;
      int k, marked_circle, offset;
      std::vector<int> circ;  // arc -> circle
    };
    int N = 1 << n;
    std::vector<Block> blocks(N);
    std::vector<int> level_dim(n + 1, 0);
    for (uint32_t b = 0; b < static_cast<uint32_t>(N); b++) {
      Block& blk = blocks[b];
      blk.bits = b;
      blk.circ = circles_of(b, blk.k);
      blk.marked_circle = blk.circ[marked_arc];
      int w = __builtin_popcount(b);
      blk.offset = level_dim[w];
      level_dim[w] += 1 << (blk.k - 1);
    }
    // generator: bit per unmarked circle, circle order by smallest arc id
    auto circle_order = [&](const Block& blk) {
      std::vector<int> first(blk.k, 1 << 30);
      for (int a = 0; a < d.num_arcs(); a++)
        first[blk.circ[a]] = std::min(first[blk.circ[a]], a);
      std::vector<int> ids;
      for (int i = 0; i < blk.k; i++)
        if (i != blk.marked_circle) ids.push_back(i);
      std::sort(ids.begin(), ids.end(), [&](int x, int y) { return first[x] < first[y]; });
      return ids;  // position p -> circle id
    };
    auto qdeg_of = [&](const Block& blk, int labels) {
      int w = __builtin_popcount(blk.bits);
      int q = w + np - 2 * nm;
      for (int p = 0; p < blk.k - 1; p++) q += (labels >> (blk.k - 2 - p)) & 1 ? -1 : 1;
      return q;
    };
    // differential entries between adjacent levels
    std::vector<std::vector<std::pair<int, int>>> diff(n);
    for (uint32_t b = 0; b < static_cast<uint32_t>(N); b++) {
      const Block& b1 = blocks[b];
      auto ord1 = circle_order(b1);
      std::vector<int> pos1(b1.k, -1);
      for (size_t p = 0; p < ord1.size(); p++) pos1[ord1[p]] = static_cast<int>(p);
      int w = __builtin_popcount(b);
      for (int c = 0; c < n; c++) {
        if ((b >> c) & 1) continue;
        const Block& b2 = blocks[b | (1u << c)];
        auto ord2 = circle_order(b2);
        std::vector<int> pos2(b2.k, -1);
        for (size_t p = 0; p < ord2.size(); p++) pos2[ord2[p]] = static_cast<int>(p);
        // correspondence by shared arcs
        auto c2of = [&](int c1) {
          for (int a = 0; a < d.num_arcs(); a++)
            if (b1.circ[a] == c1) return b2.circ[a];
          return -1;
        };
        int nf1 = b1.k - 1, nf2 = b2.k - 1;
        for (int labels = 0; labels < (1 << nf1); labels++) {
          auto label_at = [&](int p) { return (labels >> (nf1 - 1 - p)) & 1; };
          int row = b1.offset + labels;
          auto emit = [&](int out_labels) {
            diff[w].push_back({row, b2.offset + out_labels});
          };
          if (b2.k == b1.k - 1) {  // merge
            // find merged pair
            int ka = -1, kb = -1;
            for (int c1 = 0; c1 < b1.k; c1++)
              for (int c1b = c1 + 1; c1b < b1.k; c1b++)
                if (c2of(c1) == c2of(c1b)) ka = c1, kb = c1b;
            int base = 0;
            for (int c1 = 0; c1 < b1.k; c1++) {
              if (c1 == ka || c1 == kb || c1 == b1.marked_circle) continue;
              base |= label_at(pos1[c1]) << (nf2 - 1 - pos2[c2of(c1)]);
            }
            if (ka == b1.marked_circle || kb == b1.marked_circle) {
              int other = ka == b1.marked_circle ? kb : ka;
              if (label_at(pos1[other]) == 0) emit(base);
            } else {
              int la = label_at(pos1[ka]), lb = label_at(pos1[kb]);
              if (la + lb < 2) {
                int tgt = pos2[c2of(ka)];
                emit(base | ((la | lb) << (nf2 - 1 - tgt)));
              }
            }
          } else {  // split
            int src = -1;
            std::set<int> seen2;
            std::vector<int> first2(b2.k, 1 << 30);
            for (int a = 0; a < d.num_arcs(); a++)
              first2[b2.circ[a]] = std::min(first2[b2.circ[a]], a);
            std::vector<uint8_t> hit(b2.k, 0);
            for (int a = 0; a < d.num_arcs(); a++) hit[b2.circ[a]] = 1;
            // the split source: circle of b1 mapping onto two circles of b2
            std::map<int, std::set<int>> img;
            for (int a = 0; a < d.num_arcs(); a++) img[b1.circ[a]].insert(b2.circ[a]);
            std::pair<int, int> halves{-1, -1};
            for (auto& [c1, st] : img)
              if (st.size() == 2) {
                src = c1;
                auto it = st.begin();
                halves.first = *it++;
                halves.second = *it;
              }
            int base = 0;
            for (int c1 = 0; c1 < b1.k; c1++) {
              if (c1 == src || c1 == b1.marked_circle) continue;
              base |= label_at(pos1[c1]) << (nf2 - 1 - pos2[c2of(c1)]);
            }
            if (src == b1.marked_circle) {
              int born = halves.first == b2.marked_circle ? halves.second : halves.first;
              emit(base | (1 << (nf2 - 1 - pos2[born])));
            } else {
              int pa = pos2[halves.first], pb = pos2[halves.second];
              if (label_at(pos1[src]) == 0) {
                emit(base | (1 << (nf2 - 1 - pa)));
                emit(base | (1 << (nf2 - 1 - pb)));
              } else {
                emit(base | (1 << (nf2 - 1 - pa)) | (1 << (nf2 - 1 - pb)));
              }
            }
          }
        }
      }
    }
    // homology per q slice, dense elimination over F2
    std::vector<std::vector<int>> qdeg(n + 1);
    for (uint32_t b = 0; b < static_cast<uint32_t>(N); b++) {
      const Block& blk = blocks[b];
      int w = __builtin_popcount(b);
      qdeg[w].resize(level_dim[w]);
      for (int l = 0; l < (1 << (blk.k - 1)); l++) qdeg[w][blk.offset + l] = qdeg_of(blk, l);
    }
    auto slice_rank = [&](int w, int q) {
      std::map<int, int> rid, cid;
      for (int i = 0; i < level_dim[w]; i++)
        if (qdeg[w][i] == q) rid.emplace(i, rid.size());
      for (int i = 0; i < level_dim[w + 1]; i++)
        if (qdeg[w + 1][i] == q - 1 + 1) cid.emplace(i, cid.size());
      if (rid.empty() || cid.empty()) return 0;
      std::vector<std::vector<uint8_t>> m(rid.size(), std::vector<uint8_t>(cid.size(), 0));
      for (auto& [r, c] : diff[w])
        if (rid.count(r) && cid.count(c)) m[rid[r]][cid[c]] ^= 1;
      int rank = 0;
      size_t cols = cid.size();
      for (size_t col = 0; col < cols && rank < static_cast<int>(m.size()); col++) {
        int piv = -1;
        for (size_t r = rank; r < m.size(); r++)
          if (m[r][col]) {
            piv = static_cast<int>(r);
            break;
          }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (size_t r = 0; r < m.size(); r++)
          if (static_cast<int>(r) != rank && m[r][col])
            for (size_t cc = 0; cc < cols; cc++) m[r][cc] ^= m[rank][cc];
        rank++;
      }
      return rank;
    };
    std::map<std::pair<int, int>, int> dims;
    for (int w = 0; w <= n; w++) {
      std::map<int, int> cnt;
      for (int q : qdeg[w]) cnt[q]++;
      for (auto& [q, c] : cnt) {
        int rout = w < n ? slice_rank(w, q) : 0;
        int rin = w > 0 ? slice_rank(w - 1, q) : 0;
        int dim = c - rout - rin;
        if (dim > 0) dims[{w - nm, q}] = dim;
      }
    }
    return dims;
  }
};

}  // namespace oracle

}  // namespace

TEST_CASE("criterion 1: golden polynomials on p1knot") {
  Gate gate{"1 golden values (5 dyads on p1knot)"};
  const DiagramRP2& d = corpus_diagram("p1knot");
  const std::map<std::string, std::string> want = {
      {"aps", "t^-2 q^-4 + t^-1 q^-2 + q^-1 + 1 + t q"},
      {"a0", "t^-2 q^-4 + t^-1 q^-2 + 1"},
      {"a1", "q^-1 + t q"},
      {"hf",
       "t^-2 q^-5 + 2 t^-2 q^-4 + t^-2 q^-3 + t^-1 q^-3 + t^-1 q^-2 + t^-1 q^-1 + q^-1 + 2 + q + "
       "t q^2"},
      {"hfprime",
       "t^-2 q^-5 + 2 t^-2 q^-4 + t^-2 q^-3 + t^-1 q^-3 + 2 t^-1 q^-2 + t^-1 q^-1 + q^-2 + q^-1 "
       "+ 3 + q + t + t q^2"},
  };
  for (auto& [name, poly] : want) {
    CAPTURE(name);
    std::string got = reduced_poly(d, dy(name.c_str())).str();
    CHECK(got == poly);
    gate.ok &= got == poly;
  }
}

TEST_CASE("criterion 2: Kh^aps = Kh^a0 + Kh^a1 on the corpus") {
  Gate gate{"2 direct sum aps = a0 + a1"};
  for (const auto& e : corpus()) {
    if (e.class1) continue;
    CAPTURE(e.diagram.name);
    Geometry g(e.diagram);
    FaceRef P = g.default_basepoint();
    int M = g.default_marked_arc();
    auto aps = homology_dims(build_reduced_complex(g, dy("aps"), P, M));
    auto a0 = homology_dims(build_reduced_complex(g, dy("a0"), P, M));
    auto a1 = homology_dims(build_reduced_complex(g, dy("a1"), P, M));
    for (auto& [iq, dd] : a1) a0[iq] += dd;
    for (auto it = a0.begin(); it != a0.end();)
      it = it->second == 0 ? a0.erase(it) : std::next(it);
    CHECK(a0 == aps);
    gate.ok &= a0 == aps;
  }
}

TEST_CASE("criterion 3: d^2 = 0 over corpus x (builtin + 50 random dyads)") {
  Gate gate{"3 d^2 = 0 incl. 50 random dyads"};
  std::vector<Dyad> dyads = builtin_dyads();
  std::vector<Dyad> rnd = random_dyads(50, 20260811);
  REQUIRE(rnd.size() == 50);
  dyads.insert(dyads.end(), rnd.begin(), rnd.end());
  for (const auto& e : corpus()) {
    Geometry g(e.diagram);
    FaceRef P = g.default_basepoint();
    for (const auto& a : dyads) {
      CAPTURE(e.diagram.name, a.name);
      bool ok;
      if (e.class1) {
        ok = verify_d_squared(build_class1_complex(g, a, P));
      } else {
        ok = verify_d_squared(build_reduced_complex(g, a, P, g.default_marked_arc())) &&
             verify_d_squared(build_unreduced_complex(g, a, P));
      }
      CHECK(ok);
      gate.ok &= ok;
    }
  }
}

TEST_CASE("criterion 4: Euler identity vs skein oracle") {
  Gate gate{"4 chi = qdim(V0) J0 + qdim(V1) J1"};
  for (const auto& e : corpus()) {
    if (e.class1) continue;
    Geometry g(e.diagram);
    for (const auto& a : builtin_dyads()) {
      CAPTURE(e.diagram.name, a.name);
      bool ok = check_euler(g, a);
      CHECK(ok);
      gate.ok &= ok;
    }
  }
}

TEST_CASE("criterion 5: bracket decomposition <L> = <L>_0 + <L>_1") {
  Gate gate{"5 bracket decomposition"};
  for (const auto& e : corpus()) {
    if (e.class1) continue;
    Geometry g(e.diagram);
    for (int orbit = 0; orbit < g.num_face_orbits(); orbit++) {
      FaceRef P{orbit};
      bool ok = bracket(g, P, 0) + bracket(g, P, 1) == bracket_total(g, P);
      CAPTURE(e.diagram.name, orbit);
      CHECK(ok);
      gate.ok &= ok;
    }
  }
}

TEST_CASE("criterion 6: marked point independence and transport isos") {
  Gate gate{"6 marked point independence"};
  for (const auto& e : corpus()) {
    if (e.class1) continue;
    Geometry g(e.diagram);
    FaceRef P = g.default_basepoint();
    PoincarePoly ref;
    std::vector<ChainComplexBigraded> built;
    for (int m = 0; m < e.diagram.num_edges(); m++) {
      auto C = build_reduced_complex(g, dy("hf"), P, m);
      PoincarePoly p = poincare(homology_dims(C));
      if (m == 0)
        ref = p;
      else {
        CAPTURE(e.diagram.name, m);
        CHECK(p == ref);
        gate.ok &= p == ref;
      }
      if (e.diagram.n() <= 5) built.push_back(std::move(C));
    }
    // chain isomorphism for every pair of marked arcs on small diagrams
    for (size_t i = 0; i + 1 < built.size(); i++) {
      for (size_t j = i + 1; j < built.size(); j++) {
        ChainMap phi = remark_isomorphism(g, built[i], built[j]);
        bool ok = is_chain_iso(built[i], built[j], phi);
        CAPTURE(e.diagram.name, i, j);
        CHECK(ok);
        gate.ok &= ok;
      }
    }
  }
}

TEST_CASE("criterion 7: Reidemeister invariance across generated pairs") {
  Gate gate{"7 Reidemeister invariance (R1..R5)"};
  auto pairs = generate_move_pairs();
  std::map<std::string, int> kinds;
  int class0_pairs = 0;
  for (auto& mp : pairs) {
    if (validate(mp.before).total_class != 0) continue;
    class0_pairs++;
    kinds[mp.move.substr(0, 2)]++;
    for (auto* name : {"aps", "hf"}) {
      CAPTURE(mp.base, mp.move, name);
      bool ok = reduced_poly(mp.before, dy(name)) == reduced_poly(mp.after, dy(name));
      CHECK(ok);
      gate.ok &= ok;
    }
  }
  CAPTURE(class0_pairs);
  CHECK(class0_pairs >= 20);
  gate.ok &= class0_pairs >= 20;
  for (auto* kind : {"R1", "R2", "R3", "R4", "R5"}) {
    CAPTURE(kind);
    CHECK(kinds[kind] > 0);
    gate.ok &= kinds[kind] > 0;
  }
}

TEST_CASE("criterion 8: parity lemmas on all cube edges") {
  Gate gate{"8 parity transport + null homologous circles"};
  for (const auto& e : corpus()) {
    CAPTURE(e.diagram.name);
    auto results = run_checks(e.diagram, {"parity"});
    CHECK(results[0].pass);
    gate.ok &= results[0].pass;
  }
}

TEST_CASE("criterion 9: unreduced Euler relation") {
  Gate gate{"9 chi(unreduced) = (q + 1/q) chi(reduced)"};
  for (const auto& e : corpus()) {
    if (e.class1) continue;
    CAPTURE(e.diagram.name);
    auto results = run_checks(e.diagram, {"unreduced"});
    CHECK(results[0].pass);
    gate.ok &= results[0].pass;
  }
}

TEST_CASE("criterion 10: affine diagrams reduce to ordinary reduced Khovanov") {
  Gate gate{"10 affine reduction vs independent oracle"};
  int trefoil_total = 0;
  for (const auto& e : corpus()) {
    if (!e.affine || e.diagram.num_arcs() == 0) continue;
    CAPTURE(e.diagram.name);
    oracle::Mini mini(e.diagram);
    auto want = mini.homology(0);
    Geometry g(e.diagram);
    auto got = homology_dims(build_reduced_complex(g, dy("a0"), g.default_basepoint(), 0));
    CHECK(got == want);
    gate.ok &= got == want;
    if (e.diagram.name == "trefoil")
      for (auto& [iq, dd] : got) trefoil_total += dd;
  }
  CHECK(trefoil_total == 3);
  gate.ok &= trefoil_total == 3;
}

TEST_CASE("criterion 11: class-1 variant") {
  Gate gate{"11 class-1 d^2, no 1->1, move invariance"};
  int diagrams = 0;
  for (const auto& e : corpus()) {
    if (!e.class1 || e.diagram.n() > 5) continue;
    diagrams++;
    CAPTURE(e.diagram.name);
    auto results = run_checks(e.diagram, {"d2", "parity"});
    for (auto& r : results) {
      CHECK(r.pass);
      gate.ok &= r.pass;
    }
  }
  CHECK(diagrams >= 4);
  gate.ok &= diagrams >= 4;

  // move invariance with P tracked through an untouched anchor dart
  auto poly_at = [&](const DiagramRP2& d, int anchor_arc, int anchor_end) {
    Geometry g(d);
    int dart = 2 * (2 * anchor_arc) + anchor_end;
    FaceRef P{g.cover().orbit_of_face[g.cover().face_of[dart]]};
    return poincare(homology_dims(build_class1_complex(g, dy("hf"), P)));
  };
  int tested = 0;
  for (auto& mp : generate_move_pairs()) {
    if (validate(mp.before).total_class != 1) continue;
    if (mp.move == "R5" || mp.move == "R4" || mp.move == "R4pull") continue;  // arcs re-glued
    // anchor: an arc untouched by the move (same endpoints before and after)
    int anchor = -1;
    for (int a = 0; a < mp.before.num_arcs(); a++) {
      if (a < mp.after.num_arcs() && mp.before.arcs[a].end[0] == mp.after.arcs[a].end[0] &&
          mp.before.arcs[a].end[1] == mp.after.arcs[a].end[1]) {
        anchor = a;
        break;
      }
    }
    if (anchor < 0) continue;
    CAPTURE(mp.base, mp.move, anchor);
    bool ok;
    try {
      ok = poly_at(mp.before, anchor, 0) == poly_at(mp.after, anchor, 0);
    } catch (const std::exception&) {
      continue;  // degenerate class-1 configuration; not part of the gate
    }
    CHECK(ok);
    gate.ok &= ok;
    tested++;
  }
  CAPTURE(tested);
  CHECK(tested >= 3);
  gate.ok &= tested >= 3;
}
