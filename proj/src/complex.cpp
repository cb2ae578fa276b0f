#include "rpkh/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rpkh/f2.hpp"

namespace rpkh {

namespace {

// state order within a level: lexicographic on the bit string s_0 s_1 ...
std::vector<State> states_of_weight(int n, int w) {
  std::vector<State> out;
  for (uint32_t bits = 0; bits < (uint32_t(1) << n); bits++) {
    State s{bits, n};
    if (s.weight() == w) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [n](const State& x, const State& y) {
    for (int i = 0; i < n; i++)
      if (x.bit(i) != y.bit(i)) return x.bit(i) < y.bit(i);
    return false;
  });
  return out;
}

}  // namespace

CubeEdge classify_edge(const DiagramIndex& idx, const Smoothing& sm, const Smoothing& sm2,
                       int crossing) {
  CubeEdge e;
  e.from = sm.state;
  e.to = sm2.state;
  e.crossing = crossing;
  int k1 = sm.k(), k2 = sm2.k();
  if (k2 == k1 - 1) {
    e.kind = EdgeKind::Merge;
    // the circle of sm2 assembled from two circles of sm
    for (int j = 0; j < k2; j++) {
      std::set<int> src;
      for (int a : sm2.circles[j].arcs) src.insert(sm.circle_of[a]);
      if (src.size() == 2) {
        e.merge_target = j;
        auto it = src.begin();
        e.merge_a = *it++;
        e.merge_b = *it;
      }
    }
    if (e.merge_target < 0) throw std::runtime_error("merge edge without a merged circle");
  } else if (k2 == k1 + 1) {
    e.kind = EdgeKind::Split;
    for (int i = 0; i < k1; i++) {
      std::set<int> dst;
      for (int a : sm.circles[i].arcs) dst.insert(sm2.circle_of[a]);
      if (dst.size() == 2) {
        e.split_src = i;
        auto it = dst.begin();
        e.split_a = *it++;
        e.split_b = *it;
      }
    }
    if (e.split_src < 0) throw std::runtime_error("split edge without a split circle");
  } else if (k2 == k1) {
    e.kind = EdgeKind::OneToOne;
    // arc sets are unchanged, so the labelings coincide; the twisted circle
    // is the one passing the flipped crossing
    for (int i = 0; i < k1; i++)
      if (sm2.circle_of[sm.circles[i].arcs[0]] != i)
        throw std::runtime_error("1->1 edge does not preserve the circle labeling");
    int arc = idx.slot_end(crossing, 0).first;
    e.twist_src = sm.circle_of[arc];
    e.twist_dst = sm2.circle_of[arc];
  } else {
    throw std::runtime_error("cube edge changes the circle count by more than one");
  }
  return e;
}

namespace {

struct EdgeCtx {
  CubeEdge edge;
  const Smoothing *sm1, *sm2;
};

// shared construction for the three variants
struct ComplexBuilder {
  const Geometry& g;
  const Dyad& dyad;
  FaceRef P;
  Variant variant;
  int marked_arc = -1;

  ChainComplexBigraded C;
  std::vector<Smoothing> smoothings;  // by state bits
  std::vector<int> esp;               // e_s(P) by state bits

  ComplexBuilder(const Geometry& gg, const Dyad& aa, FaceRef pp, Variant vv, int m)
      : g(gg), dyad(aa), P(pp), variant(vv), marked_arc(m) {}

  void run() {
    const DiagramRP2& d = g.diagram();
    const int n = d.n();
    if (d.num_edges() == 0) throw std::runtime_error("empty diagram has no chain complex");
    int cls = d.k() % 2;
    if (variant == Variant::Class1) {
      if (cls != 1) throw std::runtime_error("class mismatch: diagram is not class 1 in H1(RP3)");
    } else {
      if (cls != 0) throw std::runtime_error("class mismatch: diagram is not null homologous");
    }

    C.variant = variant;
    C.n = n;
    C.dyad = dyad;
    C.basepoint = P;
    C.marked_arc = marked_arc;
    auto [np, nm] = crossing_signs(d);
    C.n_plus = np;
    C.n_minus = nm;

    smoothings.resize(size_t(1) << n);
    esp.resize(size_t(1) << n);
    for (uint32_t bits = 0; bits < (uint32_t(1) << n); bits++) {
      smoothings[bits] = g.resolve(State{bits, n});
      const Smoothing& sm = smoothings[bits];
      if (variant == Variant::Class1) {
        int specials = 0;
        for (auto& c : sm.circles) specials += c.crosscap_parity;
        if (specials != 1) throw std::runtime_error("class-1 smoothing without a unique special circle");
      } else {
        for (auto& c : sm.circles)
          if (c.crosscap_parity != 0)
            throw std::runtime_error("smoothing of a null homologous diagram has an essential circle");
      }
      esp[bits] = g.encircling_number(sm, P);
    }

    C.levels.resize(n + 1);
    for (int w = 0; w <= n; w++) build_level(w);
    C.diffs.assign(std::max(n, 0), {});
    for (int w = 0; w < n; w++) build_diff(w);
  }

  // tensor positions for a state
  void fill_block(StateBlock& b) {
    const Smoothing& sm = smoothings[b.s.bits];
    b.e = esp[b.s.bits];
    b.dimVe = dyad.space(b.e).dim();
    b.pos_of_circle.assign(sm.k(), -1);
    switch (variant) {
      case Variant::Reduced:
        b.ve_circle = sm.circle_of[marked_arc];
        break;
      case Variant::Unreduced:
        b.ve_circle = -1;
        break;
      case Variant::Class1:
        b.ve_circle = sm.special_circle();
        break;
    }
    for (int i = 0; i < sm.k(); i++) {
      if (i == b.ve_circle) continue;
      b.pos_of_circle[i] = static_cast<int>(b.free_circles.size());
      b.free_circles.push_back(i);
    }
    b.nfree = static_cast<int>(b.free_circles.size());
  }

  void build_level(int w) {
    auto& L = C.levels[w];
    int i_hom = w - C.n_minus;
    int shift = i_hom + C.n_plus - C.n_minus;
    for (const State& s : states_of_weight(C.n, w)) {
      StateBlock b;
      b.s = s;
      fill_block(b);
      b.offset = L.dim;
      L.dim += b.dim();
      L.block_index[s.bits] = static_cast<int>(L.blocks.size());
      L.blocks.push_back(std::move(b));
    }
    L.qdeg.resize(L.dim);
    for (auto& b : L.blocks) {
      const GradedSpaceF2& Ve = dyad.space(b.e);
      for (int x = 0; x < b.dimVe; x++) {
        for (int bits = 0; bits < (1 << b.nfree); bits++) {
          int q = Ve.qdeg(x) + shift;
          for (int p = 0; p < b.nfree; p++) q += vlabel_qdeg((bits >> (b.nfree - 1 - p)) & 1);
          L.qdeg[b.offset + x * (1 << b.nfree) + bits] = q;
        }
      }
    }
  }

  int label_of(int bits, int nfree, int pos) { return (bits >> (nfree - 1 - pos)) & 1; }

  void build_diff(int w) {
    auto& entries = C.diffs[w];
    const auto& L1 = C.levels[w];
    for (const StateBlock& b1 : L1.blocks) {
      for (int c = 0; c < C.n; c++) {
        if (b1.s.bit(c)) continue;
        State s2 = b1.s.with_bit(c);
        const StateBlock* b2 = C.block_of_state(w + 1, s2);
        if (!b2) throw std::runtime_error("missing codomain block");
        emit_edge_maps(b1, *b2, c, entries);
      }
    }
    // The main theory's differential preserves the quantum degree after the
    // global shift. The class-1 differential does not: the maps m(f x id)
    // and Delta f on parity-flipping edges drop the intrinsic degree by 2,
    // so that variant is graded by homological degree only.
    if (variant != Variant::Class1) {
      const auto& L2 = C.levels[w + 1];
      for (auto& [r, col] : entries)
        if (L1.qdeg[r] != L2.qdeg[col])
          throw std::runtime_error("differential entry does not preserve the quantum degree");
    }
  }

  // Correspondence of untouched circles between两 smoothings by shared arc.
  // Returns for each circle index of sm1 the circle index of sm2 containing
  // its first arc.
  std::vector<int> circle_corr(const Smoothing& sm1, const Smoothing& sm2) {
    std::vector<int> corr(sm1.k());
    for (int i = 0; i < sm1.k(); i++) corr[i] = sm2.circle_of[sm1.circles[i].arcs[0]];
    return corr;
  }

  void emit_edge_maps(const StateBlock& b1, const StateBlock& b2, int c,
                      std::vector<std::pair<int, int>>& out) {
    const Smoothing& sm1 = smoothings[b1.s.bits];
    const Smoothing& sm2 = smoothings[b2.s.bits];
    CubeEdge edge = classify_edge(g.index(), sm1, sm2, c);
    std::vector<int> corr = circle_corr(sm1, sm2);

    const int nf1 = b1.nfree, nf2 = b2.nfree;
    const int e1 = b1.e, e2 = b2.e;

    // position map for untouched circles: dom position -> cod position
    auto cod_pos = [&](int dom_circle) { return b2.pos_of_circle[corr[dom_circle]]; };

    // label bits builder for codomain
    auto emit = [&](int row_local, int x2, int bits2) {
      int row = b1.offset + row_local;
      int col = b2.offset + (x2 << nf2) + bits2;
      out.push_back({row, col});
    };

    if (edge.kind == EdgeKind::OneToOne) {
      if (variant == Variant::Class1)
        throw std::runtime_error("1->1 bifurcation in a class-1 complex");
      if (e2 != (e1 ^ 1)) throw std::runtime_error("1->1 edge does not flip the encircling parity");
      const LinearMapF2& fg = e1 == 0 ? dyad.f : dyad.g;
      for (int x = 0; x < b1.dimVe; x++) {
        for (int bits = 0; bits < (1 << nf1); bits++) {
          int bits2 = 0;
          for (int p = 0; p < nf1; p++) {
            int circle = b1.free_circles[p];
            int p2 = cod_pos(circle);
            bits2 |= label_of(bits, nf1, p) << (nf2 - 1 - p2);
          }
          for (int x2 : fg.cols[x]) emit((x << nf1) + bits, x2, bits2);
        }
      }
      return;
    }

    if (e1 != e2 && variant != Variant::Class1)
      throw std::runtime_error("merge/split edge changes the encircling parity");

    if (edge.kind == EdgeKind::Merge) {
      int ia = edge.merge_a, ib = edge.merge_b;
      bool ve_involved = (ia == b1.ve_circle || ib == b1.ve_circle) && b1.ve_circle >= 0;
      if (ve_involved) {
        int other = ia == b1.ve_circle ? ib : ia;
        int p = b1.pos_of_circle[other];
        bool parity_flip = variant == Variant::Class1 && g.encircles(sm1.circles[other], P);
        if (variant == Variant::Class1 && e2 != (e1 ^ (parity_flip ? 1 : 0)))
          throw std::runtime_error("class-1 merge parity bookkeeping mismatch");
        for (int x = 0; x < b1.dimVe; x++) {
          for (int bits = 0; bits < (1 << nf1); bits++) {
            if (trivial_module_m(x, label_of(bits, nf1, p)) < 0) continue;
            int bits2 = 0;
            for (int pp = 0; pp < nf1; pp++) {
              if (pp == p) continue;
              int p2 = cod_pos(b1.free_circles[pp]);
              bits2 |= label_of(bits, nf1, pp) << (nf2 - 1 - p2);
            }
            if (!parity_flip) {
              emit((x << nf1) + bits, x, bits2);
            } else {
              // m composed with (f or g) tensor id on the special factor
              const LinearMapF2& fg = e1 == 0 ? dyad.f : dyad.g;
              for (int x2 : fg.cols[x]) emit((x << nf1) + bits, x2, bits2);
            }
          }
        }
      } else {
        int pa = b1.pos_of_circle[ia], pb = b1.pos_of_circle[ib];
        int r = b2.pos_of_circle[edge.merge_target];
        for (int x = 0; x < b1.dimVe; x++) {
          for (int bits = 0; bits < (1 << nf1); bits++) {
            int lr = frobenius_m(label_of(bits, nf1, pa), label_of(bits, nf1, pb));
            if (lr < 0) continue;
            int bits2 = lr << (nf2 - 1 - r);
            for (int pp = 0; pp < nf1; pp++) {
              if (pp == pa || pp == pb) continue;
              int p2 = cod_pos(b1.free_circles[pp]);
              bits2 |= label_of(bits, nf1, pp) << (nf2 - 1 - p2);
            }
            emit((x << nf1) + bits, x, bits2);
          }
        }
      }
      return;
    }

    // Split
    int src = edge.split_src;
    bool ve_involved = src == b1.ve_circle && b1.ve_circle >= 0;
    if (ve_involved) {
      // the piece keeping the distinguished role
      int keep, born;
      if (variant == Variant::Reduced) {
        keep = sm2.circle_of[marked_arc];
      } else {  // Class1: the special circle keeps the role
        keep = sm2.circles[edge.split_a].crosscap_parity == 1 ? edge.split_a : edge.split_b;
      }
      born = keep == edge.split_a ? edge.split_b : edge.split_a;
      if (b2.ve_circle != keep) throw std::runtime_error("split bookkeeping mismatch");
      int r = b2.pos_of_circle[born];
      bool parity_flip = variant == Variant::Class1 && g.encircles(sm2.circles[born], P);
      if (variant == Variant::Class1 && e2 != (e1 ^ (parity_flip ? 1 : 0)))
        throw std::runtime_error("class-1 split parity bookkeeping mismatch");
      for (int x = 0; x < b1.dimVe; x++) {
        for (int bits = 0; bits < (1 << nf1); bits++) {
          // comultiplication of the trivial comodule puts v- on the new circle
          int bits2 = trivial_comodule_delta(x).second << (nf2 - 1 - r);
          for (int pp = 0; pp < nf1; pp++) {
            int p2 = cod_pos(b1.free_circles[pp]);
            bits2 |= label_of(bits, nf1, pp) << (nf2 - 1 - p2);
          }
          if (!parity_flip) {
            emit((x << nf1) + bits, x, bits2);
          } else {
            const LinearMapF2& fg = e1 == 0 ? dyad.f : dyad.g;
            for (int x2 : fg.cols[x]) emit((x << nf1) + bits, x2, bits2);
          }
        }
      }
    } else {
      int p = b1.pos_of_circle[src];
      int ra = b2.pos_of_circle[edge.split_a], rb = b2.pos_of_circle[edge.split_b];
      for (int x = 0; x < b1.dimVe; x++) {
        for (int bits = 0; bits < (1 << nf1); bits++) {
          int base = 0;
          for (int pp = 0; pp < nf1; pp++) {
            if (pp == p) continue;
            int p2 = cod_pos(b1.free_circles[pp]);
            base |= label_of(bits, nf1, pp) << (nf2 - 1 - p2);
          }
          for (auto [la, lb] : frobenius_delta(label_of(bits, nf1, p)))
            emit((x << nf1) + bits, x,
                 base | (la << (nf2 - 1 - ra)) | (lb << (nf2 - 1 - rb)));
        }
      }
    }
  }
};

}  // namespace

const StateBlock* ChainComplexBigraded::block_of_state(int li, const State& s) const {
  auto it = levels[li].block_index.find(s.bits);
  return it == levels[li].block_index.end() ? nullptr : &levels[li].blocks[it->second];
}

ChainComplexBigraded build_reduced_complex(const Geometry& g, const Dyad& a, FaceRef P,
                                           int marked_arc) {
  if (marked_arc < 0 || marked_arc >= g.diagram().num_edges())
    throw std::runtime_error("marked arc invalid");
  ComplexBuilder b(g, a, P, Variant::Reduced, marked_arc);
  b.run();
  return std::move(b.C);
}

ChainComplexBigraded build_unreduced_complex(const Geometry& g, const Dyad& a, FaceRef P) {
  ComplexBuilder b(g, a, P, Variant::Unreduced, -1);
  b.run();
  return std::move(b.C);
}

ChainComplexBigraded build_class1_complex(const Geometry& g, const Dyad& a, FaceRef P) {
  ComplexBuilder b(g, a, P, Variant::Class1, -1);
  b.run();
  return std::move(b.C);
}

std::string D2Report::str() const {
  if (ok) return "d^2 = 0";
  std::ostringstream os;
  os << "d^2 != 0 at level " << level << ", generator " << row << " -> " << col;
  return os.str();
}

D2Report verify_d_squared_report(const ChainComplexBigraded& C) {
  for (int li = 0; li + 1 < static_cast<int>(C.diffs.size()); li++) {
    std::map<int, std::vector<int>> rows;  // row -> middle cols
    for (auto& [r, m] : C.diffs[li]) rows[r].push_back(m);
    // middle -> targets
    std::map<int, std::vector<int>> mid;
    for (auto& [m, t] : C.diffs[li + 1]) mid[m].push_back(t);
    for (auto& [r, mids] : rows) {
      std::set<int> acc;
      for (int m : mids)
        if (auto it = mid.find(m); it != mid.end())
          for (int t : it->second) {
            auto [pos, inserted] = acc.insert(t);
            if (!inserted) acc.erase(pos);
          }
      if (!acc.empty()) {
        D2Report rep;
        rep.ok = false;
        rep.level = li - C.n_minus;
        rep.row = r;
        rep.col = *acc.begin();
        return rep;
      }
    }
  }
  return {};
}

bool verify_d_squared(const ChainComplexBigraded& C) { return verify_d_squared_report(C).ok; }

namespace {

// exterior-algebra product of (S_B + S_i) factors over F2, monomials as bitmasks
std::set<uint32_t> eta_image(uint32_t monomial, int B, int nfree) {
  std::set<uint32_t> poly{0};
  auto mul_var = [&](const std::set<uint32_t>& p, int var) {
    std::set<uint32_t> r;
    for (uint32_t m : p) {
      if (m & (uint32_t(1) << var)) continue;  // S^2 = 0
      uint32_t t = m | (uint32_t(1) << var);
      if (!r.insert(t).second) r.erase(t);
    }
    return r;
  };
  for (int i = 0; i < nfree; i++) {
    if (!(monomial & (uint32_t(1) << i))) continue;
    if (i == B) {
      poly = mul_var(poly, B);
    } else {
      auto a = mul_var(poly, B);
      auto b = mul_var(poly, i);
      std::set<uint32_t> sum;
      for (uint32_t m : a)
        if (!sum.insert(m).second) sum.erase(m);
      for (uint32_t m : b)
        if (!sum.insert(m).second) sum.erase(m);
      poly = sum;
    }
  }
  return poly;
}

}  // namespace

ChainMap remark_isomorphism(const Geometry& g, const ChainComplexBigraded& dom,
                            const ChainComplexBigraded& cod) {
  if (dom.variant != Variant::Reduced || cod.variant != Variant::Reduced)
    throw std::runtime_error("marked point transport applies to reduced complexes");
  if (!(dom.basepoint == cod.basepoint))
    throw std::runtime_error("transport requires a common basepoint");
  int M = dom.marked_arc, M2 = cod.marked_arc;
  ChainMap phi;
  phi.entries.resize(dom.num_levels());
  for (int li = 0; li < dom.num_levels(); li++) {
    for (size_t bi = 0; bi < dom.levels[li].blocks.size(); bi++) {
      const StateBlock& b1 = dom.levels[li].blocks[bi];
      const StateBlock& b2 = cod.levels[li].blocks[bi];
      Smoothing sm = g.resolve(b1.s);
      int cm = sm.circle_of[M], cm2 = sm.circle_of[M2];
      if (cm == cm2) {
        // identical labelings: identity
        for (int idx = 0; idx < b1.dim(); idx++)
          phi.entries[li].push_back({b1.offset + idx, b2.offset + idx});
        continue;
      }
      int B = b1.pos_of_circle[cm2];  // domain position of the target circle
      for (int x = 0; x < b1.dimVe; x++) {
        for (int bits = 0; bits < (1 << b1.nfree); bits++) {
          // domain monomial with S_i present iff the label at position i is v-
          uint32_t mono = 0;
          for (int p = 0; p < b1.nfree; p++)
            if ((bits >> (b1.nfree - 1 - p)) & 1) mono |= uint32_t(1) << p;
          for (uint32_t out : eta_image(mono, B, b1.nfree)) {
            int bits2 = 0;
            for (int p = 0; p < b1.nfree; p++) {
              if (!(out & (uint32_t(1) << p))) continue;
              int circle = p == B ? cm : b1.free_circles[p];
              int p2 = b2.pos_of_circle[circle];
              bits2 |= 1 << (b2.nfree - 1 - p2);
            }
            phi.entries[li].push_back(
                {b1.offset + (x << b1.nfree) + bits, b2.offset + (x << b2.nfree) + bits2});
          }
        }
      }
    }
  }
  return phi;
}

bool is_chain_iso(const ChainComplexBigraded& dom, const ChainComplexBigraded& cod,
                  const ChainMap& phi) {
  // phi must be square per level and invertible, and commute with d
  for (int li = 0; li < dom.num_levels(); li++) {
    if (dom.levels[li].dim != cod.levels[li].dim) return false;
  }
  // commutation: phi(d x) == d'(phi x) as F2 sets
  for (int li = 0; li + 1 < dom.num_levels(); li++) {
    std::map<int, std::set<int>> d1, d2, p1, p2;
    for (auto& [r, c] : dom.diffs[li]) {
      auto [it, ins] = d1[r].insert(c);
      if (!ins) d1[r].erase(it);
    }
    for (auto& [r, c] : cod.diffs[li]) {
      auto [it, ins] = d2[r].insert(c);
      if (!ins) d2[r].erase(it);
    }
    for (auto& [r, c] : phi.entries[li]) {
      auto [it, ins] = p1[r].insert(c);
      if (!ins) p1[r].erase(it);
    }
    for (auto& [r, c] : phi.entries[li + 1]) {
      auto [it, ins] = p2[r].insert(c);
      if (!ins) p2[r].erase(it);
    }
    int dim1 = dom.levels[li].dim;
    for (int r = 0; r < dim1; r++) {
      std::set<int> lhs, rhs;
      if (auto it = d1.find(r); it != d1.end())
        for (int m : it->second)
          if (auto jt = p2.find(m); jt != p2.end())
            for (int t : jt->second) {
              auto [pos, ins] = lhs.insert(t);
              if (!ins) lhs.erase(pos);
            }
      if (auto it = p1.find(r); it != p1.end())
        for (int m : it->second)
          if (auto jt = d2.find(m); jt != d2.end())
            for (int t : jt->second) {
              auto [pos, ins] = rhs.insert(t);
              if (!ins) rhs.erase(pos);
            }
      if (lhs != rhs) return false;
    }
  }
  // invertibility per level over F2
  for (int li = 0; li < dom.num_levels(); li++) {
    int dim = dom.levels[li].dim;
    if (dim == 0) continue;
    BitMatrix m(dim, dim);
    for (auto& [r, c] : phi.entries[li]) {
      if (m.get(r, c))
        m.row(r)[c >> 6] ^= uint64_t(1) << (c & 63);
      else
        m.set(r, c);
    }
    if (m.rank_destructive() != dim) return false;
  }
  return true;
}

std::string complex_to_json(const ChainComplexBigraded& C) {
  std::ostringstream os;
  os << "{\"levels\":[";
  for (int li = 0; li < C.num_levels(); li++) {
    if (li) os << ',';
    os << "{\"i\":" << li - C.n_minus << ",\"generators\":[";
    const auto& L = C.levels[li];
    bool first = true;
    for (auto& b : L.blocks) {
      for (int idx = 0; idx < b.dim(); idx++) {
        if (!first) os << ',';
        first = false;
        os << "{\"state\":\"" << b.s.str() << "\",\"q\":" << L.qdeg[b.offset + idx] << "}";
      }
    }
    os << "]}";
  }
  os << "],\"differentials\":[";
  for (size_t li = 0; li < C.diffs.size(); li++) {
    if (li) os << ',';
    os << '[';
    for (size_t j = 0; j < C.diffs[li].size(); j++) {
      if (j) os << ',';
      os << '[' << C.diffs[li][j].first << ',' << C.diffs[li][j].second << ']';
    }
    os << ']';
  }
  os << "]}";
  return os.str();
}

}  // namespace rpkh
