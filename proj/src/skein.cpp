#include "rpkh/skein.hpp"

#include <stdexcept>

#include "rpkh/complex.hpp"
#include "rpkh/homology.hpp"

namespace rpkh {

namespace {

// parity < 0 selects the unconditional base case
void bracket_rec(const Geometry& g, FaceRef P, int parity, State s, int next_crossing,
                 LaurentQ& acc) {
  const int n = g.diagram().n();
  if (next_crossing < n) {
    bracket_rec(g, P, parity, s, next_crossing + 1, acc);
    bracket_rec(g, P, parity, s.with_bit(next_crossing), next_crossing + 1, acc);
    return;
  }
  Smoothing sm = g.resolve(s);
  if (parity >= 0) {
    for (auto& c : sm.circles)
      if (c.crosscap_parity != 0) throw std::runtime_error("bracket requires a null homologous diagram");
    if (g.encircling_number(sm, P) != parity) return;
  }
  // leaf weight (-q)^{#1(s)} (q + 1/q)^{k-1}
  LaurentQ term = LaurentQ::loop().pow(sm.k() - 1);
  int w = s.weight();
  acc += (w % 2 == 0) ? term * LaurentQ::monomial(1, w) : term * LaurentQ::monomial(-1, w);
}

}  // namespace

LaurentQ bracket(const Geometry& g, FaceRef P, int parity) {
  if (g.diagram().k() % 2 != 0) throw std::runtime_error("bracket requires a null homologous diagram");
  if (g.diagram().num_edges() == 0) throw std::runtime_error("empty diagram has no bracket");
  LaurentQ acc;
  bracket_rec(g, P, parity, g.all_zero_state(), 0, acc);
  return acc;
}

LaurentQ bracket_total(const Geometry& g, FaceRef P) {
  if (g.diagram().num_edges() == 0) throw std::runtime_error("empty diagram has no bracket");
  LaurentQ acc;
  bracket_rec(g, P, -1, g.all_zero_state(), 0, acc);
  return acc;
}

namespace {

LaurentQ jones_at(const Geometry& g, FaceRef P, int parity) {
  auto [np, nm] = crossing_signs(g.diagram());
  LaurentQ b = bracket(g, P, parity);
  LaurentQ norm = LaurentQ::monomial(nm % 2 == 0 ? 1 : -1, np - 2 * nm);
  return norm * b;
}

}  // namespace

LaurentQ jones(const Geometry& g, int parity) {
  return jones_at(g, g.canonical_base_face(), parity);
}

bool check_euler(const Geometry& g, const Dyad& a) {
  // both sides evaluated at the same P; the identity is skein-local, so it
  // holds for any fixed basepoint
  FaceRef P = g.default_basepoint();
  ChainComplexBigraded C = build_reduced_complex(g, a, P, g.default_marked_arc());
  LaurentQ chi = euler_characteristic(poincare(homology_dims(C)));
  LaurentQ rhs = qdim(a.V0) * jones_at(g, P, 0) + qdim(a.V1) * jones_at(g, P, 1);
  return chi == rhs;
}

}  // namespace rpkh
