#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rpkh/complex.hpp"
#include "rpkh/smoothing.hpp"

namespace rpkh {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;  // minimal failing state/edge when !pass
};

// Structural checks for one diagram. Every check throws nothing; failures
// come back with a witness string.
//
//   d2         d^2 = 0 for the built-in dyads (and the class-1 variant on
//              class-1 diagrams)
//   parity     every smoothing circle of a null homologous diagram is null
//              homologous; e_s(P) flips exactly across 1->1 edges, for all P
//   marked     all marked-point choices give one Poincare polynomial, and
//              the transport map is a chain isomorphism
//   pindep     brackets depend on P through its region parity only; region
//              parity behaves per the two-region decomposition
//   euler      chi(Kh^a) = qdim(V0) J0 + qdim(V1) J1 for built-in dyads
//   bracket    <L>_0 + <L>_1 equals the unconditional Kauffman bracket
//   unreduced  chi(unreduced) = (q + q^-1) chi(reduced)
//   sum        Kh^aps dims = Kh^a0 dims + Kh^a1 dims pointwise
//   reid       homology invariance across generated Reidemeister pairs
//   mirror     report (not assert) the mirror/dual-dyad polynomials
std::vector<CheckResult> run_checks(const DiagramRP2& d, const std::vector<std::string>& which);

std::vector<std::string> all_check_names(bool class1);

// Generates deterministic (diagram, moved diagram) pairs across the corpus,
// one entry per applied move, tagged by move kind.
struct MovePair {
  std::string base, move;
  DiagramRP2 before, after;
};
std::vector<MovePair> generate_move_pairs();

// Random dyads with both composites forced to vanish (kernel sampling).
std::vector<Dyad> random_dyads(int count, unsigned seed);

}  // namespace rpkh
