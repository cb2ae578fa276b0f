#pragma once

#include "rpkh/algebra.hpp"
#include "rpkh/laurent.hpp"
#include "rpkh/smoothing.hpp"

namespace rpkh {

// Even/odd Kauffman bracket by skein recursion, resolving crossings in index
// order: <L> = <L_0> - q <L_1>, with base case (q + q^{-1})^{k-1} filtered by
// the encircling parity of P. Runs through exactly 2^n leaves.
LaurentQ bracket(const Geometry& g, FaceRef P, int parity);

// Total Kauffman bracket: same recursion with the unconditional base case.
LaurentQ bracket_total(const Geometry& g, FaceRef P);

// J_i(L) = (-1)^{n_-} q^{n_+ - 2 n_-} <L>_i with P taken in R0.
LaurentQ jones(const Geometry& g, int parity);

// chi(Kh^a) == qdim(V0) J_0 + qdim(V1) J_1, elimination side against the
// skein recursion side.
bool check_euler(const Geometry& g, const Dyad& a);

}  // namespace rpkh
