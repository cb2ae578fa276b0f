#pragma once

#include <string>
#include <vector>

#include "rpkh/laurent.hpp"

namespace rpkh {

// Finite dimensional graded vector space over F2 with a named generator basis.
struct GradedSpaceF2 {
  std::vector<std::pair<std::string, int>> gens;  // (name, quantum degree)

  int dim() const { return static_cast<int>(gens.size()); }
  int qdeg(int i) const { return gens[i].second; }
  const std::string& name(int i) const { return gens[i].first; }
  int index_of(const std::string& name) const;  // -1 if absent
};

LaurentQ qdim(const GradedSpaceF2& s);

// F2-linear map between graded spaces with a declared quantum-degree shift.
// Columns are indexed by domain generators; each column lists the codomain
// generators hit by the image.
struct LinearMapF2 {
  int dom_dim = 0, cod_dim = 0;
  int shift = -1;
  std::vector<std::vector<int>> cols;  // cols[j] = sorted codomain indices

  static LinearMapF2 zero(int dom, int cod, int shift = -1);
  bool is_zero() const;
  // Image of a sum of domain generators, as a bitset over codomain indices.
  std::vector<uint8_t> apply(const std::vector<uint8_t>& v) const;
};

// Composition b(a(x)) over F2.
LinearMapF2 compose(const LinearMapF2& b, const LinearMapF2& a);

// The theory's parameter: two graded spaces with degree -1 maps in both
// directions whose composites vanish.
struct Dyad {
  std::string name;
  GradedSpaceF2 V0, V1;
  LinearMapF2 f;  // V0 -> V1
  LinearMapF2 g;  // V1 -> V0

  const GradedSpaceF2& space(int parity) const { return parity == 0 ? V0 : V1; }
};

std::vector<std::string> dyad_validate(const Dyad& a);
Dyad dual_dyad(const Dyad& a);

// Built-in dyads: aps, a0, a1, hf, hfprime.
std::vector<Dyad> builtin_dyads();
const Dyad* find_builtin_dyad(const std::string& name);

// Labels for the Frobenius algebra V = <v+, v->. Circle labels are stored as
// bits: 0 for v+, 1 for v-. qdeg(v+) = 1, qdeg(v-) = -1.
inline int vlabel_qdeg(int bit) { return bit == 0 ? 1 : -1; }

// Frobenius algebra structure on V, on label bits. m returns -1 when the
// product vanishes (v- v- = 0); Delta(v+) = v+ v- + v- v+, Delta(v-) = v- v-.
inline int frobenius_m(int a, int b) { return a + b == 2 ? -1 : (a | b); }
inline std::vector<std::pair<int, int>> frobenius_delta(int a) {
  if (a == 0) return {{0, 1}, {1, 0}};
  return {{1, 1}};
}

// Trivial right (co)module structure of a dyad space over V: y . v+ = y,
// y . v- = 0, and Delta(y) = y tensor v-. y indexes a generator; the
// multiplication returns -1 when the action kills it.
inline int trivial_module_m(int y, int vlabel) { return vlabel == 0 ? y : -1; }
inline std::pair<int, int> trivial_comodule_delta(int y) { return {y, 1}; }

}  // namespace rpkh
