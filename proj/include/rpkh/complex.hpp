#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rpkh/algebra.hpp"
#include "rpkh/smoothing.hpp"

namespace rpkh {

enum class EdgeKind { Merge, Split, OneToOne };

// One edge of the cube of resolutions: a single bit flips 0 -> 1. Circle
// indices refer to the two smoothings' own labelings.
struct CubeEdge {
  State from, to;
  int crossing = -1;
  EdgeKind kind = EdgeKind::OneToOne;
  int merge_a = -1, merge_b = -1, merge_target = -1;
  int split_src = -1, split_a = -1, split_b = -1;
  int twist_src = -1, twist_dst = -1;
};

CubeEdge classify_edge(const DiagramIndex& idx, const Smoothing& sm, const Smoothing& sm2,
                       int crossing);

enum class Variant { Reduced, Unreduced, Class1 };

// Generators of one state: x tensor labels, where x runs over the parity
// factor V_{e_s(P)} and one v+/v- label sits on each free tensor position.
// Generator index = x_index * 2^nfree + label bits (position 0 most
// significant); v+ = 0, v- = 1.
struct StateBlock {
  State s;
  int e = 0;       // e_s(P)
  int dimVe = 0;   // dim V_{e}
  int nfree = 0;   // number of free V factors
  int offset = 0;  // first generator index within the level
  int ve_circle = -1;              // circle carrying V_e (-1: background)
  std::vector<int> free_circles;   // smoothing circle index per tensor position
  std::vector<int> pos_of_circle;  // inverse map; -1 for the V_e circle

  int dim() const { return dimVe << nfree; }
};

struct ChainComplexBigraded {
  Variant variant = Variant::Reduced;
  int n = 0, n_plus = 0, n_minus = 0;
  Dyad dyad;
  FaceRef basepoint;
  int marked_arc = -1;  // reduced only

  struct Level {
    std::vector<StateBlock> blocks;  // states of this weight, lexicographic
    int dim = 0;
    std::vector<int> qdeg;               // per generator, after the global shift
    std::map<uint32_t, int> block_index;  // state bits -> index into blocks
  };
  std::vector<Level> levels;  // level li holds homological degree li - n_minus
  // diffs[li]: sparse entries (row in level li, col in level li+1)
  std::vector<std::vector<std::pair<int, int>>> diffs;

  int min_i() const { return -n_minus; }
  int max_i() const { return n - n_minus; }
  int num_levels() const { return static_cast<int>(levels.size()); }
  const StateBlock* block_of_state(int li, const State& s) const;
};

ChainComplexBigraded build_reduced_complex(const Geometry& g, const Dyad& a, FaceRef P,
                                           int marked_arc);
ChainComplexBigraded build_unreduced_complex(const Geometry& g, const Dyad& a, FaceRef P);
ChainComplexBigraded build_class1_complex(const Geometry& g, const Dyad& a, FaceRef P);

struct D2Report {
  bool ok = true;
  int level = -1, row = -1, col = -1;  // witness when !ok
  std::string str() const;
};

D2Report verify_d_squared_report(const ChainComplexBigraded& C);
bool verify_d_squared(const ChainComplexBigraded& C);

// The marked-point transport: a chain isomorphism between the reduced
// complexes for marked arcs M and M2. Entries are per level, (row, col)
// with rows indexing the M complex and cols the M2 complex.
struct ChainMap {
  std::vector<std::vector<std::pair<int, int>>> entries;
};

ChainMap remark_isomorphism(const Geometry& g, const ChainComplexBigraded& dom,
                            const ChainComplexBigraded& cod);

// Checks phi d = d' phi and invertibility.
bool is_chain_iso(const ChainComplexBigraded& dom, const ChainComplexBigraded& cod,
                  const ChainMap& phi);

// Debug serialization: generators plus nonzero differential entries.
std::string complex_to_json(const ChainComplexBigraded& C);

}  // namespace rpkh
