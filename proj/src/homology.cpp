#include "rpkh/homology.hpp"

#include <stdexcept>
#include <unordered_map>

namespace rpkh {

namespace {

// rank of diffs[li] restricted to the generators of quantum degree q
int slice_rank(const ChainComplexBigraded& C, int li, int q) {
  const auto& L1 = C.levels[li];
  const auto& L2 = C.levels[li + 1];
  std::unordered_map<int, int> rowid, colid;
  for (int i = 0; i < L1.dim; i++)
    if (L1.qdeg[i] == q) rowid.emplace(i, static_cast<int>(rowid.size()));
  for (int i = 0; i < L2.dim; i++)
    if (L2.qdeg[i] == q) colid.emplace(i, static_cast<int>(colid.size()));
  if (rowid.empty() || colid.empty()) return 0;
  BitMatrix m(static_cast<int>(rowid.size()), static_cast<int>(colid.size()));
  for (auto& [r, c] : C.diffs[li]) {
    auto it = rowid.find(r);
    if (it == rowid.end()) continue;
    auto jt = colid.find(c);
    if (jt == colid.end()) throw std::runtime_error("differential mixes quantum degrees");
    m.set(it->second, jt->second);
  }
  return m.rank_destructive();
}

// rank of the whole diffs[li] block, ignoring the q grading
int level_rank(const ChainComplexBigraded& C, int li) {
  int rows = C.levels[li].dim, cols = C.levels[li + 1].dim;
  if (rows == 0 || cols == 0) return 0;
  BitMatrix m(rows, cols);
  for (auto& [r, c] : C.diffs[li]) m.set(r, c);
  return m.rank_destructive();
}

}  // namespace

DimTable chain_dims(const ChainComplexBigraded& C) {
  DimTable t;
  for (int li = 0; li < C.num_levels(); li++)
    for (int q : C.levels[li].qdeg) t[{li - C.n_minus, q}]++;
  return t;
}

DimTable homology_dims(const ChainComplexBigraded& C) {
  return homology_dims(C, C.n <= 12);
}

DimTable homology_dims(const ChainComplexBigraded& C, bool check_d2) {
  if (check_d2) {
    D2Report rep = verify_d_squared_report(C);
    if (!rep.ok) throw std::runtime_error(rep.str());
  }
  DimTable dims;
  if (C.variant == Variant::Class1) {
    // singly graded: the class-1 differential mixes quantum degrees
    for (int li = 0; li < C.num_levels(); li++) {
      int r_out = li < C.num_levels() - 1 ? level_rank(C, li) : 0;
      int r_in = li > 0 ? level_rank(C, li - 1) : 0;
      int dim = C.levels[li].dim - r_out - r_in;
      if (dim < 0) throw std::runtime_error("negative homology dimension");
      if (dim > 0) dims[{li - C.n_minus, 0}] = dim;
    }
    return dims;
  }
  for (int li = 0; li < C.num_levels(); li++) {
    std::map<int, int> count;
    for (int q : C.levels[li].qdeg) count[q]++;
    for (auto& [q, cnt] : count) {
      int r_out = li < C.num_levels() - 1 ? slice_rank(C, li, q) : 0;
      int r_in = li > 0 ? slice_rank(C, li - 1, q) : 0;
      int dim = cnt - r_out - r_in;
      if (dim < 0) throw std::runtime_error("negative homology dimension");
      if (dim > 0) dims[{li - C.n_minus, q}] = dim;
    }
  }
  return dims;
}

PoincarePoly poincare(const DimTable& dims) {
  PoincarePoly p;
  for (auto& [iq, d] : dims) p.add(d, iq.first, iq.second);
  return p;
}

LaurentQ euler_characteristic(const PoincarePoly& p) { return p.at_t_minus_one(); }

}  // namespace rpkh
