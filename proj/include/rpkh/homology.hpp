#pragma once

#include <map>

#include "rpkh/complex.hpp"
#include "rpkh/f2.hpp"
#include "rpkh/laurent.hpp"

namespace rpkh {

// (homological degree, quantum degree) -> dimension
using DimTable = std::map<std::pair<int, int>, int>;

// Bigraded homology dimensions by F2 Gaussian elimination, one q-slice at a
// time (the differential is q-homogeneous). Only two adjacent differential
// blocks are inspected at once. check_d2 runs the d^2 = 0 verification
// first; the default follows the crossing count.
DimTable homology_dims(const ChainComplexBigraded& C);
DimTable homology_dims(const ChainComplexBigraded& C, bool check_d2);

DimTable chain_dims(const ChainComplexBigraded& C);

PoincarePoly poincare(const DimTable& dims);
LaurentQ euler_characteristic(const PoincarePoly& p);

}  // namespace rpkh
