#pragma once

#include <cstdint>
#include <vector>

namespace rpkh {

// Dense bit matrix over F2, rows packed into 64-bit words.
// Used for rank computations on the q-homogeneous slices of differentials;
// those stay small because the grading splits the complex finely.
struct BitMatrix {
  int rows = 0, cols = 0;
  int words = 0;
  std::vector<uint64_t> data;  // rows * words

  BitMatrix() = default;
  BitMatrix(int r, int c);

  void set(int r, int c);
  bool get(int r, int c) const;
  uint64_t* row(int r) { return data.data() + static_cast<size_t>(r) * words; }
  const uint64_t* row(int r) const { return data.data() + static_cast<size_t>(r) * words; }
  void xor_row(int dst, int src);

  // Gaussian elimination; destroys the matrix contents.
  int rank_destructive();
  int rank() const;
};

// Solves the homogeneous system M x = 0; returns a basis of the kernel
// as bit-vectors of length cols.
std::vector<std::vector<uint8_t>> kernel_basis(const BitMatrix& m);

}  // namespace rpkh
