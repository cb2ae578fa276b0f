#include "rpkh/f2.hpp"

#include <cstring>

namespace rpkh {

BitMatrix::BitMatrix(int r, int c) : rows(r), cols(c), words((c + 63) / 64) {
  data.assign(static_cast<size_t>(rows) * words, 0);
}

void BitMatrix::set(int r, int c) { row(r)[c >> 6] |= uint64_t(1) << (c & 63); }

bool BitMatrix::get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1; }

void BitMatrix::xor_row(int dst, int src) {
  uint64_t* d = row(dst);
  const uint64_t* s = row(src);
  for (int w = 0; w < words; w++) d[w] ^= s[w];
}

int BitMatrix::rank_destructive() {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; c++) {
    int pivot = -1;
    for (int r = rank; r < rows; r++) {
      if (get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int w = 0; w < words; w++) std::swap(row(pivot)[w], row(rank)[w]);
    }
    for (int r = rank + 1; r < rows; r++)
      if (get(r, c)) xor_row(r, rank);
    rank++;
  }
  return rank;
}

int BitMatrix::rank() const {
  BitMatrix copy = *this;
  return copy.rank_destructive();
}

std::vector<std::vector<uint8_t>> kernel_basis(const BitMatrix& m) {
  BitMatrix a = m;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < a.cols && rank < a.rows; c++) {
    int pivot = -1;
    for (int r = rank; r < a.rows; r++) {
      if (a.get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int w = 0; w < a.words; w++) std::swap(a.row(pivot)[w], a.row(rank)[w]);
    for (int r = 0; r < a.rows; r++)
      if (r != rank && a.get(r, c)) a.xor_row(r, rank);
    pivot_col.push_back(c);
    rank++;
  }
  std::vector<uint8_t> is_pivot(a.cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<uint8_t>> basis;
  for (int free = 0; free < a.cols; free++) {
    if (is_pivot[free]) continue;
    std::vector<uint8_t> v(a.cols, 0);
    v[free] = 1;
    for (int r = 0; r < rank; r++)
      if (a.get(r, free)) v[pivot_col[r]] = 1;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace rpkh
