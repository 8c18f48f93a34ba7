#include "trackcube/gf2.hpp"

namespace trackcube {

int gf2_rank(std::vector<BitVec> rows) {
  int rank = 0;
  size_t nrows = rows.size();
  int cols = nrows ? rows[0].size() : 0;
  for (int c = 0; c < cols && rank < (int)nrows; ++c) {
    int pivot = -1;
    for (size_t r = rank; r < nrows; ++r)
      if (rows[r].get(c)) {
        pivot = (int)r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < nrows; ++r)
      if ((int)r != rank && rows[r].get(c)) rows[r] = rows[r] ^ rows[rank];
    ++rank;
  }
  return rank;
}

std::optional<BitVec> gf2_solve(std::vector<BitVec> rows, BitVec rhs, int cols) {
  int nrows = (int)rows.size();
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols && rank < nrows; ++c) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r)
      if (rows[r].get(c)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    bool bp = rhs.get(rank);
    bool bv = rhs.get(pivot);
    rhs.set(rank, bv);
    rhs.set(pivot, bp);
    for (int r = 0; r < nrows; ++r)
      if (r != rank && rows[r].get(c)) {
        rows[r] = rows[r] ^ rows[rank];
        rhs.set(r, rhs.get(r) ^ rhs.get(rank));
      }
    pivot_col.push_back(c);
    ++rank;
  }
  for (int r = rank; r < nrows; ++r)
    if (rhs.get(r)) return std::nullopt;
  BitVec x(cols);
  for (int r = 0; r < rank; ++r)
    if (rhs.get(r)) x.set(pivot_col[r]);
  return x;
}

} // namespace trackcube
