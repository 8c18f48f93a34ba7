#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace trackcube {

// Fixed-width bit vector. Used for region sets, vertex sets and ultrafilter
// orientations, all of desk scale (a few hundred bits at most).
class BitVec {
public:
  BitVec() = default;
  explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }
  void set(int i, bool v = true) {
    if (v)
      w_[i >> 6] |= 1ULL << (i & 63);
    else
      w_[i >> 6] &= ~(1ULL << (i & 63));
  }
  void flip(int i) { w_[i >> 6] ^= 1ULL << (i & 63); }

  int count() const;
  bool any() const;
  bool none() const { return !any(); }
  // this ⊆ other
  bool subset_of(const BitVec& o) const;
  bool intersects(const BitVec& o) const;

  BitVec operator~() const;
  BitVec operator&(const BitVec& o) const;
  BitVec operator|(const BitVec& o) const;
  BitVec operator^(const BitVec& o) const;
  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }
  bool operator<(const BitVec& o) const; // lexicographic, for deterministic keys

  // index of lowest set bit, -1 if none
  int first() const;
  int next(int after) const;

  template <typename F> void for_each(F&& f) const {
    for (int i = first(); i >= 0; i = next(i)) f(i);
  }

  size_t hash() const;
  const std::vector<uint64_t>& words() const { return w_; }

private:
  void trim();
  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitVecHash {
  size_t operator()(const BitVec& b) const { return b.hash(); }
};

// Dense square boolean matrix (strict order relations, crossing tables).
class BitMatrix {
public:
  BitMatrix() = default;
  explicit BitMatrix(int n) : n_(n), rows_(n, BitVec(n)) {}
  int size() const { return n_; }
  bool get(int i, int j) const { return rows_[i].get(j); }
  void set(int i, int j, bool v = true) { rows_[i].set(j, v); }
  const BitVec& row(int i) const { return rows_[i]; }
  BitVec& row(int i) { return rows_[i]; }
  bool operator==(const BitMatrix& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  // reachability closure of a relation given as this matrix
  void transitive_close();

private:
  int n_ = 0;
  std::vector<BitVec> rows_;
};

} // namespace trackcube
