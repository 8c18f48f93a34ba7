#include "trackcube/bits.hpp"

#include <bit>

namespace trackcube {

int BitVec::count() const {
  int c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool BitVec::any() const {
  for (uint64_t w : w_)
    if (w) return true;
  return false;
}

bool BitVec::subset_of(const BitVec& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

bool BitVec::intersects(const BitVec& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

void BitVec::trim() {
  if (n_ & 63) w_.back() &= (1ULL << (n_ & 63)) - 1;
}

BitVec BitVec::operator~() const {
  BitVec r(n_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
  r.trim();
  return r;
}

BitVec BitVec::operator&(const BitVec& o) const {
  BitVec r(n_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
  return r;
}

BitVec BitVec::operator|(const BitVec& o) const {
  BitVec r(n_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
  return r;
}

BitVec BitVec::operator^(const BitVec& o) const {
  BitVec r(n_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] ^ o.w_[i];
  return r;
}

bool BitVec::operator<(const BitVec& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (size_t i = w_.size(); i-- > 0;)
    if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
  return false;
}

int BitVec::first() const { return next(-1); }

int BitVec::next(int after) const {
  int i = after + 1;
  if (i >= n_) return -1;
  size_t wi = i >> 6;
  uint64_t w = w_[wi] >> (i & 63);
  if (w) return i + std::countr_zero(w);
  for (++wi; wi < w_.size(); ++wi)
    if (w_[wi]) return int(wi << 6) + std::countr_zero(w_[wi]);
  return -1;
}

size_t BitVec::hash() const {
  uint64_t h = 1469598103934665603ULL ^ uint64_t(n_);
  for (uint64_t w : w_) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return size_t(h);
}

void BitMatrix::transitive_close() {
  // Floyd-Warshall over bit rows: if i reaches k, i also reaches row(k).
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < n_; ++i)
      if (rows_[i].get(k)) rows_[i] = rows_[i] | rows_[k];
}

} // namespace trackcube
