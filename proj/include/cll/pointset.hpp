#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "cll/numeric.hpp"

namespace cll {

// Exact points whose coordinates are known (from vertex bounds) to fit well
// inside int64 are stored as flat rows for fast hashing and sorting. The pack
// decision is made per container from an a-priori coordinate bound, so nothing
// is ever truncated.

inline bool fits_packed(const Int& coordinate_bound) {
  static const Int limit = Int(1) << 60;
  return coordinate_bound < limit;
}

inline void pack_row(const IVec& x, int64_t* out) {
  for (size_t i = 0; i < x.size(); ++i) out[i] = mpz_get_si(x[i].get_mpz_t());
}

inline IVec unpack_row(const int64_t* row, size_t stride) {
  IVec x(stride);
  for (size_t i = 0; i < stride; ++i) x[i] = Int(static_cast<long>(row[i]));
  return x;
}

struct BytesHash {
  using is_transparent = void;
  size_t operator()(std::string_view sv) const {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : sv) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
  size_t operator()(const std::string& s) const { return (*this)(std::string_view(s)); }
};

struct BytesEq {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const { return a == b; }
};

/// Membership set over points of a fixed length. Packed mode hashes raw rows;
/// fallback mode keeps exact big-integer vectors.
class PointSet {
 public:
  PointSet(size_t stride, bool packed) : stride_(stride), packed_(packed) {}

  void insert(const IVec& x) {
    if (packed_) {
      std::string key(stride_ * sizeof(int64_t), '\0');
      pack_row(x, reinterpret_cast<int64_t*>(key.data()));
      packed_set_.insert(std::move(key));
    } else {
      big_set_.insert(x);
    }
  }

  void insert_packed(const int64_t* row) {
    packed_set_.insert(std::string(reinterpret_cast<const char*>(row),
                                   stride_ * sizeof(int64_t)));
  }

  bool contains(const IVec& x) const {
    if (!packed_) return big_set_.count(x) != 0;
    int64_t buf[kMaxStride];
    pack_row(x, buf);
    return contains_packed(buf);
  }

  bool contains_packed(const int64_t* row) const {
    std::string_view sv(reinterpret_cast<const char*>(row), stride_ * sizeof(int64_t));
    return packed_set_.find(sv) != packed_set_.end();
  }

  size_t size() const { return packed_ ? packed_set_.size() : big_set_.size(); }
  bool packed() const { return packed_; }

  static constexpr size_t kMaxStride = 64;

 private:
  size_t stride_;
  bool packed_;
  std::unordered_set<std::string, BytesHash, BytesEq> packed_set_;
  std::set<IVec> big_set_;
};

/// Append-only store for one enumeration level, sortable into lex order.
class PointBuffer {
 public:
  PointBuffer(size_t stride, bool packed) : stride_(stride), packed_(packed) {}

  void append(const IVec& x) {
    if (packed_) {
      size_t at = flat_.size();
      flat_.resize(at + stride_);
      pack_row(x, flat_.data() + at);
    } else {
      big_.push_back(x);
    }
  }

  size_t size() const { return packed_ ? flat_.size() / stride_ : big_.size(); }
  bool packed() const { return packed_; }
  size_t stride() const { return stride_; }

  const int64_t* row(size_t i) const { return flat_.data() + i * stride_; }

  IVec get(size_t i) const {
    return packed_ ? unpack_row(row(i), stride_) : big_[i];
  }

  void sort_lex() {
    if (!packed_) {
      std::sort(big_.begin(), big_.end(), ivec_lex_less);
      return;
    }
    size_t count = size();
    std::vector<size_t> perm(count);
    for (size_t i = 0; i < count; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
      return std::lexicographical_compare(row(a), row(a) + stride_, row(b),
                                          row(b) + stride_);
    });
    std::vector<int64_t> next(flat_.size());
    for (size_t i = 0; i < count; ++i)
      std::memcpy(next.data() + i * stride_, row(perm[i]), stride_ * sizeof(int64_t));
    flat_ = std::move(next);
  }

  void dedupe_sorted() {
    if (!packed_) {
      big_.erase(std::unique(big_.begin(), big_.end()), big_.end());
      return;
    }
    size_t count = size();
    size_t out = 0;
    for (size_t i = 0; i < count; ++i) {
      if (out > 0 &&
          std::memcmp(row(out - 1), row(i), stride_ * sizeof(int64_t)) == 0)
        continue;
      if (out != i)
        std::memcpy(flat_.data() + out * stride_, row(i), stride_ * sizeof(int64_t));
      ++out;
    }
    flat_.resize(out * stride_);
  }

 private:
  size_t stride_;
  bool packed_;
  std::vector<int64_t> flat_;
  std::vector<IVec> big_;
};

}  // namespace cll
