#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cll/errors.hpp"

namespace cll {

using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;
using IMat = std::vector<IVec>;

inline Int int_pow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

/// Largest integer <= q.
inline Int floor_rat(const Rat& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

/// Smallest integer >= q.
inline Int ceil_rat(const Rat& q) {
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Nonnegative remainder of a mod n (n > 0).
inline Int mod_floor(const Int& a, const Int& n) {
  Int out;
  mpz_fdiv_r(out.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return out;
}

inline bool fits_int64(const Int& v) {
  return v.fits_slong_p() != 0 && sizeof(long) == 8;
}

inline IVec ivec_add(const IVec& a, const IVec& b) {
  IVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline IVec ivec_sub(const IVec& a, const IVec& b) {
  IVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Int ivec_dot(const IVec& a, const IVec& b) {
  Int acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline bool ivec_is_zero(const IVec& a) {
  for (const Int& v : a)
    if (v != 0) return false;
  return true;
}

inline bool ivec_lex_less(const IVec& a, const IVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

inline QVec to_qvec(const IVec& a) {
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = Rat(a[i]);
  return out;
}

/// Exact conversion; throws IntegralityViolation if any denominator != 1.
inline IVec qvec_to_ivec(const QVec& a, const char* what) {
  IVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    require(is_integer(a[i]), ErrorKind::IntegralityViolation, what);
    out[i] = a[i].get_num();
  }
  return out;
}

inline IMat identity_matrix(size_t n) {
  IMat m(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// Row-vector times matrix: out_j = sum_i v_i * m[i][j].
inline IVec row_times_matrix(const IVec& v, const IMat& m) {
  IVec out(m.empty() ? 0 : m[0].size(), Int(0));
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
  }
  return out;
}

inline IMat matrix_product(const IMat& a, const IMat& b) {
  IMat out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = row_times_matrix(a[i], b);
  return out;
}

/// Exact determinant by Bareiss fraction-free elimination.
Int determinant(IMat m);

/// Inverse of an integer matrix with determinant +-1.
IMat unimodular_inverse(const IMat& m);

/// Solves sum_i lambda_i * rows[i] = target exactly over Q.
/// The rows must be linearly independent and the system consistent.
QVec solve_combination(const std::vector<IVec>& rows, const QVec& target);

std::string ivec_to_string(const IVec& v);
std::string rat_to_string(const Rat& q);

/// Shared work budget; charge() throws InstanceTooLarge once the limit is hit.
class Budget {
 public:
  explicit Budget(long long limit) : limit_(limit) {}

  void charge(long long amount = 1) {
    long long now = used_.fetch_add(amount, std::memory_order_relaxed) + amount;
    if (now > limit_)
      fail(ErrorKind::InstanceTooLarge,
           "enumeration budget of " + std::to_string(limit_) + " exceeded");
  }

  long long used() const { return used_.load(std::memory_order_relaxed); }
  long long limit() const { return limit_; }

 private:
  long long limit_;
  std::atomic<long long> used_{0};
};

constexpr long long kDefaultBudget = 10'000'000;

/// Deterministic seeded RNG. All derived draws are implementation-independent
/// given the mt19937_64 stream.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  /// Uniform in [0, n) by rejection.
  uint64_t below(uint64_t n) {
    if (n == 0) fail(ErrorKind::OutOfRange, "Rng::below(0)");
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform integer in [lo, hi], exact for arbitrary width.
  Int int_between(const Int& lo, const Int& hi) {
    require(lo <= hi, ErrorKind::OutOfRange, "empty Rng range");
    Int span = hi - lo + 1;
    size_t bits = mpz_sizeinbase(span.get_mpz_t(), 2);
    size_t words = (bits + 63) / 64;
    size_t top_bits = bits - (words - 1) * 64;
    while (true) {
      Int v = 0;
      for (size_t w = 0; w < words; ++w) {
        uint64_t x = eng_();
        if (w == 0) x >>= (64 - top_bits) % 64;
        v <<= 64;
        v += Int(static_cast<unsigned long>(x));
      }
      if (v < span) return lo + v;
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cll
