#include "cll/numeric.hpp"

#include <sstream>

namespace cll {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonIncreasingParameters: return "NonIncreasingParameters";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::BadSubset: return "BadSubset";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::IntegralityViolation: return "IntegralityViolation";
    case ErrorKind::BadPivot: return "BadPivot";
    case ErrorKind::DuplicateIndex: return "DuplicateIndex";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::UnsortedInput: return "UnsortedInput";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::GuaranteeViolated: return "GuaranteeViolated";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::RequiresSimplex: return "RequiresSimplex";
    case ErrorKind::WitnessRefuted: return "WitnessRefuted";
    case ErrorKind::NotAFacet: return "NotAFacet";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Error";
}

Int determinant(IMat m) {
  size_t n = m.size();
  if (n == 0) return 1;
  for (const IVec& row : m)
    require(row.size() == n, ErrorKind::DimensionMismatch, "determinant of non-square matrix");

  // Bareiss: exact division at every step, sign tracked through row swaps.
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IMat unimodular_inverse(const IMat& m) {
  size_t n = m.size();
  Int det = determinant(m);
  require(det == 1 || det == -1, ErrorKind::IntegralityViolation,
          "matrix is not unimodular");

  // Adjugate via rational Gauss-Jordan, then integrality is guaranteed.
  std::vector<QVec> work(n, QVec(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) work[i][j] = Rat(m[i][j]);
    work[i][n + i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && work[piv][col] == 0) ++piv;
    require(piv < n, ErrorKind::IntegralityViolation, "singular matrix");
    std::swap(work[col], work[piv]);
    Rat inv = 1 / work[col][col];
    for (size_t j = 0; j < 2 * n; ++j) work[col][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || work[i][col] == 0) continue;
      Rat f = work[i][col];
      for (size_t j = 0; j < 2 * n; ++j) work[i][j] -= f * work[col][j];
    }
  }
  IMat out(n, IVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      require(is_integer(work[i][n + j]), ErrorKind::IntegralityViolation,
              "unimodular inverse has non-integer entry");
      out[i][j] = work[i][n + j].get_num();
    }
  return out;
}

QVec solve_combination(const std::vector<IVec>& rows, const QVec& target) {
  size_t k = rows.size();
  size_t dim = target.size();
  require(k >= 1 && k <= dim, ErrorKind::DimensionMismatch, "bad system shape");
  for (const IVec& r : rows)
    require(r.size() == dim, ErrorKind::DimensionMismatch, "row length mismatch");

  // Augmented system over Q: one equation per coordinate, unknowns lambda_i.
  std::vector<QVec> a(dim, QVec(k + 1, Rat(0)));
  for (size_t c = 0; c < dim; ++c) {
    for (size_t i = 0; i < k; ++i) a[c][i] = Rat(rows[i][c]);
    a[c][k] = target[c];
  }
  size_t row = 0;
  std::vector<size_t> pivot_of(k, 0);
  for (size_t col = 0; col < k; ++col) {
    size_t piv = row;
    while (piv < dim && a[piv][col] == 0) ++piv;
    require(piv < dim, ErrorKind::DimensionMismatch, "rows are linearly dependent");
    std::swap(a[row], a[piv]);
    Rat inv = 1 / a[row][col];
    for (size_t j = col; j <= k; ++j) a[row][j] *= inv;
    for (size_t i = 0; i < dim; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_of[col] = row;
    ++row;
  }
  for (size_t i = row; i < dim; ++i)
    require(a[i][k] == 0, ErrorKind::DimensionMismatch, "inconsistent system");
  QVec lambda(k);
  for (size_t col = 0; col < k; ++col) lambda[col] = a[pivot_of[col]][k];
  return lambda;
}

std::string ivec_to_string(const IVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string rat_to_string(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace cll
