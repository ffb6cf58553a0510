#pragma once

// Exact integer/rational layer: arbitrary precision scalars, a small dense
// integer matrix, row-style Hermite normal form, saturated left kernels and
// the infinitesimally perturbed sign used for the tilted line y = -eps*x.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coamoeba/error.hpp"

namespace coamoeba {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>, boost::multiprecision::et_off>;

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline int sign(const Int& a) { return a.sign(); }
inline int sign(const Rat& a) { return a.sign(); }

inline Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Floor division; `b` must be nonzero.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Euclidean remainder in [0, |b|).
inline Int floor_mod(const Int& a, const Int& b) {
  Int r = a % b;
  if (r < 0) r += abs(b);
  return r;
}

/// n/d in lowest terms; d must be nonzero.
inline Rat make_rat(const Int& n, const Int& d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  return d < 0 ? Rat(Int(-n), Int(-d)) : Rat(n, d);
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline bool fits_int64(const Int& a) {
  return a >= std::numeric_limits<std::int64_t>::min() &&
         a <= std::numeric_limits<std::int64_t>::max();
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const Int& a) { return a.str(); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(const Int& a) { return a.convert_to<double>(); }

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorCode::InvalidShape, "ragged initializer");
      for (long long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Int& at(std::size_t r, std::size_t c) {
    check(r, c);
    return (*this)(r, c);
  }
  [[nodiscard]] const Int& at(std::size_t r, std::size_t c) const {
    check(r, c);
    return (*this)(r, c);
  }

  [[nodiscard]] std::vector<Int> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
  }

  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }

  [[nodiscard]] bool row_is_zero(std::size_t r) const {
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) return false;
    return true;
  }

  [[nodiscard]] IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw Error(ErrorCode::InvalidShape, "matrix index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidShape, "matrix product dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidShape, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  int flip = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      flip = -flip;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return flip * m(n - 1, n - 1);
}

struct HermiteResult {
  IntMatrix H;  ///< row-style Hermite normal form of the input
  IntMatrix U;  ///< unimodular transform with U * M == H
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: H is in row echelon form, pivots are
/// positive and entries above each pivot lie in [0, pivot).
inline HermiteResult hermite_normal_form(const IntMatrix& m) {
  if (m.empty()) throw Error(ErrorCode::InvalidShape, "hermite_normal_form of empty matrix");
  HermiteResult res{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = res.H;
  IntMatrix& u = res.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    // Euclid on column c below row r until a single nonzero entry remains.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        const Int q = floor_div(h(i, c), h(r, c));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Int q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  res.rank = r;
  return res;
}

/// Basis (one vector per row) of the saturated lattice {v : v * M = 0},
/// canonicalized by Hermite normal form.
inline IntMatrix left_kernel_basis(const IntMatrix& m) {
  const HermiteResult hr = hermite_normal_form(m);
  if (hr.rank != m.cols())
    throw Error(ErrorCode::RankDeficient, "left_kernel_basis requires full column rank");
  const std::size_t k = m.rows() - hr.rank;
  if (k == 0) return IntMatrix(0, m.rows());
  IntMatrix basis(k, m.rows());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < m.rows(); ++c) basis(i, c) = hr.U(hr.rank + i, c);
  return hermite_normal_form(basis).H;
}

/// gcd of all 2x2 minors of an N x 2 matrix (0 when all minors vanish).
inline Int minor_gcd_2x2(const IntMatrix& b) {
  if (b.cols() != 2 || b.rows() < 2) throw Error(ErrorCode::InvalidShape, "minor_gcd_2x2 expects N x 2, N >= 2");
  Int g = 0;
  for (std::size_t j = 0; j < b.rows(); ++j)
    for (std::size_t k = j + 1; k < b.rows(); ++k) g = gcd(g, b(j, 0) * b(k, 1) - b(j, 1) * b(k, 0));
  return g;
}

/// std + eps * (positive infinitesimal); ordered lexicographically.
struct EpsQuantity {
  Rat std;
  Rat eps;

  friend bool operator==(const EpsQuantity&, const EpsQuantity&) = default;
  friend std::strong_ordering operator<=>(const EpsQuantity& a, const EpsQuantity& b) {
    if (a.std != b.std) return a.std < b.std ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.eps != b.eps) return a.eps < b.eps ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend EpsQuantity operator+(const EpsQuantity& a, const EpsQuantity& b) {
    return {a.std + b.std, a.eps + b.eps};
  }
  friend EpsQuantity operator-(const EpsQuantity& a, const EpsQuantity& b) {
    return {a.std - b.std, a.eps - b.eps};
  }
};

inline int eps_sign(const EpsQuantity& q) {
  if (q.std != 0) return sign(q.std);
  return sign(q.eps);
}

}  // namespace coamoeba
