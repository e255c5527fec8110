#pragma once

// Exact integer / rational linear algebra on small dense matrices.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace linkbound {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix. Entries are value-initialised to zero.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  /// Deletes row `r` and column `c`.
  Matrix minor_matrix(std::size_t r, std::size_t c) const {
    Matrix out(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
        if (j == c) continue;
        out(oi, oj++) = (*this)(i, j);
      }
      ++oi;
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;

template <class To, class From>
Matrix<To> matrix_cast(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = static_cast<To>(m(i, j));
  return out;
}

/// Invariant factors a_1 | a_2 | ... | a_r followed by zeros; length min(rows, cols).
struct SnfResult {
  std::vector<Integer> invariant_factors;

  std::size_t rank() const {
    return static_cast<std::size_t>(std::count_if(invariant_factors.begin(), invariant_factors.end(),
                                                  [](const Integer& a) { return a != 0; }));
  }
  friend bool operator==(const SnfResult&, const SnfResult&) = default;
};

struct InertiaResult {
  int signature = 0;
  int nullity = 0;
  int rank = 0;
  int positive = 0;
  int negative = 0;
  friend bool operator==(const InertiaResult&, const InertiaResult&) = default;
};

inline Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative number");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  return r * r == n;
}

/// Fraction-free (Bareiss) determinant.
inline Integer det_exact(IntMatrix m) {
  if (!m.is_square()) throw std::invalid_argument("det_exact: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return Integer(0);
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace detail {

inline bool min_nonzero(const IntMatrix& m, std::size_t from, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t i = from; i < m.rows(); ++i)
    for (std::size_t j = from; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Integer a = abs(m(i, j));
      if (!found || a < best) {
        best = a;
        pr = i;
        pc = j;
        found = true;
      }
    }
  return found;
}

}  // namespace detail

/// Smith normal form by minimal-pivot elimination.
inline SnfResult snf(IntMatrix m) {
  const std::size_t r = m.rows(), c = m.cols(), n = std::min(r, c);
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!detail::min_nonzero(m, t, pr, pc)) break;
    m.swap_rows(t, pr);
    m.swap_cols(t, pc);
    for (;;) {
      bool residue = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (m(i, t) == 0) continue;
        Integer q = m(i, t) / m(t, t);
        for (std::size_t j = t; j < c; ++j) m(i, j) -= q * m(t, j);
        residue = residue || m(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (m(t, j) == 0) continue;
        Integer q = m(t, j) / m(t, t);
        for (std::size_t i = t; i < r; ++i) m(i, j) -= q * m(i, t);
        residue = residue || m(t, j) != 0;
      }
      if (residue) {
        // A remainder smaller than the pivot survived in row/column t.
        std::size_t bi = t, bj = t;
        Integer best = abs(m(t, t));
        for (std::size_t i = t + 1; i < r; ++i)
          if (m(i, t) != 0 && abs(m(i, t)) < best) best = abs(m(i, t)), bi = i, bj = t;
        for (std::size_t j = t + 1; j < c; ++j)
          if (m(t, j) != 0 && abs(m(t, j)) < best) best = abs(m(t, j)), bi = t, bj = j;
        m.swap_rows(t, bi);
        m.swap_cols(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remaining block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < r && !fixed; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (m(i, j) % m(t, t) != 0) {
            for (std::size_t k = t; k < c; ++k) m(t, k) += m(i, k);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
  }
  SnfResult out;
  out.invariant_factors.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.invariant_factors.push_back(abs(m(i, i)));
  return out;
}

/// Signature and nullity via rational congruence diagonalisation.
/// When no diagonal pivot is available, a hyperbolic pair (i, j) is folded
/// into row i first, which turns a zero diagonal into 2 a_ij.
inline InertiaResult inertia(const IntMatrix& sym) {
  if (!sym.is_symmetric()) throw std::invalid_argument("inertia: matrix is not symmetric");
  const std::size_t n = sym.rows();
  Matrix<Rational> a = matrix_cast<Rational>(sym);
  std::vector<bool> done(n, false);
  InertiaResult out;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      if (!done[i] && a(i, i) != 0) p = i;
    if (p == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!done[i] && !done[j] && a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t k = 0; k < n; ++k) a(pi, k) += a(pj, k);
      for (std::size_t k = 0; k < n; ++k) a(k, pi) += a(k, pj);
      p = pi;
    }
    const Rational d = a(p, p);
    (d > 0 ? out.positive : out.negative) += 1;
    done[p] = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k] || a(k, p) == 0) continue;
      const Rational f = a(k, p) / d;
      for (std::size_t l = 0; l < n; ++l)
        if (!done[l]) a(k, l) -= f * a(p, l);
    }
    for (std::size_t k = 0; k < n; ++k)
      if (!done[k]) a(p, k) = a(k, p) = 0;
  }
  out.rank = out.positive + out.negative;
  out.nullity = static_cast<int>(n) - out.rank;
  out.signature = out.positive - out.negative;
  return out;
}

/// True iff coker(M) is a finite cyclic group (trivial group included).
inline bool presents_cyclic(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("presents_cyclic: matrix is not square");
  const auto f = snf(m).invariant_factors;
  if (f.empty()) return true;
  for (std::size_t i = 0; i + 1 < f.size(); ++i)
    if (f[i] != 1) return false;
  return f.back() != 0;
}

inline bool is_positive_definite(const IntMatrix& m) {
  return m.is_symmetric() && inertia(m).positive == static_cast<int>(m.rows());
}

}  // namespace linkbound
