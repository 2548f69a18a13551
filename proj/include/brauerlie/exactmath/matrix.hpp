#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "brauerlie/errors.hpp"
#include "brauerlie/exactmath/cyclo.hpp"
#include "brauerlie/exactmath/delta_poly.hpp"
#include "brauerlie/exactmath/rational.hpp"

namespace brauerlie {

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool is_field = true;
  static constexpr const char* name = "Rational";
};
template <>
struct ScalarTraits<CycloNumber> {
  static constexpr bool is_field = true;
  static constexpr const char* name = "CycloNumber";
};
template <>
struct ScalarTraits<DeltaPoly> {
  static constexpr bool is_field = false;
  static constexpr const char* name = "DeltaPoly";
};

template <class T>
using Vec = std::vector<T>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), d_(std::move(data)) {
    if (d_.size() != rows * cols) throw Error(Errc::dimension, "matrix data size does not match shape");
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw Error(Errc::dimension, "ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }
  const std::vector<T>& data() const { return d_; }

  bool is_zero() const {
    for (const auto& x : d_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec<T> column(std::size_t j) const {
    Vec<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error(Errc::dimension, "matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
      }
    return r;
  }
  Vec<T> operator*(const Vec<T>& v) const {
    if (cols_ != v.size()) throw Error(Errc::dimension, "matrix-vector shape mismatch");
    Vec<T> r(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] += o.d_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] -= o.d_[i];
    return r;
  }
  Matrix scaled(const T& c) const {
    Matrix r = *this;
    for (auto& x : r.d_) x = x * c;
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }

 private:
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::dimension, "matrix shape mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> d_;
};

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

template <class T>
struct RrefResult {
  Matrix<T> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

template <class T>
struct AffineSolutionSpace {
  std::optional<Vec<T>> particular;
  std::vector<Vec<T>> basis;
  bool consistent() const { return particular.has_value(); }
  std::size_t dimension() const { return basis.size(); }
};

template <class T>
void require_field() {
  if constexpr (!ScalarTraits<T>::is_field)
    throw Error(Errc::unsupported_ring, std::string("linear algebra over ") + ScalarTraits<T>::name + " is unsupported; specialize delta first");
}

// Reduced row echelon form with leftmost nonzero pivoting.
template <class T>
RrefResult<T> rref(Matrix<T> m) {
  require_field<T>();
  RrefResult<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    if constexpr (ScalarTraits<T>::is_field) {
      T inv = T(1) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i == r || m(i, c).is_zero()) continue;
        T f = m(i, c);
        for (std::size_t j = c; j < m.cols(); ++j)
          if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).rank;
}

template <class T>
std::vector<Vec<T>> kernel_from_rref(const RrefResult<T>& rr, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec<T>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<T> v(cols, T(0));
    v[f] = T(1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::vector<Vec<T>> kernel_basis(const Matrix<T>& m) {
  return kernel_from_rref(rref(m), m.cols());
}

template <class T>
AffineSolutionSpace<T> solve_affine(const Matrix<T>& a, const Vec<T>& b) {
  require_field<T>();
  if (b.size() != a.rows()) throw Error(Errc::dimension, "right-hand side length " + std::to_string(b.size()) + " does not match " + std::to_string(a.rows()) + " rows");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto rr = rref(std::move(aug));
  AffineSolutionSpace<T> out;
  if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return out;
  Vec<T> x(a.cols(), T(0));
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.reduced(i, a.cols());
  out.particular = std::move(x);
  RrefResult<T> homog{rr.reduced, rr.rank, rr.pivots};
  // the augmented column never pivots here, so kernel vectors over the first cols columns are correct
  out.basis = kernel_from_rref(homog, a.cols());
  return out;
}

using QMatrix = Matrix<Rational>;
using CMatrix = Matrix<CycloNumber>;
using DMatrix = Matrix<DeltaPoly>;

}  // namespace brauerlie
