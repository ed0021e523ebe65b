#pragma once

// Dense exact linear algebra over an arbitrary field type F. F must support
// the arithmetic operators, construction from int, and a free is_zero(F).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigproj/rational.hpp"

namespace bigproj {

template <class F>
using Vec = std::vector<F>;

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vec<F> row(std::size_t i) const {
    return Vec<F>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  Vec<F> col(std::size_t j) const {
    Vec<F> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<Vec<F>> row_list() const {
    std::vector<Vec<F>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec<F> apply(const Vec<F>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    Vec<F> out(rows_, F(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero(v[j]) && !is_zero((*this)(i, j)))
          out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matmul: size mismatch");
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const F& a = (*this)(i, k);
        if (is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (!is_zero(o(k, j))) out(i, j) += a * o(k, j);
      }
    return out;
  }
  Matrix operator+(const Matrix& o) const {
    check_same(o);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
  }
  Matrix operator-(const Matrix& o) const {
    check_same(o);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
  }
  Matrix scaled(const F& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= s;
    return out;
  }
  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }
  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!is_zero(data_[i] - o.data_[i])) return false;
    return true;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> data_;
};

using QMatrix = Matrix<Q>;
using QVec = Vec<Q>;

// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> rref_inplace(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref_inplace(m).size();
}

template <class F>
std::size_t rank_of(const std::vector<Vec<F>>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  return rank(Matrix<F>::from_rows(rows, cols));
}

// Basis (as rows) of {x : m x = 0}.
template <class F>
Matrix<F> nullspace(Matrix<F> m) {
  auto piv = rref_inplace(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Vec<F>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_piv[free]) continue;
    Vec<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(k, free);
    out.push_back(std::move(v));
  }
  return Matrix<F>::from_rows(out, m.cols());
}

// One solution of m x = b, if any.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto piv = rref_inplace(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vec<F> x(m.cols(), F(0));
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug(k, m.cols());
  return x;
}

// Incrementally maintained row space in reduced echelon form.
template <class F>
class RowSpace {
 public:
  explicit RowSpace(std::size_t ambient) : n_(ambient) {}

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }

  Vec<F> reduce(Vec<F> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const F& c = v[pivots_[k]];
      if (is_zero(c)) continue;
      F f = c;
      for (std::size_t j = 0; j < n_; ++j)
        if (!is_zero(rows_[k][j])) v[j] -= f * rows_[k][j];
    }
    return v;
  }

  bool contains(const Vec<F>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
      if (!is_zero(x)) return false;
    return true;
  }

  // Returns true if v enlarged the space.
  bool add(const Vec<F>& v) {
    auto r = reduce(v);
    std::size_t p = 0;
    while (p < n_ && is_zero(r[p])) ++p;
    if (p == n_) return false;
    F inv = F(1) / r[p];
    for (auto& x : r) x *= inv;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const F& c = rows_[k][p];
      if (is_zero(c)) continue;
      F f = c;
      for (std::size_t j = 0; j < n_; ++j)
        if (!is_zero(r[j])) rows_[k][j] -= f * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

  void add_all(const std::vector<Vec<F>>& vs) {
    for (const auto& v : vs) add(v);
  }

  const std::vector<Vec<F>>& basis() const { return rows_; }

  bool operator==(const RowSpace& o) const {
    if (dim() != o.dim()) return false;
    for (const auto& r : o.rows_)
      if (!contains(r)) return false;
    return true;
  }
  bool includes(const RowSpace& o) const {
    for (const auto& r : o.rows_)
      if (!contains(r)) return false;
    return true;
  }

 private:
  std::size_t n_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

// Coordinates relative to a fixed independent family of vectors.
template <class F>
class CoordSolver {
 public:
  CoordSolver() = default;
  CoordSolver(const std::vector<Vec<F>>& basis, std::size_t ambient)
      : k_(basis.size()), n_(ambient) {
    Matrix<F> aug(k_, n_ + k_);
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) aug(i, j) = basis[i][j];
      aug(i, n_ + i) = F(1);
    }
    auto piv = rref_inplace(aug);
    std::size_t r = 0;
    while (r < piv.size() && piv[r] < n_) ++r;
    if (r != k_) throw std::invalid_argument("CoordSolver: dependent basis");
    pivots_.assign(piv.begin(), piv.begin() + k_);
    reduced_ = Matrix<F>(k_, n_);
    transform_ = Matrix<F>(k_, k_);
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) reduced_(i, j) = aug(i, j);
      for (std::size_t j = 0; j < k_; ++j) transform_(i, j) = aug(i, n_ + j);
    }
  }

  std::size_t size() const { return k_; }

  std::optional<Vec<F>> coords(const Vec<F>& v) const {
    Vec<F> d(k_);
    for (std::size_t i = 0; i < k_; ++i) d[i] = v[pivots_[i]];
    for (std::size_t j = 0; j < n_; ++j) {
      F s(0);
      for (std::size_t i = 0; i < k_; ++i)
        if (!is_zero(d[i]) && !is_zero(reduced_(i, j))) s += d[i] * reduced_(i, j);
      if (!is_zero(s - v[j])) return std::nullopt;
    }
    Vec<F> c(k_, F(0));
    for (std::size_t i = 0; i < k_; ++i) {
      if (is_zero(d[i])) continue;
      for (std::size_t j = 0; j < k_; ++j)
        if (!is_zero(transform_(i, j))) c[j] += d[i] * transform_(i, j);
    }
    return c;
  }

  Vec<F> coords_or_throw(const Vec<F>& v) const {
    auto c = coords(v);
    if (!c) throw std::runtime_error("vector outside the expected span");
    return *c;
  }

 private:
  std::size_t k_ = 0, n_ = 0;
  std::vector<std::size_t> pivots_;
  Matrix<F> reduced_, transform_;
};

template <class F>
Matrix<F> matrix_power(const Matrix<F>& m, int e) {
  Matrix<F> out = Matrix<F>::identity(m.rows());
  for (int i = 0; i < e; ++i) out = out * m;
  return out;
}

// Basis rows of ker (m - c)^n, n = size of m.
template <class F>
Matrix<F> generalized_eigenspace(const Matrix<F>& m, const F& c) {
  std::size_t n = m.rows();
  if (n == 0) return Matrix<F>(0, 0);
  Matrix<F> shifted = m - Matrix<F>::identity(n).scaled(c);
  Matrix<F> p = Matrix<F>::identity(n);
  // Powers stabilise after at most n steps; stop once the kernel stops growing.
  std::size_t prev = n + 1;
  for (std::size_t i = 0; i < n; ++i) {
    p = p * shifted;
    std::size_t r = rank(p);
    if (r == prev) break;
    prev = r;
  }
  return nullspace(p);
}

template <class F>
std::vector<Vec<F>> intersect(const std::vector<Vec<F>>& a,
                              const std::vector<Vec<F>>& b, std::size_t n) {
  if (a.empty() || b.empty()) return {};
  // Solve sum x_i a_i - sum y_j b_j = 0.
  Matrix<F> m(n, a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(j, i) = a[i][j];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(j, a.size() + i) = -b[i][j];
  auto ns = nullspace(m);
  RowSpace<F> out(n);
  for (std::size_t k = 0; k < ns.rows(); ++k) {
    Vec<F> v(n, F(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!is_zero(ns(k, i)))
        for (std::size_t j = 0; j < n; ++j) v[j] += ns(k, i) * a[i][j];
    out.add(v);
  }
  return out.basis();
}

// Annihilator of span(rows) in the dual space (standard pairing).
template <class F>
std::vector<Vec<F>> annihilator(const std::vector<Vec<F>>& rows, std::size_t n) {
  if (rows.empty()) {
    std::vector<Vec<F>> out;
    for (std::size_t i = 0; i < n; ++i) {
      Vec<F> v(n, F(0));
      v[i] = F(1);
      out.push_back(v);
    }
    return out;
  }
  return nullspace(Matrix<F>::from_rows(rows, n)).row_list();
}

}  // namespace bigproj
