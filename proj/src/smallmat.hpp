/*
   Copyright 2026 The ffkernel authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFK_SMALLMAT_HPP
#define FFK_SMALLMAT_HPP

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rat.hpp"

namespace ffk {

/// Dense matrix over an exact field.  Dimensions stay small (at most a few
/// hundred rows), so plain Gaussian elimination is all we ever need.
template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    assert(x.cols_ == y.rows_);
    Matrix z(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const K& v = x(i, k);
        if (is_zero(v)) continue;
        for (int j = 0; j < y.cols_; ++j) {
          if (!is_zero(y(k, j))) z(i, j) += v * y(k, j);
        }
      }
    return z;
  }

  friend Matrix operator+(Matrix x, const Matrix& y) {
    assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
  }

  friend Matrix operator-(Matrix x, const Matrix& y) {
    assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }

  Matrix& operator*=(const K& c) {
    for (auto& v : a_) v = v * c;
    return *this;
  }

  bool is_zero_matrix() const {
    for (const auto& v : a_)
      if (!is_zero(v)) return false;
    return true;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    assert(int(v.size()) == cols_);
    std::vector<K> r(rows_, K(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  /// Row echelon rank; the matrix itself is left untouched.
  int rank() const {
    Matrix m = *this;
    return m.row_reduce_();
  }

  /// Solves A x = b exactly.  Throws if the system is singular/inconsistent.
  std::vector<K> solve(const std::vector<K>& b) const {
    assert(rows_ == cols_ && int(b.size()) == rows_);
    Matrix m(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
      m(i, cols_) = b[i];
    }
    m.row_reduce_();
    std::vector<K> x(cols_, K(0));
    for (int i = rows_ - 1; i >= 0; --i) {
      int lead = -1;
      for (int j = 0; j < cols_; ++j)
        if (!is_zero(m(i, j))) { lead = j; break; }
      if (lead < 0) {
        if (!is_zero(m(i, cols_))) throw std::domain_error("solve: inconsistent");
        continue;
      }
      K v = m(i, cols_);
      for (int j = lead + 1; j < cols_; ++j)
        if (!is_zero(m(i, j))) v -= m(i, j) * x[j];
      x[lead] = v / m(i, lead);
    }
    // reject underdetermined systems
    Matrix chk = *this;
    if (chk.row_reduce_() < cols_) throw std::domain_error("solve: singular");
    return x;
  }

  /// A particular solution of A x = b (free variables set to zero), or
  /// nullopt when inconsistent.  Works for singular square systems.
  std::optional<std::vector<K>> solve_any(const std::vector<K>& b) const {
    assert(int(b.size()) == rows_);
    Matrix m(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
      m(i, cols_) = b[i];
    }
    // full row reduction
    int r = 0;
    std::vector<int> lead;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int piv = -1;
      for (int i = r; i < rows_; ++i)
        if (!is_zero(m(i, c))) { piv = i; break; }
      if (piv < 0) continue;
      if (piv != r)
        for (int j = 0; j <= cols_; ++j) std::swap(m(piv, j), m(r, j));
      K d = m(r, c);
      for (int j = c; j <= cols_; ++j) m(r, j) = m(r, j) / d;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || is_zero(m(i, c))) continue;
        K f = m(i, c);
        for (int j = c; j <= cols_; ++j) m(i, j) -= f * m(r, j);
      }
      lead.push_back(c);
      ++r;
    }
    for (int i = r; i < rows_; ++i)
      if (!is_zero(m(i, cols_))) return std::nullopt;
    std::vector<K> x(size_t(cols_), K(0));
    for (int i = 0; i < int(lead.size()); ++i) x[size_t(lead[size_t(i)])] = m(i, cols_);
    return x;
  }

  Matrix inverse() const {
    assert(rows_ == cols_);
    int n = rows_;
    Matrix m(n, 2 * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = (*this)(i, j);
      m(i, n + i) = K(1);
    }
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
      int piv = -1;
      for (int i = r; i < n; ++i)
        if (!is_zero(m(i, c))) { piv = i; break; }
      if (piv < 0) throw std::domain_error("inverse: singular matrix");
      if (piv != r)
        for (int j = 0; j < 2 * n; ++j) std::swap(m(piv, j), m(r, j));
      K d = m(r, c);
      for (int j = 0; j < 2 * n; ++j) m(r, j) = m(r, j) / d;
      for (int i = 0; i < n; ++i) {
        if (i == r || is_zero(m(i, c))) continue;
        K f = m(i, c);
        for (int j = 0; j < 2 * n; ++j) m(i, j) -= f * m(r, j);
      }
      ++r;
    }
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inv(i, j) = m(i, n + j);
    return inv;
  }

 private:
  int row_reduce_() {
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int piv = -1;
      for (int i = r; i < rows_; ++i)
        if (!is_zero((*this)(i, c))) { piv = i; break; }
      if (piv < 0) continue;
      if (piv != r)
        for (int j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(r, j));
      const K d = (*this)(r, c);
      for (int i = r + 1; i < rows_; ++i) {
        if (is_zero((*this)(i, c))) continue;
        K f = (*this)(i, c) / d;
        (*this)(i, c) = K(0);
        for (int j = c + 1; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      ++r;
    }
    return r;
  }

  int rows_, cols_;
  std::vector<K> a_;
};

using RatMat = Matrix<Rat>;

/// Rank of the column span of a list of sparse vectors given as
/// (coordinate index, value) pairs.
template <class K>
int sparse_rank(std::vector<std::vector<std::pair<long, K>>> cols) {
  // Gaussian elimination on sparse columns, eliminating by leading index.
  std::vector<std::vector<std::pair<long, K>>> basis;
  auto norml = [](std::vector<std::pair<long, K>>& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<long, K>> out;
    for (auto& [i, c] : v) {
      if (!out.empty() && out.back().first == i) out.back().second += c;
      else out.emplace_back(i, c);
      if (!out.empty() && is_zero(out.back().second)) out.pop_back();
    }
    v = std::move(out);
  };
  for (auto& col : cols) {
    norml(col);
    for (const auto& b : basis) {
      if (col.empty()) break;
      if (b.front().first != col.front().first) continue;
      K f = col.front().second / b.front().second;
      std::vector<std::pair<long, K>> merged;
      size_t i = 0, j = 0;
      while (i < col.size() || j < b.size()) {
        if (j == b.size() || (i < col.size() && col[i].first < b[j].first))
          merged.push_back(col[i++]);
        else if (i == col.size() || b[j].first < col[i].first) {
          merged.emplace_back(b[j].first, -f * b[j].second);
          ++j;
        } else {
          K v = col[i].second - f * b[j].second;
          if (!is_zero(v)) merged.emplace_back(col[i].first, v);
          ++i; ++j;
        }
      }
      col = std::move(merged);
    }
    if (!col.empty()) {
      basis.push_back(std::move(col));
      std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
        return a.front().first < b.front().first;
      });
    }
  }
  return int(basis.size());
}

}  // namespace ffk

#endif
