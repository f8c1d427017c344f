#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "repcur/rational.hpp"

namespace repcur {

using Vec = std::vector<Rat>;

/// Dense row-major matrix over Q. Products skip zero entries, which is where
/// nearly all the time goes for the sparse action matrices of tensor modules.
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Mat(size_t rows, size_t cols, std::vector<Rat> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
      throw std::invalid_argument("Mat: entry count does not match shape");
  }
  Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("Mat: ragged rows");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  /// Matrix unit with a single 1 at (i, j), zero-based.
  static Mat unit(size_t rows, size_t cols, size_t i, size_t j) {
    Mat m(rows, cols);
    m(i, j) = 1;
    return m;
  }
  static Mat from_columns(const std::vector<Vec>& cols, size_t rows) {
    Mat m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows)
        throw std::invalid_argument("Mat::from_columns: length mismatch");
      for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Rat>& entries() const { return a_; }

  Rat& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& q : a_)
      if (sgn(q) != 0) return false;
    return true;
  }
  bool is_diagonal() const {
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (i != j && sgn((*this)(i, j)) != 0) return false;
    return true;
  }
  bool is_scalar(Rat* value = nullptr) const {
    if (!is_square() || !is_diagonal()) return false;
    Rat c = rows_ ? (*this)(0, 0) : Rat(0);
    for (size_t i = 1; i < rows_; ++i)
      if ((*this)(i, i) != c) return false;
    if (value) *value = c;
    return true;
  }

  Vec column(size_t j) const {
    Vec v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Mat columns(size_t first, size_t count) const {
    Mat m(rows_, count);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
    return m;
  }
  Mat row_block(size_t first, size_t count) const {
    Mat m(count, cols_);
    for (size_t i = 0; i < count; ++i)
      for (size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
    return m;
  }

  void swap_rows(size_t r, size_t s) {
    if (r == s) return;
    for (size_t j = 0; j < cols_; ++j) a_[r * cols_ + j].swap(a_[s * cols_ + j]);
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Rat trace() const {
    Rat s = 0;
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  Vec apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Mat::apply: shape");
    Vec out(rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0)
          out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Mat& operator+=(const Mat& o) {
    check_same_shape(o);
    for (size_t i = 0; i < a_.size(); ++i)
      if (sgn(o.a_[i]) != 0) a_[i] += o.a_[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same_shape(o);
    for (size_t i = 0; i < a_.size(); ++i)
      if (sgn(o.a_[i]) != 0) a_[i] -= o.a_[i];
    return *this;
  }
  Mat& operator*=(const Rat& s) {
    if (sgn(s) == 0) {
      for (auto& q : a_) q = 0;
    } else if (s != 1) {
      for (auto& q : a_)
        if (sgn(q) != 0) q *= s;
    }
    return *this;
  }

  /// this += s * o
  void add_scaled(const Rat& s, const Mat& o) {
    check_same_shape(o);
    if (sgn(s) == 0) return;
    for (size_t i = 0; i < a_.size(); ++i)
      if (sgn(o.a_[i]) != 0) a_[i] += s * o.a_[i];
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Rat& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat product: shape");
    Mat c(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
      for (size_t k = 0; k < a.cols_; ++k) {
        const Rat& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (size_t j = 0; j < b.cols_; ++j) {
          const Rat& bkj = b(k, j);
          if (sgn(bkj) != 0) c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (size_t j = 0; j < cols_; ++j) {
        if (j) s += ',';
        s += format_rational((*this)(i, j));
      }
      s += ']';
    }
    return s + "]";
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Mat: shape mismatch");
  }

  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rat> a_;
};

/// Kronecker product, left factor major.
inline Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const Rat& aij = a(i, j);
      if (sgn(aij) == 0) continue;
      for (size_t p = 0; p < b.rows(); ++p)
        for (size_t q = 0; q < b.cols(); ++q)
          if (sgn(b(p, q)) != 0)
            k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

/// Row-major flattening.
inline Vec flatten(const Mat& m) { return m.entries(); }

}  // namespace repcur
