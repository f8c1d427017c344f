#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "repcur/matrix.hpp"

namespace repcur {

struct RowEchelon {
  Mat reduced;
  std::vector<size_t> pivots;  // pivot column of each nonzero row
  size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination to reduced row echelon form. Pivots are the first
/// nonzero entry found scanning down each column, so the result depends only
/// on the row space.
inline RowEchelon row_reduce(Mat m) {
  std::vector<size_t> pivots;
  std::vector<size_t> nz;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    if (m(r, c) != 1) {
      Rat inv = 1 / m(r, c);
      for (size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    }
    nz.clear();
    for (size_t j = c; j < m.cols(); ++j)
      if (sgn(m(r, j)) != 0) nz.push_back(j);
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rat f = m(i, c);
      for (size_t j : nz) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::pair<Mat, size_t> rref(const Mat& m) {
  auto e = row_reduce(m);
  size_t rank = e.rank();
  return {std::move(e.reduced), rank};
}

inline size_t rank(const Mat& m) { return row_reduce(m).rank(); }

namespace detail {
inline std::vector<Vec> kernel_from_echelon(const RowEchelon& e, size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r) {
      const Rat& x = e.reduced(r, f);
      if (sgn(x) != 0) v[e.pivots[r]] = -x;
    }
    out.push_back(std::move(v));
  }
  return out;
}
}  // namespace detail

/// Basis of the right null space, one vector per free column in increasing
/// column order.
inline std::vector<Vec> kernel_basis(const Mat& m) {
  return detail::kernel_from_echelon(row_reduce(m), m.cols());
}

/// Stacks matrices of equal column count on top of each other.
inline Mat vstack(std::span<const Mat> blocks) {
  if (blocks.empty()) return {};
  size_t cols = blocks.front().cols(), rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += b.rows();
  }
  Mat out(rows, cols);
  size_t r0 = 0;
  for (const auto& b : blocks) {
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < cols; ++j)
        if (sgn(b(i, j)) != 0) out(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }
  return out;
}

/// Incrementally maintained echelon basis of a subspace of Q^n. Each stored
/// row is zero at the pivots of every earlier row, so one pass in insertion
/// order reduces a candidate vector completely.
class SpanBuilder {
 public:
  explicit SpanBuilder(size_t length) : n_(length) {}

  size_t length() const { return n_; }
  size_t dimension() const { return rows_.size(); }

  /// Returns true when v enlarged the span.
  bool add(Vec v) {
    if (v.size() != n_) throw std::invalid_argument("SpanBuilder: length mismatch");
    reduce(v);
    size_t p = 0;
    while (p < n_ && sgn(v[p]) == 0) ++p;
    if (p == n_) return false;
    Rat inv = 1 / v[p];
    std::vector<size_t> nz;
    for (size_t j = p; j < n_; ++j)
      if (sgn(v[j]) != 0) {
        v[j] *= inv;
        nz.push_back(j);
      }
    rows_.push_back({p, std::move(v), std::move(nz)});
    return true;
  }

  bool contains(Vec v) const {
    if (v.size() != n_) throw std::invalid_argument("SpanBuilder: length mismatch");
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rat& q) { return sgn(q) == 0; });
  }

  /// Reduced row echelon form of the stored span (rows sorted by pivot).
  RowEchelon echelon() const {
    std::vector<size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return rows_[a].pivot < rows_[b].pivot; });
    Mat m(rows_.size(), n_);
    for (size_t r = 0; r < order.size(); ++r)
      for (size_t j : rows_[order[r]].nz) m(r, j) = rows_[order[r]].v[j];
    return row_reduce(std::move(m));
  }

  /// Null space of the stored rows viewed as a system of equations.
  std::vector<Vec> kernel() const {
    return detail::kernel_from_echelon(echelon(), n_);
  }

 private:
  struct Row {
    size_t pivot;
    Vec v;
    std::vector<size_t> nz;
  };

  void reduce(Vec& v) const {
    for (const auto& row : rows_) {
      if (sgn(v[row.pivot]) == 0) continue;
      Rat f = v[row.pivot];
      for (size_t j : row.nz) v[j] -= f * row.v[j];
    }
  }

  size_t n_;
  std::vector<Row> rows_;
};

/// Dimension of the rational span of equally shaped matrices, flattened.
inline size_t span_dimension(std::span<const Mat> vs) {
  if (vs.empty()) return 0;
  const size_t r = vs.front().rows(), c = vs.front().cols();
  SpanBuilder sb(r * c);
  for (const auto& m : vs) {
    if (m.rows() != r || m.cols() != c)
      throw std::invalid_argument("span_dimension: shape mismatch");
    sb.add(flatten(m));
  }
  return sb.dimension();
}

/// Linearly independent subset (greedy, input order) of equally shaped matrices.
inline std::vector<Mat> independent_subset(std::span<const Mat> vs) {
  std::vector<Mat> out;
  if (vs.empty()) return out;
  const size_t r = vs.front().rows(), c = vs.front().cols();
  SpanBuilder sb(r * c);
  for (const auto& m : vs) {
    if (m.rows() != r || m.cols() != c)
      throw std::invalid_argument("independent_subset: shape mismatch");
    if (sb.add(flatten(m))) out.push_back(m);
  }
  return out;
}

/// Basis of the smallest unital subalgebra of d x d matrices containing gens.
/// Breadth-first by word length: each round multiplies the elements added in
/// the previous round on the right by every generator.
inline std::vector<Mat> algebra_closure(std::span<const Mat> gens, size_t d) {
  for (const auto& g : gens)
    if (g.rows() != d || g.cols() != d)
      throw std::invalid_argument("algebra_closure: generator size mismatch");
  SpanBuilder sb(d * d);
  std::vector<Mat> basis;
  std::vector<Mat> frontier;
  auto push = [&](const Mat& m) {
    if (sb.add(flatten(m))) {
      basis.push_back(m);
      frontier.push_back(m);
    }
  };
  push(Mat::identity(d));
  std::vector<Mat> live;
  for (const auto& g : gens) {
    size_t before = basis.size();
    push(g);
    if (basis.size() > before) live.push_back(g);
  }
  // Generators already in the span of earlier ones add nothing new as right
  // multipliers, so only the independent ones are kept.
  while (!frontier.empty() && basis.size() < d * d) {
    std::vector<Mat> current;
    current.swap(frontier);
    for (const auto& x : current)
      for (const auto& g : live) push(x * g);
  }
  return basis;
}

/// Solves B X = Y for B of full column rank via a precomputed left inverse.
class BasisSolver {
 public:
  BasisSolver() = default;
  explicit BasisSolver(const Mat& basis) : m_(basis.rows()), r_(basis.cols()) {
    Mat aug(m_, r_ + m_);
    for (size_t i = 0; i < m_; ++i) {
      for (size_t j = 0; j < r_; ++j) aug(i, j) = basis(i, j);
      aug(i, r_ + i) = 1;
    }
    auto e = row_reduce(std::move(aug));
    if (e.rank() < r_)
      throw std::invalid_argument("BasisSolver: basis is not linearly independent");
    for (size_t j = 0; j < r_; ++j)
      if (e.pivots[j] != j)
        throw std::invalid_argument("BasisSolver: basis is not linearly independent");
    Mat transform = e.reduced.columns(r_, m_);
    left_inverse_ = transform.row_block(0, r_);
    annihilator_ = transform.row_block(r_, m_ - r_);
  }

  size_t ambient_dimension() const { return m_; }
  size_t dimension() const { return r_; }

  bool contains(const Mat& y) const { return (annihilator_ * y).is_zero(); }
  bool contains(const Vec& y) const {
    return contains(Mat::from_columns({y}, m_));
  }

  /// Coordinates of the columns of y; throws std::domain_error when a column
  /// lies outside the span.
  Mat coordinates(const Mat& y) const {
    if (y.rows() != m_) throw std::invalid_argument("BasisSolver: shape");
    if (!contains(y)) throw std::domain_error("BasisSolver: vector outside the span");
    return left_inverse_ * y;
  }
  Vec coordinates(const Vec& y) const {
    return coordinates(Mat::from_columns({y}, m_)).column(0);
  }

 private:
  size_t m_ = 0, r_ = 0;
  Mat left_inverse_, annihilator_;
};

inline Mat inverse(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto e = row_reduce(std::move(aug));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw std::domain_error("inverse: singular matrix");
  return e.reduced.columns(n, n);
}

/// Matrix of the restriction of `op` to the invariant subspace spanned by the
/// columns of `basis`, in those coordinates.
inline Mat restrict_to(const BasisSolver& solver, const Mat& op, const Mat& basis) {
  return solver.coordinates(op * basis);
}

/// Basis of {X : XA = AX for every A in mats} in d x d matrices. Diagonal
/// matrices are handled first (their commutant is spanned by matrix units),
/// then each remaining matrix cuts the current subspace down by one kernel
/// solve of size d^2 x (current dimension).
inline std::vector<Mat> commutant_basis(std::span<const Mat> mats, size_t d) {
  for (const auto& a : mats)
    if (a.rows() != d || a.cols() != d)
      throw std::invalid_argument("commutant_basis: size mismatch");
  std::vector<const Mat*> diag, rest;
  for (const auto& a : mats) (a.is_diagonal() ? diag : rest).push_back(&a);

  std::vector<Mat> basis;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      bool keep = true;
      for (const Mat* a : diag)
        if ((*a)(i, i) != (*a)(j, j)) {
          keep = false;
          break;
        }
      if (keep) basis.push_back(Mat::unit(d, d, i, j));
    }

  for (const Mat* a : rest) {
    if (basis.empty()) break;
    Mat system(d * d, basis.size());
    for (size_t col = 0; col < basis.size(); ++col) {
      Mat c = basis[col] * (*a) - (*a) * basis[col];
      for (size_t e = 0; e < d * d; ++e)
        if (sgn(c.entries()[e]) != 0) system(e, col) = c.entries()[e];
    }
    auto ker = kernel_basis(system);
    std::vector<Mat> next;
    next.reserve(ker.size());
    for (const auto& coeffs : ker) {
      Mat x(d, d);
      for (size_t col = 0; col < basis.size(); ++col) x.add_scaled(coeffs[col], basis[col]);
      next.push_back(std::move(x));
    }
    basis.swap(next);
  }
  return basis;
}

}  // namespace repcur
