#pragma once

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "repcur/linalg.hpp"
#include "repcur/matrix.hpp"

namespace repcur {

enum class Family { GL, SP, SO };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::GL: return "gl";
    case Family::SP: return "sp";
    case Family::SO: return "so";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  std::string low;
  for (char c : s) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (low == "gl") return Family::GL;
  if (low == "sp") return Family::SP;
  if (low == "so") return Family::SO;
  throw std::invalid_argument("unknown family: '" + std::string(s) + "'");
}

/// s(i) = +1 for 1 <= i <= n and -1 for n < i <= 2n (one-based), the sign
/// pattern of the antidiagonal symplectic form.
struct SignFunction {
  size_t n;
  int operator()(size_t i) const {
    if (i < 1 || i > 2 * n) throw std::out_of_range("SignFunction: index out of range");
    return i <= n ? 1 : -1;
  }
};

/// The symplectic Gram matrix [[0, J], [-J, 0]] with J the n x n antidiagonal
/// matrix of ones.
inline Mat symplectic_form(size_t n) {
  const size_t N = 2 * n;
  SignFunction s{n};
  Mat j(N, N);
  for (size_t i = 0; i < N; ++i) j(i, N - 1 - i) = s(i + 1);
  return j;
}

/// A classical Lie algebra realized by N x N rational matrices, with the trace
/// form of the defining representation as invariant form.
///
/// For gl(n) the basis is E_ij in row-major order. For sp(2n) it is the split
/// Cartan H_a = E_aa - E_a'a' (a' = 2n+1-a) followed by root vectors; for
/// so(n) it is E_ij - E_ji with i < j in lexicographic order. Cartan, raising
/// and lowering index sets are empty for so(n), whose orthonormal realization
/// has no rational split Cartan.
struct LieAlgebraSpec {
  Family family{};
  size_t n = 0;
  size_t matrix_size = 0;
  std::vector<Mat> basis;
  std::vector<Vec> bracket;  // dim*dim entries, coordinates of [b_i, b_j]
  Mat form_gram;
  Mat gram_inverse;
  std::vector<Mat> dual_basis;
  std::vector<size_t> cartan_indices, raising_indices, lowering_indices;
  BasisSolver solver;

  size_t dim() const { return basis.size(); }
  bool has_split_cartan() const { return !cartan_indices.empty(); }

  std::string name() const {
    switch (family) {
      case Family::GL: return "gl(" + std::to_string(n) + ")";
      case Family::SP: return "sp(" + std::to_string(2 * n) + ")";
      case Family::SO: return "so(" + std::to_string(n) + ")";
    }
    return "?";
  }

  bool contains(const Mat& x) const {
    return x.rows() == matrix_size && x.cols() == matrix_size && solver.contains(flatten(x));
  }
  /// Coordinates of x in the basis; throws std::domain_error if x is not in g.
  Vec coordinates(const Mat& x) const {
    if (x.rows() != matrix_size || x.cols() != matrix_size)
      throw std::invalid_argument("coordinates: wrong matrix size");
    return solver.coordinates(flatten(x));
  }
  Mat element(const Vec& coords) const {
    Mat x(matrix_size, matrix_size);
    for (size_t i = 0; i < coords.size(); ++i) x.add_scaled(coords[i], basis[i]);
    return x;
  }
  const Vec& bracket_coords(size_t i, size_t j) const { return bracket[i * dim() + j]; }

  Vec bracket_of(const Vec& x, const Vec& y) const {
    Vec out(dim());
    for (size_t i = 0; i < dim(); ++i) {
      if (sgn(x[i]) == 0) continue;
      for (size_t j = 0; j < dim(); ++j) {
        if (sgn(y[j]) == 0) continue;
        const Vec& c = bracket_coords(i, j);
        for (size_t k = 0; k < dim(); ++k)
          if (sgn(c[k]) != 0) out[k] += x[i] * y[j] * c[k];
      }
    }
    return out;
  }

  /// Trace form tr(xy).
  static Rat form(const Mat& x, const Mat& y) { return (x * y).trace(); }

  /// Defining condition of the family.
  bool satisfies_defining_condition(const Mat& x) const {
    switch (family) {
      case Family::GL: return true;
      case Family::SP: {
        Mat j = symplectic_form(n);
        return (x.transpose() * j + j * x).is_zero();
      }
      case Family::SO: return (x.transpose() + x).is_zero();
    }
    return false;
  }

  /// gl(n): index of E_ij (zero-based).
  size_t gl_index(size_t i, size_t j) const { return i * n + j; }
  /// so(n): index of E_ij - E_ji for i < j (zero-based).
  size_t so_index(size_t i, size_t j) const {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }
};

namespace detail {

inline Mat normalize_leading(Mat m) {
  for (const auto& q : m.entries())
    if (sgn(q) != 0) {
      Rat inv = 1 / q;
      return inv * std::move(m);
    }
  return m;
}

inline void finish_spec(LieAlgebraSpec& g) {
  const size_t N = g.matrix_size, d = g.dim();
  std::vector<Vec> cols;
  cols.reserve(d);
  for (const auto& b : g.basis) {
    if (!g.satisfies_defining_condition(b))
      throw std::logic_error("basis element violates the defining condition of " + g.name());
    cols.push_back(flatten(b));
  }
  g.solver = BasisSolver(Mat::from_columns(cols, N * N));
  g.bracket.resize(d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      g.bracket[i * d + j] = g.coordinates(commutator(g.basis[i], g.basis[j]));
  g.form_gram = Mat(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) g.form_gram(i, j) = LieAlgebraSpec::form(g.basis[i], g.basis[j]);
  g.gram_inverse = inverse(g.form_gram);
  g.dual_basis.clear();
  for (size_t i = 0; i < d; ++i) {
    Mat e(N, N);
    for (size_t j = 0; j < d; ++j) e.add_scaled(g.gram_inverse(i, j), g.basis[j]);
    g.dual_basis.push_back(std::move(e));
  }
}

}  // namespace detail

/// Builds gl(n), sp(2n) or so(n). Throws std::invalid_argument for n = 0 or
/// so(1).
inline std::shared_ptr<const LieAlgebraSpec> build_lie_algebra(Family family, size_t n) {
  if (n < 1) throw std::invalid_argument("unsupported n: " + std::to_string(n));
  if (family == Family::SO && n < 2)
    throw std::invalid_argument("unsupported n for so: " + std::to_string(n));
  auto g = std::make_shared<LieAlgebraSpec>();
  g->family = family;
  g->n = n;
  switch (family) {
    case Family::GL: {
      g->matrix_size = n;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          size_t idx = g->basis.size();
          g->basis.push_back(Mat::unit(n, n, i, j));
          if (i == j) g->cartan_indices.push_back(idx);
          else if (i < j) g->raising_indices.push_back(idx);
          else g->lowering_indices.push_back(idx);
        }
      break;
    }
    case Family::SP: {
      const size_t N = 2 * n;
      g->matrix_size = N;
      auto prime = [N](size_t a) { return N - 1 - a; };
      auto s = [n](size_t a) { return a < n ? 1 : -1; };
      for (size_t a = 0; a < n; ++a) {
        Mat h(N, N);
        h(a, a) = 1;
        h(prime(a), prime(a)) = -1;
        g->cartan_indices.push_back(g->basis.size());
        g->basis.push_back(std::move(h));
      }
      // Root vectors from the identification S^2(V) = sp(2n):
      // e_a e_b  ->  s(a) E_{b,a'} + s(b) E_{a,b'}.
      for (size_t a = 0; a < N; ++a)
        for (size_t b = a; b < N; ++b) {
          if (b == prime(a)) continue;
          Mat m(N, N);
          m(b, prime(a)) += s(a);
          m(a, prime(b)) += s(b);
          m = detail::normalize_leading(std::move(m));
          bool upper = true, lower = true;
          for (size_t i = 0; i < N; ++i)
            for (size_t j = 0; j < N; ++j)
              if (sgn(m(i, j)) != 0) {
                if (i >= j) upper = false;
                if (i <= j) lower = false;
              }
          size_t idx = g->basis.size();
          if (upper) g->raising_indices.push_back(idx);
          else if (lower) g->lowering_indices.push_back(idx);
          else throw std::logic_error("sp root vector is not triangular");
          g->basis.push_back(std::move(m));
        }
      break;
    }
    case Family::SO: {
      g->matrix_size = n;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
          Mat m(n, n);
          m(i, j) = 1;
          m(j, i) = -1;
          g->basis.push_back(std::move(m));
        }
      break;
    }
  }
  detail::finish_spec(*g);
  return g;
}

/// Pairs (e_i, e^i) with tr(e_i e^j) = delta_ij.
inline std::vector<std::pair<Mat, Mat>> casimir_dual_bases(const LieAlgebraSpec& g) {
  std::vector<std::pair<Mat, Mat>> out;
  out.reserve(g.dim());
  for (size_t i = 0; i < g.dim(); ++i) out.emplace_back(g.basis[i], g.dual_basis[i]);
  return out;
}

}  // namespace repcur
