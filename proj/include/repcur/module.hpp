#pragma once

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "repcur/lie_algebra.hpp"
#include "repcur/linalg.hpp"

namespace repcur {

/// Highest weight in epsilon coordinates (one entry per Cartan basis element).
struct Weight {
  std::vector<long> coords;

  long size() const {
    long s = 0;
    for (long c : coords) s += c;
    return s;
  }
  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(coords[i]);
    }
    return s + ")";
  }
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Dominance for GL (non-increasing) and SP (non-increasing, non-negative).
inline bool is_dominant(const LieAlgebraSpec& g, const Weight& w) {
  if (w.coords.size() != g.n) return false;
  for (size_t i = 1; i < w.coords.size(); ++i)
    if (w.coords[i - 1] < w.coords[i]) return false;
  if (g.family == Family::SP && !w.coords.empty() && w.coords.back() < 0) return false;
  return g.family != Family::SO;
}

/// Hard cap on carrier dimensions, from REPCUR_MAX_DIM (default 4096).
inline size_t carrier_dimension_limit() {
  if (const char* env = std::getenv("REPCUR_MAX_DIM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<size_t>(v);
  }
  return 4096;
}

/// A finite-dimensional g-module given by one action matrix per basis element.
/// `tensor_degree` records m when the module was realized inside V^{(x)m}.
struct GModule {
  std::shared_ptr<const LieAlgebraSpec> spec;
  size_t dim = 0;
  std::vector<Mat> actions;
  size_t tensor_degree = 0;
  std::string label;

  Mat action(const Vec& coords) const {
    Mat m(dim, dim);
    for (size_t i = 0; i < coords.size(); ++i) m.add_scaled(coords[i], actions[i]);
    return m;
  }
};

/// action([x, y]) == [action(x), action(y)] on all basis pairs.
inline bool satisfies_bracket(const GModule& w) {
  const auto& g = *w.spec;
  for (size_t i = 0; i < g.dim(); ++i)
    for (size_t j = 0; j < g.dim(); ++j)
      if (w.action(g.bracket_coords(i, j)) != commutator(w.actions[i], w.actions[j]))
        return false;
  return true;
}

inline GModule standard_module(std::shared_ptr<const LieAlgebraSpec> spec) {
  return GModule{spec, spec->matrix_size, spec->basis, 1, "V"};
}

inline GModule trivial_module(std::shared_ptr<const LieAlgebraSpec> spec) {
  const size_t d = spec->dim();
  return GModule{std::move(spec), 1, std::vector<Mat>(d, Mat(1, 1)), 0, "1"};
}

inline bool same_algebra(const LieAlgebraSpec& a, const LieAlgebraSpec& b) {
  return a.family == b.family && a.n == b.n;
}

/// Tensor product with Kronecker order factor-1-major; x acts by the Leibniz
/// rule sum_i 1 (x) ... (x) x_i (x) ... (x) 1.
inline GModule tensor_module(std::span<const GModule> factors) {
  if (factors.empty()) throw std::invalid_argument("tensor_module: no factors");
  const auto& spec = factors.front().spec;
  size_t total = 1, degree = 0;
  std::string label;
  for (const auto& f : factors) {
    label += (label.empty() ? "" : " x ") + f.label;
    if (!same_algebra(*f.spec, *spec)) throw std::invalid_argument("tensor_module: spec mismatch");
    total *= f.dim;
    degree += f.tensor_degree;
    if (total > carrier_dimension_limit())
      throw std::length_error("carrier dimension exceeds REPCUR_MAX_DIM (" +
                              std::to_string(carrier_dimension_limit()) + ")");
  }
  if (factors.size() == 1) return factors.front();
  GModule out{spec, total, {}, degree, label};
  out.actions.reserve(spec->dim());
  for (size_t x = 0; x < spec->dim(); ++x) {
    Mat sum(total, total);
    size_t left = 1;
    for (size_t i = 0; i < factors.size(); ++i) {
      size_t right = total / (left * factors[i].dim);
      sum += kron(kron(Mat::identity(left), factors[i].actions[x]), Mat::identity(right));
      left *= factors[i].dim;
    }
    out.actions.push_back(std::move(sum));
  }
  return out;
}

inline GModule tensor_power(const GModule& v, size_t m) {
  if (m == 0) return trivial_module(v.spec);
  std::vector<GModule> copies(m, v);
  return tensor_module(copies);
}

/// Columns spanning the smallest subspace containing `seeds` and stable under
/// every lowering action. The returned columns are the generated vectors
/// themselves, so weight vectors stay weight vectors.
inline Mat lowering_closure(const GModule& w, const Mat& seeds) {
  const auto& g = *w.spec;
  SpanBuilder sb(w.dim);
  std::vector<Vec> kept;
  std::vector<Vec> frontier;
  for (size_t j = 0; j < seeds.cols(); ++j) {
    Vec v = seeds.column(j);
    if (sb.add(v)) {
      kept.push_back(v);
      frontier.push_back(std::move(v));
    }
  }
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (size_t idx : g.lowering_indices) {
        Vec u = w.actions[idx].apply(v);
        if (sb.add(u)) {
          kept.push_back(u);
          next.push_back(std::move(u));
        }
      }
    frontier.swap(next);
  }
  return Mat::from_columns(kept, w.dim);
}

/// Restriction of w to the invariant subspace spanned by the columns of basis.
inline GModule restrict_to_submodule(const GModule& w, const Mat& basis) {
  BasisSolver solver(basis);
  GModule out{w.spec, basis.cols(), {}, w.tensor_degree, "sub(" + w.label + ")"};
  out.actions.reserve(w.actions.size());
  for (const auto& a : w.actions) out.actions.push_back(restrict_to(solver, a, basis));
  return out;
}

namespace detail {

/// Joint kernel of (H_a - mu_a) over the Cartan and of every raising action.
inline std::vector<Vec> highest_weight_space(const GModule& w, const Weight& mu) {
  const auto& g = *w.spec;
  std::vector<Mat> blocks;
  for (size_t a = 0; a < g.cartan_indices.size(); ++a) {
    Mat h = w.actions[g.cartan_indices[a]];
    for (size_t i = 0; i < w.dim; ++i) h(i, i) -= mu.coords[a];
    blocks.push_back(std::move(h));
  }
  for (size_t idx : g.raising_indices) blocks.push_back(w.actions[idx]);
  return kernel_basis(vstack(blocks));
}

inline void require_split_cartan(const LieAlgebraSpec& g, const char* what) {
  if (!g.has_split_cartan())
    throw std::invalid_argument(std::string(what) + ": " + g.name() +
                                " has no rational split Cartan in this realization");
}

}  // namespace detail

/// Irreducible module of highest weight lambda, realized inside V^{(x)m}: the
/// first vector of the highest-weight space of weight lambda generates it
/// under the lowering actions.
inline GModule build_irrep(std::shared_ptr<const LieAlgebraSpec> spec, const Weight& lambda,
                           size_t m) {
  const auto& g = *spec;
  detail::require_split_cartan(g, "build_irrep");
  if (!is_dominant(g, lambda)) throw std::invalid_argument("weight not dominant: " + lambda.str());
  long total = lambda.size();
  if (g.family == Family::GL) {
    if (lambda.coords.back() < 0 || total != static_cast<long>(m))
      throw std::invalid_argument("weight " + lambda.str() + " is not a partition of " +
                                  std::to_string(m));
  } else if (total > static_cast<long>(m) || (static_cast<long>(m) - total) % 2 != 0) {
    throw std::invalid_argument("weight " + lambda.str() + " does not occur in V^" +
                                std::to_string(m));
  }
  GModule ambient = tensor_power(standard_module(spec), m);
  auto hw = detail::highest_weight_space(ambient, lambda);
  if (hw.empty())
    throw std::invalid_argument("weight " + lambda.str() + " not realizable in V^" +
                                std::to_string(m));
  Mat seed = Mat::from_columns({hw.front()}, ambient.dim);
  GModule irrep = restrict_to_submodule(ambient, lowering_closure(ambient, seed));
  irrep.tensor_degree = m;
  irrep.label = "V" + lambda.str();
  return irrep;
}

struct IsotypicComponent {
  Weight mu;
  size_t multiplicity = 0;
  Mat hwv_basis;        // columns: a basis of W[mu]^+
  Mat component_basis;  // columns: a basis of W[mu]
};

namespace detail {

/// Splits the column space of `space` (inside the module) into joint
/// eigenspaces of the given commuting operators, assuming integer eigenvalues.
inline void split_joint(const std::vector<Mat>& ops, size_t which, const Mat& space,
                        std::vector<long>& prefix,
                        std::vector<std::pair<Weight, Mat>>& out) {
  if (space.cols() == 0) return;
  if (which == ops.size()) {
    out.push_back({Weight{prefix}, space});
    return;
  }
  BasisSolver solver(space);
  Mat h = restrict_to(solver, ops[which], space);
  // Spectral radius is bounded by the max absolute row sum.
  Rat bound = 0;
  for (size_t i = 0; i < h.rows(); ++i) {
    Rat row = 0;
    for (size_t j = 0; j < h.cols(); ++j) row += abs(h(i, j));
    if (row > bound) bound = row;
  }
  mpz_class ceil_bound;
  mpz_cdiv_q(ceil_bound.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  long r = ceil_bound.get_si();
  size_t found = 0;
  for (long e = r; e >= -r; --e) {
    Mat shifted = h;
    for (size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= e;
    auto ker = kernel_basis(shifted);
    if (ker.empty()) continue;
    found += ker.size();
    Mat sub = space * Mat::from_columns(ker, h.rows());
    prefix.push_back(e);
    split_joint(ops, which + 1, sub, prefix, out);
    prefix.pop_back();
  }
  if (found != space.cols())
    throw std::domain_error("Cartan action is not diagonalizable with integer eigenvalues");
}

}  // namespace detail

/// Isotypic components ordered by mu lexicographically descending.
inline std::vector<IsotypicComponent> isotypic_decompose(const GModule& w) {
  const auto& g = *w.spec;
  detail::require_split_cartan(g, "isotypic_decompose");
  std::vector<Mat> raising;
  for (size_t idx : g.raising_indices) raising.push_back(w.actions[idx]);
  auto ker = raising.empty() ? kernel_basis(Mat(0, w.dim)) : kernel_basis(vstack(raising));
  Mat hw_space = Mat::from_columns(ker, w.dim);
  std::vector<Mat> cartan;
  for (size_t idx : g.cartan_indices) cartan.push_back(w.actions[idx]);
  std::vector<std::pair<Weight, Mat>> parts;
  std::vector<long> prefix;
  detail::split_joint(cartan, 0, hw_space, prefix, parts);
  std::vector<IsotypicComponent> out;
  for (auto& [mu, hwv] : parts) {
    if (!is_dominant(g, mu))
      throw std::logic_error("highest weight vector of non-dominant weight " + mu.str());
    IsotypicComponent c;
    c.mu = mu;
    c.multiplicity = hwv.cols();
    c.component_basis = lowering_closure(w, hwv);
    c.hwv_basis = std::move(hwv);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const IsotypicComponent& a, const IsotypicComponent& b) { return a.mu > b.mu; });
  return out;
}

/// The irreducible submodule generated by one highest weight vector.
inline GModule irrep_from_hwv(const GModule& w, const Vec& hwv) {
  return restrict_to_submodule(w, lowering_closure(w, Mat::from_columns({hwv}, w.dim)));
}

/// Sum_i action(e_i) action(e^i) with e^i the trace-form dual basis.
inline Mat casimir_operator(const GModule& w) {
  const auto& g = *w.spec;
  Mat c(w.dim, w.dim);
  for (size_t i = 0; i < g.dim(); ++i)
    for (size_t j = 0; j < g.dim(); ++j)
      if (sgn(g.gram_inverse(i, j)) != 0)
        c.add_scaled(g.gram_inverse(i, j), w.actions[i] * w.actions[j]);
  return c;
}

/// Scalar by which the Casimir acts; std::domain_error if it is not scalar.
inline Rat casimir_eigenvalue(const GModule& irrep) {
  Rat c;
  if (!casimir_operator(irrep).is_scalar(&c))
    throw std::domain_error("Casimir operator is not scalar: module is not irreducible");
  return c;
}

inline std::vector<Mat> commutant(const GModule& w) { return commutant_basis(w.actions, w.dim); }

/// dim End_g(W).
inline size_t commutant_dimension(const GModule& w) { return commutant(w).size(); }

}  // namespace repcur
