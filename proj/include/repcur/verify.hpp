#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "repcur/currents.hpp"
#include "repcur/invariants.hpp"
#include "repcur/linalg.hpp"
#include "repcur/module.hpp"

namespace repcur {

/// Outcome of one exact check. Expected and actual are exact rationals or
/// dimension counts rendered as strings.
struct CheckReport {
  std::string check_name;
  std::vector<std::pair<std::string, std::string>> parameters;
  bool pass = false;
  std::string expected;
  std::string actual;
  long long runtime_ms = 0;

  CheckReport& param(std::string key, std::string value) {
    for (auto& [k, v] : parameters)
      if (k == key) {
        v = std::move(value);
        return *this;
      }
    parameters.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  const std::string* find_param(const std::string& key) const {
    for (const auto& [k, v] : parameters)
      if (k == key) return &v;
    return nullptr;
  }
};

/// Inverts the status of a negative control: it passes when the underlying
/// check failed.
inline CheckReport expect_failure(CheckReport r) {
  r.pass = !r.pass;
  r.param("expect_fail", "true");
  r.expected = "fail (check expects " + r.expected + ")";
  r.actual = (r.pass ? "fail (" : "pass (") + r.actual + ")";
  return r;
}

namespace detail {

class Stopwatch {
 public:
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string join_points(std::span<const Rat> pts) {
  std::string s;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ',';
    s += format_rational(pts[i]);
  }
  return s;
}

inline void describe_module(CheckReport& r, const EvaluationModule& em) {
  r.param("algebra", em.spec().name());
  r.param("family", family_name(em.spec().family));
  r.param("n", std::to_string(em.spec().n));
  r.param("module", em.carrier().label);
  r.param("d", std::to_string(em.size()));
  r.param("points", join_points(em.points()));
}

/// Caches evaluation_action(x, t^m) across many operators on one module.
class OperatorEvaluator {
 public:
  explicit OperatorEvaluator(const EvaluationModule& em) : em_(em) {}

  const Mat& letter(const Letter& l) {
    auto it = cache_.find(l);
    if (it == cache_.end())
      it = cache_.emplace(l, evaluation_action(l.basis, Poly::monomial(l.degree), em_)).first;
    return it->second;
  }

  Mat operator()(const CurrentOperator& op) {
    Mat out(em_.dim(), em_.dim());
    for (const auto& term : op.terms) {
      if (sgn(term.coeff) == 0) continue;
      if (term.word.empty()) {
        out.add_scaled(term.coeff, Mat::identity(em_.dim()));
        continue;
      }
      Mat prod = letter(term.word.front());
      for (size_t j = 1; j < term.word.size() && !prod.is_zero(); ++j)
        prod = prod * letter(term.word[j]);
      out.add_scaled(term.coeff, prod);
    }
    return out;
  }

 private:
  const EvaluationModule& em_;
  std::map<Letter, Mat> cache_;
};

inline void for_each_degree_tuple(size_t k, size_t cap, bool sorted_only,
                                  const std::function<void(const std::vector<size_t>&)>& f) {
  for_each_tuple(k, cap + 1, [&](const std::vector<size_t>& t) {
    if (sorted_only)
      for (size_t j = 1; j < t.size(); ++j)
        if (t[j - 1] > t[j]) return;
    f(t);
  });
}

}  // namespace detail

/// Images theta(t^{n_1}, ..., t^{n_k}) over the given invariants and all
/// degree tuples <= cap, reduced to a linearly independent subset.
struct GeneratorImages {
  std::vector<Mat> independent;
  size_t generated = 0;
};

inline GeneratorImages generator_images(const EvaluationModule& em,
                                        std::span<const NamedInvariant> gens, size_t cap,
                                        bool sorted_only = false) {
  detail::OperatorEvaluator eval(em);
  GeneratorImages out;
  SpanBuilder sb(em.dim() * em.dim());
  for (const auto& g : gens)
    detail::for_each_degree_tuple(g.tensor.degree(), cap, sorted_only,
                                  [&](const std::vector<size_t>& degs) {
                                    Mat m = eval(theta_operator(g.tensor, std::span(degs)));
                                    ++out.generated;
                                    if (sb.add(flatten(m))) out.independent.push_back(std::move(m));
                                  });
  return out;
}

/// Default tensor-degree bound for the spanning families: the V-degree m of
/// the carrier for gl, 2m for sp and so (whose commutants need contractions).
inline size_t default_max_tensor_degree(const EvaluationModule& em) {
  size_t m = std::max<size_t>(em.carrier().tensor_degree, 1);
  return em.spec().family == Family::GL ? m : 2 * m;
}

/// Sum over y in the basis of sum_j x_1 (x) ... (x) [y, x_j] (x) ... (x) x_k
/// must vanish.
inline CheckReport check_ad_invariance(const InvariantTensor& theta, const LieAlgebraSpec& g,
                                       const std::string& label = "") {
  detail::Stopwatch sw;
  CheckReport r;
  r.check_name = "ad-invariance";
  r.param("algebra", g.name()).param("family", family_name(g.family));
  r.param("n", std::to_string(g.n)).param("k", std::to_string(theta.degree()));
  if (!label.empty()) r.param("tensor", label);
  size_t surviving = 0;
  for (size_t y = 0; y < g.dim(); ++y) {
    InvariantTensor acc(theta.degree());
    for (const auto& [idx, c] : theta.terms())
      for (size_t j = 0; j < idx.size(); ++j) {
        const Vec& br = g.bracket_coords(y, idx[j]);
        for (size_t b = 0; b < br.size(); ++b) {
          if (sgn(br[b]) == 0) continue;
          auto moved = idx;
          moved[j] = b;
          acc.add(c * br[b], std::move(moved));
        }
      }
    surviving += acc.term_count();
  }
  r.expected = "0";
  r.actual = std::to_string(surviving);
  r.pass = surviving == 0;
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// [action(y), theta(P_1..P_k)] = 0 on the module for every basis y.
inline CheckReport check_commutant(const InvariantTensor& theta, std::span<const Poly> polys,
                                   const EvaluationModule& em, const std::string& label = "") {
  detail::Stopwatch sw;
  CheckReport r;
  r.check_name = "commutant";
  detail::describe_module(r, em);
  r.param("k", std::to_string(theta.degree()));
  if (!label.empty()) r.param("tensor", label);
  std::string ps;
  for (size_t i = 0; i < polys.size(); ++i) ps += (i ? ";" : "") + polys[i].str();
  r.param("polys", ps);
  Mat op = current_operator_matrix(theta_operator(theta, polys), em);
  size_t bad = 0;
  for (const auto& a : em.carrier().actions)
    if (a * op != op * a) ++bad;
  r.expected = "0";
  r.actual = std::to_string(bad);
  r.pass = bad == 0;
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// Scalar predicted for Omega(P, Q) on the mu-isotypic component of
/// V(lambda_1) (x) V(lambda_2).
inline Rat casimir_formula_scalar(const Rat& w1, const Rat& w2, const Rat& z1, const Rat& z2,
                                  const Rat& c1, const Rat& c2, const Rat& cmu) {
  return w1 * z1 * c1 + w2 * z2 * c2 + (w1 * z2 + w2 * z1) / 2 * (cmu - c1 - c2);
}

/// Omega(P, Q) acts on each isotypic component of a two-factor evaluation
/// module by the predicted scalar.
inline CheckReport check_casimir_formula(const EvaluationModule& em, const Poly& p,
                                         const Poly& q) {
  detail::Stopwatch sw;
  if (em.size() != 2) throw std::invalid_argument("casimir formula needs exactly two factors");
  if (!em.points_distinct()) throw std::invalid_argument("points must be pairwise distinct");
  const auto& g = em.spec();
  CheckReport r;
  r.check_name = "casimir";
  detail::describe_module(r, em);
  r.param("P", p.str()).param("Q", q.str());
  const Rat c1 = casimir_eigenvalue(em.factors()[0]);
  const Rat c2 = casimir_eigenvalue(em.factors()[1]);
  const Rat w1 = p(em.points()[0]), w2 = p(em.points()[1]);
  const Rat z1 = q(em.points()[0]), z2 = q(em.points()[1]);
  r.param("C_lambda1", format_rational(c1)).param("C_lambda2", format_rational(c2));
  Poly pq[2] = {p, q};
  Mat op = current_operator_matrix(theta_operator(casimir_tensor(g), pq), em);
  bool ok = true;
  for (const auto& comp : isotypic_decompose(em.carrier())) {
    Rat cmu = casimir_eigenvalue(irrep_from_hwv(em.carrier(), comp.hwv_basis.column(0)));
    Rat want = casimir_formula_scalar(w1, w2, z1, z2, c1, c2, cmu);
    BasisSolver solver(comp.component_basis);
    Mat restricted = restrict_to(solver, op, comp.component_basis);
    Rat got;
    std::string got_s =
        restricted.is_scalar(&got) ? format_rational(got) : std::string("non-scalar");
    if (got_s == "non-scalar" || got != want) ok = false;
    std::string tag = comp.mu.str() + ":";
    r.expected += (r.expected.empty() ? "" : ";") + tag + format_rational(want);
    r.actual += (r.actual.empty() ? "" : ";") + tag + got_s;
  }
  r.pass = ok;
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// Image of sum_ij E_ij(P_tau) E_ji(Q_tau) on (Q^n)^{(x)k} at the points.
inline Mat schur_weyl_image(size_t r, size_t s, size_t n, std::span<const Rat> points) {
  auto [p, q] = schur_weyl_polys(r, s, points);
  auto g = build_lie_algebra(Family::GL, n);
  std::vector<GModule> factors(points.size(), standard_module(g));
  EvaluationModule em(std::move(factors), std::vector<Rat>(points.begin(), points.end()));
  Poly pq[2] = {p, q};
  return current_operator_matrix(
      theta_operator(theta_sigma_gl(Permutation::transposition(2, 1, 2), n), pq), em);
}

inline CheckReport check_schur_weyl(size_t r, size_t s, size_t n, std::span<const Rat> points) {
  detail::Stopwatch sw;
  if (!pairwise_distinct(points)) throw std::invalid_argument("points must be pairwise distinct");
  const size_t k = points.size();
  CheckReport rep;
  rep.check_name = "schur-weyl";
  rep.param("algebra", "gl(" + std::to_string(n) + ")").param("n", std::to_string(n));
  rep.param("k", std::to_string(k)).param("points", detail::join_points(points));
  rep.param("tau", "(" + std::to_string(r) + " " + std::to_string(s) + ")");
  auto [p, q] = schur_weyl_polys(r, s, points);
  rep.param("P_tau", p.str()).param("Q_tau", q.str());
  Mat got = schur_weyl_image(r, s, n, points);
  Mat want = place_permutation_matrix(Permutation::transposition(k, r, s), n);
  size_t diff = 0;
  for (size_t i = 0; i < got.entries().size(); ++i)
    if (got.entries()[i] != want.entries()[i]) ++diff;
  rep.expected = "place permutation (" + std::to_string(r) + " " + std::to_string(s) + ")";
  rep.actual = diff == 0 ? rep.expected : "differs in " + std::to_string(diff) + " entries";
  rep.pass = diff == 0;
  rep.runtime_ms = sw.elapsed_ms();
  return rep;
}

/// For every ordered pair of transpositions, the product of the preimage
/// images equals the place permutation of the composite.
inline CheckReport check_schur_weyl_products(size_t n, std::span<const Rat> points) {
  detail::Stopwatch sw;
  const size_t k = points.size();
  CheckReport rep;
  rep.check_name = "schur-weyl-products";
  rep.param("algebra", "gl(" + std::to_string(n) + ")").param("n", std::to_string(n));
  rep.param("k", std::to_string(k)).param("points", detail::join_points(points));
  std::vector<std::pair<Permutation, Mat>> images;
  for (size_t r = 1; r <= k; ++r)
    for (size_t s = r + 1; s <= k; ++s)
      images.emplace_back(Permutation::transposition(k, r, s), schur_weyl_image(r, s, n, points));
  size_t total = 0, good = 0;
  for (const auto& [a, ma] : images)
    for (const auto& [b, mb] : images) {
      ++total;
      if (ma * mb == place_permutation_matrix(a * b, n)) ++good;
    }
  rep.expected = std::to_string(total);
  rep.actual = std::to_string(good);
  rep.pass = good == total;
  rep.runtime_ms = sw.elapsed_ms();
  return rep;
}

/// Span of the spanning-family images equals dim End_g(W).
inline CheckReport check_span_surjectivity(const EvaluationModule& em, size_t degree_cap,
                                           size_t max_tensor_degree) {
  detail::Stopwatch sw;
  CheckReport r;
  r.check_name = "span";
  detail::describe_module(r, em);
  r.param("degree_cap", std::to_string(degree_cap));
  r.param("max_tensor_degree", std::to_string(max_tensor_degree));
  auto gens = invariant_generators(em.spec(), max_tensor_degree);
  auto imgs = generator_images(em, gens, degree_cap);
  r.param("generators", std::to_string(gens.size()));
  r.param("images", std::to_string(imgs.generated));
  size_t expected = commutant_dimension(em.carrier());
  r.expected = std::to_string(expected);
  r.actual = std::to_string(imgs.independent.size());
  r.pass = expected == imgs.independent.size();
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// Burnside criterion on every W[mu]^+: the algebra generated by the
/// restricted invariant images is all mult x mult matrices.
inline CheckReport check_isotypic_irreducibility(const EvaluationModule& em, size_t degree_cap,
                                                 size_t max_tensor_degree) {
  detail::Stopwatch sw;
  CheckReport r;
  r.check_name = "irreducibility";
  detail::describe_module(r, em);
  r.param("degree_cap", std::to_string(degree_cap));
  r.param("max_tensor_degree", std::to_string(max_tensor_degree));
  r.param("hypothesis", em.points_distinct() ? "points distinct"
                                             : "violated: points not pairwise distinct");
  auto gens = invariant_generators(em.spec(), max_tensor_degree);
  auto imgs = generator_images(em, gens, degree_cap);
  bool ok = true;
  for (const auto& comp : isotypic_decompose(em.carrier())) {
    BasisSolver solver(comp.hwv_basis);
    std::vector<Mat> restricted;
    for (const auto& m : imgs.independent)
      restricted.push_back(restrict_to(solver, m, comp.hwv_basis));
    size_t dim = algebra_closure(restricted, comp.multiplicity).size();
    size_t want = comp.multiplicity * comp.multiplicity;
    if (dim != want) ok = false;
    std::string tag = comp.mu.str() + ":";
    r.expected += (r.expected.empty() ? "" : ";") + tag + std::to_string(want);
    r.actual += (r.actual.empty() ? "" : ";") + tag + std::to_string(dim);
  }
  r.pass = ok;
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// The cycle invariants theta_{sigma_j}(n_1..n_j), j <= max_cycle, generate
/// the full commutant as an algebra. The closure over sorted tuples only is
/// recorded but not judged.
inline CheckReport check_cycle_generation(const EvaluationModule& em, size_t degree_cap,
                                          size_t max_cycle) {
  detail::Stopwatch sw;
  if (em.spec().family != Family::GL) throw std::invalid_argument("cycle generation needs gl(n)");
  CheckReport r;
  r.check_name = "cycle-generation";
  detail::describe_module(r, em);
  r.param("degree_cap", std::to_string(degree_cap));
  r.param("max_cycle", std::to_string(max_cycle));
  std::vector<NamedInvariant> cycles;
  for (size_t j = 1; j <= max_cycle; ++j)
    cycles.push_back({"theta_cycle/k=" + std::to_string(j), theta_cycle_gl(j, em.spec().n)});
  auto all = generator_images(em, cycles, degree_cap, false);
  auto sorted = generator_images(em, cycles, degree_cap, true);
  size_t dim = algebra_closure(all.independent, em.dim()).size();
  size_t dim_sorted = algebra_closure(sorted.independent, em.dim()).size();
  r.param("info.sorted_tuple_closure_dim", std::to_string(dim_sorted));
  size_t expected = commutant_dimension(em.carrier());
  r.expected = std::to_string(expected);
  r.actual = std::to_string(dim);
  r.pass = dim == expected;
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// The g[t]-commutant (degrees <= cap) is one-dimensional.
inline CheckReport check_evaluation_irreducibility(const EvaluationModule& em, size_t degree_cap) {
  detail::Stopwatch sw;
  CheckReport r;
  r.check_name = "eval-irreducibility";
  detail::describe_module(r, em);
  r.param("degree_cap", std::to_string(degree_cap));
  r.param("hypothesis", em.points_distinct() ? "points distinct"
                                             : "violated: points not pairwise distinct");
  size_t dim = current_algebra_commutant_dimension(em, degree_cap);
  r.expected = "1";
  r.actual = std::to_string(dim);
  r.pass = dim == 1;
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

}  // namespace repcur
