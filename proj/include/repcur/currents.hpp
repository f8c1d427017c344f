#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "repcur/linalg.hpp"
#include "repcur/module.hpp"
#include "repcur/rational.hpp"

namespace repcur {

/// V(lambda_1) (x) ... (x) V(lambda_d) with x(P) acting on factor i scaled
/// by P(p_i). Distinctness of the points is checked where it matters, not
/// here.
class EvaluationModule {
 public:
  EvaluationModule(std::vector<GModule> factors, std::vector<Rat> points)
      : factors_(std::move(factors)), points_(std::move(points)) {
    if (factors_.empty()) throw std::invalid_argument("evaluation module needs a factor");
    if (factors_.size() != points_.size())
      throw std::invalid_argument("evaluation module: " + std::to_string(factors_.size()) +
                                  " factors but " + std::to_string(points_.size()) + " points");
    carrier_ = tensor_module(factors_);
    const size_t D = carrier_.dim;
    const size_t dg = spec().dim();
    local_.resize(factors_.size());
    size_t left = 1;
    for (size_t i = 0; i < factors_.size(); ++i) {
      size_t right = D / (left * factors_[i].dim);
      local_[i].reserve(dg);
      for (size_t x = 0; x < dg; ++x)
        local_[i].push_back(
            kron(kron(Mat::identity(left), factors_[i].actions[x]), Mat::identity(right)));
      left *= factors_[i].dim;
    }
  }

  const std::vector<GModule>& factors() const { return factors_; }
  const std::vector<Rat>& points() const { return points_; }
  const GModule& carrier() const { return carrier_; }
  const LieAlgebraSpec& spec() const { return *carrier_.spec; }
  size_t size() const { return factors_.size(); }
  size_t dim() const { return carrier_.dim; }
  bool points_distinct() const { return pairwise_distinct(points_); }

  /// 1 (x) ... (x) action_i(basis_x) (x) ... (x) 1 on the carrier.
  const Mat& local_action(size_t factor, size_t basis_index) const {
    return local_.at(factor).at(basis_index);
  }

  /// The cap d-1 beyond which monomial degrees add nothing (interpolation at
  /// d distinct points).
  size_t auto_degree_cap() const { return factors_.size() - 1; }

 private:
  std::vector<GModule> factors_;
  std::vector<Rat> points_;
  GModule carrier_;
  std::vector<std::vector<Mat>> local_;
};

inline Mat evaluation_action(const Vec& coords, const Poly& p, const EvaluationModule& em) {
  Mat out(em.dim(), em.dim());
  for (size_t i = 0; i < em.size(); ++i) {
    Rat w = p(em.points()[i]);
    if (sgn(w) == 0) continue;
    for (size_t x = 0; x < coords.size(); ++x)
      if (sgn(coords[x]) != 0) out.add_scaled(w * coords[x], em.local_action(i, x));
  }
  return out;
}

inline Mat evaluation_action(size_t basis_index, const Poly& p, const EvaluationModule& em) {
  Mat out(em.dim(), em.dim());
  for (size_t i = 0; i < em.size(); ++i) {
    Rat w = p(em.points()[i]);
    if (sgn(w) != 0) out.add_scaled(w, em.local_action(i, basis_index));
  }
  return out;
}

/// x must lie in g; throws std::domain_error otherwise.
inline Mat evaluation_action(const Mat& x, const Poly& p, const EvaluationModule& em) {
  return evaluation_action(em.spec().coordinates(x), p, em);
}

/// x (x) t^degree in g[t], with x a basis element.
struct Letter {
  size_t basis = 0;
  size_t degree = 0;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct CurrentTerm {
  Rat coeff;
  std::vector<Letter> word;  // x_1(t^{m_1}) ... x_k(t^{m_k}); x_k acts first
};

/// Element of U(g[t]) as a formal sum of words in degree-tagged basis
/// elements.
struct CurrentOperator {
  std::vector<CurrentTerm> terms;

  static CurrentOperator scalar(const Rat& c) { return {{CurrentTerm{c, {}}}}; }

  /// x(P) for x given by basis coordinates, expanded into monomials.
  static CurrentOperator generator(const Vec& coords, const Poly& p) {
    CurrentOperator op;
    for (size_t x = 0; x < coords.size(); ++x) {
      if (sgn(coords[x]) == 0) continue;
      for (size_t m = 0; m < p.coeffs().size(); ++m)
        if (sgn(p.coeffs()[m]) != 0)
          op.terms.push_back({coords[x] * p.coeffs()[m], {Letter{x, m}}});
    }
    return op;
  }

  friend CurrentOperator operator+(CurrentOperator a, const CurrentOperator& b) {
    a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
    return a;
  }
  friend CurrentOperator operator*(const Rat& s, CurrentOperator a) {
    for (auto& t : a.terms) t.coeff *= s;
    return a;
  }
  friend CurrentOperator operator-(CurrentOperator a, const CurrentOperator& b) {
    return a + Rat(-1) * b;
  }
  /// Product in U(g[t]): concatenation of words.
  friend CurrentOperator operator*(const CurrentOperator& a, const CurrentOperator& b) {
    CurrentOperator out;
    for (const auto& s : a.terms)
      for (const auto& t : b.terms) {
        CurrentTerm u{s.coeff * t.coeff, s.word};
        u.word.insert(u.word.end(), t.word.begin(), t.word.end());
        out.terms.push_back(std::move(u));
      }
    return out;
  }
};

/// Image of a CurrentOperator on an evaluation module. Words compose as
/// matrices, so the rightmost letter acts first.
inline Mat current_operator_matrix(const CurrentOperator& op, const EvaluationModule& em) {
  std::map<Letter, Mat> cache;
  auto letter_matrix = [&](const Letter& l) -> const Mat& {
    auto it = cache.find(l);
    if (it == cache.end())
      it = cache.emplace(l, evaluation_action(l.basis, Poly::monomial(l.degree), em)).first;
    return it->second;
  };
  Mat out(em.dim(), em.dim());
  for (const auto& term : op.terms) {
    if (sgn(term.coeff) == 0) continue;
    if (term.word.empty()) {
      out.add_scaled(term.coeff, Mat::identity(em.dim()));
      continue;
    }
    Mat prod = letter_matrix(term.word.front());
    for (size_t j = 1; j < term.word.size() && !prod.is_zero(); ++j)
      prod = prod * letter_matrix(term.word[j]);
    out.add_scaled(term.coeff, prod);
  }
  return out;
}

/// Element of g^{(x)k} as a formal sum of basis-index tuples. Terms are kept
/// merged and free of zero coefficients.
class InvariantTensor {
 public:
  explicit InvariantTensor(size_t k = 0) : k_(k) {}

  size_t degree() const { return k_; }
  const std::map<std::vector<size_t>, Rat>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add(const Rat& coeff, std::vector<size_t> indices) {
    if (indices.size() != k_) throw std::invalid_argument("InvariantTensor: arity mismatch");
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(indices), coeff);
    if (!inserted) {
      it->second += coeff;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Rat coefficient(const std::vector<size_t>& indices) const {
    auto it = terms_.find(indices);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  friend bool operator==(const InvariantTensor& a, const InvariantTensor& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }
  friend InvariantTensor operator*(const Rat& s, const InvariantTensor& t) {
    InvariantTensor out(t.k_);
    for (const auto& [idx, c] : t.terms_) out.add(s * c, idx);
    return out;
  }

  /// Tensor product; index tuples concatenate.
  friend InvariantTensor tensor_product(const InvariantTensor& a, const InvariantTensor& b) {
    InvariantTensor out(a.k_ + b.k_);
    for (const auto& [i, c] : a.terms_)
      for (const auto& [j, e] : b.terms_) {
        std::vector<size_t> idx = i;
        idx.insert(idx.end(), j.begin(), j.end());
        out.add(c * e, std::move(idx));
      }
    return out;
  }

  /// Coordinate vector over all dim^k index tuples (lexicographic order).
  Vec flatten(size_t dim) const {
    size_t len = 1;
    for (size_t i = 0; i < k_; ++i) len *= dim;
    Vec v(len);
    for (const auto& [idx, c] : terms_) {
      size_t pos = 0;
      for (size_t i : idx) pos = pos * dim + i;
      v[pos] = c;
    }
    return v;
  }

 private:
  size_t k_;
  std::map<std::vector<size_t>, Rat> terms_;
};

/// theta(P_1, ..., P_k) expanded multilinearly over the monomials of each P_j.
inline CurrentOperator theta_operator(const InvariantTensor& theta, std::span<const Poly> polys) {
  if (polys.size() != theta.degree())
    throw std::invalid_argument("theta_operator: arity mismatch (" +
                                std::to_string(theta.degree()) + " slots, " +
                                std::to_string(polys.size()) + " polynomials)");
  std::vector<std::vector<std::pair<size_t, Rat>>> monos(polys.size());
  for (size_t j = 0; j < polys.size(); ++j)
    for (size_t m = 0; m < polys[j].coeffs().size(); ++m)
      if (sgn(polys[j].coeffs()[m]) != 0) monos[j].push_back({m, polys[j].coeffs()[m]});
  CurrentOperator op;
  for (const auto& [idx, c] : theta.terms()) {
    std::vector<size_t> choice(polys.size(), 0);
    bool empty = std::any_of(monos.begin(), monos.end(), [](const auto& v) { return v.empty(); });
    if (empty) continue;
    while (true) {
      CurrentTerm t{c, {}};
      t.word.reserve(idx.size());
      for (size_t j = 0; j < idx.size(); ++j) {
        const auto& [deg, coef] = monos[j][choice[j]];
        t.coeff *= coef;
        t.word.push_back(Letter{idx[j], deg});
      }
      op.terms.push_back(std::move(t));
      size_t j = 0;
      while (j < choice.size() && ++choice[j] == monos[j].size()) choice[j++] = 0;
      if (j == choice.size()) break;
    }
  }
  return op;
}

/// theta(t^{n_1}, ..., t^{n_k}).
inline CurrentOperator theta_operator(const InvariantTensor& theta,
                                      std::span<const size_t> degrees) {
  std::vector<Poly> polys;
  polys.reserve(degrees.size());
  for (size_t n : degrees) polys.push_back(Poly::monomial(n));
  return theta_operator(theta, polys);
}

/// All evaluation_action(x, t^m) for basis x and m <= cap.
inline std::vector<Mat> current_algebra_actions(const EvaluationModule& em, size_t cap) {
  std::vector<Mat> out;
  for (size_t m = 0; m <= cap; ++m)
    for (size_t x = 0; x < em.spec().dim(); ++x)
      out.push_back(evaluation_action(x, Poly::monomial(m), em));
  return out;
}

/// Dimension of the commutant of the g[t]-action with degrees capped at cap.
inline size_t current_algebra_commutant_dimension(const EvaluationModule& em, size_t cap) {
  return commutant_basis(current_algebra_actions(em, cap), em.dim()).size();
}

}  // namespace repcur
