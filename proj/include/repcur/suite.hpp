#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "repcur/verify.hpp"

namespace repcur {

/// Deterministic source for randomized polynomials, points and tensors. Draws
/// use plain modular reduction so the stream is identical across standard
/// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  long between(long lo, long hi) { return lo + static_cast<long>(below(hi - lo + 1)); }

  /// a/b with |a| <= num_bound and 1 <= b <= den_bound.
  Rat rational(long num_bound = 5, long den_bound = 4) {
    Rat r(between(-num_bound, num_bound), between(1, den_bound));
    r.canonicalize();
    return r;
  }

  Poly poly(size_t max_degree) {
    std::vector<Rat> c(between(0, static_cast<long>(max_degree)) + 1);
    for (auto& x : c) x = rational();
    if (sgn(c.back()) == 0) c.back() = 1;
    return Poly(std::move(c));
  }

  std::vector<Rat> distinct_points(size_t d) {
    std::vector<Rat> pts;
    while (pts.size() < d) {
      Rat p = rational(6, 3);
      bool fresh = true;
      for (const auto& q : pts) fresh = fresh && q != p;
      if (fresh) pts.push_back(p);
    }
    return pts;
  }

 private:
  std::mt19937_64 eng_;
};

/// V(lambda) for gl or sp, realized in V^{(x)|lambda|}.
inline GModule irrep_for_weight(std::shared_ptr<const LieAlgebraSpec> g, const Weight& lambda) {
  long m = 0;
  for (long c : lambda.coords) m += c < 0 ? -c : c;
  return build_irrep(std::move(g), lambda, static_cast<size_t>(m));
}

inline std::vector<Rat> integer_points(size_t d) {
  std::vector<Rat> pts;
  for (size_t i = 0; i < d; ++i) pts.emplace_back(static_cast<long>(i));
  return pts;
}

inline EvaluationModule standard_evaluation_module(std::shared_ptr<const LieAlgebraSpec> g,
                                                   std::vector<Rat> points) {
  std::vector<GModule> factors(points.size(), standard_module(std::move(g)));
  return EvaluationModule(std::move(factors), std::move(points));
}

inline EvaluationModule weighted_evaluation_module(std::shared_ptr<const LieAlgebraSpec> g,
                                                   const std::vector<Weight>& weights,
                                                   std::vector<Rat> points) {
  std::vector<GModule> factors;
  for (const auto& w : weights) factors.push_back(irrep_for_weight(g, w));
  return EvaluationModule(std::move(factors), std::move(points));
}

/// Spanning-family tensor of degree k for sigma (S_k for gl, S_{2k} otherwise).
inline InvariantTensor family_tensor(const LieAlgebraSpec& g, const Permutation& sigma) {
  switch (g.family) {
    case Family::GL: return theta_sigma_gl(sigma, g.n);
    case Family::SP: return theta_sigma_sp(sigma, g);
    case Family::SO: return psi_sigma_so(sigma, g);
  }
  throw std::logic_error("unreachable");
}

inline std::string family_tensor_name(Family f) {
  switch (f) {
    case Family::GL: return "theta_sigma";
    case Family::SP: return "gamma_Theta_sigma";
    case Family::SO: return "delta_Psi_sigma";
  }
  return "?";
}

/// Permutations indexing the degree-k family: S_k for gl, S_{2k} otherwise.
inline std::vector<Permutation> family_permutations(Family f, size_t k) {
  return Permutation::all(f == Family::GL ? k : 2 * k);
}

/// Non-invariant probe E_12 (x) E_12 in gl(2).
inline InvariantTensor non_invariant_probe(const LieAlgebraSpec& gl2) {
  InvariantTensor t(2);
  t.add(1, {gl2.gl_index(0, 1), gl2.gl_index(0, 1)});
  return t;
}

namespace detail {

inline void tag(std::vector<CheckReport>& out, size_t first, int criterion) {
  for (size_t i = first; i < out.size(); ++i) out[i].param("criterion", std::to_string(criterion));
}

struct Sizes {
  Family family;
  size_t n_max;
  size_t k_max;
  size_t d_max;
  size_t n_min;
};

inline const std::vector<Sizes>& family_sizes() {
  static const std::vector<Sizes> s = {
      {Family::GL, 3, 3, 3, 1}, {Family::SP, 2, 2, 2, 1}, {Family::SO, 4, 2, 2, 2}};
  return s;
}

}  // namespace detail

inline void criterion_ad_invariance(std::vector<CheckReport>& out, bool smoke) {
  const size_t first = out.size();
  for (const auto& sz : detail::family_sizes()) {
    const size_t n_max = smoke ? sz.n_min + 1 : sz.n_max;
    for (size_t n = sz.n_min; n <= n_max; ++n) {
      auto g = build_lie_algebra(sz.family, n);
      out.push_back(check_ad_invariance(casimir_tensor(*g), *g, "Omega"));
      const size_t k_max = smoke ? 2 : sz.k_max;
      for (size_t k = 1; k <= k_max; ++k)
        for (const auto& s : family_permutations(sz.family, k))
          out.push_back(check_ad_invariance(family_tensor(*g, s), *g,
                                            family_tensor_name(sz.family) + s.str()));
    }
  }
  auto gl2 = build_lie_algebra(Family::GL, 2);
  out.push_back(expect_failure(check_ad_invariance(non_invariant_probe(*gl2), *gl2, "E12 x E12")));
  detail::tag(out, first, 1);
}

inline void criterion_commutation(std::vector<CheckReport>& out, Rng& rng, bool smoke) {
  const size_t first = out.size();
  const size_t cases = smoke ? 3 : 50;
  for (const auto& sz : detail::family_sizes()) {
    for (size_t c = 0; c < cases; ++c) {
      size_t n = static_cast<size_t>(rng.between(static_cast<long>(sz.n_min),
                                                 static_cast<long>(sz.n_max)));
      size_t d = static_cast<size_t>(rng.between(1, static_cast<long>(sz.d_max)));
      auto g = build_lie_algebra(sz.family, n);
      size_t k = static_cast<size_t>(rng.between(0, static_cast<long>(sz.k_max)));
      InvariantTensor theta(0);
      std::string label;
      if (k == 2 && rng.below(4) == 0) {
        theta = casimir_tensor(*g);
        label = "Omega";
      } else {
        auto perms = family_permutations(sz.family, k);
        const auto& s = perms[rng.below(perms.size())];
        theta = family_tensor(*g, s);
        label = family_tensor_name(sz.family) + s.str();
      }
      std::vector<Poly> polys;
      for (size_t j = 0; j < k; ++j) polys.push_back(rng.poly(2));
      auto em = standard_evaluation_module(g, integer_points(d));
      out.push_back(check_commutant(theta, polys, em, label));
    }
  }
  detail::tag(out, first, 2);
}

inline void criterion_casimir(std::vector<CheckReport>& out, Rng& rng, bool smoke) {
  const size_t first = out.size();
  auto gl2 = build_lie_algebra(Family::GL, 2);
  auto sp2 = build_lie_algebra(Family::SP, 1);
  {
    auto em = weighted_evaluation_module(gl2, {Weight{{1, 0}}, Weight{{1, 0}}}, integer_points(2));
    auto r = check_casimir_formula(em, Poly({Rat(0), Rat(1)}), Poly({Rat(1), Rat(1)}));
    r.param("spot", "true");
    out.push_back(std::move(r));
  }
  struct Case {
    std::shared_ptr<const LieAlgebraSpec> g;
    std::vector<Weight> weights;
  };
  std::vector<Case> cases = {{gl2, {Weight{{1, 0}}, Weight{{1, 0}}}},
                             {gl2, {Weight{{2, 0}}, Weight{{1, 0}}}},
                             {gl2, {Weight{{2, 1}}, Weight{{1, 0}}}},
                             {sp2, {Weight{{1}}, Weight{{1}}}}};
  const size_t reps = smoke ? 1 : 10;
  for (const auto& c : cases) {
    for (size_t i = 0; i < reps; ++i) {
      auto em = weighted_evaluation_module(c.g, c.weights, rng.distinct_points(2));
      Poly p = rng.poly(3), q = rng.poly(3);
      out.push_back(check_casimir_formula(em, p, q));
    }
  }
  detail::tag(out, first, 3);
}

inline void criterion_schur_weyl(std::vector<CheckReport>& out, bool smoke) {
  const size_t first = out.size();
  std::vector<std::vector<Rat>> point_sets = {integer_points(2), integer_points(3)};
  point_sets.push_back({Rat(0), Rat(1, 2), Rat(7, 3)});
  for (size_t n = 2; n <= (smoke ? 2u : 3u); ++n)
    for (const auto& pts : point_sets) {
      const size_t k = pts.size();
      for (size_t r = 1; r <= k; ++r)
        for (size_t s = r + 1; s <= k; ++s) out.push_back(check_schur_weyl(r, s, n, pts));
      if (k >= 3) out.push_back(check_schur_weyl_products(n, pts));
    }
  detail::tag(out, first, 4);
}

inline void criterion_span(std::vector<CheckReport>& out, bool smoke) {
  const size_t first = out.size();
  struct Case {
    Family f;
    size_t n;
    size_t d;
  };
  std::vector<Case> cases = {{Family::GL, 2, 2}, {Family::GL, 2, 3}, {Family::GL, 3, 3},
                             {Family::SP, 1, 2}, {Family::SO, 3, 2}};
  if (smoke) cases = {{Family::GL, 2, 2}, {Family::SP, 1, 2}};
  for (const auto& c : cases) {
    auto em = standard_evaluation_module(build_lie_algebra(c.f, c.n), integer_points(c.d));
    const size_t K = default_max_tensor_degree(em);
    out.push_back(check_span_surjectivity(em, em.auto_degree_cap(), K));
    // Losslessness: one more degree adds nothing.
    if (!smoke) out.push_back(check_span_surjectivity(em, em.auto_degree_cap() + 1, K));
  }
  detail::tag(out, first, 5);
}

inline void criterion_irreducibility(std::vector<CheckReport>& out, bool smoke) {
  const size_t first = out.size();
  auto gl2 = build_lie_algebra(Family::GL, 2);
  {
    auto em = standard_evaluation_module(gl2, integer_points(3));
    out.push_back(
        check_isotypic_irreducibility(em, em.auto_degree_cap(), default_max_tensor_degree(em)));
  }
  if (!smoke) {
    auto em = weighted_evaluation_module(
        gl2, {Weight{{2, 0}}, Weight{{1, 0}}, Weight{{1, 0}}}, integer_points(3));
    out.push_back(
        check_isotypic_irreducibility(em, em.auto_degree_cap(), default_max_tensor_degree(em)));
  }
  {
    auto em = standard_evaluation_module(gl2, {Rat(0), Rat(0), Rat(0)});
    out.push_back(expect_failure(
        check_isotypic_irreducibility(em, em.auto_degree_cap(), default_max_tensor_degree(em))));
  }
  detail::tag(out, first, 6);
}

inline void criterion_cycle_generation(std::vector<CheckReport>& out, bool smoke) {
  const size_t first = out.size();
  auto gl2 = build_lie_algebra(Family::GL, 2);
  for (size_t d = 2; d <= (smoke ? 2u : 3u); ++d) {
    auto em = standard_evaluation_module(gl2, integer_points(d));
    out.push_back(check_cycle_generation(em, em.auto_degree_cap(), d));
  }
  detail::tag(out, first, 7);
}

inline void criterion_evaluation_irreducibility(std::vector<CheckReport>& out, bool smoke) {
  const size_t first = out.size();
  auto gl2 = build_lie_algebra(Family::GL, 2);
  std::vector<EvaluationModule> mods;
  mods.push_back(standard_evaluation_module(gl2, integer_points(2)));
  if (!smoke) {
    mods.push_back(standard_evaluation_module(gl2, integer_points(3)));
    mods.push_back(standard_evaluation_module(build_lie_algebra(Family::GL, 3), integer_points(2)));
    mods.push_back(
        weighted_evaluation_module(gl2, {Weight{{2, 0}}, Weight{{1, 0}}}, integer_points(2)));
    mods.push_back(standard_evaluation_module(build_lie_algebra(Family::SP, 1), integer_points(2)));
    mods.push_back(standard_evaluation_module(build_lie_algebra(Family::SO, 3), integer_points(2)));
  }
  for (const auto& em : mods) out.push_back(check_evaluation_irreducibility(em, em.auto_degree_cap()));
  {
    auto em = standard_evaluation_module(gl2, {Rat(0), Rat(0)});
    out.push_back(expect_failure(check_evaluation_irreducibility(em, em.auto_degree_cap())));
  }
  detail::tag(out, first, 8);
}

/// The acceptance matrix. "desk" runs every criterion at full size, "smoke"
/// a reduced subset of each.
inline std::vector<CheckReport> run_profile(const std::string& profile, std::uint64_t seed) {
  if (profile != "desk" && profile != "smoke")
    throw std::invalid_argument("unknown profile: '" + profile + "'");
  const bool smoke = profile == "smoke";
  Rng rng(seed);
  std::vector<CheckReport> out;
  criterion_ad_invariance(out, smoke);
  criterion_commutation(out, rng, smoke);
  criterion_casimir(out, rng, smoke);
  criterion_schur_weyl(out, smoke);
  criterion_span(out, smoke);
  criterion_irreducibility(out, smoke);
  criterion_cycle_generation(out, smoke);
  criterion_evaluation_irreducibility(out, smoke);
  return out;
}

}  // namespace repcur
