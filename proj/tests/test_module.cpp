#include <gtest/gtest.h>

#include <cstdlib>

#include "repcur/module.hpp"

using namespace repcur;

namespace {

// Hook-content formula: dim V(lambda) = prod over cells (n + content) / hook.
Rat gl_dimension_oracle(const std::vector<long>& lambda, long n) {
  Rat num = 1, den = 1;
  for (size_t r = 0; r < lambda.size(); ++r)
    for (long c = 0; c < lambda[r]; ++c) {
      long arm = lambda[r] - c - 1;
      long leg = 0;
      for (size_t r2 = r + 1; r2 < lambda.size() && lambda[r2] > c; ++r2) ++leg;
      num *= n + c - static_cast<long>(r);
      den *= arm + leg + 1;
    }
  return num / den;
}

// Weyl dimension formula for sp(4) with rho = (2, 1).
long sp4_dimension_oracle(long l1, long l2) {
  long m1 = l1 + 2, m2 = l2 + 1;
  return m1 * m2 * (m1 - m2) * (m1 + m2) / 6;
}

// Casimir scalar for the trace form on the gl(n) irrep of highest weight lambda.
long gl_casimir_oracle(const std::vector<long>& lambda) {
  const long n = static_cast<long>(lambda.size());
  long c = 0;
  for (long i = 1; i <= n; ++i) c += lambda[i - 1] * (lambda[i - 1] + n + 1 - 2 * i);
  return c;
}

long weight_size(const std::vector<long>& w) {
  long s = 0;
  for (long x : w) s += x;
  return s;
}

}  // namespace

TEST(BuildIrrep, SpecExamples) {
  auto gl2 = build_lie_algebra(Family::GL, 2);
  auto v = build_irrep(gl2, Weight{{1, 0}}, 1);
  EXPECT_EQ(v.dim, 2u);
  EXPECT_EQ(build_irrep(gl2, Weight{{2, 0}}, 2).dim, 3u);
  auto sp2 = build_lie_algebra(Family::SP, 1);
  EXPECT_EQ(build_irrep(sp2, Weight{{2}}, 2).dim, 3u);
}

TEST(BuildIrrep, MatchesHookContentFormula) {
  std::vector<std::vector<long>> gl2 = {{1, 0}, {2, 0}, {1, 1}, {2, 1}, {3, 0}, {2, 2}};
  std::vector<std::vector<long>> gl3 = {{1, 0, 0}, {2, 0, 0}, {1, 1, 0}, {2, 1, 0}, {1, 1, 1}};
  for (const auto& [n, list] : {std::pair{2, gl2}, std::pair{3, gl3}}) {
    auto g = build_lie_algebra(Family::GL, static_cast<size_t>(n));
    for (const auto& lam : list) {
      auto m = build_irrep(g, Weight{lam}, static_cast<size_t>(weight_size(lam)));
      EXPECT_EQ(Rat(static_cast<long>(m.dim)), gl_dimension_oracle(lam, n)) << Weight{lam}.str();
      EXPECT_TRUE(satisfies_bracket(m));
      EXPECT_EQ(casimir_eigenvalue(m), Rat(gl_casimir_oracle(lam))) << Weight{lam}.str();
    }
  }
}

TEST(BuildIrrep, MatchesSymplecticWeylFormula) {
  auto sp4 = build_lie_algebra(Family::SP, 2);
  for (auto [a, b] : {std::pair{1L, 0L}, {1L, 1L}, {2L, 0L}}) {
    auto m = build_irrep(sp4, Weight{{a, b}}, static_cast<size_t>(a + b));
    EXPECT_EQ(static_cast<long>(m.dim), sp4_dimension_oracle(a, b));
    EXPECT_TRUE(satisfies_bracket(m));
  }
  auto sp2 = build_lie_algebra(Family::SP, 1);
  for (long k = 1; k <= 3; ++k) EXPECT_EQ(build_irrep(sp2, Weight{{k}}, k).dim, static_cast<size_t>(k + 1));
  // Trivial summand of V (x) V.
  EXPECT_EQ(build_irrep(sp2, Weight{{0}}, 2).dim, 1u);
}

TEST(BuildIrrep, Errors) {
  auto gl2 = build_lie_algebra(Family::GL, 2);
  try {
    build_irrep(gl2, Weight{{1, 2}}, 3);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("weight not dominant"), std::string::npos);
  }
  EXPECT_THROW(build_irrep(gl2, Weight{{2, 0}}, 3), std::invalid_argument);
  EXPECT_THROW(build_irrep(build_lie_algebra(Family::SP, 1), Weight{{1}}, 2), std::invalid_argument);
  EXPECT_THROW(build_irrep(build_lie_algebra(Family::SO, 3), Weight{{1, 0, 0}}, 1),
               std::invalid_argument);
}

TEST(TensorModule, SpecExamples) {
  auto gl2 = build_lie_algebra(Family::GL, 2);
  auto v = standard_module(gl2);
  std::vector<GModule> one{v};
  auto single = tensor_module(one);
  EXPECT_EQ(single.dim, v.dim);
  EXPECT_EQ(single.actions, v.actions);

  auto vv = tensor_power(v, 2);
  EXPECT_EQ(vv.dim, 4u);
  Mat id_action = vv.actions[gl2->gl_index(0, 0)] + vv.actions[gl2->gl_index(1, 1)];
  EXPECT_EQ(id_action, Rat(2) * Mat::identity(4));
  EXPECT_EQ(id_action.trace(), 8);

  auto vvv = tensor_power(v, 3);
  // Basis index of e_a (x) e_b (x) e_c is 4a + 2b + c (zero-based, factor-1-major).
  Vec e222(8);
  e222[7] = 1;
  Vec got = vvv.actions[gl2->gl_index(0, 1)].apply(e222);
  Vec want(8);
  want[3] = 1;  // e1 e2 e2
  want[5] = 1;  // e2 e1 e2
  want[6] = 1;  // e2 e2 e1
  EXPECT_EQ(got, want);
  EXPECT_TRUE(satisfies_bracket(vvv));
}

TEST(TensorModule, DimensionLimit) {
  auto gl2 = build_lie_algebra(Family::GL, 2);
  ::setenv("REPCUR_MAX_DIM", "8", 1);
  EXPECT_EQ(carrier_dimension_limit(), 8u);
  EXPECT_NO_THROW(tensor_power(standard_module(gl2), 3));
  EXPECT_THROW(tensor_power(standard_module(gl2), 4), std::length_error);
  ::unsetenv("REPCUR_MAX_DIM");
  EXPECT_EQ(carrier_dimension_limit(), 4096u);
}

TEST(Isotypic, SpecExamples) {
  auto gl2 = build_lie_algebra(Family::GL, 2);
  auto c2 = isotypic_decompose(tensor_power(standard_module(gl2), 2));
  ASSERT_EQ(c2.size(), 2u);
  EXPECT_EQ(c2[0].mu, (Weight{{2, 0}}));
  EXPECT_EQ(c2[0].multiplicity, 1u);
  EXPECT_EQ(c2[1].mu, (Weight{{1, 1}}));
  EXPECT_EQ(c2[1].multiplicity, 1u);

  auto c3 = isotypic_decompose(tensor_power(standard_module(gl2), 3));
  ASSERT_EQ(c3.size(), 2u);
  EXPECT_EQ(c3[0].mu, (Weight{{3, 0}}));
  EXPECT_EQ(c3[0].multiplicity, 1u);
  EXPECT_EQ(c3[1].mu, (Weight{{2, 1}}));
  EXPECT_EQ(c3[1].multiplicity, 2u);

  auto gl3 = build_lie_algebra(Family::GL, 3);
  auto d3 = isotypic_decompose(tensor_power(standard_module(gl3), 3));
  ASSERT_EQ(d3.size(), 3u);
  EXPECT_EQ(d3[0].multiplicity, 1u);
  EXPECT_EQ(d3[1].multiplicity, 2u);
  EXPECT_EQ(d3[2].multiplicity, 1u);
  EXPECT_EQ(d3[2].mu, (Weight{{1, 1, 1}}));

  EXPECT_THROW(isotypic_decompose(standard_module(build_lie_algebra(Family::SO, 3))),
               std::invalid_argument);
}

TEST(Isotypic, DecompositionInvariants) {
  auto gl2 = build_lie_algebra(Family::GL, 2);
  auto gl3 = build_lie_algebra(Family::GL, 3);
  auto sp2 = build_lie_algebra(Family::SP, 1);
  auto sp4 = build_lie_algebra(Family::SP, 2);
  std::vector<GModule> mods = {tensor_power(standard_module(gl2), 3),
                               tensor_power(standard_module(gl3), 2),
                               tensor_power(standard_module(sp2), 3),
                               tensor_power(standard_module(sp4), 2)};
  {
    std::vector<GModule> f{build_irrep(gl2, Weight{{2, 0}}, 2), standard_module(gl2),
                           standard_module(gl2)};
    mods.push_back(tensor_module(f));
  }
  for (const auto& w : mods) {
    const auto& g = *w.spec;
    auto comps = isotypic_decompose(w);
    size_t total = 0, squares = 0;
    std::vector<Vec> all_cols;
    Mat cas = casimir_operator(w);
    for (const auto& c : comps) {
      EXPECT_EQ(c.multiplicity, c.hwv_basis.cols());
      auto irrep = irrep_from_hwv(w, c.hwv_basis.column(0));
      EXPECT_EQ(c.component_basis.cols(), c.multiplicity * irrep.dim);
      total += c.component_basis.cols();
      squares += c.multiplicity * c.multiplicity;
      for (size_t r : g.raising_indices) EXPECT_TRUE((w.actions[r] * c.hwv_basis).is_zero());
      for (size_t a = 0; a < g.cartan_indices.size(); ++a)
        EXPECT_EQ(w.actions[g.cartan_indices[a]] * c.hwv_basis, Rat(c.mu.coords[a]) * c.hwv_basis);
      Rat cmu = casimir_eigenvalue(irrep);
      EXPECT_EQ(cas * c.component_basis, cmu * c.component_basis);
      for (size_t j = 0; j < c.component_basis.cols(); ++j)
        all_cols.push_back(c.component_basis.column(j));
    }
    EXPECT_EQ(total, w.dim) << w.label;
    EXPECT_EQ(rank(Mat::from_columns(all_cols, w.dim)), w.dim);
    EXPECT_EQ(commutant_dimension(w), squares) << w.label;
  }
}

TEST(Casimir, SpecExamples) {
  auto gl2 = build_lie_algebra(Family::GL, 2);
  EXPECT_EQ(casimir_eigenvalue(standard_module(gl2)), 2);
  EXPECT_EQ(casimir_eigenvalue(build_irrep(gl2, Weight{{2, 0}}, 2)), 6);
  EXPECT_EQ(casimir_eigenvalue(build_irrep(gl2, Weight{{1, 1}}, 2)), 2);
  EXPECT_EQ(casimir_eigenvalue(build_irrep(gl2, Weight{{0, 0}}, 0)), 0);
  EXPECT_EQ(casimir_eigenvalue(trivial_module(gl2)), 0);
  EXPECT_THROW(casimir_eigenvalue(tensor_power(standard_module(gl2), 2)), std::domain_error);
}

TEST(Commutant, SpecExamples) {
  auto gl2 = build_lie_algebra(Family::GL, 2);
  EXPECT_EQ(commutant_dimension(build_irrep(gl2, Weight{{2, 1}}, 3)), 1u);
  EXPECT_EQ(commutant_dimension(tensor_power(standard_module(gl2), 2)), 2u);
  EXPECT_EQ(commutant_dimension(tensor_power(standard_module(gl2), 3)), 5u);
  // so(3) on V (x) V splits as 5 + 3 + 1, three pairwise distinct irreducibles.
  EXPECT_EQ(commutant_dimension(tensor_power(standard_module(build_lie_algebra(Family::SO, 3)), 2)),
            3u);
  EXPECT_EQ(commutant_dimension(standard_module(build_lie_algebra(Family::SO, 3))), 1u);
}
