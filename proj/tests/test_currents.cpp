#include <gtest/gtest.h>

#include <random>

#include "repcur/currents.hpp"
#include "repcur/invariants.hpp"

using namespace repcur;

namespace {

EvaluationModule standard_em(std::shared_ptr<const LieAlgebraSpec> g, std::vector<Rat> pts) {
  std::vector<GModule> f(pts.size(), standard_module(g));
  return EvaluationModule(std::move(f), std::move(pts));
}

Poly random_poly(std::mt19937_64& rng, size_t max_deg) {
  std::vector<Rat> c(1 + rng() % (max_deg + 1));
  for (auto& x : c) {
    x = Rat(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    x.canonicalize();
  }
  return Poly(std::move(c));
}

Vec random_coords(std::mt19937_64& rng, size_t d) {
  Vec v(d);
  for (auto& x : v) x = Rat(static_cast<long>(rng() % 7) - 3);
  return v;
}

}  // namespace

TEST(EvaluationModule, SizeMismatchThrows) {
  auto g = build_lie_algebra(Family::GL, 2);
  std::vector<GModule> f(2, standard_module(g));
  EXPECT_THROW(EvaluationModule(f, {Rat(0)}), std::invalid_argument);
}

TEST(EvaluationAction, SpecExamples) {
  auto g = build_lie_algebra(Family::GL, 2);
  auto em = standard_em(g, {Rat(0), Rat(1)});
  const size_t e12 = g->gl_index(0, 1);
  EXPECT_EQ(evaluation_action(e12, Poly::constant(1), em), em.carrier().actions[e12]);
  Mat on_second = evaluation_action(e12, Poly::monomial(1), em);
  EXPECT_EQ(on_second, kron(Mat::identity(2), g->basis[e12]));
  Vec e22(4);
  e22[3] = 1;
  Vec want(4);
  want[2] = 1;  // e2 (x) e1
  EXPECT_EQ(on_second.apply(e22), want);
  EXPECT_EQ(evaluation_action(g->basis[e12], Poly::monomial(1), em), on_second);
  auto so3 = build_lie_algebra(Family::SO, 3);
  auto em3 = standard_em(so3, {Rat(0)});
  EXPECT_THROW(evaluation_action(Mat::unit(3, 3, 0, 1), Poly::constant(1), em3), std::domain_error);
}

TEST(EvaluationAction, HomomorphismOfCurrentAlgebra) {
  std::mt19937_64 rng(31);
  std::vector<std::pair<Family, size_t>> algebras = {{Family::GL, 2}, {Family::SP, 1}, {Family::SO, 3}};
  for (auto [f, n] : algebras) {
    auto g = build_lie_algebra(f, n);
    auto em = standard_em(g, {Rat(0), Rat(1, 2), Rat(-2)});
    for (int t = 0; t < 10; ++t) {
      Vec x = random_coords(rng, g->dim()), y = random_coords(rng, g->dim());
      Poly p = random_poly(rng, 3), q = random_poly(rng, 3);
      Mat lhs = commutator(evaluation_action(x, p, em), evaluation_action(y, q, em));
      Mat rhs = evaluation_action(g->bracket_of(x, y), p * q, em);
      EXPECT_EQ(lhs, rhs) << g->name();
      // Same identity through the operator calculus.
      auto X = CurrentOperator::generator(x, p), Y = CurrentOperator::generator(y, q);
      EXPECT_EQ(current_operator_matrix(X * Y - Y * X, em),
                current_operator_matrix(CurrentOperator::generator(g->bracket_of(x, y), p * q), em));
    }
  }
}

TEST(EvaluationAction, InterpolantGivesTheSameAction) {
  std::mt19937_64 rng(32);
  auto g = build_lie_algebra(Family::GL, 2);
  std::vector<Rat> pts{Rat(0), Rat(1), Rat(7, 3)};
  auto em = standard_em(g, pts);
  for (int t = 0; t < 10; ++t) {
    Poly p = random_poly(rng, 6);
    std::vector<Rat> vals;
    for (const auto& x : pts) vals.push_back(p(x));
    Poly low = lagrange_interpolate(pts, vals);
    EXPECT_LE(low.degree(), static_cast<long>(em.auto_degree_cap()));
    Vec x = random_coords(rng, g->dim());
    EXPECT_EQ(evaluation_action(x, p, em), evaluation_action(x, low, em));
  }
}

TEST(CurrentOperatorMatrix, SpecExamples) {
  auto g = build_lie_algebra(Family::GL, 2);
  auto em = standard_em(g, {Rat(0), Rat(1)});
  EXPECT_EQ(current_operator_matrix(CurrentOperator::scalar(Rat(3)), em), Rat(3) * Mat::identity(4));
  CurrentOperator single{{CurrentTerm{1, {Letter{2, 0}}}}};
  EXPECT_EQ(current_operator_matrix(single, em), em.carrier().actions[2]);
  // Rightmost letter acts first.
  CurrentOperator word{{CurrentTerm{1, {Letter{g->gl_index(0, 1), 0}, Letter{g->gl_index(1, 0), 1}}}}};
  EXPECT_EQ(current_operator_matrix(word, em),
            evaluation_action(g->gl_index(0, 1), Poly::constant(1), em) *
                evaluation_action(g->gl_index(1, 0), Poly::monomial(1), em));
}

TEST(CurrentOperatorMatrix, CasimirWithConstantPolysIsCasimirOnComponents) {
  auto g = build_lie_algebra(Family::GL, 2);
  auto em = standard_em(g, {Rat(0), Rat(1)});
  std::vector<Poly> ones{Poly::constant(1), Poly::constant(1)};
  Mat omega = current_operator_matrix(theta_operator(casimir_tensor(*g), ones), em);
  // Symmetric tensors: 6; the antisymmetric tensor: 2.
  Vec sym(4), alt(4);
  sym[1] = sym[2] = 1;
  alt[1] = 1;
  alt[2] = -1;
  Vec sym6 = sym, alt2 = alt;
  for (auto& x : sym6) x *= 6;
  for (auto& x : alt2) x *= 2;
  EXPECT_EQ(omega.apply(sym), sym6);
  EXPECT_EQ(omega.apply(alt), alt2);
}

TEST(ThetaOperator, SpecExamples) {
  InvariantTensor xy(2);
  xy.add(1, {0, 3});
  std::vector<Poly> p1{Poly::constant(1), Poly::monomial(1)};
  auto op = theta_operator(xy, p1);
  ASSERT_EQ(op.terms.size(), 1u);
  EXPECT_EQ(op.terms[0].word, (std::vector<Letter>{{0, 0}, {3, 1}}));

  auto g = build_lie_algebra(Family::GL, 2);
  auto omega = casimir_tensor(*g);
  EXPECT_EQ(theta_operator(omega, std::vector<Poly>{Poly::constant(1), Poly::constant(1)}).terms.size(),
            4u);
  auto op8 = theta_operator(omega, std::vector<Poly>{parse_poly("1,1"), Poly::monomial(1)});
  EXPECT_EQ(op8.terms.size(), 8u);
  EXPECT_THROW(theta_operator(omega, std::vector<Poly>{Poly::constant(1)}), std::invalid_argument);
}

TEST(InvariantTensor, MergesAndDropsZeros) {
  InvariantTensor t(2);
  t.add(1, {0, 1});
  t.add(-1, {0, 1});
  EXPECT_TRUE(t.is_zero());
  t.add(Rat(1, 2), {1, 0});
  t.add(Rat(1, 2), {1, 0});
  EXPECT_EQ(t.coefficient({1, 0}), 1);
  EXPECT_THROW(t.add(1, {0}), std::invalid_argument);
  InvariantTensor s(1);
  s.add(2, {3});
  auto ts = tensor_product(t, s);
  EXPECT_EQ(ts.degree(), 3u);
  EXPECT_EQ(ts.coefficient({1, 0, 3}), 2);
}

TEST(CurrentAlgebra, CommutantOfDistinctPointModuleIsScalar) {
  auto g = build_lie_algebra(Family::GL, 2);
  EXPECT_EQ(current_algebra_commutant_dimension(standard_em(g, {Rat(0), Rat(1)}), 1), 1u);
  EXPECT_EQ(current_algebra_commutant_dimension(standard_em(g, {Rat(0), Rat(0)}), 1), 2u);
}
