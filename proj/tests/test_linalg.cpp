#include <gtest/gtest.h>

#include <random>

#include "repcur/linalg.hpp"

using namespace repcur;

namespace {

Mat random_matrix(std::mt19937_64& rng, size_t r, size_t c, int zero_bias = 2) {
  Mat m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      if (rng() % (zero_bias + 1) == 0) {
        Rat q(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
        q.canonicalize();
        m(i, j) = q;
      }
  return m;
}

// Commutant by the Kronecker formulation: vec(AX - XA) = (A (x) I - I (x) A^T) vec(X)
// for row-major vec.
size_t commutant_dimension_oracle(const std::vector<Mat>& mats, size_t d) {
  std::vector<Mat> blocks;
  for (const auto& a : mats)
    blocks.push_back(kron(a, Mat::identity(d)) - kron(Mat::identity(d), a.transpose()));
  if (blocks.empty()) return d * d;
  return kernel_basis(vstack(blocks)).size();
}

}  // namespace

TEST(Rref, SpecExamples) {
  auto [i3, r3] = rref(Mat::identity(3));
  EXPECT_EQ(i3, Mat::identity(3));
  EXPECT_EQ(r3, 3u);
  auto [z, rz] = rref(Mat(2, 2));
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(rz, 0u);
  EXPECT_EQ(rank(Mat{{1, 2}, {2, 4}}), 1u);
}

TEST(Kernel, SpecExamples) {
  EXPECT_TRUE(kernel_basis(Mat::identity(4)).empty());
  EXPECT_EQ(kernel_basis(Mat(2, 3)).size(), 3u);
  auto k = kernel_basis(Mat{{1, 2}, {2, 4}});
  ASSERT_EQ(k.size(), 1u);
  // Proportional to (-2, 1).
  EXPECT_EQ(k[0][0] * 1, k[0][1] * -2);
  EXPECT_NE(k[0][1], 0);
}

TEST(Rref, IdempotentAndRankNullity) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    Mat m = random_matrix(rng, r, c);
    auto [e, rk] = rref(m);
    EXPECT_EQ(rref(e).first, e);
    auto ker = kernel_basis(m);
    EXPECT_EQ(rk + ker.size(), c);
    for (const auto& v : ker) {
      Vec mv = m.apply(v);
      for (const auto& x : mv) EXPECT_EQ(x, 0);
    }
  }
}

TEST(Rref, RankInvariantUnderRowPermutation) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    Mat m = random_matrix(rng, 4, 5);
    Mat p = m;
    p.swap_rows(0, 3);
    p.swap_rows(1, 2);
    EXPECT_EQ(rank(m), rank(p));
  }
}

TEST(SpanDimension, SpecExamples) {
  std::vector<Mat> a{Mat::identity(2), Rat(2) * Mat::identity(2)};
  EXPECT_EQ(span_dimension(a), 1u);
  EXPECT_EQ(span_dimension(std::vector<Mat>{}), 0u);
  Mat e11 = Mat::unit(2, 2, 0, 0), e12 = Mat::unit(2, 2, 0, 1);
  std::vector<Mat> b{e11, e12, e11 + e12};
  EXPECT_EQ(span_dimension(b), 2u);
  std::vector<Mat> bad{Mat(2, 2), Mat(3, 3)};
  EXPECT_THROW(span_dimension(bad), std::invalid_argument);
}

TEST(SpanBuilder, AgreesWithRank) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    Mat m = random_matrix(rng, 6, 4);
    SpanBuilder sb(4);
    for (size_t i = 0; i < m.rows(); ++i) {
      Vec row(4);
      for (size_t j = 0; j < 4; ++j) row[j] = m(i, j);
      sb.add(row);
    }
    EXPECT_EQ(sb.dimension(), rank(m));
  }
}

TEST(AlgebraClosure, SpecExamples) {
  EXPECT_EQ(algebra_closure(std::vector<Mat>{}, 3).size(), 1u);
  std::vector<Mat> diag{Mat{{1, 0}, {0, 2}}};
  EXPECT_EQ(algebra_closure(diag, 2).size(), 2u);
  std::vector<Mat> full{Mat::unit(2, 2, 0, 1), Mat::unit(2, 2, 1, 0)};
  EXPECT_EQ(algebra_closure(full, 2).size(), 4u);
  std::vector<Mat> bad{Mat(3, 3)};
  EXPECT_THROW(algebra_closure(bad, 2), std::invalid_argument);
}

TEST(AlgebraClosure, MultiplicativelyClosed) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 10; ++t) {
    std::vector<Mat> gens{random_matrix(rng, 3, 3, 4)};
    if (t % 2) gens.push_back(random_matrix(rng, 3, 3, 4));
    auto basis = algebra_closure(gens, 3);
    const size_t dim = span_dimension(basis);
    EXPECT_EQ(dim, basis.size());
    for (const auto& x : basis)
      for (const auto& y : basis) {
        auto ext = basis;
        ext.push_back(x * y);
        EXPECT_EQ(span_dimension(ext), dim);
      }
  }
}

TEST(BasisSolver, CoordinatesRoundTrip) {
  std::mt19937_64 rng(15);
  Mat b{{1, 0}, {1, 1}, {0, 2}};
  BasisSolver s(b);
  for (int t = 0; t < 10; ++t) {
    Vec c{Rat(static_cast<long>(rng() % 7) - 3), make_rat(static_cast<long>(rng() % 5), 2)};
    Vec y = b.apply(c);
    EXPECT_EQ(s.coordinates(y), c);
  }
  EXPECT_FALSE(s.contains(Vec{Rat(1), Rat(0), Rat(0)}));
  EXPECT_THROW(s.coordinates(Vec{Rat(1), Rat(0), Rat(0)}), std::domain_error);
  EXPECT_THROW(BasisSolver(Mat{{1, 2}, {2, 4}}), std::invalid_argument);
}

TEST(Inverse, ProductIsIdentity) {
  std::mt19937_64 rng(16);
  int tested = 0;
  while (tested < 10) {
    Mat m = random_matrix(rng, 4, 4, 1);
    if (rank(m) < 4) {
      EXPECT_THROW(inverse(m), std::domain_error);
      continue;
    }
    EXPECT_EQ(m * inverse(m), Mat::identity(4));
    ++tested;
  }
}

TEST(Commutant, AgreesWithKroneckerOracle) {
  std::mt19937_64 rng(17);
  std::vector<std::vector<Mat>> cases = {
      {Mat{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}},
      {Mat::unit(3, 3, 0, 1)},
      {Mat::unit(3, 3, 0, 1), Mat::unit(3, 3, 1, 2)},
      {}};
  for (int t = 0; t < 8; ++t) cases.push_back({random_matrix(rng, 3, 3, 3)});
  for (const auto& c : cases) {
    auto basis = commutant_basis(c, 3);
    EXPECT_EQ(basis.size(), commutant_dimension_oracle(c, 3));
    for (const auto& x : basis)
      for (const auto& a : c) EXPECT_EQ(x * a, a * x);
  }
  EXPECT_EQ(commutant_basis(cases[0], 3).size(), 5u);
}
