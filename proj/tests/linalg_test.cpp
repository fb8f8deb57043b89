#include <gtest/gtest.h>

#include "leibalg/linalg.hpp"
#include "support.hpp"

namespace {

using namespace leibalg;
using testing_support::random_invertible;
using testing_support::random_matrix;
using testing_support::random_vector;

const Field kQ = Field::rationals();

TEST(Linalg, DeterminantOfKnownMatrices) {
  const auto f = Field::prime(7);
  EXPECT_EQ(mat_det<ModInt>(matrix_from_rows<ModInt>(f, {{1, 2}, {3, 4}})), ModInt::from_int(f, -2));
  EXPECT_EQ(mat_det<ModInt>(matrix_from_rows<ModInt>(f, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})),
            ModInt::from_int(f, -1));
  EXPECT_TRUE(mat_det<ModInt>(matrix_from_rows<ModInt>(f, {{1, 2}, {2, 4}})).is_zero());
  EXPECT_EQ(mat_det<Rational>(matrix_from_rows<Rational>(kQ, {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}})),
            Rational::from_int(kQ, 18));
}

TEST(Linalg, InverseOverRationals) {
  const auto a = matrix_from_rows<Rational>(kQ, {{2, 1}, {5, 3}});
  EXPECT_EQ(mat_inv<Rational>(a), matrix_from_rows<Rational>(kQ, {{3, -1}, {-5, 2}}));
  EXPECT_THROW(mat_inv<Rational>(matrix_from_rows<Rational>(kQ, {{1, 2}, {2, 4}})), Error);
}

TEST(Linalg, ProductChecksShapesAndFields) {
  const auto a = matrix_from_rows<ModInt>(Field::prime(3), {{1, 2}});
  const auto b = matrix_from_rows<ModInt>(Field::prime(5), {{1}, {2}});
  try {
    mat_mul<ModInt>(a, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
  try {
    mat_mul<ModInt>(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FieldMismatch);
  }
}

TEST(Linalg, RightCenterSystemOfL1OverGF5) {
  // Rows of x -> [e_b, x] for b = 1, 2, 3; only b = 1 contributes.
  const auto f = Field::prime(5);
  Matrix<ModInt> a = zero_matrix<ModInt>(f, 9, 3);
  a(2, 0) = ModInt::from_int(f, 1);
  a(1, 1) = ModInt::from_int(f, 1);
  a(2, 2) = ModInt::from_int(f, 1);
  const auto k = kernel<ModInt>(a);
  ASSERT_EQ(k.dim(), 1);
  EXPECT_EQ(k.basis()[0], vector_from<ModInt>(f, {1, 0, 4}));
}

TEST(Linalg, SolveReportsInconsistency) {
  const auto a = matrix_from_rows<Rational>(kQ, {{1, 1}, {2, 2}});
  const auto sol = solve_linear<Rational>(a, vector_from<Rational>(kQ, {1, 3}));
  EXPECT_FALSE(sol.consistent());
  const auto ok = solve_linear<Rational>(a, vector_from<Rational>(kQ, {1, 2}));
  ASSERT_TRUE(ok.consistent());
  EXPECT_EQ(a * *ok.particular, vector_from<Rational>(kQ, {1, 2}));
  EXPECT_EQ(ok.nullspace.dim(), 1);
}

TEST(Linalg, EmptySpanNeedsAmbient) {
  std::vector<Vector<ModInt>> none;
  try {
    rref_span<ModInt>(std::span<const Vector<ModInt>>(none));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyAmbient);
  }
  EXPECT_EQ(rref_span<ModInt>(Field::prime(3), 4, none).dim(), 0);
}

TEST(Linalg, SubspaceOperations) {
  const auto f = Field::prime(3);
  const std::vector<Vector<ModInt>> u_gen = {vector_from<ModInt>(f, {1, 0, 0}), vector_from<ModInt>(f, {0, 1, 0})};
  const std::vector<Vector<ModInt>> w_gen = {vector_from<ModInt>(f, {0, 1, 0}), vector_from<ModInt>(f, {0, 0, 1})};
  const auto u = Subspace<ModInt>::span(f, 3, u_gen);
  const auto w = Subspace<ModInt>::span(f, 3, w_gen);
  const auto meet = intersect(u, w);
  ASSERT_EQ(meet.dim(), 1);
  EXPECT_EQ(meet.basis()[0], vector_from<ModInt>(f, {0, 1, 0}));
  EXPECT_TRUE(u.contains(meet));
  EXPECT_FALSE(u.contains(w));
  const auto swap = matrix_from_rows<ModInt>(f, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  EXPECT_EQ(image(swap, u), w);
}

// Properties over random inputs, both scalar types.

template <class S>
Field field_for() {
  if constexpr (std::is_same_v<S, ModInt>)
    return Field::prime(7);
  else
    return Field::rationals();
}

template <class S>
class LinalgProperty : public ::testing::Test {};
using Scalars = ::testing::Types<ModInt, Rational>;
TYPED_TEST_SUITE(LinalgProperty, Scalars);

TYPED_TEST(LinalgProperty, DeterminantIsMultiplicative) {
  using S = TypeParam;
  const auto f = field_for<S>();
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = testing_support::uniform(1, 4);
    const auto a = random_matrix<S>(f, n, n);
    const auto b = random_matrix<S>(f, n, n);
    EXPECT_EQ(mat_det<S>(mat_mul<S>(a, b)), mat_det<S>(a) * mat_det<S>(b));
    EXPECT_EQ(mat_det<S>(Matrix<S>(a.transpose())), mat_det<S>(a));
  }
}

TYPED_TEST(LinalgProperty, InverseIsTwoSided) {
  using S = TypeParam;
  const auto f = field_for<S>();
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = testing_support::uniform(1, 4);
    const auto a = random_invertible<S>(f, n);
    const auto inv = mat_inv<S>(a);
    EXPECT_EQ(mat_mul<S>(a, inv), identity_matrix<S>(f, n));
    EXPECT_EQ(mat_mul<S>(inv, a), identity_matrix<S>(f, n));
  }
}

TYPED_TEST(LinalgProperty, RankNullityAndKernelMembership) {
  using S = TypeParam;
  const auto f = field_for<S>();
  for (int trial = 0; trial < 200; ++trial) {
    const Index rows = testing_support::uniform(1, 5);
    const Index cols = testing_support::uniform(1, 5);
    Matrix<S> a = random_matrix<S>(f, rows, cols);
    if (trial % 3 == 0 && rows > 1) a.row(rows - 1) = a.row(0) + a.row(rows - 2);
    const auto k = kernel<S>(a);
    const auto echelon = rref<S>(a);
    EXPECT_EQ(k.dim() + static_cast<Index>(echelon.pivots.size()), cols);
    for (const auto& v : k.basis()) EXPECT_EQ(a * v, zero_vector<S>(f, rows));
  }
}

TYPED_TEST(LinalgProperty, SolveFindsPlantedSolutions) {
  using S = TypeParam;
  const auto f = field_for<S>();
  for (int trial = 0; trial < 200; ++trial) {
    const Index rows = testing_support::uniform(1, 5);
    const Index cols = testing_support::uniform(1, 5);
    const auto a = random_matrix<S>(f, rows, cols);
    const auto x = random_vector<S>(f, cols);
    const Vector<S> b = a * x;
    const auto sol = solve_linear<S>(a, b);
    ASSERT_TRUE(sol.consistent());
    EXPECT_EQ(a * *sol.particular, b);
    std::vector<Vector<S>> diff = {x - *sol.particular};
    EXPECT_TRUE(sol.nullspace.contains(diff.front()));
  }
}

TYPED_TEST(LinalgProperty, SpanIsCanonical) {
  using S = TypeParam;
  const auto f = field_for<S>();
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = testing_support::uniform(1, 4);
    std::vector<Vector<S>> gens;
    for (Index k = 0; k < testing_support::uniform(0, 4); ++k) gens.push_back(random_vector<S>(f, n));
    const auto u = Subspace<S>::span(f, n, gens);
    // Any invertible recombination spans the same space.
    std::vector<Vector<S>> mixed;
    if (!gens.empty()) {
      const auto g = random_invertible<S>(f, static_cast<Index>(gens.size()));
      for (Index i = 0; i < g.rows(); ++i) {
        Vector<S> v = zero_vector<S>(f, n);
        for (Index j = 0; j < g.cols(); ++j) v += g(i, j) * gens[static_cast<std::size_t>(j)];
        mixed.push_back(v);
      }
    }
    EXPECT_EQ(Subspace<S>::span(f, n, mixed), u);
    for (const auto& g : gens) EXPECT_TRUE(u.contains(g));
  }
}

TYPED_TEST(LinalgProperty, IntersectionIsLargestCommonSubspace) {
  using S = TypeParam;
  const auto f = field_for<S>();
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 4;
    std::vector<Vector<S>> ug = {random_vector<S>(f, n), random_vector<S>(f, n)};
    std::vector<Vector<S>> wg = {random_vector<S>(f, n), random_vector<S>(f, n)};
    const auto shared = random_vector<S>(f, n);
    ug.push_back(shared);
    wg.push_back(shared);
    const auto u = Subspace<S>::span(f, n, ug);
    const auto w = Subspace<S>::span(f, n, wg);
    const auto meet = intersect(u, w);
    EXPECT_TRUE(u.contains(meet));
    EXPECT_TRUE(w.contains(meet));
    EXPECT_TRUE(meet.contains(shared));
    std::vector<Vector<S>> both = ug;
    both.insert(both.end(), wg.begin(), wg.end());
    EXPECT_EQ(u.dim() + w.dim(), Subspace<S>::span(f, n, both).dim() + meet.dim());
  }
}

}  // namespace
