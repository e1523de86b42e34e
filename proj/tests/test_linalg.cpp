#include "apolar/linalg.hpp"

#include "common.hpp"
#include "oracle.hpp"

using namespace apolar;

namespace {
Matrix M(std::size_t cols, std::vector<std::vector<long>> rows) {
  std::vector<Vector> vs;
  for (auto& r : rows) vs.emplace_back(r.begin(), r.end());
  return Matrix::from_rows(cols, vs);
}
Vector V(std::vector<long> v) { return Vector(v.begin(), v.end()); }
}  // namespace

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel(Matrix::identity(3)).is_zero());
  Subspace full = kernel(Matrix(2, 3));
  EXPECT_EQ(full.dim(), 3u);
  EXPECT_TRUE(full.is_full());
  Subspace k = kernel(M(2, {{1, 1}, {2, 2}}));
  EXPECT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.contains(V({1, -1})));
  EXPECT_EQ(k, Subspace::span(M(2, {{1, -1}})));
}

TEST(Subspace, SumAndIntersection) {
  Subspace e1 = Subspace::span(M(3, {{1, 0, 0}}));
  Subspace e2 = Subspace::span(M(3, {{0, 1, 0}}));
  EXPECT_EQ(subspace_sum(e1, e2).dim(), 2u);
  Subspace a = Subspace::span(M(3, {{1, 0, 0}, {0, 1, 0}}));
  Subspace b = Subspace::span(M(3, {{0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(subspace_intersect(a, b), e2);
  EXPECT_ERRC(subspace_sum(e1, Subspace::zero(2)), AmbientMismatch);
  EXPECT_ERRC(subspace_intersect(e1, Subspace::zero(4)), AmbientMismatch);
}

TEST(Subspace, BasisAndEquationFormsAgree) {
  Matrix A = M(4, {{1, 2, 0, 1}, {0, 1, 1, 1}});
  Subspace s = Subspace::span(A);
  Subspace t = Subspace::solutions_of(s.equations());
  EXPECT_EQ(s, t);
  EXPECT_EQ(t.dim(), 2u);
  EXPECT_EQ(Subspace::span(t.basis()), s);
}

TEST(Solve, Examples) {
  auto x = solve(Matrix::identity(3), V({4, -1, 7}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, V({4, -1, 7}));
  EXPECT_FALSE(solve(M(2, {{1, 1}, {1, 1}}), V({1, 2})));
  auto y = solve(M(3, {{1, 1, 0}}), V({5}));
  ASSERT_TRUE(y);
  EXPECT_EQ(M(3, {{1, 1, 0}}).apply(*y), V({5}));
}

TEST(RowReduce, RankMatchesOracle) {
  std::vector<std::vector<long>> rows = {{2, 4, 6, 8}, {1, 3, 5, 7}, {3, 7, 11, 15}, {0, 1, 0, -1}};
  oracle::Mat om;
  for (auto& r : rows) om.emplace_back(r.begin(), r.end());
  EXPECT_EQ(rank(M(4, rows)), oracle::rank(om));
  Echelon e = row_reduce(M(4, rows));
  EXPECT_EQ(e.rank(), 3u);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(in_row_space(e, V({1, 3, 5, 7})));
  EXPECT_FALSE(in_row_space(e, V({0, 0, 0, 1})));
}

TEST(RowReduce, OverExtension) {
  auto K = cyclotomic_field(4);
  auto z = FieldElement::generator(K);
  Matrix m = Matrix::from_rows(2, {{FieldElement(1), z}, {z, FieldElement(-1)}});
  EXPECT_EQ(rank(m), 1u);  // second row is z times the first
  Matrix n = Matrix::from_rows(2, {{FieldElement(1), z}, {z, FieldElement(1)}});
  EXPECT_EQ(rank(n), 2u);
}

TEST(Matrix, ProductTransposeApply) {
  Matrix a = M(2, {{1, 2}, {3, 4}});
  Matrix b = M(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, M(2, {{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), M(2, {{1, 3}, {2, 4}}));
  EXPECT_EQ(a.apply(V({1, 1})), V({3, 7}));
  EXPECT_TRUE(Matrix(2, 2).is_zero());
}

TEST(RowSpace, Intersection) {
  Echelon e = row_space_intersection(M(3, {{1, 0, 0}, {0, 1, 0}}), M(3, {{1, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(e.rank(), 1u);
  EXPECT_TRUE(in_row_space(e, V({1, 1, 0})));
}
