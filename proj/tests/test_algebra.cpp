#include <gtest/gtest.h>

#include "comatrix/algebra.hpp"

using namespace comatrix;

namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

Matrix elem(const Field& f, std::initializer_list<std::int64_t> v) { return Matrix::column(f, v); }

}  // namespace

TEST(Algebra, GroundFieldIsValid) {
  AlgebraPtr k = ground_algebra(F2);
  EXPECT_TRUE(validate_algebra(*k).ok());
  EXPECT_EQ(*matrix_algebra(F2, 1), *k);
}

TEST(Algebra, MatrixAlgebraIsValid) {
  AlgebraPtr m = matrix_algebra(F2, 2);
  CheckReport r = validate_algebra(*m);
  EXPECT_TRUE(r.ok()) << r.summary();
  EXPECT_EQ(r.checked, 64u + 8u);
  // E12 E21 = E11
  EXPECT_EQ(m->multiply(elem(F2, {0, 1, 0, 0}), elem(F2, {0, 0, 1, 0})), elem(F2, {1, 0, 0, 0}));
}

TEST(Algebra, CorruptedConstantIsLocated) {
  AlgebraPtr m = matrix_algebra(F2, 2);
  std::vector<Scalar> c = m->constants();
  c[0] = F2.add(c[0], F2.one());
  AlgebraPtr bad = Algebra::create(F2, m->labels(), c, m->unit());
  CheckReport r = validate_algebra(*bad);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations.front().identity, "associativity");
  bool saw_triple = false;
  for (const auto& v : r.violations) saw_triple |= v.witness == "(E11*E11)*E12";
  EXPECT_TRUE(saw_triple);
}

TEST(Algebra, OppositeIsAnInvolution) {
  AlgebraPtr m = matrix_algebra(F2, 2);
  AlgebraPtr op = opposite_algebra(m);
  EXPECT_TRUE(validate_algebra(*op).ok());
  EXPECT_FALSE(*op == *m);
  EXPECT_EQ(*opposite_algebra(op), *m);
}

TEST(Algebra, OppositeOfCommutativeIsItself) {
  AlgebraPtr p = product_algebra(ground_algebra(F3), ground_algebra(F3));
  EXPECT_TRUE(p->is_commutative());
  EXPECT_EQ(*opposite_algebra(p), *p);
}

TEST(Algebra, OppositeOfUpperTriangular) {
  AlgebraPtr m = matrix_algebra(F3, 2);
  Subalgebra upper = subalgebra(m, Subspace::from_rows(Matrix::from_rows(F3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}})));
  EXPECT_TRUE(validate_algebra(*upper.algebra).ok());
  AlgebraPtr op = opposite_algebra(upper.algebra);
  Matrix e11 = elem(F3, {1, 0, 0});
  Matrix e12 = elem(F3, {0, 1, 0});
  EXPECT_EQ(upper.algebra->multiply(e11, e12), e12);
  EXPECT_TRUE(op->multiply(e11, e12).is_zero());
  EXPECT_EQ(op->multiply(e12, e11), e12);
}

TEST(Algebra, DiagonalSubalgebra) {
  AlgebraPtr m = matrix_algebra(F2, 2);
  Subalgebra d = subalgebra_spanned(m, {elem(F2, {1, 0, 0, 0}), elem(F2, {0, 0, 0, 1})});
  EXPECT_EQ(d.algebra->dim(), 2u);
  EXPECT_TRUE(d.algebra->is_commutative());
  EXPECT_TRUE(check_algebra_morphism(d.inclusion).ok());
  EXPECT_EQ(*d.algebra, *product_algebra(ground_algebra(F2), ground_algebra(F2)));
}

TEST(Algebra, SubalgebraErrors) {
  AlgebraPtr m = matrix_algebra(F2, 2);
  EXPECT_THROW(subalgebra_spanned(m, {elem(F2, {0, 1, 0, 0})}), MissingUnit);
  EXPECT_THROW(subalgebra_spanned(m, {elem(F2, {1, 0, 0, 1}), elem(F2, {0, 1, 0, 0}), elem(F2, {0, 0, 1, 0})}),
               NotClosed);
}

TEST(Algebra, MorphismsCompose) {
  AlgebraPtr k = ground_algebra(F2);
  AlgebraPtr m = matrix_algebra(F2, 2);
  Subalgebra d = subalgebra_spanned(m, {elem(F2, {1, 0, 0, 0}), elem(F2, {0, 0, 0, 1})});
  AlgebraMorphism unit{k, d.algebra, d.algebra->unit()};
  EXPECT_TRUE(check_algebra_morphism(unit).ok());
  AlgebraMorphism both = compose(d.inclusion, unit);
  EXPECT_TRUE(check_algebra_morphism(both).ok());
  EXPECT_EQ(both.matrix, m->unit());
  EXPECT_TRUE(make_extension(both).injective);
  AlgebraMorphism bad{m, m, Matrix::zero(F2, 4, 4)};
  EXPECT_FALSE(check_algebra_morphism(bad).ok());
}
