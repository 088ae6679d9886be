#include <gtest/gtest.h>

#include "comatrix/endo.hpp"

using namespace comatrix;

namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

Bimodule plane_over_f2() {
  AlgebraPtr k = ground_algebra(F2);
  Matrix id = Matrix::identity(F2, 2);
  return {k, k, 2, {id}, {id}};
}

// S = M_2(F_2) as a (D, S)-bimodule, D the diagonal subalgebra.
Bimodule sweedler_sigma() {
  AlgebraPtr s = matrix_algebra(F2, 2);
  Subalgebra d = subalgebra_spanned(s, {Matrix::column(F2, {1, 0, 0, 0}), Matrix::column(F2, {0, 0, 0, 1})});
  return restrict_left(regular_bimodule(s), d.inclusion);
}

// Row vectors F_2^2 as a right M_2(F_2)-module: x.a = x a, i.e. R_a = a^T.
Bimodule row_vectors() {
  AlgebraPtr m = matrix_algebra(F2, 2);
  std::vector<Matrix> r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r.push_back(Matrix::elementary(F2, 2, 2, j, i));
  return {ground_algebra(F2), m, 2, {Matrix::identity(F2, 2)}, r};
}

Bimodule column_vectors() {
  AlgebraPtr m = matrix_algebra(F2, 2);
  std::vector<Matrix> l;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) l.push_back(Matrix::elementary(F2, 2, 2, i, j));
  return {m, ground_algebra(F2), 2, l, {Matrix::identity(F2, 2)}};
}

Matrix double_dual_map(const Bimodule& sigma, const DualModule& dual, const DualModule& ddual) {
  // x -> (f -> f(x)) with Sigma** = left dual of Sigma*.
  const std::size_t a = sigma.right_algebra()->dim();
  Matrix iso(sigma.field(), ddual.functionals.size(), sigma.dim());
  for (std::size_t j = 0; j < sigma.dim(); ++j) {
    Matrix phi(sigma.field(), a, dual.functionals.size());
    for (std::size_t k = 0; k < dual.functionals.size(); ++k)
      for (std::size_t q = 0; q < a; ++q) phi.set(q, k, dual.functionals[k](q, j));
    Matrix c = ddual.coords(phi);
    for (std::size_t r = 0; r < c.rows(); ++r) iso.set(r, j, c(r, 0));
  }
  return iso;
}

}  // namespace

TEST(Bimodule, Builders) {
  AlgebraPtr m = matrix_algebra(F3, 2);
  EXPECT_TRUE(validate_bimodule(regular_bimodule(m)).ok());
  EXPECT_TRUE(validate_bimodule(free_bimodule(m, 2)).ok());
  EXPECT_TRUE(validate_bimodule(sweedler_sigma()).ok());
  EXPECT_TRUE(validate_bimodule(row_vectors()).ok());
  EXPECT_TRUE(validate_bimodule(column_vectors()).ok());
}

TEST(Bimodule, BrokenActionIsReported) {
  AlgebraPtr m = matrix_algebra(F2, 2);
  Bimodule reg = regular_bimodule(m);
  std::vector<Matrix> r = reg.right_action();
  r[1] = reg.left_action()[1];
  CheckReport rep = validate_bimodule(Bimodule(m, m, 4, reg.left_action(), r));
  EXPECT_FALSE(rep.ok());
}

TEST(Dual, RegularIsSelfDual) {
  AlgebraPtr m = matrix_algebra(F2, 2);
  DualModule d = right_dual(regular_bimodule(m));
  EXPECT_EQ(d.module.dim(), 4u);
  EXPECT_TRUE(validate_bimodule(d.module).ok());
  DualModule l = left_dual(regular_bimodule(m));
  EXPECT_EQ(l.module.dim(), 4u);
  EXPECT_TRUE(validate_bimodule(l.module).ok());
}

TEST(Dual, FreeRankTwo) {
  AlgebraPtr a = product_algebra(ground_algebra(F3), ground_algebra(F3));
  EXPECT_EQ(right_dual(free_bimodule(a, 2)).module.dim(), 4u);
  EXPECT_EQ(left_dual(free_bimodule(a, 2)).module.dim(), 4u);
}

TEST(Dual, DoubleDualIsomorphism) {
  for (const Bimodule& sigma : {plane_over_f2(), sweedler_sigma()}) {
    DualModule d = right_dual(sigma);
    DualModule dd = left_dual(d.module);
    ASSERT_EQ(dd.module.dim(), sigma.dim());
    Matrix iso = double_dual_map(sigma, d, dd);
    EXPECT_TRUE(inverse(iso).has_value());
    for (std::size_t b = 0; b < sigma.left_action().size(); ++b)
      EXPECT_EQ(iso * sigma.left_action()[b], dd.module.left_action()[b] * iso);
    for (std::size_t a = 0; a < sigma.right_action().size(); ++a)
      EXPECT_EQ(iso * sigma.right_action()[a], dd.module.right_action()[a] * iso);
  }
}

TEST(DualBasis, RankOneFree) {
  AlgebraPtr k = ground_algebra(F2);
  Bimodule a = regular_bimodule(k);
  DualModule d = right_dual(a);
  DualBasis db = compute_dual_basis(a, d);
  ASSERT_EQ(db.size(), 1u);
  EXPECT_EQ(db.elements[0], k->unit());
  EXPECT_EQ(d.functional(db.functionals[0]), Matrix::identity(F2, 1));
}

TEST(DualBasis, UnitGeneratesSweedlerSigma) {
  Bimodule sigma = sweedler_sigma();
  DualModule d = right_dual(sigma);
  AlgebraPtr s = sigma.right_algebra();
  DualBasis db = dual_basis_from_generators(sigma, d, {s->unit()});
  ASSERT_EQ(db.size(), 1u);
  EXPECT_EQ(d.functional(db.functionals[0]), Matrix::identity(F2, 4));
  EXPECT_TRUE(check_dual_basis(sigma, d, compute_dual_basis(sigma, d)).ok());
}

TEST(DualBasis, FreeRankTwo) {
  AlgebraPtr a = matrix_algebra(F3, 2);
  Bimodule m = free_bimodule(a, 2);
  DualModule d = right_dual(m);
  DualBasis db = compute_dual_basis(m, d);
  EXPECT_TRUE(check_dual_basis(m, d, db).ok());
  EXPECT_LE(db.size(), m.dim());
}

TEST(DualBasis, IdempotentImage) {
  // e M_2(F_2) for e = E11, a right module over the diagonal subalgebra.
  AlgebraPtr s = matrix_algebra(F2, 2);
  Subalgebra d = subalgebra_spanned(s, {Matrix::column(F2, {1, 0, 0, 0}), Matrix::column(F2, {0, 0, 0, 1})});
  // basis E11, E12; diag(a, b) acts by a on E11 and by b on E12
  std::vector<Matrix> r = {Matrix::from_rows(F2, {{1, 0}, {0, 0}}), Matrix::from_rows(F2, {{0, 0}, {0, 1}})};
  Bimodule sigma(ground_algebra(F2), d.algebra, 2, {Matrix::identity(F2, 2)}, r);
  ASSERT_TRUE(validate_bimodule(sigma).ok());
  DualModule dual = right_dual(sigma);
  DualBasis db = compute_dual_basis(sigma, dual);
  EXPECT_TRUE(check_dual_basis(sigma, dual, db).ok());
}

TEST(DualBasis, NonProjectiveModuleFails) {
  // F_2 as a module over the dual numbers F_2[x]/x^2, x acting by zero.
  std::vector<Scalar> c(8, F2.zero());
  c[(0 * 2 + 0) * 2 + 0] = F2.one();
  c[(0 * 2 + 1) * 2 + 1] = F2.one();
  c[(1 * 2 + 0) * 2 + 1] = F2.one();
  AlgebraPtr dn = Algebra::create(F2, {"1", "x"}, c, Matrix::column(F2, {1, 0}));
  ASSERT_TRUE(validate_algebra(*dn).ok());
  Bimodule m(ground_algebra(F2), dn, 1, {Matrix::identity(F2, 1)},
             {Matrix::identity(F2, 1), Matrix::zero(F2, 1, 1)});
  ASSERT_TRUE(validate_bimodule(m).ok());
  EXPECT_THROW(compute_dual_basis(m, right_dual(m)), NotProjective);
}

TEST(Tensor, OverGroundFieldIsFull) {
  TensorProduct t(plane_over_f2(), plane_over_f2());
  EXPECT_EQ(t.dim(), 4u);
  EXPECT_EQ(t.space().kernel.dim(), 0u);
}

TEST(Tensor, RowTimesColumnCollapses) {
  TensorProduct t(row_vectors(), column_vectors());
  EXPECT_EQ(t.dim(), 1u);
  EXPECT_EQ(t.space().kernel.dim(), 3u);
}

TEST(Tensor, RingOverItself) {
  AlgebraPtr s = matrix_algebra(F2, 2);
  TensorProduct t(regular_bimodule(s), regular_bimodule(s));
  EXPECT_EQ(t.dim(), 4u);
  Matrix mult = left_unitor(t);
  Matrix x = Matrix::column(F2, {0, 1, 0, 0});
  Matrix y = Matrix::column(F2, {0, 0, 1, 0});
  EXPECT_EQ(mult * t.pure(x, y), s->multiply(x, y));
  EXPECT_TRUE(validate_bimodule(t.bimodule()).ok());
}

TEST(Tensor, RelationsHold) {
  Bimodule sigma = sweedler_sigma();
  DualModule d = right_dual(sigma);
  TensorProduct t(d.module, sigma);
  EXPECT_EQ(t.dim(), 8u);
  const auto& b = *sigma.left_algebra();
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t i = 0; i < d.module.dim(); ++i)
      for (std::size_t j = 0; j < sigma.dim(); ++j) {
        Matrix x = Matrix::unit_column(F2, d.module.dim(), i);
        Matrix y = Matrix::unit_column(F2, sigma.dim(), j);
        EXPECT_EQ(t.pure(d.module.right_action()[r] * x, y), t.pure(x, sigma.left_action()[r] * y));
      }
}

TEST(Tensor, IllDefinedMapRejected) {
  TensorProduct t(row_vectors(), column_vectors());
  Matrix raw = Matrix::zero(F2, 1, 4);
  raw.set(0, 0, F2.one());
  EXPECT_THROW(t.descend(raw), IllDefinedMap);
}

TEST(Endo, PlaneGivesMatrixAlgebra) {
  EndoRing e = endo_ring(plane_over_f2());
  EXPECT_EQ(e.algebra->dim(), 4u);
  EXPECT_EQ(*e.algebra, *matrix_algebra(F2, 2));
  EXPECT_TRUE(check_algebra_morphism(e.extension.morphism).ok());
}

TEST(Endo, RegularGivesItself) {
  AlgebraPtr a = product_algebra(ground_algebra(F3), ground_algebra(F3));
  EndoRing e = endo_ring(regular_bimodule(a));
  EXPECT_EQ(e.algebra->dim(), 2u);
  EXPECT_TRUE(e.extension.injective);
  EXPECT_TRUE(validate_algebra(*e.algebra).ok());
}

TEST(Endo, SweedlerSigma) {
  EndoRing e = endo_ring(sweedler_sigma());
  EXPECT_EQ(*e.algebra, *matrix_algebra(F2, 2));
  EXPECT_TRUE(e.extension.injective);
  EXPECT_TRUE(validate_bimodule(e.sigma_over_s).ok());
}

TEST(Frame, XiIsAnIsomorphism) {
  AlgebraPtr m = matrix_algebra(F3, 2);
  Subalgebra upper = subalgebra(m, Subspace::from_rows(Matrix::from_rows(F3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}})));
  Bimodule random_f3 = forget_left(free_bimodule(upper.algebra, 2));
  for (const Bimodule& sigma : {plane_over_f2(), sweedler_sigma(), random_f3}) {
    FramedBimodule fr = frame(sigma);
    CheckReport r = check_frame(fr);
    EXPECT_TRUE(r.ok()) << r.summary();
    EXPECT_TRUE(validate_bimodule(fr.dual_over_s).ok());
    // sum_i e_i (x) e_i* maps to 1
    Matrix total(sigma.field(), fr.sigma_dual.dim(), 1);
    for (std::size_t i = 0; i < fr.basis.size(); ++i)
      total = total + fr.sigma_dual.pure(fr.basis.elements[i], fr.basis.functionals[i]);
    EXPECT_EQ(fr.to_endomorphism * total, fr.endo.algebra->unit());
  }
}

TEST(Frame, CompositionRule) {
  AlgebraPtr m = matrix_algebra(F3, 2);
  Subalgebra upper = subalgebra(m, Subspace::from_rows(Matrix::from_rows(F3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}})));
  Bimodule sigma = forget_left(free_bimodule(upper.algebra, 2));
  FramedBimodule fr = frame(sigma);
  const std::size_t nd = fr.dual.functionals.size();
  // xi(u (x) f) o xi(v (x) g) = xi(u.f(v) (x) g)
  for (std::size_t u = 0; u < sigma.dim(); ++u)
    for (std::size_t f = 0; f < nd; ++f)
      for (std::size_t v = 0; v < sigma.dim(); ++v) {
        std::size_t g = (u + f + v) % nd;
        Matrix uu = Matrix::unit_column(F3, sigma.dim(), u);
        Matrix vv = Matrix::unit_column(F3, sigma.dim(), v);
        Matrix lhs = fr.endo.endomorphism(fr.to_endomorphism * fr.sigma_dual.pure(uu, Matrix::unit_column(F3, nd, f))) *
                     fr.endo.endomorphism(fr.to_endomorphism * fr.sigma_dual.pure(vv, Matrix::unit_column(F3, nd, g)));
        Matrix fv = fr.dual.functionals[f] * vv;
        Matrix w = sigma.act_right(fv) * uu;
        Matrix rhs = fr.endo.endomorphism(fr.to_endomorphism * fr.sigma_dual.pure(w, Matrix::unit_column(F3, nd, g)));
        EXPECT_EQ(lhs, rhs);
      }
}

TEST(Opposite, DoubleOppositeAndW) {
  Bimodule sigma = sweedler_sigma();
  EXPECT_EQ(opposite_bimodule(opposite_bimodule(sigma)), sigma);
  AlgebraPtr b = ground_algebra(F2);
  Bimodule reg = regular_bimodule(b);
  Bimodule op = opposite_bimodule(reg);
  EXPECT_EQ(op, reg);

  Bimodule free = plane_over_f2();
  Bimodule w = opposite_bimodule(right_dual(free).module);
  EXPECT_TRUE(validate_bimodule(w).ok());
  DualModule wd = right_dual(w);
  EXPECT_TRUE(check_dual_basis(w, wd, compute_dual_basis(w, wd)).ok());
}
