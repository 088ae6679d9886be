#include <gtest/gtest.h>

#include "comatrix/comodule.hpp"
#include "comatrix/fixtures.hpp"

using namespace comatrix;

namespace {

const Field F2 = Field::prime(2);

ComatrixCoring comatrix_of(const Fixture& fx) { return build_comatrix_coring(fx.framed()); }

}  // namespace

TEST(Coring, AxiomsOnFixtures) {
  for (const auto& fx : all_fixtures()) {
    ComatrixCoring c = comatrix_of(fx);
    CheckReport r = check_coring_axioms(*c.coring);
    EXPECT_TRUE(r.ok()) << fx.name << ": " << r.summary();
    EXPECT_EQ(std::to_string(c.coring->dim()), fx.expect("dim_c")) << fx.name;
  }
}

TEST(Coring, FreeFixtureCounitIsTracePairing) {
  Fixture fx = fixture_ex_free();
  ComatrixCoring c = comatrix_of(fx);
  EXPECT_EQ(c.coring->counit.bracketed(), fx.expect("counit"));
}

TEST(Coring, RegularModuleGivesTrivialCoring) {
  AlgebraPtr a = matrix_algebra(F2, 2);
  ComatrixCoring c = build_comatrix_coring(frame(regular_bimodule(a)));
  EXPECT_EQ(c.coring->dim(), 4u);
  EXPECT_TRUE(check_coring_axioms(*c.coring).ok());
  EXPECT_TRUE(inverse(c.coring->counit).has_value());
}

TEST(Coring, SweedlerCoring) {
  Fixture fx = fixture_ex_sweedler();
  FramedBimodule fr = fx.framed();
  SweedlerCoring sw = build_sweedler_coring(fr.endo.extension);
  EXPECT_EQ(sw.coring->dim(), 8u);
  CheckReport r = check_coring_axioms(*sw.coring);
  EXPECT_TRUE(r.ok()) << r.summary();
  // counit(1 (x) 1) = 1
  const AlgebraPtr& s = sw.extension.morphism.target;
  EXPECT_EQ(sw.coring->counit * sw.tensor.pure(s->unit(), s->unit()), s->unit());
}

TEST(Coring, SweedlerOverItselfIsTrivial) {
  AlgebraPtr s = matrix_algebra(F2, 2);
  SweedlerCoring sw = build_sweedler_coring(make_extension(identity_morphism(s)));
  EXPECT_EQ(sw.coring->dim(), 4u);
  EXPECT_TRUE(check_coring_axioms(*sw.coring).ok());
}

TEST(Coring, ComatrixOfRegularMatchesSweedler) {
  Fixture fx = fixture_ex_sweedler();
  ComatrixCoring c = comatrix_of(fx);
  SweedlerCoring sw = build_sweedler_coring(c.frame.endo.extension);
  SweedlerComparison cmp = compare_with_sweedler(c, sw);
  EXPECT_TRUE(cmp.report.ok()) << cmp.report.summary();
  EXPECT_TRUE(cmp.transport.matrix.is_identity());
  EXPECT_EQ(c.coring->comult, sw.coring->comult);
  EXPECT_EQ(c.coring->counit, sw.coring->counit);
}

TEST(Coring, DualBasisIndependence) {
  Fixture fx = fixture_ex_free();
  DualModule dual = right_dual(fx.sigma);
  DualBasis greedy = compute_dual_basis(fx.sigma, dual);
  DualBasis other = dual_basis_from_generators(
      fx.sigma, dual, {Matrix::column(F2, {1, 1}), Matrix::column(F2, {0, 1}), Matrix::column(F2, {1, 0})});
  ASSERT_NE(greedy.size(), other.size());
  ComatrixCoring a = build_comatrix_coring(frame(fx.sigma, greedy));
  ComatrixCoring b = build_comatrix_coring(frame(fx.sigma, other));
  EXPECT_EQ(a.coring->comult, b.coring->comult);
  EXPECT_EQ(a.coring->counit, b.coring->counit);
}

TEST(Coring, CorruptedComultiplicationIsLocated) {
  ComatrixCoring c = comatrix_of(fixture_ex_free());
  Matrix bad = c.coring->comult;
  bad.add_to(0, 1, F2.one());
  CheckReport r = check_coring_axioms(*with_structure(*c.coring, bad, c.coring->counit));
  ASSERT_FALSE(r.ok());
  bool coassoc = false;
  for (const auto& v : r.violations) coassoc |= v.identity == "coassociativity" && v.witness == "C[1]";
  EXPECT_TRUE(coassoc) << r.summary();
}

TEST(Coring, ZeroCounitBreaksCounitLaw) {
  ComatrixCoring c = comatrix_of(fixture_ex_free());
  Matrix zero(F2, c.coring->counit.rows(), c.coring->counit.cols());
  CheckReport r = check_coring_axioms(*with_structure(*c.coring, c.coring->comult, zero));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations.front().identity, "left counit law");
}

TEST(Coring, NonBilinearComultiplicationReported) {
  ComatrixCoring c = comatrix_of(fixture_ex_sweedler());
  Matrix bad = c.coring->comult;
  bad.add_to(0, 0, F2.one());
  CheckReport r = check_coring_axioms(*with_structure(*c.coring, bad, c.coring->counit));
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.violations.front().identity.find("A-linear"), std::string::npos);
}

TEST(Coring, MorphismChecks) {
  ComatrixCoring c = comatrix_of(fixture_ex_sweedler());
  CoringMorphism id = identity_morphism(c.coring);
  EXPECT_TRUE(check_coring_morphism(id).ok());
  EXPECT_TRUE(check_coring_morphism(compose(id, id)).ok());
  CoringMorphism zero{c.coring, c.coring, Matrix(F2, c.coring->dim(), c.coring->dim())};
  CheckReport r = check_coring_morphism(zero);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations.front().identity, "counit preserved");
}

TEST(LeftComatrix, FreeRankTwo) {
  AlgebraPtr k = ground_algebra(F2);
  Bimodule lambda = free_bimodule(k, 2);
  LeftComatrixCoring lc = build_left_comatrix_coring(lambda);
  EXPECT_EQ(lc.coring->dim(), 4u);
  EXPECT_EQ(lc.comatrix.coring->dim(), 4u);
  EXPECT_TRUE(check_coring_axioms(*lc.coring).ok());
  CheckReport r = check_coring_morphism(lc.iso);
  EXPECT_TRUE(r.ok()) << r.summary();
  EXPECT_TRUE(inverse(lc.iso.matrix).has_value());
}

TEST(LeftComatrix, FreeRankTwoOverMatrices) {
  AlgebraPtr m = matrix_algebra(F2, 2);
  LeftComatrixCoring lc = build_left_comatrix_coring(free_bimodule(m, 2));
  EXPECT_TRUE(check_coring_axioms(*lc.coring).ok());
  EXPECT_TRUE(check_coring_morphism(lc.iso).ok());
  EXPECT_TRUE(inverse(lc.iso.matrix).has_value());
}

TEST(LeftComatrix, RankOneIsCanonical) {
  AlgebraPtr a = product_algebra(ground_algebra(F2), ground_algebra(F2));
  LeftComatrixCoring lc = build_left_comatrix_coring(regular_bimodule(a));
  EXPECT_TRUE(check_coring_morphism(lc.iso).ok());
  EXPECT_TRUE(lc.iso.matrix.is_identity());
}

TEST(LeftComatrix, DualNumbersAreNotProjective) {
  // F_2[x]/x^2 acting on F_2 through x -> 0
  AlgebraPtr d = Algebra::create(F2, {"1", "x"}, {F2.one(), F2.zero(), F2.zero(), F2.one(), F2.zero(), F2.one(),
                                                  F2.zero(), F2.zero()},
                                 Matrix::column(F2, {1, 0}));
  AlgebraPtr k = ground_algebra(F2);
  Bimodule lambda(d, k, 1, {Matrix::identity(F2, 1), Matrix(F2, 1, 1)}, {Matrix::identity(F2, 1)});
  ASSERT_TRUE(validate_bimodule(lambda).ok());
  EXPECT_THROW(build_left_comatrix_coring(lambda), NotProjective);
}

TEST(Comodule, CanonicalCoactions) {
  for (const auto& fx : all_fixtures()) {
    ComatrixCoring c = comatrix_of(fx);
    Comodule rho = sigma_comodule(c);
    Comodule lambda = dual_sigma_comodule(c);
    CheckReport r1 = check_comodule(rho);
    CheckReport r2 = check_comodule(lambda);
    EXPECT_TRUE(r1.ok()) << fx.name << ": " << r1.summary();
    EXPECT_TRUE(r2.ok()) << fx.name << ": " << r2.summary();
  }
}

TEST(Comodule, FreeFixtureCoactionFormula) {
  ComatrixCoring c = comatrix_of(fixture_ex_free());
  Comodule rho = sigma_comodule(c);
  Matrix e1 = Matrix::column(F2, {1, 0});
  Matrix e2 = Matrix::column(F2, {0, 1});
  // e_i* has dual coordinates e_i here
  Matrix expected = rho.tensor.pure(e1, c.tensor.pure(e1, e1)) + rho.tensor.pure(e2, c.tensor.pure(e2, e1));
  EXPECT_EQ(rho.coaction * e1, expected);
}

TEST(Comodule, RegularCoactionIsUnitor) {
  AlgebraPtr a = matrix_algebra(F2, 2);
  ComatrixCoring c = build_comatrix_coring(frame(regular_bimodule(a)));
  Comodule rho = sigma_comodule(c);
  // (Sigma (x) counit) o rho = id, and counit is invertible, so rho is an isomorphism
  EXPECT_TRUE(inverse(rho.coaction).has_value());
}

TEST(Comodule, CorruptedCoactionFails) {
  ComatrixCoring c = comatrix_of(fixture_ex_free());
  Comodule rho = sigma_comodule(c);
  rho.coaction.add_to(0, 0, F2.one());
  EXPECT_FALSE(check_comodule(rho).ok());
}

TEST(Comodule, DualOfSigmaIsCanonicalLeftCoaction) {
  for (const auto& fx : all_fixtures()) {
    ComatrixCoring c = comatrix_of(fx);
    Comodule dual = dual_comodule(sigma_comodule(c), c.frame.basis);
    Comodule lambda = dual_sigma_comodule(c);
    EXPECT_TRUE(check_comodule(dual).ok()) << fx.name;
    EXPECT_EQ(dual.coaction, lambda.coaction) << fx.name;
    Comodule greedy = dual_comodule(sigma_comodule(c));
    EXPECT_EQ(greedy.coaction, lambda.coaction) << fx.name;
  }
}

TEST(Comodule, DoubleDualIsColinear) {
  for (const auto& fx : all_fixtures()) {
    ComatrixCoring c = comatrix_of(fx);
    Comodule rho = sigma_comodule(c);
    Comodule back = left_dual_comodule(dual_sigma_comodule(c));
    CheckReport r = check_comodule(back);
    ASSERT_TRUE(r.ok()) << fx.name << ": " << r.summary();
    // u -> (f -> f(u))
    DualModule dual = right_dual(fx.sigma);
    DualModule ddual = left_dual(dual.module);
    const std::size_t a = fx.a->dim();
    Matrix iso(F2, ddual.functionals.size(), fx.sigma.dim());
    for (std::size_t j = 0; j < fx.sigma.dim(); ++j) {
      Matrix phi(F2, a, dual.functionals.size());
      for (std::size_t k = 0; k < dual.functionals.size(); ++k)
        for (std::size_t q = 0; q < a; ++q) phi.set(q, k, dual.functionals[k](q, j));
      Matrix co = ddual.coords(phi);
      for (std::size_t r2 = 0; r2 < co.rows(); ++r2) iso.set(r2, j, co(r2, 0));
    }
    EXPECT_TRUE(inverse(iso).has_value()) << fx.name;
    CheckReport col = check_colinear(rho, back, iso);
    EXPECT_TRUE(col.ok()) << fx.name << ": " << col.summary();
  }
}

TEST(Comodule, InducedByIdentityIsUnchanged) {
  ComatrixCoring c = comatrix_of(fixture_ex_sweedler());
  Comodule rho = sigma_comodule(c);
  Comodule same = induced_comodule(rho, identity_morphism(c.coring));
  EXPECT_EQ(same.coaction, rho.coaction);
}

TEST(Comodule, HomContainsIdentity) {
  for (const auto& fx : all_fixtures()) {
    ComatrixCoring c = comatrix_of(fx);
    Comodule rho = sigma_comodule(c);
    HomSpace h = hom_comodules(rho, rho);
    EXPECT_TRUE(h.space.contains(Matrix::identity(F2, rho.dim()).vectorize())) << fx.name;
    for (const auto& f : h.maps) EXPECT_TRUE(check_colinear(rho, rho, f).ok());
  }
}

TEST(Comodule, EndOfSigmaIsB) {
  // Hom_C(Sigma, Sigma) = lambda(B)
  for (const auto& fx : all_fixtures()) {
    FramedBimodule fr = fx.framed();
    ComatrixCoring c = build_comatrix_coring(fr);
    Comodule rho = sigma_comodule(c);
    HomSpace h = hom_comodules(rho, rho);
    std::vector<Matrix> lambda_b;
    for (const auto& l : fx.sigma.left_action()) lambda_b.push_back(l.vectorize());
    Subspace image_b = Subspace::from_columns(Matrix::hstack(lambda_b, F2, fx.sigma.dim() * fx.sigma.dim()));
    EXPECT_EQ(h.space, image_b) << fx.name;
  }
}

TEST(Comodule, ZeroComodule) {
  ComatrixCoring c = comatrix_of(fixture_ex_free());
  Comodule zero = zero_comodule(Side::Right, c.coring);
  EXPECT_EQ(zero.dim(), 0u);
  EXPECT_TRUE(check_comodule(zero).ok());
  Comodule rho = sigma_comodule(c);
  EXPECT_EQ(hom_comodules(zero, rho).dim(), 0u);
  EXPECT_EQ(hom_comodules(rho, zero).dim(), 0u);
}
