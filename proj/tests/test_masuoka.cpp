#include <gtest/gtest.h>

#include "comatrix/fixtures.hpp"
#include "comatrix/masuoka.hpp"

using namespace comatrix;

namespace {

const Field F2 = Field::prime(2);

// Element of S = End(Sigma) acting on M2(F2) by left multiplication.
Matrix sweedler_element(const Fixture& fx, std::initializer_list<std::int64_t> entries) {
  FramedBimodule fr = fx.framed();
  return fr.endo.coords(fx.a->left_mult_by(Matrix::column(F2, entries)));
}

SubBimodule sweedler_span(const Fixture& fx, std::vector<std::initializer_list<std::int64_t>> gens) {
  FramedBimodule fr = fx.framed();
  std::vector<Matrix> vs;
  for (auto g : gens) vs.push_back(sweedler_element(fx, g));
  return sub_bimodule(fr.endo, vs);
}

std::string str_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

TEST(Masuoka, SubBimoduleCounts) {
  for (const auto& fx : all_fixtures()) {
    FramedBimodule fr = fx.framed();
    auto subs = enumerate_sub_bimodules(fr.endo);
    EXPECT_EQ(std::to_string(subs.size()), fx.expect("sub_bimodule_count")) << fx.name;
  }
}

TEST(Masuoka, InvertibleGroup) {
  for (const auto& fx : all_fixtures()) {
    FramedBimodule fr = fx.framed();
    SubBimoduleMonoid inv = enumerate_inv(fr.endo);
    EXPECT_EQ(std::to_string(inv.elements.size()), fx.expect("inv_order")) << fx.name;
    EXPECT_EQ(str_bool(inv.table.is_commutative()), fx.expect("inv_abelian")) << fx.name;
    EXPECT_TRUE(check_monoid(inv.table).ok()) << fx.name;
    EXPECT_EQ(inv.table.units().size(), inv.elements.size()) << fx.name;
    EXPECT_EQ(inv.elements.front(), unit_bimodule(fr.endo));
  }
}

TEST(Masuoka, UnitalCounts) {
  for (const auto& fx : all_fixtures()) {
    FramedBimodule fr = fx.framed();
    std::size_t il = 0, ir = 0;
    for (const auto& i : enumerate_sub_bimodules(fr.endo)) {
      if (membership(fr.endo, i, Hand::Left)) ++il;
      if (membership(fr.endo, i, Hand::Right)) ++ir;
    }
    EXPECT_EQ(std::to_string(il), fx.expect("il_count")) << fx.name;
    EXPECT_EQ(std::to_string(ir), fx.expect("ir_count")) << fx.name;
  }
}

TEST(Masuoka, EndomorphismMonoid) {
  for (const auto& fx : all_fixtures()) {
    ComatrixCoring c = build_comatrix_coring(fx.framed());
    EndomorphismMonoid e = coring_endomorphisms(c.coring);
    EXPECT_EQ(std::to_string(e.affine_points), fx.expect("affine_points")) << fx.name;
    EXPECT_EQ(std::to_string(e.elements.size()), fx.expect("end_order")) << fx.name;
    EXPECT_EQ(std::to_string(e.automorphisms().size()), fx.expect("aut_order")) << fx.name;
    EXPECT_TRUE(check_monoid(e.table).ok()) << fx.name;
  }
}

TEST(Masuoka, WorkersDoNotChangeEnumeration) {
  ComatrixCoring c = build_comatrix_coring(fixture_ex_free().framed());
  EndomorphismMonoid one = coring_endomorphisms(c.coring, {1'000'000, 1});
  EndomorphismMonoid four = coring_endomorphisms(c.coring, {1'000'000, 4});
  ASSERT_EQ(one.elements.size(), four.elements.size());
  for (std::size_t i = 0; i < one.elements.size(); ++i) EXPECT_EQ(one.elements[i].matrix, four.elements[i].matrix);
  EXPECT_EQ(one.table.table, four.table.table);
}

TEST(Masuoka, BudgetExceeded) {
  ComatrixCoring c = build_comatrix_coring(fixture_ex_free().framed());
  EXPECT_THROW(coring_endomorphisms(c.coring, {100, 1}), BudgetExceeded);
  EXPECT_THROW(enumerate_sub_bimodules(c.frame.endo, {10, 1}), BudgetExceeded);
}

TEST(Masuoka, InfiniteFieldRejected) {
  Field q = Field::rationals();
  AlgebraPtr k = ground_algebra(q);
  Matrix id = Matrix::identity(q, 2);
  FramedBimodule fr = frame(Bimodule(k, k, 2, {id}, {id}));
  EXPECT_THROW(enumerate_sub_bimodules(fr.endo), InfiniteField);
}

TEST(Masuoka, SweedlerProductOfOffDiagonalLines) {
  Fixture fx = fixture_ex_sweedler();
  FramedBimodule fr = fx.framed();
  SubBimodule e12 = sweedler_span(fx, {{0, 1, 0, 0}});
  SubBimodule e21 = sweedler_span(fx, {{0, 0, 1, 0}});
  EXPECT_EQ(e12.dim(), 1u);
  EXPECT_EQ(product(fr.endo, e12, e21), sweedler_span(fx, {{1, 0, 0, 0}}));
  EXPECT_EQ(product(fr.endo, e21, e12), sweedler_span(fx, {{0, 0, 0, 1}}));
}

TEST(Masuoka, SweedlerOffDiagonalIsInvertible) {
  Fixture fx = fixture_ex_sweedler();
  FramedBimodule fr = fx.framed();
  SubBimodule off = sweedler_span(fx, {{0, 1, 0, 0}, {0, 0, 1, 0}});
  EXPECT_EQ(off.dim(), 2u);
  EXPECT_TRUE(is_invertible(fr.endo, off));
  EXPECT_EQ(inverse_candidate(fr.endo, off), off);
  EXPECT_EQ(product(fr.endo, off, off), unit_bimodule(fr.endo));

  auto cert = membership(fr.endo, off, Hand::Left);
  ASSERT_TRUE(cert.has_value());
  // m(sum first * second) = 1
  Matrix total(F2, fr.endo.algebra->dim(), 1);
  for (const auto& [first, second] : cert->pairs) total = total + fr.endo.algebra->multiply(first, second);
  EXPECT_EQ(total, fr.endo.algebra->unit());
}

TEST(Masuoka, SweedlerAutomorphismFixesDiagonal) {
  Fixture fx = fixture_ex_sweedler();
  FramedBimodule fr = fx.framed();
  ComatrixCoring c = build_comatrix_coring(fr);
  SweedlerCoring sw = build_sweedler_coring(fr.endo.extension);
  SubBimodule off = sweedler_span(fx, {{0, 1, 0, 0}, {0, 0, 1, 0}});
  auto cert = membership(fr.endo, off, Hand::Left);
  ASSERT_TRUE(cert.has_value());
  CoringMorphism g = gamma(c, *cert);
  EXPECT_TRUE(check_coring_morphism(g).ok());
  EXPECT_FALSE(g.matrix.is_identity());
  EXPECT_TRUE((g.matrix * g.matrix).is_identity());
  EXPECT_EQ(f_left(c, g), off);
  EXPECT_EQ(f_right(c, g), off);
  CoringMorphism h = hat_map(c, sw, g);
  EXPECT_EQ(fixed_elements(sw, h), off);
  EXPECT_EQ(h.matrix, gamma_sweedler(sw, *cert).matrix);
}

TEST(Masuoka, IdentityCorrespondsToUnitBimodule) {
  for (const auto& fx : all_fixtures()) {
    ComatrixCoring c = build_comatrix_coring(fx.framed());
    CoringMorphism id = identity_morphism(c.coring);
    EXPECT_EQ(f_left(c, id), unit_bimodule(c.frame.endo)) << fx.name;
    EXPECT_EQ(f_right(c, id), unit_bimodule(c.frame.endo)) << fx.name;
    auto cert = membership(c.frame.endo, unit_bimodule(c.frame.endo), Hand::Left);
    ASSERT_TRUE(cert.has_value());
    EXPECT_TRUE(gamma(c, *cert).matrix.is_identity()) << fx.name;
  }
}

TEST(Masuoka, FullBimoduleIsNotUnitalForFreeFixture) {
  FramedBimodule fr = fixture_ex_free().framed();
  EXPECT_FALSE(membership(fr.endo, full_bimodule(fr.endo), Hand::Left).has_value());
  EXPECT_FALSE(is_invertible(fr.endo, full_bimodule(fr.endo)));
}

TEST(Masuoka, SeparabilityAndSplit) {
  for (const auto& fx : all_fixtures()) {
    FramedBimodule fr = fx.framed();
    EXPECT_EQ(str_bool(is_separable_bimodule(fr.sigma).separable), fx.expect("separable")) << fx.name;
    SplitExtension sp = is_split_extension(fr.endo.extension);
    EXPECT_EQ(str_bool(sp.split), fx.expect("split")) << fx.name;
    ASSERT_TRUE(sp.retraction.has_value());
    EXPECT_EQ(*sp.retraction * fr.endo.algebra->unit(), fr.endo.extension.morphism.source->unit());
  }
}

TEST(Masuoka, DualNumbersAreNeitherSeparableNorSplit) {
  AlgebraPtr d = Algebra::create(F2, {"1", "x"},
                                 {F2.one(), F2.zero(), F2.zero(), F2.one(), F2.zero(), F2.one(), F2.zero(), F2.zero()},
                                 Matrix::column(F2, {1, 0}));
  Bimodule over_k = forget_right(regular_bimodule(d));
  FramedBimodule fr = frame(over_k);
  EXPECT_FALSE(is_separable_bimodule(over_k).separable);
  EXPECT_FALSE(is_split_extension(fr.endo.extension).split);
  TheoremBundle t = verify_theorems(fr);
  EXPECT_TRUE(t.ok());
  EXPECT_FALSE(t.hypotheses.separability.separable);
}

TEST(Masuoka, FreeBasis) {
  for (const auto& fx : all_fixtures()) {
    FramedBimodule fr = fx.framed();
    HypothesisReport h = check_hypotheses(fr);
    FreeBasis fb = h.left_free.found ? h.left_free : h.dual_right_free;
    ASSERT_TRUE(fb.found) << fx.name << ": " << h.summary;
    EXPECT_EQ(std::to_string(fb.basis.size()), fx.expect("free_rank")) << fx.name;
    EXPECT_EQ(h.flatness, "verified");
  }
}

TEST(Masuoka, FreeBasisRejectsWrongDimension) {
  AlgebraPtr m2 = matrix_algebra(F2, 2);
  // Column vectors: dimension 2 over M2 of dimension 4.
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < 4; ++i) left.push_back(Matrix::unvectorize(Matrix::unit_column(F2, 4, i), 2, 2));
  Bimodule col(m2, ground_algebra(F2), 2, left, {Matrix::identity(F2, 2)});
  FreeBasis fb = free_basis(col, Hand::Left);
  EXPECT_FALSE(fb.found);
  EXPECT_FALSE(fb.reason.empty());
}

TEST(Masuoka, TheoremsHoldOnFixtures) {
  for (const auto& fx : all_fixtures()) {
    TheoremBundle t = verify_theorems(fx.framed());
    for (const auto& r : t.reports) EXPECT_TRUE(r.ok()) << fx.name << " / " << r.subject << ": " << r.summary();
    EXPECT_TRUE(t.ok()) << fx.name;
    for (const auto& r : t.reports) EXPECT_GT(r.checked, 0u) << fx.name << " / " << r.subject;
    EXPECT_EQ(std::to_string(t.inv.elements.size()), fx.expect("inv_order")) << fx.name;
    EXPECT_EQ(std::to_string(t.endos.elements.size()), fx.expect("end_order")) << fx.name;
  }
}

TEST(Masuoka, InducedComoduleCompositionOrder) {
  ComatrixCoring c = build_comatrix_coring(fixture_ex_free().framed());
  Comodule rho = sigma_comodule(c);
  EndomorphismMonoid e = coring_endomorphisms(c.coring);
  std::size_t differ = 0;
  for (const auto& g : e.elements) {
    EXPECT_EQ(induced_comodule(rho, identity_morphism(c.coring)).coaction, rho.coaction);
    for (const auto& h : e.elements) {
      Matrix twice = induced_comodule(induced_comodule(rho, g), h).coaction;
      EXPECT_EQ(twice, induced_comodule(rho, compose(h, g)).coaction);
      if (!(twice == induced_comodule(rho, compose(g, h)).coaction)) ++differ;
    }
  }
  EXPECT_GT(differ, 0u);
}
