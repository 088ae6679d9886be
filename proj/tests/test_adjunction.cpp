#include <gtest/gtest.h>

#include "comatrix/adjunction.hpp"
#include "comatrix/fixtures.hpp"

using namespace comatrix;

namespace {

const NamedComodule& named(const std::vector<NamedComodule>& v, const std::string& name) {
  for (const auto& c : v)
    if (c.name == name) return c;
  throw std::runtime_error("no comodule " + name);
}

}  // namespace

TEST(Adjunction, ContextIsConsistent) {
  for (const auto& fx : all_fixtures()) {
    AdjunctionContext ctx = make_adjunction_context(fx.framed());
    CheckReport r = check_adjunction_context(ctx);
    EXPECT_TRUE(r.ok()) << fx.name << ": " << r.summary();
  }
}

TEST(Adjunction, GrouplikeTensorSigmaIsSigma) {
  for (const auto& fx : all_fixtures()) {
    AdjunctionContext ctx = make_adjunction_context(fx.framed());
    Comodule s = grouplike_comodule(ctx);
    ASSERT_TRUE(check_comodule(s).ok()) << fx.name;
    TensoredComodule ss = tensor_sigma(ctx, s);
    EXPECT_TRUE(check_comodule(ss.comodule).ok()) << fx.name;
    Matrix iso = unit_tensor_iso(ctx, ss);
    ASSERT_TRUE(inverse(iso).has_value()) << fx.name;
    Comodule rho = sigma_comodule(ctx.comatrix);
    // transported coaction equals the canonical one
    Matrix moved = tensor_maps(ss.comodule.tensor, rho.tensor, iso, Matrix::identity(iso.field(), ctx.c()->dim())) *
                   ss.comodule.coaction * *inverse(iso);
    EXPECT_EQ(moved, rho.coaction) << fx.name;
  }
}

TEST(Adjunction, SigmaTensorDualIsGrouplike) {
  for (const auto& fx : all_fixtures()) {
    AdjunctionContext ctx = make_adjunction_context(fx.framed());
    TensoredComodule sd = tensor_sigmastar(ctx, sigma_comodule(ctx.comatrix));
    EXPECT_TRUE(check_comodule(sd.comodule).ok()) << fx.name;
    Matrix xi = xi_iso(ctx, sd);
    EXPECT_TRUE(inverse(xi).has_value());
    EXPECT_TRUE(check_colinear(sd.comodule, grouplike_comodule(ctx), xi).ok()) << fx.name;
  }
}

TEST(Adjunction, ZeroComodules) {
  AdjunctionContext ctx = make_adjunction_context(fixture_ex_sweedler().framed());
  EXPECT_EQ(tensor_sigma(ctx, zero_comodule(Side::Right, ctx.d())).comodule.dim(), 0u);
  EXPECT_EQ(tensor_sigmastar(ctx, zero_comodule(Side::Right, ctx.c())).comodule.dim(), 0u);
}

TEST(Adjunction, SweedlerTwistMatchesInducedComodule) {
  AdjunctionContext ctx = make_adjunction_context(fixture_ex_sweedler().framed());
  ComoduleSet set = standard_comodule_set(ctx);
  EXPECT_FALSE(set.g.matrix.is_identity());
  const Comodule& s_hat = named(set.sweedler_side, "S_hat(g)").comodule;
  const Comodule& sigma_g = named(set.comatrix_side, "Sigma_g").comodule;
  TensoredComodule left = tensor_sigma(ctx, s_hat);
  EXPECT_TRUE(check_colinear(left.comodule, sigma_g, unit_tensor_iso(ctx, left)).ok());
  TensoredComodule right = tensor_sigmastar(ctx, sigma_g);
  EXPECT_TRUE(check_colinear(right.comodule, s_hat, xi_iso(ctx, right)).ok());
  // the twist is visible: the untwisted iso is not colinear
  EXPECT_FALSE(check_colinear(left.comodule, named(set.comatrix_side, "Sigma").comodule, unit_tensor_iso(ctx, left)).ok());
}

TEST(Adjunction, PsiOfCanonicalIsoIsXiInverse) {
  AdjunctionContext ctx = make_adjunction_context(fixture_ex_sweedler().framed());
  Comodule s = grouplike_comodule(ctx);
  Comodule rho = sigma_comodule(ctx.comatrix);
  TensoredComodule ss = tensor_sigma(ctx, s);
  TensoredComodule sd = tensor_sigmastar(ctx, rho);
  Matrix f = unit_tensor_iso(ctx, ss);
  Matrix g = psi(ctx, ss, rho, f);
  EXPECT_EQ(g, *inverse(xi_iso(ctx, sd)));
  EXPECT_EQ(psi_inv(ctx, s, sd, g), f);
  Matrix zero(f.field(), f.rows(), f.cols());
  EXPECT_TRUE(psi(ctx, ss, rho, zero).is_zero());
}

TEST(Adjunction, PsiRejectsNonColinearInput) {
  AdjunctionContext ctx = make_adjunction_context(fixture_ex_sweedler().framed());
  ComoduleSet set = standard_comodule_set(ctx);
  const Comodule& s = named(set.sweedler_side, "S").comodule;
  TensoredComodule ss = tensor_sigma(ctx, s);
  Matrix iso = unit_tensor_iso(ctx, ss);
  EXPECT_THROW(psi(ctx, ss, named(set.comatrix_side, "Sigma_g").comodule, iso), NotColinear);
  TensoredComodule sd = tensor_sigmastar(ctx, named(set.comatrix_side, "Sigma_g").comodule);
  Matrix xi_inv = *inverse(xi_iso(ctx, sd));
  EXPECT_THROW(psi_inv(ctx, s, sd, xi_inv), NotColinear);
}

TEST(Adjunction, SweedlerCertificate) {
  AdjunctionContext ctx = make_adjunction_context(fixture_ex_sweedler().framed());
  AdjunctionCertificate cert = verify_adjunction(ctx, standard_comodule_set(ctx));
  for (const auto& r : cert.reports) {
    EXPECT_TRUE(r.ok()) << r.subject << ": " << r.summary();
    EXPECT_GT(r.checked, 0u) << r.subject;
  }
  EXPECT_EQ(cert.pairs.size(), 16u);
  std::size_t nonzero = 0;
  for (const auto& p : cert.pairs) {
    EXPECT_EQ(p.dim_comatrix, p.dim_sweedler) << p.y << ", " << p.x;
    if (p.dim_comatrix) ++nonzero;
  }
  EXPECT_GT(nonzero, 0u);
}

TEST(Adjunction, CertificateOnOtherFixtures) {
  for (const auto& fx : {fixture_ex_free(), fixture_ex_sep()}) {
    AdjunctionContext ctx = make_adjunction_context(fx.framed());
    AdjunctionCertificate cert = verify_adjunction(ctx, standard_comodule_set(ctx));
    for (const auto& r : cert.reports) EXPECT_TRUE(r.ok()) << fx.name << " / " << r.subject << ": " << r.summary();
  }
}
