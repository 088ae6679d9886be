#include "comatrix/adjunction.hpp"

#include <algorithm>

namespace comatrix {

namespace {

void put_column(Matrix& m, std::size_t j, const Matrix& v) {
  for (std::size_t r = 0; r < v.rows(); ++r) m.set(r, j, v(r, 0));
}

void require_coring(const Comodule& x, const CoringPtr& c, const char* what) {
  if (x.side != Side::Right) throw InvalidStructure(std::string(what) + ": expected a right comodule");
  if (x.coring != c && !(x.coring->comult == c->comult && x.coring->counit == c->counit)) {
    throw InvalidStructure(std::string(what) + ": comodule over the wrong coring");
  }
}

void expect(CheckReport& r, bool cond, const std::string& identity, const std::string& witness) {
  ++r.checked;
  if (!cond) r.fail(identity, witness);
}

void expect_ok(CheckReport& r, const CheckReport& sub, const std::string& identity, const std::string& witness) {
  expect(r, sub.ok(), identity, sub.ok() ? witness : witness + ": " + sub.summary());
}

}  // namespace

AdjunctionContext make_adjunction_context(const FramedBimodule& fr) {
  AdjunctionContext ctx;
  ctx.frame = fr;
  ctx.comatrix = build_comatrix_coring(fr);
  ctx.sweedler = build_sweedler_coring(fr.endo.extension);
  ctx.dual_sigma = TensorProduct(fr.dual_over_s, fr.endo.sigma_over_s);
  const std::size_t m = fr.sigma.dim();
  const std::size_t nd = fr.dual.module.dim();
  Matrix raw(fr.sigma.field(), fr.right_algebra()->dim(), nd * m);
  for (std::size_t k = 0; k < nd; ++k)
    for (std::size_t j = 0; j < m; ++j) put_column(raw, k * m + j, fr.dual.functionals[k].column_at(j));
  ctx.evaluation = ctx.dual_sigma.descend(raw);
  return ctx;
}

CheckReport check_adjunction_context(const AdjunctionContext& ctx) {
  CheckReport report;
  report.subject = "adjunction context";
  const Algebra& a = *ctx.frame.right_algebra();
  const Bimodule& t = ctx.dual_sigma.bimodule();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    expect(report, ctx.evaluation * t.left_action()[i] == a.left_mult(i) * ctx.evaluation, "evaluation left A-linear",
           a.labels()[i]);
    expect(report, ctx.evaluation * t.right_action()[i] == a.right_mult(i) * ctx.evaluation,
           "evaluation right A-linear", a.labels()[i]);
  }
  report.merge(check_frame(ctx.frame));
  report.merge(check_coring_axioms(*ctx.c()));
  report.merge(check_coring_axioms(*ctx.d()));
  return report;
}

TensoredComodule tensor_sigma(const AdjunctionContext& ctx, const Comodule& y) {
  require_coring(y, ctx.d(), "tensor_sigma");
  const FramedBimodule& fr = ctx.frame;
  const Field& f = fr.sigma.field();
  const std::size_t m = fr.sigma.dim();
  const std::size_t ny = y.dim();
  const std::size_t nd_coring = ctx.d()->dim();
  const std::size_t ds = fr.endo.algebra->dim();
  const std::vector<Matrix>& rep = fr.endo.rep;
  const TensorProduct& sw = ctx.sweedler.tensor;
  const TensorProduct& cm = ctx.comatrix.tensor;

  TensoredComodule out;
  out.tensor = TensorProduct(y.module, fr.endo.sigma_over_s);
  TensorProduct target(out.tensor.bimodule(), ctx.c()->module);
  Matrix raw(f, target.dim(), ny * m);
  for (std::size_t yi = 0; yi < ny; ++yi) {
    Matrix w = y.tensor.section() * y.coaction.column_at(yi);
    for (std::size_t r = 0; r < w.rows(); ++r) {
      if (w(r, 0).is_zero()) continue;
      std::size_t y0 = r / nd_coring, d = r % nd_coring;
      Matrix pairs = sw.section().column_at(d);
      for (std::size_t ab = 0; ab < pairs.rows(); ++ab) {
        if (pairs(ab, 0).is_zero()) continue;
        Scalar coef = f.mul(w(r, 0), pairs(ab, 0));
        std::size_t a = ab / ds, b = ab % ds;
        Matrix e_y0 = Matrix::unit_column(f, ny, y0);
        for (std::size_t u = 0; u < m; ++u) {
          Matrix bu = rep[b].column_at(u);
          Matrix col(f, target.dim(), 1);
          for (std::size_t i = 0; i < fr.basis.size(); ++i) {
            col = col + target.pure(out.tensor.pure(e_y0, rep[a] * fr.basis.elements[i]),
                                    cm.pure(fr.basis.functionals[i], bu));
          }
          Matrix acc = raw.column_at(yi * m + u) + col.scaled(coef);
          put_column(raw, yi * m + u, acc);
        }
      }
    }
  }
  out.comodule = make_comodule(Side::Right, ctx.c(), out.tensor.bimodule(), out.tensor.descend(raw));
  return out;
}

TensoredComodule tensor_sigmastar(const AdjunctionContext& ctx, const Comodule& x) {
  require_coring(x, ctx.c(), "tensor_sigmastar");
  const FramedBimodule& fr = ctx.frame;
  const Field& f = fr.sigma.field();
  const std::size_t m = fr.sigma.dim();
  const std::size_t nd = fr.dual.module.dim();
  const std::size_t nx = x.dim();
  const std::size_t nc = ctx.c()->dim();
  const Algebra& s = *fr.endo.algebra;
  const TensorProduct& sw = ctx.sweedler.tensor;
  const TensorProduct& cm = ctx.comatrix.tensor;

  // 1 (x) xi(u_j (x) f_l)
  std::vector<std::vector<Matrix>> grouped(m, std::vector<Matrix>(nd));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t l = 0; l < nd; ++l)
      grouped[j][l] = sw.pure(s.unit(), fr.endo.coords(rank_one_right(fr.sigma, Matrix::unit_column(f, m, j),
                                                                       fr.dual.functionals[l])));

  TensoredComodule out;
  out.tensor = TensorProduct(x.module, fr.dual_over_s);
  TensorProduct target(out.tensor.bimodule(), ctx.d()->module);
  Matrix raw(f, target.dim(), nx * nd);
  for (std::size_t xi = 0; xi < nx; ++xi) {
    Matrix w = x.tensor.section() * x.coaction.column_at(xi);
    for (std::size_t r = 0; r < w.rows(); ++r) {
      if (w(r, 0).is_zero()) continue;
      std::size_t x0 = r / nc, cidx = r % nc;
      Matrix pairs = cm.section().column_at(cidx);
      for (std::size_t kj = 0; kj < pairs.rows(); ++kj) {
        if (pairs(kj, 0).is_zero()) continue;
        Scalar coef = f.mul(w(r, 0), pairs(kj, 0));
        std::size_t k = kj / m, j = kj % m;
        Matrix left = out.tensor.pure(Matrix::unit_column(f, nx, x0), Matrix::unit_column(f, nd, k));
        for (std::size_t l = 0; l < nd; ++l) {
          Matrix acc = raw.column_at(xi * nd + l) + target.pure(left, grouped[j][l]).scaled(coef);
          put_column(raw, xi * nd + l, acc);
        }
      }
    }
  }
  out.comodule = make_comodule(Side::Right, ctx.d(), out.tensor.bimodule(), out.tensor.descend(raw));
  return out;
}

Matrix tensor_map(const TensoredComodule& from, const TensoredComodule& to, const Matrix& alpha) {
  const Matrix id = Matrix::identity(alpha.field(), from.tensor.right_factor().dim());
  return tensor_maps(from.tensor, to.tensor, alpha, id);
}

Comodule grouplike_comodule(const AdjunctionContext& ctx) {
  const AlgebraPtr& s = ctx.frame.endo.algebra;
  Bimodule module = forget_left(regular_bimodule(s));
  TensorProduct t(module, ctx.d()->module);
  Matrix coaction(s->field(), t.dim(), s->dim());
  for (std::size_t k = 0; k < s->dim(); ++k) {
    put_column(coaction, k, t.pure(s->unit(), ctx.sweedler.tensor.pure(s->unit(), s->basis_vector(k))));
  }
  return make_comodule(Side::Right, ctx.d(), std::move(module), std::move(coaction));
}

Matrix unit_tensor_iso(const AdjunctionContext& ctx, const TensoredComodule& s_sigma) {
  const FramedBimodule& fr = ctx.frame;
  const std::size_t m = fr.sigma.dim();
  const std::size_t ds = fr.endo.algebra->dim();
  if (s_sigma.tensor.left_factor().dim() != ds) throw DimensionMismatch("unit_tensor_iso: left factor is not S");
  Matrix raw(fr.sigma.field(), m, ds * m);
  for (std::size_t k = 0; k < ds; ++k)
    for (std::size_t u = 0; u < m; ++u) put_column(raw, k * m + u, fr.endo.rep[k].column_at(u));
  return s_sigma.tensor.descend(raw);
}

Matrix xi_iso(const AdjunctionContext& ctx, const TensoredComodule& sigma_dual) {
  const FramedBimodule& fr = ctx.frame;
  const Field& f = fr.sigma.field();
  const std::size_t m = fr.sigma.dim();
  const std::size_t nd = fr.dual.module.dim();
  if (sigma_dual.tensor.left_factor().dim() != m) throw DimensionMismatch("xi_iso: left factor is not Sigma");
  Matrix raw(f, fr.endo.algebra->dim(), m * nd);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t l = 0; l < nd; ++l) {
      put_column(raw, u * nd + l,
                 fr.endo.coords(rank_one_right(fr.sigma, Matrix::unit_column(f, m, u), fr.dual.functionals[l])));
    }
  return sigma_dual.tensor.descend(raw);
}

Matrix psi(const AdjunctionContext& ctx, const TensoredComodule& y_sigma, const Comodule& x, const Matrix& f) {
  CheckReport r = check_colinear(y_sigma.comodule, x, f);
  if (!r.ok()) throw NotColinear("psi: " + r.summary());
  const FramedBimodule& fr = ctx.frame;
  const Field& field = fr.sigma.field();
  const std::size_t ny = y_sigma.tensor.left_factor().dim();
  TensorProduct x_dual(x.module, fr.dual_over_s);
  Matrix out(field, x_dual.dim(), ny);
  for (std::size_t y = 0; y < ny; ++y) {
    Matrix col(field, x_dual.dim(), 1);
    Matrix e_y = Matrix::unit_column(field, ny, y);
    for (std::size_t i = 0; i < fr.basis.size(); ++i) {
      col = col + x_dual.pure(f * y_sigma.tensor.pure(e_y, fr.basis.elements[i]), fr.basis.functionals[i]);
    }
    put_column(out, y, col);
  }
  return out;
}

Matrix psi_inv(const AdjunctionContext& ctx, const Comodule& y, const TensoredComodule& x_dual, const Matrix& g) {
  CheckReport r = check_colinear(y, x_dual.comodule, g);
  if (!r.ok()) throw NotColinear("psi_inv: " + r.summary());
  const FramedBimodule& fr = ctx.frame;
  const Field& field = fr.sigma.field();
  const Bimodule& x = x_dual.tensor.left_factor();
  const std::size_t m = fr.sigma.dim();
  const std::size_t nd = fr.dual.module.dim();
  const std::size_t ny = y.dim();
  TensorProduct y_sigma(y.module, fr.endo.sigma_over_s);
  Matrix raw(field, x.dim(), ny * m);
  for (std::size_t yi = 0; yi < ny; ++yi) {
    Matrix w = x_dual.tensor.section() * g.column_at(yi);
    for (std::size_t r2 = 0; r2 < w.rows(); ++r2) {
      if (w(r2, 0).is_zero()) continue;
      std::size_t x0 = r2 / nd, k = r2 % nd;
      Matrix e_x0 = Matrix::unit_column(field, x.dim(), x0).scaled(w(r2, 0));
      for (std::size_t u = 0; u < m; ++u) {
        Matrix value = x.act_right(fr.dual.functionals[k].column_at(u)) * e_x0;
        put_column(raw, yi * m + u, raw.column_at(yi * m + u) + value);
      }
    }
  }
  return y_sigma.descend(raw);
}

ComoduleSet standard_comodule_set(const AdjunctionContext& ctx, const EnumerationSettings& settings) {
  EndomorphismMonoid endos = coring_endomorphisms(ctx.c(), settings);
  ComoduleSet set;
  set.g = identity_morphism(ctx.c());
  for (auto i : endos.automorphisms()) {
    if (i != endos.table.unit) {
      set.g = endos.elements[i];
      break;
    }
  }
  Comodule s = grouplike_comodule(ctx);
  Comodule sigma = sigma_comodule(ctx.comatrix);
  set.sweedler_side = {
      {"S", s},
      {"S_hat(g)", induced_comodule(s, hat_map(ctx.comatrix, ctx.sweedler, set.g))},
      {"Sigma(x)Sigma*", tensor_sigmastar(ctx, sigma).comodule},
      {"0", zero_comodule(Side::Right, ctx.d())},
  };
  set.comatrix_side = {
      {"Sigma", sigma},
      {"Sigma_g", induced_comodule(sigma, set.g)},
      {"S(x)Sigma", tensor_sigma(ctx, s).comodule},
      {"0", zero_comodule(Side::Right, ctx.c())},
  };
  return set;
}

bool AdjunctionCertificate::ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.ok(); });
}

AdjunctionCertificate verify_adjunction(const AdjunctionContext& ctx, const ComoduleSet& set) {
  AdjunctionCertificate out;
  const auto& ys = set.sweedler_side;
  const auto& xs = set.comatrix_side;

  CheckReport comodules;
  comodules.subject = "comodules";
  expect_ok(comodules, check_adjunction_context(ctx), "context", "evaluation");
  std::vector<TensoredComodule> ysig, xdual;
  for (const auto& y : ys) {
    expect_ok(comodules, check_comodule(y.comodule), "comodule axioms", y.name);
    ysig.push_back(tensor_sigma(ctx, y.comodule));
    expect_ok(comodules, check_comodule(ysig.back().comodule), "comodule axioms", y.name + "(x)Sigma");
  }
  for (const auto& x : xs) {
    expect_ok(comodules, check_comodule(x.comodule), "comodule axioms", x.name);
    xdual.push_back(tensor_sigmastar(ctx, x.comodule));
    expect_ok(comodules, check_comodule(xdual.back().comodule), "comodule axioms", x.name + "(x)Sigma*");
  }
  out.reports.push_back(comodules);
  if (!comodules.ok()) return out;

  // S (x) Sigma = Sigma, S_hat(g) (x) Sigma = Sigma_g, and xi the other way.
  CheckReport canonical;
  canonical.subject = "canonical isomorphisms";
  if (ys.size() >= 2 && xs.size() >= 2) {
    for (std::size_t k = 0; k < 2; ++k) {
      Matrix u = unit_tensor_iso(ctx, ysig[k]);
      expect(canonical, inverse(u).has_value(), "S (x)_S Sigma = Sigma bijective", ys[k].name);
      expect_ok(canonical, check_colinear(ysig[k].comodule, xs[k].comodule, u), "S (x)_S Sigma = Sigma colinear",
                ys[k].name + "(x)Sigma -> " + xs[k].name);
      Matrix xi = xi_iso(ctx, xdual[k]);
      expect(canonical, inverse(xi).has_value(), "Sigma (x)_A Sigma* = S bijective", xs[k].name);
      expect_ok(canonical, check_colinear(xdual[k].comodule, ys[k].comodule, xi), "Sigma (x)_A Sigma* = S colinear",
                xs[k].name + "(x)Sigma* -> " + ys[k].name);
    }
    Matrix u = unit_tensor_iso(ctx, ysig[0]);
    std::optional<Matrix> xi_inv = inverse(xi_iso(ctx, xdual[0]));
    expect(canonical, xi_inv && psi(ctx, ysig[0], xs[0].comodule, u) == *xi_inv, "Psi(canonical) = xi^-1", "S, Sigma");
  }
  out.reports.push_back(canonical);

  auto homs = [](const std::vector<NamedComodule>& v) {
    std::vector<std::vector<HomSpace>> h(v.size());
    for (std::size_t p = 0; p < v.size(); ++p)
      for (std::size_t q = 0; q < v.size(); ++q) h[p].push_back(hom_comodules(v[p].comodule, v[q].comodule));
    return h;
  };
  const auto hom_y = homs(ys);
  const auto hom_x = homs(xs);

  CheckReport functor;
  functor.subject = "functoriality";
  for (std::size_t p = 0; p < ys.size(); ++p)
    for (std::size_t q = 0; q < ys.size(); ++q)
      for (const auto& a : hom_y[p][q].maps) {
        expect_ok(functor, check_colinear(ysig[p].comodule, ysig[q].comodule, tensor_map(ysig[p], ysig[q], a)),
                  "alpha (x) Sigma colinear", ys[p].name + " -> " + ys[q].name);
      }
  for (std::size_t p = 0; p < xs.size(); ++p)
    for (std::size_t q = 0; q < xs.size(); ++q)
      for (const auto& b : hom_x[p][q].maps) {
        expect_ok(functor, check_colinear(xdual[p].comodule, xdual[q].comodule, tensor_map(xdual[p], xdual[q], b)),
                  "beta (x) Sigma* colinear", xs[p].name + " -> " + xs[q].name);
      }
  out.reports.push_back(functor);

  CheckReport bijection;
  bijection.subject = "adjunction bijection";
  std::vector<std::vector<HomSpace>> left(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const std::string where = ys[i].name + ", " + xs[j].name;
      left[i].push_back(hom_comodules(ysig[i].comodule, xs[j].comodule));
      HomSpace right = hom_comodules(ys[i].comodule, xdual[j].comodule);
      out.pairs.push_back({ys[i].name, xs[j].name, left[i][j].dim(), right.dim()});
      expect(bijection, left[i][j].dim() == right.dim(), "dim Hom_C(Y (x) Sigma, X) = dim Hom(Y, X (x) Sigma*)",
             where + ": " + std::to_string(left[i][j].dim()) + " vs " + std::to_string(right.dim()));
      for (const auto& f : left[i][j].maps) {
        Matrix g = psi(ctx, ysig[i], xs[j].comodule, f);
        expect_ok(bijection, check_colinear(ys[i].comodule, xdual[j].comodule, g), "Psi(f) colinear", where);
        expect(bijection, psi_inv(ctx, ys[i].comodule, xdual[j], g) == f, "Psi^-1 Psi = id", where);
      }
      for (const auto& g : right.maps) {
        Matrix f = psi_inv(ctx, ys[i].comodule, xdual[j], g);
        expect_ok(bijection, check_colinear(ysig[i].comodule, xs[j].comodule, f), "Psi^-1(g) colinear", where);
        expect(bijection, psi(ctx, ysig[i], xs[j].comodule, f) == g, "Psi Psi^-1 = id", where);
      }
    }
  }
  out.reports.push_back(bijection);
  if (!bijection.ok()) return out;

  // Psi(beta f (alpha (x) Sigma)) = (beta (x) Sigma*) Psi(f) alpha for alpha: Y' -> Y, beta: X -> X'.
  CheckReport natural;
  natural.subject = "naturality";
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j)
      for (const auto& f : left[i][j].maps) {
        Matrix pf = psi(ctx, ysig[i], xs[j].comodule, f);
        for (std::size_t i2 = 0; i2 < ys.size(); ++i2)
          for (const auto& a : hom_y[i2][i].maps) {
            Matrix fa = f * tensor_map(ysig[i2], ysig[i], a);
            for (std::size_t j2 = 0; j2 < xs.size(); ++j2)
              for (const auto& b : hom_x[j][j2].maps) {
                Matrix lhs = psi(ctx, ysig[i2], xs[j2].comodule, b * fa);
                Matrix rhs = tensor_map(xdual[j], xdual[j2], b) * pf * a;
                expect(natural, lhs == rhs, "Psi natural",
                       ys[i2].name + " -> " + ys[i].name + ", " + xs[j].name + " -> " + xs[j2].name);
              }
          }
      }
  out.reports.push_back(natural);
  return out;
}

}  // namespace comatrix
