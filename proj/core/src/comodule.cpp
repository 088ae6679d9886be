#include "comatrix/comodule.hpp"

namespace comatrix {

namespace {

void compare_columns(CheckReport& report, const Matrix& lhs, const Matrix& rhs, const std::string& identity,
                     const std::string& prefix) {
  for (std::size_t j = 0; j < lhs.cols(); ++j) {
    ++report.checked;
    if (!(lhs.column_at(j) == rhs.column_at(j))) report.fail(identity, prefix + "M[" + std::to_string(j) + "]");
  }
}

const char* side_name(Side s) { return s == Side::Right ? "right" : "left"; }

}  // namespace

Comodule make_comodule(Side side, CoringPtr coring, Bimodule module, Matrix coaction) {
  Comodule x;
  x.side = side;
  x.tensor = side == Side::Right ? TensorProduct(module, coring->module) : TensorProduct(coring->module, module);
  if (coaction.rows() != x.tensor.dim() || coaction.cols() != module.dim()) {
    throw DimensionMismatch("coaction has the wrong shape");
  }
  x.coring = std::move(coring);
  x.module = std::move(module);
  x.coaction = std::move(coaction);
  return x;
}

CheckReport check_comodule(const Comodule& x) {
  CheckReport report;
  report.subject = std::string(side_name(x.side)) + " comodule over " + x.coring->name;
  const Coring& c = *x.coring;
  const Field& f = c.field();
  const Bimodule& t = x.tensor.bimodule();
  const Matrix& rho = x.coaction;
  for (std::size_t i = 0; i < x.module.left_action().size(); ++i) {
    compare_columns(report, rho * x.module.left_action()[i], t.left_action()[i] * rho,
                    x.side == Side::Right ? "outer linearity" : "A-linearity",
                    x.module.left_algebra()->labels()[i] + " . ");
  }
  for (std::size_t i = 0; i < x.module.right_action().size(); ++i) {
    compare_columns(report, rho * x.module.right_action()[i], t.right_action()[i] * rho,
                    x.side == Side::Right ? "A-linearity" : "outer linearity",
                    x.module.right_algebra()->labels()[i] + " @ ");
  }
  if (!report.ok()) return report;

  const Matrix im = Matrix::identity(f, x.dim());
  const Matrix ic = Matrix::identity(f, c.dim());
  Bimodule base = regular_bimodule(c.base);
  try {
    if (x.side == Side::Right) {
      TensorProduct m_cc(x.module, c.square.bimodule());
      TensorProduct mc_c(t, c.module);
      Matrix lhs = tensor_maps(x.tensor, m_cc, im, c.comult) * rho;
      Matrix rhs = associator(x.tensor, mc_c, c.square, m_cc) * tensor_maps(x.tensor, mc_c, rho, ic) * rho;
      compare_columns(report, lhs, rhs, "coassociativity", "");
      TensorProduct m_a(x.module, base);
      compare_columns(report, right_unitor(m_a) * tensor_maps(x.tensor, m_a, im, c.counit) * rho, im, "counit law", "");
    } else {
      TensorProduct cc_m(c.square.bimodule(), x.module);
      TensorProduct c_cm(c.module, t);
      Matrix lhs = associator(c.square, cc_m, x.tensor, c_cm) * tensor_maps(x.tensor, cc_m, c.comult, im) * rho;
      Matrix rhs = tensor_maps(x.tensor, c_cm, ic, rho) * rho;
      compare_columns(report, lhs, rhs, "coassociativity", "");
      TensorProduct a_m(base, x.module);
      compare_columns(report, left_unitor(a_m) * tensor_maps(x.tensor, a_m, c.counit, im) * rho, im, "counit law", "");
    }
  } catch (const IllDefinedMap& e) {
    report.fail("well-defined coaction", e.what());
  }
  return report;
}

Comodule sigma_comodule(const ComatrixCoring& c) {
  const FramedBimodule& fr = c.frame;
  const Field& f = fr.sigma.field();
  TensorProduct t(fr.sigma, c.coring->module);
  Matrix rho(f, t.dim(), fr.sigma.dim());
  for (std::size_t j = 0; j < fr.sigma.dim(); ++j) {
    Matrix u = Matrix::unit_column(f, fr.sigma.dim(), j);
    Matrix col(f, t.dim(), 1);
    for (std::size_t i = 0; i < fr.basis.size(); ++i) {
      col = col + t.pure(fr.basis.elements[i], c.tensor.pure(fr.basis.functionals[i], u));
    }
    for (std::size_t r = 0; r < col.rows(); ++r) rho.set(r, j, col(r, 0));
  }
  return make_comodule(Side::Right, c.coring, fr.sigma, std::move(rho));
}

Comodule dual_sigma_comodule(const ComatrixCoring& c) {
  const FramedBimodule& fr = c.frame;
  const Field& f = fr.sigma.field();
  const Bimodule& dual = fr.dual.module;
  TensorProduct t(c.coring->module, dual);
  Matrix lambda(f, t.dim(), dual.dim());
  for (std::size_t k = 0; k < dual.dim(); ++k) {
    Matrix u = Matrix::unit_column(f, dual.dim(), k);
    Matrix col(f, t.dim(), 1);
    for (std::size_t i = 0; i < fr.basis.size(); ++i) {
      col = col + t.pure(c.tensor.pure(u, fr.basis.elements[i]), fr.basis.functionals[i]);
    }
    for (std::size_t r = 0; r < col.rows(); ++r) lambda.set(r, k, col(r, 0));
  }
  return make_comodule(Side::Left, c.coring, dual, std::move(lambda));
}

Comodule induced_comodule(const Comodule& x, const CoringMorphism& g) {
  if (g.source->dim() != x.coring->dim() || g.target->dim() != x.coring->dim()) {
    throw DimensionMismatch("induced comodule needs an endomorphism of the comodule's coring");
  }
  const Matrix im = Matrix::identity(x.module.field(), x.dim());
  Comodule out = x;
  out.coaction = x.side == Side::Right ? tensor_maps(x.tensor, x.tensor, im, g.matrix) * x.coaction
                                       : tensor_maps(x.tensor, x.tensor, g.matrix, im) * x.coaction;
  return out;
}

Comodule dual_comodule(const Comodule& x, std::optional<DualBasis> basis) {
  if (x.side != Side::Right) throw InvalidStructure("dual_comodule expects a right comodule");
  const Coring& c = *x.coring;
  const Field& f = c.field();
  DualModule dual = right_dual(x.module);
  DualBasis db = basis ? std::move(*basis) : compute_dual_basis(x.module, dual);
  TensorProduct t(c.module, dual.module);
  TensorProduct a_c(regular_bimodule(c.base), c.module);
  const Matrix ic = Matrix::identity(f, c.dim());
  const Matrix unit_l = left_unitor(a_c);
  Matrix lambda(f, t.dim(), dual.module.dim());
  for (std::size_t k = 0; k < dual.module.dim(); ++k) {
    Matrix evaluate = unit_l * tensor_maps(x.tensor, a_c, dual.functionals[k], ic) * x.coaction;
    Matrix col(f, t.dim(), 1);
    for (std::size_t j = 0; j < db.size(); ++j) col = col + t.pure(evaluate * db.elements[j], db.functionals[j]);
    for (std::size_t r = 0; r < col.rows(); ++r) lambda.set(r, k, col(r, 0));
  }
  return make_comodule(Side::Left, x.coring, dual.module, std::move(lambda));
}

Comodule left_dual_comodule(const Comodule& x, std::optional<DualBasis> basis) {
  if (x.side != Side::Left) throw InvalidStructure("left_dual_comodule expects a left comodule");
  const Coring& c = *x.coring;
  const Field& f = c.field();
  DualModule dual = left_dual(x.module);
  DualBasis db = basis ? std::move(*basis) : compute_left_dual_basis(x.module, dual);
  TensorProduct t(dual.module, c.module);
  TensorProduct c_a(c.module, regular_bimodule(c.base));
  const Matrix ic = Matrix::identity(f, c.dim());
  const Matrix unit_r = right_unitor(c_a);
  Matrix rho(f, t.dim(), dual.module.dim());
  for (std::size_t k = 0; k < dual.module.dim(); ++k) {
    Matrix evaluate = unit_r * tensor_maps(x.tensor, c_a, ic, dual.functionals[k]) * x.coaction;
    Matrix col(f, t.dim(), 1);
    for (std::size_t j = 0; j < db.size(); ++j) col = col + t.pure(db.functionals[j], evaluate * db.elements[j]);
    for (std::size_t r = 0; r < col.rows(); ++r) rho.set(r, k, col(r, 0));
  }
  return make_comodule(Side::Right, x.coring, dual.module, std::move(rho));
}

Comodule zero_comodule(Side side, const CoringPtr& coring) {
  AlgebraPtr k = ground_algebra(coring->field());
  const AlgebraPtr& a = coring->base;
  const Field& f = coring->field();
  std::vector<Matrix> acts_a(a->dim(), Matrix(f, 0, 0));
  Bimodule zero = side == Side::Right ? Bimodule(k, a, 0, {Matrix(f, 0, 0)}, acts_a)
                                      : Bimodule(a, k, 0, acts_a, {Matrix(f, 0, 0)});
  Comodule x;
  x.side = side;
  x.tensor = side == Side::Right ? TensorProduct(zero, coring->module) : TensorProduct(coring->module, zero);
  x.coring = coring;
  x.module = std::move(zero);
  x.coaction = Matrix(f, x.tensor.dim(), 0);
  return x;
}

HomSpace hom_comodules(const Comodule& x, const Comodule& y) {
  if (x.side != y.side) throw InvalidStructure("hom_comodules: comodules on different sides");
  if (x.coring != y.coring && !(x.coring->comult == y.coring->comult && x.coring->counit == y.coring->counit &&
                                x.coring->module == y.coring->module)) {
    throw InvalidStructure("hom_comodules: comodules over different corings");
  }
  const Field& f = x.module.field();
  const std::size_t n = x.dim();
  const std::size_t m = y.dim();
  const std::size_t c = x.coring->dim();
  const Matrix ic = Matrix::identity(f, c);
  const bool right = x.side == Side::Right;
  const auto& acts_x = right ? x.module.right_action() : x.module.left_action();
  const auto& acts_y = right ? y.module.right_action() : y.module.left_action();

  // One column of constraints per elementary map E_rs.
  std::vector<Matrix> columns;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      Matrix e = Matrix::elementary(f, m, n, r, s);
      std::vector<Matrix> parts;
      for (std::size_t i = 0; i < acts_x.size(); ++i) parts.push_back((e * acts_x[i] - acts_y[i] * e).vectorize());
      Matrix raw = right ? y.tensor.projection() * Matrix::kron(e, ic) : y.tensor.projection() * Matrix::kron(ic, e);
      parts.push_back((y.coaction * e - raw * x.tensor.section() * x.coaction).vectorize());
      columns.push_back(Matrix::vstack(parts, f, 1));
    }
  }
  HomSpace out;
  if (columns.empty()) {
    out.space = Subspace::zero(f, 0);
    return out;
  }
  std::size_t height = columns.front().rows();
  out.space = kernel(Matrix::hstack(columns, f, height));
  for (std::size_t k = 0; k < out.space.dim(); ++k) out.maps.push_back(Matrix::unvectorize(out.space.vector(k), m, n));
  return out;
}

CheckReport check_colinear(const Comodule& x, const Comodule& y, const Matrix& f) {
  CheckReport report;
  report.subject = "colinear map";
  if (f.rows() != y.dim() || f.cols() != x.dim()) {
    report.fail("shape", std::to_string(f.rows()) + "x" + std::to_string(f.cols()));
    return report;
  }
  const bool right = x.side == Side::Right;
  const auto& acts_x = right ? x.module.right_action() : x.module.left_action();
  const auto& acts_y = right ? y.module.right_action() : y.module.left_action();
  const Algebra& a = *x.coring->base;
  for (std::size_t i = 0; i < acts_x.size(); ++i) {
    compare_columns(report, f * acts_x[i], acts_y[i] * f, "A-linearity", a.labels()[i] + " : ");
  }
  if (!report.ok()) return report;
  const Matrix ic = Matrix::identity(f.field(), x.coring->dim());
  Matrix lifted = right ? tensor_maps(x.tensor, y.tensor, f, ic) : tensor_maps(x.tensor, y.tensor, ic, f);
  compare_columns(report, y.coaction * f, lifted * x.coaction, "colinearity", "");
  return report;
}

}  // namespace comatrix
