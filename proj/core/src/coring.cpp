#include "comatrix/coring.hpp"

namespace comatrix {

namespace {

std::string basis_name(const char* space, std::size_t j) { return std::string(space) + "[" + std::to_string(j) + "]"; }

// Appends one violation per differing column of lhs and rhs.
void compare_columns(CheckReport& report, const Matrix& lhs, const Matrix& rhs, const std::string& identity,
                     const std::string& prefix, const char* space) {
  for (std::size_t j = 0; j < lhs.cols(); ++j) {
    ++report.checked;
    if (!(lhs.column_at(j) == rhs.column_at(j))) report.fail(identity, prefix + basis_name(space, j));
  }
}

void check_bilinear(CheckReport& report, const Bimodule& source, const Bimodule& target, const Matrix& map,
                    const std::string& name) {
  const Algebra& a = *source.left_algebra();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    compare_columns(report, map * source.left_action()[i], target.left_action()[i] * map, name + " left A-linear",
                    a.labels()[i] + " . ", "C");
  }
  const Algebra& ar = *source.right_algebra();
  for (std::size_t i = 0; i < ar.dim(); ++i) {
    compare_columns(report, map * source.right_action()[i], target.right_action()[i] * map, name + " right A-linear",
                    ar.labels()[i] + " @ ", "C");
  }
}

}  // namespace

CoringPtr make_coring(std::string name, Bimodule module, Matrix comult, Matrix counit) {
  if (!same_algebra(module.left_algebra(), module.right_algebra())) {
    throw InvalidStructure("a coring needs an (A, A)-bimodule");
  }
  auto c = std::make_shared<Coring>();
  c->name = std::move(name);
  c->base = module.left_algebra();
  c->square = TensorProduct(module, module);
  c->module = std::move(module);
  if (comult.rows() != c->square.dim() || comult.cols() != c->module.dim()) {
    throw DimensionMismatch("comultiplication has the wrong shape");
  }
  if (counit.rows() != c->base->dim() || counit.cols() != c->module.dim()) {
    throw DimensionMismatch("counit has the wrong shape");
  }
  c->comult = std::move(comult);
  c->counit = std::move(counit);
  return c;
}

CoringPtr with_structure(const Coring& c, Matrix comult, Matrix counit) {
  auto out = std::make_shared<Coring>(c);
  if (comult.rows() != c.comult.rows() || comult.cols() != c.comult.cols() || counit.rows() != c.counit.rows() ||
      counit.cols() != c.counit.cols()) {
    throw DimensionMismatch("replacement structure maps have the wrong shape");
  }
  out->comult = std::move(comult);
  out->counit = std::move(counit);
  return out;
}

CheckReport check_coring_axioms(const Coring& c) {
  CheckReport report;
  report.subject = "coring " + c.name;
  const Field& f = c.field();
  const Bimodule& sq = c.square.bimodule();
  const Algebra& a = *c.base;
  check_bilinear(report, c.module, sq, c.comult, "comultiplication");
  Bimodule base = regular_bimodule(c.base);
  check_bilinear(report, c.module, base, c.counit, "counit");
  if (!report.ok()) return report;

  const Matrix id = Matrix::identity(f, c.dim());
  try {
    TensorProduct left3(sq, c.module);
    TensorProduct right3(c.module, sq);
    Matrix lhs = associator(c.square, left3, c.square, right3) * tensor_maps(c.square, left3, c.comult, id) * c.comult;
    Matrix rhs = tensor_maps(c.square, right3, id, c.comult) * c.comult;
    compare_columns(report, lhs, rhs, "coassociativity", "", "C");

    TensorProduct a_c(base, c.module);
    TensorProduct c_a(c.module, base);
    Matrix left_counit = left_unitor(a_c) * tensor_maps(c.square, a_c, c.counit, id) * c.comult;
    Matrix right_counit = right_unitor(c_a) * tensor_maps(c.square, c_a, id, c.counit) * c.comult;
    compare_columns(report, left_counit, id, "left counit law", "", "C");
    compare_columns(report, right_counit, id, "right counit law", "", "C");
  } catch (const IllDefinedMap& e) {
    report.fail("well-defined structure maps", e.what());
  }
  (void)a;
  return report;
}

CheckReport check_coring_morphism(const CoringMorphism& phi) {
  CheckReport report;
  report.subject = "coring morphism " + phi.source->name + " -> " + phi.target->name;
  const Coring& c = *phi.source;
  const Coring& d = *phi.target;
  if (!same_algebra(c.base, d.base)) {
    report.fail("same base algebra", "A");
    return report;
  }
  if (phi.matrix.rows() != d.dim() || phi.matrix.cols() != c.dim()) {
    report.fail("shape", std::to_string(phi.matrix.rows()) + "x" + std::to_string(phi.matrix.cols()));
    return report;
  }
  check_bilinear(report, c.module, d.module, phi.matrix, "morphism");
  if (!report.ok()) return report;
  compare_columns(report, d.counit * phi.matrix, c.counit, "counit preserved", "", "C");
  Matrix phi2 = tensor_maps(c.square, d.square, phi.matrix, phi.matrix);
  compare_columns(report, d.comult * phi.matrix, phi2 * c.comult, "comultiplication preserved", "", "C");
  return report;
}

CoringMorphism identity_morphism(const CoringPtr& c) { return {c, c, Matrix::identity(c->field(), c->dim())}; }

CoringMorphism compose(const CoringMorphism& g, const CoringMorphism& f) {
  if (f.target->dim() != g.source->dim()) throw DimensionMismatch("composing coring morphisms of mismatched corings");
  return {f.source, g.target, g.matrix * f.matrix};
}

ComatrixCoring build_comatrix_coring(const FramedBimodule& fr) {
  ComatrixCoring out;
  out.frame = fr;
  out.tensor = TensorProduct(fr.dual.module, fr.sigma);
  const TensorProduct& t = out.tensor;
  const Field& f = fr.sigma.field();
  const std::size_t m = fr.sigma.dim();
  const std::size_t nd = fr.dual.module.dim();
  const AlgebraPtr& a = fr.right_algebra();
  Bimodule module = t.bimodule();
  TensorProduct square(module, module);

  Matrix comult_raw(f, square.dim(), nd * m);
  Matrix counit_raw(f, a->dim(), nd * m);
  for (std::size_t k = 0; k < nd; ++k) {
    Matrix uk = Matrix::unit_column(f, nd, k);
    for (std::size_t j = 0; j < m; ++j) {
      Matrix uj = Matrix::unit_column(f, m, j);
      Matrix col(f, square.dim(), 1);
      for (std::size_t i = 0; i < fr.basis.size(); ++i) {
        col = col + square.pure(t.pure(uk, fr.basis.elements[i]), t.pure(fr.basis.functionals[i], uj));
      }
      for (std::size_t r = 0; r < col.rows(); ++r) comult_raw.set(r, k * m + j, col(r, 0));
      for (std::size_t r = 0; r < a->dim(); ++r) counit_raw.set(r, k * m + j, fr.dual.functionals[k](r, j));
    }
  }
  out.coring = make_coring("comatrix", std::move(module), t.descend(comult_raw), t.descend(counit_raw));
  return out;
}

SweedlerCoring build_sweedler_coring(const RingExtension& ext) {
  SweedlerCoring out;
  out.extension = ext;
  const AlgebraPtr& s = ext.morphism.target;
  const Field& f = s->field();
  const std::size_t n = s->dim();
  Bimodule reg = regular_bimodule(s);
  out.sigma = restrict_left(reg, ext.morphism);
  out.cosigma = restrict_right(reg, ext.morphism);
  out.tensor = TensorProduct(out.cosigma, out.sigma);
  const TensorProduct& t = out.tensor;
  Bimodule module = t.bimodule();
  TensorProduct square(module, module);

  Matrix comult_raw(f, square.dim(), n * n);
  Matrix counit_raw(f, n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix col = square.pure(t.pure(s->basis_vector(i), s->unit()), t.pure(s->unit(), s->basis_vector(j)));
      Matrix prod = s->multiply(s->basis_vector(i), s->basis_vector(j));
      for (std::size_t r = 0; r < col.rows(); ++r) comult_raw.set(r, i * n + j, col(r, 0));
      for (std::size_t r = 0; r < n; ++r) counit_raw.set(r, i * n + j, prod(r, 0));
    }
  }
  out.coring = make_coring("sweedler", std::move(module), t.descend(comult_raw), t.descend(counit_raw));
  return out;
}

SweedlerComparison compare_with_sweedler(const ComatrixCoring& cm, const SweedlerCoring& sw) {
  const FramedBimodule& fr = cm.frame;
  const Algebra& a = *fr.right_algebra();
  if (!same_algebra(sw.extension.morphism.target, fr.endo.algebra)) {
    throw InvalidStructure("Sweedler coring is not over the endomorphism ring of Sigma");
  }
  if (!(fr.sigma.right_action() == regular_bimodule(fr.right_algebra()).right_action())) {
    throw InvalidStructure("Sigma is not the regular right module of its ring");
  }
  const Field& f = a.field();
  const std::size_t n = a.dim();
  // u -> (left multiplication by u) expressed in End(Sigma)
  Matrix to_s(f, fr.endo.algebra->dim(), n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix c = fr.endo.coords(a.left_mult(i));
    for (std::size_t r = 0; r < c.rows(); ++r) to_s.set(r, i, c(r, 0));
  }
  const std::size_t nd = fr.dual.module.dim();
  Matrix dual_to_s(f, to_s.rows(), nd);
  for (std::size_t k = 0; k < nd; ++k) {
    Matrix c = to_s * (fr.dual.functionals[k] * a.unit());
    for (std::size_t r = 0; r < c.rows(); ++r) dual_to_s.set(r, k, c(r, 0));
  }
  SweedlerComparison out;
  out.transport = {cm.coring, sw.coring, tensor_maps(cm.tensor, sw.tensor, dual_to_s, to_s)};
  out.report.subject = "comatrix coring of S_S versus Sweedler coring";
  const Matrix& t = out.transport.matrix;
  ++out.report.checked;
  if (!inverse(t)) out.report.fail("transport is bijective", "Sigma* (x)_B Sigma");
  compare_columns(out.report, sw.coring->comult * t, tensor_maps(cm.coring->square, sw.coring->square, t, t) * cm.coring->comult,
                  "comultiplication transported", "", "C");
  compare_columns(out.report, sw.coring->counit * t, to_s * cm.coring->counit, "counit transported", "", "C");
  return out;
}

LeftComatrixCoring build_left_comatrix_coring(const Bimodule& lambda) {
  LeftComatrixCoring out;
  out.lambda = lambda;
  out.left_dual = left_dual(lambda);
  out.left_basis = compute_left_dual_basis(lambda, out.left_dual);
  const Bimodule& sigma = out.left_dual.module;
  const Field& f = lambda.field();
  const AlgebraPtr& a = lambda.left_algebra();
  const std::size_t nl = lambda.dim();
  const std::size_t ns = sigma.dim();
  const DualBasis& lb = out.left_basis;

  // Right dual basis of Sigma: (*f_j, f_j*) with f_j*(u) = u(f_j).
  DualModule sigma_dual = right_dual(sigma);
  DualBasis db;
  for (std::size_t j = 0; j < lb.size(); ++j) {
    Matrix fstar(f, a->dim(), ns);
    for (std::size_t k = 0; k < ns; ++k) {
      Matrix v = out.left_dual.functionals[k] * lb.elements[j];
      for (std::size_t r = 0; r < a->dim(); ++r) fstar.set(r, k, v(r, 0));
    }
    db.elements.push_back(lb.functionals[j]);
    db.functionals.push_back(sigma_dual.coords(fstar));
  }
  out.comatrix = build_comatrix_coring(frame(sigma, db));

  out.tensor = TensorProduct(lambda, sigma);
  const TensorProduct& t = out.tensor;
  Bimodule module = t.bimodule();
  TensorProduct square(module, module);
  Matrix comult_raw(f, square.dim(), nl * ns);
  Matrix counit_raw(f, a->dim(), nl * ns);
  for (std::size_t l = 0; l < nl; ++l) {
    Matrix ul = Matrix::unit_column(f, nl, l);
    for (std::size_t k = 0; k < ns; ++k) {
      Matrix uk = Matrix::unit_column(f, ns, k);
      Matrix col(f, square.dim(), 1);
      for (std::size_t j = 0; j < lb.size(); ++j) {
        col = col + square.pure(t.pure(ul, lb.functionals[j]), t.pure(lb.elements[j], uk));
      }
      for (std::size_t r = 0; r < col.rows(); ++r) comult_raw.set(r, l * ns + k, col(r, 0));
      for (std::size_t r = 0; r < a->dim(); ++r) counit_raw.set(r, l * ns + k, out.left_dual.functionals[k](r, l));
    }
  }
  out.coring = make_coring("left comatrix", std::move(module), t.descend(comult_raw), t.descend(counit_raw));

  // u* (x) *v -> (sum_j u*(*f_j) f_j) (x) *v
  const FramedBimodule& fr = out.comatrix.frame;
  const std::size_t nd = fr.dual.module.dim();
  Matrix iso_raw(f, t.dim(), nd * ns);
  for (std::size_t p = 0; p < nd; ++p) {
    Matrix sum_elem(f, nl, 1);
    for (std::size_t j = 0; j < lb.size(); ++j) {
      Matrix coeff = fr.dual.functionals[p] * lb.functionals[j];
      sum_elem = sum_elem + lambda.act_left(coeff) * lb.elements[j];
    }
    for (std::size_t q = 0; q < ns; ++q) {
      Matrix col = t.pure(sum_elem, Matrix::unit_column(f, ns, q));
      for (std::size_t r = 0; r < col.rows(); ++r) iso_raw.set(r, p * ns + q, col(r, 0));
    }
  }
  out.iso = {out.comatrix.coring, out.coring, out.comatrix.tensor.descend(iso_raw)};
  return out;
}

}  // namespace comatrix
