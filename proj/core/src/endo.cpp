#include "comatrix/endo.hpp"

namespace comatrix {

Matrix EndoRing::endomorphism(const Matrix& s) const {
  return linear_combination(s, rep, sigma.field(), sigma.dim(), sigma.dim());
}

EndoRing endo_ring(const Bimodule& sigma) {
  const Field& f = sigma.field();
  const std::size_t m = sigma.dim();
  const Matrix id = Matrix::identity(f, m);
  EndoRing e;
  e.sigma = sigma;
  std::vector<Matrix> blocks;
  for (const auto& r : sigma.right_action()) blocks.push_back(sandwich_operator(id, r) - sandwich_operator(r, id));
  e.space = blocks.empty() ? Subspace::full(f, m * m) : kernel(Matrix::vstack(blocks, f, m * m));
  const std::size_t d = e.space.dim();
  for (std::size_t k = 0; k < d; ++k) e.rep.push_back(Matrix::unvectorize(e.space.vector(k), m, m));

  std::vector<Scalar> c(d * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Matrix co = e.coords(e.rep[i] * e.rep[j]);
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = co(k, 0);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < d; ++k) labels.push_back("s" + std::to_string(k + 1));
  e.algebra = Algebra::create(f, std::move(labels), std::move(c), e.coords(id));

  const AlgebraPtr& b = sigma.left_algebra();
  Matrix lambda(f, d, b->dim());
  for (std::size_t i = 0; i < b->dim(); ++i) {
    Matrix co = e.coords(sigma.left_action()[i]);
    for (std::size_t k = 0; k < d; ++k) lambda.set(k, i, co(k, 0));
  }
  e.extension = make_extension(AlgebraMorphism{b, e.algebra, std::move(lambda)});
  e.sigma_over_s = Bimodule(e.algebra, sigma.right_algebra(), m, e.rep, sigma.right_action());
  return e;
}

Matrix FramedBimodule::dual_times(const Matrix& f_coords, const Matrix& s) const {
  return dual.coords(dual.functional(f_coords) * endo.endomorphism(s));
}

FramedBimodule frame(const Bimodule& sigma, std::optional<DualBasis> basis) {
  FramedBimodule fr;
  fr.sigma = sigma;
  fr.dual = right_dual(sigma);
  fr.basis = basis ? std::move(*basis) : compute_dual_basis(sigma, fr.dual);
  fr.endo = endo_ring(sigma);
  const Field& f = sigma.field();
  const std::size_t ds = fr.endo.algebra->dim();
  const std::size_t nd = fr.dual.functionals.size();

  std::vector<Matrix> right;
  for (std::size_t k = 0; k < ds; ++k) {
    Matrix act(f, nd, nd);
    for (std::size_t j = 0; j < nd; ++j) {
      Matrix co = fr.dual.coords(fr.dual.functionals[j] * fr.endo.rep[k]);
      for (std::size_t r = 0; r < nd; ++r) act.set(r, j, co(r, 0));
    }
    right.push_back(std::move(act));
  }
  fr.dual_over_s = Bimodule(sigma.right_algebra(), fr.endo.algebra, nd, fr.dual.module.left_action(), std::move(right));
  fr.sigma_dual = TensorProduct(fr.endo.sigma_over_s, fr.dual_over_s);

  Matrix raw(f, ds, sigma.dim() * nd);
  for (std::size_t j = 0; j < sigma.dim(); ++j) {
    for (std::size_t k = 0; k < nd; ++k) {
      Matrix co = fr.endo.coords(rank_one_right(sigma, Matrix::unit_column(f, sigma.dim(), j), fr.dual.functionals[k]));
      for (std::size_t r = 0; r < ds; ++r) raw.set(r, j * nd + k, co(r, 0));
    }
  }
  fr.to_endomorphism = fr.sigma_dual.descend(raw);

  fr.to_tensor = Matrix(f, fr.sigma_dual.dim(), ds);
  for (std::size_t s = 0; s < ds; ++s) {
    Matrix col(f, fr.sigma_dual.dim(), 1);
    Matrix unit = Matrix::unit_column(f, ds, s);
    for (std::size_t i = 0; i < fr.basis.size(); ++i) {
      col = col + fr.sigma_dual.pure(fr.basis.elements[i], fr.dual_times(fr.basis.functionals[i], unit));
    }
    for (std::size_t r = 0; r < col.rows(); ++r) fr.to_tensor.set(r, s, col(r, 0));
  }
  return fr;
}

CheckReport check_frame(const FramedBimodule& fr) {
  CheckReport report = check_dual_basis(fr.sigma, fr.dual, fr.basis);
  report.subject = "frame";
  const Field& f = fr.sigma.field();
  report.checked += 2;
  if (!(fr.to_endomorphism * fr.to_tensor).is_identity()) report.fail("xi o xi^-1 = id", "S");
  if (!(fr.to_tensor * fr.to_endomorphism).is_identity()) report.fail("xi^-1 o xi = id", "Sigma (x) Sigma*");
  // S-bilinearity of xi on basis elements
  const Bimodule& t = fr.sigma_dual.bimodule();
  const Algebra& s = *fr.endo.algebra;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    for (std::size_t j = 0; j < t.dim(); ++j) {
      report.checked += 2;
      Matrix x = Matrix::unit_column(f, t.dim(), j);
      Matrix xs = fr.to_endomorphism * x;
      if (!(fr.to_endomorphism * (t.left_action()[k] * x) == s.left_mult(k) * xs)) {
        report.fail("xi(s z) = s xi(z)", "s" + std::to_string(k + 1) + ", z" + std::to_string(j));
      }
      if (!(fr.to_endomorphism * (t.right_action()[k] * x) == s.right_mult(k) * xs)) {
        report.fail("xi(z s) = xi(z) s", "s" + std::to_string(k + 1) + ", z" + std::to_string(j));
      }
    }
  }
  return report;
}

}  // namespace comatrix
