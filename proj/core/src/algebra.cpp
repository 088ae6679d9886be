#include "comatrix/algebra.hpp"

namespace comatrix {

AlgebraPtr Algebra::create(Field field, std::vector<std::string> labels, std::vector<Scalar> constants, Matrix unit) {
  const std::size_t n = labels.size();
  if (constants.size() != n * n * n) throw DimensionMismatch("structure constants must have dim^3 entries");
  if (unit.rows() != n || unit.cols() != 1) throw DimensionMismatch("unit must be a dim x 1 column");
  if (!(unit.field() == field)) throw FieldMismatch("unit lives over another field");
  std::shared_ptr<Algebra> a(new Algebra());
  a->field_ = field;
  a->dim_ = n;
  a->labels_ = std::move(labels);
  a->constants_ = std::move(constants);
  a->unit_ = std::move(unit);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix l(field, n, n);
    Matrix r(field, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        l.set(k, j, a->constant(i, j, k));
        r.set(k, j, a->constant(j, i, k));
      }
    }
    a->left_.push_back(std::move(l));
    a->right_.push_back(std::move(r));
  }
  return a;
}

Matrix Algebra::left_mult_by(const Matrix& x) const { return linear_combination(x, left_, field_, dim_, dim_); }

Matrix Algebra::right_mult_by(const Matrix& x) const { return linear_combination(x, right_, field_, dim_, dim_); }

Matrix Algebra::multiply(const Matrix& x, const Matrix& y) const { return left_mult_by(x) * y; }

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (!(left_[i] == right_[i])) return false;
  return true;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return a == b || (a && b && *a == *b); }

CheckReport validate_algebra(const Algebra& a) {
  CheckReport report;
  report.subject = "algebra";
  const std::size_t n = a.dim();
  const auto& lab = a.labels();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix ij = a.multiply(a.basis_vector(i), a.basis_vector(j));
      for (std::size_t k = 0; k < n; ++k) {
        ++report.checked;
        Matrix lhs = a.right_mult(k) * ij;
        Matrix rhs = a.left_mult(i) * (a.left_mult(j) * a.basis_vector(k));
        if (!(lhs == rhs)) {
          report.fail("associativity", "(" + lab[i] + "*" + lab[j] + ")*" + lab[k]);
        }
      }
    }
  }
  Matrix lu = a.left_mult_by(a.unit());
  Matrix ru = a.right_mult_by(a.unit());
  for (std::size_t i = 0; i < n; ++i) {
    report.checked += 2;
    if (!(lu * a.basis_vector(i) == a.basis_vector(i))) report.fail("left unit", "1*" + lab[i]);
    if (!(ru * a.basis_vector(i) == a.basis_vector(i))) report.fail("right unit", lab[i] + "*1");
  }
  return report;
}

AlgebraPtr ground_algebra(Field field) {
  return Algebra::create(field, {"1"}, {field.one()}, Matrix::identity(field, 1));
}

AlgebraPtr matrix_algebra(Field field, std::size_t n) {
  if (n == 0) throw InvalidStructure("matrix algebra of size 0");
  const std::size_t d = n * n;
  std::vector<std::string> labels;
  std::string sep = n >= 10 ? "," : "";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i + 1) + sep + std::to_string(j + 1));
  std::vector<Scalar> c(d * d * d, field.zero());
  // E_ij E_kl = delta_jk E_il
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) c[((i * n + j) * d + (j * n + l)) * d + (i * n + l)] = field.one();
  Matrix unit(field, d, 1);
  for (std::size_t i = 0; i < n; ++i) unit.set(i * n + i, 0, field.one());
  return Algebra::create(field, std::move(labels), std::move(c), std::move(unit));
}

AlgebraPtr product_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!(a->field() == b->field())) throw FieldMismatch("product of algebras over different fields");
  const Field& f = a->field();
  const std::size_t na = a->dim();
  const std::size_t nb = b->dim();
  const std::size_t d = na + nb;
  std::vector<std::string> labels;
  for (const auto& l : a->labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : b->labels()) labels.push_back("(0," + l + ")");
  std::vector<Scalar> c(d * d * d, f.zero());
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) c[(i * d + j) * d + k] = a->constant(i, j, k);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) c[((na + i) * d + na + j) * d + na + k] = b->constant(i, j, k);
  Matrix unit = Matrix::vstack({a->unit(), b->unit()}, f, 1);
  return Algebra::create(f, std::move(labels), std::move(c), std::move(unit));
}

AlgebraPtr opposite_algebra(const AlgebraPtr& a) {
  const std::size_t n = a->dim();
  std::vector<Scalar> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = a->constant(j, i, k);
  return Algebra::create(a->field(), a->labels(), std::move(c), a->unit());
}

CheckReport check_algebra_morphism(const AlgebraMorphism& f) {
  CheckReport report;
  report.subject = "algebra morphism";
  const Algebra& s = *f.source;
  const Algebra& t = *f.target;
  if (f.matrix.rows() != t.dim() || f.matrix.cols() != s.dim()) {
    report.fail("shape", std::to_string(f.matrix.rows()) + "x" + std::to_string(f.matrix.cols()));
    return report;
  }
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      ++report.checked;
      Matrix lhs = f(s.multiply(s.basis_vector(i), s.basis_vector(j)));
      Matrix rhs = t.multiply(f(s.basis_vector(i)), f(s.basis_vector(j)));
      if (!(lhs == rhs)) report.fail("multiplicativity", s.labels()[i] + "*" + s.labels()[j]);
    }
  }
  ++report.checked;
  if (!(f(s.unit()) == t.unit())) report.fail("unitality", "1");
  return report;
}

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
  if (!same_algebra(f.target, g.source)) throw InvalidStructure("composing morphisms with mismatched algebras");
  return {f.source, g.target, g.matrix * f.matrix};
}

AlgebraMorphism identity_morphism(const AlgebraPtr& a) { return {a, a, Matrix::identity(a->field(), a->dim())}; }

RingExtension make_extension(AlgebraMorphism morphism) {
  bool injective = kernel(morphism.matrix).dim() == 0;
  return {std::move(morphism), injective};
}

Subalgebra subalgebra(const AlgebraPtr& a, const Subspace& space) {
  if (space.ambient_dim() != a->dim()) throw DimensionMismatch("subalgebra: subspace has wrong ambient dimension");
  if (!space.contains(a->unit())) throw MissingUnit("subspace does not contain the unit");
  const Field& f = a->field();
  const std::size_t d = space.dim();
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < d; ++i) basis.push_back(space.vector(i));
  std::vector<Scalar> c(d * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Matrix prod = a->multiply(basis[i], basis[j]);
      if (!space.contains(prod)) throw NotClosed("subspace is not closed under multiplication");
      Matrix co = space.coords(prod);
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = co(k, 0);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    std::string label;
    for (std::size_t k = 0; k < a->dim(); ++k) {
      Scalar v = basis[i](k, 0);
      if (v.is_zero()) continue;
      if (!label.empty()) label += "+";
      if (!(v == f.one())) label += f.format(v);
      label += a->labels()[k];
    }
    labels.push_back(label);
  }
  AlgebraPtr sub = Algebra::create(f, std::move(labels), std::move(c), space.coords(a->unit()));
  return {sub, AlgebraMorphism{sub, a, space.columns()}};
}

Subalgebra subalgebra_spanned(const AlgebraPtr& a, const std::vector<Matrix>& elements) {
  if (elements.empty()) throw MissingUnit("empty generator list");
  return subalgebra(a, Subspace::from_columns(Matrix::hstack(elements, a->field(), a->dim())));
}

}  // namespace comatrix
