#include "comatrix/bimodule.hpp"

namespace comatrix {

Bimodule::Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Matrix> left_action,
                   std::vector<Matrix> right_action)
    : left_(std::move(left)),
      right_(std::move(right)),
      dim_(dim),
      left_action_(std::move(left_action)),
      right_action_(std::move(right_action)) {
  if (!left_ || !right_) throw InvalidStructure("bimodule needs both algebras");
  if (!(left_->field() == right_->field())) throw FieldMismatch("bimodule algebras over different fields");
  if (left_action_.size() != left_->dim()) throw DimensionMismatch("one left action matrix per basis element needed");
  if (right_action_.size() != right_->dim()) throw DimensionMismatch("one right action matrix per basis element needed");
  for (const auto* list : {&left_action_, &right_action_}) {
    for (const auto& m : *list) {
      if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("action matrices must be dim x dim");
      if (!(m.field() == left_->field())) throw FieldMismatch("action matrix over another field");
    }
  }
}

Matrix Bimodule::act_left(const Matrix& b) const { return linear_combination(b, left_action_, field(), dim_, dim_); }

Matrix Bimodule::act_right(const Matrix& a) const { return linear_combination(a, right_action_, field(), dim_, dim_); }

CheckReport validate_bimodule(const Bimodule& m) {
  CheckReport report;
  report.subject = "bimodule";
  const Algebra& b = *m.left_algebra();
  const Algebra& a = *m.right_algebra();
  const Matrix id = Matrix::identity(m.field(), m.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      ++report.checked;
      Matrix prod = b.multiply(b.basis_vector(i), b.basis_vector(j));
      if (!(m.act_left(prod) == m.left_action()[i] * m.left_action()[j])) {
        report.fail("left action multiplicative", b.labels()[i] + "*" + b.labels()[j]);
      }
    }
  }
  ++report.checked;
  if (!(m.act_left(b.unit()) == id)) report.fail("left action unital", "1");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      ++report.checked;
      Matrix prod = a.multiply(a.basis_vector(i), a.basis_vector(j));
      if (!(m.act_right(prod) == m.right_action()[j] * m.right_action()[i])) {
        report.fail("right action multiplicative", a.labels()[i] + "*" + a.labels()[j]);
      }
    }
  }
  ++report.checked;
  if (!(m.act_right(a.unit()) == id)) report.fail("right action unital", "1");
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      ++report.checked;
      if (!(m.left_action()[i] * m.right_action()[j] == m.right_action()[j] * m.left_action()[i])) {
        report.fail("actions commute", b.labels()[i] + " . x . " + a.labels()[j]);
      }
    }
  }
  return report;
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
  std::vector<Matrix> l;
  std::vector<Matrix> r;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    l.push_back(a->left_mult(i));
    r.push_back(a->right_mult(i));
  }
  return {a, a, a->dim(), std::move(l), std::move(r)};
}

Bimodule free_bimodule(const AlgebraPtr& a, std::size_t rank) {
  const Field& f = a->field();
  std::vector<Matrix> l;
  std::vector<Matrix> r;
  Matrix id = Matrix::identity(f, rank);
  for (std::size_t i = 0; i < a->dim(); ++i) {
    l.push_back(Matrix::kron(id, a->left_mult(i)));
    r.push_back(Matrix::kron(id, a->right_mult(i)));
  }
  return {a, a, rank * a->dim(), std::move(l), std::move(r)};
}

Bimodule restrict_left(const Bimodule& m, const AlgebraMorphism& f) {
  if (!same_algebra(f.target, m.left_algebra())) throw InvalidStructure("restrict_left: morphism target is not B");
  std::vector<Matrix> l;
  for (std::size_t i = 0; i < f.source->dim(); ++i) l.push_back(m.act_left(f.matrix.column_at(i)));
  return {f.source, m.right_algebra(), m.dim(), std::move(l), m.right_action()};
}

Bimodule restrict_right(const Bimodule& m, const AlgebraMorphism& f) {
  if (!same_algebra(f.target, m.right_algebra())) throw InvalidStructure("restrict_right: morphism target is not A");
  std::vector<Matrix> r;
  for (std::size_t i = 0; i < f.source->dim(); ++i) r.push_back(m.act_right(f.matrix.column_at(i)));
  return {m.left_algebra(), f.source, m.dim(), m.left_action(), std::move(r)};
}

Bimodule forget_left(const Bimodule& m) {
  AlgebraPtr k = ground_algebra(m.field());
  return {k, m.right_algebra(), m.dim(), {Matrix::identity(m.field(), m.dim())}, m.right_action()};
}

Bimodule forget_right(const Bimodule& m) {
  AlgebraPtr k = ground_algebra(m.field());
  return {m.left_algebra(), k, m.dim(), m.left_action(), {Matrix::identity(m.field(), m.dim())}};
}

Bimodule opposite_bimodule(const Bimodule& m) {
  return opposite_bimodule(m, opposite_algebra(m.right_algebra()), opposite_algebra(m.left_algebra()));
}

Bimodule opposite_bimodule(const Bimodule& m, const AlgebraPtr& a_op, const AlgebraPtr& b_op) {
  if (a_op->dim() != m.right_algebra()->dim() || b_op->dim() != m.left_algebra()->dim()) {
    throw DimensionMismatch("opposite_bimodule: opposite algebras have the wrong dimension");
  }
  // a^o x^o = (x a)^o and x^o b^o = (b x)^o
  return {a_op, b_op, m.dim(), m.right_action(), m.left_action()};
}

Matrix DualModule::coords(const Matrix& functional) const { return space.coords(functional.vectorize()); }

Matrix DualModule::functional(const Matrix& c) const {
  Matrix out(space.field(), target_dim, source_dim);
  for (std::size_t k = 0; k < functionals.size(); ++k) {
    if (!c(k, 0).is_zero()) out = out + functionals[k].scaled(c(k, 0));
  }
  return out;
}

namespace {

// Functionals F (t x m) with F X_q = Y_q F for every q.
Subspace intertwiners(const Field& f, std::size_t t, std::size_t m, const std::vector<Matrix>& xs,
                      const std::vector<Matrix>& ys) {
  std::vector<Matrix> blocks;
  Matrix it = Matrix::identity(f, t);
  Matrix im = Matrix::identity(f, m);
  for (std::size_t q = 0; q < xs.size(); ++q) {
    blocks.push_back(sandwich_operator(it, xs[q]) - sandwich_operator(ys[q], im));
  }
  if (blocks.empty()) return Subspace::full(f, t * m);
  return kernel(Matrix::vstack(blocks, f, t * m));
}

Matrix action_matrix(const DualModule& d, const std::function<Matrix(const Matrix&)>& act) {
  const std::size_t n = d.functionals.size();
  Matrix out(d.space.field(), n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Matrix c = d.coords(act(d.functionals[k]));
    for (std::size_t r = 0; r < n; ++r) out.set(r, k, c(r, 0));
  }
  return out;
}

DualModule build_dual(const Bimodule& m, const AlgebraPtr& target, const std::vector<Matrix>& source_actions,
                      const std::vector<Matrix>& target_actions, bool right_side) {
  const Field& f = m.field();
  const std::size_t t = target->dim();
  DualModule d;
  d.target_dim = t;
  d.source_dim = m.dim();
  d.space = intertwiners(f, t, m.dim(), source_actions, target_actions);
  for (std::size_t k = 0; k < d.space.dim(); ++k) {
    d.functionals.push_back(Matrix::unvectorize(d.space.vector(k), t, m.dim()));
  }
  const Algebra& a = *m.right_algebra();
  const Algebra& b = *m.left_algebra();
  std::vector<Matrix> left;
  std::vector<Matrix> right;
  if (right_side) {
    for (std::size_t p = 0; p < a.dim(); ++p)
      left.push_back(action_matrix(d, [&](const Matrix& F) { return a.left_mult(p) * F; }));
    for (std::size_t q = 0; q < b.dim(); ++q)
      right.push_back(action_matrix(d, [&](const Matrix& F) { return F * m.left_action()[q]; }));
  } else {
    for (std::size_t p = 0; p < a.dim(); ++p)
      left.push_back(action_matrix(d, [&](const Matrix& G) { return G * m.right_action()[p]; }));
    for (std::size_t q = 0; q < b.dim(); ++q)
      right.push_back(action_matrix(d, [&](const Matrix& G) { return b.right_mult(q) * G; }));
  }
  d.module = Bimodule(m.right_algebra(), m.left_algebra(), d.functionals.size(), std::move(left), std::move(right));
  return d;
}

std::vector<Matrix> right_mults(const Algebra& a) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.right_mult(i));
  return out;
}

std::vector<Matrix> left_mults(const Algebra& a) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.left_mult(i));
  return out;
}

using RankOne = Matrix (*)(const Bimodule&, const Matrix&, const Matrix&);

DualBasis solve_dual_basis(const Bimodule& m, const DualModule& dual, const std::vector<Matrix>& generators,
                           RankOne rank_one) {
  const Field& f = m.field();
  const std::size_t dim = m.dim();
  const std::size_t nd = dual.functionals.size();
  std::vector<Matrix> cols;
  for (const auto& g : generators)
    for (std::size_t k = 0; k < nd; ++k) cols.push_back(rank_one(m, g, dual.functionals[k]).vectorize());
  Matrix target = Matrix::identity(f, dim).vectorize();
  if (cols.empty()) {
    if (dim == 0) return {};
    throw NotProjective("module has no dual functionals");
  }
  auto sol = solve(Matrix::hstack(cols, f, dim * dim), target);
  if (!sol) throw NotProjective("no dual basis exists for the chosen generators; module is not projective");
  DualBasis db;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    db.elements.push_back(generators[i]);
    db.functionals.push_back(sol->block(i * nd, 0, nd, 1));
  }
  return db;
}

std::vector<Matrix> greedy_generators(const Bimodule& m, const std::vector<Matrix>& actions,
                                      std::optional<std::size_t> max_generators) {
  const Field& f = m.field();
  const std::size_t dim = m.dim();
  std::size_t bound = max_generators.value_or(dim);
  std::vector<Matrix> gens;
  Subspace generated = Subspace::zero(f, dim);
  for (std::size_t j = 0; j < dim && generated.dim() < dim; ++j) {
    Matrix e = Matrix::unit_column(f, dim, j);
    if (generated.contains(e)) continue;
    gens.push_back(e);
    if (gens.size() > bound) {
      throw NotProjective("more than " + std::to_string(bound) + " generators needed");
    }
    std::vector<Matrix> span;
    for (const auto& act : actions) span.push_back(act * e);
    generated = sum(generated, Subspace::from_columns(Matrix::hstack(span, f, dim)));
  }
  return gens;
}

CheckReport check_identity(const Bimodule& m, const DualModule& dual, const DualBasis& basis, RankOne rank_one,
                           const char* subject) {
  CheckReport report;
  report.subject = subject;
  const Field& f = m.field();
  Matrix total(f, m.dim(), m.dim());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    total = total + rank_one(m, basis.elements[i], dual.functional(basis.functionals[i]));
  }
  for (std::size_t j = 0; j < m.dim(); ++j) {
    ++report.checked;
    Matrix x = Matrix::unit_column(f, m.dim(), j);
    if (!(total * x == x)) report.fail("dual basis identity", "x" + std::to_string(j));
  }
  return report;
}

}  // namespace

DualModule right_dual(const Bimodule& m) {
  return build_dual(m, m.right_algebra(), m.right_action(), right_mults(*m.right_algebra()), true);
}

DualModule left_dual(const Bimodule& m) {
  return build_dual(m, m.left_algebra(), m.left_action(), left_mults(*m.left_algebra()), false);
}

Matrix rank_one_right(const Bimodule& m, const Matrix& element, const Matrix& functional) {
  const Field& f = m.field();
  Matrix out(f, m.dim(), m.dim());
  for (std::size_t q = 0; q < m.right_action().size(); ++q) {
    out = out + (m.right_action()[q] * element) * functional.row_at(q);
  }
  return out;
}

Matrix rank_one_left(const Bimodule& m, const Matrix& element, const Matrix& functional) {
  const Field& f = m.field();
  Matrix out(f, m.dim(), m.dim());
  for (std::size_t p = 0; p < m.left_action().size(); ++p) {
    out = out + (m.left_action()[p] * element) * functional.row_at(p);
  }
  return out;
}

DualBasis compute_dual_basis(const Bimodule& m, const DualModule& dual, std::optional<std::size_t> max_generators) {
  return solve_dual_basis(m, dual, greedy_generators(m, m.right_action(), max_generators), &rank_one_right);
}

DualBasis dual_basis_from_generators(const Bimodule& m, const DualModule& dual, const std::vector<Matrix>& generators) {
  return solve_dual_basis(m, dual, generators, &rank_one_right);
}

DualBasis compute_left_dual_basis(const Bimodule& m, const DualModule& dual,
                                  std::optional<std::size_t> max_generators) {
  return solve_dual_basis(m, dual, greedy_generators(m, m.left_action(), max_generators), &rank_one_left);
}

DualBasis left_dual_basis_from_generators(const Bimodule& m, const DualModule& dual,
                                          const std::vector<Matrix>& generators) {
  return solve_dual_basis(m, dual, generators, &rank_one_left);
}

CheckReport check_dual_basis(const Bimodule& m, const DualModule& dual, const DualBasis& basis) {
  return check_identity(m, dual, basis, &rank_one_right, "dual basis");
}

CheckReport check_left_dual_basis(const Bimodule& m, const DualModule& dual, const DualBasis& basis) {
  return check_identity(m, dual, basis, &rank_one_left, "left dual basis");
}

}  // namespace comatrix
