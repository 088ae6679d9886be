#include "comatrix/tensor.hpp"

namespace comatrix {

TensorProduct::TensorProduct(Bimodule left, Bimodule right) : left_(std::move(left)), right_(std::move(right)) {
  if (!(left_.field() == right_.field())) throw FieldMismatch("tensor product of modules over different fields");
  if (!same_algebra(left_.right_algebra(), right_.left_algebra())) {
    throw InvalidStructure("tensor product: the right algebra of M differs from the left algebra of N");
  }
  const Field& f = field();
  const std::size_t m = left_.dim();
  const std::size_t n = right_.dim();
  const Matrix im = Matrix::identity(f, m);
  const Matrix in = Matrix::identity(f, n);
  std::vector<Matrix> relations;
  for (std::size_t r = 0; r < ring()->dim(); ++r) {
    relations.push_back(Matrix::kron(left_.right_action()[r], in) - Matrix::kron(im, right_.left_action()[r]));
  }
  Subspace rel = relations.empty() ? Subspace::zero(f, m * n)
                                   : Subspace::from_columns(Matrix::hstack(relations, f, m * n));
  space_ = quotient(m * n, rel);

  std::vector<Matrix> outer_left;
  for (const auto& l : left_.left_action()) outer_left.push_back(descend(space_.projection * Matrix::kron(l, in)));
  std::vector<Matrix> outer_right;
  for (const auto& r : right_.right_action()) outer_right.push_back(descend(space_.projection * Matrix::kron(im, r)));
  outer_ = Bimodule(left_.left_algebra(), right_.right_algebra(), space_.dim, std::move(outer_left),
                    std::move(outer_right));
}

Matrix TensorProduct::pure(const Matrix& x, const Matrix& y) const { return space_.projection * Matrix::kron(x, y); }

Matrix TensorProduct::pure_basis(std::size_t i, std::size_t j) const {
  return space_.projection.column_at(i * right_.dim() + j);
}

bool TensorProduct::kills_relations(const Matrix& raw) const {
  if (raw.cols() != raw_dim()) throw DimensionMismatch("map on tensor representatives has the wrong width");
  if (space_.kernel.dim() == 0) return true;
  return (raw * space_.kernel.columns()).is_zero();
}

Matrix TensorProduct::descend(const Matrix& raw) const {
  if (!kills_relations(raw)) throw IllDefinedMap("map does not vanish on the tensor relations");
  return raw * space_.section;
}

Matrix tensor_maps(const TensorProduct& source, const TensorProduct& target, const Matrix& f, const Matrix& g) {
  return source.descend(target.projection() * Matrix::kron(f, g));
}

Matrix associator(const TensorProduct& mn, const TensorProduct& mn_p, const TensorProduct& np,
                  const TensorProduct& m_np) {
  const Field& f = mn.field();
  const std::size_t m = mn.left_factor().dim();
  const std::size_t p = np.right_factor().dim();
  if (mn_p.left_factor().dim() != mn.dim() || m_np.right_factor().dim() != np.dim()) {
    throw DimensionMismatch("associator: tensor factors do not line up");
  }
  Matrix to_raw = Matrix::kron(mn.section(), Matrix::identity(f, p));
  Matrix from_raw = m_np.projection() * Matrix::kron(Matrix::identity(f, m), np.projection());
  return mn_p.descend(from_raw * to_raw);
}

Matrix right_unitor(const TensorProduct& m_r) {
  const Bimodule& m = m_r.left_factor();
  const std::size_t r = m_r.right_factor().dim();
  Matrix raw(m.field(), m.dim(), m.dim() * r);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      // e_i . (j-th basis vector of R)
      Matrix img = m.act_right(Matrix::unit_column(m.field(), r, j)) * Matrix::unit_column(m.field(), m.dim(), i);
      for (std::size_t k = 0; k < m.dim(); ++k) raw.set(k, i * r + j, img(k, 0));
    }
  }
  return m_r.descend(raw);
}

Matrix left_unitor(const TensorProduct& r_n) {
  const Bimodule& n = r_n.right_factor();
  const std::size_t r = r_n.left_factor().dim();
  Matrix raw(n.field(), n.dim(), r * n.dim());
  for (std::size_t i = 0; i < r; ++i) {
    Matrix act = n.act_left(Matrix::unit_column(n.field(), r, i));
    for (std::size_t j = 0; j < n.dim(); ++j)
      for (std::size_t k = 0; k < n.dim(); ++k) raw.set(k, i * n.dim() + j, act(k, j));
  }
  return r_n.descend(raw);
}

}  // namespace comatrix
