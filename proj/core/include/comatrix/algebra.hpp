#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "comatrix/check.hpp"
#include "comatrix/linalg.hpp"

namespace comatrix {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional associative unital algebra given by structure constants
/// b_i * b_j = sum_k c(i, j, k) b_k. Elements are coordinate columns.
class Algebra {
 public:
  /// Checks shapes only; use validate_algebra for the axioms.
  static AlgebraPtr create(Field field, std::vector<std::string> labels, std::vector<Scalar> constants, Matrix unit);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Scalar constant(std::size_t i, std::size_t j, std::size_t k) const { return constants_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<Scalar>& constants() const { return constants_; }
  const Matrix& unit() const { return unit_; }
  Matrix basis_vector(std::size_t i) const { return Matrix::unit_column(field_, dim_, i); }

  /// x -> b_i x
  const Matrix& left_mult(std::size_t i) const { return left_[i]; }
  /// x -> x b_i
  const Matrix& right_mult(std::size_t i) const { return right_[i]; }
  Matrix left_mult_by(const Matrix& a) const;
  Matrix right_mult_by(const Matrix& a) const;
  Matrix multiply(const Matrix& x, const Matrix& y) const;
  bool is_commutative() const;

  /// Structure constants and unit agree; labels are ignored.
  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.constants_ == b.constants_ && a.unit_ == b.unit_;
  }

 private:
  Algebra() = default;

  Field field_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Scalar> constants_;
  Matrix unit_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Lists every failing associativity triple and unit law.
CheckReport validate_algebra(const Algebra& a);

AlgebraPtr ground_algebra(Field field);
/// Basis E_ij in row-major order.
AlgebraPtr matrix_algebra(Field field, std::size_t n);
AlgebraPtr product_algebra(const AlgebraPtr& a, const AlgebraPtr& b);
AlgebraPtr opposite_algebra(const AlgebraPtr& a);

struct AlgebraMorphism {
  AlgebraPtr source;
  AlgebraPtr target;
  /// target.dim x source.dim
  Matrix matrix;

  Matrix operator()(const Matrix& x) const { return matrix * x; }
};

CheckReport check_algebra_morphism(const AlgebraMorphism& f);
/// g after f
AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f);
AlgebraMorphism identity_morphism(const AlgebraPtr& a);

struct RingExtension {
  AlgebraMorphism morphism;
  bool injective = false;
};

RingExtension make_extension(AlgebraMorphism morphism);

struct Subalgebra {
  AlgebraPtr algebra;
  AlgebraMorphism inclusion;
};

/// Structure constants induced on the RREF basis of `space`.
/// Throws MissingUnit or NotClosed.
Subalgebra subalgebra(const AlgebraPtr& a, const Subspace& space);
/// Subalgebra on the span of the given element columns.
Subalgebra subalgebra_spanned(const AlgebraPtr& a, const std::vector<Matrix>& elements);

}  // namespace comatrix
