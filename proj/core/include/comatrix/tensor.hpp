#pragma once

#include <cstddef>

#include "comatrix/bimodule.hpp"
#include "comatrix/linalg.hpp"

namespace comatrix {

/// M (x)_R N realized as field^(dim M * dim N) modulo the span of
/// (x.r) (x) y - x (x) (r.y). Raw index of e_i (x) e_j is i * dim N + j.
class TensorProduct {
 public:
  TensorProduct() = default;
  /// R is the right algebra of `left` and the left algebra of `right`.
  TensorProduct(Bimodule left, Bimodule right);

  const Bimodule& left_factor() const { return left_; }
  const Bimodule& right_factor() const { return right_; }
  const AlgebraPtr& ring() const { return left_.right_algebra(); }
  const Field& field() const { return left_.field(); }

  std::size_t dim() const { return space_.dim; }
  std::size_t raw_dim() const { return space_.ambient_dim; }
  const QuotientSpace& space() const { return space_; }
  const Matrix& projection() const { return space_.projection; }
  const Matrix& section() const { return space_.section; }

  /// Induced (left algebra of M, right algebra of N)-bimodule.
  const Bimodule& bimodule() const { return outer_; }

  /// Class of x (x) y.
  Matrix pure(const Matrix& x, const Matrix& y) const;
  /// Class of e_i (x) e_j.
  Matrix pure_basis(std::size_t i, std::size_t j) const;

  /// True iff `raw` (rows x raw_dim) vanishes on the relation span.
  bool kills_relations(const Matrix& raw) const;
  /// Map on the quotient induced by `raw`; throws IllDefinedMap when `raw`
  /// does not vanish on the relations.
  Matrix descend(const Matrix& raw) const;

 private:
  Bimodule left_;
  Bimodule right_;
  QuotientSpace space_;
  Bimodule outer_;
};

/// f (x) g : M (x) N -> M' (x) N' on the quotients.
Matrix tensor_maps(const TensorProduct& source, const TensorProduct& target, const Matrix& f, const Matrix& g);

/// (M (x) N) (x) P -> M (x) (N (x) P).
Matrix associator(const TensorProduct& mn, const TensorProduct& mn_p, const TensorProduct& np,
                  const TensorProduct& m_np);

/// M (x)_R R -> M, x (x) r -> x.r
Matrix right_unitor(const TensorProduct& m_r);
/// R (x)_R N -> N, r (x) y -> r.y
Matrix left_unitor(const TensorProduct& r_n);

}  // namespace comatrix
