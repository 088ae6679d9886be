#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "comatrix/algebra.hpp"
#include "comatrix/check.hpp"

namespace comatrix {

/// A (B, A)-bimodule on field^dim. Left action matrices are indexed by the
/// basis of B, right action matrices by the basis of A; the right action of
/// a is x -> R_a x, so R_{aa'} = R_{a'} R_a.
class Bimodule {
 public:
  Bimodule() = default;
  Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Matrix> left_action,
           std::vector<Matrix> right_action);

  const AlgebraPtr& left_algebra() const { return left_; }
  const AlgebraPtr& right_algebra() const { return right_; }
  const Field& field() const { return left_->field(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& left_action() const { return left_action_; }
  const std::vector<Matrix>& right_action() const { return right_action_; }

  /// Matrix of x -> b.x for an element b of the left algebra.
  Matrix act_left(const Matrix& b) const;
  /// Matrix of x -> x.a for an element a of the right algebra.
  Matrix act_right(const Matrix& a) const;

  friend bool operator==(const Bimodule& x, const Bimodule& y) {
    return same_algebra(x.left_, y.left_) && same_algebra(x.right_, y.right_) && x.dim_ == y.dim_ &&
           x.left_action_ == y.left_action_ && x.right_action_ == y.right_action_;
  }

 private:
  AlgebraPtr left_;
  AlgebraPtr right_;
  std::size_t dim_ = 0;
  std::vector<Matrix> left_action_;
  std::vector<Matrix> right_action_;
};

CheckReport validate_bimodule(const Bimodule& m);

/// A as an (A, A)-bimodule.
Bimodule regular_bimodule(const AlgebraPtr& a);
/// A^rank as an (A, A)-bimodule.
Bimodule free_bimodule(const AlgebraPtr& a, std::size_t rank);
/// Left action pulled back along f: B' -> B.
Bimodule restrict_left(const Bimodule& m, const AlgebraMorphism& f);
/// Right action pulled back along f: A' -> A.
Bimodule restrict_right(const Bimodule& m, const AlgebraMorphism& f);
/// Same space as a (ground, A)-bimodule.
Bimodule forget_left(const Bimodule& m);
/// Same space as a (B, ground)-bimodule.
Bimodule forget_right(const Bimodule& m);
/// (B, A)-bimodule M viewed as the (A^o, B^o)-bimodule M^o.
Bimodule opposite_bimodule(const Bimodule& m);
/// As above with the opposite algebras A^o and B^o supplied by the caller.
Bimodule opposite_bimodule(const Bimodule& m, const AlgebraPtr& a_op, const AlgebraPtr& b_op);

/// A dual of a bimodule together with the functionals realizing it.
struct DualModule {
  Bimodule module;
  /// Vectorized functionals (row-major, dim_target x dim_source).
  Subspace space;
  /// One matrix per basis element of `module`.
  std::vector<Matrix> functionals;

  /// Functionals are target_dim x source_dim matrices.
  std::size_t target_dim = 0;
  std::size_t source_dim = 0;

  /// Coordinates of a functional given as a matrix.
  Matrix coords(const Matrix& functional) const;
  Matrix functional(const Matrix& coords) const;
};

/// Hom(M_A, A_A) for a (B, A)-bimodule M, as an (A, B)-bimodule:
/// (a.f)(x) = a f(x), (f.b)(x) = f(b x).
DualModule right_dual(const Bimodule& m);
/// Hom(_B M, _B B) for a (B, A)-bimodule M, as an (A, B)-bimodule:
/// (a.g)(x) = g(x a), (g.b)(x) = g(x) b.
DualModule left_dual(const Bimodule& m);

/// Pairs (e_i, e_i*) with sum_i e_i . e_i*(x) = x. For a left dual basis the
/// identity reads sum_i e_i*(x) . e_i = x.
struct DualBasis {
  std::vector<Matrix> elements;
  /// Coordinates in the dual module.
  std::vector<Matrix> functionals;

  std::size_t size() const { return elements.size(); }
};

/// Greedy sweep over standard basis vectors for right-module generators, then a
/// linear solve for the functionals. `max_generators` bounds the generating set
/// (default: dim). Throws NotProjective.
DualBasis compute_dual_basis(const Bimodule& m, const DualModule& dual, std::optional<std::size_t> max_generators = {});
DualBasis dual_basis_from_generators(const Bimodule& m, const DualModule& dual, const std::vector<Matrix>& generators);
/// Left-module analogue against left_dual(m).
DualBasis compute_left_dual_basis(const Bimodule& m, const DualModule& dual,
                                  std::optional<std::size_t> max_generators = {});
DualBasis left_dual_basis_from_generators(const Bimodule& m, const DualModule& dual,
                                          const std::vector<Matrix>& generators);

CheckReport check_dual_basis(const Bimodule& m, const DualModule& dual, const DualBasis& basis);
CheckReport check_left_dual_basis(const Bimodule& m, const DualModule& dual, const DualBasis& basis);

/// The map x -> e . f(x) as a dim x dim matrix, for f in Hom(M_A, A).
Matrix rank_one_right(const Bimodule& m, const Matrix& element, const Matrix& functional);
/// The map x -> f(x) . e for f in Hom(_B M, B).
Matrix rank_one_left(const Bimodule& m, const Matrix& element, const Matrix& functional);

}  // namespace comatrix
