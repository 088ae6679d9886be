#pragma once

#include <optional>
#include <vector>

#include "comatrix/coring.hpp"

namespace comatrix {

enum class Side { Right, Left };

/// A comodule over an A-coring C. For Side::Right the module is (X, A) and the
/// coaction lands in M (x)_A C; for Side::Left it is (A, X) and lands in
/// C (x)_A M. The outer algebra X is the ground field when no outer action is
/// present, so outer linearity is always checked.
struct Comodule {
  Side side = Side::Right;
  CoringPtr coring;
  Bimodule module;
  TensorProduct tensor;
  Matrix coaction;

  std::size_t dim() const { return module.dim(); }
};

/// Builds the tensor and checks shapes; axioms are checked by check_comodule.
Comodule make_comodule(Side side, CoringPtr coring, Bimodule module, Matrix coaction);

/// A-linearity, outer linearity, coassociativity, counit law.
CheckReport check_comodule(const Comodule& x);

/// u -> sum_i e_i (x) e_i* (x) u on Sigma, a right comodule with outer B-action.
Comodule sigma_comodule(const ComatrixCoring& c);
/// u* -> sum_i u* (x) e_i (x) e_i* on Sigma*, a left comodule with outer B-action.
Comodule dual_sigma_comodule(const ComatrixCoring& c);

/// The coaction twisted by an endomorphism g of the coring: (X (x) g) rho for right
/// comodules, (g (x) X) lambda for left ones.
Comodule induced_comodule(const Comodule& x, const CoringMorphism& g);

/// X* = Hom_A(X, A) of a right comodule, as a left comodule.
Comodule dual_comodule(const Comodule& x, std::optional<DualBasis> basis = {});
/// *X = Hom_A(X, A) of a left comodule, as a right comodule.
Comodule left_dual_comodule(const Comodule& x, std::optional<DualBasis> basis = {});

/// The zero comodule on a zero-dimensional module of the given side.
Comodule zero_comodule(Side side, const CoringPtr& coring);

struct HomSpace {
  /// Coordinates are the row-major entries of the map.
  Subspace space;
  std::vector<Matrix> maps;

  std::size_t dim() const { return maps.size(); }
};

/// A-linear colinear maps X -> Y, by one linear solve.
HomSpace hom_comodules(const Comodule& x, const Comodule& y);

CheckReport check_colinear(const Comodule& x, const Comodule& y, const Matrix& f);

}  // namespace comatrix
