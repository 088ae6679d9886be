#pragma once

#include <optional>
#include <vector>

#include "comatrix/bimodule.hpp"
#include "comatrix/tensor.hpp"

namespace comatrix {

/// S = End(Sigma_A): the commutant of the right action, acting on Sigma from
/// the left, with the extension B -> S induced by the left action.
struct EndoRing {
  Bimodule sigma;
  AlgebraPtr algebra;
  /// Vectorized endomorphisms (row-major m x m).
  Subspace space;
  /// Matrix on Sigma of each basis element of S.
  std::vector<Matrix> rep;
  RingExtension extension;
  /// Sigma as an (S, A)-bimodule.
  Bimodule sigma_over_s;

  Matrix coords(const Matrix& endomorphism) const { return space.coords(endomorphism.vectorize()); }
  Matrix endomorphism(const Matrix& s) const;
  /// Image of b under B -> S.
  Matrix embed(const Matrix& b) const { return extension.morphism.matrix * b; }
};

EndoRing endo_ring(const Bimodule& sigma);

/// Sigma with a fixed dual basis and the structures derived from it.
struct FramedBimodule {
  Bimodule sigma;
  DualModule dual;
  DualBasis basis;
  EndoRing endo;
  /// Sigma* as an (A, S)-bimodule, (f.s)(x) = f(s(x)).
  Bimodule dual_over_s;
  /// Sigma (x)_A Sigma* as an (S, S)-bimodule.
  TensorProduct sigma_dual;
  /// Sigma (x)_A Sigma* -> S, u (x) f -> (x -> u.f(x)).
  Matrix to_endomorphism;
  /// S -> Sigma (x)_A Sigma*, s -> sum_i e_i (x) e_i* s.
  Matrix to_tensor;

  const AlgebraPtr& left_algebra() const { return sigma.left_algebra(); }
  const AlgebraPtr& right_algebra() const { return sigma.right_algebra(); }
  const AlgebraPtr& endo_algebra() const { return endo.algebra; }
  /// Functional matrix of the i-th dual basis functional.
  Matrix dual_functional(std::size_t i) const { return dual.functional(basis.functionals[i]); }
  /// Coordinates in Sigma* of the functional f.s
  Matrix dual_times(const Matrix& f_coords, const Matrix& s) const;
};

/// Builds the frame; computes a dual basis when none is given.
FramedBimodule frame(const Bimodule& sigma, std::optional<DualBasis> basis = {});

CheckReport check_frame(const FramedBimodule& fr);

}  // namespace comatrix
