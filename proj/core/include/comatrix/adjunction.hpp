#pragma once

#include <string>
#include <vector>

#include "comatrix/masuoka.hpp"

namespace comatrix {

/// The two corings linked by Sigma: the Sweedler S-coring S (x)_B S and the comatrix
/// A-coring Sigma* (x)_B Sigma, with the evaluation Sigma* (x)_S Sigma -> A.
struct AdjunctionContext {
  FramedBimodule frame;
  ComatrixCoring comatrix;
  SweedlerCoring sweedler;
  /// Sigma* (x)_S Sigma
  TensorProduct dual_sigma;
  /// f (x) u -> f(u)
  Matrix evaluation;

  const CoringPtr& c() const { return comatrix.coring; }
  const CoringPtr& d() const { return sweedler.coring; }
};

AdjunctionContext make_adjunction_context(const FramedBimodule& fr);

/// Evaluation is A-bilinear; the comatrix coring matches the frame.
CheckReport check_adjunction_context(const AdjunctionContext& ctx);

/// A comodule built as a tensor product, keeping the tensor for later maps.
struct TensoredComodule {
  TensorProduct tensor;
  Comodule comodule;
};

/// Y (x)_S Sigma for a right S (x)_B S-comodule Y, a right C-comodule.
TensoredComodule tensor_sigma(const AdjunctionContext& ctx, const Comodule& y);
/// X (x)_A Sigma* for a right C-comodule X, a right S (x)_B S-comodule.
TensoredComodule tensor_sigmastar(const AdjunctionContext& ctx, const Comodule& x);

/// alpha (x) id between two tensored comodules.
Matrix tensor_map(const TensoredComodule& from, const TensoredComodule& to, const Matrix& alpha);

/// S with s -> 1 (x) 1 (x) s.
Comodule grouplike_comodule(const AdjunctionContext& ctx);

/// S (x)_S Sigma -> Sigma, s (x) u -> s(u).
Matrix unit_tensor_iso(const AdjunctionContext& ctx, const TensoredComodule& s_sigma);
/// Sigma (x)_A Sigma* -> S, u (x) f -> (x -> u f(x)).
Matrix xi_iso(const AdjunctionContext& ctx, const TensoredComodule& sigma_dual);

/// C-colinear f: Y (x)_S Sigma -> X  to  y -> sum_i f(y (x) e_i) (x) e_i*. Throws NotColinear.
Matrix psi(const AdjunctionContext& ctx, const TensoredComodule& y_sigma, const Comodule& x, const Matrix& f);
/// Colinear g: Y -> X (x)_A Sigma*  to  y (x) u -> sum x f(u). Throws NotColinear.
Matrix psi_inv(const AdjunctionContext& ctx, const Comodule& y, const TensoredComodule& x_dual, const Matrix& g);

struct NamedComodule {
  std::string name;
  Comodule comodule;
};

/// Right S (x)_B S-comodules {S, S_hat(g), Sigma (x) Sigma*, 0} and right C-comodules
/// {Sigma, Sigma_g, S (x) Sigma, 0}, with g the first nonidentity automorphism (or id).
struct ComoduleSet {
  std::vector<NamedComodule> sweedler_side;
  std::vector<NamedComodule> comatrix_side;
  CoringMorphism g;
};

ComoduleSet standard_comodule_set(const AdjunctionContext& ctx, const EnumerationSettings& settings = {});

struct AdjunctionPair {
  std::string y;
  std::string x;
  std::size_t dim_comatrix = 0;
  std::size_t dim_sweedler = 0;
};

struct AdjunctionCertificate {
  std::vector<AdjunctionPair> pairs;
  std::vector<CheckReport> reports;

  bool ok() const;
};

/// Comodule checks, the canonical isomorphisms, functoriality, the bijection Psi on every
/// pair, and naturality squares for every pair of basis morphisms.
AdjunctionCertificate verify_adjunction(const AdjunctionContext& ctx, const ComoduleSet& set);

}  // namespace comatrix
