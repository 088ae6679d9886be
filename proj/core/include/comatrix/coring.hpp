#pragma once

#include <memory>
#include <string>

#include "comatrix/endo.hpp"

namespace comatrix {

/// An A-coring: an (A, A)-bimodule C with comultiplication C -> C (x)_A C and
/// counit C -> A, both stored as matrices on quotient coordinates.
struct Coring {
  std::string name;
  AlgebraPtr base;
  Bimodule module;
  TensorProduct square;
  Matrix comult;
  Matrix counit;

  std::size_t dim() const { return module.dim(); }
  const Field& field() const { return module.field(); }
};

using CoringPtr = std::shared_ptr<const Coring>;

/// Shapes are checked here; axioms by check_coring_axioms.
CoringPtr make_coring(std::string name, Bimodule module, Matrix comult, Matrix counit);
/// Same coring with replaced structure maps (used for corrupted variants).
CoringPtr with_structure(const Coring& c, Matrix comult, Matrix counit);

/// A-bilinearity of both structure maps, coassociativity and both counit laws.
CheckReport check_coring_axioms(const Coring& c);

struct CoringMorphism {
  CoringPtr source;
  CoringPtr target;
  Matrix matrix;
};

CheckReport check_coring_morphism(const CoringMorphism& f);
CoringMorphism identity_morphism(const CoringPtr& c);
/// g after f
CoringMorphism compose(const CoringMorphism& g, const CoringMorphism& f);

/// Sigma* (x)_B Sigma with
///   comult(u* (x) u) = sum_i u* (x) e_i (x) e_i* (x) u,   counit(u* (x) u) = u*(u).
struct ComatrixCoring {
  FramedBimodule frame;
  /// Sigma* (x)_B Sigma
  TensorProduct tensor;
  CoringPtr coring;
};

ComatrixCoring build_comatrix_coring(const FramedBimodule& frame);

/// S (x)_B S with comult(s (x) s') = (s (x) 1) (x) (1 (x) s') and counit the product.
struct SweedlerCoring {
  RingExtension extension;
  /// S as a (B, S)-bimodule.
  Bimodule sigma;
  /// S as an (S, B)-bimodule.
  Bimodule cosigma;
  TensorProduct tensor;
  CoringPtr coring;
};

SweedlerCoring build_sweedler_coring(const RingExtension& ext);

/// For Sigma = S_S over B -> S: the transport Sigma* (x)_B Sigma -> S (x)_B S
/// induced by f -> f(1), and a report that it carries comultiplication and
/// counit onto those of the Sweedler coring.
struct SweedlerComparison {
  CoringMorphism transport;
  CheckReport report;
};

SweedlerComparison compare_with_sweedler(const ComatrixCoring& comatrix, const SweedlerCoring& sweedler);

/// Coring on Lambda (x)_B *Lambda for an (A, B)-bimodule Lambda projective on the
/// left, together with the isomorphism from the comatrix coring of *Lambda.
struct LeftComatrixCoring {
  Bimodule lambda;
  DualModule left_dual;
  DualBasis left_basis;
  TensorProduct tensor;
  CoringPtr coring;
  ComatrixCoring comatrix;
  CoringMorphism iso;
};

/// Throws NotProjective when Lambda is not projective as a left module.
LeftComatrixCoring build_left_comatrix_coring(const Bimodule& lambda);

}  // namespace comatrix
