#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "comatrix/comodule.hpp"

namespace comatrix {

/// A B-sub-bimodule of S = End_A(Sigma), B acting through the canonical extension.
struct SubBimodule {
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  friend bool operator==(const SubBimodule&, const SubBimodule&) = default;
  friend bool operator<(const SubBimodule& a, const SubBimodule& b) { return a.space < b.space; }
};

bool is_sub_bimodule(const EndoRing& s, const Subspace& space);
/// Smallest sub-bimodule containing the generators (coordinates in S).
SubBimodule sub_bimodule(const EndoRing& s, const std::vector<Matrix>& generators);
/// lambda(B)
SubBimodule unit_bimodule(const EndoRing& s);
SubBimodule full_bimodule(const EndoRing& s);
/// Span of all products xy.
SubBimodule product(const EndoRing& s, const SubBimodule& i, const SubBimodule& j);
/// Basis element names used in witnesses, e.g. "[1 0 0 1]".
std::string describe(const SubBimodule& i);

/// Finite monoid given by its multiplication table.
struct MonoidTable {
  std::vector<std::vector<std::size_t>> table;
  std::size_t unit = 0;

  std::size_t size() const { return table.size(); }
  std::size_t operator()(std::size_t i, std::size_t j) const { return table[i][j]; }
  std::optional<std::size_t> inverse(std::size_t i) const;
  std::vector<std::size_t> units() const;
  bool is_commutative() const;
};

CheckReport check_monoid(const MonoidTable& m);

enum class Hand { Left, Right };

/// m^{-1}(1) for S (x)_B I -> S (Left) or I (x)_B S -> S (Right), as pairs
/// (first tensor factor, second tensor factor) of S-coordinates.
struct GammaCertificate {
  Hand hand = Hand::Left;
  SubBimodule ideal;
  std::vector<std::pair<Matrix, Matrix>> pairs;
};

/// Representative convention for m^{-1}(1): the canonical section, or the section
/// shifted by every relation vector (used to test representative independence).
enum class Representative { Canonical, Shifted };

std::optional<GammaCertificate> membership(const EndoRing& s, const SubBimodule& i, Hand hand,
                                           Representative rep = Representative::Canonical);

/// {s : sI, Is in lambda(B)}
SubBimodule inverse_candidate(const EndoRing& s, const SubBimodule& i);
bool is_invertible(const EndoRing& s, const SubBimodule& i);

struct EnumerationSettings {
  std::uint64_t budget = 1'000'000;
  unsigned workers = 1;
};

/// All B-sub-bimodules of S, in subspace enumeration order. Throws BudgetExceeded, InfiniteField.
std::vector<SubBimodule> enumerate_sub_bimodules(const EndoRing& s, const EnumerationSettings& settings = {});

struct SubBimoduleMonoid {
  std::vector<SubBimodule> elements;
  MonoidTable table;
};

/// Inv_B(S) with its group table; elements sorted with lambda(B) first.
SubBimoduleMonoid enumerate_inv(const EndoRing& s, const EnumerationSettings& settings = {});

/// Hom_C(Sigma_g, Sigma) and Hom_C(Sigma, Sigma_g) as subspaces of S.
SubBimodule f_left(const ComatrixCoring& c, const CoringMorphism& g);
SubBimodule f_right(const ComatrixCoring& c, const CoringMorphism& g);

/// u* (x) u -> sum_k u* s_k (x) x_k u (Left) or sum_k u* t_k (x) s_k u (Right).
CoringMorphism gamma(const ComatrixCoring& c, const GammaCertificate& cert);
/// Same formula for the Sweedler coring: s (x) s' -> sum_k s s_k (x) x_k s'.
CoringMorphism gamma_sweedler(const SweedlerCoring& sw, const GammaCertificate& cert);

struct EndomorphismMonoid {
  std::vector<CoringMorphism> elements;
  MonoidTable table;
  std::uint64_t affine_points = 0;

  std::vector<std::size_t> automorphisms() const { return table.units(); }
  std::optional<std::size_t> index_of(const Matrix& m) const;
};

/// Exhaustive End_A(C): the affine space of A-bilinear counital maps, filtered by
/// compatibility with the comultiplication. table(i, j) is elements[i] after elements[j].
EndomorphismMonoid coring_endomorphisms(const CoringPtr& c, const EnumerationSettings& settings = {});

/// (xi (x) xi) (Sigma (x) g (x) Sigma*) (xi^-1 (x) xi^-1) on S (x)_B S.
CoringMorphism hat_map(const ComatrixCoring& c, const SweedlerCoring& sw, const CoringMorphism& g);
/// {s : h(s (x) 1) = 1 (x) s}
SubBimodule fixed_elements(const SweedlerCoring& sw, const CoringMorphism& h);

struct Separability {
  bool separable = false;
  /// Image of 1 under a bimodule section of Sigma (x)_A *Sigma -> B, in tensor coordinates.
  std::optional<Matrix> section;
};

Separability is_separable_bimodule(const Bimodule& sigma);

struct SplitExtension {
  bool split = false;
  /// alpha: S -> B, B-bilinear with alpha(1) = 1.
  std::optional<Matrix> retraction;
};

SplitExtension is_split_extension(const RingExtension& ext);

struct FreeBasis {
  bool found = false;
  std::vector<Matrix> basis;
  std::string reason;
};

/// Backtracking search for a basis of Sigma as a free left (or right) module over the
/// acting algebra. Finite fields only.
FreeBasis free_basis(const Bimodule& m, Hand side, std::uint64_t budget = 1'000'000);

struct HypothesisReport {
  Separability separability;
  FreeBasis left_free;
  FreeBasis dual_right_free;
  /// "verified" or "unverified"
  std::string flatness;
  std::string summary;
};

HypothesisReport check_hypotheses(const FramedBimodule& fr, std::uint64_t budget = 1'000'000);

/// Everything the theorem verifier produces for one bimodule.
struct TheoremBundle {
  std::string subject;
  SubBimoduleMonoid inv;
  std::vector<SubBimodule> left_unital;
  std::vector<SubBimodule> right_unital;
  EndomorphismMonoid endos;
  /// f_left(endos.elements[i])
  std::vector<SubBimodule> f_left_images;
  std::vector<SubBimodule> f_right_images;
  /// Automorphism assigned to each invertible sub-bimodule by the left Gamma map.
  std::vector<std::size_t> gamma_of_inv;
  HypothesisReport hypotheses;
  SplitExtension split;
  std::vector<CheckReport> reports;

  bool ok() const;
};

TheoremBundle verify_theorems(const FramedBimodule& fr, const EnumerationSettings& settings = {});

}  // namespace comatrix
