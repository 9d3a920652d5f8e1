#pragma once

// Parameter-level analysis of the system attached to (A, beta): resonance,
// rank-jump (exceptional) parameters in rank 2, the monodromy reducibility
// classifier, and the holonomic-duality calculator. Everything here expects a
// validated matrix: full row rank, columns generating the full ambient
// lattice, pointed cone. Parameters are exact rationals in the ambient space.

#include "gkz/semigrp.hpp"

namespace gkz {

// beta - alpha. Degree arithmetic used by every contiguity and duality rule.
RatVec shift_parameter(const RatVec& beta, const IntVec& alpha);

struct ResonanceEntry {
  FacetFunctional facet;
  Rat value;        // facet functional applied to beta
  bool resonant;    // value is an integer
};

// One entry per facet of cone(A), in cone_facets order. beta is non-resonant
// iff no entry is resonant.
std::vector<ResonanceEntry> resonance_test(const IntMat& a, const RatVec& beta);
bool non_resonant(const std::vector<ResonanceEntry>& entries);

struct CanonicalDegrees {
  IntVec eps_a;                 // column sum
  IntVec eps_atilde;            // Hilbert basis sum of the saturation
  std::optional<IntVec> c_a;    // present only with a Gorenstein certificate
};

CanonicalDegrees canonical_degrees(const IntMat& a);

// How (and whether) the semigroup ring was certified Gorenstein. The normal
// route must be probed first: a normal ring is Gorenstein iff the interior
// ideal of the saturation is principal, and the value-semigroup route below
// would misfire on normal rank-1 matrices.
struct GorensteinCertificate {
  enum class Route {
    NormalPrincipalInterior,  // normal, one interior generator kappa
    NumericalSymmetric,       // rank 1 non-normal, symmetric value semigroup
    NotGorenstein,
    Unknown,                  // regime not decided here (non-normal, rank >= 2)
  };
  Route route = Route::Unknown;
  std::optional<IntVec> c_a;      // ambient; kappa - eps_a, or the oriented
                                  // Frobenius number for rank-1 semigroups
  std::optional<IntVec> kappa;    // principal interior generator when normal
  std::optional<Int> frobenius;   // largest gap of the value semigroup
  bool gorenstein() const {
    return route == Route::NormalPrincipalInterior || route == Route::NumericalSymmetric;
  }
};

GorensteinCertificate gorenstein_certificate(const SemigroupProfile& sp);
GorensteinCertificate gorenstein_certificate(const IntMat& a);

// Rank-jumping parameters for rank-2 matrices: the negated degrees of the
// first local cohomology of the semigroup ring. Finite, often empty; empty
// whenever the ring is Cohen-Macaulay. Other ranks are reported unsupported.
struct ExceptionalSet {
  bool supported = false;
  std::vector<IntVec> points;
  std::string note;
};

ExceptionalSet exceptional_set_d2(const SemigroupProfile& sp);
ExceptionalSet exceptional_set_d2(const IntMat& a);

// The parameter arrangement the closing conjecture tests against: quasi-degrees
// of the below-top local cohomology. In rank 2 the degree-zero part vanishes
// (the ring is a domain), so this is exactly the exceptional point set.
struct ConjectureArrangement {
  bool supported = false;
  DegreeSet arrangement;
  std::string note;
};

ConjectureArrangement conjecture_arrangement(const IntMat& a);

enum class Reducibility { Reducible, Irreducible, Unknown };

struct RuleStep {
  std::string key;     // stable identifier, see classify_reducibility
  std::string detail;  // human-readable data the rule fired on
};

// Data of the pyramid reduction beta = sum gamma_k a_k + beta_f, with the
// dropped columns independent over the span of the minimal face.
struct ReducedPair {
  std::vector<int> face_cols;    // ascending, may be empty (vertex face)
  std::vector<int> dropped_cols; // in drop order
  RatVec beta_f;                 // ambient, lies in the rational span of the face
  RatVec gamma;                  // coordinates along the dropped columns
};

struct ReducibilityVerdict {
  Reducibility status = Reducibility::Unknown;
  std::vector<RuleStep> trail;
  ReducedPair reduced;
  RatVec representative;  // canonical coset representative actually classified
};

// Decision procedure, evaluated on the entrywise fractional part of beta so
// that verdict and trail are literally invariant under integer shifts:
//   pyramid-split                 reduce to the minimal iterated pyramid face
//   volume-one-irreducible        rank-one systems are irreducible
//   thm-jump-red                  beta_f hits a rank-jump point modulo the
//   thm-reducible-lattice           face lattice (checked before integrality
//                                   so the finer certificate wins)
//   integral-parameter-reducible  beta_f in the face lattice, volume > 1
//   nonresonant-irreducible       beta_f off every facet-integrality wall
//   unknown                       none of the rules decided
ReducibilityVerdict classify_reducibility(const IntMat& a, const RatVec& beta);

enum class DualStatus { ProperGKZ, NotProperGKZ, Undetermined };
enum class DualRegime { Gorenstein, Normal, Generic, NonCMd2, None };

struct DualityVerdict {
  DualStatus status = DualStatus::Undetermined;
  DualRegime regime = DualRegime::None;
  std::optional<RatVec> dual_parameter;        // present iff ProperGKZ
  std::string certificate;                     // present iff NotProperGKZ
  std::optional<IntVec> witness_degree;        // rank-jump point behind a
                                               // NotProperGKZ certificate
  std::vector<std::string> conditions_failed;  // populated when Undetermined
};

// Regime cascade. Earlier regimes win; conditions of regimes that were probed
// and failed are reported when everything fails.
//   1 Gorenstein:  dual = -beta - eps_a - c_a, unconditional in beta.
//   2 normal:      dual = -beta when beta avoids every facet hyperplane, else
//                  dual = -beta - f for the first interior generator f whose
//                  shifted-copy comparison degrees avoid -beta.
//   3 rank 2, non-Cohen-Macaulay, beta exactly a rank-jump point: the dual
//                  surjects onto two copies of the polynomial module, so it is
//                  not a proper system; certified, with the witness degree.
//   4 generic:     dual = -beta - eps_atilde when beta avoids the hole
//                  closures and the dual parameter avoids the facet
//                  hyperplanes and hole closures.
DualityVerdict dualize(const IntMat& a, const RatVec& beta);

std::string to_string(Reducibility r);
std::string to_string(DualStatus s);
std::string to_string(DualRegime r);

}  // namespace gkz
