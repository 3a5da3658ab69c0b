#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strop/transmission.hpp"

namespace strop {

// ---- the quotient engine ----

struct QuotientResult {
  bool transmissive = false;
  std::string failed;  // axiom name when not transmissive
  Witness witness;
  Partition relation;
  FiniteSupertropical carrier;  // zero, ghost classes ascending, then tangible classes
  FiniteTransmission pi;
};

// Checks TE1-TE3, builds the forced structure on U/E and validates both
// the carrier and π_E. Never throws for relations of the right size.
QuotientResult quotient_by_relation(const FiniteSupertropical& u, const Partition& e);

// The same carrier with new element names.
FiniteSupertropical rename(const FiniteSupertropical& u, std::vector<std::string> names);

// ---- initial transmissions ----

struct InitialTransmission {
  FiniteSupertropical carrier;  // U_γ
  FiniteTransmission alpha;     // α_{U,γ}
  std::vector<Index> ghost_index;  // element of γ's target -> index in U_γ
  std::string path;                // "surjective", "extension", "composite" or "search"
};

// Covers γ: u.ghost_bipotent() -> N. Surjective γ with cancellative target
// uses the explicit relation; injective γ the ghost extension; cancellative
// image the composite of both. Otherwise, for |U| ≤ 8, the finest
// transmissive relation restricting to ker γ is found by enumeration.
// Throws UnsupportedGamma beyond that.
InitialTransmission initial_transmission(const FiniteSupertropical& u, const FiniteGhostHom& gamma);

// γ(M) as a bipotent carrier with the surjection onto it and the inclusion.
struct ImageFactorization {
  FiniteGhostHom onto;
  FiniteGhostHom inclusion;
};
ImageFactorization factor_through_image(const FiniteGhostHom& gamma);

// ---- pushout verification ----

struct PushoutChallenge {
  FiniteGhostHom delta;     // from the target's ghosts
  FiniteTransmission beta;  // from the source
};

struct ChallengeOutcome {
  bool composable = false;   // β^ν = δ∘α^ν
  bool well_defined = false; // β constant on fibers of α
  bool eta_valid = false;    // η validates as a transmission
  bool covers_delta = false; // η^ν = δ
  Witness witness;
  std::vector<Index> eta;
  bool ok() const { return composable && well_defined && eta_valid && covers_delta; }
};

struct PushoutReport {
  std::vector<ChallengeOutcome> outcomes;
  bool ok() const;
  std::size_t failures() const;
};

// η([x]) = β(x) on the image of α and η = δ on the remaining ghosts; η is
// checked, not searched. Throws NotSurjective when a tangible of the target
// is missed by α.
PushoutReport verify_pushout(const FiniteTransmission& alpha, const std::vector<PushoutChallenge>& challenges);

// All transmissions u -> w, by backtracking on the multiplication table.
std::vector<FiniteTransmission> enumerate_transmissions(const FiniteSupertropical& u, const FiniteSupertropical& w);

// Every (δ, β) with β: source(α) -> W for W in `targets`; δ is read off from
// β^ν (pairs where it is not well defined or not a homomorphism are skipped).
std::vector<PushoutChallenge> generate_challenges(const FiniteTransmission& alpha,
                                                  const std::vector<FiniteSupertropical>& targets);

// Tangible x with x ~ y, x ≠ y implies x ~ 0.
bool pushout_criterion(const FiniteSupertropical& u, const Partition& e, Witness* witness = nullptr);

// ---- derived maps ----

// λ: U -> V with eU = eV and identity ghost part; γ as for the surjective
// cancellative path. Throws GhostPartNotIdentity.
FiniteTransmission lambda_gamma(const FiniteTransmission& lambda, const FiniteGhostHom& gamma);

// Quotient by the t-collapse relation over 𝔞 (ghost indices). Throws
// TangiblesNotClosed.
QuotientResult t_collapse_map(const FiniteSupertropical& u, const Subset& ideal);

// (U∖𝔄) ∪ M with x⊙y = xy if xy ∉ 𝔄 and exy otherwise; the map sends
// x ∈ 𝔄 to ex. Throws GhostsNotContained, NotIdeal.
struct GhostCollapse {
  FiniteSupertropical carrier;
  FiniteTransmission map;
};
GhostCollapse ghost_collapse(const FiniteSupertropical& u, const Subset& big_a);

// α = ρ∘π_{E(α)} for surjective α; ρ is returned when it is an isomorphism.
std::optional<FiniteTransmission> factor_surjective(const FiniteTransmission& alpha);

}  // namespace strop
