#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strop/supertropical.hpp"

namespace strop {

// Relations on a finite carrier U are partitions of its indices. Relations
// on M = eU are partitions of ghost ranks (the indices of ghost_bipotent()).

struct Flag {
  bool holds = true;
  Witness witness;  // empty when holds
};

struct RelationClassification {
  Flag multiplicative;
  Flag additive;
  Flag order_compatible_on_M;  // TE2, also AE2
  Flag ghost_compatible;       // AE1
  Flag ae3;
  Flag fiber_conserving;
  Flag te3;
  Flag te;
  Flag ghost_cancellative;
  Flag homomorphic;
  Flag strictly_ghost_separating;
};

RelationClassification classify_relation(const FiniteSupertropical& u, const Partition& e);

// E|M as a partition of ghost ranks.
Partition restrict_to_ghosts(const FiniteSupertropical& u, const Partition& e);

// ---- builders ----

// {sat 𝔞} plus singletons. Throws NotIdeal.
Partition rel_of_ideal(const FiniteSupertropical& u, const Subset& ideal);
// Closure of x ~ y iff x + a = y + b for some a, b in 𝔞.
Partition rel_of_ideal_closure(const FiniteSupertropical& u, const Subset& ideal);

// x ~ y iff x = y, or both ghost with γ(x) = γ(y), or γ(ex) = γ(ey) = 0.
// γ starts at u.ghost_bipotent(). Throws NotSurjective, TargetNotCancellative.
Partition rel_initial_gamma(const FiniteSupertropical& u, const FiniteGhostHom& gamma);
// Same rule without the hypotheses on γ.
Partition rel_gamma_rule(const FiniteSupertropical& u, const FiniteGhostHom& gamma);

// x ~ y iff gx = hy for some g, h in H. Throws NotInStabilizer, NotSubmonoid.
Partition rel_orbital(const FiniteSupertropical& u, const Subset& h);

// x ~ y iff x = y, or x, y in 𝔄 with ex ~Φ ey. Throws GhostsNotContained.
Partition rel_from_ghost_data(const FiniteSupertropical& u, const Subset& big_a, const Partition& phi);

// Tangibles over 𝔞 merged fiberwise. `ideal` lists ghost indices of U.
// Throws TangiblesNotClosed when T ∪ {0} is not closed under products.
Partition rel_t_collapse(const FiniteSupertropical& u, const Subset& ideal);

// Smallest multiplicative equivalence containing the pairs; throws
// FiberViolation with a witness pair if it merges different fibers.
Partition mfce_closure(const FiniteSupertropical& u, const std::vector<std::pair<Index, Index>>& pairs);
// Pairs (x, ex) for x in X.
Partition mfce_closure(const FiniteSupertropical& u, const Subset& x);
// x ~ y iff x = y, or x, y in fU with ex = ey. Throws AxiomViolation unless f
// is idempotent.
Partition mfce_idempotent(const FiniteSupertropical& u, Index f);

// ---- additive relations through their data ----

// x ≠ 0 least in its Φ-class, as ghost ranks.
Subset L_of_phi(const FiniteBipotent& m, const Partition& phi);

struct AdditiveData {
  Partition phi;  // on ghost ranks
  // For each a in L(Φ) (a U index), a partition of u.fiber(a) in that order.
  std::vector<std::pair<Index, Partition>> fibers;
  bool operator==(const AdditiveData&) const = default;
};

// Throws PhiNotOrderCompatible, FiberMismatch.
Partition additive_from_data(const FiniteSupertropical& u, const AdditiveData& data);
// Throws AxiomViolation if e is not additive.
AdditiveData additive_to_data(const FiniteSupertropical& u, const Partition& e);

// ---- derived relations and sets ----

// F/E on the classes of E (class ids of E). Throws NotRefinement.
Partition quotient_relation(const Partition& e, const Partition& f);

// A(E) = {x : x ~ ex}.
Subset A_of(const FiniteSupertropical& u, const Partition& e);
// {x : x ~ z for some ghost z}.
Subset A_of_ghost_form(const FiniteSupertropical& u, const Partition& e);

// Relation from a block list given by element names.
Partition relation_from_names(const FiniteSupertropical& u, const std::vector<std::vector<std::string>>& blocks);

}  // namespace strop
