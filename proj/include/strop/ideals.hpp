#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strop/supertropical.hpp"

namespace strop {

// ---- finite carriers ----

// Contains 0 and U·𝔞 ⊆ 𝔞 (closure under sums then follows).
bool is_ideal(const FiniteSupertropical& u, const Subset& a);
// {x : ex ≤ c for some c in e𝔞}. Throws NotIdeal.
Subset saturate(const FiniteSupertropical& u, const Subset& a);
bool is_saturated(const FiniteSupertropical& u, const Subset& a);

struct PrimeCheck {
  bool prime = false;
  std::optional<std::pair<Index, Index>> witness;  // x, y outside with xy inside
  // When e ∉ 𝔞: the criterion "e𝔞 prime in M and ν⁻¹(e𝔞) ⊆ 𝔞".
  std::optional<bool> ghost_criterion;
};

PrimeCheck is_prime(const FiniteSupertropical& u, const Subset& a);

// {x : ex^n ∈ 𝔞 for some n}. Throws NotSaturated, NotProper.
Subset radical(const FiniteSupertropical& u, const Subset& a);
// {x : x^n ∈ 𝔞 for some n}, by power iteration with cycle detection.
Subset radical_e_free(const FiniteSupertropical& u, const Subset& a);

enum class IdealFilter { All, Saturated, Prime };

// Subset scan in order of the bit mask. Prime means proper and prime.
// Throws TooLarge above `bound`.
std::vector<Subset> enumerate_ideals(const FiniteSupertropical& u, IdealFilter filter, std::size_t bound = 10);

struct PhiIdeals {
  Subset a_phi;    // {x : ex ~Φ 0}
  Subset big_a;    // M ∪ 𝔞_Φ
};
// Φ on ghost ranks. Throws PhiNotHomomorphic.
PhiIdeals phi_ideals(const FiniteSupertropical& u, const Partition& phi);

// [0]_E for a TE-relation. Throws NotTE.
Subset zero_class_ideal(const FiniteSupertropical& u, const Partition& e);

// {x : ex ∈ 𝔠} for 𝔠 a set of ghost indices.
Subset ghost_preimage(const FiniteSupertropical& u, const Subset& c);
// e𝔞 = 𝔞 ∩ M (U indices).
Subset ghost_part(const FiniteSupertropical& u, const Subset& a);

Subset subset_from_names(const FiniteSupertropical& u, const std::vector<std::string>& names);
std::string format_subset(const FiniteSupertropical& u, const Subset& s);

// ---- the unit interval ----

// [0, θ] or [0, θ) in UnitIntervalMul.
struct IntervalIdeal {
  Rational theta;
  bool closed = true;
  bool contains(const Rational& x) const { return closed ? x <= theta : x < theta; }
  std::string format() const;
};

// Lower sets are saturated in a ghost carrier: returns the input.
IntervalIdeal saturate(const IntervalIdeal& a);

struct IntervalPrimeCheck {
  bool prime = false;
  std::optional<std::pair<Rational, Rational>> witness;
};
// Proper lower sets other than {0} and [0,1) are not prime. The witness is
// x = y = p/q outside the ideal with x^2 inside, taking the first
// denominator q = 2, 3, ... that admits one and the least such p.
IntervalPrimeCheck is_prime(const IntervalIdeal& a);

// √[0,θ] = [0,1) for θ in (0,1); {0} stays {0}.
IntervalIdeal radical(const IntervalIdeal& a);

// Classes of E([0,θ]) : the ideal and singletons.
bool interval_related(const IntervalIdeal& a, const Rational& x, const Rational& y);

// The quotient M/E(𝔞) as a truncated interval carrier.
TruncatedInterval interval_quotient(const IntervalIdeal& a);
// x if x is outside 𝔞, else 0.
Rational interval_projection(const IntervalIdeal& a, const Rational& x);

// ---- ℕ₀ with max and product ----

// The largest saturated proper ideal {x : x < 1} and the maximal ideal
// M∖{1}, with membership predicates.
bool natural_in_saturated_maximal(const Integer& x);
bool natural_in_maximal(const Integer& x);

}  // namespace strop
