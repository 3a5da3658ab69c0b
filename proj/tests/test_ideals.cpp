#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strop/corpus.hpp"
#include "strop/ideals.hpp"
#include "strop/relations.hpp"

using namespace strop;

TEST(Ideals, EnumerationMatchesOracle) {
  for (const auto& c : finite_corpus()) {
    oracle::Carrier raw = oracle::raw(c.carrier);
    auto all = enumerate_ideals(c.carrier, IdealFilter::All);
    EXPECT_EQ(all, oracle::ideals(raw)) << c.name;
    std::vector<Subset> sat, prime;
    for (const auto& a : all) {
      EXPECT_EQ(saturate(c.carrier, a), oracle::saturate(raw, a)) << c.name;
      if (oracle::saturate(raw, a) == a) sat.push_back(a);
      if (oracle::is_prime(raw, a)) prime.push_back(a);
      EXPECT_EQ(is_prime(c.carrier, a).prime, oracle::is_prime(raw, a)) << c.name;
      EXPECT_EQ(radical_e_free(c.carrier, a), oracle::radical(raw, a)) << c.name;
    }
    EXPECT_EQ(enumerate_ideals(c.carrier, IdealFilter::Saturated), sat) << c.name;
    EXPECT_EQ(enumerate_ideals(c.carrier, IdealFilter::Prime), prime) << c.name;
  }
}

TEST(Ideals, SaturatedIdealsFormAChain) {
  for (const auto& c : finite_corpus()) {
    auto sat = enumerate_ideals(c.carrier, IdealFilter::Saturated);
    for (const auto& a : sat)
      for (const auto& b : sat) EXPECT_TRUE(is_subset(a, b) || is_subset(b, a)) << c.name;
  }
}

// Radicals of proper saturated ideals are the least primes above them.
TEST(Ideals, RadicalIsMinimalPrime) {
  for (const auto& c : finite_corpus()) {
    oracle::Carrier raw = oracle::raw(c.carrier);
    auto primes = oracle::ideals(raw);
    std::erase_if(primes, [&](const Subset& p) { return !oracle::is_prime(raw, p); });
    for (const auto& a : enumerate_ideals(c.carrier, IdealFilter::Saturated)) {
      if (a.size() == c.carrier.size()) continue;
      Subset r = radical(c.carrier, a);
      EXPECT_TRUE(is_prime(c.carrier, r).prime) << c.name;
      for (const auto& p : primes)
        if (is_subset(a, p)) {
          EXPECT_TRUE(is_subset(r, p)) << c.name;
        }
    }
  }
}

TEST(Ideals, T5FrozenValues) {
  FiniteSupertropical u = t5();
  auto names = [&](std::vector<std::string> v) { return subset_from_names(u, v); };
  auto all = enumerate_ideals(u, IdealFilter::All);
  EXPECT_EQ(all.size(), 6u);
  EXPECT_EQ(enumerate_ideals(u, IdealFilter::Saturated),
            (std::vector<Subset>{names({"0"}), names({"0", "a", "a^"}), names({"0", "a", "1", "a^", "1^"})}));
  EXPECT_EQ(enumerate_ideals(u, IdealFilter::Prime),
            (std::vector<Subset>{names({"0", "a", "a^"}), names({"0", "a", "1", "a^"})}));
  EXPECT_EQ(radical(u, names({"0"})), names({"0", "a", "a^"}));
  auto zero = is_prime(u, names({"0"}));
  EXPECT_FALSE(zero.prime);
  ASSERT_TRUE(zero.witness);
  EXPECT_TRUE(oracle::contains(names({"0"}), u.mul(zero.witness->first, zero.witness->second)));
}

TEST(Ideals, ZeroClassOfTeRelation) {
  FiniteSupertropical u = t5();
  for (const auto& a : enumerate_ideals(u, IdealFilter::All)) {
    Partition e = rel_of_ideal(u, a);
    EXPECT_EQ(zero_class_ideal(u, e), saturate(u, a));
  }
  EXPECT_THROW(saturate(u, subset_from_names(u, {"a"})), Error);
}

TEST(Interval, PrimeAndRadical) {
  IntervalIdeal half = interval_ideal(make_rational(1, 2));
  auto p = is_prime(half);
  EXPECT_FALSE(p.prime);
  ASSERT_TRUE(p.witness);
  EXPECT_EQ(p.witness->first, make_rational(2, 3));
  EXPECT_EQ(p.witness->second, make_rational(2, 3));
  EXPECT_TRUE(half.contains(p.witness->first * p.witness->second));
  EXPECT_TRUE(is_prime(interval_ideal(Rational(0))).prime);
  IntervalIdeal r = radical(half);
  EXPECT_EQ(r.theta, Rational(1));
  EXPECT_FALSE(r.closed);
}

TEST(Interval, QuotientIsNotCancellative) {
  TruncatedInterval q = interval_quotient(interval_ideal(make_rational(1, 2)));
  EXPECT_TRUE(validate_bipotent(q).ok());
  auto c = is_cancellative(q);
  ASSERT_FALSE(c.cancellative);
  ASSERT_TRUE(c.witness);
  auto [x, y, z] = *c.witness;
  EXPECT_NE(x, y);
  EXPECT_NE(z, q.zero());
  EXPECT_EQ(q.mul(x, z), q.mul(y, z));
  EXPECT_EQ(q.mul(make_rational(3, 5), make_rational(7, 10)), q.mul(make_rational(7, 10), make_rational(7, 10)));
  EXPECT_EQ(q.mul(make_rational(3, 5), make_rational(7, 10)), Rational(0));
  EXPECT_EQ(q.mul(make_rational(9, 10), make_rational(9, 10)), make_rational(81, 100));
}

// Case rule: x⊙y = xy when xy > 1/2, else 0.
TEST(Interval, QuotientTableOnSamples) {
  IntervalIdeal half = interval_ideal(make_rational(1, 2));
  TruncatedInterval q = interval_quotient(half);
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    Rational x = interval_projection(half, rng.unit_open_closed(12));
    Rational y = interval_projection(half, rng.unit_open_closed(12));
    Rational xy = x * y;
    EXPECT_EQ(q.mul(x, y), xy > make_rational(1, 2) ? xy : Rational(0));
  }
}

TEST(Natural, MaximalIdeals) {
  EXPECT_TRUE(natural_in_saturated_maximal(Integer(0)));
  EXPECT_FALSE(natural_in_saturated_maximal(Integer(2)));
  EXPECT_TRUE(natural_in_maximal(Integer(2)));
  EXPECT_FALSE(natural_in_maximal(Integer(1)));
}
