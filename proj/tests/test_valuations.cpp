#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strop/corpus.hpp"
#include "strop/exact.hpp"
#include "strop/valuations.hpp"

using namespace strop;

TEST(Rings, ZmodValidates) {
  for (std::size_t n : {2, 4, 6, 8}) EXPECT_TRUE(validate_ring(FiniteRing::zmod(n)).ok());
  FiniteRing r = FiniteRing::zmod(4);
  r.mul[1 * 4 + 1] = 2;
  EXPECT_FALSE(validate_ring(r).ok());
}

// Every map Z/n -> M is tested against the brute-force definition.
TEST(MValuations, AllMapsAgreeWithOracle) {
  for (std::size_t n : {4, 6})
    for (const auto& target : {FiniteBipotent::boolean(), chain3(), nil3()}) {
      FiniteRing r = FiniteRing::zmod(n);
      std::vector<Index> f(n, 0);
      std::size_t accepted = 0;
      for (;;) {
        FiniteMValuation v{r, target, f};
        bool lib = validate_m_valuation(v).ok();
        EXPECT_EQ(lib, oracle::is_m_valuation(v));
        accepted += lib;
        std::size_t i = 0;
        while (i < n && ++f[i] == target.size()) f[i++] = 0;
        if (i == n) break;
      }
      EXPECT_GT(accepted, 0u);
    }
}

TEST(MValuations, ZmodIntoBoolean) {
  FiniteMValuation v = zmod_valuation(4, 2);
  EXPECT_TRUE(validate_m_valuation(v).ok());
  EXPECT_EQ(support(v), (Subset{0, 2}));
  EXPECT_TRUE(support_is_prime(v));
  EXPECT_TRUE(is_valuation(v));
}

TEST(Covers, UvZ4AndZ8) {
  Cover c4 = uv_z4();
  EXPECT_TRUE(validate_supertropical(c4.carrier).ok());
  EXPECT_TRUE(validate_supervaluation(c4.phi).ok());
  EXPECT_TRUE(is_surjective(c4.phi));
  EXPECT_TRUE(is_tangible(c4.phi));
  Cover c8 = uv_z8();
  EXPECT_EQ(c8.carrier.size(), 6u);
  EXPECT_TRUE(validate_supertropical(c8.carrier).ok());
  // The covered valuation is the one we started from.
  FiniteMValuation back = covered_valuation(c4.phi);
  EXPECT_EQ(back.map, zmod_valuation(4, 2).map);
}

TEST(Covers, DominanceOfCoverOverItself) {
  Cover c = uv_z4();
  auto d = dominance(c.phi, c.phi);
  ASSERT_TRUE(d.alpha);
  EXPECT_TRUE(is_bijective(*d.alpha));
  EXPECT_TRUE(equivalent(c.phi, c.phi));
}

TEST(Covers, TangibleCoversAreValid) {
  FiniteMValuation v = zmod_valuation(4, 2);
  auto covers = tangible_covers(v);
  ASSERT_FALSE(covers.empty());
  for (const auto& phi : covers) {
    EXPECT_TRUE(validate_supervaluation(phi).ok());
    EXPECT_TRUE(is_tangible(phi));
    EXPECT_EQ(covered_valuation(phi).map.size(), 4u);
  }
}

TEST(RuleValuations, RankTwoLaurentValues) {
  auto v = laurent_rank2_valuation();
  RatFunc t = RatFunc::t_power(1);
  auto vt = *v.map(t);
  EXPECT_EQ(vt, (std::vector<Rational>{Rational(-1), Rational(0)}));
  auto v2 = *v.map(RatFunc::constant(Rational(2)));
  EXPECT_EQ(v2, (std::vector<Rational>{Rational(0), Rational(-1)}));
  EXPECT_FALSE(v.map(RatFunc()).has_value());
  SampleConfig cfg;
  cfg.samples = 1000;
  EXPECT_TRUE(validate_m_valuation(v, cfg).ok());
  EXPECT_TRUE(validate_supertropical_sampled(CoverCarrier(v), cfg).ok());
}

TEST(RuleValuations, PadicValues) {
  auto v = padic_valuation(3);
  EXPECT_EQ(*v.map(Rational(9)), Rational(-2));
  EXPECT_EQ(*v.map(make_rational(1, 3)), Rational(1));
  EXPECT_TRUE(validate_m_valuation(v).ok());
}

TEST(Polynomials, GcdAndReduction) {
  Poly a({Rational(-1), Rational(0), Rational(1)});  // t^2 - 1
  Poly b({Rational(1), Rational(1)});                // t + 1
  EXPECT_EQ(poly_gcd(a, b), b);
  RatFunc f(a, b);
  EXPECT_EQ(f.num(), Poly({Rational(-1), Rational(1)}));
  EXPECT_EQ(f.den(), Poly::constant(Rational(1)));
  auto d = divmod(a, Poly({Rational(0), Rational(2)}));
  EXPECT_EQ(d.quotient, Poly({Rational(0), make_rational(1, 2)}));
  EXPECT_EQ(d.remainder, Poly::constant(Rational(-1)));
  EXPECT_EQ(f * f.inverse(), RatFunc::constant(Rational(1)));
}
