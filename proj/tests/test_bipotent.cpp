#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strop/bipotent.hpp"
#include "strop/partition.hpp"

using namespace strop;

TEST(Partitions, CountMatchesBellAndOracle) {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (std::size_t n = 0; n < 8; ++n) {
    EXPECT_EQ(bell_number(n), bell[n]);
    std::vector<std::vector<std::size_t>> seen;
    for_each_partition(n, [&](const Partition& p) { seen.push_back(p.labels()); });
    EXPECT_EQ(seen.size(), bell[n]);
    auto expected = oracle::partitions(n);
    std::sort(seen.begin(), seen.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(seen, expected) << "n = " << n;
  }
}

TEST(Partitions, RejectsMoreThanTen) {
  EXPECT_THROW(for_each_partition(11, [](const Partition&) {}), Error);
}

TEST(Partitions, MeetAndRefinement) {
  Partition a = Partition::from_labels({0, 0, 1, 1});
  Partition b = Partition::from_labels({0, 1, 1, 0});
  Partition m = a.meet(b);
  EXPECT_TRUE(m.is_identity());
  EXPECT_TRUE(m.refines(a));
  EXPECT_FALSE(a.refines(b));
  EXPECT_THROW(Partition::from_blocks(3, {{0, 1}}), Error);
}

TEST(Bipotent, BooleanChain3AndNil3Validate) {
  EXPECT_TRUE(validate_bipotent(FiniteBipotent::boolean()).ok());
  auto rep = validate_bipotent(chain3());
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.find("associative")->checked, 27u);
  EXPECT_TRUE(validate_bipotent(nil3()).ok());
}

TEST(Bipotent, PatchedChain3FailsWithWitness) {
  FiniteBipotent m = chain3();
  Index a = m.index_of("a"), one = m.index_of("1");
  m.set_entry(a, one, one);
  m.set_entry(one, a, one);
  auto rep = validate_bipotent(m);
  ASSERT_FALSE(rep.ok());
  EXPECT_FALSE(rep.first_failure()->witness.empty());
}

TEST(Bipotent, EnumerationCountsMatchOracle) {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto all = enumerate_bipotent(n);
    EXPECT_EQ(all.size(), oracle::count_bipotent(n)) << "n = " << n;
    for (const auto& m : all) EXPECT_TRUE(validate_bipotent(m).ok());
  }
}

TEST(Bipotent, ExactVariantOperations) {
  RationalMaxPlus q;
  EXPECT_EQ(*bip_add(q, RationalMaxPlus::value_type(make_rational(3, 2)), RationalMaxPlus::value_type(Rational(2))),
            Rational(2));
  UnitIntervalMul i;
  EXPECT_EQ(i.mul(make_rational(3, 4), make_rational(3, 4)), make_rational(9, 16));
  FiniteBipotent c = chain3();
  EXPECT_EQ(c.mul(c.index_of("a"), c.index_of("1")), c.index_of("a"));
}

TEST(Bipotent, SampledVariantsValidate) {
  SampleConfig cfg;
  EXPECT_TRUE(validate_bipotent(RationalMaxPlus{}, cfg).ok());
  EXPECT_TRUE(validate_bipotent(LexPower(2), cfg).ok());
  EXPECT_TRUE(validate_bipotent(UnitIntervalMul{}, cfg).ok());
  EXPECT_EQ(validate_bipotent(UnitIntervalMul{}, cfg).find("associative")->checked, cfg.samples);
}

TEST(Bipotent, Cancellativity) {
  auto c = is_cancellative(chain3());
  ASSERT_FALSE(c.cancellative);
  const auto& w = *c.witness;
  FiniteBipotent m = chain3();
  EXPECT_EQ(m.mul(w[0], w[2]), m.mul(w[1], w[2]));
  EXPECT_NE(w[0], w[1]);
  EXPECT_TRUE(is_cancellative(FiniteBipotent::boolean()).cancellative);
  auto q = is_cancellative(RationalMaxPlus{});
  EXPECT_TRUE(q.cancellative);
  EXPECT_EQ(q.proof, "by-construction");
}

// Oracle: brute-force search for xz = yz, z != 0, x != y.
TEST(Bipotent, CancellativityAgreesWithSearch) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& m : enumerate_bipotent(n)) {
      bool found = false;
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
          for (Index z = 1; z < n; ++z)
            if (x != y && m.mul(x, z) == m.mul(y, z)) found = true;
      EXPECT_EQ(is_cancellative(m).cancellative, !found);
    }
}

TEST(Bipotent, QuotientByPhi) {
  FiniteBipotent m = chain3();
  Index zero = m.index_of("0"), a = m.index_of("a"), one = m.index_of("1");
  auto q = quotient_bipotent(m, Partition::from_blocks(3, {{zero}, {a, one}}));
  EXPECT_EQ(q.carrier.size(), 2u);
  EXPECT_TRUE(validate_bipotent(q.carrier).ok());
  EXPECT_TRUE(is_cancellative(q.carrier).cancellative);
  try {
    quotient_bipotent(m, Partition::from_blocks(3, {{zero, one}, {a}}));
    FAIL() << "non-convex class accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotOrderCompatible);
  }
}

TEST(Bipotent, GhostHomsAndConvexProjection) {
  FiniteBipotent m = chain3();
  FiniteGhostHom id = identity_hom(m);
  EXPECT_TRUE(validate_ghost_hom(id).ok());
  EXPECT_TRUE(is_injective(id) && is_surjective(id));
  FiniteGhostHom bad{m, FiniteBipotent::boolean(), {0, 1, 0}};
  EXPECT_FALSE(validate_ghost_hom(bad).ok());
  auto proj = convex_projection(LexPower(2), 1);
  EXPECT_TRUE(validate_ghost_hom(proj).ok());
  EXPECT_THROW(convex_projection(LexPower(2), 2), Error);
}
