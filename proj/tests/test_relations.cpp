#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strop/corpus.hpp"
#include "strop/ideals.hpp"
#include "strop/quotient.hpp"
#include "strop/relations.hpp"

using namespace strop;

namespace {

const char* kCarriers[] = {"stb", "t5", "uv_z4", "uv_z8", "stb_chain3"};

}  // namespace

// The quotient engine agrees with building the quotient table directly,
// over every partition of the small corpus.
TEST(Quotient, AgreesWithDirectTable) {
  for (const char* name : kCarriers) {
    FiniteSupertropical u = finite_instance(name);
    oracle::Carrier raw = oracle::raw(u);
    std::size_t transmissive = 0;
    for_each_partition(u.size(), [&](const Partition& p) {
      QuotientResult q = quotient_by_relation(u, p);
      auto direct = oracle::quotient(raw, p.labels());
      ASSERT_EQ(q.transmissive, direct.has_value()) << name << " " << format_blocks(p, u.names());
      if (!q.transmissive) return;
      ++transmissive;
      EXPECT_EQ(q.carrier.size(), direct->n);
      EXPECT_EQ(kernel(q.pi), p);
      for (Index x = 0; x < u.size(); ++x)
        for (Index y = 0; y < u.size(); ++y)
          EXPECT_EQ(q.carrier.mul(q.pi.map[x], q.pi.map[y]), q.pi.map[u.mul(x, y)]);
    });
    EXPECT_GT(transmissive, 1u) << name;
  }
}

TEST(Quotient, SufficientConditions) {
  for (const char* name : kCarriers) {
    FiniteSupertropical u = finite_instance(name);
    for_each_partition(u.size(), [&](const Partition& p) {
      auto cls = classify_relation(u, p);
      bool transmissive = quotient_by_relation(u, p).transmissive;
      if (cls.te.holds && cls.ghost_cancellative.holds) {
        EXPECT_TRUE(transmissive) << name;
      }
      if (cls.homomorphic.holds) {
        EXPECT_TRUE(transmissive) << name;
      }
      // Transmissive relations are multiplicative.
      if (transmissive) {
        EXPECT_TRUE(cls.multiplicative.holds);
      }
    });
  }
}

TEST(Classify, NonConvexGhostClass) {
  FiniteSupertropical u = t5();
  Partition e = relation_from_names(u, {{"0", "1"}, {"a"}, {"a^"}, {"1^"}});
  auto cls = classify_relation(u, e);
  EXPECT_FALSE(cls.order_compatible_on_M.holds);
  EXPECT_FALSE(cls.order_compatible_on_M.witness.empty());
  EXPECT_FALSE(quotient_by_relation(u, e).transmissive);
}

TEST(Classify, IdentityAndTotal) {
  for (const char* name : kCarriers) {
    FiniteSupertropical u = finite_instance(name);
    auto id = classify_relation(u, Partition::identity(u.size()));
    EXPECT_TRUE(id.te.holds && id.homomorphic.holds) << name;
    // Total relation: the one-point carrier, as the direct table says.
    QuotientResult all = quotient_by_relation(u, Partition::all(u.size()));
    EXPECT_EQ(all.transmissive, oracle::quotient(oracle::raw(u), Partition::all(u.size()).labels()).has_value()) << name;
    if (all.transmissive) {
      EXPECT_EQ(all.carrier.size(), 1u) << name;
    }
  }
}

// Blocks: sat(a) and singletons; oracle saturation.
TEST(Relations, RelationOfIdeal) {
  for (const char* name : kCarriers) {
    FiniteSupertropical u = finite_instance(name);
    oracle::Carrier raw = oracle::raw(u);
    for (const auto& a : oracle::ideals(raw)) {
      Partition e = rel_of_ideal(u, a);
      Subset sat = oracle::saturate(raw, a);
      for (Index x = 0; x < u.size(); ++x)
        for (Index y = 0; y < u.size(); ++y) {
          bool expect = x == y || (oracle::contains(sat, x) && oracle::contains(sat, y));
          EXPECT_EQ(e.related(x, y), expect) << name;
        }
      EXPECT_TRUE(pushout_criterion(u, e)) << name;
    }
  }
}

TEST(Relations, MfceClosureStaysInFibers) {
  FiniteSupertropical u = t5();
  Index a = u.index_of("a"), a_t = u.index_of("a^"), one_t = u.index_of("1^");
  Partition e = mfce_closure(u, std::vector<std::pair<Index, Index>>{{a, a_t}});
  EXPECT_TRUE(e.related(a, a_t));
  EXPECT_FALSE(e.related(a, one_t));
  auto cls = classify_relation(u, e);
  EXPECT_TRUE(cls.multiplicative.holds && cls.fiber_conserving.holds);
  try {
    mfce_closure(u, std::vector<std::pair<Index, Index>>{{a, one_t}});
    FAIL() << "fiber violation accepted";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::FiberViolation);
  }
}

// Additive relations are recovered from (Φ, fiber partitions).
TEST(Relations, AdditiveDataRoundTrip) {
  for (const char* name : {"stb", "t5", "uv_z4"}) {
    FiniteSupertropical u = finite_instance(name);
    oracle::Carrier raw = oracle::raw(u);
    std::size_t additive = 0;
    for_each_partition(u.size(), [&](const Partition& p) {
      // Oracle: π(x + y) class depends only on the classes of x and y.
      bool add_ok = true;
      for (Index x = 0; x < u.size(); ++x)
        for (Index x2 = 0; x2 < u.size(); ++x2)
          for (Index y = 0; y < u.size(); ++y)
            if (p.related(x, x2) && !p.related(oracle::add(raw, x, y), oracle::add(raw, x2, y))) add_ok = false;
      EXPECT_EQ(classify_relation(u, p).additive.holds, add_ok) << name;
      if (!add_ok) return;
      ++additive;
      AdditiveData d = additive_to_data(u, p);
      EXPECT_EQ(additive_from_data(u, d), p) << name;
    });
    EXPECT_GT(additive, 0u);
  }
}

TEST(Relations, InitialGammaRule) {
  FiniteSupertropical u = t5();
  FiniteBipotent m = u.ghost_bipotent();
  // nil3 -> Boolean, a -> 0.
  FiniteGhostHom g{m, FiniteBipotent::boolean(), {0, 0, 1}, true};
  ASSERT_TRUE(validate_ghost_hom(g).ok());
  Partition e = rel_initial_gamma(u, g);
  EXPECT_EQ(e, relation_from_names(u, {{"0", "a", "a^"}, {"1"}, {"1^"}}));
  auto cls = classify_relation(u, e);
  EXPECT_TRUE(cls.te.holds && cls.ghost_cancellative.holds);
}
