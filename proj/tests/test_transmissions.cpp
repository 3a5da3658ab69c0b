#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "strop/checks.hpp"
#include "strop/corpus.hpp"
#include "strop/quotient.hpp"

using namespace strop;

TEST(Transmissions, EnumerationMatchesOracle) {
  std::vector<NamedCarrier> small;
  for (const auto& c : finite_corpus())
    if (c.carrier.size() <= 5) small.push_back(c);
  for (const auto& u : small)
    for (const auto& w : small) {
      std::set<std::vector<Index>> lib, brute;
      for (const auto& a : enumerate_transmissions(u.carrier, w.carrier)) {
        EXPECT_TRUE(validate_transmission(a).ok());
        lib.insert(a.map);
      }
      for (auto& f : oracle::transmissions(oracle::raw(u.carrier), oracle::raw(w.carrier))) brute.insert(f);
      EXPECT_EQ(lib, brute) << u.name << " -> " << w.name;
    }
}

TEST(Transmissions, IdentityCompositionKernel) {
  FiniteSupertropical u = t5();
  FiniteTransmission id = identity_transmission(u);
  EXPECT_TRUE(validate_transmission(id).ok());
  EXPECT_TRUE(is_bijective(id));
  EXPECT_TRUE(is_homomorphism(id));
  FiniteTransmission nu = ghost_map(u);
  EXPECT_TRUE(validate_transmission(nu).ok());
  EXPECT_EQ(compose(nu, id).map, nu.map);
  EXPECT_EQ(kernel(nu), Partition::kernel(u.size(), [&](Index x) { return u.companion(x); }));
}

// Homomorphism oracle: α(x+y) = α(x)+α(y) on every pair.
TEST(Transmissions, AdditivityMatchesOracle) {
  FiniteSupertropical u = t5();
  oracle::Carrier raw = oracle::raw(u);
  for (const auto& c : finite_corpus()) {
    if (c.carrier.size() > 5) continue;
    oracle::Carrier w = oracle::raw(c.carrier);
    for (const auto& a : enumerate_transmissions(u, c.carrier)) {
      bool additive = true;
      for (Index x = 0; x < u.size(); ++x)
        for (Index y = 0; y < u.size(); ++y)
          if (a.map[oracle::add(raw, x, y)] != oracle::add(w, a.map[x], a.map[y])) additive = false;
      EXPECT_EQ(is_homomorphism(a), additive);
    }
  }
}

TEST(Initial, SurjectiveOntoBoolean) {
  FiniteSupertropical u = t5();
  FiniteGhostHom g{u.ghost_bipotent(), FiniteBipotent::boolean(), {0, 0, 1}, true};
  InitialTransmission init = initial_transmission(u, g);
  EXPECT_EQ(init.path, "surjective");
  EXPECT_EQ(init.carrier.size(), 3u);
  EXPECT_TRUE(validate_transmission(init.alpha).ok());
  auto report = verify_pushout(init.alpha, generate_challenges(init.alpha, challenge_targets()));
  EXPECT_FALSE(report.outcomes.empty());
  EXPECT_TRUE(report.ok());
}

TEST(Initial, NilpotentGhostCannotMapToOne) {
  FiniteSupertropical u = t5();
  FiniteBipotent m = u.ghost_bipotent();
  FiniteGhostHom g{m, FiniteBipotent::boolean(), {0, 1, 1}, true};
  EXPECT_FALSE(validate_ghost_hom(g).ok());  // a·a = 0 but 1·1 = 1
}

TEST(Initial, GhostExtensionPath) {
  FiniteSupertropical u = finite_instance("stb_chain3");
  FiniteBipotent m = u.ghost_bipotent();
  // Idempotent 4-chain; the image of m is chain3, which is not cancellative.
  FiniteBipotent chain4 = FiniteBipotent::from_rows(
      {"0", "a", "b", "1"}, {{0, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 2, 2}, {0, 1, 2, 3}}, {0, 1, 2, 3}, 3);
  FiniteGhostHom g{m, chain4, {}, false};
  for (Index r = 0; r < m.size(); ++r) g.map.push_back(chain4.index_of(m.name(r)));
  ASSERT_TRUE(validate_ghost_hom(g).ok());
  InitialTransmission init = initial_transmission(u, g);
  EXPECT_EQ(init.path, "extension");
  EXPECT_EQ(init.carrier.size(), u.size() + 1);
  auto report = verify_pushout(init.alpha, generate_challenges(init.alpha, challenge_targets()));
  EXPECT_TRUE(report.ok());

  // Cancellative image {0,1}: composite path.
  FiniteSupertropical s = stb();
  FiniteGhostHom h{s.ghost_bipotent(), chain3(), {chain3().index_of("0"), chain3().index_of("1")}, false};
  EXPECT_EQ(initial_transmission(s, h).path, "composite");
}

// Every surjective transmission factors through its kernel by an
// isomorphism.
TEST(Factorization, SurjectiveThroughKernel) {
  for (const auto& c : finite_corpus()) {
    if (c.carrier.size() > 5) continue;
    for (const auto& w : finite_corpus()) {
      if (w.carrier.size() > 4) continue;
      for (const auto& a : enumerate_transmissions(c.carrier, w.carrier)) {
        if (!is_surjective(a)) continue;
        auto rho = factor_surjective(a);
        ASSERT_TRUE(rho) << c.name << " -> " << w.name;
        EXPECT_TRUE(is_bijective(*rho));
      }
    }
  }
}

TEST(Pushout, CriterionWitness) {
  FiniteSupertropical u = t5();
  Witness w;
  Partition e = relation_from_names(u, {{"0"}, {"a", "a^"}, {"1"}, {"1^"}});
  // a^ ~ a with a^ tangible and not ~ 0.
  EXPECT_FALSE(pushout_criterion(u, e, &w));
  EXPECT_FALSE(w.empty());
}
