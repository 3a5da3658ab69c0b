#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strop/corpus.hpp"
#include "strop/supertropical.hpp"

using namespace strop;

namespace {

std::vector<FiniteBipotent> bipotents_upto(std::size_t n) {
  std::vector<FiniteBipotent> out;
  for (std::size_t k = 2; k <= n; ++k)
    for (auto& m : enumerate_bipotent(k)) out.push_back(std::move(m));
  return out;
}

// Injective order- and product-preserving maps m -> n.
std::vector<std::vector<Index>> embeddings(const FiniteBipotent& m, const FiniteBipotent& n) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> f(m.size(), 0);
  for (;;) {
    bool ok = f[m.zero()] == n.zero() && f[m.one()] == n.one();
    for (Index x = 0; ok && x < m.size(); ++x)
      for (Index y = 0; ok && y < m.size(); ++y) {
        ok = f[m.mul(x, y)] == n.mul(f[x], f[y]);
        if (ok && x != y) ok = f[x] != f[y];
        if (ok && m.leq(x, y)) ok = n.leq(f[x], f[y]);
      }
    if (ok) out.push_back(f);
    std::size_t i = 0;
    while (i < f.size() && ++f[i] == n.size()) f[i++] = 0;
    if (i == f.size()) break;
  }
  return out;
}

oracle::Table table(const FiniteBipotent& m) {
  oracle::Table t(m.size(), std::vector<Index>(m.size()));
  for (Index x = 0; x < m.size(); ++x)
    for (Index y = 0; y < m.size(); ++y) t[x][y] = m.mul(x, y);
  return t;
}

}  // namespace

TEST(Supertropical, CorpusPassesLibraryAndOracle) {
  for (const auto& c : finite_corpus()) {
    EXPECT_TRUE(validate_supertropical(c.carrier).ok()) << c.name;
    EXPECT_FALSE(oracle::semiring_violation(oracle::raw(c.carrier))) << c.name;
  }
}

TEST(Supertropical, T5ChecksAllTriples) {
  auto rep = validate_supertropical(t5());
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.find("distributive")->checked, 125u);
}

TEST(Supertropical, DoubledChain3IsNotDistributive) {
  auto rep = validate_supertropical(d_chain3_table());
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.first_failure()->axiom, "distributive");
  auto v = oracle::semiring_violation(oracle::raw(d_chain3_table()));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->law, "distributive");
  EXPECT_THROW(tangible_double(chain3()), Error);
}

// Every single-entry change of t5's table: the library rejects with a
// witness exactly when the oracle finds a violation.
TEST(Supertropical, MutationsOfT5) {
  FiniteSupertropical base = t5();
  std::size_t mutants = 0, rejected = 0;
  for (Index x = 0; x < base.size(); ++x)
    for (Index y = 0; y < base.size(); ++y)
      for (Index z = 0; z < base.size(); ++z) {
        if (z == base.mul(x, y)) continue;
        FiniteSupertropical m = base;
        m.set_entry(x, y, z);
        ++mutants;
        auto rep = validate_supertropical(m);
        bool bad = oracle::semiring_violation(oracle::raw(m)).has_value();
        EXPECT_EQ(!rep.ok(), bad) << x << "*" << y << "=" << z;
        if (!rep.ok()) {
          ++rejected;
          EXPECT_FALSE(rep.first_failure()->witness.empty());
        }
      }
  EXPECT_EQ(mutants, 100u);
  EXPECT_EQ(rejected, 100u);
}

TEST(Supertropical, TangibleDoubleMatchesOracle) {
  for (const auto& m : bipotents_upto(4)) {
    FiniteSupertropical d;
    bool built = true;
    try {
      d = tangible_double(m);
    } catch (const Error&) {
      built = false;
    }
    // Oracle: 0, ghosts, then one tangible over each nonzero ghost; a
    // tangible product is tangible unless it is 0.
    std::size_t k = m.size(), n = 2 * k - 1;
    oracle::Carrier c;
    c.n = n;
    auto ghost = [&](Index r) { return r; };  // M index r, rank order
    auto tangible = [&](Index r) { return k + r - 1; };
    auto base = [&](Index x) { return x < k ? x : x - k + 1; };
    c.mul.assign(n, std::vector<Index>(n));
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        Index g = m.mul(m.at_rank(base(x)), m.at_rank(base(y)));
        Index r = m.rank(g);
        c.mul[x][y] = (x >= k && y >= k && r != 0) ? tangible(r) : ghost(r);
      }
    for (Index r = 0; r < k; ++r) c.ghosts.push_back(r);
    c.e = m.rank(m.one());
    c.one = tangible(c.e);
    bool valid = !oracle::semiring_violation(c);
    EXPECT_EQ(built, valid);
    if (built) {
      EXPECT_EQ(d.size(), n);
    }
  }
}

TEST(Supertropical, ProjectionConstructor) {
  ProjectionData d;
  d.ghosts = FiniteBipotent::boolean();
  auto s = FiniteMonoidWithZero::cyclic_group(3);
  // Tangibles: (1, g) for each group element g.
  for (Index g = 0; g < s.size(); ++g)
    if (g != s.zero) d.tangible_names.push_back("1." + s.names[g]);
  std::size_t k = d.ghosts.size(), n = d.size();
  auto tag = [&](Index t) {
    Index g = 0, seen = 0;
    for (Index i = 0; i < s.size(); ++i)
      if (i != s.zero && seen++ == t) g = i;
    return g;
  };
  auto index_of_tag = [&](Index g) {
    Index seen = 0;
    for (Index i = 0; i < s.size(); ++i) {
      if (i == g) return k + seen;
      if (i != s.zero) ++seen;
    }
    return Index(0);
  };
  d.mul.assign(n * n, 0);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      Index gx = x < k ? x : d.ghosts.one(), gy = y < k ? y : d.ghosts.one();
      Index g = d.ghosts.mul(gx, gy);
      Index v = g;
      if (x >= k && y >= k) v = index_of_tag(s.at(tag(x - k), tag(y - k)));
      d.mul[x * n + y] = v;
    }
  d.one = index_of_tag(s.one);
  d.p.resize(n);
  for (Index x = 0; x < n; ++x) d.p[x] = x < k ? x : d.ghosts.one();
  FiniteSupertropical u = construct_from_projection(d);
  EXPECT_EQ(u.size(), n);
  EXPECT_TRUE(validate_supertropical(u).ok());
  EXPECT_FALSE(oracle::semiring_violation(oracle::raw(u)));
  d.p[k] = 0;  // p^-1(0) must be {0}
  EXPECT_THROW(construct_from_projection(d), Error);
}

TEST(Supertropical, SampledExactCarriers) {
  SampleConfig cfg;
  EXPECT_TRUE(validate_supertropical_sampled(lex2(), cfg).ok());
  EXPECT_TRUE(validate_supertropical_sampled(doubled(RationalMaxPlus{}), cfg).ok());
  EXPECT_TRUE(validate_projection_hypotheses(lex2(), cfg).ok());
  auto rep = validate_supertropical_sampled(lex2(), cfg);
  EXPECT_EQ(rep.find("distributive")->checked, 10000u);
  EXPECT_EQ(rep.seed, 42u);
}

TEST(Supertropical, T5Stabilizer) {
  FiniteSupertropical u = t5();
  Subset s = mult_stabilizer(u);
  EXPECT_EQ(s, oracle::stabilizer(oracle::raw(u)));
  EXPECT_EQ(s, Subset{u.index_of("1^")});
  EXPECT_EQ(mult_stabilizer_symbolic(lex2()), "all tangibles");
}

// The ghost extension agrees with the direct table whenever that table is
// a semiring, and is refused otherwise.
TEST(GhostExtension, MatchesOracleOnSmallEmbeddings) {
  std::size_t built = 0, refused = 0;
  for (const auto& c : finite_corpus()) {
    if (c.carrier.size() > 5) continue;
    FiniteBipotent m = c.carrier.ghost_bipotent();
    oracle::Carrier u = oracle::raw(c.carrier);
    for (const auto& n : bipotents_upto(std::min<std::size_t>(m.size() + 1, 4)))
      for (const auto& f : embeddings(m, n)) {
        auto expect = oracle::ghost_extension(u, table(n), n.order(), f);
        bool valid = !oracle::semiring_violation(expect.carrier);
        try {
          GhostExtension ext = ghost_extension(c.carrier, FiniteGhostHom{m, n, f, false});
          ++built;
          EXPECT_TRUE(valid) << c.name;
          // Same table under the index correspondence.
          std::vector<Index> to_lib(expect.carrier.n);
          for (Index x = 0; x < u.n; ++x) to_lib[x] = ext.inclusion[x];
          for (Index z = 0; z < n.size(); ++z) to_lib[expect.of_new[z]] = ext.ghost_index[z];
          for (Index x = 0; x < expect.carrier.n; ++x)
            for (Index y = 0; y < expect.carrier.n; ++y)
              EXPECT_EQ(ext.carrier.mul(to_lib[x], to_lib[y]), to_lib[expect.carrier.mul[x][y]]);
        } catch (const Error& e) {
          ++refused;
          EXPECT_EQ(e.kind(), ErrorKind::HypothesisViolation);
          EXPECT_FALSE(valid) << c.name;
        }
      }
  }
  EXPECT_GT(built, 0u);
  EXPECT_EQ(refused, 1u);
}

// t5 along nil3 -> {0 < u1 < u2 < 1}, u1^2 = 0, u1 u2 = u1, u2^2 = u2:
// a^(1^ + u2) = a^ but a^ 1^ + a^ u2 = a.
TEST(GhostExtension, NonDistributiveWitness) {
  FiniteBipotent big = FiniteBipotent::from_rows({"0", "u1", "u2", "1"},
                                                  {{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 2, 2}, {0, 1, 2, 3}},
                                                  {0, 1, 2, 3}, 3);
  ASSERT_TRUE(validate_bipotent(big).ok());
  FiniteSupertropical u = t5();
  FiniteBipotent m = u.ghost_bipotent();
  std::vector<Index> f = {0, 1, 3};
  oracle::Carrier c = oracle::raw(u);
  auto ext = oracle::ghost_extension(c, table(big), big.order(), f);
  Index a_t = u.index_of("a^"), one_t = u.index_of("1^"), u2 = ext.of_new[2];
  Index lhs = ext.carrier.mul[a_t][oracle::add(ext.carrier, one_t, u2)];
  Index rhs = oracle::add(ext.carrier, ext.carrier.mul[a_t][one_t], ext.carrier.mul[a_t][u2]);
  EXPECT_EQ(lhs, a_t);
  EXPECT_EQ(rhs, u.index_of("a"));
  try {
    ghost_extension(u, FiniteGhostHom{m, big, f, false});
    FAIL() << "non-distributive extension built";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisViolation);
  }
}

TEST(GhostExtension, StbIntoChain3) {
  GhostExtension ext = stb_into_chain3();
  EXPECT_EQ(ext.carrier.size(), 4u);
  EXPECT_TRUE(validate_supertropical(ext.carrier).ok());
}

TEST(Isomorphism, FindsRenamingAndRejectsLarge) {
  FiniteSupertropical u = t5();
  auto iso = find_isomorphism(u, u);
  ASSERT_TRUE(iso);
  for (Index x = 0; x < u.size(); ++x) EXPECT_EQ((*iso)[x], x);
  EXPECT_FALSE(find_isomorphism(u, stb()));
}
