#include "strop/corpus.hpp"

#include <cstdlib>

namespace strop {

FiniteSupertropical stb() { return tangible_double(FiniteBipotent::boolean()); }

FiniteSupertropical t5() { return tangible_double(nil3()); }

FiniteSupertropical d_chain3_table() { return materialize(doubled(chain3())); }

FiniteMValuation zmod_valuation(std::size_t n, std::size_t p) {
  require(p >= 1 && n % p == 0, ErrorKind::Malformed, "support generator must divide n");
  FiniteMValuation v{FiniteRing::zmod(n), FiniteBipotent::boolean(), {}};
  for (std::size_t a = 0; a < n; ++a) v.map.push_back(a % p == 0 ? 0 : 1);
  return v;
}

Cover uv_z4() { return construct_cover(zmod_valuation(4, 2)); }

Cover uv_z8() { return construct_cover(zmod_valuation(8, 2)); }

GhostExtension stb_into_chain3() {
  FiniteSupertropical u = stb();
  FiniteBipotent big = chain3();
  // Boolean {0, 1} onto {0, 1} of chain3.
  FiniteGhostHom emb{u.ghost_bipotent(), big, {big.index_of("0"), big.index_of("1")}};
  return ghost_extension(u, emb);
}

Constructed<LexPower> lex2() { return doubled(LexPower(2)); }

IntervalIdeal interval_ideal(const Rational& theta, bool closed) {
  require(theta >= 0 && theta <= 1, ErrorKind::Malformed, "theta must lie in [0,1]");
  return IntervalIdeal{theta, closed};
}

std::vector<NamedCarrier> finite_corpus() {
  return {{"stb", stb()},
          {"t5", t5()},
          {"uv_z4", uv_z4().carrier},
          {"uv_z8", uv_z8().carrier},
          {"stb_chain3", stb_into_chain3().carrier},
          {"chain3_ghost", FiniteSupertropical::ghost_only(chain3())},
          {"nil3_ghost", FiniteSupertropical::ghost_only(nil3())}};
}

FiniteSupertropical finite_instance(const std::string& name) {
  for (auto& c : finite_corpus())
    if (c.name == name) return c.carrier;
  fail(ErrorKind::ForeignElement, "no corpus carrier named '" + name + "'");
}

std::string corpus_dir() {
  if (const char* env = std::getenv("STROP_CORPUS")) return env;
  return STROP_SOURCE_CORPUS;
}

}  // namespace strop
