#pragma once

#include <string>
#include <vector>

#include "strop/exact.hpp"
#include "strop/ideals.hpp"
#include "strop/valuations.hpp"

namespace strop {

// Built-in instances. The JSON files under corpus/ describe the same
// carriers and are checked against these.

FiniteSupertropical stb();          // D(Boolean): 0, 1, 1^
FiniteSupertropical t5();           // D(nil3): 0, a, 1, a^, 1^
// The doubled table over chain3 (a·a = a). Not distributive.
FiniteSupertropical d_chain3_table();
FiniteMValuation zmod_valuation(std::size_t n, std::size_t p);  // v(x) = 0 iff p | x, into Boolean
Cover uv_z4();                      // U(v) for Z/4 -> Boolean
Cover uv_z8();                      // U(v) for Z/8 -> Boolean, six elements
GhostExtension stb_into_chain3();   // stb along Boolean ↪ chain3
Constructed<LexPower> lex2();       // D(LexPower(2))
IntervalIdeal interval_ideal(const Rational& theta, bool closed = true);

struct NamedCarrier {
  std::string name;
  FiniteSupertropical carrier;
};

// Valid finite carriers shipped in corpus/.
std::vector<NamedCarrier> finite_corpus();
// Lookup by name among finite_corpus(); throws ForeignElement.
FiniteSupertropical finite_instance(const std::string& name);

// STROP_CORPUS, or the source-tree corpus directory.
std::string corpus_dir();

}  // namespace strop
