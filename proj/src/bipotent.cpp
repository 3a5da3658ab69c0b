#include "strop/bipotent.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace strop {

FiniteBipotent::FiniteBipotent(std::vector<std::string> names, std::vector<Index> mul, std::vector<Index> order,
                               Index one)
    : names_(std::move(names)), mul_(std::move(mul)), order_(std::move(order)), one_(one) {
  const std::size_t n = names_.size();
  require(n >= 1, ErrorKind::MalformedCarrier, "empty carrier");
  require(mul_.size() == n * n, ErrorKind::MalformedCarrier, "multiplication table is not square");
  for (Index v : mul_) require(v < n, ErrorKind::MalformedCarrier, "table entry out of range");
  require(order_.size() == n, ErrorKind::MalformedCarrier, "order is not a permutation");
  rank_.assign(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    require(order_[r] < n && rank_[order_[r]] == n, ErrorKind::MalformedCarrier, "order is not a permutation");
    rank_[order_[r]] = r;
  }
  require(one_ < n, ErrorKind::MalformedCarrier, "one out of range");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      require(names_[i] != names_[j], ErrorKind::MalformedCarrier, "duplicate element name " + names_[i]);
}

FiniteBipotent FiniteBipotent::from_rows(std::vector<std::string> names, const std::vector<std::vector<Index>>& rows,
                                         std::vector<Index> order, Index one) {
  std::vector<Index> flat;
  for (const auto& r : rows) {
    require(r.size() == rows.size(), ErrorKind::MalformedCarrier, "multiplication table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return FiniteBipotent(std::move(names), std::move(flat), std::move(order), one);
}

FiniteBipotent FiniteBipotent::boolean() { return from_rows({"0", "1"}, {{0, 0}, {0, 1}}, {0, 1}, 1); }

Index FiniteBipotent::index_of(const std::string& name) const {
  for (Index i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  fail(ErrorKind::ForeignElement, "no element named '" + name + "'");
}

FiniteBipotent chain3() { return FiniteBipotent::from_rows({"0", "a", "1"}, {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}}, {0, 1, 2}, 2); }

FiniteBipotent nil3() { return FiniteBipotent::from_rows({"0", "a", "1"}, {{0, 0, 0}, {0, 0, 1}, {0, 1, 2}}, {0, 1, 2}, 2); }

// ---- exact carriers ----

RationalMaxPlus::value_type RationalMaxPlus::mul(const value_type& x, const value_type& y) const {
  if (!x || !y) return std::nullopt;
  return Rational(*x + *y);
}

std::strong_ordering RationalMaxPlus::compare(const value_type& x, const value_type& y) const {
  if (!x || !y) return static_cast<bool>(x) <=> static_cast<bool>(y);
  int c = cmp(*x, *y);
  return c <=> 0;
}

std::string RationalMaxPlus::format(const value_type& x) const { return x ? to_string(*x) : "⊥"; }

RationalMaxPlus::value_type RationalMaxPlus::parse(const std::string& text) const {
  if (text == "⊥" || text == "bot") return std::nullopt;
  return parse_rational(text);
}

RationalMaxPlus::value_type RationalMaxPlus::sample(Rng& rng, long box) const {
  if (rng.chance(1, 16)) return std::nullopt;
  if (rng.chance(1, 16)) return Rational(0);
  return rng.rational(box);
}

LexPower::LexPower(int k) : k_(k) { require(k >= 1, ErrorKind::BadRank, "lex power needs k >= 1"); }

LexPower::value_type LexPower::mul(const value_type& x, const value_type& y) const {
  if (!x || !y) return std::nullopt;
  std::vector<Rational> out(k_);
  for (int i = 0; i < k_; ++i) out[i] = (*x)[i] + (*y)[i];
  return out;
}

std::strong_ordering LexPower::compare(const value_type& x, const value_type& y) const {
  if (!x || !y) return static_cast<bool>(x) <=> static_cast<bool>(y);
  for (int i = 0; i < k_; ++i) {
    int c = cmp((*x)[i], (*y)[i]);
    if (c != 0) return c <=> 0;
  }
  return std::strong_ordering::equal;
}

std::string LexPower::format(const value_type& x) const {
  if (!x) return "⊥";
  std::string s = "(";
  for (int i = 0; i < k_; ++i) s += (i ? "," : "") + to_string((*x)[i]);
  return s + ")";
}

LexPower::value_type LexPower::parse(const std::string& text) const {
  if (text == "⊥" || text == "bot") return std::nullopt;
  require(text.size() >= 2 && text.front() == '(' && text.back() == ')', ErrorKind::Malformed,
          "lex element must look like (q1,...,qk)");
  std::vector<Rational> out;
  std::stringstream ss(text.substr(1, text.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  require(static_cast<int>(out.size()) == k_, ErrorKind::ForeignElement, "wrong number of coordinates");
  return out;
}

LexPower::value_type LexPower::sample(Rng& rng, long box) const {
  if (rng.chance(1, 16)) return std::nullopt;
  std::vector<Rational> out(k_);
  for (int i = 0; i < k_; ++i) out[i] = rng.chance(1, 4) ? Rational(0) : rng.rational(box);
  return out;
}

LexPower::value_type LexPower::point(std::vector<long> coords) {
  std::vector<Rational> out;
  for (long c : coords) out.emplace_back(c);
  return out;
}

std::strong_ordering UnitIntervalMul::compare(const value_type& x, const value_type& y) const {
  return cmp(x, y) <=> 0;
}

UnitIntervalMul::value_type UnitIntervalMul::parse(const std::string& text) const {
  Rational q = parse_rational(text);
  require(contains(q), ErrorKind::ForeignElement, text + " is outside [0,1]");
  return q;
}

UnitIntervalMul::value_type UnitIntervalMul::sample(Rng& rng, long box) const {
  if (rng.chance(1, 16)) return Rational(0);
  if (rng.chance(1, 16)) return Rational(1);
  return rng.unit_open_closed(box);
}

std::strong_ordering NaturalMaxTimes::compare(const value_type& x, const value_type& y) const {
  return cmp(x, y) <=> 0;
}

NaturalMaxTimes::value_type NaturalMaxTimes::sample(Rng& rng, long box) const {
  if (rng.chance(1, 16)) return Integer(0);
  return Integer(rng.in_range(1, 3 * box));
}

TruncatedInterval::TruncatedInterval(Rational theta, bool closed) : theta_(std::move(theta)), closed_(closed) {
  require(theta_ >= 0 && theta_ < 1, ErrorKind::MalformedCarrier, "theta must lie in [0,1)");
}

TruncatedInterval::value_type TruncatedInterval::mul(const value_type& x, const value_type& y) const {
  Rational p = x * y;
  return in_ideal(p) ? Rational(0) : p;
}

std::strong_ordering TruncatedInterval::compare(const value_type& x, const value_type& y) const {
  return cmp(x, y) <=> 0;
}

bool TruncatedInterval::contains(const value_type& x) const { return x == 0 || (!in_ideal(x) && x <= 1); }

TruncatedInterval::value_type TruncatedInterval::sample(Rng& rng, long box) const {
  if (rng.chance(1, 8)) return Rational(0);
  if (rng.chance(1, 16)) return Rational(1);
  while (true) {
    Rational q = rng.unit_open_closed(box);
    if (!in_ideal(q)) return q;
  }
}

std::string variant_name(const AnyBipotent& m) {
  static const char* names[] = {"finite", "rational_maxplus", "unit_interval_mul", "lex_power", "natural_max_times",
                                "truncated_interval"};
  return names[m.index()];
}

// ---- cancellativity ----

CancellativeResult<Index> is_cancellative(const FiniteBipotent& m) {
  CancellativeResult<Index> r;
  r.proof = "exhaustive";
  for (Index z = 0; z < m.size(); ++z) {
    if (z == m.zero()) continue;
    for (Index x = 0; x < m.size(); ++x)
      for (Index y = 0; y < m.size(); ++y)
        if (x != y && m.mul(x, z) == m.mul(y, z)) {
          r.cancellative = false;
          r.witness = {x, y, z};
          return r;
        }
  }
  return r;
}

CancellativeResult<std::optional<Rational>> is_cancellative(const RationalMaxPlus&) { return {true, {}, "by-construction"}; }
CancellativeResult<std::optional<std::vector<Rational>>> is_cancellative(const LexPower&) {
  return {true, {}, "by-construction"};
}
CancellativeResult<Rational> is_cancellative(const UnitIntervalMul&) { return {true, {}, "by-construction"}; }
CancellativeResult<Integer> is_cancellative(const NaturalMaxTimes&) { return {true, {}, "by-construction"}; }

CancellativeResult<Rational> is_cancellative(const TruncatedInterval& m, const SampleConfig& cfg) {
  CancellativeResult<Rational> r;
  r.proof = "sampled";
  Rng rng(cfg.seed);
  for (std::uint64_t i = 0; i < cfg.samples; ++i) {
    Rational x = m.sample(rng, cfg.box), y = m.sample(rng, cfg.box), z = m.sample(rng, cfg.box);
    if (z == 0 || x == y) continue;
    if (m.mul(x, z) == m.mul(y, z)) {
      r.cancellative = false;
      r.witness = std::array<Rational, 3>{x, y, z};
      return r;
    }
  }
  return r;
}

// ---- relations on M ----

std::optional<Witness> order_compatibility_violation(const FiniteBipotent& m, const Partition& phi) {
  // A class is convex iff its members occupy consecutive ranks.
  for (const Subset& block : phi.blocks()) {
    std::size_t lo = m.size(), hi = 0;
    for (Index x : block) {
      lo = std::min(lo, m.rank(x));
      hi = std::max(hi, m.rank(x));
    }
    for (std::size_t r = lo; r <= hi; ++r) {
      Index y = m.at_rank(r);
      if (!contains(block, y)) return Witness{m.name(m.at_rank(lo)), m.name(y), m.name(m.at_rank(hi))};
    }
  }
  return std::nullopt;
}

std::optional<Witness> order_compatibility_violation_pointwise(const FiniteBipotent& m, const Partition& phi) {
  for (Index x = 0; x < m.size(); ++x)
    for (Index y = 0; y < m.size(); ++y)
      for (Index z = 0; z < m.size(); ++z)
        if (m.leq(x, y) && m.leq(y, z) && phi.related(x, z) && !phi.related(x, y))
          return Witness{m.name(x), m.name(y), m.name(z)};
  return std::nullopt;
}

std::optional<Witness> multiplicativity_violation(const FiniteBipotent& m, const Partition& phi) {
  for (Index x = 0; x < m.size(); ++x)
    for (Index y = 0; y < m.size(); ++y) {
      if (!phi.related(x, y)) continue;
      for (Index z = 0; z < m.size(); ++z)
        if (!phi.related(m.mul(x, z), m.mul(y, z))) return Witness{m.name(x), m.name(y), m.name(z)};
    }
  return std::nullopt;
}

std::optional<Witness> additivity_violation(const FiniteBipotent& m, const Partition& phi) {
  for (Index x = 0; x < m.size(); ++x)
    for (Index y = 0; y < m.size(); ++y) {
      if (!phi.related(x, y)) continue;
      for (Index z = 0; z < m.size(); ++z)
        if (!phi.related(m.add(x, z), m.add(y, z))) return Witness{m.name(x), m.name(y), m.name(z)};
    }
  return std::nullopt;
}

namespace {

std::string join_names(const FiniteBipotent& m, const Subset& block) {
  if (block.size() == 1) return m.name(block[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < block.size(); ++i) s += (i ? "|" : "") + m.name(block[i]);
  return s + "]";
}

}  // namespace

BipotentQuotient quotient_bipotent(const FiniteBipotent& m, const Partition& phi) {
  require(phi.size() == m.size(), ErrorKind::Malformed, "relation is over a different carrier");
  if (auto w = order_compatibility_violation(m, phi))
    fail(ErrorKind::NotOrderCompatible, "class containing " + (*w)[0] + " and " + (*w)[2] + " skips " + (*w)[1]);
  if (auto w = multiplicativity_violation(m, phi))
    fail(ErrorKind::NotMultiplicative, (*w)[0] + " ~ " + (*w)[1] + " but not after multiplying by " + (*w)[2]);
  auto blocks = phi.blocks();
  const std::size_t k = blocks.size();
  std::vector<std::string> names(k);
  for (std::size_t b = 0; b < k; ++b) names[b] = join_names(m, blocks[b]);
  std::vector<Index> table(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) table[a * k + b] = phi.class_of(m.mul(blocks[a][0], blocks[b][0]));
  // Convex classes: sort by least rank.
  std::vector<Index> order(k);
  std::iota(order.begin(), order.end(), 0);
  auto least = [&](Index b) {
    std::size_t r = m.size();
    for (Index x : blocks[b]) r = std::min(r, m.rank(x));
    return r;
  };
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return least(a) < least(b); });
  BipotentQuotient q{FiniteBipotent(names, table, order, phi.class_of(m.one())), {}};
  q.projection = phi.labels();
  return q;
}

// ---- homomorphisms ----

ValidationReport validate_ghost_hom(const FiniteGhostHom& g) {
  ValidationReport rep;
  rep.subject = "ghost homomorphism";
  const auto& s = g.source;
  const auto& t = g.target;
  require(g.map.size() == s.size(), ErrorKind::Malformed, "map is not total on the source");
  for (Index v : g.map) require(v < t.size(), ErrorKind::ForeignElement, "map leaves the target");
  auto nm = [&](Index x) { return s.name(x); };
  std::optional<Witness> zero_w, one_w, mul_w, ord_w, sur_w;
  if (g.map[s.zero()] != t.zero()) zero_w = Witness{nm(s.zero())};
  if (g.map[s.one()] != t.one()) one_w = Witness{nm(s.one())};
  for (Index x = 0; x < s.size(); ++x)
    for (Index y = 0; y < s.size(); ++y) {
      if (!mul_w && g.map[s.mul(x, y)] != t.mul(g.map[x], g.map[y])) mul_w = Witness{nm(x), nm(y)};
      if (!ord_w && s.leq(x, y) && !t.leq(g.map[x], g.map[y])) ord_w = Witness{nm(x), nm(y)};
    }
  rep.record("zero", 1, zero_w, ErrorKind::NotHomomorphism);
  rep.record("one", 1, one_w, ErrorKind::NotHomomorphism);
  rep.record("multiplicative", s.size() * s.size(), mul_w, ErrorKind::NotHomomorphism);
  rep.record("order preserving", s.size() * s.size(), ord_w, ErrorKind::NotHomomorphism);
  if (g.claims_surjective) {
    for (Index y = 0; y < t.size() && !sur_w; ++y)
      if (std::find(g.map.begin(), g.map.end(), y) == g.map.end()) sur_w = Witness{t.name(y)};
    rep.record("surjective", t.size(), sur_w, ErrorKind::NotSurjective);
  }
  return rep;
}

bool is_surjective(const FiniteGhostHom& g) {
  for (Index y = 0; y < g.target.size(); ++y)
    if (std::find(g.map.begin(), g.map.end(), y) == g.map.end()) return false;
  return true;
}

bool is_injective(const FiniteGhostHom& g) {
  std::vector<Index> m = g.map;
  std::sort(m.begin(), m.end());
  return std::adjacent_find(m.begin(), m.end()) == m.end();
}

FiniteGhostHom identity_hom(const FiniteBipotent& m) {
  std::vector<Index> id(m.size());
  std::iota(id.begin(), id.end(), 0);
  return {m, m, id, true};
}

FiniteGhostHom compose(const FiniteGhostHom& second, const FiniteGhostHom& first) {
  FiniteGhostHom out{first.source, second.target, std::vector<Index>(first.map.size()), false};
  for (Index x = 0; x < first.map.size(); ++x) out.map[x] = second.map[first.map[x]];
  return out;
}

Partition kernel(const FiniteGhostHom& g) {
  return Partition::kernel(g.source.size(), [&](Index x) { return g.map[x]; });
}

RuleGhostHom<LexPower, LexPower> convex_projection(const LexPower& m, int j) {
  require(j >= 1 && j < m.rank(), ErrorKind::BadRank, "projection rank must satisfy 1 <= j < k");
  LexPower target(j);
  return {m, target,
          [j](const LexPower::value_type& x) -> LexPower::value_type {
            if (!x) return std::nullopt;
            return std::vector<Rational>(x->begin(), x->begin() + j);
          },
          "lex projection onto " + std::to_string(j) + " coordinates"};
}

// ---- enumeration ----

std::vector<FiniteBipotent> enumerate_bipotent(std::size_t n) {
  require(n >= 1 && n <= 5, ErrorKind::TooLarge, "bipotent enumeration is bounded by 5 elements");
  std::vector<FiniteBipotent> out;
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (n == 1) {
    out.push_back(FiniteBipotent({"0"}, {0}, {0}, 0));
    return out;
  }
  // Elements are ranks; choose the unit, then fill products of non-unit
  // nonzero elements (i <= j) and keep the valid tables.
  for (Index one = 1; one < n; ++one) {
    std::vector<std::pair<Index, Index>> free_cells;
    for (Index i = 1; i < n; ++i)
      for (Index j = i; j < n; ++j)
        if (i != one && j != one) free_cells.emplace_back(i, j);
    std::vector<Index> choice(free_cells.size(), 0);
    std::vector<std::string> names(n);
    for (Index i = 0; i < n; ++i) names[i] = i == 0 ? "0" : (i == one ? "1" : "u" + std::to_string(i));
    while (true) {
      std::vector<Index> t(n * n, 0);
      for (Index i = 0; i < n; ++i) {
        t[one * n + i] = i;
        t[i * n + one] = i;
      }
      for (std::size_t c = 0; c < free_cells.size(); ++c) {
        auto [i, j] = free_cells[c];
        t[i * n + j] = t[j * n + i] = choice[c];
      }
      FiniteBipotent m(names, t, order, one);
      if (validate_bipotent(m).ok()) out.push_back(m);
      std::size_t c = 0;
      while (c < choice.size() && ++choice[c] == n) choice[c++] = 0;
      if (c == choice.size()) break;
    }
  }
  return out;
}

}  // namespace strop
