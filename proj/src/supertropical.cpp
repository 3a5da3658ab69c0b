#include "strop/supertropical.hpp"

#include <algorithm>
#include <numeric>

namespace strop {

FiniteSupertropical::FiniteSupertropical(std::vector<std::string> names, std::vector<Index> mul, Index e, Index one,
                                         std::vector<Index> ghosts)
    : names_(std::move(names)), mul_(std::move(mul)), e_(e), one_(one), ghosts_(std::move(ghosts)) {
  const std::size_t n = names_.size();
  require(n >= 1, ErrorKind::MalformedCarrier, "empty carrier");
  require(mul_.size() == n * n, ErrorKind::MalformedCarrier, "multiplication table is not square");
  for (Index v : mul_) require(v < n, ErrorKind::MalformedCarrier, "table entry out of range");
  require(e_ < n && one_ < n, ErrorKind::MalformedCarrier, "e or one out of range");
  require(!ghosts_.empty() && ghosts_[0] == 0, ErrorKind::MalformedCarrier, "ghost list must start with the zero 0");
  ghost_rank_.assign(n, n);
  for (std::size_t r = 0; r < ghosts_.size(); ++r) {
    require(ghosts_[r] < n && ghost_rank_[ghosts_[r]] == n, ErrorKind::MalformedCarrier, "ghost list has repeats");
    ghost_rank_[ghosts_[r]] = r;
  }
  // Non-ghosts get distinct ranks above every ghost so that the derived
  // addition stays total on documents that fail validation.
  for (Index x = 0; x < n; ++x)
    if (ghost_rank_[x] == n) ghost_rank_[x] = n + x;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      require(names_[i] != names_[j], ErrorKind::MalformedCarrier, "duplicate element name " + names_[i]);
}

FiniteSupertropical FiniteSupertropical::from_rows(std::vector<std::string> names,
                                                   const std::vector<std::vector<Index>>& rows, Index e, Index one,
                                                   std::vector<Index> ghosts) {
  std::vector<Index> flat;
  for (const auto& r : rows) {
    require(r.size() == rows.size(), ErrorKind::MalformedCarrier, "multiplication table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return FiniteSupertropical(std::move(names), std::move(flat), e, one, std::move(ghosts));
}

FiniteSupertropical FiniteSupertropical::ghost_only(const FiniteBipotent& m) {
  // Re-index so that position r holds the element of rank r.
  const std::size_t n = m.size();
  std::vector<std::string> names(n);
  std::vector<Index> table(n * n), ghosts(n);
  for (Index r = 0; r < n; ++r) {
    names[r] = m.name(m.at_rank(r));
    ghosts[r] = r;
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) table[a * n + b] = m.rank(m.mul(m.at_rank(a), m.at_rank(b)));
  Index one = m.rank(m.one());
  return FiniteSupertropical(names, table, one, one, ghosts);
}

Subset FiniteSupertropical::ghost_set() const {
  Subset s = ghosts_;
  std::sort(s.begin(), s.end());
  return s;
}

Subset FiniteSupertropical::tangibles() const {
  Subset s;
  for (Index x = 0; x < size(); ++x)
    if (!is_ghost(x)) s.push_back(x);
  return s;
}

Index FiniteSupertropical::index_of(const std::string& name) const {
  for (Index i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  fail(ErrorKind::ForeignElement, "no element named '" + name + "'");
}

FiniteBipotent FiniteSupertropical::ghost_bipotent() const {
  const std::size_t m = ghosts_.size();
  std::vector<std::string> names(m);
  std::vector<Index> table(m * m), order(m);
  for (Index r = 0; r < m; ++r) {
    names[r] = names_[ghosts_[r]];
    order[r] = r;
  }
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b) {
      Index p = mul(ghosts_[a], ghosts_[b]);
      require(is_ghost(p), ErrorKind::AxiomViolation, "product of ghosts " + names[a] + ", " + names[b] + " is not a ghost");
      table[a * m + b] = ghost_rank_[p];
    }
  require(is_ghost(e_), ErrorKind::GhostSetMismatch, "e is not a declared ghost");
  return FiniteBipotent(names, table, order, ghost_rank_[e_]);
}

Subset FiniteSupertropical::fiber(Index a) const {
  Subset s;
  for (Index x = 0; x < size(); ++x)
    if (companion(x) == a) s.push_back(x);
  return s;
}

ValidationReport validate_supertropical(const FiniteSupertropical& u) {
  ValidationReport rep;
  rep.subject = "supertropical carrier";
  const std::size_t n = u.size();
  auto nm = [&](Index x) { return u.name(x); };
  Index e = u.e();

  std::optional<Witness> idem;
  if (u.mul(e, e) != e) idem = Witness{nm(e)};
  rep.record("e idempotent", 1, idem);

  // eU must equal the declared ghost set.
  std::optional<Witness> ghost_w;
  Subset image;
  for (Index x = 0; x < n; ++x) image.push_back(u.companion(x));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  Subset declared = u.ghost_set();
  if (image != declared) {
    for (Index x : image)
      if (!contains(declared, x)) ghost_w = Witness{nm(x), "in eU but not declared"};
    for (Index x : declared)
      if (!ghost_w && !contains(image, x)) ghost_w = Witness{nm(x), "declared but not in eU"};
  }
  rep.record("ghost set = eU", n, ghost_w, ErrorKind::GhostSetMismatch);
  if (ghost_w) return rep;

  std::optional<Witness> nu_id;
  for (Index g : u.ghosts())
    if (!nu_id && u.companion(g) != g) nu_id = Witness{nm(g)};
  rep.record("e acts as identity on ghosts", declared.size(), nu_id);

  std::optional<Witness> closed;
  for (Index a : u.ghosts())
    for (Index b : u.ghosts())
      if (!closed && !u.is_ghost(u.mul(a, b))) closed = Witness{nm(a), nm(b)};
  rep.record("ghosts closed under product", declared.size() * declared.size(), closed);
  if (closed || nu_id || idem) return rep;

  ValidationReport ghost = validate_bipotent(u.ghost_bipotent());
  const AxiomResult* gf = ghost.first_failure();
  rep.record("ghost ideal is bipotent", ghost.results.empty() ? 0 : ghost.results.front().checked,
             gf ? std::optional<Witness>(gf->witness) : std::nullopt);

  std::optional<Witness> one_one;
  if (u.add(u.one(), u.one()) != e) one_one = Witness{nm(u.one())};
  rep.record("1 + 1 = e", 1, one_one);

  check_supertropical_laws(u, SampleConfig{}, rep);
  return rep;
}

// ---- monoids with zero ----

FiniteMonoidWithZero FiniteMonoidWithZero::trivial() { return {{"1", "z"}, {0, 1, 1, 1}, 0, 1}; }

FiniteMonoidWithZero FiniteMonoidWithZero::cyclic_group(std::size_t n) {
  FiniteMonoidWithZero s;
  const std::size_t k = n + 1;
  for (std::size_t i = 0; i < n; ++i) s.names.push_back("g" + std::to_string(i));
  s.names.push_back("z");
  s.mul.assign(k * k, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.mul[i * k + j] = (i + j) % n;
  s.one = 0;
  s.zero = n;
  return s;
}

FiniteMonoidWithZero FiniteMonoidWithZero::truncated_cyclic(std::size_t k) {
  FiniteMonoidWithZero s;
  for (std::size_t i = 0; i < k; ++i) s.names.push_back("h" + std::to_string(i));
  s.names.push_back("z");
  const std::size_t n = k + 1;
  s.mul.assign(n * n, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) s.mul[i * n + j] = i + j < k ? i + j : k;
  s.one = 0;
  s.zero = k;
  return s;
}

FiniteMonoidWithZero FiniteMonoidWithZero::product(const FiniteMonoidWithZero& a, const FiniteMonoidWithZero& b) {
  // Pairs with both parts nonzero, plus one shared zero.
  std::vector<std::pair<Index, Index>> pairs;
  for (Index i = 0; i < a.size(); ++i)
    for (Index j = 0; j < b.size(); ++j)
      if (i != a.zero && j != b.zero) pairs.emplace_back(i, j);
  FiniteMonoidWithZero s;
  const std::size_t n = pairs.size() + 1;
  for (auto [i, j] : pairs) s.names.push_back(a.names[i] + "*" + b.names[j]);
  s.names.push_back("z");
  s.zero = n - 1;
  s.mul.assign(n * n, s.zero);
  auto find = [&](Index i, Index j) -> Index {
    if (i == a.zero || j == b.zero) return s.zero;
    return static_cast<Index>(std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) - pairs.begin());
  };
  for (Index p = 0; p < pairs.size(); ++p)
    for (Index q = 0; q < pairs.size(); ++q)
      s.mul[p * n + q] = find(a.at(pairs[p].first, pairs[q].first), b.at(pairs[p].second, pairs[q].second));
  s.one = find(a.one, b.one);
  return s;
}

ValidationReport validate_monoid_with_zero(const FiniteMonoidWithZero& s) {
  ValidationReport rep;
  rep.subject = "monoid with zero";
  const std::size_t n = s.size();
  std::optional<Witness> comm, assoc, ident, absorb;
  for (Index x = 0; x < n; ++x) {
    if (!ident && s.at(s.one, x) != x) ident = Witness{s.names[x]};
    if (!absorb && s.at(s.zero, x) != s.zero) absorb = Witness{s.names[x]};
    for (Index y = 0; y < n; ++y) {
      if (!comm && s.at(x, y) != s.at(y, x)) comm = Witness{s.names[x], s.names[y]};
      for (Index z = 0; z < n; ++z)
        if (!assoc && s.at(s.at(x, y), z) != s.at(x, s.at(y, z))) assoc = Witness{s.names[x], s.names[y], s.names[z]};
    }
  }
  rep.record("commutative", n * n, comm);
  rep.record("associative", n * n * n, assoc);
  rep.record("identity", n, ident);
  rep.record("zero absorbing", n, absorb);
  return rep;
}

// ---- projection constructor ----

FiniteSupertropical construct_from_projection(const ProjectionData& d) {
  const FiniteBipotent& m = d.ghosts;
  const std::size_t k = m.size();
  const std::size_t n = d.size();
  require(d.mul.size() == n * n, ErrorKind::MalformedCarrier, "monoid table is not square");
  require(d.p.size() == n, ErrorKind::MalformedCarrier, "projection is not total");
  require(d.one < n, ErrorKind::MalformedCarrier, "one out of range");
  for (Index v : d.mul) require(v < n, ErrorKind::MalformedCarrier, "table entry out of range");
  for (Index v : d.p) require(v < k, ErrorKind::MalformedCarrier, "projection leaves M");
  auto all_names = [&](Index x) { return x < k ? m.name(x) : d.tangible_names[x - k]; };
  auto at = [&](Index x, Index y) { return d.mul[x * n + y]; };
  auto hyp = [&](const std::string& what, const std::string& witness) {
    fail(ErrorKind::HypothesisViolation, what + " (witness " + witness + ")");
  };

  if (!validate_bipotent(m).ok()) hyp("M is a bipotent semiring", "validation");
  auto canc = is_cancellative(m);
  if (!canc.cancellative)
    hyp("M cancellative", m.name((*canc.witness)[0]) + "," + m.name((*canc.witness)[1]) + "," + m.name((*canc.witness)[2]));
  for (Index x = 0; x < n; ++x) {
    if (at(d.one, x) != x) hyp("monoid identity", all_names(x));
    for (Index y = 0; y < n; ++y) {
      if (at(x, y) != at(y, x)) hyp("monoid commutative", all_names(x) + "," + all_names(y));
      for (Index z = 0; z < n; ++z)
        if (at(at(x, y), z) != at(x, at(y, z))) hyp("monoid associative", all_names(x) + "," + all_names(y) + "," + all_names(z));
    }
  }
  for (Index g = 0; g < k; ++g)
    for (Index x = 0; x < n; ++x) {
      if (at(g, x) >= k) hyp("M is an ideal of the monoid", all_names(g) + "," + all_names(x));
      if (x < k && at(g, x) != m.mul(g, x)) hyp("monoid restricts to M's product", all_names(g) + "," + all_names(x));
    }
  for (Index x = 0; x < n; ++x) {
    if (x < k && d.p[x] != x) hyp("p restricts to the identity on M", all_names(x));
    if (d.p[x] == m.zero() && x != m.zero()) hyp("p^-1(0) = {0}", all_names(x));
    for (Index y = 0; y < n; ++y)
      if (d.p[at(x, y)] != m.mul(d.p[x], d.p[y])) hyp("p multiplicative", all_names(x) + "," + all_names(y));
  }

  // Canonical layout: zero, ghosts ascending, tangibles in given order.
  std::vector<Index> pos(n);
  std::vector<std::string> names(n);
  std::vector<Index> ghosts;
  for (std::size_t r = 0; r < k; ++r) {
    pos[m.at_rank(r)] = r;
    ghosts.push_back(r);
  }
  for (Index t = k; t < n; ++t) pos[t] = t;
  for (Index x = 0; x < n; ++x) names[pos[x]] = all_names(x);
  std::vector<Index> table(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) table[pos[x] * n + pos[y]] = pos[at(x, y)];
  FiniteSupertropical u(names, table, pos[m.one()], pos[d.one], ghosts);
  // The companion must be p itself.
  for (Index x = 0; x < n; ++x)
    if (u.companion(pos[x]) != pos[d.p[x]]) hyp("e·x = p(x)", all_names(x));
  validate_supertropical(u).throw_if_failed();
  return u;
}

ProjectionData decompose(const FiniteSupertropical& u) {
  ProjectionData d;
  d.ghosts = u.ghost_bipotent();
  const std::size_t k = d.ghosts.size();
  std::vector<Index> to_data(u.size());
  for (Index r = 0; r < k; ++r) to_data[u.ghost_at(r)] = r;
  Index next = k;
  for (Index t : u.tangibles()) {
    d.tangible_names.push_back(u.name(t));
    to_data[t] = next++;
  }
  const std::size_t n = u.size();
  d.mul.assign(n * n, 0);
  d.p.assign(n, 0);
  for (Index x = 0; x < n; ++x) {
    d.p[to_data[x]] = u.ghost_rank(u.companion(x));
    for (Index y = 0; y < n; ++y) d.mul[to_data[x] * n + to_data[y]] = to_data[u.mul(x, y)];
  }
  d.one = to_data[u.one()];
  return d;
}

FiniteSupertropical materialize(const Constructed<FiniteBipotent>& u) {
  const FiniteBipotent& m = u.ghost_carrier();
  const FiniteMonoidWithZero& s = u.tangible_monoid();
  using V = Constructed<FiniteBipotent>::value_type;
  std::vector<V> elems;
  for (std::size_t r = 0; r < m.size(); ++r) elems.push_back(u.ghost(m.at_rank(r)));
  for (std::size_t r = 1; r < m.size(); ++r)
    for (Index t = 0; t < s.size(); ++t)
      if (t != s.zero) elems.push_back(u.tangible(m.at_rank(r), t));
  const std::size_t n = elems.size();
  auto index_of = [&](const V& v) {
    return static_cast<Index>(std::find(elems.begin(), elems.end(), v) - elems.begin());
  };
  std::vector<std::string> names(n);
  for (Index i = 0; i < n; ++i) {
    const V& v = elems[i];
    names[i] = !v.tag ? m.name(v.ghost) : (s.size() == 2 ? m.name(v.ghost) + "^" : m.name(v.ghost) + "^" + s.names[*v.tag]);
  }
  std::vector<Index> table(n * n), ghosts(m.size());
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) table[i * n + j] = index_of(u.mul(elems[i], elems[j]));
  std::iota(ghosts.begin(), ghosts.end(), 0);
  return FiniteSupertropical(names, table, index_of(u.e()), index_of(u.one()), ghosts);
}

FiniteSupertropical tangible_double(const FiniteBipotent& m) {
  FiniteSupertropical d = materialize(doubled(m));
  validate_supertropical(d).throw_if_failed();
  return d;
}

// ---- ghost extension ----

GhostExtension ghost_extension(const FiniteSupertropical& u, const FiniteGhostHom& emb) {
  const FiniteBipotent ghost = u.ghost_bipotent();
  require(emb.source == ghost, ErrorKind::NotSubsemiring, "embedding does not start at eU");
  require(is_injective(emb), ErrorKind::NotSubsemiring, "embedding is not injective");
  if (auto f = validate_ghost_hom(emb).first_failure())
    fail(ErrorKind::NotSubsemiring, "embedding is not a homomorphism: " + f->axiom);
  const FiniteBipotent& big = emb.target;
  const std::size_t n = u.size();

  GhostExtension out;
  out.inclusion.resize(n);
  std::iota(out.inclusion.begin(), out.inclusion.end(), 0);
  out.ghost_index.assign(big.size(), 0);
  std::vector<std::string> names = u.names();
  std::vector<bool> hit(big.size(), false);
  for (Index r = 0; r < ghost.size(); ++r) {
    out.ghost_index[emb.map[r]] = u.ghost_at(r);
    hit[emb.map[r]] = true;
  }
  for (Index z = 0; z < big.size(); ++z)
    if (!hit[z]) {
      out.ghost_index[z] = names.size();
      std::string nm = big.name(z);
      while (std::find(names.begin(), names.end(), nm) != names.end()) nm += "'";
      names.push_back(nm);
    }
  const std::size_t n2 = names.size();
  // Back map: U′ ghost index -> M′ element.
  std::vector<Index> big_of(n2, big.size());
  for (Index z = 0; z < big.size(); ++z) big_of[out.ghost_index[z]] = z;
  auto nu_big = [&](Index x) -> Index {
    // ν(x) read in M′.
    if (x < n) return emb.map[u.ghost_rank(u.companion(x))];
    return big_of[x];
  };
  // x(y + z) = xy + xz fails exactly when a tangible product xy has
  // ν(xy) = ν(x)z for a new ghost z below ν(y).
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      if (!u.is_tangible(u.mul(x, y))) continue;
      for (Index z = 0; z < big.size(); ++z)
        if (!hit[z] && big.rank(z) < big.rank(nu_big(y)) && big.mul(nu_big(x), z) == nu_big(u.mul(x, y)))
          fail(ErrorKind::HypothesisViolation, "not distributive: " + u.name(x) + "*(" + u.name(y) + " + " +
                                                   big.name(z) + ") != " + u.name(x) + "*" + u.name(y) + " + " +
                                                   u.name(x) + "*" + big.name(z));
    }
  std::vector<Index> table(n2 * n2);
  for (Index x = 0; x < n2; ++x)
    for (Index y = 0; y < n2; ++y) {
      if (x < n && y < n) table[x * n2 + y] = u.mul(x, y);
      else table[x * n2 + y] = out.ghost_index[big.mul(nu_big(x), nu_big(y))];
    }
  std::vector<Index> ghosts;
  for (std::size_t r = 0; r < big.size(); ++r) ghosts.push_back(out.ghost_index[big.at_rank(r)]);
  out.carrier = FiniteSupertropical(names, table, u.e(), u.one(), ghosts);
  return out;
}

// ---- stabilizer, isomorphism ----

Subset mult_stabilizer(const FiniteSupertropical& u) {
  Subset t = u.tangibles(), out;
  for (Index x = 0; x < u.size(); ++x) {
    bool ok = true;
    for (Index y : t)
      if (!u.is_tangible(u.mul(x, y))) ok = false;
    if (ok) out.push_back(x);
  }
  return out;
}

std::optional<std::vector<Index>> find_isomorphism(const FiniteSupertropical& a, const FiniteSupertropical& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.ghosts().size() != b.ghosts().size()) return std::nullopt;
  require(n <= 8, ErrorKind::TooLarge, "isomorphism search is bounded by 8 elements");
  // Ghosts are forced by the order; search only over tangibles.
  std::vector<Index> f(n, n);
  std::vector<bool> used(n, false);
  for (std::size_t r = 0; r < a.ghosts().size(); ++r) {
    f[a.ghost_at(r)] = b.ghost_at(r);
    used[b.ghost_at(r)] = true;
  }
  Subset ta = a.tangibles();
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == ta.size()) {
      if (f[a.one()] != b.one() || f[a.e()] != b.e()) return false;
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
          if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
      return true;
    }
    Index x = ta[i];
    for (Index y = 0; y < n; ++y) {
      if (used[y] || b.is_ghost(y)) continue;
      if (f[a.companion(x)] != b.companion(y)) continue;
      f[x] = y;
      used[y] = true;
      if (go(i + 1)) return true;
      used[y] = false;
      f[x] = n;
    }
    return false;
  };
  if (go(0)) return f;
  return std::nullopt;
}

}  // namespace strop
