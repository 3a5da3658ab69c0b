#pragma once

// Brute-force reference implementations for the unit tests. They read the
// raw tables of library objects and never call library algorithms.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strop/supertropical.hpp"
#include "strop/valuations.hpp"

namespace oracle {

using strop::Index;
using Table = std::vector<std::vector<Index>>;
using Set = std::vector<Index>;

// A finite supertropical table: ghosts listed ascending.
struct Carrier {
  std::size_t n = 0;
  Table mul;
  std::vector<Index> ghosts;
  Index e = 0;
  Index one = 0;
};

inline Carrier raw(const strop::FiniteSupertropical& u) {
  Carrier c;
  c.n = u.size();
  c.mul.assign(c.n, std::vector<Index>(c.n));
  for (Index x = 0; x < c.n; ++x)
    for (Index y = 0; y < c.n; ++y) c.mul[x][y] = u.table()[x * c.n + y];
  c.ghosts = u.ghosts();
  c.e = u.e();
  c.one = u.one();
  return c;
}

inline std::size_t ghost_pos(const Carrier& c, Index g) {
  auto it = std::find(c.ghosts.begin(), c.ghosts.end(), g);
  return it == c.ghosts.end() ? c.n : static_cast<std::size_t>(it - c.ghosts.begin());
}

inline Index add(const Carrier& c, Index x, Index y) {
  Index ex = c.mul[c.e][x], ey = c.mul[c.e][y];
  std::size_t rx = ghost_pos(c, ex), ry = ghost_pos(c, ey);
  if (rx < ry) return y;
  if (ry < rx) return x;
  return ex;
}

struct Violation {
  std::string law;
  std::array<Index, 3> at{};
};

// Every law of a supertropical semiring, checked on all triples.
inline std::optional<Violation> semiring_violation(const Carrier& c) {
  const auto& m = c.mul;
  if (c.ghosts.empty() || c.ghosts[0] != 0) return Violation{"zero is the least ghost", {}};
  if (m[c.e][c.e] != c.e || ghost_pos(c, c.e) == c.n) return Violation{"e idempotent ghost", {c.e, 0, 0}};
  if (add(c, c.one, c.one) != c.e) return Violation{"1+1 = e", {c.one, 0, 0}};
  std::set<Index> eu;
  for (Index x = 0; x < c.n; ++x) eu.insert(m[c.e][x]);
  if (eu != std::set<Index>(c.ghosts.begin(), c.ghosts.end())) return Violation{"ghosts = eU", {}};
  for (Index x = 0; x < c.n; ++x) {
    if (m[c.one][x] != x) return Violation{"identity", {x, 0, 0}};
    if (m[0][x] != 0) return Violation{"absorbing", {x, 0, 0}};
    if (m[c.e][x] == 0 && x != 0) return Violation{"ex = 0", {x, 0, 0}};
    if (add(c, 0, x) != x) return Violation{"additive identity", {x, 0, 0}};
  }
  for (Index x = 0; x < c.n; ++x)
    for (Index y = 0; y < c.n; ++y) {
      if (m[x][y] != m[y][x]) return Violation{"commutative", {x, y, 0}};
      if (add(c, x, y) != add(c, y, x)) return Violation{"add commutative", {x, y, 0}};
      for (Index z = 0; z < c.n; ++z) {
        if (m[m[x][y]][z] != m[x][m[y][z]]) return Violation{"associative", {x, y, z}};
        if (add(c, add(c, x, y), z) != add(c, x, add(c, y, z))) return Violation{"add associative", {x, y, z}};
        if (m[add(c, x, y)][z] != add(c, m[x][z], m[y][z])) return Violation{"distributive", {x, y, z}};
      }
    }
  for (Index a : c.ghosts)
    for (Index b : c.ghosts)
      for (Index g : c.ghosts)
        if (ghost_pos(c, a) <= ghost_pos(c, b) && ghost_pos(c, m[a][g]) > ghost_pos(c, m[b][g]))
          return Violation{"ghost order monotone", {a, b, g}};
  return std::nullopt;
}

// ---- partitions ----

// Each element joins an existing block or opens a new one.
inline std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> labels;
  std::function<void(std::size_t)> grow = [&](std::size_t blocks) {
    if (labels.size() == n) {
      out.push_back(labels);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      labels.push_back(b);
      grow(std::max(blocks, b + 1));
      labels.pop_back();
    }
  };
  grow(0);
  return out;
}

// ---- ideals ----

inline bool contains(const Set& s, Index x) { return std::find(s.begin(), s.end(), x) != s.end(); }

inline Set members(std::uint64_t mask, std::size_t n) {
  Set s;
  for (Index x = 0; x < n; ++x)
    if (mask >> x & 1) s.push_back(x);
  return s;
}

inline bool is_ideal(const Carrier& c, const Set& a) {
  if (!contains(a, 0)) return false;
  for (Index x : a)
    for (Index y = 0; y < c.n; ++y)
      if (!contains(a, c.mul[x][y])) return false;
  for (Index x : a)
    for (Index y : a)
      if (!contains(a, add(c, x, y))) return false;
  return true;
}

inline std::vector<Set> ideals(const Carrier& c) {
  std::vector<Set> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.n); ++mask)
    if (is_ideal(c, members(mask, c.n))) out.push_back(members(mask, c.n));
  return out;
}

// x belongs when ex lies below the ghost of some member.
inline Set saturate(const Carrier& c, const Set& a) {
  Set s;
  for (Index x = 0; x < c.n; ++x)
    for (Index y : a)
      if (ghost_pos(c, c.mul[c.e][x]) <= ghost_pos(c, c.mul[c.e][y])) {
        s.push_back(x);
        break;
      }
  return s;
}

inline bool is_prime(const Carrier& c, const Set& a) {
  if (a.size() == c.n) return false;
  for (Index x = 0; x < c.n; ++x)
    for (Index y = 0; y < c.n; ++y)
      if (contains(a, c.mul[x][y]) && !contains(a, x) && !contains(a, y)) return false;
  return true;
}

inline Set radical(const Carrier& c, const Set& a) {
  Set s;
  for (Index x = 0; x < c.n; ++x) {
    Index p = x;
    for (std::size_t k = 0; k <= c.n; ++k, p = c.mul[p][x])
      if (contains(a, p)) {
        s.push_back(x);
        break;
      }
  }
  return s;
}

// {x : x·T ⊆ T} for T the non-ghosts.
inline Set stabilizer(const Carrier& c) {
  Set s;
  for (Index x = 0; x < c.n; ++x) {
    bool keeps = true;
    for (Index t = 0; t < c.n; ++t)
      if (!contains(c.ghosts, t) && contains(c.ghosts, c.mul[x][t])) keeps = false;
    if (keeps) s.push_back(x);
  }
  return s;
}

// ---- maps ----

// Maps U -> W with 0, 1, e fixed, multiplicative, ghosts to ghosts in order.
inline std::vector<std::vector<Index>> transmissions(const Carrier& u, const Carrier& w) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> f(u.n, 0);
  for (;;) {
    bool ok = f[0] == 0 && f[u.one] == w.one && f[u.e] == w.e;
    for (Index x = 0; ok && x < u.n; ++x)
      for (Index y = 0; ok && y < u.n; ++y) ok = f[u.mul[x][y]] == w.mul[f[x]][f[y]];
    for (Index a : u.ghosts) ok = ok && contains(w.ghosts, f[a]);
    for (Index a : u.ghosts)
      for (Index b : u.ghosts)
        if (ok && ghost_pos(u, a) <= ghost_pos(u, b)) ok = ghost_pos(w, f[a]) <= ghost_pos(w, f[b]);
    if (ok) out.push_back(f);
    std::size_t i = 0;
    while (i < u.n && ++f[i] == w.n) f[i++] = 0;
    if (i == u.n) break;
  }
  return out;
}

// The quotient table by a labelling, if the projection is a transmission
// onto a supertropical semiring.
inline std::optional<Carrier> quotient(const Carrier& u, const std::vector<std::size_t>& cls) {
  std::size_t k = *std::max_element(cls.begin(), cls.end()) + 1;
  Carrier q;
  q.n = k;
  q.mul.assign(k, std::vector<Index>(k, k));
  for (Index x = 0; x < u.n; ++x)
    for (Index y = 0; y < u.n; ++y) {
      Index& slot = q.mul[cls[x]][cls[y]];
      if (slot != k && slot != cls[u.mul[x][y]]) return std::nullopt;
      slot = cls[u.mul[x][y]];
    }
  // Ghost classes, ordered by their ghost members; interleaving is fatal.
  std::vector<std::size_t> low(k, u.n), high(k, 0);
  std::vector<bool> has_ghost(k, false);
  for (Index g : u.ghosts) {
    std::size_t r = ghost_pos(u, g);
    has_ghost[cls[g]] = true;
    low[cls[g]] = std::min(low[cls[g]], r);
    high[cls[g]] = std::max(high[cls[g]], r);
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (a != b && has_ghost[a] && has_ghost[b] && low[a] < high[b] && low[b] < high[a]) return std::nullopt;
  for (std::size_t a = 0; a < k; ++a)
    if (has_ghost[a]) q.ghosts.push_back(a);
  std::sort(q.ghosts.begin(), q.ghosts.end(), [&](Index a, Index b) { return low[a] < low[b]; });
  q.e = cls[u.e];
  q.one = cls[u.one];
  if (semiring_violation(q)) return std::nullopt;
  return q;
}

// U ⊔ (M′∖f(M)) with x·z = f(ex)·z; mprime given by its table, order and one.
struct Extension {
  Carrier carrier;
  std::vector<Index> of_new;  // M′ element -> carrier index
};

inline Extension ghost_extension(const Carrier& u, const Table& mp, const std::vector<Index>& order,
                                 const std::vector<Index>& f) {
  std::size_t big = mp.size();
  std::vector<std::optional<Index>> where(big);
  for (std::size_t r = 0; r < f.size(); ++r) where[f[r]] = u.ghosts[r];
  Extension ext;
  ext.of_new.assign(big, 0);
  std::size_t n = u.n;
  for (Index z = 0; z < big; ++z) ext.of_new[z] = where[z] ? *where[z] : n++;
  auto to_prime = [&](Index g) {  // U ghost -> M′
    return f[ghost_pos(u, g)];
  };
  std::vector<Index> back(n, big);  // carrier ghost -> M′
  for (Index z = 0; z < big; ++z) back[ext.of_new[z]] = z;
  Carrier& c = ext.carrier;
  c.n = n;
  c.mul.assign(n, std::vector<Index>(n));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      if (x < u.n && y < u.n) {
        c.mul[x][y] = u.mul[x][y];
        continue;
      }
      Index px = x < u.n ? to_prime(u.mul[u.e][x]) : back[x];
      Index py = y < u.n ? to_prime(u.mul[u.e][y]) : back[y];
      c.mul[x][y] = ext.of_new[mp[px][py]];
    }
  for (Index z : order) c.ghosts.push_back(ext.of_new[z]);
  c.e = u.e;
  c.one = u.one;
  return ext;
}

// ---- bipotent tables ----

// Tables on {0..n-1} with index = rank that are bipotent semirings; the
// rank order admits no non-trivial automorphism, so these are the
// isomorphism classes.
inline std::size_t count_bipotent(std::size_t n) {
  std::size_t count = 0;
  std::vector<std::pair<Index, Index>> free;
  for (Index x = 1; x < n; ++x)
    for (Index y = x; y < n; ++y) free.push_back({x, y});
  for (Index one = 1; one < n; ++one) {
    std::vector<Index> v(free.size(), 0);
    for (;;) {
      Table m(n, std::vector<Index>(n, 0));
      for (std::size_t i = 0; i < free.size(); ++i) m[free[i].first][free[i].second] = m[free[i].second][free[i].first] = v[i];
      bool ok = true;
      for (Index x = 0; ok && x < n; ++x) ok = m[one][x] == x;
      for (Index x = 0; ok && x < n; ++x)
        for (Index y = 0; ok && y < n; ++y)
          for (Index z = 0; ok && z < n; ++z) {
            ok = m[m[x][y]][z] == m[x][m[y][z]];
            if (ok && x <= y) ok = m[x][z] <= m[y][z];
          }
      if (ok) ++count;
      std::size_t i = 0;
      while (i < v.size() && ++v[i] == n) v[i++] = 0;
      if (i == v.size()) break;
    }
  }
  return count;
}

// ---- valuations ----

// v(0) = 0, v(1) = 1, multiplicative, v(a+b) ≤ max(v(a), v(b)).
inline bool is_m_valuation(const strop::FiniteMValuation& v) {
  const auto& r = v.ring;
  const auto& t = v.target;
  if (v.map[r.zero] != t.zero() || v.map[r.one] != t.one()) return false;
  for (Index a = 0; a < r.size(); ++a)
    for (Index b = 0; b < r.size(); ++b) {
      if (v.map[r.prod(a, b)] != t.mul(v.map[a], v.map[b])) return false;
      if (t.rank(v.map[r.sum(a, b)]) > std::max(t.rank(v.map[a]), t.rank(v.map[b]))) return false;
    }
  return true;
}

}  // namespace oracle
