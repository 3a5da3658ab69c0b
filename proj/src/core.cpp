#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "strop/error.hpp"
#include "strop/partition.hpp"
#include "strop/rational.hpp"
#include "strop/report.hpp"

namespace strop {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::MalformedCarrier: return "MalformedCarrier";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::ForeignElement: return "ForeignElement";
    case ErrorKind::NotMultiplicative: return "NotMultiplicative";
    case ErrorKind::NotOrderCompatible: return "NotOrderCompatible";
    case ErrorKind::BadRank: return "BadRank";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::GhostSetMismatch: return "GhostSetMismatch";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::NotSubsemiring: return "NotSubsemiring";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::LawViolation: return "LawViolation";
    case ErrorKind::TargetNotCancellative: return "TargetNotCancellative";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::NotGroupLike: return "NotGroupLike";
    case ErrorKind::DivisionByZeroFunction: return "DivisionByZeroFunction";
    case ErrorKind::InfiniteUnsupported: return "InfiniteUnsupported";
    case ErrorKind::NotIdeal: return "NotIdeal";
    case ErrorKind::NotSubmonoid: return "NotSubmonoid";
    case ErrorKind::NotInStabilizer: return "NotInStabilizer";
    case ErrorKind::GhostsNotContained: return "GhostsNotContained";
    case ErrorKind::TangiblesNotClosed: return "TangiblesNotClosed";
    case ErrorKind::FiberViolation: return "FiberViolation";
    case ErrorKind::PhiNotOrderCompatible: return "PhiNotOrderCompatible";
    case ErrorKind::FiberMismatch: return "FiberMismatch";
    case ErrorKind::NotRefinement: return "NotRefinement";
    case ErrorKind::GhostPartNotIdentity: return "GhostPartNotIdentity";
    case ErrorKind::UnsupportedGamma: return "UnsupportedGamma";
    case ErrorKind::NotSaturated: return "NotSaturated";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::PhiNotHomomorphic: return "PhiNotHomomorphic";
    case ErrorKind::NotTE: return "NotTE";
  }
  return "Unknown";
}

// ---- rationals ----

Rational parse_rational(std::string_view text) {
  auto bad = [&] { fail(ErrorKind::Malformed, "not a rational: '" + std::string(text) + "'"); };
  if (text.empty()) bad();
  std::size_t slash = text.find('/');
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) bad();
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Integer p(n, 10), q(std::string(den), 10);
  if (q == 0) bad();
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

long ord_p(const Rational& q, unsigned long p) {
  require(q != 0, ErrorKind::Malformed, "order of zero");
  long k = 0;
  Integer num = q.get_num(), den = q.get_den();
  while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
    num /= p;
    ++k;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
    den /= p;
    --k;
  }
  return k;
}

// ---- reports ----

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const AxiomResult* ValidationReport::first_failure() const {
  for (const auto& r : results)
    if (!r.passed) return &r;
  return nullptr;
}

const AxiomResult* ValidationReport::find(const std::string& axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return &r;
  return nullptr;
}

bool ValidationReport::passed(const std::string& axiom) const {
  const AxiomResult* r = find(axiom);
  return r != nullptr && r->passed;
}

void ValidationReport::record(const std::string& axiom, std::uint64_t checked,
                              std::optional<Witness> witness, ErrorKind kind) {
  AxiomResult r;
  r.axiom = axiom;
  r.checked = checked;
  r.kind = kind;
  if (witness) {
    r.passed = false;
    r.witness = std::move(*witness);
  }
  results.push_back(std::move(r));
}

void ValidationReport::throw_if_failed() const {
  if (const AxiomResult* r = first_failure()) {
    std::string w;
    for (std::size_t i = 0; i < r->witness.size(); ++i) w += (i ? ", " : "") + r->witness[i];
    fail(r->kind, subject + ": " + r->axiom + " fails at (" + w + ")");
  }
}

// ---- partitions ----

Partition Partition::from_labels(const std::vector<std::size_t>& labels) {
  Partition p;
  p.class_of_.resize(labels.size());
  std::vector<std::pair<std::size_t, std::size_t>> seen;  // label -> class id
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](auto& kv) { return kv.first == labels[x]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[x], seen.size());
      p.class_of_[x] = seen.size() - 1;
    } else {
      p.class_of_[x] = it->second;
    }
  }
  p.num_classes_ = seen.size();
  return p;
}

Partition Partition::identity(std::size_t n) {
  std::vector<std::size_t> l(n);
  std::iota(l.begin(), l.end(), 0);
  return from_labels(l);
}

Partition Partition::all(std::size_t n) { return from_labels(std::vector<std::size_t>(n, 0)); }

Partition Partition::from_blocks(std::size_t n, const std::vector<Subset>& blocks) {
  std::vector<std::size_t> labels(n, n + 1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    require(!blocks[b].empty(), ErrorKind::Malformed, "empty block");
    for (Index x : blocks[b]) {
      require(x < n, ErrorKind::Malformed, "block element out of range");
      require(labels[x] == n + 1, ErrorKind::Malformed, "element in two blocks");
      labels[x] = b;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    require(labels[x] != n + 1, ErrorKind::Malformed, "blocks do not cover the carrier");
  return from_labels(labels);
}

std::vector<Subset> Partition::blocks() const {
  std::vector<Subset> out(num_classes_);
  for (Index x = 0; x < class_of_.size(); ++x) out[class_of_[x]].push_back(x);
  return out;
}

Subset Partition::block_of(Index x) const {
  Subset s;
  for (Index y = 0; y < class_of_.size(); ++y)
    if (class_of_[y] == class_of_[x]) s.push_back(y);
  return s;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) return false;
  std::vector<std::size_t> image(num_classes_, static_cast<std::size_t>(-1));
  for (Index x = 0; x < size(); ++x) {
    std::size_t& img = image[class_of_[x]];
    if (img == static_cast<std::size_t>(-1)) img = coarser.class_of_[x];
    else if (img != coarser.class_of_[x]) return false;
  }
  return true;
}

Partition Partition::meet(const Partition& other) const {
  std::vector<std::size_t> labels(size());
  for (Index x = 0; x < size(); ++x) labels[x] = class_of_[x] * (other.num_classes_ + 1) + other.class_of_[x];
  return from_labels(labels);
}

Partition Partition::restrict_to(const Subset& elements) const {
  std::vector<std::size_t> labels;
  labels.reserve(elements.size());
  for (Index x : elements) labels.push_back(class_of_[x]);
  return from_labels(labels);
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (x < y) std::swap(x, y);
  parent_[x] = y;
  return true;
}

Partition DisjointSets::partition() {
  std::vector<std::size_t> labels(parent_.size());
  for (std::size_t x = 0; x < parent_.size(); ++x) labels[x] = find(x);
  return Partition::from_labels(labels);
}

void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& visit) {
  require(n <= 10, ErrorKind::TooLarge, "partition enumeration is bounded by 10 elements");
  if (n == 0) {
    visit(Partition::from_labels({}));
    return;
  }
  std::vector<std::size_t> a(n, 0), maxv(n, 0);
  while (true) {
    visit(Partition::from_labels(a));
    // next restricted growth string
    std::size_t i = n - 1;
    while (i > 0 && a[i] == maxv[i - 1] + 1) --i;
    if (i == 0) return;
    ++a[i];
    maxv[i] = std::max(maxv[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      maxv[j] = maxv[i];
    }
  }
}

std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::size_t bell_number(std::size_t n) {
  // Bell triangle.
  std::vector<std::size_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (std::size_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::string format_blocks(const Partition& p, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "{";
  auto bs = p.blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    out << (b ? "," : "") << "{";
    for (std::size_t i = 0; i < bs[b].size(); ++i) out << (i ? "," : "") << names[bs[b][i]];
    out << "}";
  }
  out << "}";
  return out.str();
}

bool contains(const Subset& s, Index x) { return std::binary_search(s.begin(), s.end(), x); }

Subset subset_union(const Subset& a, const Subset& b) {
  Subset out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const Subset& a, const Subset& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace strop
