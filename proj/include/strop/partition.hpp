#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace strop {

using Index = std::size_t;
using Subset = std::vector<Index>;  // sorted, no duplicates

// Equivalence relation on {0, ..., n-1} in canonical form: class ids are
// numbered by first occurrence, so two partitions are equal iff their
// class_of vectors are equal.
class Partition {
 public:
  Partition() = default;
  static Partition identity(std::size_t n);
  static Partition all(std::size_t n);
  // Throws Error{Malformed} unless blocks cover {0..n-1} disjointly.
  static Partition from_blocks(std::size_t n, const std::vector<Subset>& blocks);
  // Any labelling; relabelled canonically.
  static Partition from_labels(const std::vector<std::size_t>& labels);
  // Classes of x ~ y iff key(x) == key(y).
  template <class Key>
  static Partition kernel(std::size_t n, Key key) {
    std::vector<std::size_t> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
      labels[x] = x;
      for (std::size_t y = 0; y < x; ++y) {
        if (key(x) == key(y)) {
          labels[x] = labels[y];
          break;
        }
      }
    }
    return from_labels(labels);
  }

  std::size_t size() const { return class_of_.size(); }
  std::size_t num_classes() const { return num_classes_; }
  std::size_t class_of(Index x) const { return class_of_[x]; }
  const std::vector<std::size_t>& labels() const { return class_of_; }
  bool related(Index x, Index y) const { return class_of_[x] == class_of_[y]; }
  std::vector<Subset> blocks() const;
  Subset block_of(Index x) const;
  bool is_identity() const { return num_classes_ == class_of_.size(); }

  // Every class of *this lies inside a class of coarser.
  bool refines(const Partition& coarser) const;
  Partition meet(const Partition& other) const;
  Partition restrict_to(const Subset& elements) const;  // indices relative to `elements`

  bool operator==(const Partition& other) const { return class_of_ == other.class_of_; }
  bool operator!=(const Partition& other) const { return !(*this == other); }
  bool operator<(const Partition& other) const { return class_of_ < other.class_of_; }

 private:
  std::vector<std::size_t> class_of_;
  std::size_t num_classes_ = 0;
};

// Union-find used by closure computations.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t x, std::size_t y);  // true if merged two classes
  Partition partition();

 private:
  std::vector<std::size_t> parent_;
};

// Calls visit on every partition of an n-set in restricted-growth order.
// Throws Error{TooLarge} for n > 10.
void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> all_partitions(std::size_t n);
std::size_t bell_number(std::size_t n);

std::string format_blocks(const Partition& p, const std::vector<std::string>& names);

bool contains(const Subset& s, Index x);
Subset subset_union(const Subset& a, const Subset& b);
bool is_subset(const Subset& a, const Subset& b);

}  // namespace strop
