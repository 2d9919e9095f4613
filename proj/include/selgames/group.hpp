#pragma once

// Direct-sum groups G = {f in prod_{a<kappa} G_a : support(f) finite}.
// kappa is a symbolic label only: every computation lives inside a finite
// active window of index ordinals, and everything off-window behaves as the
// identity coordinate.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "selgames/errors.hpp"

namespace selgames {

using Index = std::uint32_t;
using Value = std::int64_t;
using json = nlohmann::json;

// Sorted, duplicate-free set of index ordinals.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<Index> indices);
  static IndexSet of(std::vector<Index> indices);

  bool contains(Index i) const;
  bool subset_of(const IndexSet& other) const;
  IndexSet union_with(const IndexSet& other) const;
  IndexSet intersect_with(const IndexSet& other) const;

  const std::vector<Index>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  bool operator==(const IndexSet& other) const = default;

  json to_json() const;
  static IndexSet from_json(const json& j);

 private:
  std::vector<Index> indices_;
};

// One coordinate group. Three kinds cover every instance the engine plays
// on: the integers, cyclic groups, and an arbitrary finite group given by
// its operation table (values are row/column positions in the table).
class ComponentGroup {
 public:
  enum class Kind { Integers, Cyclic, Table };

  static ComponentGroup integers();
  static ComponentGroup cyclic(Value order);
  // Validates the table exhaustively: closure, associativity, identity,
  // inverses. Throws ConfigError if any axiom fails.
  static ComponentGroup table(std::vector<std::vector<Value>> op_table);

  Kind kind() const { return kind_; }
  Value identity() const { return identity_; }
  Value op(Value a, Value b) const;
  Value inverse(Value a) const;
  bool contains(Value v) const;

  // Enumerator: a bijection rank <-> value with rank 0 = identity.
  // Integers zig-zag 0, 1, -1, 2, -2, ...; finite kinds enumerate in value
  // order starting from the identity.
  Value value_at_rank(std::size_t rank) const;
  std::optional<std::size_t> rank_of(Value v) const;

  std::optional<std::size_t> order() const;  // nullopt for Integers

  // Compact filtration C(n): {-n..n} for Integers, everything for finite
  // kinds. Returned in enumerator order (identity first).
  std::vector<Value> compact_values(int n) const;
  bool in_compact(Value v, int n) const;

  bool operator==(const ComponentGroup& other) const;

  json to_json() const;
  static ComponentGroup from_json(const json& j);

 private:
  ComponentGroup() = default;

  Kind kind_ = Kind::Integers;
  Value order_ = 0;  // Cyclic order, or table size
  Value identity_ = 0;
  std::vector<std::vector<Value>> table_;
  std::vector<Value> table_inverse_;
};

enum class Track { Product, BoxGdelta };

std::string track_name(Track t);
Track track_from_name(const std::string& name);

// Which group we are playing on: a (possibly uniform) assignment of
// component groups to index ordinals, a symbolic cardinal label, and the
// topology track. Product = Tychonoff topology over sigma-compact
// components; BoxGdelta = countable box topology (the Lindelof P-group
// track), where constraint sets stand for countable sets truncated to the
// window.
class GroupSpec {
 public:
  // Default: the direct sum of integers, product track.
  GroupSpec() : GroupSpec(ComponentGroup::integers(), "omega1",
                          Track::Product) {}
  GroupSpec(ComponentGroup uniform, std::string kappa, Track track);
  GroupSpec(std::vector<ComponentGroup> prefix, ComponentGroup fallback,
            std::string kappa, Track track);

  const ComponentGroup& component(Index i) const;
  Track track() const { return track_; }
  const std::string& kappa() const { return kappa_; }
  std::size_t prefix_size() const { return prefix_.size(); }
  const ComponentGroup& fallback() const { return fallback_; }

  bool operator==(const GroupSpec& other) const;

  json to_json() const;
  static GroupSpec from_json(const json& j);

 private:
  std::vector<ComponentGroup> prefix_;
  ComponentGroup fallback_;
  std::string kappa_;
  Track track_;
};

// Two specs over disjoint index ranges glued into one: indices below the
// offset come from a, indices at or above it from b (shifted down). This is
// how finite powers are represented: G^2 of a direct sum over kappa is the
// direct sum over kappa + kappa.
GroupSpec disjoint_union(const GroupSpec& a, const GroupSpec& b, Index offset);

// k-th power by index relabeling with the given stride per copy. Requires
// the explicit component prefix of spec to fit inside one stride.
GroupSpec finite_power(const GroupSpec& spec, Index copies, Index stride);

// Group element in canonical support form: a sorted list of
// (index, value) entries that never stores a component identity.
class Element {
 public:
  Element() = default;  // the group identity

  // Canonicalizes (sorts, drops identity values) and validates every value
  // against its component's domain. Throws MalformedElement on a value
  // outside the component group.
  static Element from_entries(std::vector<std::pair<Index, Value>> entries,
                              const GroupSpec& spec);

  const std::vector<std::pair<Index, Value>>& entries() const {
    return entries_;
  }
  bool is_identity() const { return entries_.empty(); }
  Value value_at(Index i, const GroupSpec& spec) const;
  bool has_support_at(Index i) const;

  IndexSet support() const;

  bool operator==(const Element& other) const = default;
  bool operator<(const Element& other) const { return entries_ < other.entries_; }

  json to_json() const;
  static Element from_json(const json& j, const GroupSpec& spec);

 private:
  friend Element restrict_to(const Element& a, const IndexSet& keep);
  friend Element group_op(const Element& a, const Element& b,
                          const GroupSpec& spec);
  friend Element group_inverse(const Element& a, const GroupSpec& spec);

  // Entries must already be sorted, duplicate-free, and identity-free.
  static Element from_canonical(std::vector<std::pair<Index, Value>> entries);

  std::vector<std::pair<Index, Value>> entries_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const;
};

// splitmix64-based mixing used everywhere determinism across runs matters.
std::uint64_t mix_hash(std::uint64_t state);
std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v);
std::uint64_t element_hash64(const Element& e);

// Componentwise group operation; the result is canonical and its support
// is contained in support(a) | support(b).
Element group_op(const Element& a, const Element& b, const GroupSpec& spec);
Element group_inverse(const Element& a, const GroupSpec& spec);

// Entries filtered to the given coordinates.
Element restrict_to(const Element& a, const IndexSet& keep);

// The active window. It may only grow during a run.
class Window {
 public:
  Window() = default;
  static Window first(Index n);  // {0, .., n-1}
  static Window of(IndexSet indices);

  void insert(Index i);
  bool contains(Index i) const { return set_.contains(i); }
  bool covers(const IndexSet& s) const { return s.subset_of(set_); }
  const IndexSet& index_set() const { return set_; }
  const std::vector<Index>& indices() const { return set_.indices(); }
  std::size_t size() const { return set_.size(); }

  json to_json() const { return set_.to_json(); }
  static Window from_json(const json& j) { return of(IndexSet::from_json(j)); }

 private:
  IndexSet set_;
};

}  // namespace selgames
