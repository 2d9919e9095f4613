#include "selgames/group.hpp"

#include <algorithm>
#include <cstdlib>

namespace selgames {

// ---------------------------------------------------------------------------
// IndexSet

IndexSet::IndexSet(std::initializer_list<Index> indices) {
  indices_.assign(indices);
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()),
                 indices_.end());
}

IndexSet IndexSet::of(std::vector<Index> indices) {
  IndexSet s;
  s.indices_ = std::move(indices);
  std::sort(s.indices_.begin(), s.indices_.end());
  s.indices_.erase(std::unique(s.indices_.begin(), s.indices_.end()),
                   s.indices_.end());
  return s;
}

bool IndexSet::contains(Index i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

bool IndexSet::subset_of(const IndexSet& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(),
                       indices_.begin(), indices_.end());
}

IndexSet IndexSet::union_with(const IndexSet& other) const {
  IndexSet out;
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                 other.indices_.end(), std::back_inserter(out.indices_));
  return out;
}

IndexSet IndexSet::intersect_with(const IndexSet& other) const {
  IndexSet out;
  std::set_intersection(indices_.begin(), indices_.end(),
                        other.indices_.begin(), other.indices_.end(),
                        std::back_inserter(out.indices_));
  return out;
}

json IndexSet::to_json() const { return json(indices_); }

IndexSet IndexSet::from_json(const json& j) {
  if (!j.is_array()) throw ConfigError("index set must be a JSON array");
  return of(j.get<std::vector<Index>>());
}

// ---------------------------------------------------------------------------
// ComponentGroup

ComponentGroup ComponentGroup::integers() {
  ComponentGroup g;
  g.kind_ = Kind::Integers;
  return g;
}

ComponentGroup ComponentGroup::cyclic(Value order) {
  if (order < 1) throw ConfigError("cyclic order must be at least 1");
  ComponentGroup g;
  g.kind_ = Kind::Cyclic;
  g.order_ = order;
  return g;
}

ComponentGroup ComponentGroup::table(std::vector<std::vector<Value>> op_table) {
  const auto n = static_cast<Value>(op_table.size());
  if (n == 0) throw ConfigError("operation table must be non-empty");
  for (const auto& row : op_table) {
    if (static_cast<Value>(row.size()) != n)
      throw ConfigError("operation table must be square");
    for (Value v : row)
      if (v < 0 || v >= n)
        throw ConfigError("operation table entry out of range");
  }
  // Find the (necessarily unique) two-sided identity.
  Value identity = -1;
  for (Value e = 0; e < n; ++e) {
    bool ok = true;
    for (Value a = 0; a < n && ok; ++a)
      ok = op_table[static_cast<std::size_t>(e)][static_cast<std::size_t>(a)] ==
               a &&
           op_table[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)] ==
               a;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw ConfigError("operation table has no identity");
  // Inverses.
  std::vector<Value> inv(static_cast<std::size_t>(n), -1);
  for (Value a = 0; a < n; ++a) {
    for (Value b = 0; b < n; ++b) {
      if (op_table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ==
              identity &&
          op_table[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] ==
              identity) {
        inv[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (inv[static_cast<std::size_t>(a)] < 0)
      throw ConfigError("operation table element has no inverse");
  }
  // Associativity, the expensive check, last.
  for (Value a = 0; a < n; ++a)
    for (Value b = 0; b < n; ++b)
      for (Value c = 0; c < n; ++c) {
        const Value ab =
            op_table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        const Value bc =
            op_table[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
        if (op_table[static_cast<std::size_t>(ab)]
                    [static_cast<std::size_t>(c)] !=
            op_table[static_cast<std::size_t>(a)]
                    [static_cast<std::size_t>(bc)])
          throw ConfigError("operation table is not associative");
      }
  ComponentGroup g;
  g.kind_ = Kind::Table;
  g.order_ = n;
  g.identity_ = identity;
  g.table_ = std::move(op_table);
  g.table_inverse_ = std::move(inv);
  return g;
}

Value ComponentGroup::op(Value a, Value b) const {
  switch (kind_) {
    case Kind::Integers:
      return a + b;
    case Kind::Cyclic: {
      Value r = (a + b) % order_;
      if (r < 0) r += order_;
      return r;
    }
    case Kind::Table:
      return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  std::abort();
}

Value ComponentGroup::inverse(Value a) const {
  switch (kind_) {
    case Kind::Integers:
      return -a;
    case Kind::Cyclic:
      return a == 0 ? 0 : order_ - a;
    case Kind::Table:
      return table_inverse_[static_cast<std::size_t>(a)];
  }
  std::abort();
}

bool ComponentGroup::contains(Value v) const {
  if (kind_ == Kind::Integers) return true;
  return v >= 0 && v < order_;
}

Value ComponentGroup::value_at_rank(std::size_t rank) const {
  if (kind_ == Kind::Integers) {
    // 0, 1, -1, 2, -2, ...
    if (rank == 0) return 0;
    const auto r = static_cast<Value>(rank);
    return (rank % 2 == 1) ? (r + 1) / 2 : -(r / 2);
  }
  if (static_cast<Value>(rank) >= order_)
    throw ConfigError("enumerator rank beyond group order");
  if (kind_ == Kind::Cyclic) return static_cast<Value>(rank);
  // Table: identity first, then remaining values ascending.
  if (rank == 0) return identity_;
  const auto r = static_cast<Value>(rank);
  return r <= identity_ ? r - 1 : r;
}

std::optional<std::size_t> ComponentGroup::rank_of(Value v) const {
  if (!contains(v)) return std::nullopt;
  switch (kind_) {
    case Kind::Integers:
      if (v == 0) return 0;
      return v > 0 ? static_cast<std::size_t>(2 * v - 1)
                   : static_cast<std::size_t>(-2 * v);
    case Kind::Cyclic:
      return static_cast<std::size_t>(v);
    case Kind::Table:
      if (v == identity_) return 0;
      return static_cast<std::size_t>(v < identity_ ? v + 1 : v);
  }
  std::abort();
}

std::optional<std::size_t> ComponentGroup::order() const {
  if (kind_ == Kind::Integers) return std::nullopt;
  return static_cast<std::size_t>(order_);
}

std::vector<Value> ComponentGroup::compact_values(int n) const {
  if (n < 0) throw ConfigError("compact stage must be non-negative");
  std::vector<Value> out;
  if (kind_ == Kind::Integers) {
    out.reserve(static_cast<std::size_t>(2 * n + 1));
    out.push_back(0);
    for (Value v = 1; v <= n; ++v) {
      out.push_back(v);
      out.push_back(-v);
    }
    return out;
  }
  out.reserve(static_cast<std::size_t>(order_));
  for (std::size_t r = 0; r < static_cast<std::size_t>(order_); ++r)
    out.push_back(value_at_rank(r));
  return out;
}

bool ComponentGroup::in_compact(Value v, int n) const {
  if (!contains(v)) return false;
  if (kind_ == Kind::Integers) return v >= -n && v <= n;
  return true;
}

bool ComponentGroup::operator==(const ComponentGroup& other) const {
  return kind_ == other.kind_ && order_ == other.order_ &&
         identity_ == other.identity_ && table_ == other.table_;
}

json ComponentGroup::to_json() const {
  switch (kind_) {
    case Kind::Integers:
      return json{{"kind", "integers"}};
    case Kind::Cyclic:
      return json{{"kind", "cyclic"}, {"order", order_}};
    case Kind::Table:
      return json{{"kind", "table"}, {"table", table_}};
  }
  std::abort();
}

ComponentGroup ComponentGroup::from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "integers") return integers();
  if (kind == "cyclic") return cyclic(j.at("order").get<Value>());
  if (kind == "table")
    return table(j.at("table").get<std::vector<std::vector<Value>>>());
  throw ConfigError("unknown component kind: " + kind);
}

// ---------------------------------------------------------------------------
// GroupSpec

std::string track_name(Track t) {
  return t == Track::Product ? "product" : "box-gdelta";
}

Track track_from_name(const std::string& name) {
  if (name == "product") return Track::Product;
  if (name == "box-gdelta") return Track::BoxGdelta;
  throw ConfigError("unknown track: " + name);
}

GroupSpec::GroupSpec(ComponentGroup uniform, std::string kappa, Track track)
    : fallback_(std::move(uniform)), kappa_(std::move(kappa)), track_(track) {
  if (track_ == Track::Product && !fallback_.order().has_value() &&
      fallback_.kind() != ComponentGroup::Kind::Integers)
    throw ConfigError("product track needs sigma-compact components");
}

GroupSpec::GroupSpec(std::vector<ComponentGroup> prefix,
                     ComponentGroup fallback, std::string kappa, Track track)
    : prefix_(std::move(prefix)),
      fallback_(std::move(fallback)),
      kappa_(std::move(kappa)),
      track_(track) {}

const ComponentGroup& GroupSpec::component(Index i) const {
  if (static_cast<std::size_t>(i) < prefix_.size())
    return prefix_[static_cast<std::size_t>(i)];
  return fallback_;
}

bool GroupSpec::operator==(const GroupSpec& other) const {
  return prefix_ == other.prefix_ && fallback_ == other.fallback_ &&
         kappa_ == other.kappa_ && track_ == other.track_;
}

json GroupSpec::to_json() const {
  json j{{"fallback", fallback_.to_json()},
         {"kappa", kappa_},
         {"track", track_name(track_)}};
  if (!prefix_.empty()) {
    json p = json::array();
    for (const auto& c : prefix_) p.push_back(c.to_json());
    j["prefix"] = std::move(p);
  }
  return j;
}

GroupSpec GroupSpec::from_json(const json& j) {
  ComponentGroup fallback = ComponentGroup::from_json(j.at("fallback"));
  std::vector<ComponentGroup> prefix;
  if (j.contains("prefix"))
    for (const auto& c : j.at("prefix"))
      prefix.push_back(ComponentGroup::from_json(c));
  return GroupSpec(std::move(prefix), std::move(fallback),
                   j.at("kappa").get<std::string>(),
                   track_from_name(j.at("track").get<std::string>()));
}

GroupSpec disjoint_union(const GroupSpec& a, const GroupSpec& b,
                         Index offset) {
  if (a.track() != b.track())
    throw ConfigError("disjoint union across different tracks");
  if (a.prefix_size() > offset)
    throw ConfigError("left spec has explicit components beyond the offset");
  // Indices below the offset follow a, indices at or above it follow b
  // shifted down by the offset. Materializing a up to the offset plus b's
  // explicit prefix makes this exact: beyond that everything is b's
  // fallback.
  std::vector<ComponentGroup> prefix;
  prefix.reserve(offset + b.prefix_size());
  for (Index i = 0; i < offset; ++i) prefix.push_back(a.component(i));
  for (std::size_t i = 0; i < b.prefix_size(); ++i)
    prefix.push_back(b.component(static_cast<Index>(i)));
  return GroupSpec(std::move(prefix), b.fallback(),
                   a.kappa() + "+" + b.kappa(), a.track());
}

GroupSpec finite_power(const GroupSpec& spec, Index copies, Index stride) {
  if (copies == 0) throw ConfigError("finite power needs at least one copy");
  if (stride == 0) throw ConfigError("finite power needs a positive stride");
  if (spec.prefix_size() > stride)
    throw ConfigError("stride too small for the component prefix");
  // Copy c's coordinate i lives at index c*stride + i. Uniform specs stay
  // uniform; a prefixed spec repeats its prefix once per copy block.
  if (spec.prefix_size() == 0)
    return GroupSpec(spec.fallback(),
                     spec.kappa() + "*" + std::to_string(copies),
                     spec.track());
  std::vector<ComponentGroup> prefix;
  prefix.reserve(static_cast<std::size_t>(copies) * stride);
  for (Index c = 0; c < copies; ++c)
    for (Index i = 0; i < stride; ++i) prefix.push_back(spec.component(i));
  return GroupSpec(std::move(prefix), spec.fallback(),
                   spec.kappa() + "*" + std::to_string(copies), spec.track());
}

// ---------------------------------------------------------------------------
// Element

Element Element::from_entries(std::vector<std::pair<Index, Value>> entries,
                              const GroupSpec& spec) {
  std::sort(entries.begin(), entries.end());
  for (std::size_t k = 1; k < entries.size(); ++k)
    if (entries[k].first == entries[k - 1].first)
      throw MalformedElement("duplicate coordinate " +
                             std::to_string(entries[k].first));
  Element e;
  for (const auto& [i, v] : entries) {
    const ComponentGroup& g = spec.component(i);
    if (!g.contains(v))
      throw MalformedElement("value " + std::to_string(v) +
                             " outside component at index " +
                             std::to_string(i));
    if (v != g.identity()) e.entries_.emplace_back(i, v);
  }
  return e;
}

Value Element::value_at(Index i, const GroupSpec& spec) const {
  for (const auto& [j, v] : entries_) {
    if (j == i) return v;
    if (j > i) break;
  }
  return spec.component(i).identity();
}

bool Element::has_support_at(Index i) const {
  for (const auto& [j, v] : entries_) {
    if (j == i) return true;
    if (j > i) break;
  }
  return false;
}

IndexSet Element::support() const {
  std::vector<Index> idx;
  idx.reserve(entries_.size());
  for (const auto& [i, v] : entries_) idx.push_back(i);
  return IndexSet::of(std::move(idx));
}

json Element::to_json() const {
  json j = json::array();
  for (const auto& [i, v] : entries_) j.push_back(json::array({i, v}));
  return j;
}

Element Element::from_json(const json& j, const GroupSpec& spec) {
  if (!j.is_array()) throw MalformedElement("element must be a JSON array");
  std::vector<std::pair<Index, Value>> entries;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw MalformedElement("element entry must be an [index, value] pair");
    entries.emplace_back(pair[0].get<Index>(), pair[1].get<Value>());
  }
  return from_entries(std::move(entries), spec);
}

std::uint64_t mix_hash(std::uint64_t state) {
  // splitmix64 finalizer
  state += 0x9e3779b97f4a7c15ULL;
  state = (state ^ (state >> 30)) * 0xbf58476d1ce4e5b9ULL;
  state = (state ^ (state >> 27)) * 0x94d049bb133111ebULL;
  return state ^ (state >> 31);
}

std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) {
  return mix_hash(seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) +
                          (seed >> 2)));
}

std::uint64_t element_hash64(const Element& e) {
  std::uint64_t h = 0x5e1ec7109a3e5ULL;
  for (const auto& [i, v] : e.entries()) {
    h = hash_combine(h, static_cast<std::uint64_t>(i));
    h = hash_combine(h, static_cast<std::uint64_t>(v));
  }
  return h;
}

std::size_t ElementHash::operator()(const Element& e) const {
  return static_cast<std::size_t>(element_hash64(e));
}

Element group_op(const Element& a, const Element& b, const GroupSpec& spec) {
  std::vector<std::pair<Index, Value>> out;
  out.reserve(a.entries().size() + b.entries().size());
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() || ib != b.entries().end()) {
    if (ib == b.entries().end() ||
        (ia != a.entries().end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.entries().end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      const ComponentGroup& g = spec.component(ia->first);
      const Value v = g.op(ia->second, ib->second);
      if (v != g.identity()) out.emplace_back(ia->first, v);
      ++ia;
      ++ib;
    }
  }
  // Merging two canonical entry lists yields a canonical list.
  return Element::from_canonical(std::move(out));
}

Element group_inverse(const Element& a, const GroupSpec& spec) {
  std::vector<std::pair<Index, Value>> out;
  out.reserve(a.entries().size());
  for (const auto& [i, v] : a.entries())
    out.emplace_back(i, spec.component(i).inverse(v));
  // The inverse of a non-identity value is never the identity.
  return Element::from_canonical(std::move(out));
}

Element Element::from_canonical(
    std::vector<std::pair<Index, Value>> entries) {
  Element e;
  e.entries_ = std::move(entries);
  return e;
}

Element restrict_to(const Element& a, const IndexSet& keep) {
  std::vector<std::pair<Index, Value>> out;
  for (const auto& [i, v] : a.entries())
    if (keep.contains(i)) out.emplace_back(i, v);
  // Filtering canonical entries keeps them canonical.
  return Element::from_canonical(std::move(out));
}

// ---------------------------------------------------------------------------
// Window

Window Window::first(Index n) {
  std::vector<Index> idx;
  idx.reserve(n);
  for (Index i = 0; i < n; ++i) idx.push_back(i);
  return of(IndexSet::of(std::move(idx)));
}

Window Window::of(IndexSet indices) {
  Window w;
  w.set_ = std::move(indices);
  return w;
}

void Window::insert(Index i) { set_ = set_.union_with(IndexSet{i}); }

}  // namespace selgames
