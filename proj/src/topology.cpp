#include "selgames/topology.hpp"

#include <algorithm>

namespace selgames {

// ---------------------------------------------------------------------------
// NbdSubgroup / NbdCover

bool NbdSubgroup::contains(const Element& x) const {
  return restrict_to(x, constraint_set).is_identity();
}

json NbdSubgroup::to_json() const {
  return json{{"B", constraint_set.to_json()},
              {"countable", conceptually_countable}};
}

NbdSubgroup NbdSubgroup::from_json(const json& j) {
  NbdSubgroup n;
  n.constraint_set = IndexSet::from_json(j.at("B"));
  n.conceptually_countable = j.value("countable", false);
  return n;
}

json NbdCover::to_json() const {
  json j = subgroup.to_json();
  j["type"] = "nbdCover";
  return j;
}

NbdCover NbdCover::from_json(const json& j) {
  return NbdCover{NbdSubgroup::from_json(j)};
}

// ---------------------------------------------------------------------------
// BasicOpen

BasicOpen BasicOpen::from_constraints(
    std::vector<std::pair<Index, std::vector<Value>>> constraints,
    const GroupSpec& spec) {
  std::sort(constraints.begin(), constraints.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    if (k > 0 && constraints[k].first == constraints[k - 1].first)
      throw ConfigError("duplicate constrained index " +
                        std::to_string(constraints[k].first));
    auto& vals = constraints[k].second;
    if (vals.empty())
      throw ConfigError("empty constraint value set at index " +
                        std::to_string(constraints[k].first));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    const ComponentGroup& g = spec.component(constraints[k].first);
    for (Value v : vals)
      if (!g.contains(v))
        throw ConfigError("constraint value " + std::to_string(v) +
                          " outside component at index " +
                          std::to_string(constraints[k].first));
  }
  BasicOpen o;
  o.constraints_ = std::move(constraints);
  return o;
}

BasicOpen BasicOpen::coset(const Element& x, const IndexSet& B,
                           const GroupSpec& spec) {
  std::vector<std::pair<Index, std::vector<Value>>> cs;
  cs.reserve(B.size());
  for (Index i : B) cs.emplace_back(i, std::vector<Value>{x.value_at(i, spec)});
  return from_constraints(std::move(cs), spec);
}

bool BasicOpen::contains(const Element& x, const GroupSpec& spec) const {
  for (const auto& [i, vals] : constraints_)
    if (!std::binary_search(vals.begin(), vals.end(), x.value_at(i, spec)))
      return false;
  return true;
}

IndexSet BasicOpen::constrained_indices() const {
  std::vector<Index> idx;
  idx.reserve(constraints_.size());
  for (const auto& [i, vals] : constraints_) idx.push_back(i);
  return IndexSet::of(std::move(idx));
}

const std::vector<Value>* BasicOpen::constraint_at(Index i) const {
  auto it = std::lower_bound(
      constraints_.begin(), constraints_.end(), i,
      [](const auto& c, Index key) { return c.first < key; });
  if (it == constraints_.end() || it->first != i) return nullptr;
  return &it->second;
}

std::optional<BasicOpen> BasicOpen::intersect(const BasicOpen& other) const {
  std::vector<std::pair<Index, std::vector<Value>>> cs;
  auto ia = constraints_.begin();
  auto ib = other.constraints_.begin();
  while (ia != constraints_.end() || ib != other.constraints_.end()) {
    if (ib == other.constraints_.end() ||
        (ia != constraints_.end() && ia->first < ib->first)) {
      cs.push_back(*ia++);
    } else if (ia == constraints_.end() || ib->first < ia->first) {
      cs.push_back(*ib++);
    } else {
      std::vector<Value> vals;
      std::set_intersection(ia->second.begin(), ia->second.end(),
                            ib->second.begin(), ib->second.end(),
                            std::back_inserter(vals));
      if (vals.empty()) return std::nullopt;
      cs.emplace_back(ia->first, std::move(vals));
      ++ia;
      ++ib;
    }
  }
  BasicOpen o;
  o.constraints_ = std::move(cs);
  return o;
}

json BasicOpen::to_json() const {
  json cs = json::array();
  for (const auto& [i, vals] : constraints_)
    cs.push_back(json::array({i, vals}));
  return json{{"type", "basicOpen"}, {"constraints", std::move(cs)}};
}

BasicOpen BasicOpen::from_json(const json& j) {
  BasicOpen o;
  for (const auto& c : j.at("constraints")) {
    if (!c.is_array() || c.size() != 2)
      throw ConfigError("basic open constraint must be [index, values]");
    o.constraints_.emplace_back(c[0].get<Index>(),
                                c[1].get<std::vector<Value>>());
  }
  std::sort(o.constraints_.begin(), o.constraints_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [i, vals] : o.constraints_) {
    std::sort(vals.begin(), vals.end());
    if (vals.empty()) throw ConfigError("empty constraint value set");
  }
  return o;
}

// ---------------------------------------------------------------------------
// Coset predicates

bool coset_equal(const Element& x, const Element& y, const IndexSet& B,
                 const GroupSpec& spec) {
  (void)spec;
  return restrict_to(x, B) == restrict_to(y, B);
}

namespace {

// Does the value set admit every value of the component?
bool admits_whole_component(const std::vector<Value>& vals,
                            const ComponentGroup& g) {
  const auto order = g.order();
  if (!order.has_value()) return false;  // no finite set covers Integers
  return vals.size() == *order;          // values are unique and in-domain
}

}  // namespace

bool coset_inside_open(const Element& x, const IndexSet& B,
                       const BasicOpen& V, const GroupSpec& spec) {
  for (const auto& [i, vals] : V.constraints()) {
    if (B.contains(i)) {
      if (!std::binary_search(vals.begin(), vals.end(), x.value_at(i, spec)))
        return false;
    } else {
      // The coset leaves this coordinate free.
      if (!admits_whole_component(vals, spec.component(i))) return false;
    }
  }
  return true;
}

bool coset_inside_coset(const Element& x, const IndexSet& B,
                        const Element& y, const IndexSet& D,
                        const GroupSpec& spec) {
  return D.subset_of(B) && coset_equal(x, y, D, spec);
}

bool basic_open_subset(const BasicOpen& a, const BasicOpen& b,
                       const GroupSpec& spec) {
  for (const auto& [i, vals_b] : b.constraints()) {
    const std::vector<Value>* vals_a = a.constraint_at(i);
    if (vals_a == nullptr) {
      if (!admits_whole_component(vals_b, spec.component(i))) return false;
      continue;
    }
    if (!std::includes(vals_b.begin(), vals_b.end(), vals_a->begin(),
                       vals_a->end()))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Compact pieces

bool in_compact_piece(const Element& x, int n, const GroupSpec& spec) {
  if (n < 0) return false;
  if (x.entries().size() > static_cast<std::size_t>(n)) return false;
  for (const auto& [i, v] : x.entries())
    if (!spec.component(i).in_compact(v, n)) return false;
  return true;
}

std::vector<Element> enumerate_compact_piece(int n, const Window& window,
                                             const GroupSpec& spec,
                                             std::size_t cap) {
  if (n < 0) throw ConfigError("compact piece rank must be non-negative");
  std::vector<Element> out;
  out.push_back(Element());  // support size 0

  const auto& idx = window.indices();
  const std::size_t max_k =
      std::min(static_cast<std::size_t>(n), idx.size());

  // Non-identity stage-n values per window index, in enumerator order.
  std::vector<std::vector<Value>> values(idx.size());
  for (std::size_t p = 0; p < idx.size(); ++p) {
    const ComponentGroup& g = spec.component(idx[p]);
    for (Value v : g.compact_values(n))
      if (v != g.identity()) values[p].push_back(v);
  }

  std::vector<std::size_t> combo;
  for (std::size_t k = 1; k <= max_k; ++k) {
    // Lexicographic k-combinations of window positions.
    combo.resize(k);
    for (std::size_t p = 0; p < k; ++p) combo[p] = p;
    while (true) {
      bool feasible = true;
      for (std::size_t p = 0; p < k; ++p)
        if (values[combo[p]].empty()) feasible = false;
      if (feasible) {
        // Odometer over value choices, last position fastest.
        std::vector<std::size_t> pick(k, 0);
        while (true) {
          std::vector<std::pair<Index, Value>> entries;
          entries.reserve(k);
          for (std::size_t p = 0; p < k; ++p)
            entries.emplace_back(idx[combo[p]], values[combo[p]][pick[p]]);
          out.push_back(Element::from_entries(std::move(entries), spec));
          if (out.size() > cap)
            throw ResourceError("compact piece enumeration exceeded cap of " +
                                std::to_string(cap));
          std::size_t p = k;
          while (p > 0) {
            --p;
            if (++pick[p] < values[combo[p]].size()) break;
            pick[p] = 0;
            if (p == 0) goto next_combo;
          }
        }
      }
    next_combo:
      // Advance the combination.
      std::size_t p = k;
      while (p > 0) {
        --p;
        if (combo[p] != p + idx.size() - k) {
          ++combo[p];
          for (std::size_t q = p + 1; q < k; ++q) combo[q] = combo[q - 1] + 1;
          break;
        }
        if (p == 0) goto next_k;
      }
    }
  next_k:;
  }
  return out;
}

// ---------------------------------------------------------------------------
// CoverOracle

CoverOracle::CoverOracle(ChooseFn choose, std::optional<IndexSet> uniform_bound,
                         std::string label)
    : choose_(std::move(choose)),
      uniform_bound_(std::move(uniform_bound)),
      label_(std::move(label)) {}

BasicOpen CoverOracle::pick(const Element& x, const GroupSpec& spec) const {
  if (!choose_) throw ContractError("cover oracle has no choice function");
  BasicOpen open = choose_(x);
  if (!open.contains(x, spec))
    throw ContractError("cover oracle '" + label_ +
                        "' returned a set missing the queried point");
  if (uniform_bound_.has_value() &&
      !open.constrained_indices().subset_of(*uniform_bound_))
    throw ContractError("cover oracle '" + label_ +
                        "' exceeded its declared uniform bound");
  return open;
}

json CoverOracle::descriptor() const {
  json j{{"label", label_}};
  if (uniform_bound_.has_value()) j["uniformBound"] = uniform_bound_->to_json();
  return j;
}

// ---------------------------------------------------------------------------
// Covering lemmas

NbdSubgroup lebesgue_compact(const CoverOracle& cover, int n,
                             const Window& window, const GroupSpec& spec,
                             std::size_t cap) {
  IndexSet B;
  for (const Element& x : enumerate_compact_piece(n, window, spec, cap))
    B = B.union_with(cover.pick(x, spec).constrained_indices());
  return NbdSubgroup{B, spec.track() == Track::BoxGdelta};
}

NbdSubgroup lebesgue_pgroup(const CoverOracle& cover) {
  if (!cover.uniform_bound().has_value())
    throw ContractError("P-group covering lemma needs a declared uniform bound");
  return NbdSubgroup{*cover.uniform_bound(), true};
}

// ---------------------------------------------------------------------------
// CosetRepEnumerator

CosetRepEnumerator::CosetRepEnumerator(IndexSet B, const GroupSpec& spec)
    : B_(std::move(B)), spec_(&spec) {
  bool all_finite = true;
  std::size_t total = 0;
  for (Index i : B_) {
    const auto order = spec.component(i).order();
    rank_caps_.push_back(order);
    if (order.has_value())
      total += *order - 1;
    else
      all_finite = false;
  }
  if (all_finite) max_weight_ = total;
}

void CosetRepEnumerator::reset() {
  weight_ = 0;
  batch_.clear();
  batch_pos_ = 0;
}

bool CosetRepEnumerator::fill_weight_batch() {
  if (max_weight_.has_value() && weight_ > *max_weight_) return false;
  batch_.clear();
  batch_pos_ = 0;
  const auto& idx = B_.indices();
  std::vector<std::size_t> ranks(idx.size(), 0);
  // Distribute the weight over positions, earliest index taking the
  // largest rank first. Recursion depth is |B|.
  auto gen = [&](auto&& self, std::size_t pos, std::size_t remaining) -> void {
    if (pos + 1 == idx.size() || idx.empty()) {
      if (idx.empty()) {
        if (remaining == 0) batch_.push_back(Element());
        return;
      }
      if (rank_caps_[pos].has_value() && remaining >= *rank_caps_[pos]) return;
      ranks[pos] = remaining;
      std::vector<std::pair<Index, Value>> entries;
      for (std::size_t p = 0; p < idx.size(); ++p)
        if (ranks[p] > 0)
          entries.emplace_back(
              idx[p], spec_->component(idx[p]).value_at_rank(ranks[p]));
      batch_.push_back(Element::from_entries(std::move(entries), *spec_));
      return;
    }
    std::size_t hi = remaining;
    if (rank_caps_[pos].has_value())
      hi = std::min(hi, *rank_caps_[pos] - 1);
    for (std::size_t r = hi + 1; r-- > 0;) {
      ranks[pos] = r;
      self(self, pos + 1, remaining - r);
    }
  };
  if (idx.empty()) {
    if (weight_ == 0) batch_.push_back(Element());
  } else {
    gen(gen, 0, weight_);
  }
  ++weight_;
  return true;
}

std::optional<Element> CosetRepEnumerator::next() {
  while (batch_pos_ >= batch_.size()) {
    if (!fill_weight_batch()) return std::nullopt;
  }
  return batch_[batch_pos_++];
}

std::vector<Element> CosetRepEnumerator::prefix(const IndexSet& B,
                                                const GroupSpec& spec,
                                                std::size_t count) {
  CosetRepEnumerator e(B, spec);
  std::vector<Element> out;
  out.reserve(count);
  while (out.size() < count) {
    auto x = e.next();
    if (!x.has_value()) break;
    out.push_back(std::move(*x));
  }
  return out;
}

std::optional<std::size_t> CosetRepEnumerator::rank_of(
    const Element& x, const IndexSet& B, const GroupSpec& spec,
    std::size_t search_cap) {
  CosetRepEnumerator e(B, spec);
  for (std::size_t r = 0; r < search_cap; ++r) {
    auto y = e.next();
    if (!y.has_value()) return std::nullopt;
    if (*y == x) return r;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Coset shifting

std::optional<Element> coset_shift_witness(
    const Element& x, const IndexSet& B,
    const std::function<bool(const Element&)>& predicate,
    const std::vector<Element>& candidates, const GroupSpec& spec) {
  for (const Element& y : candidates) {
    if (!coset_equal(x, y, B, spec) || !predicate(y)) continue;
    // Subgroup neighborhoods make the shifted coset literally the same
    // coset; keep the check as a guard on the algebra.
    if (!coset_inside_coset(x, B, y, B, spec) ||
        !coset_inside_coset(y, B, x, B, spec))
      throw ContractError("coset shift produced a different coset");
    return y;
  }
  return std::nullopt;
}

}  // namespace selgames
