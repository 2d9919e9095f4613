#pragma once

// Basic opens, neighborhood subgroups U_B, cosets, compact filtration
// pieces, covers consumed through choice oracles, and the two covering
// lemma operations that extract a single identity neighborhood from a
// cover.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "selgames/group.hpp"

namespace selgames {

// U_B = {x : x is the identity on every index of B}. On the box track B
// stands for a countable constraint set truncated to the window.
struct NbdSubgroup {
  IndexSet constraint_set;
  bool conceptually_countable = false;

  bool contains(const Element& x) const;

  json to_json() const;
  static NbdSubgroup from_json(const json& j);
};

// The cover O(U_B) = {x*U_B : x in G}, ONE's move in the neighborhood
// game. Carrying the subgroup is enough: membership and coset formation
// derive from B.
struct NbdCover {
  NbdSubgroup subgroup;

  json to_json() const;
  static NbdCover from_json(const json& j);
};

// Finitely constrained open set: each constrained index carries a finite
// nonempty set of admissible values; unconstrained coordinates are free.
// A coset x*U_B is the special case of singleton constraints on B.
class BasicOpen {
 public:
  BasicOpen() = default;  // no constraints: the whole group

  static BasicOpen whole_group() { return BasicOpen(); }
  static BasicOpen from_constraints(
      std::vector<std::pair<Index, std::vector<Value>>> constraints,
      const GroupSpec& spec);
  // Singleton constraints pinning x's values on B (identity where x is
  // unsupported).
  static BasicOpen coset(const Element& x, const IndexSet& B,
                         const GroupSpec& spec);

  bool contains(const Element& x, const GroupSpec& spec) const;
  IndexSet constrained_indices() const;
  const std::vector<std::pair<Index, std::vector<Value>>>& constraints()
      const {
    return constraints_;
  }
  const std::vector<Value>* constraint_at(Index i) const;
  bool unconstrained() const { return constraints_.empty(); }

  // Intersection; nullopt when the result is empty.
  std::optional<BasicOpen> intersect(const BasicOpen& other) const;

  bool operator==(const BasicOpen& other) const = default;

  json to_json() const;
  static BasicOpen from_json(const json& j);

 private:
  // Sorted by index; value sets sorted and duplicate-free.
  std::vector<std::pair<Index, std::vector<Value>>> constraints_;
};

// x*U_B and y*U_B are the same coset exactly when x and y agree on B.
bool coset_equal(const Element& x, const Element& y, const IndexSet& B,
                 const GroupSpec& spec);

// Exact decision of x*U_B being contained in V. A free coordinate of the
// coset can take any component value, so a constraint of V off B must
// admit the whole component.
bool coset_inside_open(const Element& x, const IndexSet& B,
                       const BasicOpen& V, const GroupSpec& spec);

// Exact decision of x*U_B within y*U_D: needs D inside B and agreement of
// x and y on D.
bool coset_inside_coset(const Element& x, const IndexSet& B,
                        const Element& y, const IndexSet& D,
                        const GroupSpec& spec);

// Exact decision of one basic open inside another: every constraint of b
// must be implied by a's constraint there (or the component must be small
// enough for b's value set to admit it whole).
bool basic_open_subset(const BasicOpen& a, const BasicOpen& b,
                       const GroupSpec& spec);

// Compact filtration piece: elements with at most n supported coordinates,
// each value inside its component's stage-n compact set.
bool in_compact_piece(const Element& x, int n, const GroupSpec& spec);

// All piece members supported inside the window, in a deterministic order:
// by support size, then by support set, then by value odometer in
// component enumerator order. Throws ResourceError past the cap.
std::vector<Element> enumerate_compact_piece(int n, const Window& window,
                                             const GroupSpec& spec,
                                             std::size_t cap = 2'000'000);

// A cover consumed intensionally: a choice function assigning each point a
// basic open containing it, plus an optional uniform bound on which
// indices any returned member may constrain.
class CoverOracle {
 public:
  using ChooseFn = std::function<BasicOpen(const Element&)>;

  CoverOracle() = default;
  CoverOracle(ChooseFn choose, std::optional<IndexSet> uniform_bound,
              std::string label);

  // Applies the choice function and checks the contract: the result must
  // contain x, and must respect the declared uniform bound. Violations
  // throw ContractError.
  BasicOpen pick(const Element& x, const GroupSpec& spec) const;

  const std::optional<IndexSet>& uniform_bound() const {
    return uniform_bound_;
  }
  const std::string& label() const { return label_; }
  bool valid() const { return static_cast<bool>(choose_); }

  json descriptor() const;

 private:
  ChooseFn choose_;
  std::optional<IndexSet> uniform_bound_;
  std::string label_;
};

// Covering lemma, compact form: query the oracle over every member of the
// stage-n piece; N = U_B for B = the union of all constrained index sets
// returned. Every piece member x then satisfies x*N inside pick(x).
NbdSubgroup lebesgue_compact(const CoverOracle& cover, int n,
                             const Window& window, const GroupSpec& spec,
                             std::size_t cap = 2'000'000);

// Covering lemma, P-group form: N = U_{B*} straight from the declared
// uniform bound; then x*N sits inside pick(x) for every x, not just piece
// members. Missing bound is a contract error.
NbdSubgroup lebesgue_pgroup(const CoverOracle& cover);

// Lazy enumeration of the canonical coset representatives of U_B: all
// elements supported inside B, ordered by total enumerator weight and,
// within a weight, by giving the earliest index the largest rank first.
// The order depends on B alone; for nested constraint sets the rep sets
// nest as well (every element supported in B is supported in any larger
// set).
class CosetRepEnumerator {
 public:
  CosetRepEnumerator(IndexSet B, const GroupSpec& spec);

  // Next representative, or nullopt once a finite rep family is
  // exhausted (all components finite).
  std::optional<Element> next();
  void reset();

  // Convenience: the first count reps (fewer if the family is finite).
  static std::vector<Element> prefix(const IndexSet& B,
                                     const GroupSpec& spec,
                                     std::size_t count);
  // Position of x in the enumeration, scanning at most search_cap reps.
  static std::optional<std::size_t> rank_of(const Element& x,
                                            const IndexSet& B,
                                            const GroupSpec& spec,
                                            std::size_t search_cap);

 private:
  bool fill_weight_batch();

  IndexSet B_;
  const GroupSpec* spec_;
  std::vector<std::optional<std::size_t>> rank_caps_;  // per index, exclusive
  std::size_t weight_ = 0;
  std::optional<std::size_t> max_weight_;  // set when all components finite
  std::vector<Element> batch_;
  std::size_t batch_pos_ = 0;
};

// Coset shifting: a witness y in x*U_B satisfying the given predicate.
// Because the neighborhoods are subgroups, y*U_B equals x*U_B exactly,
// which the function re-checks before returning.
std::optional<Element> coset_shift_witness(
    const Element& x, const IndexSet& B,
    const std::function<bool(const Element&)>& predicate,
    const std::vector<Element>& candidates, const GroupSpec& spec);

}  // namespace selgames
