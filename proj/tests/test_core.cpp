#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "selgames/pairing.hpp"
#include "selgames/topology.hpp"

using namespace selgames;

namespace {

GroupSpec ints() {
  return GroupSpec(ComponentGroup::integers(), "omega1", Track::Product);
}
GroupSpec c2(Track t = Track::BoxGdelta) {
  return GroupSpec(ComponentGroup::cyclic(2), "omega1", t);
}

Element el(std::vector<std::pair<Index, Value>> entries,
           const GroupSpec& spec) {
  return Element::from_entries(std::move(entries), spec);
}

}  // namespace

TEST_CASE("pairing schedule basics") {
  CHECK(PairingSchedule::pair(0, 0) == 0);
  CHECK(PairingSchedule::pair(1, 0) == 1);
  CHECK(PairingSchedule::pair(0, 1) == 2);
  CHECK(PairingSchedule::pair(2, 0) == 3);
  CHECK(PairingSchedule::pair(1, 1) == 4);
  CHECK(PairingSchedule::pair(0, 2) == 5);

  // Rank 0 is scheduled at innings 0, 2, 5.
  CHECK(PairingSchedule::unpair(0).first == 0);
  CHECK(PairingSchedule::unpair(2).first == 0);
  CHECK(PairingSchedule::unpair(5).first == 0);
  CHECK(PairingSchedule::unpair(5).second == 2);

  CHECK(PairingSchedule::bound(0, 3) == 5);
  CHECK(PairingSchedule::bound(8, 4) == 69);
}

TEST_CASE("pairing schedule partitions the innings") {
  // Round trip and injectivity over a prefix.
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t n = 0; n < 512; ++n) {
    const auto [r, j] = PairingSchedule::unpair(n);
    CHECK(PairingSchedule::pair(r, j) == n);
    CHECK(seen.insert({r, j}).second);
  }
  // Each rank's schedule is strictly increasing in the repeat count.
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t j = 0; j + 1 < 10; ++j)
      CHECK(PairingSchedule::pair(r, j) < PairingSchedule::pair(r, j + 1));
}

TEST_CASE("integers enumerator zigzag") {
  const ComponentGroup g = ComponentGroup::integers();
  CHECK(g.value_at_rank(0) == 0);
  CHECK(g.value_at_rank(1) == 1);
  CHECK(g.value_at_rank(2) == -1);
  CHECK(g.value_at_rank(3) == 2);
  CHECK(g.value_at_rank(4) == -2);
  for (std::size_t r = 0; r < 40; ++r)
    CHECK(g.rank_of(g.value_at_rank(r)) == r);
  CHECK(!g.order().has_value());

  // Stage-n compact values are {-n..n}.
  const std::vector<Value> c1 = g.compact_values(1);
  CHECK(c1.size() == 3);
  CHECK(g.in_compact(-1, 1));
  CHECK(g.in_compact(2, 2));
  CHECK(!g.in_compact(2, 1));
}

TEST_CASE("cyclic groups") {
  const ComponentGroup g = ComponentGroup::cyclic(6);
  CHECK(g.order() == 6);
  CHECK(g.op(4, 5) == 3);
  CHECK(g.inverse(2) == 4);
  CHECK(g.identity() == 0);
  CHECK(g.value_at_rank(5) == 5);
  CHECK_THROWS_AS(ComponentGroup::cyclic(0), ConfigError);
  CHECK_THROWS_AS(ComponentGroup::cyclic(-3), ConfigError);
  CHECK(ComponentGroup::cyclic(1).order() == 1);  // trivial group is fine

  // Every cyclic value is stage-compact from some stage on.
  CHECK(g.in_compact(0, 5));
}

TEST_CASE("finite table validation") {
  // Z2 relabeled so the identity is 1, not 0.
  const ComponentGroup g = ComponentGroup::table({{1, 0}, {0, 1}});
  CHECK(g.identity() == 1);
  CHECK(g.op(0, 0) == 1);
  CHECK(g.inverse(0) == 0);
  CHECK(g.value_at_rank(0) == 1);  // enumerator starts at the identity

  // Not a latin square.
  CHECK_THROWS_AS(ComponentGroup::table({{0, 1}, {1, 1}}), ConfigError);
  // Latin square with identity but non-associative (a loop, not a group).
  CHECK_THROWS_AS(ComponentGroup::table({{0, 1, 2, 3, 4},
                                         {1, 0, 3, 4, 2},
                                         {2, 3, 4, 0, 1},
                                         {3, 4, 1, 2, 0},
                                         {4, 2, 0, 1, 3}}),
                  ConfigError);
  // Ragged.
  CHECK_THROWS_AS(ComponentGroup::table({{0, 1}, {1}}), ConfigError);
  // No identity at all.
  CHECK_THROWS_AS(ComponentGroup::table({{1, 0}, {1, 0}}), ConfigError);
}

TEST_CASE("index sets") {
  const IndexSet a = IndexSet::of({3, 1, 3, 0});
  CHECK(a.size() == 3);
  CHECK(a.contains(1));
  CHECK(!a.contains(2));
  const IndexSet b{1, 2};
  CHECK(a.union_with(b).size() == 4);
  CHECK(a.intersect_with(b) == IndexSet{1});
  CHECK(IndexSet{1}.subset_of(a));
  CHECK(!a.subset_of(b));
  CHECK(IndexSet::from_json(a.to_json()) == a);
  CHECK_THROWS_AS(IndexSet::from_json(json{{"x", 1}}), ConfigError);
}

TEST_CASE("elements canonicalize on construction") {
  const GroupSpec spec = ints();
  const Element x = el({{2, 5}, {0, 1}, {1, 0}}, spec);
  CHECK(x.support() == IndexSet({0, 2}));  // identity entry dropped
  CHECK(x.value_at(1, spec) == 0);
  CHECK(x.value_at(2, spec) == 5);
  CHECK(!x.has_support_at(1));

  CHECK_THROWS_AS(el({{0, 1}, {0, 2}}, spec), MalformedElement);

  const GroupSpec c = c2();
  CHECK_THROWS_AS(el({{0, 5}}, c), MalformedElement);  // 5 not in Z2

  CHECK(Element::from_json(x.to_json(), spec) == x);
  CHECK(Element().is_identity());
}

TEST_CASE("group operation and inverse") {
  const GroupSpec spec = ints();
  const Element a = el({{0, 2}}, spec);
  const Element b = el({{0, -2}}, spec);
  CHECK(group_op(a, b, spec).is_identity());

  const Element x = el({{0, 1}, {3, -1}}, spec);
  const Element y = el({{3, 1}}, spec);
  CHECK(group_op(x, y, spec) == el({{0, 1}}, spec));
  CHECK(group_inverse(x, spec) == el({{0, -1}, {3, 1}}, spec));

  const GroupSpec c = c2();
  const Element t = el({{1, 1}}, c);
  CHECK(group_op(t, t, c).is_identity());

  // Restriction is a homomorphism coordinate-wise.
  const IndexSet B{0};
  CHECK(restrict_to(group_op(x, y, spec), B) ==
        group_op(restrict_to(x, B), restrict_to(y, B), spec));
  CHECK(element_hash64(x) == element_hash64(el({{3, -1}, {0, 1}}, spec)));
}

TEST_CASE("windows") {
  const Window w = Window::first(3);
  CHECK(w.size() == 3);
  CHECK(w.contains(2));
  CHECK(!w.contains(3));
  CHECK(w.covers(IndexSet{0, 2}));
  CHECK(!w.covers(IndexSet{0, 5}));
  Window w2 = w;
  w2.insert(7);
  CHECK(w2.contains(7));
  CHECK(w2.size() == 4);
}

TEST_CASE("neighborhood subgroups and cosets") {
  const GroupSpec spec = ints();
  const IndexSet B{0, 2};
  const NbdSubgroup U{B, false};
  CHECK(U.contains(Element()));
  CHECK(U.contains(el({{1, 4}}, spec)));
  CHECK(!U.contains(el({{0, 1}}, spec)));

  const Element x = el({{0, 1}, {1, 2}}, spec);
  const Element y = el({{0, 1}, {1, -9}, {3, 4}}, spec);
  CHECK(coset_equal(x, y, B, spec));     // agree on {0,2}
  CHECK(!coset_equal(x, y, IndexSet{0, 1}, spec));

  // Membership three ways: direct, open-set form, algebraic form.
  const BasicOpen coset = BasicOpen::coset(y, B, spec);
  CHECK(coset.contains(x, spec));
  CHECK(NbdSubgroup{B, false}.contains(
      group_op(group_inverse(y, spec), x, spec)));
}

TEST_CASE("basic opens") {
  const GroupSpec spec = ints();
  CHECK(BasicOpen::whole_group().contains(el({{0, 7}}, spec), spec));

  const BasicOpen u = BasicOpen::from_constraints({{0, {1, 2}}, {1, {0}}}, spec);
  CHECK(u.contains(el({{0, 1}}, spec), spec));
  CHECK(u.contains(el({{0, 2}, {5, 5}}, spec), spec));
  CHECK(!u.contains(el({{0, 3}}, spec), spec));
  CHECK(!u.contains(el({{0, 1}, {1, 1}}, spec), spec));
  CHECK(u.constrained_indices() == IndexSet({0, 1}));
  REQUIRE(u.constraint_at(0) != nullptr);
  CHECK(u.constraint_at(0)->size() == 2);
  CHECK(u.constraint_at(3) == nullptr);

  // Intersection narrows value sets; empty means no basic open.
  const BasicOpen v = BasicOpen::from_constraints({{0, {2, 3}}}, spec);
  const auto meet = u.intersect(v);
  REQUIRE(meet.has_value());
  CHECK(meet->contains(el({{0, 2}}, spec), spec));
  CHECK(!meet->contains(el({{0, 1}}, spec), spec));
  const BasicOpen w = BasicOpen::from_constraints({{0, {9}}}, spec);
  CHECK(!u.intersect(w).has_value());

  CHECK(BasicOpen::from_json(u.to_json()) == u);
}

TEST_CASE("coset containment in opens") {
  const GroupSpec spec = ints();
  const Element x = el({{0, 1}, {1, 2}}, spec);

  // Constraints on B are pinned by x; off-B constraints must admit a whole
  // finite component, impossible for the integers.
  CHECK(coset_inside_open(x, IndexSet{0, 1},
                          BasicOpen::coset(x, IndexSet{0}, spec), spec));
  CHECK(!coset_inside_open(x, IndexSet{0},
                           BasicOpen::coset(x, IndexSet{0, 1}, spec), spec));

  const GroupSpec c = c2(Track::Product);
  const Element t = el({{0, 1}}, c);
  // Off-B constraint listing every Z2 value admits the whole component.
  const BasicOpen whole1 = BasicOpen::from_constraints({{0, {1}}, {1, {0, 1}}}, c);
  CHECK(coset_inside_open(t, IndexSet{0}, whole1, c));
  const BasicOpen pinned1 = BasicOpen::from_constraints({{0, {1}}, {1, {0}}}, c);
  CHECK(!coset_inside_open(t, IndexSet{0}, pinned1, c));

  // Coset-in-coset: x*U_B inside y*U_D iff D within B and agreement on D.
  const Element y = el({{0, 1}, {5, 3}}, spec);
  CHECK(coset_inside_coset(x, IndexSet{0, 1}, y, IndexSet{0}, spec));
  CHECK(!coset_inside_coset(x, IndexSet{0}, y, IndexSet{0, 1}, spec));
  CHECK(!coset_inside_coset(el({{0, 2}}, spec), IndexSet{0, 1}, y,
                            IndexSet{0}, spec));

  // basic_open_subset agrees with pointwise containment on samples.
  const BasicOpen narrow = BasicOpen::from_constraints({{0, {1}}, {1, {2}}}, spec);
  const BasicOpen wide = BasicOpen::from_constraints({{0, {1, 4}}}, spec);
  CHECK(basic_open_subset(narrow, wide, spec));
  CHECK(!basic_open_subset(wide, narrow, spec));
}

TEST_CASE("compact piece enumeration") {
  const GroupSpec spec = ints();
  const Window w = Window::first(2);
  const std::vector<Element> piece = enumerate_compact_piece(1, w, spec);
  REQUIRE(piece.size() == 5);
  CHECK(piece[0].is_identity());
  CHECK(piece[1] == el({{0, 1}}, spec));
  CHECK(piece[2] == el({{0, -1}}, spec));
  CHECK(piece[3] == el({{1, 1}}, spec));
  CHECK(piece[4] == el({{1, -1}}, spec));
  for (const Element& x : piece) CHECK(in_compact_piece(x, 1, spec));
  CHECK(!in_compact_piece(el({{0, 2}}, spec), 1, spec));
  CHECK(!in_compact_piece(el({{0, 1}, {1, 1}}, spec), 1, spec));

  const GroupSpec c = c2(Track::Product);
  CHECK(enumerate_compact_piece(2, Window::first(3), c).size() == 7);

  CHECK_THROWS_AS(enumerate_compact_piece(2, Window::first(4), spec, 3),
                  ResourceError);
}

TEST_CASE("coset representative enumeration") {
  const GroupSpec spec = ints();
  CosetRepEnumerator reps(IndexSet{0}, spec);
  const auto take = [&](CosetRepEnumerator& e) {
    auto v = e.next();
    REQUIRE(v.has_value());
    return *v;
  };
  CHECK(take(reps).is_identity());
  CHECK(take(reps) == el({{0, 1}}, spec));
  CHECK(take(reps) == el({{0, -1}}, spec));
  CHECK(take(reps) == el({{0, 2}}, spec));

  // Finite component: the enumeration is exhaustive and stops.
  const GroupSpec c = c2();
  CosetRepEnumerator creps(IndexSet{0, 1}, c);
  CHECK(take(creps).is_identity());
  CHECK(take(creps) == el({{0, 1}}, c));
  CHECK(take(creps) == el({{1, 1}}, c));
  CHECK(take(creps) == el({{0, 1}, {1, 1}}, c));
  CHECK(!creps.next().has_value());

  // Static prefix agrees with repeated next(); ranks match positions.
  const std::vector<Element> prefix =
      CosetRepEnumerator::prefix(IndexSet{0}, spec, 4);
  REQUIRE(prefix.size() == 4);
  for (std::size_t r = 0; r < prefix.size(); ++r)
    CHECK(CosetRepEnumerator::rank_of(prefix[r], IndexSet{0}, spec, 16) == r);

  // U_emptyset has exactly one representative.
  const std::vector<Element> trivial =
      CosetRepEnumerator::prefix(IndexSet{}, spec, 5);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].is_identity());
}

TEST_CASE("covering lemma, compact form") {
  const GroupSpec spec = ints();
  const Window w = Window::first(2);

  // Every answer pins {0,1} around the queried point.
  const CoverOracle pinned(
      [&spec](const Element& x) {
        return BasicOpen::coset(x, IndexSet{0, 1}, spec);
      },
      std::nullopt, "pinned");
  const NbdSubgroup n1 = lebesgue_compact(pinned, 1, w, spec);
  CHECK(n1.constraint_set == IndexSet({0, 1}));
  for (const Element& x : enumerate_compact_piece(1, w, spec))
    CHECK(coset_inside_open(x, n1.constraint_set, pinned.pick(x, spec), spec));

  // Whole-group answers collapse to the trivial subgroup bound.
  const CoverOracle loose([](const Element&) { return BasicOpen::whole_group(); },
                          std::nullopt, "loose");
  CHECK(lebesgue_compact(loose, 1, w, spec).constraint_set.empty());

  // Mixed constraint sets {0} and {1} union to {0,1}.
  const CoverOracle mixed(
      [&spec](const Element& x) {
        const IndexSet B = x.has_support_at(0) ? IndexSet{0} : IndexSet{1};
        return BasicOpen::coset(x, B, spec);
      },
      std::nullopt, "mixed");
  CHECK(lebesgue_compact(mixed, 1, w, spec).constraint_set ==
        IndexSet({0, 1}));
}

TEST_CASE("covering lemma, P-group form") {
  const GroupSpec spec = c2();
  const CoverOracle bounded(
      [&spec](const Element& x) {
        return BasicOpen::coset(x, IndexSet{0, 2}, spec);
      },
      IndexSet{0, 2}, "bounded");
  const NbdSubgroup n = lebesgue_pgroup(bounded);
  CHECK(n.constraint_set == IndexSet({0, 2}));
  CHECK(n.conceptually_countable);

  const CoverOracle unbounded(
      [](const Element&) { return BasicOpen::whole_group(); }, std::nullopt,
      "unbounded");
  CHECK_THROWS_AS(lebesgue_pgroup(unbounded), ContractError);
}

TEST_CASE("cover oracle contract enforcement") {
  const GroupSpec spec = ints();
  // Answer not containing the queried point.
  const CoverOracle wrong(
      [&spec](const Element&) {
        return BasicOpen::coset(el({{0, 9}}, spec), IndexSet{0}, spec);
      },
      std::nullopt, "wrong");
  CHECK_THROWS_AS(wrong.pick(Element(), spec), ContractError);

  // Answer constraining an index outside the declared bound.
  const CoverOracle leaky(
      [&spec](const Element& x) {
        return BasicOpen::coset(x, IndexSet{0, 3}, spec);
      },
      IndexSet{0}, "leaky");
  CHECK_THROWS_AS(leaky.pick(Element(), spec), ContractError);
}

TEST_CASE("composed group specs") {
  const GroupSpec a = c2(Track::Product);
  const GroupSpec b = ints();
  const GroupSpec glued = disjoint_union(a, b, 4);
  CHECK(glued.component(0).order() == 2);
  CHECK(glued.component(3).order() == 2);
  CHECK(!glued.component(4).order().has_value());
  CHECK(!glued.component(100).order().has_value());

  const GroupSpec square = finite_power(a, 2, 3);
  CHECK(square.component(0).order() == 2);
  CHECK(square.component(5).order() == 2);

  CHECK_THROWS_AS(finite_power(a, 0, 3), ConfigError);
  CHECK(GroupSpec::from_json(glued.to_json()) == glued);
}

TEST_CASE("coset shift witness") {
  const GroupSpec spec = ints();
  const Element x = el({{0, 1}, {1, 2}}, spec);
  const std::vector<Element> candidates = {
      el({{0, 1}}, spec), el({{0, 1}, {1, 2}, {2, -1}}, spec)};
  // Want a member of x*U_{0,1} among the candidates: only the second
  // agrees with x on both constrained coordinates.
  const auto y = coset_shift_witness(
      x, IndexSet{0, 1},
      [](const Element& e) { return e.has_support_at(2); }, candidates, spec);
  REQUIRE(y.has_value());
  CHECK(*y == candidates[1]);

  const auto none = coset_shift_witness(
      x, IndexSet{0, 1}, [](const Element&) { return true; },
      {el({{0, 5}}, spec)}, spec);
  CHECK(!none.has_value());
}
