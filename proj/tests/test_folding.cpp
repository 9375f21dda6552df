#include "clusterweave/errors.hpp"
#include "clusterweave/folding.hpp"
#include "clusterweave/seed.hpp"
#include "doctest.h"

using namespace cw;

namespace {

// E~6 star: center 1, arms (2,3), (4,5), (6,7), arrows out of the center.
ExchangeMatrix e6_star() { return matrix_from_arrows(7, {{1, 2}, {3, 2}, {1, 4}, {5, 4}, {1, 6}, {7, 6}}); }
GroupAction e6_rotation() { return GroupAction::from_cycles(7, {{{2, 4, 6}, {3, 5, 7}}}); }

}  // namespace

TEST_CASE("group actions: orbits and elements") {
  const GroupAction a = e6_rotation();
  CHECK(a.elements().size() == 3);
  CHECK(a.orbits() == std::vector<std::vector<int>>{{0}, {1, 3, 5}, {2, 4, 6}});
  CHECK(GroupAction::trivial(3).orbits().size() == 3);
  CHECK_THROWS_AS(GroupAction::from_cycles(3, {{{1, 4}}}), InvalidInput);
}

TEST_CASE("invariance") {
  CHECK(check_invariant(e6_star(), e6_rotation()));
  ExchangeMatrix broken = e6_star();
  broken.at(1, 2) = 0;  // drop the arrow 3 -> 2 only
  broken.at(2, 1) = 0;
  CHECK_FALSE(check_invariant(broken, e6_rotation()));
  CHECK(check_invariant(broken, GroupAction::trivial(7)));
}

TEST_CASE("admissibility verdicts") {
  CHECK(check_admissible(e6_star(), e6_rotation()).ok());
  // Arrows 2 -> 4 -> 6 -> 2 inside an orbit.
  auto inside = matrix_from_arrows(7, {{1, 2}, {3, 2}, {1, 4}, {5, 4}, {1, 6}, {7, 6}, {2, 4}, {4, 6}, {6, 2}});
  CHECK(check_admissible(inside, e6_rotation()).kind == Admissibility::FailsOrbitZero);
  // Oriented 4-cycle 1 -> 3 -> 2 -> 4 -> 1 under (1 2)(3 4).
  auto square = matrix_from_arrows(4, {{1, 3}, {3, 2}, {2, 4}, {4, 1}});
  const auto swap = GroupAction::from_cycles(4, {{{1, 2}, {3, 4}}});
  const auto v = check_admissible(square, swap);
  CHECK(v.kind == Admissibility::FailsSignCoherence);
  CHECK_THROWS_AS(check_admissible(matrix_from_arrows(3, {{1, 3}}), GroupAction::from_cycles(3, {{{1, 2}}})),
                  NotInvariant);
}

TEST_CASE("folding the E~6 star by Z/3 gives the G~2 matrix") {
  const ExchangeMatrix f = fold(e6_star(), e6_rotation());
  CHECK(f == ExchangeMatrix::from_rows({{0, 1, 0}, {-3, 0, -1}, {0, 1, 0}}));
  CHECK(classify_cartan(cartan_counterpart(f)).name() == "G~2");
  CHECK(fold(e6_star(), GroupAction::trivial(7)) == e6_star());
  auto square = matrix_from_arrows(4, {{1, 3}, {3, 2}, {2, 4}, {4, 1}});
  CHECK_THROWS_AS(fold(square, GroupAction::from_cycles(4, {{{1, 2}, {3, 4}}})), NotAdmissible);
}

TEST_CASE("orbit mutation composes single mutations and commutes with folding") {
  const ExchangeMatrix b = e6_star();
  const GroupAction a = e6_rotation();
  CHECK(orbit_mutate(b, a, 0) == mutate_matrix(b, 0));
  const ExchangeMatrix forward = mutate_matrix(mutate_matrix(mutate_matrix(b, 1), 3), 5);
  const ExchangeMatrix backward = mutate_matrix(mutate_matrix(mutate_matrix(b, 5), 3), 1);
  CHECK(forward == backward);
  CHECK(orbit_mutate(b, a, 1) == forward);
  for (int orbit = 0; orbit < 3; ++orbit) {
    CHECK(fold(orbit_mutate(b, a, orbit), a) == mutate_matrix(fold(b, a), orbit));
  }
  CHECK_THROWS_AS(orbit_mutate(b, a, std::vector<int>{1, 2}), NotAnOrbit);
}

TEST_CASE("catalog triples fold to their stated targets") {
  for (const auto& name : catalog_triple_names()) {
    CAPTURE(name);
    const FoldingTriple t = catalog_triple(name);
    const auto c = classify_cartan(cartan_counterpart(fold(t.matrix, t.action)));
    REQUIRE(c.components.size() == 1);
    CHECK(c.components[0] == t.target);
  }
  CHECK(classify_cartan(cartan_counterpart(fold(catalog_triple("E7t-Z2-F4t").matrix,
                                                catalog_triple("E7t-Z2-F4t").action)))
            .name() == "F~4");
  CHECK_THROWS_AS(catalog_triple("E9t-Z5-X1t"), UnknownTriple);
}

TEST_CASE("global foldability to depth 4") {
  const FoldingTriple e6 = catalog_triple("E6t-Z3-G2t");
  const auto r = verify_globally_foldable(e6.matrix, e6.action, 4);
  CHECK(r.ok);
  CHECK(r.commutes);
  const FoldingTriple d6 = catalog_triple("D6t-Z2-B3t");
  CHECK(verify_globally_foldable(d6.matrix, d6.action, 4).ok);
  const auto id = verify_globally_foldable(bipartite_matrix(parse_dynkin("D~5")), GroupAction::trivial(6), 3);
  CHECK(id.ok);
  CHECK(id.commutes);
}
