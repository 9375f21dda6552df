#include <set>

#include "clusterweave/errors.hpp"
#include "clusterweave/exchange_graph.hpp"
#include "doctest.h"

using namespace cw;

namespace {

Seed initial(const char* type) { return Seed::initial(bipartite_matrix(parse_dynkin(type))); }

}  // namespace

TEST_CASE("canonical form identifies seeds up to simultaneous permutation") {
  const Seed s0 = initial("D~4");
  const Seed p = permute_seed(s0, {3, 1, 4, 0, 2});
  const SeedClass a = canonical_form(s0), b = canonical_form(p);
  CHECK(a == b);
  CHECK(a.hash == b.hash);
  CHECK(a.hash_hex().size() == 16);
  CHECK(permute_seed(s0, a.perm) == a.rep);
  CHECK_FALSE(canonical_form(mutate_seed(s0, 0)) == a);
}

TEST_CASE("explore enumerates finite types completely") {
  const auto a2 = explore(Seed::initial(ExchangeMatrix::from_rows({{0, 1}, {-1, 0}})), 10);
  CHECK(a2.complete);
  CHECK(a2.nodes.size() == 5);
  CHECK(a2.edges.size() == 5);
  for (const char* t : {"A3", "D4"}) {
    const auto g = explore(initial(t), 40);
    CHECK(g.complete);
    // Regularity: every seed has exactly n neighbors.
    for (const auto& nbrs : g.adjacency()) CHECK(static_cast<int>(nbrs.size()) == g.nodes[0].rep.n());
  }
  CHECK(explore(initial("A3"), 40).nodes.size() == 14);
  CHECK(explore(initial("D4"), 40).nodes.size() == 50);
  CHECK(explore(initial("B3"), 40).nodes.size() == 20);
  CHECK(explore(initial("G2"), 40).nodes.size() == 8);
}

TEST_CASE("explore respects depth and the node cap") {
  const auto g = explore(initial("D~4"), 2);
  CHECK_FALSE(g.complete);
  CHECK(!g.frontier.empty());
  for (int d : g.depth) CHECK(d <= 2);
  const auto capped = explore(initial("D~4"), ExploreOptions{10, 12, 1, false});
  CHECK(capped.nodes.size() <= 12);
  CHECK_FALSE(capped.complete);
  CHECK_THROWS_AS(explore(initial("A2"), -1), InvalidInput);
}

TEST_CASE("parallel exploration gives identical node ids") {
  const Seed s0 = initial("D~4");
  const auto one = explore(s0, ExploreOptions{4, 100000, 1, false});
  const auto four = explore(s0, ExploreOptions{4, 100000, 4, false});
  REQUIRE(one.nodes.size() == four.nodes.size());
  for (size_t i = 0; i < one.nodes.size(); ++i) CHECK(one.nodes[i] == four.nodes[i]);
  REQUIRE(one.edges.size() == four.edges.size());
  for (size_t i = 0; i < one.edges.size(); ++i) {
    CHECK(one.edges[i].a == four.edges[i].a);
    CHECK(one.edges[i].b == four.edges[i].b);
  }
}

TEST_CASE("ascending and descending traversal find the same classes") {
  const Seed s0 = initial("D~4");
  const auto up = explore(s0, ExploreOptions{4, 100000, 1, false});
  const auto down = explore(s0, ExploreOptions{4, 100000, 1, true});
  std::set<uint64_t> a, b;
  for (const auto& n : up.nodes) a.insert(n.hash);
  for (const auto& n : down.nodes) b.insert(n.hash);
  CHECK(a == b);
}

TEST_CASE("induced subgraph of seeds containing a variable") {
  const Seed s0 = Seed::initial(ExchangeMatrix::from_rows({{0, 1}, {-1, 0}}));
  const auto g = explore(s0, 10);
  const auto h = induced_subgraph_fixing(g, LaurentPoly::variable(2, 0));
  CHECK(h.nodes.size() == 2);
  CHECK(h.edges.size() == 1);
  CHECK_THROWS_AS(induced_subgraph_fixing(g, LaurentPoly::constant(2, 7)), VariableAbsent);

  const Seed p = Seed::principal_coefficients(ExchangeMatrix::from_rows({{0, 1}, {-1, 0}}));
  const auto gp = explore(p, 10);
  CHECK(induced_subgraph_fixing(gp, LaurentPoly::variable(4, 2)).nodes.size() == gp.nodes.size());
}

TEST_CASE("coefficient independence at small depth") {
  const auto b = bipartite_matrix(parse_dynkin("D~4"));
  const auto r = compare_under_common_mutations(Seed::initial(b), Seed::principal_coefficients(b), 3);
  CHECK(r.isomorphic);
  CHECK(r.nodes > 1);
  const auto other = compare_under_common_mutations(Seed::initial(b), initial("A5"), 2);
  CHECK_FALSE(other.isomorphic);
}

TEST_CASE("Coxeter iterates of D~4 are pairwise distinct") {
  const Seed s0 = initial("D~4");
  std::vector<SeedClass> seen;
  for (int r = 0; r <= 8; ++r) {
    const SeedClass c = canonical_form(coxeter_mutation(s0, r));
    for (const auto& prev : seen) CHECK_FALSE(prev == c);
    seen.push_back(c);
  }
}

TEST_CASE("normal form certificates") {
  const Seed s0 = initial("D~4");
  NormalFormSearcher searcher(s0, 6, 12);
  const auto c0 = searcher.decompose(s0);
  CHECK(c0.r == 0);
  CHECK(c0.seq.empty());
  const auto c1 = searcher.decompose(coxeter_mutation(s0, 1));
  CHECK(c1.r == 1);
  CHECK(c1.seq.empty());
  const Seed target = mutate_seed_sequence(s0, {2, 1});
  const auto c = searcher.decompose(target);
  CHECK(canonical_form(searcher.replay(c)) == canonical_form(target));
  for (int k : c.seq) CHECK(k != c.ell);
  CHECK_THROWS_AS(normal_form_decompose(target, s0, 0, 0), NotFoundWithinBounds);
}
