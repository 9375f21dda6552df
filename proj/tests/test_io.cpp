#include <algorithm>
#include <string>

#include "clusterweave/errors.hpp"
#include "clusterweave/folding.hpp"
#include "doctest.h"
#include "io.hpp"

using namespace cw;
using cw::io::json;

namespace {

size_t count_of(const std::string& text, const std::string& needle) {
  size_t n = 0;
  for (size_t p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("matrices round-trip through JSON") {
  const ExchangeMatrix b = ExchangeMatrix::from_rows({{0, 1}, {-3, 0}, {2, -1}});
  const json j = io::to_json(b);
  CHECK(j["rows"] == 3);
  CHECK(j["cols"] == 2);
  CHECK(io::matrix_from_json(j) == b);
  CHECK(io::matrix_from_json(json::parse("[[0,1],[-3,0]]")) == ExchangeMatrix::from_rows({{0, 1}, {-3, 0}}));
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"rows":2,"cols":2,"entries":[[0,1]]})")), InvalidInput);
}

TEST_CASE("seeds round-trip through JSON") {
  const Seed s = mutate_seed_sequence(Seed::principal_coefficients(bipartite_matrix(parse_dynkin("A3"))), {0, 2, 1});
  const json j = io::to_json(s);
  CHECK(j["n"] == 3);
  CHECK(j["m"] == 6);
  CHECK(io::seed_from_json(json::parse(j.dump())) == s);
  const json bare = {{"matrix", json::parse("[[0,1],[-1,0]]")}};
  CHECK(io::seed_from_json(bare) == Seed::initial(ExchangeMatrix::from_rows({{0, 1}, {-1, 0}})));
}

TEST_CASE("braid words round-trip through JSON") {
  const BraidWord w = beta_hat_affine_d(4);
  CHECK(io::braid_from_json(io::to_json(w)) == w);
  CHECK_THROWS_AS(io::braid_from_json(json::parse(R"({"strands":3,"letters":[1,3]})")), GeneratorOutOfRange);
}

TEST_CASE("N-graphs with cycles round-trip through JSON") {
  for (const auto& g : {build_affine_d(5), build_tripod(2, 3, 6)}) {
    const json j = io::to_json(g.graph, g.cycles);
    const json again = json::parse(j.dump());
    const NGraph h = io::ngraph_from_json(again);
    const CycleSet cs = io::cycles_from_json(again);
    CHECK(validate(h).empty());
    CHECK(map_isomorphic(h, g.graph));
    CHECK(h.boundary_word(0) == g.graph.boundary_word(0));
    CHECK(intersection_quiver(h, cs) == intersection_quiver(g.graph, g.cycles));
  }
  const NGraph pad = padding_affine_d(4, false).graph;
  const NGraph back = io::ngraph_from_json(io::to_json(pad));
  CHECK(back.surface == Surface::Annulus);
  CHECK(map_isomorphic(back, pad));
}

TEST_CASE("exchange graph slices round-trip through JSON") {
  const auto g = explore(Seed::initial(bipartite_matrix(parse_dynkin("A3"))), 40);
  const ExchangeGraphSlice h = io::slice_from_json(json::parse(io::to_json(g).dump()));
  CHECK(h.complete == g.complete);
  REQUIRE(h.nodes.size() == g.nodes.size());
  for (size_t i = 0; i < g.nodes.size(); ++i) CHECK(h.nodes[i] == g.nodes[i]);
  CHECK(h.edges.size() == g.edges.size());
}

TEST_CASE("DOT exports") {
  const std::string star = io::quiver_dot(matrix_from_arrows(5, {{2, 1}, {3, 1}, {5, 1}, {4, 1}}));
  CHECK(star.rfind("digraph quiver {", 0) == 0);
  CHECK(count_of(star, "->") == 4);
  CHECK(count_of(star, "2 -> 1") == 1);

  const std::string g2 = io::quiver_dot(ExchangeMatrix::from_rows({{0, 2}, {-2, 0}}));
  CHECK(count_of(g2, "label") == 1);

  const std::string empty = io::quiver_dot(ExchangeMatrix::square(0));
  CHECK(count_of(empty, "->") == 0);
  CHECK(empty.rfind("digraph quiver {", 0) == 0);

  const auto pentagon = explore(Seed::initial(ExchangeMatrix::from_rows({{0, 1}, {-1, 0}})), 10);
  const std::string slice = io::slice_dot(pentagon);
  CHECK(slice.rfind("graph exchange {", 0) == 0);
  CHECK(count_of(slice, " -- ") == 5);

  const std::string ng = io::ngraph_dot(build_affine_d(4).graph);
  CHECK(ng.rfind("graph ngraph {", 0) == 0);
  CHECK(count_of(ng, " -- ") == build_affine_d(4).graph.edges.size());
}
