#include <cmath>

#include "clusterweave/errors.hpp"
#include "clusterweave/folding.hpp"
#include "clusterweave/ngraph.hpp"
#include "clusterweave/seed.hpp"
#include "clusterweave/sketch.hpp"
#include "doctest.h"

using namespace cw;

namespace {

ExchangeMatrix affine_d_arrows(int n) {
  if (n == 4) return matrix_from_arrows(5, {{2, 1}, {3, 1}, {5, 1}, {4, 1}});
  if (n == 5) return matrix_from_arrows(6, {{2, 1}, {3, 1}, {4, 1}, {4, 6}, {4, 5}});
  if (n == 6) return matrix_from_arrows(7, {{2, 1}, {3, 1}, {4, 1}, {4, 5}, {6, 5}, {7, 5}});
  return matrix_from_arrows(8, {{2, 1}, {3, 1}, {4, 1}, {4, 5}, {6, 5}, {6, 7}, {6, 8}});
}

std::vector<NGraphWithCycles> catalog() {
  std::vector<NGraphWithCycles> out;
  for (int n = 4; n <= 7; ++n) out.push_back(build_affine_d(n));
  out.push_back(build_tripod(3, 3, 3));
  out.push_back(build_tripod(2, 4, 4));
  out.push_back(build_tripod(2, 3, 6));
  return out;
}

// The D~4 padding redrawn from scratch: two copies of the same local
// picture on a strip, wrapped around the annulus.
NGraph d4_strip(bool flip_y) {
  using namespace cw::sketch;
  Sketch sk(4, {-4, -4, 4, 4}, {0, 0});
  sk.set_circles(1, 3);
  sk.set_warp(
      [=](Pt p) {
        const double y = flip_y ? -p.y : p.y;
        const double th = -2 * M_PI * p.x / 11, r = 2 + y;
        return Pt{r * std::cos(th), r * std::sin(th)};
      },
      16);
  const int R = 2, G = 3, B = 1;
  for (int sc = 0; sc < 2; ++sc) {
    sk.set_transform(Affine::shift(sc * 6, 0));
    const int other = sc == 0 ? G : B;
    sk.line(R, {{0, 0}, {0.75, 0}, {1, 1}});
    sk.line(R, {{0.75, 0}, {1, -1}});
    sk.line(R, {{1.5, 1}, {1.75, 0}, {1.5, -1}});
    sk.curve(R, {1.75, 0}, {2.5, -0.5}, 0, 90);
    sk.line(R, {{2.5, -0.5}, {2, -1}});
    sk.line(R, {{2.5, -0.5}, {3, -1}});
    sk.line(R, {{2, 1}, {2.5, 0.5}, {3, 1}});
    sk.curve(R, {2.5, 0.5}, {3.25, 0}, -90, 180);
    sk.line(R, {{3.25, 0}, {3.5, 1}});
    sk.line(R, {{3.25, 0}, {3.5, -1}});
    const double e = sc == 0 ? 5.25 : 4.25, end = sc == 0 ? 6 : 5;
    sk.line(R, {{e - 0.25, 1}, {e, 0}, {e - 0.25, -1}});
    sk.line(R, {{e, 0}, {end, 0}});
    sk.line(other, {{0.5, 1}, {0.75, 0}, {0.5, -1}});
    sk.line(other, {{0.75, 0}, {1.75, 0}, {2.5, 0.5}, {3.25, 0}, {2.5, -0.5}, {1.75, 0}});
    sk.line(other, {{2.5, 1}, {2.5, 0.5}});
    sk.line(other, {{2.5, -1}, {2.5, -0.5}});
    sk.line(other, {{3.25, 0}, {e, 0}, {e + 0.25, 1}});
    sk.line(other, {{e, 0}, {e + 0.25, -1}});
    if (sc == 0) {
      sk.line(B, {{4, 1}, {4, -1}});
      sk.line(B, {{4.5, 1}, {4.5, -1}});
    }
    const int hc = sc == 0 ? 2 : 1;
    for (Pt p : std::vector<Pt>{{0.75, 0}, {1.75, 0}, {2.5, 0.5}, {2.5, -0.5}, {3.25, 0}, {e, 0}}) {
      sk.vertex(VertexKind::Hexagonal, hc, p);
    }
  }
  return sk.build().graph;
}

}  // namespace

TEST_CASE("catalog graphs validate and carry the expected boundary words") {
  for (int n = 4; n <= 7; ++n) {
    const auto g = build_affine_d(n);
    CHECK(validate(g.graph).empty());
    CHECK(surface_euler_characteristic(g.graph) == 1);
    CHECK_NOTHROW(validate_cycles(g.graph, g.cycles));
    CHECK(cyclic_equal(g.graph.boundary_word(0), ngraph_word_affine_d(n)));
    CHECK(static_cast<int>(g.cycles.size()) == n + 1);
  }
  for (auto [a, b, c] : std::vector<std::array<int, 3>>{{3, 3, 3}, {2, 4, 4}, {2, 3, 6}}) {
    const auto g = build_tripod(a, b, c);
    CHECK(validate(g.graph).empty());
    CHECK(cyclic_equal(g.graph.boundary_word(0), ngraph_word_tripod(a, b, c)));
    CHECK(static_cast<int>(g.cycles.size()) == a + b + c - 2);
  }
  CHECK_THROWS_AS(build_initial(parse_dynkin("A3")), Unsupported);
}

TEST_CASE("intersection quivers of the catalog graphs") {
  for (int n = 4; n <= 7; ++n) CHECK(intersection_quiver(build_affine_d(n).graph, build_affine_d(n).cycles) == affine_d_arrows(n));
  const auto e6 = build_tripod(3, 3, 3);
  CHECK(intersection_quiver(e6.graph, e6.cycles) ==
        matrix_from_arrows(7, {{1, 2}, {3, 2}, {1, 4}, {5, 4}, {1, 6}, {7, 6}}));
  const auto e7 = build_tripod(2, 4, 4);
  CHECK(intersection_quiver(e7.graph, e7.cycles) ==
        matrix_from_arrows(8, {{1, 2}, {1, 3}, {4, 3}, {4, 5}, {1, 6}, {7, 6}, {7, 8}}));
  const auto e8 = build_tripod(2, 3, 6);
  CHECK(intersection_quiver(e8.graph, e8.cycles) ==
        matrix_from_arrows(9, {{1, 2}, {1, 3}, {4, 3}, {1, 5}, {6, 5}, {6, 7}, {8, 7}, {8, 9}}));
  CHECK(classify_cartan(cartan_counterpart(intersection_quiver(e8.graph, e8.cycles))).name() == "E~8");
}

TEST_CASE("Legendrian mutation matches quiver mutation") {
  for (const auto& g : catalog()) {
    const ExchangeMatrix q = intersection_quiver(g.graph, g.cycles);
    for (size_t k = 0; k < g.cycles.size(); ++k) {
      const CycleKind kind = g.cycles[k].kind;
      if (kind != CycleKind::I && kind != CycleKind::YUpper && kind != CycleKind::YLower) continue;
      CAPTURE(k);
      NGraphWithCycles h;
      try {
        h = mutate_cycle(g.graph, g.cycles, static_cast<int>(k));
      } catch (const Unsupported&) {
        continue;
      }
      CHECK(validate(h.graph).empty());
      CHECK(intersection_quiver(h.graph, h.cycles) == mutate_matrix(q, static_cast<int>(k)));
      CHECK(cyclic_equal(h.graph.boundary_word(0), g.graph.boundary_word(0)));
    }
  }
}

TEST_CASE("mutating an I-cycle twice returns the graph") {
  const auto g = build_affine_d(4);
  for (size_t k = 0; k < g.cycles.size(); ++k) {
    if (g.cycles[k].kind != CycleKind::I) continue;
    const auto h = mutate_cycle(g.graph, g.cycles, static_cast<int>(k));
    const auto back = mutate_cycle(h.graph, h.cycles, static_cast<int>(k));
    CHECK(map_isomorphic(back.graph, g.graph));
  }
}

TEST_CASE("non-mutable cycles are rejected") {
  const auto g = build_affine_d(4);
  bool saw_tree = false;
  for (size_t k = 0; k < g.cycles.size(); ++k) {
    if (g.cycles[k].kind == CycleKind::Tree || g.cycles[k].kind == CycleKind::LongI) {
      saw_tree = true;
      CHECK_THROWS_AS(mutate_cycle(g.graph, g.cycles, static_cast<int>(k)), NotMutableKind);
    }
  }
  CHECK(saw_tree);
  CHECK_THROWS_AS(mutate_cycle(g.graph, g.cycles, 99), IndexOutOfRange);
}

TEST_CASE("color swap and mirror") {
  const auto g = build_tripod(3, 3, 3);
  const NGraph s = color_swap(g.graph);
  CHECK(validate(s).empty());
  CHECK(map_isomorphic(color_swap(s), g.graph));
  const BraidWord w = g.graph.boundary_word(0), ws = s.boundary_word(0);
  REQUIRE(w.letters.size() == ws.letters.size());
  for (size_t i = 0; i < w.letters.size(); ++i) CHECK(ws.letters[i] == w.strands - w.letters[i]);
  const NGraph m = mirror(g.graph);
  CHECK(validate(m).empty());
  CHECK(map_isomorphic(mirror(m), g.graph));
}

TEST_CASE("the D~4 paddings agree with an independent drawing") {
  for (bool inverse : {false, true}) {
    CAPTURE(inverse);
    const NGraph want = padding_affine_d(4, inverse).graph;
    const NGraph drawn = d4_strip(!inverse);
    CHECK(validate(drawn).empty());
    CHECK(validate(want).empty());
    CHECK(surface_euler_characteristic(want) == 0);
    CHECK(map_isomorphic(drawn, want));
  }
}

TEST_CASE("paddings glue onto the catalog graphs") {
  const auto g = build_affine_d(4);
  const AnnularPadding p = padding_affine_d(4, false);
  CHECK(cyclic_equal(p.graph.boundary_word(1), g.graph.boundary_word(0)));
  CHECK(cyclic_equal(p.graph.boundary_word(0), g.graph.boundary_word(0)));
  const auto offs = gluing_offsets(p.graph, g.graph);
  REQUIRE(!offs.empty());
  const NGraphWithCycles glued = concatenate(p, g, offs[0]);
  CHECK(validate(glued.graph).empty());
  CHECK(surface_euler_characteristic(glued.graph) == 1);
  const int k = static_cast<int>(g.graph.boundary[0].size());
  for (int bad = 0; bad < k; ++bad) {
    if (std::find(offs.begin(), offs.end(), bad) != offs.end()) continue;
    CHECK_THROWS_AS(concatenate(p.graph, g.graph, bad), BoundaryMismatch);
    break;
  }
  CHECK_THROWS_AS(concatenate(g.graph, g.graph, 0), BoundaryMismatch);
  CHECK_THROWS_AS(coxeter_padding("C(Z~9)"), UnknownLabel);
  CHECK(coxeter_padding("Cinv(D~4)").graph.vertices.size() == padding_affine_d(4, true).graph.vertices.size());
}

TEST_CASE("Coxeter mutation of catalog graphs keeps the quiver and boundary") {
  for (const auto& shape : {CatalogShape{CatalogShape::Family::AffineD, 5},
                            CatalogShape{CatalogShape::Family::Tripod, 0, 2, 4, 4}}) {
    const CoxeterIterate start = coxeter_start(shape);
    const ExchangeMatrix q0 = intersection_quiver(start.core.graph, start.core.cycles);
    CoxeterIterate it = start;
    for (int r = 1; r <= 2; ++r) {
      it = legendrian_coxeter_mutation(it, 1);
      CHECK(it.paddings.size() == static_cast<size_t>(r));
      CHECK(validate(it.materialized.graph).empty());
      CHECK(intersection_quiver(it.materialized.graph, it.materialized.cycles) == q0);
      CHECK(cyclic_equal(it.materialized.graph.boundary_word(0), start.core.graph.boundary_word(0)));
    }
  }
}

TEST_CASE("recognition of catalog graphs") {
  const auto g = build_affine_d(6);
  const CoxeterIterate it = legendrian_coxeter_mutation(g.graph, g.cycles, -1);
  CHECK(it.shape.family == CatalogShape::Family::AffineD);
  CHECK(it.shape.n == 6);
  const auto t = build_tripod(3, 3, 3);
  const CoxeterIterate swapped = legendrian_coxeter_mutation(color_swap(t.graph), t.cycles, 1);
  CHECK(swapped.shape.family == CatalogShape::Family::Tripod);
  const auto h = mutate_cycle(g.graph, g.cycles, 0);
  CHECK_THROWS(legendrian_coxeter_mutation(h.graph, h.cycles, 1));
}

TEST_CASE("move reduction") {
  const NGraph pile = concatenate(padding_affine_d(4, false).graph, padding_affine_d(4, true).graph, 0);
  CHECK(pile.vertices.size() == 68);
  CHECK(pile.edges.size() == 100);
  std::vector<int> colors;
  for (int mark : pile.boundary[0]) colors.push_back(pile.vertices[mark].color);
  const NGraph trivial = trivial_annulus(4, colors);
  CHECK(trivial.vertices.size() == 40);
  CHECK(trivial.edges.size() == 20);
  CHECK(validate(trivial).empty());
  CHECK(trivial.interior_vertex_count() == 0);

  const int crossings = pile.count(VertexKind::Crossing);
  const ReduceResult r12 = move_reduce(pile, {Move::MoveI, Move::MoveII}, 1000);
  CHECK(r12.fixpoint);
  CHECK(validate(r12.graph).empty());
  CHECK(r12.graph.count(VertexKind::Crossing) == crossings);
  CHECK(r12.graph.vertices.size() == 52);

  const ReduceResult r125 = move_reduce(pile, {Move::MoveI, Move::MoveII, Move::MoveV}, 1000);
  CHECK(r125.fixpoint);
  CHECK(map_isomorphic(r125.graph, trivial));
  CHECK(cyclic_equal(r125.graph.boundary_word(0), pile.boundary_word(0)));
}

TEST_CASE("forward then backward Coxeter mutation reduces to the start") {
  for (const auto& shape : {CatalogShape{CatalogShape::Family::Tripod, 0, 3, 3, 3},
                            CatalogShape{CatalogShape::Family::Tripod, 0, 2, 3, 6}}) {
    const CoxeterIterate start = coxeter_start(shape);
    const CoxeterIterate back = legendrian_coxeter_mutation(legendrian_coxeter_mutation(start, 1), -1);
    const ReduceResult r = move_reduce(back.materialized.graph, {Move::MoveI, Move::MoveII}, 5000);
    CHECK(r.fixpoint);
    CHECK(map_isomorphic(r.graph, start.core.graph));
  }
}
