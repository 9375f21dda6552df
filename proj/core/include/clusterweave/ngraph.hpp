#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clusterweave/braid.hpp"
#include "clusterweave/exchange_matrix.hpp"

namespace cw {

enum class Surface { Disk, Annulus };

// Mark is a degree-one vertex sitting on a boundary component.
enum class VertexKind { Trivalent, Hexagonal, Crossing, Mark };

struct NVertex {
  VertexKind kind = VertexKind::Trivalent;
  // Trivalent: its color. Hexagonal: the lower of its two consecutive colors.
  // Crossing: the lower color. Mark: the color of its edge.
  int color = 1;
  int color2 = 0;          // Crossing only: the higher color
  std::vector<int> darts;  // darts leaving this vertex, counterclockwise
};

// Edge e owns darts 2e (leaving ends[0]) and 2e+1 (leaving ends[1]).
struct NEdge {
  int color = 1;
  int ends[2] = {-1, -1};
};

// Combinatorial N-graph: a rotation system whose boundary marks are listed
// counterclockwise per boundary component (0 = outer, 1 = inner hole).
struct NGraph {
  int N = 3;
  Surface surface = Surface::Disk;
  std::vector<NVertex> vertices;
  std::vector<NEdge> edges;
  std::vector<std::vector<int>> boundary;

  static int dart_edge(int d) { return d / 2; }
  static int twin(int d) { return d ^ 1; }
  int dart_vertex(int d) const { return edges[d / 2].ends[d % 2]; }
  int dart_head(int d) const { return edges[d / 2].ends[1 - d % 2]; }
  // Position of dart d in the rotation at its vertex.
  int dart_index(int d) const;
  int next_ccw(int d) const;
  int prev_ccw(int d) const;
  // The dart of edge e at vertex v (the first one for a loop).
  int dart_at(int e, int v) const;
  // Color of the port at position `i` of vertex v.
  int port_color(int v, int i) const { return edges[vertices[v].darts[i] / 2].color; }

  BraidWord boundary_word(int component = 0) const;
  int count(VertexKind kind) const;
  int interior_vertex_count() const;  // vertices that are not marks

  // Builder helpers.
  int add_vertex(VertexKind kind, int color, int color2 = 0);
  int add_edge(int color, int u, int v);  // appends darts to neither rotation
};

enum class CycleKind { I, LongI, YUpper, YLower, Tree };

std::string cycle_kind_name(CycleKind kind);

// One-cycle presented by its edge set. Every cycle is oriented
// counterclockwise, so no per-cycle orientation data is stored.
struct Cycle {
  CycleKind kind = CycleKind::I;
  std::vector<int> edges;
};

using CycleSet = std::vector<Cycle>;

struct NGraphWithCycles {
  NGraph graph;
  CycleSet cycles;
};

enum class ViolationKind {
  DegreeMismatch,
  MonochromaticityViolated,
  HexagonPatternViolated,
  CrossingPatternViolated,
  ColorOutOfRange,
  RotationInconsistent,
  BoundaryInconsistent,
  NotPlanar,
};

struct Violation {
  ViolationKind kind;
  std::string detail;
};

std::string violation_name(ViolationKind kind);

std::vector<Violation> validate(const NGraph& g);
// Euler characteristic of the surface from face tracing: 1 for a disk, 0 for
// an annulus when the rotation system is planar.
int surface_euler_characteristic(const NGraph& g);

// Checks that every cycle matches its kind; throws InvalidInput otherwise.
void validate_cycles(const NGraph& g, const CycleSet& cycles);

// b[i][j] = sum over trivalent vertices shared by cycles i and j of +1 when
// the port of j immediately follows the port of i counterclockwise and -1
// when it immediately precedes it. Throws CyclesShareEdge.
ExchangeMatrix intersection_quiver(const NGraph& g, const CycleSet& cycles);

// Legendrian mutation at an I-cycle or a Y-cycle. Throws NotMutableKind.
NGraphWithCycles mutate_cycle(const NGraph& g, const CycleSet& cycles, int i);

// Catalog initial graphs; cycle numbering matches the catalog quivers.
NGraphWithCycles build_affine_d(int n);
NGraphWithCycles build_tripod(int a, int b, int c);
// D~n (n >= 4) or E~6, E~7, E~8 (as the tripods (3,3,3), (2,4,4), (2,3,6)).
NGraphWithCycles build_initial(const DynkinType& type);

// Exchanges colors c and N - c.
NGraph color_swap(const NGraph& g);
// Reflection: reverses every rotation and every boundary order.
NGraph mirror(const NGraph& g);

struct AnnularPadding {
  std::string label;
  NGraph graph;
};

// Labels: "C(a,b,c)", "Cbar(a,b,c)", "Cinv(a,b,c)", "Cbarinv(a,b,c)",
// "C(D~n)", "Cinv(D~n)". Throws UnknownLabel.
AnnularPadding coxeter_padding(const std::string& label);
AnnularPadding padding_tripod(int a, int b, int c, bool bar, bool inverse);
AnnularPadding padding_affine_d(int n, bool inverse);

// Offsets k for which inner mark j of p can be glued to outer mark j + k of g.
std::vector<int> gluing_offsets(const NGraph& outer, const NGraph& inner);

// Glues the inner boundary of `outer` (an annulus) to the outer boundary of
// `inner` with the given offset. Throws BoundaryMismatch.
NGraph concatenate(const NGraph& outer, const NGraph& inner, int offset);
// Same, carrying the cycles of `inner` across (edge ids are remapped).
NGraphWithCycles concatenate(const AnnularPadding& p, const NGraphWithCycles& g, int offset);

// Shape of a catalog graph and of its Coxeter iterates.
struct CatalogShape {
  enum class Family { AffineD, Tripod } family = Family::AffineD;
  int n = 4;
  int a = 3, b = 3, c = 3;
};

// A catalog graph with piled Coxeter paddings; paddings[0] is outermost.
struct CoxeterIterate {
  CatalogShape shape;
  bool core_swapped = false;  // tripods: the core is the color-swapped graph
  std::vector<std::string> paddings;
  NGraphWithCycles core;
  NGraphWithCycles materialized;
};

CoxeterIterate coxeter_start(const CatalogShape& shape);
// Throws NotBipartite when the quiver is not bipartite.
CoxeterIterate legendrian_coxeter_mutation(const CoxeterIterate& it, int direction);
// Recognizes a catalog initial graph (or its color swap for tripods) up to
// map isomorphism. Throws NotCatalogShape.
CoxeterIterate legendrian_coxeter_mutation(const NGraph& g, const CycleSet& cycles, int direction);

// MoveV pulls apart two strands of non-adjacent colors crossing twice.
enum class Move { MoveI, MoveII, MoveV };

struct ReduceResult {
  NGraph graph;
  int steps = 0;
  bool fixpoint = false;
};

// Greedy application of the reducing direction of each allowed move, tried
// in the order Move I, Move II, Move V.
ReduceResult move_reduce(const NGraph& g, const std::vector<Move>& moves, int max_steps);

// Combinatorial-map isomorphism preserving vertex kinds, colors and the
// boundary order, with boundary component 0 allowed to rotate.
bool map_isomorphic(const NGraph& a, const NGraph& b);

// Trivial annulus: parallel strands with the given colors (read
// counterclockwise), no interior vertices.
NGraph trivial_annulus(int N, const std::vector<int>& colors);

}  // namespace cw
