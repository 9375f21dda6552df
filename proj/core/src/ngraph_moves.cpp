#include <algorithm>
#include <array>

#include "clusterweave/ngraph.hpp"

namespace cw {

namespace {

// Working copy with deletion flags; compacted once the rewrite is done.
struct Editable {
  NGraph g;
  std::vector<char> dead_vertex;
  std::vector<char> dead_edge;

  explicit Editable(NGraph graph)
      : g(std::move(graph)), dead_vertex(g.vertices.size(), 0), dead_edge(g.edges.size(), 0) {}

  // Moves the end of dart d to vertex v (the rotation is set by the caller).
  void reattach(int d, int v) { g.edges[d / 2].ends[d % 2] = v; }

  // Joins the strand through two vertices that are about to be deleted: the
  // edge of `keep` takes over the far end of the edge of `drop`.
  void splice(int keep, int drop) {
    const int far_dart = NGraph::twin(drop);
    const int far_v = g.dart_vertex(far_dart);
    reattach(keep, far_v);
    auto& rot = g.vertices[far_v].darts;
    std::replace(rot.begin(), rot.end(), far_dart, keep);
    dead_edge[drop / 2] = 1;
  }

  NGraph compact() const {
    std::vector<int> vmap(g.vertices.size(), -1), emap(g.edges.size(), -1);
    NGraph out;
    out.N = g.N;
    out.surface = g.surface;
    for (size_t v = 0; v < g.vertices.size(); ++v) {
      if (dead_vertex[v]) continue;
      vmap[v] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(g.vertices[v]);
    }
    for (size_t e = 0; e < g.edges.size(); ++e) {
      if (dead_edge[e]) continue;
      emap[e] = static_cast<int>(out.edges.size());
      NEdge ne = g.edges[e];
      ne.ends[0] = vmap[ne.ends[0]];
      ne.ends[1] = vmap[ne.ends[1]];
      out.edges.push_back(ne);
    }
    for (auto& v : out.vertices) {
      for (auto& d : v.darts) d = 2 * emap[d / 2] + d % 2;
    }
    for (const auto& comp : g.boundary) {
      std::vector<int> marks;
      for (int m : comp) marks.push_back(vmap[m]);
      out.boundary.push_back(marks);
    }
    return out;
  }
};

int port(const NGraph& g, int v, int i) {
  const auto& ds = g.vertices[v].darts;
  const int k = static_cast<int>(ds.size());
  return ds[((i % k) + k) % k];
}

// Move I, reducing direction: two hexagonal points of the same colors joined
// by three edges that are consecutive at both of them. Both points disappear
// and the remaining three strands go straight through.
std::optional<NGraph> try_move_one(const NGraph& g) {
  for (int h1 = 0; h1 < static_cast<int>(g.vertices.size()); ++h1) {
    if (g.vertices[h1].kind != VertexKind::Hexagonal) continue;
    for (int i = 0; i < 6; ++i) {
      const int d0 = port(g, h1, i);
      const int h2 = g.dart_head(d0);
      if (h2 == h1 || g.vertices[h2].kind != VertexKind::Hexagonal) continue;
      if (g.vertices[h2].color != g.vertices[h1].color) continue;
      const int t0 = NGraph::twin(d0);
      const int d1 = port(g, h1, i + 1), d2 = port(g, h1, i + 2);
      // At h2 the shared edges appear in the opposite order.
      const int j = g.dart_index(t0);
      if (port(g, h2, j - 1) != NGraph::twin(d1) || port(g, h2, j - 2) != NGraph::twin(d2)) continue;
      std::array<int, 3> p{port(g, h1, i + 3), port(g, h1, i + 4), port(g, h1, i + 5)};
      std::array<int, 3> q{port(g, h2, j - 3), port(g, h2, j - 4), port(g, h2, j - 5)};
      bool clean = true;
      for (int k = 0; k < 3 && clean; ++k) {
        for (int d : {p[k], q[k]}) {
          const int far = g.dart_head(d);
          clean = clean && far != h1 && far != h2;
        }
      }
      if (!clean) continue;
      Editable ed(g);
      for (int k = 0; k < 3; ++k) ed.splice(p[k], q[k]);
      ed.dead_edge[d0 / 2] = ed.dead_edge[d1 / 2] = ed.dead_edge[d2 / 2] = 1;
      ed.dead_vertex[h1] = ed.dead_vertex[h2] = 1;
      ed.g.vertices[h1].darts.clear();
      ed.g.vertices[h2].darts.clear();
      return ed.compact();
    }
  }
  return std::nullopt;
}

// Move II, reducing direction: a trivalent vertex t of color r joined to two
// hexagonal points that share a pair of consecutive edges. The three
// vertices become one hexagonal point and one trivalent vertex of the other
// color of the hexagons.
std::optional<NGraph> try_move_two(const NGraph& g) {
  for (int t = 0; t < static_cast<int>(g.vertices.size()); ++t) {
    if (g.vertices[t].kind != VertexKind::Trivalent) continue;
    for (int i = 0; i < 3; ++i) {
      const int x = port(g, t, i), ta = port(g, t, i + 1), tb = port(g, t, i + 2);
      const int ha = g.dart_head(ta), hb = g.dart_head(tb);
      if (ha == hb || ha == t || hb == t) continue;
      if (g.vertices[ha].kind != VertexKind::Hexagonal || g.vertices[hb].kind != VertexKind::Hexagonal) continue;
      if (g.vertices[ha].color != g.vertices[hb].color) continue;
      const int k = g.dart_index(NGraph::twin(ta));
      const int m = g.dart_index(NGraph::twin(tb));
      // h_a: k+4 and k+5 lead to h_b, where they sit at m+2 and m+1.
      const int a4 = port(g, ha, k + 4), a5 = port(g, ha, k + 5);
      if (port(g, hb, m + 2) != NGraph::twin(a4) || port(g, hb, m + 1) != NGraph::twin(a5)) continue;
      const int a1 = port(g, ha, k + 1), a2 = port(g, ha, k + 2), a3 = port(g, ha, k + 3);
      const int b1 = port(g, hb, m + 3), b2 = port(g, hb, m + 4), b3 = port(g, hb, m + 5);
      bool clean = true;
      for (int d : {x, a1, a2, a3, b1, b2, b3}) {
        const int far = g.dart_head(d);
        clean = clean && far != t && far != ha && far != hb;
      }
      if (!clean) continue;
      const int hex = g.vertices[ha].color;
      const int other = g.vertices[t].color == hex ? hex + 1 : hex;
      Editable ed(g);
      // h_a becomes the merged hexagonal point and t the new trivalent vertex;
      // the edge between them is recolored.
      ed.reattach(x, ha);
      ed.reattach(a3, t);
      ed.reattach(b1, t);
      ed.reattach(b2, ha);
      ed.reattach(b3, ha);
      ed.g.edges[ta / 2].color = other;
      ed.g.vertices[ha].darts = {x, a1, a2, NGraph::twin(ta), b2, b3};
      ed.g.vertices[t].darts = {ta, a3, b1};
      ed.g.vertices[t].color = other;
      ed.dead_vertex[hb] = 1;
      ed.g.vertices[hb].darts.clear();
      ed.dead_edge[tb / 2] = ed.dead_edge[a4 / 2] = ed.dead_edge[a5 / 2] = 1;
      return ed.compact();
    }
  }
  return std::nullopt;
}

// Move V, reducing direction: two strands of non-adjacent colors crossing
// twice around an empty bigon are pulled apart.
std::optional<NGraph> try_move_five(const NGraph& g) {
  for (int c1 = 0; c1 < static_cast<int>(g.vertices.size()); ++c1) {
    if (g.vertices[c1].kind != VertexKind::Crossing) continue;
    for (int i = 0; i < 4; ++i) {
      const int da = port(g, c1, i), db = port(g, c1, i + 1);
      const int c2 = g.dart_head(da);
      if (c2 == c1 || g.dart_head(db) != c2 || g.vertices[c2].kind != VertexKind::Crossing) continue;
      const int j = g.dart_index(NGraph::twin(da));
      if (port(g, c2, j - 1) != NGraph::twin(db)) continue;
      const int a1 = port(g, c1, i + 2), b1 = port(g, c1, i + 3);
      const int a2 = port(g, c2, j + 2), b2 = port(g, c2, j + 1);
      bool clean = true;
      for (int d : {a1, b1, a2, b2}) {
        const int far = g.dart_head(d);
        clean = clean && far != c1 && far != c2;
      }
      if (!clean) continue;
      Editable ed(g);
      ed.splice(a1, a2);
      ed.splice(b1, b2);
      ed.dead_edge[da / 2] = ed.dead_edge[db / 2] = 1;
      ed.dead_vertex[c1] = ed.dead_vertex[c2] = 1;
      ed.g.vertices[c1].darts.clear();
      ed.g.vertices[c2].darts.clear();
      return ed.compact();
    }
  }
  return std::nullopt;
}

}  // namespace

ReduceResult move_reduce(const NGraph& g, const std::vector<Move>& moves, int max_steps) {
  ReduceResult r;
  r.graph = g;
  const bool one = std::find(moves.begin(), moves.end(), Move::MoveI) != moves.end();
  const bool two = std::find(moves.begin(), moves.end(), Move::MoveII) != moves.end();
  const bool five = std::find(moves.begin(), moves.end(), Move::MoveV) != moves.end();
  while (r.steps < max_steps) {
    std::optional<NGraph> next;
    if (one) next = try_move_one(r.graph);
    if (!next && two) next = try_move_two(r.graph);
    if (!next && five) next = try_move_five(r.graph);
    if (!next) {
      r.fixpoint = true;
      return r;
    }
    r.graph = std::move(*next);
    ++r.steps;
  }
  return r;
}

}  // namespace cw
