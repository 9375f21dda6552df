#include "clusterweave/ngraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "clusterweave/errors.hpp"

namespace cw {

int NGraph::dart_index(int d) const {
  const auto& ds = vertices[dart_vertex(d)].darts;
  auto it = std::find(ds.begin(), ds.end(), d);
  if (it == ds.end()) throw InvalidInput("dart " + std::to_string(d) + " missing from its rotation");
  return static_cast<int>(it - ds.begin());
}

int NGraph::next_ccw(int d) const {
  const auto& ds = vertices[dart_vertex(d)].darts;
  return ds[(dart_index(d) + 1) % ds.size()];
}

int NGraph::prev_ccw(int d) const {
  const auto& ds = vertices[dart_vertex(d)].darts;
  return ds[(dart_index(d) + ds.size() - 1) % ds.size()];
}

int NGraph::dart_at(int e, int v) const {
  if (edges[e].ends[0] == v) return 2 * e;
  if (edges[e].ends[1] == v) return 2 * e + 1;
  throw InvalidInput("edge " + std::to_string(e) + " does not touch vertex " + std::to_string(v));
}

BraidWord NGraph::boundary_word(int component) const {
  BraidWord w;
  w.strands = N;
  if (component < 0 || component >= static_cast<int>(boundary.size())) return w;
  for (int m : boundary[component]) w.letters.push_back(vertices[m].color);
  return w;
}

int NGraph::count(VertexKind kind) const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(),
                                        [&](const NVertex& v) { return v.kind == kind; }));
}

int NGraph::interior_vertex_count() const { return static_cast<int>(vertices.size()) - count(VertexKind::Mark); }

int NGraph::add_vertex(VertexKind kind, int color, int color2) {
  NVertex v;
  v.kind = kind;
  v.color = color;
  v.color2 = color2;
  vertices.push_back(v);
  return static_cast<int>(vertices.size()) - 1;
}

int NGraph::add_edge(int color, int u, int v) {
  NEdge e;
  e.color = color;
  e.ends[0] = u;
  e.ends[1] = v;
  edges.push_back(e);
  return static_cast<int>(edges.size()) - 1;
}

std::string cycle_kind_name(CycleKind kind) {
  switch (kind) {
    case CycleKind::I: return "I";
    case CycleKind::LongI: return "LongI";
    case CycleKind::YUpper: return "YUpper";
    case CycleKind::YLower: return "YLower";
    case CycleKind::Tree: return "Tree";
  }
  return "?";
}

std::string violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DegreeMismatch: return "DegreeMismatch";
    case ViolationKind::MonochromaticityViolated: return "MonochromaticityViolated";
    case ViolationKind::HexagonPatternViolated: return "HexagonPatternViolated";
    case ViolationKind::CrossingPatternViolated: return "CrossingPatternViolated";
    case ViolationKind::ColorOutOfRange: return "ColorOutOfRange";
    case ViolationKind::RotationInconsistent: return "RotationInconsistent";
    case ViolationKind::BoundaryInconsistent: return "BoundaryInconsistent";
    case ViolationKind::NotPlanar: return "NotPlanar";
  }
  return "?";
}

namespace {

// Face count of the map augmented by boundary arcs between consecutive marks.
// Returns V - E + F of the augmented map.
int augmented_euler(const NGraph& g) {
  const int real_edges = static_cast<int>(g.edges.size());
  int arcs = 0;
  for (const auto& comp : g.boundary) arcs += static_cast<int>(comp.size());
  const int total_edges = real_edges + arcs;
  // Rotation of every dart, real and virtual.
  std::vector<std::vector<int>> rot(g.vertices.size());
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.vertices[v].kind != VertexKind::Mark) rot[v] = g.vertices[v].darts;
  }
  std::vector<int> dart_vertex(2 * total_edges, -1);
  for (int e = 0; e < real_edges; ++e) {
    dart_vertex[2 * e] = g.edges[e].ends[0];
    dart_vertex[2 * e + 1] = g.edges[e].ends[1];
  }
  int next_arc = real_edges;
  for (size_t c = 0; c < g.boundary.size(); ++c) {
    const auto& comp = g.boundary[c];
    const int k = static_cast<int>(comp.size());
    const int first = next_arc;
    for (int i = 0; i < k; ++i) {
      dart_vertex[2 * (first + i)] = comp[i];
      dart_vertex[2 * (first + i) + 1] = comp[(i + 1) % k];
    }
    for (int i = 0; i < k; ++i) {
      const int m = comp[i];
      const int next = 2 * (first + i);
      const int prev = 2 * (first + (i + k - 1) % k) + 1;
      const int inward = g.vertices[m].darts.empty() ? -1 : g.vertices[m].darts[0];
      if (c == 0) {
        rot[m] = {prev, next, inward};
      } else {
        rot[m] = {prev, inward, next};
      }
    }
    next_arc += k;
  }
  std::vector<int> pos(2 * total_edges, -1);
  for (size_t v = 0; v < rot.size(); ++v) {
    for (size_t i = 0; i < rot[v].size(); ++i) {
      if (rot[v][i] >= 0 && rot[v][i] < 2 * total_edges) pos[rot[v][i]] = static_cast<int>(i);
    }
  }
  std::vector<char> seen(2 * total_edges, 0);
  int faces = 0;
  for (int d0 = 0; d0 < 2 * total_edges; ++d0) {
    if (seen[d0] || pos[d0] < 0) continue;
    ++faces;
    int d = d0;
    while (!seen[d]) {
      seen[d] = 1;
      const int t = d ^ 1;
      const int v = dart_vertex[t];
      if (v < 0 || pos[t] < 0) break;
      const auto& r = rot[v];
      d = r[(pos[t] + 1) % r.size()];
    }
  }
  int used_vertices = 0;
  for (const auto& r : rot) used_vertices += r.empty() ? 0 : 1;
  return used_vertices - total_edges + faces;
}

}  // namespace

int surface_euler_characteristic(const NGraph& g) {
  return augmented_euler(g) - static_cast<int>(g.boundary.size());
}

std::vector<Violation> validate(const NGraph& g) {
  std::vector<Violation> out;
  auto add = [&](ViolationKind k, const std::string& s) { out.push_back({k, s}); };
  bool structural_ok = true;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const auto& ed = g.edges[e];
    if (ed.color < 1 || ed.color > g.N - 1) add(ViolationKind::ColorOutOfRange, "edge " + std::to_string(e));
    for (int s = 0; s < 2; ++s) {
      const int v = ed.ends[s];
      const int d = 2 * static_cast<int>(e) + s;
      if (v < 0 || v >= static_cast<int>(g.vertices.size()) ||
          std::count(g.vertices[v].darts.begin(), g.vertices[v].darts.end(), d) != 1) {
        add(ViolationKind::RotationInconsistent, "dart " + std::to_string(d));
        structural_ok = false;
      }
    }
  }
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& vx = g.vertices[v];
    for (int d : vx.darts) {
      if (d < 0 || d >= 2 * static_cast<int>(g.edges.size()) || g.dart_vertex(d) != static_cast<int>(v)) {
        add(ViolationKind::RotationInconsistent, "vertex " + std::to_string(v));
        structural_ok = false;
      }
    }
  }
  if (!structural_ok) return out;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& vx = g.vertices[v];
    const std::string id = "vertex " + std::to_string(v);
    const int deg = static_cast<int>(vx.darts.size());
    std::vector<int> cols;
    for (int i = 0; i < deg; ++i) cols.push_back(g.port_color(static_cast<int>(v), i));
    switch (vx.kind) {
      case VertexKind::Trivalent:
        if (deg != 3) add(ViolationKind::DegreeMismatch, id);
        for (int c : cols) {
          if (c != vx.color) {
            add(ViolationKind::MonochromaticityViolated, id);
            break;
          }
        }
        break;
      case VertexKind::Hexagonal: {
        if (deg != 6) {
          add(ViolationKind::DegreeMismatch, id);
          break;
        }
        bool ok = vx.color >= 1 && vx.color + 1 <= g.N - 1;
        const int first = cols[0];
        for (int i = 0; i < 6 && ok; ++i) {
          const int expect = (i % 2 == 0) ? first : (first == vx.color ? vx.color + 1 : vx.color);
          if (cols[i] != expect) ok = false;
        }
        if (first != vx.color && first != vx.color + 1) ok = false;
        if (!ok) add(ViolationKind::HexagonPatternViolated, id);
        break;
      }
      case VertexKind::Crossing: {
        if (deg != 4) {
          add(ViolationKind::DegreeMismatch, id);
          break;
        }
        const bool ok = std::abs(vx.color - vx.color2) >= 2 && cols[0] == cols[2] && cols[1] == cols[3] &&
                        ((cols[0] == vx.color && cols[1] == vx.color2) || (cols[0] == vx.color2 && cols[1] == vx.color));
        if (!ok) add(ViolationKind::CrossingPatternViolated, id);
        break;
      }
      case VertexKind::Mark:
        if (deg != 1) add(ViolationKind::DegreeMismatch, id);
        else if (cols[0] != vx.color) add(ViolationKind::MonochromaticityViolated, id);
        break;
    }
  }
  // Boundary bookkeeping.
  const size_t want = g.surface == Surface::Disk ? 1 : 2;
  if (g.boundary.size() != want) add(ViolationKind::BoundaryInconsistent, "component count");
  std::vector<int> seen(g.vertices.size(), 0);
  for (const auto& comp : g.boundary) {
    for (int m : comp) {
      if (m < 0 || m >= static_cast<int>(g.vertices.size()) || g.vertices[m].kind != VertexKind::Mark) {
        add(ViolationKind::BoundaryInconsistent, "non-mark on boundary");
        continue;
      }
      ++seen[m];
    }
  }
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.vertices[v].kind == VertexKind::Mark && seen[v] != 1) {
      add(ViolationKind::BoundaryInconsistent, "mark " + std::to_string(v) + " listed " + std::to_string(seen[v]) + " times");
    }
  }
  if (out.empty()) {
    const int chi = surface_euler_characteristic(g);
    const int expect = g.surface == Surface::Disk ? 1 : 0;
    if (chi != expect) add(ViolationKind::NotPlanar, "Euler characteristic " + std::to_string(chi));
  }
  return out;
}

namespace {

struct CycleShape {
  std::map<int, std::vector<int>> ports;  // vertex -> darts used
  bool connected = false;
  bool acyclic = false;
  std::string problem;
};

CycleShape cycle_shape(const NGraph& g, const Cycle& cy) {
  CycleShape s;
  std::set<int> es(cy.edges.begin(), cy.edges.end());
  if (es.size() != cy.edges.size() || es.empty()) {
    s.problem = "repeated or missing edges";
    return s;
  }
  for (int e : es) {
    if (e < 0 || e >= static_cast<int>(g.edges.size())) {
      s.problem = "edge out of range";
      return s;
    }
    s.ports[g.edges[e].ends[0]].push_back(2 * e);
    s.ports[g.edges[e].ends[1]].push_back(2 * e + 1);
  }
  // Connectivity through union-find on vertices.
  std::map<int, int> parent;
  for (auto& [v, _] : s.ports) parent[v] = v;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int e : es) parent[find(g.edges[e].ends[0])] = find(g.edges[e].ends[1]);
  std::set<int> roots;
  for (auto& [v, _] : s.ports) roots.insert(find(v));
  s.connected = roots.size() == 1;
  s.acyclic = es.size() + 1 == s.ports.size();
  for (auto& [v, ds] : s.ports) {
    const auto& vx = g.vertices[v];
    const int deg = static_cast<int>(ds.size());
    std::vector<int> idx;
    for (int d : ds) idx.push_back(g.dart_index(d));
    std::sort(idx.begin(), idx.end());
    switch (vx.kind) {
      case VertexKind::Trivalent:
        if (deg != 1) s.problem = "cycle passes through a trivalent vertex";
        break;
      case VertexKind::Hexagonal:
        if (deg == 2) {
          if (idx[1] - idx[0] != 3) s.problem = "cycle does not cross a hexagonal point straight";
        } else if (deg == 3) {
          if (!(idx[1] - idx[0] == 2 && idx[2] - idx[1] == 2)) s.problem = "hexagonal branch ports are not alternate";
        } else {
          s.problem = "cycle ends at a hexagonal point";
        }
        break;
      case VertexKind::Crossing:
        if (deg != 2 || idx[1] - idx[0] != 2) s.problem = "cycle turns at a crossing";
        break;
      case VertexKind::Mark:
        s.problem = "cycle reaches the boundary";
        break;
    }
  }
  return s;
}

}  // namespace

void validate_cycles(const NGraph& g, const CycleSet& cycles) {
  for (size_t i = 0; i < cycles.size(); ++i) {
    const auto& cy = cycles[i];
    const CycleShape s = cycle_shape(g, cy);
    const std::string id = "cycle " + std::to_string(i) + " (" + cycle_kind_name(cy.kind) + ")";
    if (!s.problem.empty()) throw InvalidInput(id + ": " + s.problem);
    if (!s.connected || !s.acyclic) throw InvalidInput(id + ": edges do not form a tree");
    int branch = 0;
    for (auto& [v, ds] : s.ports) {
      if (g.vertices[v].kind == VertexKind::Hexagonal && ds.size() == 3) ++branch;
    }
    switch (cy.kind) {
      case CycleKind::I:
        if (cy.edges.size() != 1) throw InvalidInput(id + ": expected one edge");
        break;
      case CycleKind::YUpper:
      case CycleKind::YLower:
        if (cy.edges.size() != 3 || branch != 1) throw InvalidInput(id + ": expected three edges at one hexagonal point");
        break;
      case CycleKind::LongI:
        if (branch != 0) throw InvalidInput(id + ": long I-cycle branches");
        break;
      case CycleKind::Tree:
        break;
    }
  }
}

ExchangeMatrix intersection_quiver(const NGraph& g, const CycleSet& cycles) {
  const int n = static_cast<int>(cycles.size());
  std::map<int, int> owner;
  for (int i = 0; i < n; ++i) {
    for (int e : cycles[i].edges) {
      auto [it, fresh] = owner.emplace(e, i);
      if (!fresh && it->second != i) {
        throw CyclesShareEdge("cycles " + std::to_string(it->second + 1) + " and " + std::to_string(i + 1) +
                              " share edge " + std::to_string(e));
      }
    }
  }
  // Ports at trivalent vertices, per cycle.
  std::vector<std::map<int, std::vector<int>>> ports(n);
  for (int i = 0; i < n; ++i) {
    for (int e : cycles[i].edges) {
      for (int s = 0; s < 2; ++s) {
        const int v = g.edges[e].ends[s];
        if (g.vertices[v].kind == VertexKind::Trivalent) ports[i][v].push_back(2 * e + s);
      }
    }
  }
  ExchangeMatrix b = ExchangeMatrix::square(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int total = 0;
      for (auto& [v, fi] : ports[i]) {
        auto it = ports[j].find(v);
        if (it == ports[j].end()) continue;
        for (int f : fi) {
          for (int f2 : it->second) {
            if (g.next_ccw(f) == f2) ++total;
            else if (g.prev_ccw(f) == f2) --total;
          }
        }
      }
      b.at(i, j) = total;
      b.at(j, i) = -total;
    }
  }
  return b;
}

namespace {

std::vector<int> rotated_to(const std::vector<int>& r, int d) {
  auto it = std::find(r.begin(), r.end(), d);
  std::vector<int> out(it, r.end());
  out.insert(out.end(), r.begin(), it);
  return out;
}

void set_end(NGraph& g, int dart, int v) { g.edges[dart / 2].ends[dart % 2] = v; }

NGraphWithCycles mutate_i(const NGraph& g0, const CycleSet& cycles, int i) {
  NGraphWithCycles out{g0, cycles};
  NGraph& g = out.graph;
  const int e = cycles[i].edges[0];
  const int v1 = g.edges[e].ends[0];
  const int v2 = g.edges[e].ends[1];
  if (v1 == v2) throw NotMutableKind("I-cycle is a loop");
  const auto r1 = rotated_to(g.vertices[v1].darts, 2 * e);
  const auto r2 = rotated_to(g.vertices[v2].darts, 2 * e + 1);
  const int a = r1[1], b = r1[2], c = r2[1], d = r2[2];
  g.vertices[v1].darts = {2 * e, b, c};
  g.vertices[v2].darts = {2 * e + 1, d, a};
  set_end(g, c, v1);
  set_end(g, a, v2);
  return out;
}

NGraphWithCycles mutate_y(const NGraph& g0, const CycleSet& cycles, int i) {
  NGraphWithCycles out{g0, cycles};
  NGraph& g = out.graph;
  const auto& cy = cycles[i];
  // Locate the hexagonal point and the three legs.
  std::map<int, int> hits;
  for (int e : cy.edges) {
    ++hits[g.edges[e].ends[0]];
    ++hits[g.edges[e].ends[1]];
  }
  int h = -1;
  for (auto& [v, k] : hits) {
    if (k == 3 && g.vertices[v].kind == VertexKind::Hexagonal) h = v;
  }
  if (h < 0) throw NotMutableKind("Y-cycle has no hexagonal center");
  std::set<int> legs_darts;
  for (int e : cy.edges) legs_darts.insert(g.dart_at(e, h));
  std::vector<int> hr = g.vertices[h].darts;
  int start = -1;
  for (int k = 0; k < 6; ++k) {
    if (legs_darts.count(hr[k])) {
      start = k;
      break;
    }
  }
  hr = rotated_to(hr, hr[start]);
  if (!legs_darts.count(hr[2]) || !legs_darts.count(hr[4])) throw NotMutableKind("Y legs are not alternate ports");
  const int hx = hr[0], R1 = hr[1], hy = hr[2], R2 = hr[3], hz = hr[4], R3 = hr[5];
  const int ex = hx / 2, ey = hy / 2, ez = hz / 2;
  const int vx = g.dart_head(hx), vy = g.dart_head(hy), vz = g.dart_head(hz);
  for (int v : {vx, vy, vz}) {
    if (g.vertices[v].kind != VertexKind::Trivalent) throw NotMutableKind("Y leg does not end at a trivalent vertex");
  }
  const auto rx = rotated_to(g.vertices[vx].darts, NGraph::twin(hx));
  const auto ry = rotated_to(g.vertices[vy].darts, NGraph::twin(hy));
  const auto rz = rotated_to(g.vertices[vz].darts, NGraph::twin(hz));
  const int x1 = rx[1], x2 = rx[2], y1 = ry[1], y2 = ry[2], z1 = rz[1], z2 = rz[2];
  const int yc = g.edges[ex].color;
  const int oc = g.vertices[h].color == yc ? yc + 1 : g.vertices[h].color;
  const int low = std::min(yc, oc);

  // Cycles that leave through a red external of the center cannot be carried.
  const std::set<int> red_ext = {R1 / 2, R2 / 2, R3 / 2};
  for (size_t j = 0; j < cycles.size(); ++j) {
    if (static_cast<int>(j) == i) continue;
    for (int e : cycles[j].edges) {
      if (red_ext.count(e)) throw Unsupported("cycle " + std::to_string(j + 1) + " runs through the mutated hexagonal point");
    }
  }

  const int qa = vx, qb = vy, qc = vz, hp = h;
  for (int q : {qa, qb, qc}) g.vertices[q].color = oc;
  const int p1 = g.add_vertex(VertexKind::Hexagonal, low);
  const int p2 = g.add_vertex(VertexKind::Hexagonal, low);
  const int p3 = g.add_vertex(VertexKind::Hexagonal, low);
  for (int e : {ex, ey, ez}) g.edges[e].color = oc;
  const int f1 = g.add_edge(yc, hp, p1);
  const int f2 = g.add_edge(yc, hp, p2);
  const int f3 = g.add_edge(yc, hp, p3);
  const int ra1 = g.add_edge(oc, p1, qa);
  const int ra2 = g.add_edge(oc, qa, p2);
  const int rc2 = g.add_edge(oc, p2, qc);
  const int rc3 = g.add_edge(oc, qc, p3);
  const int rb3 = g.add_edge(oc, p3, qb);
  const int rb1 = g.add_edge(oc, qb, p1);
  set_end(g, x1, p2);
  set_end(g, x2, p1);
  set_end(g, y1, p1);
  set_end(g, y2, p3);
  set_end(g, z1, p3);
  set_end(g, z2, p2);
  set_end(g, R1, p1);
  set_end(g, R2, p3);
  set_end(g, R3, p2);
  g.vertices[p1].darts = {g.dart_at(ra1, p1), x2, R1, y1, g.dart_at(rb1, p1), g.dart_at(f1, p1)};
  g.vertices[p2].darts = {R3, x1, g.dart_at(ra2, p2), g.dart_at(f2, p2), g.dart_at(rc2, p2), z2};
  g.vertices[p3].darts = {g.dart_at(rc3, p3), g.dart_at(f3, p3), g.dart_at(rb3, p3), y2, R2, z1};
  g.vertices[hp].darts = {g.dart_at(f2, hp), hx, g.dart_at(f1, hp), hy, g.dart_at(f3, hp), hz};
  g.vertices[qa].darts = {g.dart_at(ra1, qa), NGraph::twin(hx), g.dart_at(ra2, qa)};
  g.vertices[qb].darts = {NGraph::twin(hy), g.dart_at(rb1, qb), g.dart_at(rb3, qb)};
  g.vertices[qc].darts = {g.dart_at(rc2, qc), NGraph::twin(hz), g.dart_at(rc3, qc)};

  // Carry the other cycles straight through the new hexagonal points.
  const std::set<int> moved = {x1, x2, y1, y2, z1, z2};
  for (size_t j = 0; j < out.cycles.size(); ++j) {
    if (static_cast<int>(j) == i) continue;
    auto& cj = out.cycles[j];
    std::vector<int> extra;
    for (int e : cj.edges) {
      for (int s = 0; s < 2; ++s) {
        const int d = 2 * e + s;
        if (!moved.count(d)) continue;
        const auto& r = g.vertices[g.dart_vertex(d)].darts;
        const int k = static_cast<int>(std::find(r.begin(), r.end(), d) - r.begin());
        extra.push_back(r[(k + 3) % 6] / 2);
      }
    }
    if (extra.empty()) continue;
    cj.edges.insert(cj.edges.end(), extra.begin(), extra.end());
    if (cj.kind == CycleKind::I || cj.kind == CycleKind::LongI) cj.kind = CycleKind::LongI;
    else cj.kind = CycleKind::Tree;
  }
  out.cycles[i].kind = cy.kind == CycleKind::YUpper ? CycleKind::YLower : CycleKind::YUpper;
  return out;
}

}  // namespace

NGraphWithCycles mutate_cycle(const NGraph& g, const CycleSet& cycles, int i) {
  if (i < 0 || i >= static_cast<int>(cycles.size())) throw IndexOutOfRange("cycle " + std::to_string(i));
  switch (cycles[i].kind) {
    case CycleKind::I: return mutate_i(g, cycles, i);
    case CycleKind::YUpper:
    case CycleKind::YLower: {
      // Mixed arrows at a Y-cycle would need cycle sums that edge-disjoint
      // good cycles cannot express.
      const ExchangeMatrix b = intersection_quiver(g, cycles);
      bool in = false, out = false;
      for (int j = 0; j < b.cols(); ++j) {
        in = in || b.at(i, j) < 0;
        out = out || b.at(i, j) > 0;
      }
      if (in && out) {
        throw NotMutableKind("Y-cycle " + std::to_string(i + 1) + " is neither a source nor a sink");
      }
      return mutate_y(g, cycles, i);
    }
    default: break;
  }
  throw NotMutableKind("cycle " + std::to_string(i + 1) + " has kind " + cycle_kind_name(cycles[i].kind));
}

NGraph color_swap(const NGraph& g) {
  NGraph out = g;
  const int N = g.N;
  for (auto& e : out.edges) e.color = N - e.color;
  for (auto& v : out.vertices) {
    switch (v.kind) {
      case VertexKind::Trivalent:
      case VertexKind::Mark: v.color = N - v.color; break;
      case VertexKind::Hexagonal: v.color = N - v.color - 1; break;
      case VertexKind::Crossing: {
        const int lo = N - v.color2, hi = N - v.color;
        v.color = lo;
        v.color2 = hi;
        break;
      }
    }
  }
  return out;
}

NGraph mirror(const NGraph& g) {
  NGraph out = g;
  for (auto& v : out.vertices) std::reverse(v.darts.begin(), v.darts.end());
  for (auto& comp : out.boundary) {
    if (comp.size() > 1) std::reverse(comp.begin() + 1, comp.end());
  }
  return out;
}

NGraph trivial_annulus(int N, const std::vector<int>& colors) {
  NGraph g;
  g.N = N;
  g.surface = Surface::Annulus;
  g.boundary.assign(2, {});
  for (int c : colors) {
    const int o = g.add_vertex(VertexKind::Mark, c);
    const int in = g.add_vertex(VertexKind::Mark, c);
    const int e = g.add_edge(c, o, in);
    g.vertices[o].darts = {2 * e};
    g.vertices[in].darts = {2 * e + 1};
    g.boundary[0].push_back(o);
    g.boundary[1].push_back(in);
  }
  return g;
}

std::vector<int> gluing_offsets(const NGraph& outer, const NGraph& inner) {
  std::vector<int> out;
  if (outer.surface != Surface::Annulus || outer.boundary.size() < 2 || inner.boundary.empty()) return out;
  const auto a = outer.boundary_word(1).letters;
  const auto b = inner.boundary_word(0).letters;
  if (a.size() != b.size()) return out;
  const size_t k = a.size();
  for (size_t off = 0; off < k; ++off) {
    bool ok = true;
    for (size_t j = 0; j < k && ok; ++j) ok = a[j] == b[(j + off) % k];
    if (ok) out.push_back(static_cast<int>(off));
  }
  return out;
}

namespace {

struct Glued {
  NGraph graph;
  std::vector<int> inner_edge_map;  // inner edge id -> result edge id
};

Glued glue(const NGraph& outer, const NGraph& inner, int offset) {
  if (outer.surface != Surface::Annulus || outer.boundary.size() != 2) throw BoundaryMismatch("outer piece is not an annulus");
  if (inner.boundary.empty()) throw BoundaryMismatch("inner piece has no boundary");
  const auto& in_marks = outer.boundary[1];
  const auto& out_marks = inner.boundary[0];
  const int k = static_cast<int>(in_marks.size());
  if (k != static_cast<int>(out_marks.size())) {
    throw BoundaryMismatch("boundary lengths " + std::to_string(k) + " and " + std::to_string(out_marks.size()));
  }
  const int off = k == 0 ? 0 : ((offset % k) + k) % k;
  NGraph g;
  g.N = std::max(outer.N, inner.N);
  const int vo = static_cast<int>(outer.vertices.size());
  const int eo = static_cast<int>(outer.edges.size());
  g.vertices = outer.vertices;
  g.edges = outer.edges;
  for (auto v : inner.vertices) {
    for (auto& d : v.darts) d += 2 * eo;
    g.vertices.push_back(v);
  }
  for (auto e : inner.edges) {
    e.ends[0] += vo;
    e.ends[1] += vo;
    g.edges.push_back(e);
  }
  std::vector<int> alias(g.edges.size());
  std::iota(alias.begin(), alias.end(), 0);
  std::vector<char> dead_v(g.vertices.size(), 0), dead_e(g.edges.size(), 0);
  for (int j = 0; j < k; ++j) {
    const int A = in_marks[j];
    const int B = out_marks[(j + off) % k] + vo;
    if (g.vertices[A].color != g.vertices[B].color) {
      throw BoundaryMismatch("color " + std::to_string(g.vertices[A].color) + " meets " +
                             std::to_string(g.vertices[B].color) + " at inner mark " + std::to_string(j));
    }
    const int dA = g.vertices[A].darts[0];
    const int dB = g.vertices[B].darts[0];
    if (dA / 2 == dB / 2) throw BoundaryMismatch("gluing closes a strand");
    const int fB = NGraph::twin(dB);
    const int Y = g.dart_vertex(fB);
    // Edge of dA takes over the far end of the edge of dB.
    g.edges[dA / 2].ends[dA % 2] = Y;
    for (auto& d : g.vertices[Y].darts) {
      if (d == fB) d = dA;
    }
    dead_e[dB / 2] = 1;
    alias[dB / 2] = dA / 2;
    dead_v[A] = dead_v[B] = 1;
  }
  // Compact.
  std::vector<int> vmap(g.vertices.size(), -1), emap(g.edges.size(), -1);
  NGraph c;
  c.N = g.N;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (!dead_v[v]) vmap[v] = static_cast<int>(c.vertices.size()), c.vertices.push_back(g.vertices[v]);
  }
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (!dead_e[e]) {
      emap[e] = static_cast<int>(c.edges.size());
      NEdge ne = g.edges[e];
      ne.ends[0] = vmap[ne.ends[0]];
      ne.ends[1] = vmap[ne.ends[1]];
      c.edges.push_back(ne);
    }
  }
  for (auto& v : c.vertices) {
    for (auto& d : v.darts) d = 2 * emap[d / 2] + d % 2;
  }
  auto remap_marks = [&](const std::vector<int>& ms, int shift) {
    std::vector<int> r;
    for (int m : ms) r.push_back(vmap[m + shift]);
    return r;
  };
  c.boundary.push_back(remap_marks(outer.boundary[0], 0));
  if (inner.surface == Surface::Annulus && inner.boundary.size() == 2) {
    c.surface = Surface::Annulus;
    c.boundary.push_back(remap_marks(inner.boundary[1], vo));
  } else {
    c.surface = Surface::Disk;
  }
  Glued out;
  out.graph = std::move(c);
  for (size_t e = 0; e < inner.edges.size(); ++e) {
    int x = static_cast<int>(e) + eo;
    while (alias[x] != x) x = alias[x];
    out.inner_edge_map.push_back(emap[x]);
  }
  return out;
}

}  // namespace

NGraph concatenate(const NGraph& outer, const NGraph& inner, int offset) { return glue(outer, inner, offset).graph; }

NGraphWithCycles concatenate(const AnnularPadding& p, const NGraphWithCycles& g, int offset) {
  Glued gl = glue(p.graph, g.graph, offset);
  NGraphWithCycles out;
  out.graph = std::move(gl.graph);
  out.cycles = g.cycles;
  for (auto& cy : out.cycles) {
    for (auto& e : cy.edges) e = gl.inner_edge_map[e];
  }
  return out;
}

namespace {

bool same_label(const NVertex& a, const NVertex& b) {
  return a.kind == b.kind && a.color == b.color && a.color2 == b.color2 && a.darts.size() == b.darts.size();
}

// Extends the dart correspondence from (da, db); returns false on conflict.
bool extend_iso(const NGraph& a, const NGraph& b, int da, int db, std::vector<int>& dmap, std::vector<int>& vmap,
                std::vector<int>& vinv) {
  std::vector<std::pair<int, int>> stack{{da, db}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (dmap[x] >= 0) {
      if (dmap[x] != y) return false;
      continue;
    }
    if (a.edges[x / 2].color != b.edges[y / 2].color) return false;
    const int vx = a.dart_vertex(x), vy = b.dart_vertex(y);
    if (vmap[vx] < 0) {
      if (vinv[vy] >= 0 || !same_label(a.vertices[vx], b.vertices[vy])) return false;
      vmap[vx] = vy;
      vinv[vy] = vx;
    } else if (vmap[vx] != vy) {
      return false;
    }
    dmap[x] = y;
    stack.push_back({NGraph::twin(x), NGraph::twin(y)});
    stack.push_back({a.next_ccw(x), b.next_ccw(y)});
  }
  return true;
}

}  // namespace

bool map_isomorphic(const NGraph& a, const NGraph& b) {
  if (a.N != b.N || a.surface != b.surface || a.vertices.size() != b.vertices.size() ||
      a.edges.size() != b.edges.size() || a.boundary.size() != b.boundary.size()) {
    return false;
  }
  for (size_t c = 0; c < a.boundary.size(); ++c) {
    if (a.boundary[c].size() != b.boundary[c].size()) return false;
  }
  if (a.edges.empty()) return true;
  const int nb = static_cast<int>(a.boundary.size());
  if (nb == 0 || a.boundary[0].empty()) {
    for (int cand = 0; cand < 2 * static_cast<int>(b.edges.size()); ++cand) {
      std::vector<int> dmap(2 * a.edges.size(), -1), vmap(a.vertices.size(), -1), vinv(b.vertices.size(), -1);
      if (extend_iso(a, b, 0, cand, dmap, vmap, vinv) && std::count(dmap.begin(), dmap.end(), -1) == 0) return true;
    }
    return false;
  }
  // A rotation of each boundary component fixes the image of every mark, and
  // every component of the graph reaches the boundary through some mark.
  auto seed = [&](int c, int rot, std::vector<int>& dmap, std::vector<int>& vmap, std::vector<int>& vinv) {
    const auto& ma = a.boundary[c];
    const auto& mb = b.boundary[c];
    for (size_t i = 0; i < ma.size(); ++i) {
      const int m = mb[(i + rot) % mb.size()];
      if (!extend_iso(a, b, a.vertices[ma[i]].darts[0], b.vertices[m].darts[0], dmap, vmap, vinv)) return false;
    }
    return true;
  };
  const int k0 = static_cast<int>(a.boundary[0].size());
  const int k1 = nb > 1 ? static_cast<int>(a.boundary[1].size()) : 0;
  for (int r0 = 0; r0 < k0; ++r0) {
    for (int r1 = 0; r1 < std::max(k1, 1); ++r1) {
      std::vector<int> dmap(2 * a.edges.size(), -1), vmap(a.vertices.size(), -1), vinv(b.vertices.size(), -1);
      if (!seed(0, r0, dmap, vmap, vinv)) break;
      if (k1 > 0 && !seed(1, r1, dmap, vmap, vinv)) continue;
      if (std::count(dmap.begin(), dmap.end(), -1) == 0) return true;
    }
  }
  return false;
}

}  // namespace cw
