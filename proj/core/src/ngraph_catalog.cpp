#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <regex>

#include "clusterweave/errors.hpp"
#include "clusterweave/ngraph.hpp"
#include "clusterweave/seed.hpp"
#include "clusterweave/sketch.hpp"

namespace cw {

namespace {

using sketch::Affine;
using sketch::Pt;
using sketch::Sketch;

constexpr int kBlue = 1;
constexpr int kRed = 2;
constexpr int kGreen = 3;

// One end of the affine D graph: a hexagonal point at the local origin with
// two red I-cycles hanging off it. `side` is the non-red color.
void draw_affine_d_end(Sketch& sk, int side) {
  sk.line(side, {{0, 3}, {0, -3}});
  sk.line(side, {{0, 0}, {-3, 0}});
  sk.line(kRed, {{0, 0}, {-1, 1}, {-1, 3}});
  sk.line(kRed, {{-1, 1}, {-2, 1}, {-3, 1}});
  sk.line(kRed, {{-2, 1}, {-2, 3}});
  sk.line(kRed, {{0, 0}, {-1, -1}, {-3, -1}});
  sk.line(kRed, {{-1, -1}, {-1, -2}, {-1, -3}});
  sk.line(kRed, {{-1, -2}, {-3, -2}});
  sk.line(kRed, {{0, 0}, {0.5, 0}});
  sk.vertex(VertexKind::Hexagonal, std::min(side, kRed), {0, 0});
  for (Pt p : {Pt{-1, 1}, Pt{-2, 1}, Pt{-1, -1}, Pt{-1, -2}}) sk.vertex(VertexKind::Trivalent, kRed, p);
}

}  // namespace

NGraphWithCycles build_affine_d(int n) {
  if (n < 4) throw InvalidInput("affine D needs n >= 4");
  const int m = n - 4;  // trivalent vertices on the chain between the two ends
  const double Lx = -(m + 1) / 2.0, Rx = -Lx;
  Sketch sk(4, {Lx - 3, -3, Rx + 3, 3}, {0, 0});
  const Affine left = Affine::shift(Lx, 0);
  Affine right = Affine::shift(Rx, 0).compose(Affine::rotate(180));
  if (m % 2 == 1) right = right.compose(Affine::scale(1, -1));
  sk.set_transform(left);
  draw_affine_d_end(sk, kGreen);
  sk.line(kBlue, {{-1.75, 3}, {-1.5, 2.5}, {-1.25, 3}}, true);
  sk.set_transform(right);
  draw_affine_d_end(sk, kBlue);
  sk.set_transform({});
  std::vector<double> xs{Lx + 0.5};
  for (int i = 0; i < m; ++i) {
    const double x = Lx + 1 + i;
    sk.vertex(VertexKind::Trivalent, kRed, {x, 0});
    sk.line(kRed, {{x, 0}, {x, i % 2 == 0 ? -3.0 : 3.0}});
    xs.push_back(x);
  }
  xs.push_back(Rx - 0.5);
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i + 1] > xs[i]) sk.line(kRed, {{xs[i], 0}, {xs[i + 1], 0}});
  }
  const auto res = sk.build();

  auto at = [&](const Affine& t, Pt p) { return res.edge_near(t(p)); };
  const int l_t1 = at(left, {-0.5, 0.5}), l_t3 = at(left, {-0.5, -0.5});
  const int r_t1 = at(right, {-0.5, 0.5}), r_t3 = at(right, {-0.5, -0.5});
  const int l_out = res.edge_near({Lx + 0.25, 0}), r_out = res.edge_near({Rx - 0.25, 0});
  NGraphWithCycles out;
  out.graph = res.graph;
  if (m == 0) {
    out.cycles.push_back({CycleKind::Tree, {l_t1, l_t3, l_out, r_t1, r_t3}});
  } else {
    out.cycles.push_back({CycleKind::YUpper, {l_t1, l_t3, l_out}});
  }
  out.cycles.push_back({CycleKind::I, {at(left, {-1.5, 1})}});
  out.cycles.push_back({CycleKind::I, {at(left, {-1, -1.5})}});
  for (int i = 0; i + 1 < m; ++i) out.cycles.push_back({CycleKind::I, {res.edge_near({Lx + 1.5 + i, 0})}});
  if (m > 0) out.cycles.push_back({CycleKind::YLower, {r_t1, r_t3, r_out}});
  out.cycles.push_back({CycleKind::I, {at(right, {-1.5, 1})}});
  out.cycles.push_back({CycleKind::I, {at(right, {-1, -1.5})}});
  return out;
}

namespace {

struct ArmBuild {
  std::vector<int> marks;   // counterclockwise, after the red ray
  std::vector<int> chain;   // edges v_i v_{i+1}
  int first = -1;           // edge from the center to v1
};

}  // namespace

NGraphWithCycles build_tripod(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw InvalidInput("tripod arms must be positive");
  NGraph g;
  g.N = 3;
  g.surface = Surface::Disk;
  g.boundary.assign(1, {});
  const int O = g.add_vertex(VertexKind::Hexagonal, kBlue);
  std::vector<int> center_ports;
  auto ray = [&]() {
    const int m = g.add_vertex(VertexKind::Mark, kRed);
    const int e = g.add_edge(kRed, O, m);
    g.vertices[m].darts = {2 * e + 1};
    center_ports.push_back(2 * e);
    return m;
  };
  auto arm = [&](int len) {
    ArmBuild ab;
    std::vector<int> v(len);
    for (int i = 0; i < len; ++i) v[i] = g.add_vertex(VertexKind::Trivalent, kBlue);
    ab.first = g.add_edge(kBlue, O, v[0]);
    center_ports.push_back(2 * ab.first);
    std::vector<int> prev(len), next(len, -1), leg(len, -1), leg_hi(len, -1);
    prev[0] = 2 * ab.first + 1;
    for (int i = 0; i + 1 < len; ++i) {
      const int e = g.add_edge(kBlue, v[i], v[i + 1]);
      ab.chain.push_back(e);
      next[i] = 2 * e;
      prev[i + 1] = 2 * e + 1;
    }
    auto add_leg = [&](int vi) {
      const int m = g.add_vertex(VertexKind::Mark, kBlue);
      const int e = g.add_edge(kBlue, vi, m);
      g.vertices[m].darts = {2 * e + 1};
      return std::make_pair(2 * e, m);
    };
    std::vector<int> leg_mark(len, -1);
    int low_mark = -1, high_mark = -1;
    for (int i = 0; i < len; ++i) {
      const int idx = i + 1;  // one-based position along the arm
      if (i + 1 < len) {
        auto [d, mk] = add_leg(v[i]);
        leg[i] = d;
        leg_mark[i] = mk;
        g.vertices[v[i]].darts = idx % 2 == 1 ? std::vector<int>{next[i], leg[i], prev[i]}
                                              : std::vector<int>{leg[i], next[i], prev[i]};
      } else {
        auto [dl, ml] = add_leg(v[i]);
        auto [dh, mh] = add_leg(v[i]);
        low_mark = ml;
        high_mark = mh;
        g.vertices[v[i]].darts = {dl, dh, prev[i]};
      }
    }
    for (int i = 1; i + 1 < len; i += 2) ab.marks.push_back(leg_mark[i]);
    ab.marks.push_back(low_mark);
    ab.marks.push_back(high_mark);
    for (int i = ((len - 2) / 2) * 2; i >= 0; i -= 2) {
      if (i + 1 < len) ab.marks.push_back(leg_mark[i]);
    }
    return ab;
  };
  std::vector<ArmBuild> arms;
  for (int len : {a, b, c}) {
    const int r = ray();
    g.boundary[0].push_back(r);
    arms.push_back(arm(len));
    for (int mk : arms.back().marks) g.boundary[0].push_back(mk);
  }
  g.vertices[O].darts = center_ports;
  NGraphWithCycles out;
  out.graph = std::move(g);
  out.cycles.push_back({CycleKind::YUpper, {arms[0].first, arms[1].first, arms[2].first}});
  for (const auto& ab : arms) {
    for (int e : ab.chain) out.cycles.push_back({CycleKind::I, {e}});
  }
  return out;
}

NGraphWithCycles build_initial(const DynkinType& type) {
  if (type.twist == 1 && type.family == 'D' && type.rank >= 4) return build_affine_d(type.rank);
  if (type.twist == 1 && type.family == 'E') {
    if (type.rank == 6) return build_tripod(3, 3, 3);
    if (type.rank == 7) return build_tripod(2, 4, 4);
    if (type.rank == 8) return build_tripod(2, 3, 6);
  }
  throw Unsupported("no catalog N-graph for " + type.name());
}


namespace {

// Marks carry a drawing angle (degrees) that fixes the boundary order.
struct AngledGraph {
  NGraph graph;
  std::vector<double> angle;  // per vertex; marks only
  std::vector<char> inner;    // per vertex; marks only
};

int angled_mark(AngledGraph& ag, int color, int at, double angle, bool inner) {
  NGraph& g = ag.graph;
  const int m = g.add_vertex(VertexKind::Mark, color);
  const int e = g.add_edge(color, at, m);
  g.vertices[m].darts = {2 * e + 1};
  ag.angle.resize(g.vertices.size(), 0);
  ag.inner.resize(g.vertices.size(), 0);
  ag.angle[m] = angle;
  ag.inner[m] = inner ? 1 : 0;
  return 2 * e;
}

// Boundary lists read counterclockwise from angle 0.
NGraph sort_boundary(AngledGraph ag) {
  NGraph g = std::move(ag.graph);
  g.surface = Surface::Annulus;
  g.boundary.assign(2, {});
  std::vector<std::pair<double, int>> lists[2];
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.vertices[v].kind != VertexKind::Mark) continue;
    double a = std::fmod(ag.angle[v], 360.0);
    if (a < -1e-9) a += 360.0;
    if (a > 360.0 - 1e-9) a -= 360.0;
    lists[ag.inner[v] ? 1 : 0].push_back({a, static_cast<int>(v)});
  }
  for (int c = 0; c < 2; ++c) {
    std::sort(lists[c].begin(), lists[c].end());
    for (auto& [a, v] : lists[c]) g.boundary[c].push_back(v);
  }
  return g;
}

// Three chains of hexagonal points, one per sector of 120 degrees.
AngledGraph tripod_padding_drawing(int a, int b, int c) {
  AngledGraph ag;
  NGraph& g = ag.graph;
  g.N = 3;
  const int lens[3] = {a, b, c};
  std::vector<std::vector<int>> hex(3);
  for (int s = 0; s < 3; ++s) {
    for (int i = 0; i < lens[s]; ++i) hex[s].push_back(g.add_vertex(VertexKind::Hexagonal, kBlue));
  }
  ag.angle.resize(g.vertices.size(), 0);
  ag.inner.resize(g.vertices.size(), 0);
  // Port slots: B_outer, R_next, B_next, R_inner, B_prev, R_prev.
  std::vector<std::vector<std::array<int, 6>>> ports(3);
  for (int s = 0; s < 3; ++s) ports[s].resize(lens[s]);
  for (int s = 0; s < 3; ++s) {
    const int len = lens[s];
    const double base = 120.0 * s;
    for (int i = 0; i < len; ++i) {
      const int h = hex[s][i];
      auto& pt = ports[s][i];
      pt[0] = angled_mark(ag, kBlue, h, base + 20 + 80.0 * i / len, false);
      pt[3] = angled_mark(ag, kRed, h, base + 40 + 60.0 * i / len, true);
      if (i == 0) {
        pt[4] = angled_mark(ag, kBlue, h, base - 20, false);
        pt[5] = angled_mark(ag, kRed, h, base, false);
      }
      if (i + 1 == len) {
        pt[1] = angled_mark(ag, kRed, h, base + 140, true);
        pt[2] = angled_mark(ag, kBlue, h, base + 120, true);
      } else {
        const int r = g.add_edge(kRed, h, hex[s][i + 1]);
        const int bl = g.add_edge(kBlue, h, hex[s][i + 1]);
        pt[1] = 2 * r;
        pt[2] = 2 * bl;
        ports[s][i + 1][5] = 2 * r + 1;
        ports[s][i + 1][4] = 2 * bl + 1;
      }
    }
  }
  for (int s = 0; s < 3; ++s) {
    for (int i = 0; i < lens[s]; ++i) {
      const auto& pt = ports[s][i];
      g.vertices[hex[s][i]].darts.assign(pt.begin(), pt.end());
    }
  }
  return ag;
}

}  // namespace

AnnularPadding padding_tripod(int a, int b, int c, bool bar, bool inverse) {
  if (a < 1 || b < 1 || c < 1) throw InvalidInput("tripod arms must be positive");
  AnnularPadding p;
  const std::string args = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  p.label = std::string(bar ? "Cbar" : "C") + (inverse ? "inv" : "") + args;
  if (!inverse) {
    p.graph = sort_boundary(tripod_padding_drawing(a, b, c));
    if (bar) p.graph = color_swap(p.graph);
    return p;
  }
  // The inverse is the reflection across the ray at 60 degrees of the
  // color-swapped padding with the last two arms exchanged.
  AngledGraph ag = tripod_padding_drawing(a, c, b);
  for (auto& v : ag.graph.vertices) std::reverse(v.darts.begin(), v.darts.end());
  for (auto& x : ag.angle) x = 120.0 - x;
  p.graph = sort_boundary(std::move(ag));
  if (!bar) p.graph = color_swap(p.graph);
  return p;
}

namespace {

// Drawing of the affine D padding. Parallel strand counts on the top and
// bottom of the middle stretch are the only n-dependent data.
NGraph affine_d_padding_drawing(bool inverse, int top, int bottom) {
  Sketch sk(4, {-3, -3, 14, 3}, {5.5, 0});
  sk.set_hole({0.25, -1.75, 10.75, 1.75});
  sk.line(kBlue, {{1.0 / 3, 3}, {4.0 / 3, 2}, {1, 4.0 / 3}, {2.0 / 3, 2}, {-1.0 / 3, 3}}, true);
  auto shared = [&](int side) {
    sk.line(side, {{2, 3}, {2, -3}});
    sk.line(side, {{2, 2}, {0, 2}, {-2, 0}, {-3, 0}});
    sk.line(side, {{2, -2}, {0, -2}, {-2, 0}});
    sk.line(side, {{0, 2}, {0, -2}});
    sk.line(side, {{0, 0}, {2, 0}});
    sk.line(kRed, {{-3, 1}, {-2, 0}});
    sk.line(kRed, {{0, 2}, {1, 1.5}, {2, 2}});
    sk.line(kRed, {{1, 3}, {2, 2}});
    sk.line(kRed, {{1, 1.5}, {1, 0.5}, {2, 0}, {3, 0}});
    sk.line(kRed, {{1, 0.5}, {0, 0}, {0.5, -1}, {1.5, -1}, {2, 0}});
    sk.line(kRed, {{0, -2}, {0.5, -1}});
    sk.line(kRed, {{1.5, -1}, {2, -2}});
    sk.line(kRed, {{2, -2}, {1, -3}});
    sk.line(kRed, {{-3, -1}, {-2, 0}});
    sk.line(kRed, {{0, 2}, {-1, 3}});
    sk.line(kRed, {{0, -2}, {-1, -3}});
    for (Pt p : {Pt{-2, 0}, Pt{0, 2}, Pt{0, -2}, Pt{0, 0}, Pt{2, 2}, Pt{2, 0}, Pt{2, -2}}) {
      sk.vertex(VertexKind::Hexagonal, std::min(side, kRed), p);
    }
    for (Pt p : {Pt{1, 0.5}, Pt{1, 1.5}, Pt{0.5, -1}, Pt{1.5, -1}}) sk.vertex(VertexKind::Trivalent, kRed, p);
  };
  // Left end, drawn upside down.
  sk.set_transform(Affine::scale(1, -1));
  shared(kGreen);
  if (!inverse) {
    sk.curve(kRed, {-2, 0}, {0, 2}, 15, -105);
    sk.curve(kRed, {0, 0}, {0, -2}, -120, 120);
  } else {
    sk.curve(kRed, {-2, 0}, {0, -2}, -15, 105);
    sk.curve(kRed, {0, 0}, {0, 2}, 120, -120);
    if (bottom >= 0) sk.line(kRed, {{2, 2}, {3, 2}, {3, 3}}, true);
  }
  // Right end, turned by half a revolution.
  sk.set_transform(Affine::shift(11, 0).compose(Affine::rotate(180)));
  shared(kBlue);
  sk.vertex(VertexKind::Trivalent, kRed, {3, 0});
  if (!inverse) {
    sk.curve(kRed, {-2, 0}, {0, -2}, -15, 105);
    sk.curve(kRed, {0, 0}, {0, 2}, 120, -120);
  } else {
    sk.curve(kRed, {-2, 0}, {0, 2}, 15, -105);
    sk.curve(kRed, {0, 0}, {0, -2}, -120, 120);
    sk.line(kRed, {{2, -2}, {3, -2}}, false);
    if (bottom >= 0) sk.line(kRed, {{2, 2}, {3, 2}, {3, 0}}, true);
  }
  // Middle stretch between the two ends.
  sk.set_transform({});
  auto strands = [&](int count, double lo, double hi, double sign) {
    for (int k = 0; k < count; ++k) {
      const double x = lo + (hi - lo) * (k + 1) / (count + 1);
      sk.line(kRed, {{x, sign * 1}, {x, sign * 3}});
    }
  };
  // A count of -1 joins the two end hexagonal points directly.
  if (!inverse) {
    if (top >= 0) {
      sk.line(kRed, {{2, 2}, {4, 2}, {4, 3}}, true);
      sk.line(kRed, {{8, 1}, {8, 2}, {9, 2}}, true);
    } else {
      sk.line(kRed, {{2, 2}, {9, 2}});
    }
    if (bottom >= 0) {
      sk.line(kRed, {{2, -2}, {3, -2}, {3, -1}}, true);
      sk.line(kRed, {{8, -3}, {8, -2}, {9, -2}}, true);
    } else {
      sk.line(kRed, {{2, -2}, {9, -2}});
    }
    strands(top, 4, 8, 1);
    strands(bottom, 3, 8, -1);
  } else {
    if (top >= 0) {
      sk.line(kRed, {{2, 2}, {3, 2}, {3, 1}}, true);
      sk.line(kRed, {{8, 2}, {7, 2}, {7, 3}}, true);
    } else {
      sk.line(kRed, {{2, 2}, {8, 2}});
    }
    if (bottom < 0) sk.line(kRed, {{2, -2}, {9, -2}});
    strands(top, 3, 7, 1);
    strands(bottom, 3, 8, -1);
  }
  return sk.build().graph;
}

}  // namespace

AnnularPadding padding_affine_d(int n, bool inverse) {
  if (n < 4) throw InvalidInput("D~n padding needs n >= 4, got " + std::to_string(n));
  // The two families of parallel strands grow with n; a count of -1 means
  // the end hexagonal points are joined directly.
  const int k = (n - 3) / 2;
  const int l = (n - 4) / 2;
  return {std::string(inverse ? "Cinv" : "C") + "(D~" + std::to_string(n) + ")",
          affine_d_padding_drawing(inverse, l - 1, k - 1)};
}

NGraph affine_d_padding_for_fit(bool inverse, int top, int bottom) {
  return affine_d_padding_drawing(inverse, top, bottom);
}

AnnularPadding coxeter_padding(const std::string& label) {
  static const std::regex tripod(R"(^(C|Cbar|Cinv|Cbarinv)\((\d+),(\d+),(\d+)\)$)");
  static const std::regex affine(R"(^(C|Cinv)\(D~(\d+)\)$)");
  std::smatch m;
  try {
    if (std::regex_match(label, m, tripod)) {
      const std::string kind = m[1];
      return padding_tripod(std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4]), kind.rfind("Cbar", 0) == 0,
                            kind.size() >= 3 && kind.substr(kind.size() - 3) == "inv");
    }
    if (std::regex_match(label, m, affine)) return padding_affine_d(std::stoi(m[2]), m[1] == "Cinv");
  } catch (const InvalidInput& e) {
    throw UnknownLabel(label + ": " + e.what());
  } catch (const std::out_of_range&) {
    throw UnknownLabel(label);
  }
  throw UnknownLabel(label);
}

namespace {

NGraphWithCycles catalog_graph(const CatalogShape& shape) {
  if (shape.family == CatalogShape::Family::AffineD) return build_affine_d(shape.n);
  return build_tripod(shape.a, shape.b, shape.c);
}

std::string tripod_args(const CatalogShape& s) {
  return "(" + std::to_string(s.a) + "," + std::to_string(s.b) + "," + std::to_string(s.c) + ")";
}

// Offset used to glue a padding around a graph with the same boundary word.
// Tripod paddings are drawn so that their inner marks line up with the core
// marks; for the affine D paddings the smallest matching rotation is taken.
int padding_offset(const CatalogShape& shape, const NGraph& padding, const NGraph& inner) {
  if (shape.family == CatalogShape::Family::Tripod) return 0;
  const auto offs = gluing_offsets(padding, inner);
  if (offs.empty()) throw BoundaryMismatch("padding does not fit around the graph");
  return offs.front();
}

void materialize(CoxeterIterate& it) {
  NGraphWithCycles g = it.core;
  for (auto p = it.paddings.rbegin(); p != it.paddings.rend(); ++p) {
    const AnnularPadding pad = coxeter_padding(*p);
    g = concatenate(pad, g, padding_offset(it.shape, pad.graph, g.graph));
  }
  it.materialized = std::move(g);
}

}  // namespace

CoxeterIterate coxeter_start(const CatalogShape& shape) {
  CoxeterIterate it;
  it.shape = shape;
  it.core = catalog_graph(shape);
  it.materialized = it.core;
  return it;
}

CoxeterIterate legendrian_coxeter_mutation(const CoxeterIterate& it, int direction) {
  if (direction != 1 && direction != -1) throw InvalidInput("direction must be +1 or -1");
  bipartite_parts(intersection_quiver(it.core.graph, it.core.cycles));
  CoxeterIterate out = it;
  // The mutation acts on the core, so the new padding sits directly around it.
  if (it.shape.family == CatalogShape::Family::AffineD) {
    out.paddings.push_back(std::string(direction > 0 ? "C" : "Cinv") + "(D~" + std::to_string(it.shape.n) + ")");
  } else {
    // G -> C Gbar and Gbar -> Cbar G; the inverses use Cbarinv and Cinv.
    const bool bar = direction > 0 ? it.core_swapped : !it.core_swapped;
    out.paddings.push_back(std::string(bar ? "Cbar" : "C") + (direction > 0 ? "" : "inv") + tripod_args(it.shape));
    out.core_swapped = !it.core_swapped;
    out.core.graph = color_swap(it.core.graph);
  }
  materialize(out);
  return out;
}

CoxeterIterate legendrian_coxeter_mutation(const NGraph& g, const CycleSet& cycles, int direction) {
  bipartite_parts(intersection_quiver(g, cycles));
  const int marks = g.boundary.empty() ? 0 : static_cast<int>(g.boundary[0].size());
  std::vector<std::pair<CatalogShape, bool>> candidates;
  if (g.N == 4) {
    for (int n = 4; n <= marks; ++n) {
      CatalogShape s;
      s.n = n;
      candidates.push_back({s, false});
    }
  } else if (g.N == 3) {
    for (int a = 1; a <= marks; ++a) {
      for (int b = 1; a + b <= marks; ++b) {
        const int c = marks - 6 - a - b;
        if (c < 1) continue;
        CatalogShape s;
        s.family = CatalogShape::Family::Tripod;
        s.a = a, s.b = b, s.c = c;
        candidates.push_back({s, false});
        candidates.push_back({s, true});
      }
    }
  }
  for (const auto& [shape, swapped] : candidates) {
    NGraphWithCycles ref = catalog_graph(shape);
    if (swapped) ref.graph = color_swap(ref.graph);
    if (ref.graph.boundary[0].size() != g.boundary[0].size()) continue;
    if (!map_isomorphic(g, ref.graph)) continue;
    CoxeterIterate it;
    it.shape = shape;
    it.core_swapped = swapped;
    it.core = {g, cycles};
    it.materialized = it.core;
    return legendrian_coxeter_mutation(it, direction);
  }
  throw NotCatalogShape("graph is not a catalog initial graph or its color swap");
}

}  // namespace cw
