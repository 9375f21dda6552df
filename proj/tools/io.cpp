#include "io.hpp"

#include <cstdlib>
#include <sstream>

#include "clusterweave/errors.hpp"

namespace cw::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

const char* kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Trivalent: return "Trivalent";
    case VertexKind::Hexagonal: return "Hexagonal";
    case VertexKind::Crossing: return "Crossing";
    case VertexKind::Mark: return "Mark";
  }
  return "?";
}

VertexKind parse_kind(const std::string& s) {
  if (s == "Trivalent") return VertexKind::Trivalent;
  if (s == "Hexagonal") return VertexKind::Hexagonal;
  if (s == "Crossing") return VertexKind::Crossing;
  if (s == "Mark") return VertexKind::Mark;
  throw InvalidInput("unknown vertex kind '" + s + "'");
}

CycleKind parse_cycle_kind(const std::string& s) {
  for (CycleKind k : {CycleKind::I, CycleKind::LongI, CycleKind::YUpper, CycleKind::YLower, CycleKind::Tree}) {
    if (cycle_kind_name(k) == s) return k;
  }
  throw InvalidInput("unknown cycle kind '" + s + "'");
}

// Signed 1-based edge reference of a dart and back.
int signed_dart(int d) { return d % 2 == 0 ? d / 2 + 1 : -(d / 2 + 1); }
int dart_from_signed(int s, int edge_count) {
  const int e = std::abs(s) - 1;
  if (s == 0 || e >= edge_count) throw InvalidInput("rotation entry " + std::to_string(s) + " out of range");
  return s > 0 ? 2 * e : 2 * e + 1;
}

}  // namespace

json to_json(const ExchangeMatrix& b) {
  return {{"rows", b.rows()}, {"cols", b.cols()}, {"entries", b.to_rows()}};
}

ExchangeMatrix matrix_from_json(const json& j) {
  if (j.is_array()) return ExchangeMatrix::from_rows(j.get<std::vector<std::vector<int>>>());
  const auto entries = field(j, "entries").get<std::vector<std::vector<int>>>();
  const int rows = field(j, "rows").get<int>(), cols = field(j, "cols").get<int>();
  if (rows == 0 || cols == 0) return ExchangeMatrix(rows, cols);
  ExchangeMatrix b = ExchangeMatrix::from_rows(entries);
  if (b.rows() != rows || b.cols() != cols) throw InvalidInput("matrix shape differs from rows/cols");
  return b;
}

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back({{"exp", t.exp}, {"coef", t.coef}});
  return {{"nvars", p.nvars()}, {"terms", terms}, {"str", p.str()}};
}

LaurentPoly laurent_from_json(const json& j, int default_nvars) {
  const int nvars = j.contains("nvars") ? j.at("nvars").get<int>() : default_nvars;
  std::vector<Term> terms;
  for (const auto& t : field(j, "terms")) {
    Term term{field(t, "exp").get<Exponent>(), field(t, "coef").get<int64_t>()};
    if (static_cast<int>(term.exp.size()) != nvars) throw InvalidInput("exponent length differs from nvars");
    terms.push_back(std::move(term));
  }
  return LaurentPoly::from_terms(nvars, std::move(terms));
}

json to_json(const Seed& s) {
  json vars = json::array();
  for (const auto& v : s.variables) vars.push_back(to_json(v));
  return {{"n", s.n()}, {"m", s.m()}, {"matrix", to_json(s.matrix)}, {"variables", vars}};
}

Seed seed_from_json(const json& j) {
  Seed s = Seed::initial(matrix_from_json(field(j, "matrix")));
  if (j.contains("variables")) {
    std::vector<LaurentPoly> vars;
    for (const auto& v : j.at("variables")) vars.push_back(laurent_from_json(v, s.m()));
    if (static_cast<int>(vars.size()) != s.m()) throw InvalidInput("seed needs one variable per matrix row");
    s.variables = std::move(vars);
  }
  return s;
}

json to_json(const BraidWord& w) {
  return {{"strands", w.strands}, {"letters", w.letters}, {"str", w.str()}};
}

BraidWord braid_from_json(const json& j) {
  BraidWord w{field(j, "strands").get<int>(), field(j, "letters").get<std::vector<int>>()};
  for (int g : w.letters) {
    if (g < 1 || g >= w.strands) throw GeneratorOutOfRange("generator " + std::to_string(g));
  }
  return w;
}

json to_json(const NGraph& g) {
  json vertices = json::array(), edges = json::array(), rotation = json::object(), boundary = json::array();
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& x = g.vertices[v];
    json jv = {{"id", v + 1}, {"kind", kind_name(x.kind)}, {"color", x.color}};
    if (x.kind == VertexKind::Crossing) jv["color2"] = x.color2;
    vertices.push_back(jv);
    json ports = json::array();
    for (int d : x.darts) ports.push_back(signed_dart(d));
    rotation[std::to_string(v + 1)] = ports;
  }
  for (size_t e = 0; e < g.edges.size(); ++e) {
    edges.push_back({{"id", e + 1}, {"color", g.edges[e].color}, {"ends", {g.edges[e].ends[0] + 1, g.edges[e].ends[1] + 1}}});
  }
  for (const auto& comp : g.boundary) {
    json marks = json::array();
    for (int m : comp) marks.push_back({{"mark", m + 1}, {"color", g.vertices[m].color}});
    boundary.push_back(marks);
  }
  return {{"N", g.N},
          {"surface", g.surface == Surface::Disk ? "Disk" : "Annulus"},
          {"vertices", vertices},
          {"edges", edges},
          {"rotation", rotation},
          {"boundary", boundary}};
}

NGraph ngraph_from_json(const json& j) {
  NGraph g;
  g.N = field(j, "N").get<int>();
  const std::string surface = field(j, "surface").get<std::string>();
  if (surface != "Disk" && surface != "Annulus") throw InvalidInput("surface must be Disk or Annulus");
  g.surface = surface == "Disk" ? Surface::Disk : Surface::Annulus;
  const auto& vs = field(j, "vertices");
  for (size_t v = 0; v < vs.size(); ++v) {
    if (field(vs[v], "id").get<size_t>() != v + 1) throw InvalidInput("vertex ids must be 1..V in order");
    g.add_vertex(parse_kind(field(vs[v], "kind").get<std::string>()), field(vs[v], "color").get<int>(),
                 vs[v].value("color2", 0));
  }
  const auto& es = field(j, "edges");
  const int nv = static_cast<int>(g.vertices.size());
  for (size_t e = 0; e < es.size(); ++e) {
    if (field(es[e], "id").get<size_t>() != e + 1) throw InvalidInput("edge ids must be 1..E in order");
    const auto ends = field(es[e], "ends").get<std::vector<int>>();
    if (ends.size() != 2 || ends[0] < 1 || ends[1] < 1 || ends[0] > nv || ends[1] > nv) {
      throw InvalidInput("edge " + std::to_string(e + 1) + " has bad ends");
    }
    g.add_edge(field(es[e], "color").get<int>(), ends[0] - 1, ends[1] - 1);
  }
  const int ne = static_cast<int>(g.edges.size());
  for (const auto& [key, ports] : field(j, "rotation").items()) {
    const int v = std::atoi(key.c_str()) - 1;
    if (v < 0 || v >= nv) throw InvalidInput("rotation key '" + key + "' out of range");
    for (int s : ports.get<std::vector<int>>()) g.vertices[v].darts.push_back(dart_from_signed(s, ne));
  }
  for (const auto& comp : field(j, "boundary")) {
    std::vector<int> marks;
    for (const auto& m : comp) {
      const int id = field(m, "mark").get<int>() - 1;
      if (id < 0 || id >= nv) throw InvalidInput("boundary mark out of range");
      marks.push_back(id);
    }
    g.boundary.push_back(marks);
  }
  return g;
}

json to_json(const NGraph& g, const CycleSet& cycles) {
  json out = to_json(g);
  json cs = json::array();
  for (size_t i = 0; i < cycles.size(); ++i) {
    json edges = json::array();
    for (int e : cycles[i].edges) edges.push_back(e + 1);
    cs.push_back({{"id", i + 1}, {"kind", cycle_kind_name(cycles[i].kind)}, {"edges", edges}});
  }
  out["cycles"] = cs;
  return out;
}

CycleSet cycles_from_json(const json& j) {
  CycleSet out;
  if (!j.contains("cycles")) return out;
  for (const auto& c : j.at("cycles")) {
    Cycle cy;
    cy.kind = parse_cycle_kind(field(c, "kind").get<std::string>());
    for (int e : field(c, "edges").get<std::vector<int>>()) cy.edges.push_back(e - 1);
    out.push_back(cy);
  }
  return out;
}

json to_json(const ExchangeGraphSlice& s) {
  json nodes = json::array(), edges = json::array(), frontier = json::array();
  for (size_t i = 0; i < s.nodes.size(); ++i) {
    json perm = json::array();
    for (int p : s.nodes[i].perm) perm.push_back(p + 1);
    nodes.push_back({{"id", i + 1},
                     {"depth", s.depth[i]},
                     {"hash", s.nodes[i].hash_hex()},
                     {"perm", perm},
                     {"seed", to_json(s.nodes[i].rep)}});
  }
  for (const auto& e : s.edges) edges.push_back({{"a", e.a + 1}, {"b", e.b + 1}, {"label", e.label + 1}});
  for (int f : s.frontier) frontier.push_back(f + 1);
  return {{"nodes", nodes}, {"edges", edges}, {"frontier", frontier}, {"complete", s.complete}};
}

ExchangeGraphSlice slice_from_json(const json& j) {
  ExchangeGraphSlice s;
  for (const auto& n : field(j, "nodes")) {
    SeedClass c;
    c.rep = seed_from_json(field(n, "seed"));
    c.hash = std::stoull(field(n, "hash").get<std::string>(), nullptr, 16);
    for (int p : field(n, "perm").get<std::vector<int>>()) c.perm.push_back(p - 1);
    s.nodes.push_back(std::move(c));
    s.depth.push_back(field(n, "depth").get<int>());
  }
  for (const auto& e : field(j, "edges")) {
    s.edges.push_back({field(e, "a").get<int>() - 1, field(e, "b").get<int>() - 1, field(e, "label").get<int>() - 1});
  }
  for (int f : field(j, "frontier").get<std::vector<int>>()) s.frontier.push_back(f - 1);
  s.complete = field(j, "complete").get<bool>();
  return s;
}

std::string quiver_dot(const ExchangeMatrix& b) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (int i = 0; i < b.rows(); ++i) {
    os << "  " << i + 1 << (i < b.cols() ? ";\n" : " [shape=box];\n");
  }
  // Arc i -> j for every positive entry; frozen rows only meet mutable columns.
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      const int v = b.at(i, j);
      if (i < b.cols() ? v <= 0 : v == 0) continue;
      const int from = v > 0 ? i : j, to = v > 0 ? j : i;
      os << "  " << from + 1 << " -> " << to + 1;
      if (std::abs(v) > 1) os << " [label=\"" << std::abs(v) << "\"]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string slice_dot(const ExchangeGraphSlice& s) {
  std::ostringstream os;
  os << "graph exchange {\n";
  for (size_t i = 0; i < s.nodes.size(); ++i) {
    os << "  " << i + 1 << " [label=\"" << s.nodes[i].hash_hex().substr(0, 6) << "\"];\n";
  }
  for (const auto& e : s.edges) os << "  " << e.a + 1 << " -- " << e.b + 1 << " [label=\"" << e.label + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string ngraph_dot(const NGraph& g) {
  static const char* palette[] = {"black", "blue", "red", "darkgreen", "orange", "purple"};
  auto color = [](int c) { return palette[c >= 0 && c < 6 ? c : 0]; };
  std::ostringstream os;
  os << "graph ngraph {\n";
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& x = g.vertices[v];
    const char* shape = x.kind == VertexKind::Mark ? "point" : x.kind == VertexKind::Hexagonal ? "hexagon"
                        : x.kind == VertexKind::Crossing ? "diamond" : "circle";
    os << "  " << v + 1 << " [shape=" << shape << ", label=\"\"];\n";
  }
  for (size_t e = 0; e < g.edges.size(); ++e) {
    os << "  " << g.edges[e].ends[0] + 1 << " -- " << g.edges[e].ends[1] + 1 << " [color=" << color(g.edges[e].color)
       << ", label=\"" << e + 1 << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cw::io
