#include "clusterweave/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "clusterweave/errors.hpp"

namespace cw::sketch {

namespace {

constexpr double kEps = 1e-6;
constexpr double kChamfer = 0.1;
constexpr int kCurveSamples = 32;

Pt sub(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
Pt add(Pt a, Pt b) { return {a.x + b.x, a.y + b.y}; }
Pt mul(Pt a, double s) { return {a.x * s, a.y * s}; }
double cross(Pt a, Pt b) { return a.x * b.y - a.y * b.x; }
double dot(Pt a, Pt b) { return a.x * b.x + a.y * b.y; }
double norm(Pt a) { return std::hypot(a.x, a.y); }
bool near(Pt a, Pt b, double eps = kEps) { return norm(sub(a, b)) < eps; }

std::string fmt(Pt p) {
  std::ostringstream os;
  os << "(" << p.x << "," << p.y << ")";
  return os.str();
}

// Parameter of the projection of p on segment ab when p lies on it.
std::optional<double> on_segment(Pt p, Pt a, Pt b) {
  const Pt ab = sub(b, a);
  const double len2 = dot(ab, ab);
  if (len2 < 1e-18) return near(p, a) ? std::optional<double>(0.0) : std::nullopt;
  double t = dot(sub(p, a), ab) / len2;
  t = std::clamp(t, 0.0, 1.0);
  if (near(add(a, mul(ab, t)), p)) return t;
  return std::nullopt;
}

struct End {
  enum Type { Vertex, Inner, Free } type = Free;
  int v = -1;
};

struct Piece {
  int color = 0;
  std::vector<Pt> pts;
  End ends[2];
};

struct Cut {
  double s;  // segment index + fraction
  End end;
};

Pt point_at(const std::vector<Pt>& pts, double s) {
  const int i = std::min(static_cast<int>(std::floor(s)), static_cast<int>(pts.size()) - 2);
  const double t = s - i;
  return add(pts[i], mul(sub(pts[i + 1], pts[i]), t));
}

// Splits a piece at the given cut positions (interior or at its ends).
std::vector<Piece> split_piece(const Piece& p, std::vector<Cut> cuts) {
  const double smax = static_cast<double>(p.pts.size()) - 1;
  std::sort(cuts.begin(), cuts.end(), [](const Cut& a, const Cut& b) { return a.s < b.s; });
  End first = p.ends[0], last = p.ends[1];
  std::vector<Cut> inner;
  for (const auto& c : cuts) {
    if (c.s < 1e-9) first = c.end;
    else if (c.s > smax - 1e-9) last = c.end;
    else if (inner.empty() || c.s - inner.back().s > 1e-9) inner.push_back(c);
  }
  std::vector<Piece> out;
  double s0 = 0;
  End e0 = first;
  auto emit = [&](double s1, End e1) {
    Piece q;
    q.color = p.color;
    q.pts.push_back(point_at(p.pts, s0));
    for (int k = static_cast<int>(std::floor(s0)) + 1; k < s1 - 1e-12; ++k) q.pts.push_back(p.pts[k]);
    q.pts.push_back(point_at(p.pts, s1));
    q.ends[0] = e0;
    q.ends[1] = e1;
    out.push_back(q);
    s0 = s1;
    e0 = e1;
  };
  for (const auto& c : inner) emit(c.s, c.end);
  emit(smax, last);
  return out;
}

// Liang-Barsky clip of segment pq against a closed rectangle.
std::optional<std::pair<double, double>> clip(Pt p, Pt q, const Rect& r) {
  double t0 = 0, t1 = 1;
  const double dx = q.x - p.x, dy = q.y - p.y;
  const double pk[4] = {-dx, dx, -dy, dy};
  const double qk[4] = {p.x - r.xmin, r.xmax - p.x, p.y - r.ymin, r.ymax - p.y};
  for (int k = 0; k < 4; ++k) {
    if (std::abs(pk[k]) < 1e-15) {
      if (qk[k] < 0) return std::nullopt;
    } else {
      const double t = qk[k] / pk[k];
      if (pk[k] < 0) t0 = std::max(t0, t);
      else t1 = std::min(t1, t);
    }
    if (t0 > t1) return std::nullopt;
  }
  if (t1 - t0 < 1e-12) return std::nullopt;
  return std::make_pair(t0, t1);
}

}  // namespace

Affine Affine::compose(const Affine& in) const {
  Affine r;
  r.a = a * in.a + b * in.c;
  r.b = a * in.b + b * in.d;
  r.c = c * in.a + d * in.c;
  r.d = c * in.b + d * in.d;
  r.e = a * in.e + b * in.f + e;
  r.f = c * in.e + d * in.f + f;
  return r;
}

Affine Affine::shift(double dx, double dy) { return {1, 0, 0, 1, dx, dy}; }

Affine Affine::rotate(double degrees) {
  const double t = degrees * std::numbers::pi / 180.0;
  double co = std::cos(t), si = std::sin(t);
  if (std::abs(co) < 1e-15) co = 0;
  if (std::abs(si) < 1e-15) si = 0;
  return {co, -si, si, co, 0, 0};
}

Affine Affine::scale(double sx, double sy) { return {sx, 0, 0, sy, 0, 0}; }

Sketch::Sketch(int N, Rect outer, Pt center) : N_(N), outer_(outer), center_(center) {}

void Sketch::set_hole(Rect hole) {
  has_hole_ = true;
  hole_ = hole;
}

void Sketch::set_circles(double inner_radius, double outer_radius) {
  circles_ = true;
  r_in_ = inner_radius;
  r_out_ = outer_radius;
}

void Sketch::set_warp(std::function<Pt(Pt)> warp, int steps) {
  warp_ = std::move(warp);
  warp_steps_ = std::max(1, steps);
}

std::vector<Pt> Sketch::warped(const std::vector<Pt>& pts) const {
  if (!warp_) return pts;
  std::vector<Pt> out{warp_(pts.front())};
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    for (int k = 1; k <= warp_steps_; ++k) {
      out.push_back(warp_(add(pts[i], mul(sub(pts[i + 1], pts[i]), static_cast<double>(k) / warp_steps_))));
    }
  }
  return out;
}

void Sketch::line(int color, const std::vector<Pt>& local, bool rounded) {
  std::vector<Pt> pts;
  for (Pt p : local) pts.push_back(tf_(p));
  if (rounded && pts.size() > 2) {
    std::vector<Pt> r{pts.front()};
    for (size_t i = 1; i + 1 < pts.size(); ++i) {
      const Pt in = sub(pts[i], pts[i - 1]), out = sub(pts[i + 1], pts[i]);
      const double li = norm(in), lo = norm(out);
      const double c = std::min({kChamfer, 0.4 * li, 0.4 * lo});
      r.push_back(sub(pts[i], mul(in, c / li)));
      r.push_back(add(pts[i], mul(out, c / lo)));
    }
    r.push_back(pts.back());
    pts = r;
  }
  strokes_.push_back({color, warped(pts)});
}

void Sketch::curve(int color, Pt from, Pt to, double out, double in) {
  const double chord = norm(sub(to, from));
  const double d = 0.3915 * chord;
  const double ro = out * std::numbers::pi / 180.0, ri = in * std::numbers::pi / 180.0;
  const Pt c1 = add(from, {d * std::cos(ro), d * std::sin(ro)});
  const Pt c2 = add(to, {d * std::cos(ri), d * std::sin(ri)});
  std::vector<Pt> pts;
  for (int k = 0; k <= kCurveSamples; ++k) {
    const double t = static_cast<double>(k) / kCurveSamples, u = 1 - t;
    const Pt p = add(add(mul(from, u * u * u), mul(c1, 3 * u * u * t)), add(mul(c2, 3 * u * t * t), mul(to, t * t * t)));
    pts.push_back(tf_(p));
  }
  strokes_.push_back({color, warped(pts)});
}

void Sketch::vertex(VertexKind kind, int color, Pt p) {
  const Pt q = tf_(p);
  decls_.push_back({kind, color, warp_ ? warp_(q) : q});
}

int Sketch::Result::edge_near(Pt p) const {
  for (size_t e = 0; e < edge_paths.size(); ++e) {
    const auto& pts = edge_paths[e];
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      if (on_segment(p, pts[i], pts[i + 1])) return static_cast<int>(e);
    }
  }
  throw TranscriptionError("no edge through " + fmt(p));
}

Sketch::Result Sketch::build() const {
  // Vertex table: declared vertices outside the hole, then crossings.
  struct V {
    VertexKind kind;
    int color, color2;
    Pt p;
  };
  std::vector<V> verts;
  for (const auto& d : decls_) {
    if (has_hole_ && hole_.contains_strictly(d.p, kEps)) continue;
    verts.push_back({d.kind, d.color, 0, d.p});
  }

  // Clip at the hole.
  std::vector<Piece> pieces;
  for (const auto& s : strokes_) {
    Piece cur;
    cur.color = s.color;
    auto flush = [&](End::Type last) {
      if (cur.pts.size() >= 2) {
        cur.ends[1].type = last;
        pieces.push_back(cur);
      }
      cur = Piece{};
      cur.color = s.color;
    };
    for (size_t i = 0; i + 1 < s.pts.size(); ++i) {
      const Pt p = s.pts[i], q = s.pts[i + 1];
      const auto cl = has_hole_ ? clip(p, q, hole_) : std::nullopt;
      if (!cl) {
        if (cur.pts.empty()) cur.pts.push_back(p);
        cur.pts.push_back(q);
        continue;
      }
      const auto [t0, t1] = *cl;
      if (t0 > 1e-12) {
        if (cur.pts.empty()) cur.pts.push_back(p);
        cur.pts.push_back(add(p, mul(sub(q, p), t0)));
        flush(End::Inner);
      } else {
        flush(End::Inner);
      }
      if (t1 < 1 - 1e-12) {
        cur.ends[0].type = End::Inner;
        cur.pts.push_back(add(p, mul(sub(q, p), t1)));
        cur.pts.push_back(q);
      }
    }
    flush(End::Free);
  }

  // Split at declared vertices.
  {
    std::vector<Piece> next;
    for (const auto& p : pieces) {
      std::vector<Cut> cuts;
      for (size_t v = 0; v < verts.size(); ++v) {
        for (size_t i = 0; i + 1 < p.pts.size(); ++i) {
          if (auto t = on_segment(verts[v].p, p.pts[i], p.pts[i + 1])) {
            cuts.push_back({static_cast<double>(i) + *t, {End::Vertex, static_cast<int>(v)}});
          }
        }
      }
      for (auto& q : split_piece(p, cuts)) next.push_back(q);
    }
    pieces = std::move(next);
  }

  // Crossings between pieces.
  {
    struct Hit {
      Pt p;
      int a, b;
      double sa, sb;
    };
    std::vector<Hit> hits;
    for (size_t a = 0; a < pieces.size(); ++a) {
      for (size_t b = a + 1; b < pieces.size(); ++b) {
        const auto& A = pieces[a].pts;
        const auto& B = pieces[b].pts;
        for (size_t i = 0; i + 1 < A.size(); ++i) {
          for (size_t j = 0; j + 1 < B.size(); ++j) {
            const Pt r = sub(A[i + 1], A[i]), s = sub(B[j + 1], B[j]);
            const double den = cross(r, s);
            const Pt qp = sub(B[j], A[i]);
            if (std::abs(den) < 1e-14) {
              if (std::abs(cross(qp, r)) < 1e-12 && norm(r) > 0) {
                // Collinear: overlapping only if projections overlap beyond a point.
                const double t0 = dot(qp, r) / dot(r, r), t1 = dot(add(qp, s), r) / dot(r, r);
                const double lo = std::max(0.0, std::min(t0, t1)), hi = std::min(1.0, std::max(t0, t1));
                if (hi - lo > 1e-9) throw TranscriptionError("overlapping strokes near " + fmt(A[i]));
              }
              continue;
            }
            const double t = cross(qp, s) / den, u = cross(qp, r) / den;
            if (t < -1e-9 || t > 1 + 1e-9 || u < -1e-9 || u > 1 + 1e-9) continue;
            const Pt x = add(A[i], mul(r, t));
            const bool end_a = near(x, A.front()) || near(x, A.back());
            const bool end_b = near(x, B.front()) || near(x, B.back());
            if (end_a && end_b) continue;
            if (end_a || end_b) throw TranscriptionError("stroke ends on another stroke at " + fmt(x));
            hits.push_back({x, static_cast<int>(a), static_cast<int>(b), static_cast<double>(i) + std::clamp(t, 0.0, 1.0),
                            static_cast<double>(j) + std::clamp(u, 0.0, 1.0)});
          }
        }
      }
    }
    std::vector<std::vector<Cut>> cuts(pieces.size());
    std::vector<Hit> uniq;
    for (const auto& h : hits) {
      bool dup = false;
      for (const auto& u : uniq) {
        if (near(u.p, h.p)) {
          if (!((u.a == h.a && u.b == h.b))) throw TranscriptionError("three strokes meet at " + fmt(h.p));
          dup = true;
        }
      }
      if (!dup) uniq.push_back(h);
    }
    for (const auto& h : uniq) {
      const int ca = pieces[h.a].color, cb = pieces[h.b].color;
      if (std::abs(ca - cb) < 2) {
        throw TranscriptionError("colors " + std::to_string(ca) + " and " + std::to_string(cb) + " cross at " + fmt(h.p));
      }
      verts.push_back({VertexKind::Crossing, std::min(ca, cb), std::max(ca, cb), h.p});
      const End e{End::Vertex, static_cast<int>(verts.size()) - 1};
      cuts[h.a].push_back({h.sa, e});
      cuts[h.b].push_back({h.sb, e});
    }
    std::vector<Piece> next;
    for (size_t p = 0; p < pieces.size(); ++p) {
      for (auto& q : split_piece(pieces[p], cuts[p])) next.push_back(q);
    }
    pieces = std::move(next);
  }

  // Join loose ends that meet.
  for (bool merged = true; merged;) {
    merged = false;
    for (size_t a = 0; a < pieces.size() && !merged; ++a) {
      for (int ea = 0; ea < 2 && !merged; ++ea) {
        if (pieces[a].ends[ea].type != End::Free) continue;
        const Pt pa = ea == 0 ? pieces[a].pts.front() : pieces[a].pts.back();
        std::vector<std::pair<size_t, int>> partners;
        for (size_t b = 0; b < pieces.size(); ++b) {
          for (int eb = 0; eb < 2; ++eb) {
            if ((b == a && eb == ea) || pieces[b].ends[eb].type != End::Free) continue;
            const Pt pb = eb == 0 ? pieces[b].pts.front() : pieces[b].pts.back();
            if (near(pa, pb)) partners.push_back({b, eb});
          }
        }
        if (partners.empty()) continue;
        if (partners.size() > 1) throw TranscriptionError("several loose ends meet at " + fmt(pa));
        auto [b, eb] = partners[0];
        if (b == a) throw TranscriptionError("closed stroke at " + fmt(pa));
        if (pieces[a].color != pieces[b].color) throw TranscriptionError("colors change at " + fmt(pa));
        Piece A = pieces[a], B = pieces[b];
        if (ea == 0) {
          std::reverse(A.pts.begin(), A.pts.end());
          std::swap(A.ends[0], A.ends[1]);
        }
        if (eb == 1) {
          std::reverse(B.pts.begin(), B.pts.end());
          std::swap(B.ends[0], B.ends[1]);
        }
        A.pts.insert(A.pts.end(), B.pts.begin() + 1, B.pts.end());
        A.ends[1] = B.ends[1];
        pieces.erase(pieces.begin() + std::max(a, b));
        pieces.erase(pieces.begin() + std::min(a, b));
        pieces.push_back(A);
        merged = true;
      }
    }
  }

  // Assemble the rotation system.
  Result res;
  NGraph& g = res.graph;
  g.N = N_;
  const bool annulus = has_hole_ || circles_;
  g.surface = annulus ? Surface::Annulus : Surface::Disk;
  g.boundary.assign(annulus ? 2 : 1, {});
  for (const auto& v : verts) g.add_vertex(v.kind, v.color, v.color2);
  std::vector<Pt> vpos;
  for (const auto& v : verts) vpos.push_back(v.p);
  auto radius = [&](Pt p) { return norm(sub(p, center_)); };
  auto on_outer = [&](Pt p) {
    if (circles_) return std::abs(radius(p) - r_out_) < kEps;
    const bool x_side = (std::abs(p.x - outer_.xmin) < kEps || std::abs(p.x - outer_.xmax) < kEps) &&
                        p.y > outer_.ymin - kEps && p.y < outer_.ymax + kEps;
    const bool y_side = (std::abs(p.y - outer_.ymin) < kEps || std::abs(p.y - outer_.ymax) < kEps) &&
                        p.x > outer_.xmin - kEps && p.x < outer_.xmax + kEps;
    return x_side || y_side;
  };
  std::vector<std::pair<double, int>> outer_marks, inner_marks;
  std::vector<std::vector<std::pair<double, int>>> rot(verts.size());
  for (const auto& p : pieces) {
    int ids[2];
    for (int s = 0; s < 2; ++s) {
      const Pt at = s == 0 ? p.pts.front() : p.pts.back();
      if (p.ends[s].type == End::Vertex) {
        ids[s] = p.ends[s].v;
        continue;
      }
      End::Type type = p.ends[s].type;
      if (type == End::Free && circles_ && std::abs(radius(at) - r_in_) < kEps) type = End::Inner;
      if (type == End::Free && !on_outer(at)) throw TranscriptionError("loose end at " + fmt(at));
      ids[s] = g.add_vertex(VertexKind::Mark, p.color);
      vpos.push_back(at);
      rot.emplace_back();
      const double ang = std::atan2(at.y - center_.y, at.x - center_.x);
      (type == End::Inner ? inner_marks : outer_marks).push_back({ang, ids[s]});
    }
    const int e = g.add_edge(p.color, ids[0], ids[1]);
    res.edge_paths.push_back(p.pts);
    for (int s = 0; s < 2; ++s) {
      const Pt base = vpos[ids[s]];
      Pt dir{0, 0};
      const int n = static_cast<int>(p.pts.size());
      for (int k = 1; k < n; ++k) {
        const Pt q = s == 0 ? p.pts[k] : p.pts[n - 1 - k];
        if (!near(q, base, 1e-9)) {
          dir = sub(q, base);
          break;
        }
      }
      rot[ids[s]].push_back({std::atan2(dir.y, dir.x), 2 * e + s});
    }
  }
  for (size_t v = 0; v < rot.size(); ++v) {
    if (rot[v].empty()) throw TranscriptionError("isolated vertex at " + fmt(vpos[v]));
    std::sort(rot[v].begin(), rot[v].end());
    for (auto& [ang, d] : rot[v]) g.vertices[v].darts.push_back(d);
  }
  std::sort(outer_marks.begin(), outer_marks.end());
  std::sort(inner_marks.begin(), inner_marks.end());
  for (auto& [a, m] : outer_marks) g.boundary[0].push_back(m);
  if (annulus) {
    for (auto& [a, m] : inner_marks) g.boundary[1].push_back(m);
  } else if (!inner_marks.empty()) {
    throw TranscriptionError("inner marks without a hole");
  }
  return res;
}

}  // namespace cw::sketch
