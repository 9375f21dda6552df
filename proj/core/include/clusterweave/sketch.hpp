#pragma once

// Planar sketch builder: turns strokes drawn in the plane into a rotation
// system. Strokes are split at declared vertices, crossings are created where
// far-apart colors meet, pieces inside an optional rectangular hole are
// dropped (their cut points become inner marks), and loose ends on the outer
// rectangle become outer marks.

#include <functional>
#include <vector>

#include "clusterweave/ngraph.hpp"

namespace cw::sketch {

struct Pt {
  double x = 0;
  double y = 0;
};

// p -> (a x + b y + e, c x + d y + f)
struct Affine {
  double a = 1, b = 0, c = 0, d = 1, e = 0, f = 0;
  Pt operator()(Pt p) const { return {a * p.x + b * p.y + e, c * p.x + d * p.y + f}; }
  // this after `inner`
  Affine compose(const Affine& inner) const;
  static Affine shift(double dx, double dy);
  static Affine rotate(double degrees);
  static Affine scale(double sx, double sy);
};

struct Rect {
  double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
  bool contains_strictly(Pt p, double eps) const {
    return p.x > xmin + eps && p.x < xmax - eps && p.y > ymin + eps && p.y < ymax - eps;
  }
};

class Sketch {
 public:
  Sketch(int N, Rect outer, Pt center);
  void set_hole(Rect hole);
  // Annulus bounded by two circles around the center: loose ends on the
  // outer circle become outer marks and those on the inner circle inner marks.
  void set_circles(double inner_radius, double outer_radius);
  // Transform applied to everything drawn afterwards.
  void set_transform(const Affine& t) { tf_ = t; }
  // Optional map applied after the affine transform; segments are subdivided
  // into `steps` pieces first so that straight strokes follow the map.
  void set_warp(std::function<Pt(Pt)> warp, int steps);

  // Polyline; `rounded` cuts every interior corner by a short chamfer.
  void line(int color, const std::vector<Pt>& pts, bool rounded = false);
  // Cubic from `from` to `to` leaving at angle `out` and arriving from angle
  // `in` (degrees, local coordinates).
  void curve(int color, Pt from, Pt to, double out, double in);
  void vertex(VertexKind kind, int color, Pt p);

  struct Result {
    NGraph graph;
    std::vector<std::vector<Pt>> edge_paths;
    // Edge whose drawn path passes through p (in global coordinates).
    int edge_near(Pt p) const;
  };
  Result build() const;

 private:
  struct Stroke {
    int color;
    std::vector<Pt> pts;
  };
  struct Decl {
    VertexKind kind;
    int color;
    Pt p;
  };
  int N_;
  Rect outer_;
  Pt center_;
  bool has_hole_ = false;
  Rect hole_;
  bool circles_ = false;
  double r_in_ = 0, r_out_ = 0;
  Affine tf_;
  std::function<Pt(Pt)> warp_;
  int warp_steps_ = 1;
  std::vector<Pt> warped(const std::vector<Pt>& pts) const;
  std::vector<Stroke> strokes_;
  std::vector<Decl> decls_;
};

}  // namespace cw::sketch
