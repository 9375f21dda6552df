#include "clusterweave/folding.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <regex>
#include <set>

#include "clusterweave/errors.hpp"
#include "clusterweave/seed.hpp"

namespace cw {

namespace {

std::vector<int> compose(const std::vector<int>& g, const std::vector<int>& h) {
  // (g o h)(i) = g(h(i))
  std::vector<int> r(h.size());
  for (size_t i = 0; i < h.size(); ++i) r[i] = g[h[i]];
  return r;
}

void require_degree(const ExchangeMatrix& b, const GroupAction& a) {
  if (a.degree != b.rows())
    throw DegreeMismatch("action degree " + std::to_string(a.degree) + " vs matrix rows " + std::to_string(b.rows()));
  a.validate();
}

}  // namespace

GroupAction GroupAction::trivial(int degree) {
  GroupAction a;
  a.degree = degree;
  return a;
}

GroupAction GroupAction::from_cycles(int degree, const std::vector<std::vector<std::vector<int>>>& generator_cycles) {
  GroupAction a;
  a.degree = degree;
  for (const auto& cycles : generator_cycles) {
    std::vector<int> g(degree);
    std::iota(g.begin(), g.end(), 0);
    for (const auto& c : cycles)
      for (size_t t = 0; t < c.size(); ++t) g[c[t] - 1] = c[(t + 1) % c.size()] - 1;
    a.generators.push_back(g);
  }
  a.validate();
  return a;
}

void GroupAction::validate() const {
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree) throw InvalidInput("generator length differs from degree");
    std::vector<char> hit(degree, 0);
    for (int x : g) {
      if (x < 0 || x >= degree || hit[x]) throw InvalidInput("generator is not a permutation");
      hit[x] = 1;
    }
  }
}

std::vector<std::vector<int>> GroupAction::elements() const {
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> out{id};
  std::set<std::vector<int>> seen{id};
  for (size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators) {
      auto h = compose(g, out[i]);
      if (seen.insert(h).second) {
        out.push_back(h);
        if (out.size() > 5040) throw InvalidInput("group too large");
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> GroupAction::orbits() const {
  std::vector<int> comp(degree, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < degree; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> orbit{s};
    comp[s] = static_cast<int>(out.size());
    for (size_t t = 0; t < orbit.size(); ++t)
      for (const auto& g : generators) {
        int x = g[orbit[t]];
        if (comp[x] < 0) {
          comp[x] = comp[s];
          orbit.push_back(x);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(orbit);
  }
  return out;
}

std::string AdmissibilityVerdict::str() const {
  switch (kind) {
    case Admissibility::Admissible:
      return "Admissible";
    case Admissibility::FailsMutabilityUniformity:
      return "FailsMutabilityUniformity(" + std::to_string(i + 1) + "," + std::to_string(i2 + 1) + ")";
    case Admissibility::FailsOrbitZero:
      return "FailsOrbitZero(" + std::to_string(i + 1) + "," + std::to_string(i2 + 1) + ")";
    case Admissibility::FailsSignCoherence:
      return "FailsSignCoherence(" + std::to_string(i + 1) + "," + std::to_string(i2 + 1) + "," +
             std::to_string(j + 1) + ")";
  }
  return "?";
}

bool check_invariant(const ExchangeMatrix& b, const GroupAction& a) {
  require_degree(b, a);
  const int n = b.cols();
  for (const auto& g : a.elements()) {
    for (int j = 0; j < n; ++j)
      if (g[j] >= n) return false;  // must map mutable columns to mutable columns
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < n; ++j)
        if (b.at(g[i], g[j]) != b.at(i, j)) return false;
  }
  return true;
}

AdmissibilityVerdict check_admissible(const ExchangeMatrix& b, const GroupAction& a) {
  if (!check_invariant(b, a)) throw NotInvariant("matrix is not invariant under the action");
  const int n = b.cols();
  AdmissibilityVerdict v;
  for (const auto& orbit : a.orbits()) {
    for (size_t p = 0; p < orbit.size(); ++p)
      for (size_t q = 0; q < orbit.size(); ++q) {
        if (p == q) continue;
        const int i = orbit[p], i2 = orbit[q];
        if ((i < n) != (i2 < n)) return {Admissibility::FailsMutabilityUniformity, i, i2, -1};
        if (i < n && b.at(i, i2) != 0) return {Admissibility::FailsOrbitZero, i, i2, -1};
        for (int j = 0; j < n; ++j)
          if (static_cast<int64_t>(b.at(i, j)) * b.at(i2, j) < 0) return {Admissibility::FailsSignCoherence, i, i2, j};
      }
  }
  return v;
}

OrbitLayout orbit_layout(const ExchangeMatrix& b, const GroupAction& a) {
  require_degree(b, a);
  OrbitLayout layout;
  std::vector<std::vector<int>> frozen;
  for (auto& o : a.orbits()) {
    if (o.front() < b.cols()) {
      layout.orbits.push_back(o);
    } else {
      frozen.push_back(o);
    }
  }
  layout.mutable_count = static_cast<int>(layout.orbits.size());
  layout.orbits.insert(layout.orbits.end(), frozen.begin(), frozen.end());
  return layout;
}

ExchangeMatrix fold(const ExchangeMatrix& b, const GroupAction& a) {
  AdmissibilityVerdict v = check_admissible(b, a);
  if (!v.ok()) throw NotAdmissible(v.str());
  OrbitLayout layout = orbit_layout(b, a);
  const int rows = static_cast<int>(layout.orbits.size()), cols = layout.mutable_count;
  ExchangeMatrix f(rows, cols);
  for (int I = 0; I < rows; ++I)
    for (int J = 0; J < cols; ++J) {
      const int j = layout.orbits[J].front();
      int s = 0;
      for (int i : layout.orbits[I]) s += b.at(i, j);
      f.at(I, J) = s;
    }
  return f;
}

ExchangeMatrix orbit_mutate(const ExchangeMatrix& b, const GroupAction& a, const std::vector<int>& orbit) {
  AdmissibilityVerdict v = check_admissible(b, a);
  if (!v.ok()) throw NotAdmissible(v.str());
  auto orbits = a.orbits();
  std::vector<int> sorted = orbit;
  std::sort(sorted.begin(), sorted.end());
  if (std::find(orbits.begin(), orbits.end(), sorted) == orbits.end() || sorted.empty() ||
      sorted.front() >= b.cols())
    throw NotAnOrbit("indices do not form a mutable orbit");
  ExchangeMatrix r = b;
  for (int i : sorted) r = mutate_matrix(r, i);
  // Members of an admissible orbit are pairwise unconnected, so the order of
  // the single mutations does not matter; assert it on the reversed order.
  ExchangeMatrix check = b;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) check = mutate_matrix(check, *it);
  if (!(check == r)) throw NotAdmissible("orbit mutation depends on order");
  return r;
}

ExchangeMatrix orbit_mutate(const ExchangeMatrix& b, const GroupAction& a, int orbit) {
  OrbitLayout layout = orbit_layout(b, a);
  if (orbit < 0 || orbit >= layout.mutable_count) throw NotAnOrbit("orbit position " + std::to_string(orbit + 1));
  return orbit_mutate(b, a, layout.orbits[orbit]);
}

FoldabilityReport verify_globally_foldable(const ExchangeMatrix& b, const GroupAction& a, int depth) {
  FoldabilityReport rep;
  OrbitLayout layout = orbit_layout(b, a);
  struct Item {
    ExchangeMatrix m;
    std::vector<int> path;
  };
  std::set<std::vector<int>> seen{b.data()};
  std::deque<Item> queue{{b, {}}};
  while (!queue.empty()) {
    Item cur = std::move(queue.front());
    queue.pop_front();
    ++rep.explored;
    AdmissibilityVerdict v = check_admissible(cur.m, a);
    if (!v.ok()) {
      rep.ok = false;
      rep.counterexample = cur.path;
      rep.detail = v.str();
      return rep;
    }
    if (static_cast<int>(cur.path.size()) >= depth) continue;
    ExchangeMatrix folded = fold(cur.m, a);
    for (int I = 0; I < layout.mutable_count; ++I) {
      ExchangeMatrix next = orbit_mutate(cur.m, a, layout.orbits[I]);
      std::vector<int> path = cur.path;
      path.push_back(I);
      AdmissibilityVerdict nv = check_admissible(next, a);
      if (nv.ok() && !(fold(next, a) == mutate_matrix(folded, I))) {
        rep.commutes = false;
        rep.counterexample = path;
        rep.detail = "folding does not commute with orbit mutation";
        return rep;
      }
      if (seen.insert(next.data()).second) queue.push_back({std::move(next), std::move(path)});
    }
  }
  return rep;
}

ExchangeMatrix matrix_from_arrows(int n, const std::vector<std::pair<int, int>>& arrows) {
  ExchangeMatrix b(n, n);
  for (auto [i, j] : arrows) {
    b.at(i - 1, j - 1) += 1;
    b.at(j - 1, i - 1) -= 1;
  }
  return b;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

// Bipartite D~n in the Table-1 numbering (zero-based here): 0 the left branch
// node, 1 and 2 its leaves, 3..n-3 the interior path, n-2 the right branch
// node, n-1 and n its leaves; vertex 0 is a sink. For n = 4, 0 is the center.
ExchangeMatrix affine_d_matrix(int n) { return bipartite_matrix(DynkinType{'D', n, 1}); }

std::vector<int> identity_perm(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<int> swap_perm(int m, const std::vector<std::pair<int, int>>& swaps) {
  auto p = identity_perm(m);
  for (auto [x, y] : swaps) std::swap(p[x], p[y]);
  return p;
}

// End-to-end reflection of D~n (n even), zero-based Table-1 numbering.
std::vector<int> d_reflection(int n) {
  if (n == 4) return swap_perm(5, {{1, 3}, {2, 4}});
  auto p = identity_perm(n + 1);
  p[0] = n - 2;
  p[n - 2] = 0;
  p[1] = n - 1;
  p[n - 1] = 1;
  p[2] = n;
  p[n] = 2;
  for (int i = 3; i <= n - 3; ++i) p[i] = n - i;
  return p;
}

std::vector<int> d_swap_both(int n) {
  if (n == 4) return swap_perm(5, {{1, 2}, {3, 4}});
  return swap_perm(n + 1, {{1, 2}, {n - 1, n}});
}

std::vector<int> d_swap_one(int n) { return swap_perm(n + 1, {{1, 2}}); }

FoldingTriple build_triple(const std::string& src, const std::string& group, const DynkinType& target) {
  static const std::regex d_re(R"(^D(\d+)t$)"), a_re(R"(^A(\d+),(\d+)t$)");
  std::smatch m;
  FoldingTriple t;
  t.target = target;
  auto fail = [&]() -> FoldingTriple {
    throw UnknownTriple(src + "-" + group + "-" + target.name() + " is not in the folding catalog");
  };
  if (src == "E6t") {
    t.source = "E~6";
    t.matrix = matrix_from_arrows(7, {{1, 2}, {1, 4}, {1, 6}, {3, 2}, {5, 4}, {7, 6}});
    if (group == "Z3") {
      t.action = GroupAction::from_cycles(7, {{{2, 4, 6}, {3, 5, 7}}});
    } else if (group == "Z2") {
      t.action = GroupAction::from_cycles(7, {{{4, 6}, {5, 7}}});
    } else {
      return fail();
    }
  } else if (src == "E7t" && group == "Z2") {
    t.source = "E~7";
    t.matrix = matrix_from_arrows(8, {{1, 2}, {1, 3}, {1, 6}, {4, 3}, {4, 5}, {7, 6}, {7, 8}});
    t.action = GroupAction::from_cycles(8, {{{3, 6}, {4, 7}, {5, 8}}});
  } else if (std::regex_match(src, m, d_re)) {
    const int n = std::stoi(m[1].str());
    if (n < 4) return fail();
    t.source = "D~" + std::to_string(n);
    t.matrix = affine_d_matrix(n);
    t.action.degree = n + 1;
    if (n == 4 && group == "Z3") {
      t.action.generators = {{0, 2, 3, 1, 4}};
    } else if (group == "Z2xZ2" && n % 2 == 0) {
      t.action.generators = {d_reflection(n), d_swap_both(n)};
    } else if (group == "Z2" && target.family == 'C' && target.twist == 1) {
      t.action.generators = {d_swap_both(n)};
    } else if (group == "Z2" && target.family == 'A' && target.twist == 2) {
      t.action.generators = {d_swap_one(n)};
    } else if (group == "Z2" && target.family == 'B' && target.twist == 1 && n % 2 == 0) {
      t.action.generators = {d_reflection(n)};
    } else {
      return fail();
    }
  } else if (std::regex_match(src, m, a_re) && group == "Z2") {
    const int p = std::stoi(m[1].str()), q = std::stoi(m[2].str());
    if (p != q || p < 2) return fail();
    // Alternating orientation of the 2p-cycle 1..2p; odd vertices are sources.
    std::vector<std::pair<int, int>> arrows;
    for (int i = 1; i <= 2 * p; ++i) {
      int j = i % (2 * p) + 1;
      if (i % 2) {
        arrows.push_back({i, j});
      } else {
        arrows.push_back({j, i});
      }
    }
    t.source = "A~" + std::to_string(p) + "," + std::to_string(q);
    t.matrix = matrix_from_arrows(2 * p, arrows);
    t.action.degree = 2 * p;
    std::vector<int> g(2 * p);
    if (target.family == 'A' && target.twist == 1) {
      for (int i = 0; i < 2 * p; ++i) g[i] = (i + 2) % (2 * p);  // rotation by two steps
      if (p != 2) return fail();
    } else {
      for (int i = 0; i < 2 * p; ++i) g[i] = (2 * p - i) % (2 * p);  // reflection fixing 1 and p+1
    }
    t.action.generators = {g};
  } else {
    return fail();
  }
  t.group = group == "Z2" ? "Z/2" : group == "Z3" ? "Z/3" : "(Z/2)^2";
  t.action.validate();
  Classification c = classify_cartan(cartan_counterpart(fold(t.matrix, t.action)));
  if (c.kind != CartanClass::Affine || c.components.size() != 1 || !(c.components[0] == target)) return fail();
  return t;
}

std::string type_token(const DynkinType& t) {
  std::string s(1, t.family);
  s += std::to_string(t.rank);
  if (t.twist == 1) s += "t";
  if (t.twist >= 2) s += "^(" + std::to_string(t.twist) + ")";
  return s;
}

}  // namespace

FoldingTriple catalog_triple(const std::string& name) {
  // source-group-target; the source may contain a comma but never a dash.
  auto first = name.find('-');
  auto second = first == std::string::npos ? first : name.find('-', first + 1);
  if (second == std::string::npos) throw UnknownTriple("expected source-group-target, got '" + name + "'");
  std::string src = name.substr(0, first), group = name.substr(first + 1, second - first - 1);
  DynkinType target;
  try {
    target = parse_dynkin(name.substr(second + 1));
  } catch (const DomainError&) {
    throw UnknownTriple("unknown target in '" + name + "'");
  }
  FoldingTriple t = build_triple(src, group, target);
  t.name = src + "-" + group + "-" + type_token(target);
  return t;
}

std::vector<std::string> catalog_triple_names() {
  std::vector<std::string> names{"A2,2t-Z2-A1t"};
  for (int n = 2; n <= 5; ++n)
    names.push_back("A" + std::to_string(n) + "," + std::to_string(n) + "t-Z2-D" + std::to_string(n + 1) + "^(2)");
  names.push_back("D4t-Z2xZ2-A2^(2)");
  names.push_back("D4t-Z3-D4^(3)");
  for (int n = 4; n <= 10; ++n) {
    names.push_back("D" + std::to_string(n) + "t-Z2-C" + std::to_string(n - 2) + "t");
    names.push_back("D" + std::to_string(n) + "t-Z2-A" + std::to_string(2 * n - 3) + "^(2)");
  }
  for (int n = 3; 2 * n <= 10; ++n) {
    names.push_back("D" + std::to_string(2 * n) + "t-Z2-B" + std::to_string(n) + "t");
    names.push_back("D" + std::to_string(2 * n) + "t-Z2xZ2-A" + std::to_string(2 * n - 2) + "^(2)");
  }
  names.push_back("E6t-Z3-G2t");
  names.push_back("E6t-Z2-E6^(2)");
  names.push_back("E7t-Z2-F4t");
  return names;
}

}  // namespace cw
