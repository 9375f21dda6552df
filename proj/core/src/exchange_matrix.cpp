#include "clusterweave/exchange_matrix.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <numeric>
#include <regex>
#include <sstream>

#include "clusterweave/errors.hpp"

namespace cw {

namespace {

std::string rows_to_string(const std::vector<std::vector<int>>& rows) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (j) os << ',';
      os << rows[i][j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

struct Ratio {
  int64_t num = 0;
  int64_t den = 1;
};

Ratio make_ratio(int64_t num, int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

// Solves w_i x_ij = w_j x_ji over positive rationals on each connected
// component of the nonzero pattern of x; returns gcd-normalized integers.
// `sign` is +1 for a symmetrizer (Cartan) and -1 for a skew-symmetrizer.
std::optional<std::vector<int64_t>> solve_symmetrizer(int n, const std::function<int64_t(int, int)>& x,
                                                      int sign) {
  std::vector<Ratio> w(n);
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    w[s] = {1, 1};
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        int64_t xij = x(i, j), xji = x(j, i);
        if (xij == 0 && xji == 0) continue;
        if (xij == 0 || xji == 0) return std::nullopt;
        // w_i x_ij = sign * w_j x_ji  =>  w_j = w_i x_ij / (sign x_ji)
        Ratio wj = make_ratio(w[i].num * xij, w[i].den * sign * xji);
        if (wj.num <= 0) return std::nullopt;
        if (comp[j] < 0) {
          comp[j] = ncomp;
          w[j] = wj;
          stack.push_back(j);
        } else if (wj.num != w[j].num || wj.den != w[j].den) {
          return std::nullopt;
        }
      }
    }
    ++ncomp;
  }
  std::vector<int64_t> d(n);
  for (int c = 0; c < ncomp; ++c) {
    int64_t l = 1;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) l = std::lcm(l, w[i].den);
    int64_t g = 0;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) {
        d[i] = w[i].num * (l / w[i].den);
        g = std::gcd(g, d[i]);
      }
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) d[i] /= g;
  }
  return d;
}

// Builds the Cartan matrix of a diagram given as a list of directed
// multiplicities: entry {i, j, k} sets c[i][j] = -k, c[j][i] = -1 (k == 1 gives
// a simple edge). Doubled symmetric edges are passed as two entries.
CartanMatrix diagram(int n, const std::vector<std::array<int, 3>>& edges) {
  CartanMatrix c(n);
  for (int i = 0; i < n; ++i) c.at(i, i) = 2;
  for (auto [i, j, k] : edges) {
    c.at(i, j) = -k;
    if (c.at(j, i) == 0) c.at(j, i) = -1;
  }
  return c;
}

// Tripod with a center and arms of p-1, q-1, r-1 further vertices, numbered
// center first and then arm by arm outward.
std::vector<std::array<int, 3>> tripod_edges(int p, int q, int r) {
  std::vector<std::array<int, 3>> e;
  int next = 1;
  for (int len : {p - 1, q - 1, r - 1}) {
    int prev = 0;
    for (int t = 0; t < len; ++t) {
      e.push_back({prev, next, 1});
      prev = next++;
    }
  }
  return e;
}

std::vector<std::array<int, 3>> chain_edges(int n) {
  std::vector<std::array<int, 3>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
  return e;
}

// D~r numbering: r == 4 gives center 0 and leaves 1..4; otherwise 0 is the
// left branch node, 1 and 2 its leaves, 3..r-3 the interior path, r-2 the
// right branch node and r-1, r its leaves.
std::vector<std::array<int, 3>> affine_d_edges(int r) {
  std::vector<std::array<int, 3>> e;
  if (r == 4) {
    for (int i = 1; i <= 4; ++i) e.push_back({0, i, 1});
    return e;
  }
  e.push_back({0, 1, 1});
  e.push_back({0, 2, 1});
  int prev = 0;
  for (int v = 3; v <= r - 2; ++v) {
    e.push_back({prev, v, 1});
    prev = v;
  }
  e.push_back({r - 2, r - 1, 1});
  e.push_back({r - 2, r, 1});
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExchangeMatrix / CartanMatrix

ExchangeMatrix::ExchangeMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0 || rows < cols) throw InvalidInput("exchange matrix needs rows >= cols >= 0");
  data_.assign(static_cast<size_t>(rows) * cols, 0);
}

ExchangeMatrix ExchangeMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  int m = static_cast<int>(rows.size());
  int n = m ? static_cast<int>(rows[0].size()) : 0;
  ExchangeMatrix b(m, n);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw InvalidInput("ragged matrix rows");
    for (int j = 0; j < n; ++j) b.at(i, j) = rows[i][j];
  }
  return b;
}

ExchangeMatrix ExchangeMatrix::principal() const {
  ExchangeMatrix p(cols_, cols_);
  for (int i = 0; i < cols_; ++i)
    for (int j = 0; j < cols_; ++j) p.at(i, j) = at(i, j);
  return p;
}

std::vector<std::vector<int>> ExchangeMatrix::to_rows() const {
  std::vector<std::vector<int>> r(rows_, std::vector<int>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i][j] = at(i, j);
  return r;
}

std::string ExchangeMatrix::str() const { return rows_to_string(to_rows()); }

CartanMatrix CartanMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  CartanMatrix c(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw InvalidInput("Cartan matrix must be square");
    for (int j = 0; j < n; ++j) c.at(i, j) = rows[i][j];
  }
  return c;
}

std::vector<std::vector<int>> CartanMatrix::to_rows() const {
  std::vector<std::vector<int>> r(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i][j] = at(i, j);
  return r;
}

std::string CartanMatrix::str() const { return rows_to_string(to_rows()); }

std::string CartanMatrix::violation() const {
  for (int i = 0; i < n_; ++i) {
    if (at(i, i) != 2) return "diagonal entry is not 2";
    for (int j = 0; j < n_; ++j) {
      if (i == j) continue;
      if (at(i, j) > 0) return "positive off-diagonal entry";
      if ((at(i, j) == 0) != (at(j, i) == 0)) return "zero pattern is not symmetric";
    }
  }
  return {};
}

CartanMatrix CartanMatrix::permuted(const std::vector<int>& perm) const {
  CartanMatrix c(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) c.at(i, j) = at(perm[i], perm[j]);
  return c;
}

// ---------------------------------------------------------------------------
// Dynkin types

std::string DynkinType::name() const {
  std::string s(1, family);
  if (twist == 1) s += "~";
  s += std::to_string(rank);
  if (twist >= 2) s += "^(" + std::to_string(twist) + ")";
  return s;
}

int DynkinType::vertex_count() const {
  if (twist == 0) return rank;
  if (twist == 1) return rank + 1;
  if (family == 'A') return rank % 2 == 0 ? rank / 2 + 1 : (rank + 1) / 2 + 1;
  if (family == 'D' && twist == 2) return rank;
  if (family == 'E' && twist == 2 && rank == 6) return 5;
  if (family == 'D' && twist == 3 && rank == 4) return 3;
  throw UnknownDiagram("no twisted type " + name());
}

DynkinType parse_dynkin(const std::string& text) {
  static const std::regex re(R"(^\s*([A-Ga-g])\s*(~|t)?\s*(\d+)\s*(t|~)?\s*(?:(?:\^\(|_)(\d)\)?)?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InvalidInput("cannot parse Dynkin type '" + text + "'");
  DynkinType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(m[1].str()[0])));
  t.rank = std::stoi(m[3].str());
  bool tilde = m[2].matched || m[4].matched;
  t.twist = m[5].matched ? std::stoi(m[5].str()) : (tilde ? 1 : 0);
  if (tilde && m[5].matched) throw InvalidInput("type cannot be both ~ and twisted: " + text);
  catalog_cartan(t);  // validates
  return t;
}

CartanMatrix catalog_cartan(const DynkinType& t) {
  const int r = t.rank;
  auto bad = [&]() -> CartanMatrix { throw UnknownDiagram("type " + t.name() + " is not in the catalog"); };
  if (t.twist == 0) {
    switch (t.family) {
      case 'A':
        if (r >= 1) return diagram(r, chain_edges(r));
        break;
      case 'B':
        if (r >= 2) {
          auto e = chain_edges(r - 1);
          e.push_back({r - 2, r - 1, 2});
          return diagram(r, e);
        }
        break;
      case 'C':
        if (r >= 3) {
          auto e = chain_edges(r - 1);
          e.push_back({r - 1, r - 2, 2});
          return diagram(r, e);
        }
        break;
      case 'D':
        if (r >= 4) return diagram(r, tripod_edges(2, 2, r - 2));
        break;
      case 'E':
        if (r >= 6 && r <= 8) return diagram(r, tripod_edges(2, 3, r - 3));
        break;
      case 'F':
        if (r == 4) return diagram(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}});
        break;
      case 'G':
        if (r == 2) return diagram(2, {{0, 1, 3}});
        break;
    }
    return bad();
  }
  if (t.twist == 1) {
    switch (t.family) {
      case 'A':
        if (r == 1) return diagram(2, {{0, 1, 2}, {1, 0, 2}});
        if (r >= 2) {
          auto e = chain_edges(r + 1);
          e.push_back({r, 0, 1});
          return diagram(r + 1, e);
        }
        break;
      case 'B':
        if (r >= 3) {
          // leaves 0,1 on branch node 2; path 2..r-1; arrow r-1 => r
          std::vector<std::array<int, 3>> e{{0, 2, 1}, {1, 2, 1}};
          for (int v = 2; v + 1 <= r - 1; ++v) e.push_back({v, v + 1, 1});
          e.push_back({r - 1, r, 2});
          return diagram(r + 1, e);
        }
        break;
      case 'C':
        if (r >= 2) {
          // u0 => u1 - ... - u_{r-1} <= u_r
          auto e = chain_edges(r + 1);
          e[0] = {0, 1, 2};
          e.back() = {r, r - 1, 2};
          return diagram(r + 1, e);
        }
        break;
      case 'D':
        if (r >= 4) return diagram(r + 1, affine_d_edges(r));
        break;
      case 'E':
        if (r == 6) return diagram(7, tripod_edges(3, 3, 3));
        if (r == 7) return diagram(8, tripod_edges(2, 4, 4));
        if (r == 8) return diagram(9, tripod_edges(2, 3, 6));
        break;
      case 'F':
        if (r == 4) return diagram(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 2}, {3, 4, 1}});
        break;
      case 'G':
        if (r == 2) return diagram(3, {{0, 1, 1}, {1, 2, 3}});
        break;
    }
    return bad();
  }
  if (t.twist == 2) {
    if (t.family == 'A' && r == 2) return diagram(2, {{1, 0, 4}});
    if (t.family == 'A' && r >= 4 && r % 2 == 0) {
      int l = r / 2;  // u0 => u1 - ... - u_{l-1} => u_l
      auto e = chain_edges(l + 1);
      e[0] = {0, 1, 2};
      e.back() = {l - 1, l, 2};
      return diagram(l + 1, e);
    }
    if (t.family == 'A' && r >= 5 && r % 2 == 1) {
      int l = (r + 1) / 2;  // leaves 0,1 on node 2; path 2..l-1; arrow l => l-1
      std::vector<std::array<int, 3>> e{{0, 2, 1}, {1, 2, 1}};
      for (int v = 2; v + 1 <= l - 1; ++v) e.push_back({v, v + 1, 1});
      e.push_back({l, l - 1, 2});
      return diagram(l + 1, e);
    }
    if (t.family == 'D' && r >= 3) {
      // n = r vertices: u0 <= u1 - ... - u_{n-2} => u_{n-1}
      auto e = chain_edges(r);
      e[0] = {1, 0, 2};
      e.back() = {r - 2, r - 1, 2};
      return diagram(r, e);
    }
    if (t.family == 'E' && r == 6) return diagram(5, {{0, 1, 1}, {1, 2, 1}, {3, 2, 2}, {3, 4, 1}});
    return bad();
  }
  if (t.twist == 3 && t.family == 'D' && r == 4) return diagram(3, {{0, 1, 1}, {2, 1, 3}});
  return bad();
}

// ---------------------------------------------------------------------------
// Symmetrizers, Cartan counterpart, acyclicity

std::optional<std::vector<int64_t>> skew_symmetrizer(const ExchangeMatrix& b) {
  const int n = b.cols();
  for (int i = 0; i < n; ++i)
    if (b.at(i, i) != 0) return std::nullopt;
  return solve_symmetrizer(n, [&](int i, int j) { return static_cast<int64_t>(b.at(i, j)); }, -1);
}

std::optional<std::vector<int64_t>> cartan_symmetrizer(const CartanMatrix& c) {
  return solve_symmetrizer(c.size(), [&](int i, int j) { return static_cast<int64_t>(c.at(i, j)); }, +1);
}

CartanMatrix cartan_counterpart(const ExchangeMatrix& b) {
  if (!skew_symmetrizer(b)) throw NotSkewSymmetrizable("principal part " + b.principal().str());
  const int n = b.cols();
  CartanMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.at(i, j) = i == j ? 2 : -std::abs(b.at(i, j));
  return c;
}

bool is_acyclic(const ExchangeMatrix& b) {
  const int n = b.cols();
  // Kahn's algorithm on arrows i -> j with b[i][j] > 0.
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (b.at(i, j) > 0) ++indeg[j];
  std::vector<int> ready;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  int seen = 0;
  while (!ready.empty()) {
    int i = ready.back();
    ready.pop_back();
    ++seen;
    for (int j = 0; j < n; ++j)
      if (b.at(i, j) > 0 && --indeg[j] == 0) ready.push_back(j);
  }
  return seen == n;
}

// ---------------------------------------------------------------------------
// Classification

__int128 exact_determinant(const std::vector<std::vector<int64_t>>& m0) {
  const int n = static_cast<int>(m0.size());
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = m0[i][j];
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

bool positive_definite(const std::vector<std::vector<int64_t>>& s) {
  const int n = static_cast<int>(s.size());
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<int64_t>> sub(k, std::vector<int64_t>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[i][j] = s[i][j];
    if (exact_determinant(sub) <= 0) return false;
  }
  return true;
}

std::vector<DynkinType> candidates_with_vertices(int v, CartanClass kind) {
  std::vector<DynkinType> out;
  auto add = [&](DynkinType t) {
    try {
      if (t.vertex_count() == v) {
        catalog_cartan(t);
        out.push_back(t);
      }
    } catch (const UnknownDiagram&) {
    }
  };
  if (kind == CartanClass::Finite) {
    for (char f : std::string("ABCDEFG")) add({f, v, 0});
  } else {
    for (char f : std::string("ABCDEFG")) add({f, v - 1, 1});
    for (int r = 2; r <= 2 * v + 1; ++r) add({'A', r, 2});
    add({'D', v, 2});
    add({'E', 6, 2});
    add({'D', 4, 3});
  }
  return out;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const CartanMatrix& a, const CartanMatrix& b) {
  const int n = a.size();
  if (b.size() != n) return std::nullopt;
  auto signature = [n](const CartanMatrix& c, int i) {
    std::vector<std::pair<int, int>> s;
    for (int j = 0; j < n; ++j)
      if (j != i && (c.at(i, j) != 0 || c.at(j, i) != 0)) s.emplace_back(c.at(i, j), c.at(j, i));
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<std::vector<std::pair<int, int>>> sa(n), sb(n);
  for (int i = 0; i < n; ++i) {
    sa[i] = signature(a, i);
    sb[i] = signature(b, i);
  }
  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == n) return true;
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || sa[cand] != sb[i]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = a.at(cand, perm[j]) == b.at(i, j) && a.at(perm[j], cand) == b.at(j, i);
      if (!ok) continue;
      perm[i] = cand;
      used[cand] = 1;
      if (go(i + 1)) return true;
      used[cand] = 0;
    }
    return false;
  };
  if (go(0)) return perm;
  return std::nullopt;
}

std::string Classification::name() const {
  if (kind == CartanClass::Indefinite) return "indefinite";
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += " x ";
    s += components[i].name();
  }
  return s;
}

Classification classify_cartan(const CartanMatrix& c) {
  if (auto why = c.violation(); !why.empty()) throw InvalidInput("not a Cartan matrix: " + why);
  const int n = c.size();
  if (n > 12) throw InvalidInput("classification limited to rank <= 12");
  Classification result;
  auto d = cartan_symmetrizer(c);
  if (!d) return result;  // non-symmetrizable: indefinite

  // Connected components of the diagram.
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> members;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    members.emplace_back();
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(members.size()) - 1;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      members.back().push_back(i);
      for (int j = 0; j < n; ++j)
        if (j != i && c.at(i, j) != 0 && comp[j] < 0) {
          comp[j] = comp[s];
          stack.push_back(j);
        }
    }
    std::sort(members.back().begin(), members.back().end());
  }

  int affine_parts = 0;
  for (const auto& mem : members) {
    const int k = static_cast<int>(mem.size());
    std::vector<std::vector<int64_t>> sym(k, std::vector<int64_t>(k));
    CartanMatrix sub(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        sub.at(i, j) = c.at(mem[i], mem[j]);
        sym[i][j] = (*d)[mem[i]] * c.at(mem[i], mem[j]);
      }
    CartanClass kind;
    if (positive_definite(sym)) {
      kind = CartanClass::Finite;
    } else {
      std::vector<std::vector<int64_t>> minor(k - 1, std::vector<int64_t>(k - 1));
      for (int i = 1; i < k; ++i)
        for (int j = 1; j < k; ++j) minor[i - 1][j - 1] = sym[i][j];
      if (exact_determinant(sym) == 0 && positive_definite(minor)) {
        kind = CartanClass::Affine;
      } else {
        return Classification{};
      }
    }
    if (kind == CartanClass::Affine) ++affine_parts;
    bool named = false;
    for (const auto& t : candidates_with_vertices(k, kind)) {
      if (find_isomorphism(sub, catalog_cartan(t))) {
        result.components.push_back(t);
        named = true;
        break;
      }
    }
    if (!named) throw UnknownDiagram("definiteness test passed but no catalog match for " + sub.str());
  }
  if (affine_parts == 0) {
    result.kind = CartanClass::Finite;
  } else if (affine_parts == 1) {
    result.kind = CartanClass::Affine;
  } else {
    return Classification{};  // corank > 1
  }
  return result;
}

ExchangeMatrix bipartite_matrix(const DynkinType& type) {
  CartanMatrix c = catalog_cartan(type);
  const int n = c.size();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;  // sink
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || c.at(i, j) == 0) continue;
        if (color[j] < 0) {
          color[j] = 1 - color[i];
          stack.push_back(j);
        } else if (color[j] == color[i]) {
          throw NotBipartite("diagram of " + type.name() + " has an odd cycle");
        }
      }
    }
  }
  ExchangeMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || c.at(i, j) == 0) continue;
      // sources have color 1 and point into sinks
      b.at(i, j) = color[i] == 1 ? -c.at(i, j) : c.at(i, j);
    }
  return b;
}

}  // namespace cw
