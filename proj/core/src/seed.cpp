#include "clusterweave/seed.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

#include "clusterweave/errors.hpp"

namespace cw {

namespace {

void check_index(const ExchangeMatrix& b, int k) {
  if (k < 0 || k >= b.cols())
    throw IndexOutOfRange("mutation index " + std::to_string(k + 1) + " outside 1.." + std::to_string(b.cols()));
}

}  // namespace

Seed Seed::initial(const ExchangeMatrix& b) {
  Seed s;
  s.matrix = b;
  for (int i = 0; i < b.rows(); ++i) s.variables.push_back(LaurentPoly::variable(b.rows(), i));
  return s;
}

Seed Seed::principal_coefficients(const ExchangeMatrix& b) {
  const int n = b.cols();
  ExchangeMatrix ext(2 * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ext.at(i, j) = b.at(i, j);
  for (int i = 0; i < n; ++i) ext.at(n + i, i) = 1;
  return initial(ext);
}

YSeed YSeed::initial(const ExchangeMatrix& b) {
  YSeed y;
  y.matrix = b;
  for (int j = 0; j < b.cols(); ++j) y.yvars.emplace_back(LaurentPoly::variable(b.cols(), j));
  return y;
}

YSeed YSeed::from_seed(const Seed& s) {
  YSeed y;
  y.matrix = s.matrix;
  const int nv = s.variables.empty() ? 0 : s.variables[0].nvars();
  for (int j = 0; j < s.n(); ++j) {
    RationalFunction acc(LaurentPoly::constant(nv, 1));
    for (int i = 0; i < s.m(); ++i) {
      int e = s.matrix.at(i, j);
      if (e != 0) acc = acc * RationalFunction(s.variables[i]).pow(e);
    }
    y.yvars.push_back(acc);
  }
  return y;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k) {
  check_index(b, k);
  ExchangeMatrix r(b.rows(), b.cols());
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      if (i == k || j == k) {
        r.at(i, j) = -b.at(i, j);
      } else {
        const int bik = b.at(i, k), bkj = b.at(k, j);
        r.at(i, j) = b.at(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
    }
  return r;
}

Seed mutate_seed(const Seed& s, int k) {
  check_index(s.matrix, k);
  const int nv = s.variables[k].nvars();
  LaurentPoly pos = LaurentPoly::constant(nv, 1), neg = LaurentPoly::constant(nv, 1);
  for (int j = 0; j < s.m(); ++j) {
    const int e = s.matrix.at(j, k);
    if (e > 0) pos = pos * s.variables[j].pow(e);
    if (e < 0) neg = neg * s.variables[j].pow(-e);
  }
  Seed r;
  r.matrix = mutate_matrix(s.matrix, k);
  r.variables = s.variables;
  r.variables[k] = exact_divide(pos + neg, s.variables[k]);
  return r;
}

YSeed mutate_yseed(const YSeed& y, int k) {
  check_index(y.matrix, k);
  const int nv = y.yvars[k].nvars();
  const RationalFunction one(LaurentPoly::constant(nv, 1));
  const RationalFunction& yk = y.yvars[k];
  const RationalFunction one_plus = one + yk;
  YSeed r;
  r.matrix = mutate_matrix(y.matrix, k);
  r.yvars = y.yvars;
  for (int i = 0; i < y.matrix.cols(); ++i) {
    if (i == k) {
      r.yvars[i] = yk.inverse();
      continue;
    }
    const int bki = y.matrix.at(k, i);
    if (bki == 0) continue;
    r.yvars[i] = y.yvars[i] * yk.pow(std::max(bki, 0)) * one_plus.pow(-bki);
  }
  return r;
}

ExchangeMatrix mutate_matrix_sequence(ExchangeMatrix b, const std::vector<int>& ks) {
  for (int k : ks) b = mutate_matrix(b, k);
  return b;
}

Seed mutate_seed_sequence(Seed s, const std::vector<int>& ks) {
  for (int k : ks) s = mutate_seed(s, k);
  return s;
}

BipartiteParts bipartite_parts(const ExchangeMatrix& b) {
  BipartiteParts p;
  const int n = b.cols();
  for (int i = 0; i < n; ++i) {
    bool out = false, in = false;
    for (int j = 0; j < n; ++j) {
      out |= b.at(i, j) > 0;
      in |= b.at(i, j) < 0;
    }
    if (out && in) throw NotBipartite("vertex " + std::to_string(i + 1) + " is neither a source nor a sink");
    (in ? p.sinks : p.sources).push_back(i);
  }
  return p;
}

std::vector<int> coxeter_sequence(const ExchangeMatrix& b, int r) {
  BipartiteParts p = bipartite_parts(b);
  std::vector<int> once;
  if (r >= 0) {
    once = p.sources;
    once.insert(once.end(), p.sinks.begin(), p.sinks.end());
  } else {
    once = p.sinks;
    once.insert(once.end(), p.sources.begin(), p.sources.end());
  }
  std::vector<int> seq;
  for (int t = 0; t < std::abs(r); ++t) seq.insert(seq.end(), once.begin(), once.end());
  return seq;
}

Seed coxeter_mutation(const Seed& s, int r) { return mutate_seed_sequence(s, coxeter_sequence(s.matrix, r)); }

ExchangeMatrix coxeter_mutation(const ExchangeMatrix& b, int r) {
  return mutate_matrix_sequence(b, coxeter_sequence(b, r));
}

std::vector<int> denominator_vector(const LaurentPoly& z, int n) {
  if (z.is_zero()) throw ZeroPolynomial("denominator vector of zero");
  Exponent mins = z.min_exponents();
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) d[i] = -mins[i];
  return d;
}

std::string to_string(RootKind k) {
  switch (k) {
    case RootKind::RealRoot:
      return "RealRoot";
    case RootKind::ImaginaryRoot:
      return "ImaginaryRoot";
    default:
      return "NotARoot";
  }
}

std::vector<int64_t> null_root(const CartanMatrix& c) {
  const int n = c.size();
  // Column 0 of the adjugate spans the kernel of a corank-1 matrix.
  std::vector<int64_t> delta(n);
  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<int64_t>> minor;
    for (int r = 1; r < n; ++r) {
      std::vector<int64_t> row;
      for (int col = 0; col < n; ++col)
        if (col != j) row.push_back(c.at(r, col));
      minor.push_back(row);
    }
    __int128 m = exact_determinant(minor);
    delta[j] = static_cast<int64_t>((j % 2 ? -m : m));
  }
  int64_t g = 0;
  for (auto x : delta) g = std::gcd(g, x);
  if (g == 0) throw InvalidInput("Cartan matrix has corank above one");
  bool negative = delta[0] < 0;
  for (auto& x : delta) x = (negative ? -x : x) / g;
  for (int i = 0; i < n; ++i) {
    int64_t s = 0;
    for (int j = 0; j < n; ++j) s += c.at(i, j) * delta[j];
    if (s != 0 || delta[i] <= 0) throw InvalidInput("no positive null root");
  }
  return delta;
}

RootOracle::RootOracle(const CartanMatrix& c, int height_bound) : bound_(height_bound) {
  Classification cls = classify_cartan(c);
  if (cls.kind == CartanClass::Indefinite) throw IndefiniteType("root oracle needs finite or affine type");
  if (cls.kind == CartanClass::Affine) delta_ = cw::null_root(c);
  const int n = c.size();
  std::deque<std::vector<int64_t>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int64_t> a(n, 0);
    a[i] = 1;
    if (height_bound >= 1 && roots_.insert(a).second) queue.push_back(a);
  }
  while (!queue.empty()) {
    std::vector<int64_t> beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int64_t pairing = 0;
      for (int j = 0; j < n; ++j) pairing += c.at(i, j) * beta[j];
      if (pairing >= 0) continue;  // only height-increasing reflections
      std::vector<int64_t> next = beta;
      next[i] -= pairing;
      int64_t h = std::accumulate(next.begin(), next.end(), int64_t{0});
      if (h > height_bound) continue;
      if (roots_.insert(next).second) queue.push_back(next);
    }
  }
}

RootKind RootOracle::classify(const std::vector<int64_t>& v) const {
  if (std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; })) return RootKind::NotARoot;
  std::vector<int64_t> neg(v.size());
  for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  if (roots_.count(v) || roots_.count(neg)) return RootKind::RealRoot;
  if (!delta_.empty()) {
    // v = k delta for a nonzero integer k
    int64_t k = v[0] / delta_[0];
    bool multiple = k != 0;
    for (size_t i = 0; i < v.size() && multiple; ++i) multiple = v[i] == k * delta_[i];
    if (multiple) return RootKind::ImaginaryRoot;
  }
  return RootKind::NotARoot;
}

RootKind root_membership(const CartanMatrix& c, const std::vector<int64_t>& v, int height_bound) {
  return RootOracle(c, height_bound).classify(v);
}

}  // namespace cw
