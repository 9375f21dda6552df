#include "clusterweave/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "clusterweave/errors.hpp"

namespace cw {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("coefficient addition");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("coefficient multiplication");
  return r;
}

bool term_desc(const Term& a, const Term& b) { return grlex_compare(a.exp, b.exp) > 0; }

Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent negated(const Exponent& a) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

void require_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw InvalidInput("Laurent polynomials over different variable sets");
}

// Divides out the monomial gcd of the terms, leaving a polynomial that no
// variable divides.
LaurentPoly strip_monomial(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return p.times_monomial(negated(p.min_exponents()));
}

// ---------------------------------------------------------------------------
// Recursive multivariate gcd over Z (primitive polynomial remainder
// sequences). Inputs are polynomials with nonnegative exponents.

using Univariate = std::vector<LaurentPoly>;  // coefficient of v^d at index d

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

int top_variable(const LaurentPoly& a) {
  int v = -1;
  for (const auto& t : a.terms())
    for (int i = a.nvars() - 1; i > v; --i)
      if (t.exp[i] != 0) {
        v = i;
        break;
      }
  return v;
}

Univariate to_univariate(const LaurentPoly& p, int v) {
  Univariate u;
  std::vector<std::vector<Term>> buckets;
  for (const auto& t : p.terms()) {
    int d = t.exp[v];
    if (d >= static_cast<int>(buckets.size())) buckets.resize(d + 1);
    Term s = t;
    s.exp[v] = 0;
    buckets[d].push_back(std::move(s));
  }
  for (auto& b : buckets) u.push_back(LaurentPoly::from_terms(p.nvars(), std::move(b)));
  while (!u.empty() && u.back().is_zero()) u.pop_back();
  return u;
}

LaurentPoly from_univariate(const Univariate& u, int v, int nvars) {
  LaurentPoly r(nvars);
  Exponent e(nvars, 0);
  for (size_t d = 0; d < u.size(); ++d) {
    e[v] = static_cast<int>(d);
    r += u[d].times_monomial(e);
  }
  return r;
}

LaurentPoly univariate_content(const Univariate& u, int nvars) {
  LaurentPoly g(nvars);
  for (const auto& c : u) {
    g = poly_gcd(g, c);
    if (g.is_monomial() && g.leading().coef == 1) break;
  }
  return g;
}

Univariate divide_coefficients(const Univariate& u, const LaurentPoly& c) {
  Univariate r;
  for (const auto& x : u) r.push_back(exact_divide(x, c));
  return r;
}

// Pseudo-remainder of a by b (both nonempty, deg a >= deg b).
Univariate pseudo_remainder(Univariate a, const Univariate& b, int nvars) {
  const size_t db = b.size() - 1;
  const LaurentPoly& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const size_t shift = a.size() - 1 - db;
    LaurentPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (size_t i = 0; i <= db; ++i) a[i + shift] = a[i + shift] - la * b[i];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  (void)nvars;
  return a;
}

LaurentPoly normalize_sign(LaurentPoly p) {
  if (!p.is_zero() && p.leading().coef < 0) return -p;
  return p;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  const int n = a.nvars();
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  int v = std::max(top_variable(a), top_variable(b));
  if (v < 0) {
    return LaurentPoly::constant(n, std::gcd(a.leading().coef, b.leading().coef));
  }
  Univariate ua = to_univariate(a, v), ub = to_univariate(b, v);
  LaurentPoly ca = univariate_content(ua, n), cb = univariate_content(ub, n);
  LaurentPoly g = poly_gcd(ca, cb);
  ua = divide_coefficients(ua, ca);
  ub = divide_coefficients(ub, cb);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (true) {
    if (ub.size() == 1) {  // nonzero constant in v: primitive gcd is 1
      ua = Univariate{LaurentPoly::constant(n, 1)};
      break;
    }
    Univariate r = pseudo_remainder(ua, ub, n);
    ua = std::move(ub);
    if (r.empty()) break;
    ub = divide_coefficients(r, univariate_content(r, n));
  }
  return normalize_sign(g * from_univariate(ua, v, n));
}

}  // namespace

int grlex_compare(const Exponent& a, const Exponent& b) {
  long da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::constant(int nvars, int64_t c) {
  LaurentPoly p(nvars);
  if (c != 0) p.terms_.push_back({Exponent(nvars, 0), c});
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw IndexOutOfRange("variable index " + std::to_string(i));
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(e);
}

LaurentPoly LaurentPoly::monomial(const Exponent& exp, int64_t coef) {
  LaurentPoly p(static_cast<int>(exp.size()));
  if (coef != 0) p.terms_.push_back({exp, coef});
  return p;
}

LaurentPoly LaurentPoly::from_terms(int nvars, std::vector<Term> terms) {
  LaurentPoly p(nvars);
  for (const auto& t : terms)
    if (static_cast<int>(t.exp.size()) != nvars) throw InvalidInput("exponent length mismatch");
  std::sort(terms.begin(), terms.end(), term_desc);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coef = checked_add(p.terms_.back().coef, t.coef);
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Exponent LaurentPoly::min_exponents() const {
  Exponent m(nvars_, 0);
  if (terms_.empty()) return m;
  m = terms_[0].exp;
  for (const auto& t : terms_)
    for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], t.exp[i]);
  return m;
}

Exponent LaurentPoly::max_exponents() const {
  Exponent m(nvars_, 0);
  if (terms_.empty()) return m;
  m = terms_[0].exp;
  for (const auto& t : terms_)
    for (int i = 0; i < nvars_; ++i) m[i] = std::max(m[i], t.exp[i]);
  return m;
}

bool LaurentPoly::is_polynomial() const {
  for (int x : min_exponents())
    if (x < 0) return false;
  return true;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coef > 0; });
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coef = checked_mul(t.coef, -1);
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_vars(a, b);
  LaurentPoly r(a.nvars_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c = i == a.terms_.size()   ? -1
            : j == b.terms_.size() ? 1
                                   : grlex_compare(a.terms_[i].exp, b.terms_[j].exp);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      int64_t s = checked_add(a.terms_[i].coef, b.terms_[j].coef);
      if (s != 0) r.terms_.push_back({a.terms_[i].exp, s});
      ++i;
      ++j;
    }
  }
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_vars(a, b);
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.nvars_);
  if (b.is_monomial()) return a.times_monomial(b.leading().exp, b.leading().coef);
  if (a.is_monomial()) return b.times_monomial(a.leading().exp, a.leading().coef);
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.push_back({add_exp(s.exp, t.exp), checked_mul(s.coef, t.coef)});
  return LaurentPoly::from_terms(a.nvars_, std::move(out));
}

LaurentPoly LaurentPoly::times_monomial(const Exponent& exp, int64_t coef) const {
  if (coef == 0) return LaurentPoly(nvars_);
  LaurentPoly r(nvars_);
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the graded-lex order.
  for (const auto& t : terms_) r.terms_.push_back({add_exp(t.exp, exp), checked_mul(t.coef, coef)});
  return r;
}

LaurentPoly LaurentPoly::scaled(int64_t c) const { return times_monomial(Exponent(nvars_, 0), c); }

LaurentPoly LaurentPoly::divided_by_integer(int64_t c) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coef /= c;
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial() || std::abs(leading().coef) != 1)
      throw NonLaurentResult("negative power of a non-unit " + str());
    Exponent x = leading().exp;
    for (auto& v : x) v *= -e;
    return monomial(negated(x), (-e) % 2 ? leading().coef : 1);
  }
  LaurentPoly result = constant(nvars_, 1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

int64_t LaurentPoly::content() const {
  int64_t g = 0;
  for (const auto& t : terms_) g = std::gcd(g, t.coef);
  return g;
}

int LaurentPoly::compare(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_ ? -1 : 1;
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = grlex_compare(a.terms_[i].exp, b.terms_[i].exp);
    if (c) return c;
    if (a.terms_[i].coef != b.terms_[i].coef) return a.terms_[i].coef < b.terms_[i].coef ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

uint64_t LaurentPoly::hash() const {
  uint64_t h = 1469598103934665603ULL ^ static_cast<uint64_t>(nvars_);
  auto mix = [&h](uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 1099511628211ULL;
  };
  for (const auto& t : terms_) {
    for (int x : t.exp) mix(static_cast<uint64_t>(static_cast<int64_t>(x)));
    mix(static_cast<uint64_t>(t.coef));
  }
  return h;
}

namespace {

std::string monomial_string(const Exponent& e) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  Exponent mins = min_exponents();
  Exponent shift(nvars_, 0), den(nvars_, 0);
  int den_factors = 0;
  for (int i = 0; i < nvars_; ++i)
    if (mins[i] < 0) {
      shift[i] = -mins[i];
      den[i] = -mins[i];
      ++den_factors;
    }
  LaurentPoly num = times_monomial(shift);
  std::ostringstream os;
  // numerator in ascending order reads like "1 + x2^3"
  bool first = true;
  for (auto it = num.terms_.rbegin(); it != num.terms_.rend(); ++it) {
    int64_t c = it->coef;
    std::string mono = monomial_string(it->exp);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    int64_t ac = c < 0 ? -c : c;
    if (mono.empty()) {
      os << ac;
    } else {
      if (ac != 1) os << ac << '*';
      os << mono;
    }
    first = false;
  }
  std::string n = os.str();
  if (den_factors == 0) return n;
  if (num.terms_.size() > 1) n = "(" + n + ")";
  std::string d = monomial_string(den);
  if (den_factors > 1 || d.find('^') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

// ---------------------------------------------------------------------------
// Division and gcd

bool try_exact_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient) {
  require_same_vars(a, b);
  if (b.is_zero()) throw ZeroPolynomial("division by zero");
  const int n = a.nvars();
  if (a.is_zero()) {
    quotient = LaurentPoly(n);
    return true;
  }
  if (b.is_monomial()) {
    const int64_t c = b.leading().coef;
    for (const auto& t : a.terms())
      if (t.coef % c != 0) return false;
    quotient = a.times_monomial(negated(b.leading().exp)).divided_by_integer(c);
    return true;
  }
  Exponent amin = a.min_exponents(), bmin = b.min_exponents();
  LaurentPoly rem = a.times_monomial(negated(amin));
  LaurentPoly div = b.times_monomial(negated(bmin));
  const Term lead = div.leading();
  std::vector<Term> q;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading();
    Exponent e(n);
    for (int i = 0; i < n; ++i) {
      e[i] = lt.exp[i] - lead.exp[i];
      if (e[i] < 0) return false;
    }
    if (lt.coef % lead.coef != 0) return false;
    int64_t c = lt.coef / lead.coef;
    q.push_back({e, c});
    rem = rem - div.times_monomial(e, c);
  }
  Exponent shift(n);
  for (int i = 0; i < n; ++i) shift[i] = amin[i] - bmin[i];
  quotient = LaurentPoly::from_terms(n, std::move(q)).times_monomial(shift);
  return true;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly q;
  if (!try_exact_divide(a, b, q)) throw NonLaurentResult("(" + a.str() + ") / (" + b.str() + ") is not Laurent");
  return q;
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_vars(a, b);
  return poly_gcd(strip_monomial(a), strip_monomial(b));
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(const LaurentPoly& num)
    : num_(num), den_(LaurentPoly::constant(num.nvars(), 1)) {}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  require_same_vars(num, den);
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw ZeroPolynomial("zero denominator");
  const int n = num_.nvars();
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(n, 1);
    return;
  }
  Exponent shift = negated(den_.min_exponents());
  den_ = den_.times_monomial(shift);
  num_ = num_.times_monomial(shift);
  LaurentPoly g = laurent_gcd(num_, den_);
  if (!(g == LaurentPoly::constant(n, 1))) {
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
  }
  if (den_.leading().coef < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw ZeroPolynomial("inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction r(LaurentPoly::constant(nvars(), 1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string RationalFunction::str() const {
  if (den_ == LaurentPoly::constant(nvars(), 1)) return num_.str();
  // Clear the numerator's monomial denominator into the displayed denominator.
  Exponent shift(nvars(), 0);
  Exponent mins = num_.min_exponents();
  for (int i = 0; i < nvars(); ++i) shift[i] = mins[i] < 0 ? -mins[i] : 0;
  LaurentPoly top = num_.times_monomial(shift);
  std::string n = top.str(), d = den_.str();
  if (top.terms().size() > 1) n = "(" + n + ")";
  if (den_.terms().size() > 1) d = "(" + d + ")";
  LaurentPoly mono = LaurentPoly::monomial(shift);
  if (!(mono == LaurentPoly::constant(nvars(), 1))) {
    d = "(" + mono.str() + "*" + d + ")";
  } else if (den_.terms().size() == 1 && d.find('*') != std::string::npos) {
    d = "(" + d + ")";
  }
  return n + "/" + d;
}

}  // namespace cw
