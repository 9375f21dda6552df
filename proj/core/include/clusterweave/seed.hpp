#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "clusterweave/exchange_matrix.hpp"
#include "clusterweave/laurent.hpp"

namespace cw {

// A seed: m cluster variables (the last m - n frozen) and an m x n exchange
// matrix. Variables are Laurent polynomials in the m initial variables.
struct Seed {
  std::vector<LaurentPoly> variables;
  ExchangeMatrix matrix;

  int n() const { return matrix.cols(); }
  int m() const { return matrix.rows(); }

  // Initial seed with cluster x_1..x_m.
  static Seed initial(const ExchangeMatrix& b);
  // Principal coefficients: stacks the identity below the principal part.
  static Seed principal_coefficients(const ExchangeMatrix& b);

  friend bool operator==(const Seed& a, const Seed& b) {
    return a.matrix == b.matrix && a.variables == b.variables;
  }
};

// A Y-seed: n fractions and an exchange matrix.
struct YSeed {
  std::vector<RationalFunction> yvars;
  ExchangeMatrix matrix;

  // y_j as independent generators y_1..y_n.
  static YSeed initial(const ExchangeMatrix& b);
  // y_j = prod_i x_i^{b_ij} over all m rows, in the seed's variables.
  static YSeed from_seed(const Seed& s);

  friend bool operator==(const YSeed& a, const YSeed& b) { return a.matrix == b.matrix && a.yvars == b.yvars; }
};

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k);
Seed mutate_seed(const Seed& s, int k);
YSeed mutate_yseed(const YSeed& y, int k);

// Applies mutations in list order (the first index is applied first).
ExchangeMatrix mutate_matrix_sequence(ExchangeMatrix b, const std::vector<int>& ks);
Seed mutate_seed_sequence(Seed s, const std::vector<int>& ks);

// Sources (all arrows leave) and sinks of the principal part; throws
// NotBipartite when some vertex is neither. Isolated vertices count as sources.
struct BipartiteParts {
  std::vector<int> sources;  // I_+
  std::vector<int> sinks;    // I_-
};
BipartiteParts bipartite_parts(const ExchangeMatrix& b);

// mu_Q = mu_- mu_+ (sources first, then sinks), each part in ascending
// order; r < 0 applies (mu_+ mu_-)^{-r}.
Seed coxeter_mutation(const Seed& s, int r);
ExchangeMatrix coxeter_mutation(const ExchangeMatrix& b, int r);
// The index sequence realizing mu_Q^r, for certificates and replay.
std::vector<int> coxeter_sequence(const ExchangeMatrix& b, int r);

std::vector<int> denominator_vector(const LaurentPoly& z, int n);

enum class RootKind { RealRoot, ImaginaryRoot, NotARoot };
std::string to_string(RootKind k);

// Positive real roots up to a height bound, generated breadth-first from the
// simple roots by simple reflections s_i(beta) = beta - (sum_j c_ij beta_j) alpha_i.
// For affine types also carries the null root delta.
class RootOracle {
 public:
  RootOracle(const CartanMatrix& c, int height_bound);
  RootKind classify(const std::vector<int64_t>& v) const;
  const std::set<std::vector<int64_t>>& positive_real_roots() const { return roots_; }
  const std::vector<int64_t>& null_root() const { return delta_; }  // empty if finite
  bool affine() const { return !delta_.empty(); }

 private:
  int bound_;
  std::set<std::vector<int64_t>> roots_;
  std::vector<int64_t> delta_;
};

RootKind root_membership(const CartanMatrix& c, const std::vector<int64_t>& v, int height_bound);

// Gcd-normalized positive kernel vector of an affine Cartan matrix.
std::vector<int64_t> null_root(const CartanMatrix& c);

}  // namespace cw
