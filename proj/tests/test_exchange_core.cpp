#include <algorithm>
#include <numeric>
#include <random>

#include "clusterweave/errors.hpp"
#include "clusterweave/exchange_matrix.hpp"
#include "clusterweave/seed.hpp"
#include "doctest.h"

using namespace cw;

namespace {

// Independent definiteness oracle: Bareiss determinants of a symmetric
// integer matrix, with Sylvester's criterion for positive definiteness.
__int128 det(std::vector<std::vector<__int128>> a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  __int128 prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<std::vector<__int128>> sub(const std::vector<std::vector<__int128>>& s, const std::vector<size_t>& idx) {
  std::vector<std::vector<__int128>> out(idx.size(), std::vector<__int128>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) out[i][j] = s[idx[i]][idx[j]];
  return out;
}

bool positive_definite(const std::vector<std::vector<__int128>>& s) {
  std::vector<size_t> idx;
  for (size_t k = 0; k < s.size(); ++k) {
    idx.push_back(k);
    if (det(sub(s, idx)) <= 0) return false;
  }
  return true;
}

// Oracle verdict for a connected symmetric Cartan matrix.
CartanClass oracle_class(const CartanMatrix& c) {
  const size_t n = c.size();
  std::vector<std::vector<__int128>> s(n, std::vector<__int128>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) s[i][j] = c.at(i, j);
  if (positive_definite(s)) return CartanClass::Finite;
  if (det(s) != 0) return CartanClass::Indefinite;
  for (size_t drop = 0; drop < n; ++drop) {
    std::vector<size_t> idx;
    for (size_t k = 0; k < n; ++k)
      if (k != drop) idx.push_back(k);
    if (!positive_definite(sub(s, idx))) return CartanClass::Indefinite;
  }
  return CartanClass::Affine;
}

bool connected(const CartanMatrix& c) {
  std::vector<int> seen{0};
  for (size_t i = 0; i < seen.size(); ++i)
    for (int j = 0; j < c.size(); ++j)
      if (c.at(seen[i], j) != 0 && std::find(seen.begin(), seen.end(), j) == seen.end()) seen.push_back(j);
  return static_cast<int>(seen.size()) == c.size();
}

}  // namespace

TEST_CASE("skew_symmetrizer finds the normalized symmetrizer or reports none") {
  auto d = skew_symmetrizer(ExchangeMatrix::from_rows({{0, 1}, {-3, 0}}));
  REQUIRE(d);
  CHECK(*d == std::vector<int64_t>{3, 1});
  CHECK(*skew_symmetrizer(ExchangeMatrix::from_rows({{0, 1}, {-1, 0}})) == std::vector<int64_t>{1, 1});
  CHECK_FALSE(skew_symmetrizer(ExchangeMatrix::from_rows({{0, 1}, {1, 0}})));
}

TEST_CASE("symmetrizer satisfies d_i b_ij = -d_j b_ji on the folded G~2 matrix") {
  const auto b = ExchangeMatrix::from_rows({{0, 1, 0}, {-3, 0, -1}, {0, 1, 0}});
  const auto d = skew_symmetrizer(b);
  REQUIRE(d);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK((*d)[i] * b.at(i, j) == -(*d)[j] * b.at(j, i));
}

TEST_CASE("cartan_counterpart applies c_ij = -|b_ij|") {
  CHECK(cartan_counterpart(ExchangeMatrix::from_rows({{0, 1}, {-3, 0}})) ==
        CartanMatrix::from_rows({{2, -1}, {-3, 2}}));
  CHECK(cartan_counterpart(ExchangeMatrix(2, 2)) == CartanMatrix::from_rows({{2, 0}, {0, 2}}));
  const auto g2 = cartan_counterpart(ExchangeMatrix::from_rows({{0, 1, 0}, {-3, 0, -1}, {0, 1, 0}}));
  CHECK(g2 == CartanMatrix::from_rows({{2, -1, 0}, {-3, 2, -1}, {0, -1, 2}}));
  // The printed G~2 matrix is the same up to reversing the index order.
  CHECK(g2.permuted({2, 1, 0}) == CartanMatrix::from_rows({{2, -1, 0}, {-1, 2, -3}, {0, -1, 2}}));
}

TEST_CASE("cartan_counterpart is unchanged by mutating twice at the same index") {
  const auto b = bipartite_matrix(parse_dynkin("E~6"));
  for (int k = 0; k < b.cols(); ++k) CHECK(cartan_counterpart(mutate_matrix(mutate_matrix(b, k), k)) == cartan_counterpart(b));
}

TEST_CASE("classify_cartan names finite, affine and twisted types") {
  CHECK(classify_cartan(CartanMatrix::from_rows({{2, -1}, {-1, 2}})).name() == "A2");
  CHECK(classify_cartan(CartanMatrix::from_rows({{2, -1, 0}, {-3, 2, -1}, {0, -1, 2}})).name() == "G~2");
  const auto a22 = classify_cartan(CartanMatrix::from_rows({{2, -4}, {-1, 2}}));
  CHECK(a22.kind == CartanClass::Affine);
  CHECK(a22.name() == "A2^(2)");
  CHECK(classify_cartan(CartanMatrix::from_rows({{2, -3}, {-3, 2}})).kind == CartanClass::Indefinite);
  CHECK(classify_cartan(CartanMatrix::from_rows({{2, 0}, {0, 2}})).name() == "A1 x A1");
}

TEST_CASE("every catalog type classifies as itself") {
  for (const char* t : {"A1", "A5", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2", "A~3", "B~4", "C~3", "D~4", "D~7",
                        "E~6", "E~7", "E~8", "F~4", "G~2", "A2^(2)", "A5^(2)", "D4^(2)", "E6^(2)", "D4^(3)"}) {
    CAPTURE(t);
    const auto c = classify_cartan(catalog_cartan(parse_dynkin(t)));
    REQUIRE(c.components.size() == 1);
    CHECK(c.components[0] == parse_dynkin(t));
  }
}

TEST_CASE("classify_cartan agrees with the determinant oracle on permuted catalog matrices and perturbations") {
  std::mt19937 rng(7);
  const std::vector<std::string> simply_laced{"A4", "D5", "E6", "E7", "E8", "A~4", "D~4", "D~6", "E~6", "E~7", "E~8"};
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto c = catalog_cartan(parse_dynkin(simply_laced[trial % simply_laced.size()]));
    std::vector<int> perm(c.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    c = c.permuted(perm);
    CHECK(classify_cartan(c).kind == oracle_class(c));
    // Perturbation: change one symmetric off-diagonal pair.
    std::uniform_int_distribution<int> pick(0, c.size() - 1), weight(0, 2);
    int i = pick(rng), j = pick(rng);
    if (i == j) j = (i + 1) % c.size();
    const int w = -weight(rng);
    c.at(i, j) = c.at(j, i) = w;
    if (!connected(c)) continue;
    CAPTURE(c.str());
    CHECK(classify_cartan(c).kind == oracle_class(c));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("is_acyclic detects directed cycles") {
  CHECK(is_acyclic(bipartite_matrix(parse_dynkin("D~4"))));
  CHECK_FALSE(is_acyclic(ExchangeMatrix::from_rows({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}})));
  CHECK(is_acyclic(ExchangeMatrix::from_rows({{0, 1}, {-3, 0}})));
}

TEST_CASE("parse_dynkin accepts the documented spellings") {
  CHECK(parse_dynkin("D~4") == parse_dynkin("Dt4"));
  CHECK(parse_dynkin("D4t") == parse_dynkin("D~4"));
  CHECK(parse_dynkin("E6_2") == parse_dynkin("E6^(2)"));
  CHECK_THROWS_AS(parse_dynkin("Q3"), InvalidInput);
}

TEST_CASE("bipartite_matrix alternates sources and sinks") {
  const auto b = bipartite_matrix(parse_dynkin("D~4"));
  const auto parts = bipartite_parts(b);
  CHECK(parts.sources.size() + parts.sinks.size() == 5);
  CHECK(classify_cartan(cartan_counterpart(b)).name() == "D~4");
}
