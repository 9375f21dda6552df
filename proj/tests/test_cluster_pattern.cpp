#include <random>

#include "clusterweave/errors.hpp"
#include "clusterweave/exchange_graph.hpp"
#include "clusterweave/seed.hpp"
#include "doctest.h"

using namespace cw;

namespace {

LaurentPoly poly(int nvars, const std::vector<std::pair<std::vector<int>, int64_t>>& terms) {
  std::vector<Term> ts;
  for (const auto& [e, c] : terms) ts.push_back({e, c});
  return LaurentPoly::from_terms(nvars, ts);
}

}  // namespace

TEST_CASE("Laurent polynomials keep a canonical form") {
  const auto a = poly(2, {{{1, 0}, 2}, {{0, 1}, 1}, {{1, 0}, -2}});
  CHECK(a == LaurentPoly::variable(2, 1));
  CHECK(poly(2, {{{0, 0}, 1}, {{0, 1}, 1}}).str() == "1 + x2");
  CHECK((LaurentPoly::variable(2, 0) * LaurentPoly::variable(2, 0)).terms().front().exp == Exponent{2, 0});
  CHECK_THROWS_AS(exact_divide(LaurentPoly::constant(1, 1), poly(1, {{{0}, 1}, {{1}, 1}})), NonLaurentResult);
  CHECK_THROWS_AS(exact_divide(LaurentPoly::constant(1, 1), LaurentPoly(1)), ZeroPolynomial);
}

TEST_CASE("coefficient overflow is reported instead of wrapping") {
  const auto big = LaurentPoly::constant(1, int64_t{1} << 62);
  CHECK_THROWS_AS(big + big, ArithmeticOverflow);
}

TEST_CASE("mutate_matrix follows the mutation formula") {
  CHECK(mutate_matrix(ExchangeMatrix::from_rows({{0, 1}, {-3, 0}}), 0) == ExchangeMatrix::from_rows({{0, -1}, {3, 0}}));
  // Star with all arrows into the center: mutating the center reverses them all.
  const auto star = ExchangeMatrix::from_rows(
      {{0, -1, -1, -1, -1}, {1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}});
  ExchangeMatrix reversed = star;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) reversed.at(i, j) = -star.at(i, j);
  CHECK(mutate_matrix(star, 0) == reversed);
  CHECK_THROWS_AS(mutate_matrix(star, 5), IndexOutOfRange);
}

TEST_CASE("rank 2 example: the two mutations give the printed variables") {
  const Seed s0 = Seed::initial(ExchangeMatrix::from_rows({{0, 1}, {-3, 0}}));
  const Seed s1 = mutate_seed(s0, 0);
  CHECK(s1.variables[0] == poly(2, {{{-1, 0}, 1}, {{-1, 3}, 1}}));
  CHECK(s1.variables[1] == s0.variables[1]);
  const Seed s2 = mutate_seed(s1, 1);
  CHECK(s2.variables[1] == poly(2, {{{-1, -1}, 1}, {{0, -1}, 1}, {{-1, 2}, 1}}));
}

TEST_CASE("A2: five alternating mutations return to the initial seed class") {
  const Seed s0 = Seed::initial(ExchangeMatrix::from_rows({{0, 1}, {-1, 0}}));
  std::vector<LaurentPoly> seen;
  Seed s = s0;
  for (int step = 0; step < 5; ++step) {
    s = mutate_seed(s, step % 2);
    seen.push_back(s.variables[step % 2]);
  }
  CHECK(canonical_form(s) == canonical_form(s0));
  CHECK(seen[0] == poly(2, {{{-1, 0}, 1}, {{-1, 1}, 1}}));
  CHECK(seen[1] == poly(2, {{{-1, -1}, 1}, {{0, -1}, 1}, {{-1, 0}, 1}}));
  CHECK(seen[2] == poly(2, {{{0, -1}, 1}, {{1, -1}, 1}}));
}

TEST_CASE("mutating twice at the same index is the identity on seeds") {
  std::mt19937 rng(11);
  const Seed s0 = Seed::initial(bipartite_matrix(parse_dynkin("D~4")));
  for (int trial = 0; trial < 20; ++trial) {
    Seed s = s0;
    for (int step = 0; step < 4; ++step) s = mutate_seed(s, rng() % 5);
    const int k = rng() % 5;
    CHECK(mutate_seed(mutate_seed(s, k), k) == s);
  }
}

TEST_CASE("frozen variables never change") {
  const Seed s0 = Seed::principal_coefficients(ExchangeMatrix::from_rows({{0, 1}, {-1, 0}}));
  CHECK(s0.m() == 4);
  const Seed s = mutate_seed_sequence(s0, {0, 1, 0});
  CHECK(s.variables[2] == s0.variables[2]);
  CHECK(s.variables[3] == s0.variables[3]);
  // With principal coefficients the first mutation gives (x3 + x2)/x1.
  CHECK(mutate_seed(s0, 0).variables[0] == poly(4, {{{-1, 0, 1, 0}, 1}, {{-1, 1, 0, 0}, 1}}));
}

TEST_CASE("Y-seed mutation") {
  const auto b = ExchangeMatrix::from_rows({{0, 1}, {-1, 0}});
  const YSeed y0 = YSeed::initial(b);
  const YSeed y1 = mutate_yseed(y0, 0);
  const LaurentPoly y1v = LaurentPoly::variable(2, 0), y2v = LaurentPoly::variable(2, 1);
  CHECK(y1.yvars[0] == RationalFunction(LaurentPoly::constant(2, 1), y1v));
  CHECK(y1.yvars[1] == RationalFunction(y1v * y2v, LaurentPoly::constant(2, 1) + y1v));
  CHECK(mutate_yseed(y1, 0) == y0);

  // Building y from a seed commutes with mutation.
  const Seed s0 = Seed::initial(b);
  for (int k = 0; k < 2; ++k) CHECK(YSeed::from_seed(mutate_seed(s0, k)) == mutate_yseed(YSeed::from_seed(s0), k));
}

TEST_CASE("Coxeter mutation composes the part mutations and fixes the matrix") {
  const auto b = bipartite_matrix(parse_dynkin("D~4"));
  const Seed s0 = Seed::initial(b);
  CHECK(coxeter_mutation(s0, 0) == s0);
  const auto parts = bipartite_parts(b);
  Seed by_hand = s0;
  for (int k : parts.sources) by_hand = mutate_seed(by_hand, k);
  for (int k : parts.sinks) by_hand = mutate_seed(by_hand, k);
  CHECK(coxeter_mutation(s0, 1) == by_hand);
  CHECK(by_hand.matrix == b);
  CHECK(coxeter_mutation(coxeter_mutation(s0, 2), -2) == s0);
  CHECK_THROWS_AS(coxeter_mutation(ExchangeMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}), 1), NotBipartite);
}

TEST_CASE("denominator vectors read off minimal exponents") {
  CHECK(denominator_vector(LaurentPoly::variable(2, 0), 2) == std::vector<int>{-1, 0});
  // (1 + x2)/x1: x2 appears with exponents 0 and 1, so its entry is 0.
  CHECK(denominator_vector(poly(2, {{{-1, 0}, 1}, {{-1, 1}, 1}}), 2) == std::vector<int>{1, 0});
  CHECK(denominator_vector(poly(2, {{{-1, -1}, 1}, {{0, -1}, 1}, {{-1, 2}, 1}}), 2) == std::vector<int>{1, 1});
  CHECK_THROWS_AS(denominator_vector(LaurentPoly(2), 2), ZeroPolynomial);
}

TEST_CASE("root membership") {
  const auto a2 = catalog_cartan(parse_dynkin("A2"));
  CHECK(root_membership(a2, {1, 1}, 30) == RootKind::RealRoot);
  CHECK(root_membership(a2, {2, 0}, 30) == RootKind::NotARoot);
  // D~4 with the center first: the null root is (2,1,1,1,1).
  const auto d4 = CartanMatrix::from_rows(
      {{2, -1, -1, -1, -1}, {-1, 2, 0, 0, 0}, {-1, 0, 2, 0, 0}, {-1, 0, 0, 2, 0}, {-1, 0, 0, 0, 2}});
  CHECK(null_root(d4) == std::vector<int64_t>{2, 1, 1, 1, 1});
  CHECK(root_membership(d4, {2, 1, 1, 1, 1}, 30) == RootKind::ImaginaryRoot);
  CHECK(root_membership(d4, {3, 2, 1, 1, 1}, 30) == RootKind::RealRoot);
  CHECK(root_membership(d4, {0, 1, 1, 0, 0}, 30) == RootKind::NotARoot);
  CHECK_THROWS_AS(root_membership(CartanMatrix::from_rows({{2, -3}, {-3, 2}}), {1, 1}, 30), IndefiniteType);
}

TEST_CASE("Laurent positivity along random paths from D~4 and E~6") {
  std::mt19937 rng(3);
  for (const char* t : {"D~4", "E~6"}) {
    const Seed s0 = Seed::initial(bipartite_matrix(parse_dynkin(t)));
    for (int trial = 0; trial < 10; ++trial) {
      Seed s = s0;
      for (int step = 0; step < 8; ++step) {
        s = mutate_seed(s, rng() % s.n());
        for (const auto& v : s.variables) CHECK(v.has_nonnegative_coefficients());
      }
    }
  }
}
