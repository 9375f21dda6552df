#include "clusterweave/braid.hpp"
#include "clusterweave/errors.hpp"
#include "doctest.h"

using namespace cw;

namespace {

BraidWord w(int strands, std::vector<int> letters) { return BraidWord{strands, std::move(letters)}; }

// Independent permutation: applies the transpositions left to right to 0..N-1.
std::vector<int> perm_oracle(const BraidWord& b) {
  std::vector<int> p(b.strands);
  for (int i = 0; i < b.strands; ++i) p[i] = i;
  for (int g : b.letters) std::swap(p[g - 1], p[g]);
  return p;
}

}  // namespace

TEST_CASE("parsing braid words") {
  CHECK(parse_braid("s2 s1^3 s2", 3) == w(3, {2, 1, 1, 1, 2}));
  CHECK(parse_braid("  s1  ", 2) == w(2, {1}));
  CHECK(parse_braid("s2 s1^3 s2", 3).str() == "s2 s1^3 s2");
  CHECK_THROWS_AS(parse_braid("", 3), SyntaxError);
  CHECK_THROWS_AS(parse_braid("t1", 3), SyntaxError);
  CHECK_THROWS_AS(parse_braid("s1^0", 3), SyntaxError);
  CHECK_THROWS_AS(parse_braid("s1^", 3), SyntaxError);
  CHECK_THROWS_AS(parse_braid("s3", 3), GeneratorOutOfRange);
  CHECK_THROWS_AS(parse_braid("s0", 3), GeneratorOutOfRange);
  try {
    parse_braid("s1 s2 x", 3);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(std::string(e.what()).find("position 6") != std::string::npos);
  }
}

TEST_CASE("half twists") {
  CHECK(half_twist(2) == w(2, {1}));
  CHECK(half_twist(3) == w(3, {2, 1, 2}));
  CHECK(half_twist(4) == w(4, {1, 2, 1, 3, 2, 1}));
  for (int n = 2; n <= 6; ++n) {
    const BraidWord d = half_twist(n);
    CHECK(static_cast<int>(d.letters.size()) == n * (n - 1) / 2);
    std::vector<int> reversed(n);
    for (int i = 0; i < n; ++i) reversed[i] = n - 1 - i;
    CHECK(perm_oracle(d) == reversed);
    CHECK(braid_permutation(d) == perm_oracle(d));
  }
  CHECK_THROWS_AS(half_twist(7), Unsupported);
}

TEST_CASE("relations rewrite at the requested position") {
  CHECK(apply_relation(w(4, {1, 3, 2}), comm(1, 3, 0)) == w(4, {3, 1, 2}));
  CHECK(apply_relation(w(3, {1, 2, 1}), braid_rel(1, 0)) == w(3, {2, 1, 2}));
  CHECK(apply_relation(w(3, {2, 1, 2}), braid_rel(1, 0)) == w(3, {1, 2, 1}));
  CHECK(apply_relation(w(3, {1, 1, 2}), rotate(1)) == w(3, {1, 2, 1}));
  CHECK_THROWS_AS(apply_relation(w(3, {1, 2}), comm(1, 2, 0)), PatternMismatch);
  CHECK_THROWS_AS(apply_relation(w(3, {1, 1, 2}), braid_rel(1, 0)), PatternMismatch);
}

TEST_CASE("relations preserve the permutation") {
  const BraidWord a = beta_hat_affine_d(5);
  const BraidWord b = ngraph_word_affine_d(5);
  const auto r = equivalent_bounded(a, b, 1000000, true);
  REQUIRE(r.equivalent);
  BraidWord cur = a;
  for (const BraidRule& rule : r.witness) {
    const BraidWord next = apply_relation(cur, rule);
    if (rule.kind != RuleKind::CyclicRotate) CHECK(perm_oracle(next) == perm_oracle(cur));
    cur = next;
  }
  CHECK(cur == b);
}

TEST_CASE("scripted rewriting of the (3,3,3) closure") {
  const std::vector<BraidRule> script{braid_rel(1, 2),  braid_rel(1, 3),  braid_rel(1, 4), braid_rel(1, 12),
                                      braid_rel(1, 11), braid_rel(1, 10), braid_rel(1, 9)};
  CHECK(apply_relations(beta_hat_tripod(3, 3, 3), script) ==
        w(3, {2, 1, 1, 1, 1, 2, 1, 1, 1, 1, 2, 1, 1, 1, 1}));
  CHECK(ngraph_word_tripod(3, 3, 3) == w(3, {2, 1, 1, 1, 1, 2, 1, 1, 1, 1, 2, 1, 1, 1, 1}));
}

TEST_CASE("bounded equivalence") {
  CHECK(equivalent_bounded(w(3, {1, 2, 1}), w(3, {2, 1, 2}), 100, false).equivalent);
  const auto same = equivalent_bounded(w(3, {1, 2, 1}), w(3, {1, 2, 1}), 100, false);
  CHECK(same.equivalent);
  CHECK(same.witness.empty());
  CHECK_FALSE(equivalent_bounded(w(3, {1, 1, 2}), w(3, {1, 2, 2}), 1000, false).equivalent);
  CHECK(equivalent_bounded(w(3, {1, 1, 2}), w(3, {1, 2, 1}), 1000, true).equivalent);
  CHECK_THROWS_AS(equivalent_bounded(w(3, {1}), w(3, {1, 2}), 10, false), LengthMismatch);
  CHECK_THROWS_AS(equivalent_bounded(w(3, {1}), w(4, {1}), 10, false), LengthMismatch);
}

TEST_CASE("bricks and brick quivers") {
  const BraidWord d4 = beta_affine_d(4);
  CHECK(d4 == w(4, {3, 2, 2, 3, 1, 2, 2, 1}));
  CHECK(bricks(d4).size() == 5);
  const ExchangeMatrix q = brick_quiver(d4);
  CHECK(q.rows() == 5);
  CHECK(is_acyclic(q));
  CHECK(classify_cartan(cartan_counterpart(q)).name() == "D~4");
  // A star: one brick meets all four others.
  int center = 0;
  for (int i = 0; i < 5; ++i) {
    int deg = 0;
    for (int j = 0; j < 5; ++j) deg += q.at(i, j) != 0;
    center += deg == 4;
  }
  CHECK(center == 1);
  CHECK(brick_quiver(w(2, {1, 1, 1})) == ExchangeMatrix::from_rows({{0, 1}, {-1, 0}}));
  CHECK_THROWS_AS(brick_quiver(w(3, {1, 1})), LevelUnused);
  CHECK(cyclic_equal(w(3, {1, 2, 2}), w(3, {2, 1, 2})));
  CHECK_FALSE(cyclic_equal(w(3, {1, 1, 2}), w(3, {1, 2})));
}
