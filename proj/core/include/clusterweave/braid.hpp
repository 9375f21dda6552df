#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "clusterweave/exchange_matrix.hpp"

namespace cw {

// Positive braid word on `strands` strands; letters are generator indices
// 1..strands-1 (sigma_i).
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  std::string str() const;  // "s2 s1^3 s2"
  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands == b.strands && a.letters == b.letters;
  }
};

// Grammar: word := term+ ; term := "s" INT ("^" INT)? ; whitespace separated,
// exponents >= 1. Throws SyntaxError (with character position) and
// GeneratorOutOfRange.
BraidWord parse_braid(const std::string& text, int strands);

BraidWord half_twist(int strands);  // 2 <= strands <= 6

// Concatenation helper.
BraidWord concat(const std::vector<BraidWord>& parts);

enum class RuleKind { Comm, BraidRel, CyclicRotate };

struct BraidRule {
  RuleKind kind = RuleKind::Comm;
  int i = 0;    // Comm: first letter; BraidRel: lower generator of the triple
  int j = 0;    // Comm: second letter
  int pos = 0;  // zero-based position of the pattern
  int k = 0;    // CyclicRotate: letters moved from the front to the back
  std::string str() const;
  friend bool operator==(const BraidRule& a, const BraidRule& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j && a.pos == b.pos && a.k == b.k;
  }
};

BraidRule comm(int i, int j, int pos);
BraidRule braid_rel(int i, int pos);
BraidRule rotate(int k);

// Comm(i,j,pos): letters (i,j) with |i-j| >= 2 at pos become (j,i).
// BraidRel(i,pos): (i,i+1,i) <-> (i+1,i,i+1) at pos, either direction.
// CyclicRotate(k): moves the first k letters (mod length) to the end.
BraidWord apply_relation(const BraidWord& w, const BraidRule& rule);
BraidWord apply_relations(BraidWord w, const std::vector<BraidRule>& rules);

struct EquivalenceResult {
  bool equivalent = false;
  std::vector<BraidRule> witness;  // replays w1 -> w2
  size_t expanded = 0;
};

// Bidirectional breadth-first search over relation applications (plus
// rotation by one letter either way when cyclic), expanding at most
// `budget` words in total.
EquivalenceResult equivalent_bounded(const BraidWord& w1, const BraidWord& w2, size_t budget, bool cyclic);

// Permutation image in the symmetric group (sigma_i swaps i and i+1).
std::vector<int> braid_permutation(const BraidWord& w);

struct Brick {
  int level = 0;  // generator index
  int left = 0;   // 1-based occurrence positions bounding the brick
  int right = 0;
};

// Bricks ordered by level, then left to right.
std::vector<Brick> bricks(const BraidWord& w);

// Brick quiver: consecutive bricks on a level joined left to right; bricks
// on adjacent levels joined when exactly one endpoint of one lies strictly
// inside the other, oriented from the lower level to the higher level.
ExchangeMatrix brick_quiver(const BraidWord& w);

// beta(D~n) = s3 s2 s2 s3 s2^(n-4) s1 s2 s2 s1 and beta(a,b,c) = s1 s2^a s1^(b-1) s2^c.
BraidWord beta_affine_d(int n);
BraidWord beta_tripod(int a, int b, int c);
// Closures with half twists: Delta4 beta(D~n) Delta4 and Delta3 beta(a,b,c) Delta3.
BraidWord beta_hat_affine_d(int n);
BraidWord beta_hat_tripod(int a, int b, int c);
// Boundary words of the initial N-graphs:
// s2^k s1 s2^3 s1 s2^3 s1 s2^l s3 s2 s1^2 s2^2 s3 s2^3 s3 with k = (n-3)/2, l = (n-4)/2,
// and s2 s1^(a+1) s2 s1^(b+1) s2 s1^(c+1).
BraidWord ngraph_word_affine_d(int n);
BraidWord ngraph_word_tripod(int a, int b, int c);

// True when b is a cyclic rotation of a.
bool cyclic_equal(const BraidWord& a, const BraidWord& b);

}  // namespace cw
