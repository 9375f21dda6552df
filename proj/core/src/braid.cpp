#include "clusterweave/braid.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>

#include "clusterweave/errors.hpp"

namespace cw {

std::string BraidWord::str() const {
  std::ostringstream os;
  size_t p = 0;
  while (p < letters.size()) {
    size_t q = p;
    while (q < letters.size() && letters[q] == letters[p]) ++q;
    if (p > 0) os << ' ';
    os << 's' << letters[p];
    if (q - p > 1) os << '^' << (q - p);
    p = q;
  }
  return os.str();
}

namespace {

void check_strands(int strands) {
  if (strands < 2) throw InvalidInput("a braid needs at least 2 strands, got " + std::to_string(strands));
}

void check_letters(const BraidWord& w) {
  check_strands(w.strands);
  for (size_t p = 0; p < w.letters.size(); ++p) {
    int g = w.letters[p];
    if (g < 1 || g >= w.strands)
      throw GeneratorOutOfRange("s" + std::to_string(g) + " at letter " + std::to_string(p) + " on " +
                                std::to_string(w.strands) + " strands");
  }
}

}  // namespace

BraidWord parse_braid(const std::string& text, int strands) {
  check_strands(strands);
  BraidWord w;
  w.strands = strands;
  size_t p = 0;
  auto skip_space = [&] {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
  };
  auto read_int = [&](const char* what) {
    size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (p == start) throw SyntaxError(std::string("expected ") + what + " at position " + std::to_string(start));
    if (p - start > 6) throw SyntaxError("number too long at position " + std::to_string(start));
    return std::stoi(text.substr(start, p - start));
  };
  skip_space();
  if (p == text.size()) throw SyntaxError("empty word at position 0");
  while (p < text.size()) {
    size_t term_start = p;
    if (text[p] != 's') throw SyntaxError("expected 's' at position " + std::to_string(p));
    ++p;
    int g = read_int("generator index");
    int e = 1;
    if (p < text.size() && text[p] == '^') {
      ++p;
      size_t exp_pos = p;
      e = read_int("exponent");
      if (e < 1) throw SyntaxError("exponent must be at least 1 at position " + std::to_string(exp_pos));
    }
    if (p < text.size() && !std::isspace(static_cast<unsigned char>(text[p])))
      throw SyntaxError("unexpected '" + std::string(1, text[p]) + "' at position " + std::to_string(p));
    if (g < 1 || g >= strands)
      throw GeneratorOutOfRange("s" + std::to_string(g) + " at position " + std::to_string(term_start) + " on " +
                                std::to_string(strands) + " strands");
    w.letters.insert(w.letters.end(), static_cast<size_t>(e), g);
    skip_space();
  }
  return w;
}

BraidWord half_twist(int strands) {
  if (strands < 2 || strands > 6)
    throw Unsupported("half twist is available for 2..6 strands, got " + std::to_string(strands));
  BraidWord w;
  w.strands = strands;
  if (strands == 3) {
    w.letters = {2, 1, 2};
    return w;
  }
  // (s1)(s2 s1)(s3 s2 s1)...; on four strands this is s1 s2 s1 s3 s2 s1.
  for (int k = 1; k < strands; ++k)
    for (int g = k; g >= 1; --g) w.letters.push_back(g);
  return w;
}

BraidWord concat(const std::vector<BraidWord>& parts) {
  if (parts.empty()) throw InvalidInput("concatenation of no words");
  BraidWord w;
  w.strands = parts.front().strands;
  for (const auto& p : parts) {
    if (p.strands != w.strands) throw InvalidInput("strand counts differ in concatenation");
    w.letters.insert(w.letters.end(), p.letters.begin(), p.letters.end());
  }
  return w;
}

std::string BraidRule::str() const {
  switch (kind) {
    case RuleKind::Comm:
      return "Comm(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(pos) + ")";
    case RuleKind::BraidRel:
      return "BraidRel(" + std::to_string(i) + "," + std::to_string(pos) + ")";
    case RuleKind::CyclicRotate:
      return "CyclicRotate(" + std::to_string(k) + ")";
  }
  return "?";
}

BraidRule comm(int i, int j, int pos) { return BraidRule{RuleKind::Comm, i, j, pos, 0}; }
BraidRule braid_rel(int i, int pos) { return BraidRule{RuleKind::BraidRel, i, 0, pos, 0}; }
BraidRule rotate(int k) { return BraidRule{RuleKind::CyclicRotate, 0, 0, 0, k}; }

namespace {

// In-place rewrite on a raw letter sequence; false when the pattern does not
// match. Kept allocation-free for the search loop.
bool rewrite(std::vector<int>& s, const BraidRule& r) {
  const int n = static_cast<int>(s.size());
  switch (r.kind) {
    case RuleKind::Comm: {
      if (r.pos < 0 || r.pos + 1 >= n) return false;
      if (std::abs(r.i - r.j) < 2) return false;
      if (s[r.pos] != r.i || s[r.pos + 1] != r.j) return false;
      std::swap(s[r.pos], s[r.pos + 1]);
      return true;
    }
    case RuleKind::BraidRel: {
      if (r.pos < 0 || r.pos + 2 >= n) return false;
      int a = s[r.pos], b = s[r.pos + 1], c = s[r.pos + 2];
      if (a != c) return false;
      if (a == r.i && b == r.i + 1) {
        s[r.pos] = s[r.pos + 2] = r.i + 1;
        s[r.pos + 1] = r.i;
        return true;
      }
      if (a == r.i + 1 && b == r.i) {
        s[r.pos] = s[r.pos + 2] = r.i;
        s[r.pos + 1] = r.i + 1;
        return true;
      }
      return false;
    }
    case RuleKind::CyclicRotate: {
      if (n == 0) return true;
      int k = ((r.k % n) + n) % n;
      std::rotate(s.begin(), s.begin() + k, s.end());
      return true;
    }
  }
  return false;
}

BraidRule inverse(const BraidRule& r, int length) {
  switch (r.kind) {
    case RuleKind::Comm:
      return comm(r.j, r.i, r.pos);
    case RuleKind::BraidRel:
      return r;
    case RuleKind::CyclicRotate:
      return rotate(length == 0 ? 0 : (length - ((r.k % length) + length) % length) % length);
  }
  return r;
}

// Every rule applicable to s, in a fixed order.
void applicable_rules(const std::vector<int>& s, bool cyclic, std::vector<BraidRule>& out) {
  out.clear();
  const int n = static_cast<int>(s.size());
  for (int p = 0; p + 1 < n; ++p)
    if (std::abs(s[p] - s[p + 1]) >= 2) out.push_back(comm(s[p], s[p + 1], p));
  for (int p = 0; p + 2 < n; ++p)
    if (s[p] == s[p + 2] && std::abs(s[p] - s[p + 1]) == 1) out.push_back(braid_rel(std::min(s[p], s[p + 1]), p));
  if (cyclic && n > 1) {
    out.push_back(rotate(1));
    if (n > 2) out.push_back(rotate(n - 1));
  }
}

std::string key_of(const std::vector<int>& s) { return std::string(s.begin(), s.end()); }

std::vector<int> letters_of(const std::string& key) { return std::vector<int>(key.begin(), key.end()); }

}  // namespace

BraidWord apply_relation(const BraidWord& w, const BraidRule& rule) {
  check_letters(w);
  BraidWord out = w;
  if (!rewrite(out.letters, rule)) throw PatternMismatch(rule.str() + " does not match " + w.str());
  return out;
}

BraidWord apply_relations(BraidWord w, const std::vector<BraidRule>& rules) {
  for (const auto& r : rules) w = apply_relation(w, r);
  return w;
}

EquivalenceResult equivalent_bounded(const BraidWord& w1, const BraidWord& w2, size_t budget, bool cyclic) {
  check_letters(w1);
  check_letters(w2);
  if (w1.strands != w2.strands)
    throw LengthMismatch("strand counts differ: " + std::to_string(w1.strands) + " vs " + std::to_string(w2.strands));
  if (w1.letters.size() != w2.letters.size())
    throw LengthMismatch("word lengths differ: " + std::to_string(w1.letters.size()) + " vs " +
                         std::to_string(w2.letters.size()));
  EquivalenceResult res;
  if (w1.letters == w2.letters) {
    res.equivalent = true;
    return res;
  }
  const int length = static_cast<int>(w1.letters.size());

  // Each side maps a word to (neighbor toward its root, rule). On the forward
  // side the rule rewrites the neighbor into the word; on the backward side it
  // rewrites the word into the neighbor.
  using Link = std::pair<std::string, BraidRule>;
  std::unordered_map<std::string, Link> fwd, bwd;
  std::deque<std::string> fq, bq;
  const std::string k1 = key_of(w1.letters), k2 = key_of(w2.letters);
  fwd.emplace(k1, Link{k1, BraidRule{}});
  bwd.emplace(k2, Link{k2, BraidRule{}});
  fq.push_back(k1);
  bq.push_back(k2);

  std::vector<BraidRule> rules;
  std::string meet;
  auto expand_level = [&](bool forward) -> bool {
    auto& q = forward ? fq : bq;
    auto& mine = forward ? fwd : bwd;
    auto& other = forward ? bwd : fwd;
    size_t level = q.size();
    for (size_t t = 0; t < level; ++t) {
      if (res.expanded >= budget) return false;
      std::string cur = std::move(q.front());
      q.pop_front();
      ++res.expanded;
      std::vector<int> s = letters_of(cur);
      applicable_rules(s, cyclic, rules);
      for (const auto& r : rules) {
        std::vector<int> next = s;
        rewrite(next, r);
        std::string nk = key_of(next);
        if (mine.count(nk)) continue;
        mine.emplace(nk, Link{cur, forward ? r : inverse(r, length)});
        if (other.count(nk)) {
          meet = nk;
          return true;
        }
        q.push_back(std::move(nk));
      }
    }
    return false;
  };

  while (!fq.empty() && !bq.empty() && res.expanded < budget) {
    bool forward = fq.size() <= bq.size();
    if (expand_level(forward)) break;
  }
  if (meet.empty()) return res;

  std::vector<BraidRule> head;
  for (std::string cur = meet; cur != k1;) {
    const Link& l = fwd.at(cur);
    head.push_back(l.second);
    cur = l.first;
  }
  std::reverse(head.begin(), head.end());
  for (std::string cur = meet; cur != k2;) {
    const Link& l = bwd.at(cur);
    head.push_back(l.second);
    cur = l.first;
  }
  res.equivalent = true;
  res.witness = std::move(head);
  return res;
}

std::vector<int> braid_permutation(const BraidWord& w) {
  check_letters(w);
  std::vector<int> perm(static_cast<size_t>(w.strands));
  for (int i = 0; i < w.strands; ++i) perm[i] = i;
  for (int g : w.letters) std::swap(perm[g - 1], perm[g]);
  return perm;
}

std::vector<Brick> bricks(const BraidWord& w) {
  check_letters(w);
  std::vector<Brick> out;
  for (int level = 1; level < w.strands; ++level) {
    int prev = 0;
    for (size_t p = 0; p < w.letters.size(); ++p) {
      if (w.letters[p] != level) continue;
      int pos = static_cast<int>(p) + 1;
      if (prev > 0) out.push_back(Brick{level, prev, pos});
      prev = pos;
    }
  }
  return out;
}

ExchangeMatrix brick_quiver(const BraidWord& w) {
  check_letters(w);
  for (int level = 1; level < w.strands; ++level)
    if (std::find(w.letters.begin(), w.letters.end(), level) == w.letters.end())
      throw LevelUnused("s" + std::to_string(level) + " does not occur in " + w.str());
  std::vector<Brick> bs = bricks(w);
  const int n = static_cast<int>(bs.size());
  ExchangeMatrix b = ExchangeMatrix::square(n);
  auto inside = [](int x, const Brick& v) { return v.left < x && x < v.right; };
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      const Brick& u = bs[a];
      const Brick& v = bs[c];
      bool arrow = false;
      if (u.level == v.level) {
        arrow = u.right == v.left;
      } else if (v.level == u.level + 1) {
        int hits = static_cast<int>(inside(v.left, u)) + static_cast<int>(inside(v.right, u));
        arrow = hits == 1;
      }
      if (arrow) {
        b.at(a, c) += 1;
        b.at(c, a) -= 1;
      }
    }
  }
  return b;
}

namespace {

BraidWord word(int strands, std::initializer_list<std::pair<int, int>> runs) {
  BraidWord w;
  w.strands = strands;
  for (const auto& [g, e] : runs) w.letters.insert(w.letters.end(), static_cast<size_t>(std::max(e, 0)), g);
  return w;
}

void check_affine_d(int n) {
  if (n < 4) throw InvalidInput("D~n needs n >= 4, got " + std::to_string(n));
}

void check_tripod(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw InvalidInput("tripod legs must be positive");
}

}  // namespace

BraidWord beta_affine_d(int n) {
  check_affine_d(n);
  return word(4, {{3, 1}, {2, 2}, {3, 1}, {2, n - 4}, {1, 1}, {2, 2}, {1, 1}});
}

BraidWord beta_tripod(int a, int b, int c) {
  check_tripod(a, b, c);
  return word(3, {{1, 1}, {2, a}, {1, b - 1}, {2, c}});
}

BraidWord beta_hat_affine_d(int n) {
  BraidWord d = half_twist(4);
  return concat({d, beta_affine_d(n), d});
}

BraidWord beta_hat_tripod(int a, int b, int c) {
  BraidWord d = half_twist(3);
  return concat({d, beta_tripod(a, b, c), d});
}

BraidWord ngraph_word_affine_d(int n) {
  check_affine_d(n);
  int k = (n - 3) / 2;
  int l = (n - 4) / 2;
  return word(4, {{2, k}, {1, 1}, {2, 3}, {1, 1}, {2, 3}, {1, 1}, {2, l}, {3, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1},
                  {2, 3}, {3, 1}});
}

BraidWord ngraph_word_tripod(int a, int b, int c) {
  check_tripod(a, b, c);
  return word(3, {{2, 1}, {1, a + 1}, {2, 1}, {1, b + 1}, {2, 1}, {1, c + 1}});
}

bool cyclic_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands || a.letters.size() != b.letters.size()) return false;
  if (a.letters.empty()) return true;
  std::vector<int> doubled = a.letters;
  doubled.insert(doubled.end(), a.letters.begin(), a.letters.end());
  return std::search(doubled.begin(), doubled.end(), b.letters.begin(), b.letters.end()) != doubled.end();
}

}  // namespace cw
