#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterweave/seed.hpp"

namespace cw {

// Canonical representative of a seed up to simultaneous permutation of the
// mutable indices. `perm[i]` is the index of the input seed that moved to
// position i of the representative.
struct SeedClass {
  Seed rep;
  uint64_t hash = 0;
  std::vector<int> perm;

  std::string hash_hex() const;  // 16 hex digits
  friend bool operator==(const SeedClass& a, const SeedClass& b) { return a.rep == b.rep; }
};

SeedClass canonical_form(const Seed& s);

// Permutes mutable indices: result index i takes input index perm[i].
Seed permute_seed(const Seed& s, const std::vector<int>& perm);

struct GraphEdge {
  int a = 0;
  int b = 0;
  int label = 0;  // mutation index in node a's canonical numbering
};

struct ExchangeGraphSlice {
  std::vector<SeedClass> nodes;  // breadth-first discovery order
  std::vector<int> depth;        // BFS depth of each node
  std::vector<GraphEdge> edges;  // one per unordered pair
  std::vector<int> frontier;     // unexpanded nodes
  bool complete = false;

  int find(const SeedClass& c) const;  // node id or -1
  std::vector<std::vector<int>> adjacency() const;
};

struct ExploreOptions {
  int depth = 0;
  size_t cap = 100000;
  int jobs = 1;
  // Visit mutation indices n..1 instead of 1..n; used as an alternative
  // traversal order when cross-checking enumeration results.
  bool descending = false;
};

ExchangeGraphSlice explore(const Seed& s0, const ExploreOptions& opts);
ExchangeGraphSlice explore(const Seed& s0, int depth, size_t cap = 100000);

ExchangeGraphSlice induced_subgraph_fixing(const ExchangeGraphSlice& g, const LaurentPoly& v);

// Walks two seeds with the same principal part through identical mutation
// sequences of length <= depth and checks that the induced correspondence of
// seed classes is a bijection that carries labeled edges to labeled edges
// (labels compared after renumbering into each class's canonical order).
struct ParallelWalkReport {
  bool isomorphic = true;
  size_t nodes = 0;
  size_t edges = 0;
  std::string detail;
};
ParallelWalkReport compare_under_common_mutations(const Seed& a, const Seed& b, int depth);

struct NormalFormCertificate {
  int r = 0;
  int ell = 0;              // zero-based excluded index
  std::vector<int> seq;     // zero-based mutation indices, applied in order
};

// Searches |r| = 0, 1, -1, 2, -2, ... up to r_bound; for each r and each
// excluded index ell, a breadth-first search over mutation sequences that
// avoid ell, up to seq_bound steps. Search trees are cached across calls.
class NormalFormSearcher {
 public:
  NormalFormSearcher(Seed s0, int r_bound, int seq_bound);
  NormalFormCertificate decompose(const Seed& target);
  Seed replay(const NormalFormCertificate& c) const;

 private:
  struct Tree {
    std::map<uint64_t, std::vector<std::pair<SeedClass, std::vector<int>>>> found;
  };
  const Tree& tree(int r, int ell);

  Seed s0_;
  int r_bound_;
  int seq_bound_;
  std::map<std::pair<int, int>, Tree> cache_;
};

NormalFormCertificate normal_form_decompose(const Seed& target, const Seed& s0, int r_bound, int seq_bound);

}  // namespace cw
