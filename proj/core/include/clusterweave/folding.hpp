#pragma once

#include <string>
#include <vector>

#include "clusterweave/exchange_matrix.hpp"

namespace cw {

// A permutation group on {0..degree-1} given by generators (image lists).
struct GroupAction {
  int degree = 0;
  std::vector<std::vector<int>> generators;

  static GroupAction trivial(int degree);
  // Builds from 1-based cycles, e.g. {{2,4,6},{3,5,7}}.
  static GroupAction from_cycles(int degree, const std::vector<std::vector<std::vector<int>>>& generator_cycles);

  void validate() const;  // throws InvalidInput
  // Every group element, identity first; closure under composition.
  std::vector<std::vector<int>> elements() const;
  // Orbits as sorted index lists, ordered by smallest member.
  std::vector<std::vector<int>> orbits() const;
};

enum class Admissibility { Admissible, FailsMutabilityUniformity, FailsOrbitZero, FailsSignCoherence };

struct AdmissibilityVerdict {
  Admissibility kind = Admissibility::Admissible;
  int i = -1, i2 = -1, j = -1;  // first failing witness (zero-based)
  bool ok() const { return kind == Admissibility::Admissible; }
  std::string str() const;  // 1-based witnesses
};

bool check_invariant(const ExchangeMatrix& b, const GroupAction& a);
AdmissibilityVerdict check_admissible(const ExchangeMatrix& b, const GroupAction& a);

// Orbits split into mutable ones (columns of the folded matrix) followed by
// frozen ones; both ordered by smallest member.
struct OrbitLayout {
  std::vector<std::vector<int>> orbits;
  int mutable_count = 0;
};
OrbitLayout orbit_layout(const ExchangeMatrix& b, const GroupAction& a);

ExchangeMatrix fold(const ExchangeMatrix& b, const GroupAction& a);
// Mutates at every member of the given mutable orbit (by position in the
// orbit layout), ascending.
ExchangeMatrix orbit_mutate(const ExchangeMatrix& b, const GroupAction& a, int orbit);
ExchangeMatrix orbit_mutate(const ExchangeMatrix& b, const GroupAction& a, const std::vector<int>& orbit);

struct FoldabilityReport {
  bool ok = true;                     // every explored matrix admissible
  bool commutes = true;               // folding commutes with orbit mutation at every explored node
  std::vector<int> counterexample;    // orbit positions leading to the first failure
  size_t explored = 0;                // distinct matrices visited
  std::string detail;
};
FoldabilityReport verify_globally_foldable(const ExchangeMatrix& b, const GroupAction& a, int depth);

struct FoldingTriple {
  std::string name;
  std::string source;  // e.g. "E~6" or "A~3,3"
  std::string group;   // "Z/2", "Z/3", "(Z/2)^2"
  DynkinType target;
  ExchangeMatrix matrix;
  GroupAction action;
};

// Names look like "E6t-Z3-G2t", "D6t-Z2-B3t", "D5t-Z2-A7^(2)", "A3,3t-Z2-D4^(2)".
FoldingTriple catalog_triple(const std::string& name);
std::vector<std::string> catalog_triple_names();

// Skew-symmetric matrix from 1-based arrows {i, j} (meaning i -> j).
ExchangeMatrix matrix_from_arrows(int n, const std::vector<std::pair<int, int>>& arrows);

}  // namespace cw
