#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cw {

// An m x n integer matrix. Columns 0..n-1 are the mutable indices; rows
// n..m-1 are frozen. Indices are zero-based throughout the library.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  ExchangeMatrix(int rows, int cols);
  // Builds from row-major nested lists; every row must have the same width.
  static ExchangeMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static ExchangeMatrix square(int n) { return ExchangeMatrix(n, n); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  int at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const std::vector<int>& data() const { return data_; }

  ExchangeMatrix principal() const;
  std::vector<std::vector<int>> to_rows() const;
  std::string str() const;  // compact "[[0,1],[-1,0]]" form

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

// Square generalized Cartan matrix.
class CartanMatrix {
 public:
  CartanMatrix() = default;
  explicit CartanMatrix(int n) : n_(n), data_(static_cast<size_t>(n) * n, 0) {}
  static CartanMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  int& at(int i, int j) { return data_[static_cast<size_t>(i) * n_ + j]; }
  int at(int i, int j) const { return data_[static_cast<size_t>(i) * n_ + j]; }
  std::vector<std::vector<int>> to_rows() const;
  std::string str() const;
  // Empty string when the generalized Cartan matrix axioms hold.
  std::string violation() const;
  CartanMatrix permuted(const std::vector<int>& perm) const;  // (P C P^T)[i][j] = C[perm i][perm j]

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  int n_ = 0;
  std::vector<int> data_;
};

// A Dynkin type from the finite, standard affine or twisted affine catalog.
// twist == 0: finite X_r; twist == 1: standard affine X~_r; twist 2 or 3:
// twisted X_r^(twist) with Kac's subscript convention.
struct DynkinType {
  char family = 'A';
  int rank = 1;
  int twist = 0;

  std::string name() const;  // "A2", "D~4", "E6^(2)"
  int vertex_count() const;
  friend bool operator==(const DynkinType& a, const DynkinType& b) {
    return a.family == b.family && a.rank == b.rank && a.twist == b.twist;
  }
};

// Accepts "A3", "D~4", "Dt4", "D4t", "E6^(2)", "E6_2", "A2^(2)".
DynkinType parse_dynkin(const std::string& text);

// The Cartan matrix of a catalog type, read off its Dynkin diagram with the
// rule: an arrow pointing from i to j with multiplicity k gives c[i][j] = -k
// and c[j][i] = -1. Throws UnknownDiagram outside the catalog.
CartanMatrix catalog_cartan(const DynkinType& type);

enum class CartanClass { Finite, Affine, Indefinite };

struct Classification {
  CartanClass kind = CartanClass::Indefinite;
  std::vector<DynkinType> components;  // one per connected component
  std::string name() const;            // "A1 x A1", "G~2", "indefinite"
};

std::optional<std::vector<int64_t>> skew_symmetrizer(const ExchangeMatrix& b);
CartanMatrix cartan_counterpart(const ExchangeMatrix& b);
Classification classify_cartan(const CartanMatrix& c);
bool is_acyclic(const ExchangeMatrix& b);

// Symmetrizer of a Cartan matrix (d_i c_ij = d_j c_ji), gcd-normalized.
std::optional<std::vector<int64_t>> cartan_symmetrizer(const CartanMatrix& c);

// Exact determinant via fraction-free elimination in 128-bit integers.
__int128 exact_determinant(const std::vector<std::vector<int64_t>>& m);

// Bipartite exchange matrix whose Cartan counterpart is the catalog type:
// vertices alternate sources (+) and sinks (-) along a 2-coloring with vertex
// 0 a sink. Simply-laced types only when skew-symmetric data is required.
ExchangeMatrix bipartite_matrix(const DynkinType& type);

// Searches for a permutation p with a[p i][p j] == b[i][j]. Backtracking with
// row-signature pruning; suitable for n <= 12.
std::optional<std::vector<int>> find_isomorphism(const CartanMatrix& a, const CartanMatrix& b);

}  // namespace cw
