#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "facering/rational.hpp"

namespace facering {

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

/// Sparse rational matrix. Triplets are kept sorted by (row, col) with no
/// duplicates and no explicit zeros, so two equal matrices compare equal
/// entry-for-entry.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  /// Duplicate (row, col) entries are summed; resulting zeros are dropped.
  static ExactMatrix from_triplets(std::size_t rows, std::size_t cols,
                                   std::vector<Triplet> triplets);
  static ExactMatrix from_dense(const std::vector<std::vector<Rational>>& dense);
  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept { return triplets_.size(); }
  const std::vector<Triplet>& triplets() const noexcept { return triplets_; }

  Rational at(std::size_t row, std::size_t col) const;
  ExactMatrix transpose() const;
  std::vector<std::vector<Rational>> to_dense() const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

  /// Rows and columns reindexed: entry (i, j) moves to (row_map[i], col_map[j]).
  ExactMatrix permuted(const std::vector<std::size_t>& row_map,
                       const std::vector<std::size_t>& col_map) const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Triplet> triplets_;
};

/// Basis of the right kernel, in reduced row echelon form (each vector has a
/// leading 1 in a column where the other vectors vanish), so the basis only
/// depends on the kernel and the column order.
struct KernelBasis {
  std::vector<std::vector<Rational>> vectors;
  std::size_t ambient_dim = 0;

  std::size_t dimension() const noexcept { return vectors.size(); }
};

std::size_t rank(const ExactMatrix& m);
KernelBasis kernel_basis(const ExactMatrix& m);

/// Rank over GF(p). Only a lower bound for the rational rank. p must be a
/// prime below 2^62.
std::size_t rank_mod_p(const ExactMatrix& m, std::uint64_t p);

bool is_prime(std::uint64_t n);

/// Rank of the matrix whose rows are the given vectors.
std::size_t rank_of_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

}  // namespace facering
