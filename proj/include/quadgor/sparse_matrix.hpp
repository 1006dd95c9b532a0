#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quadgor/rational.hpp"

namespace qg {

// Sparse column vector of fixed length. Entries sorted by index, all nonzero.
struct SparseVector {
  std::size_t size = 0;
  std::vector<std::pair<std::size_t, Rational>> entries;

  Rational at(std::size_t i) const;
  bool operator==(const SparseVector& other) const = default;
};

// Immutable sparse matrix over the rationals. Assemble through Builder;
// duplicate coordinates accumulate and exact zeros are dropped, so the stored
// triplet set is independent of insertion order.
class SparseRationalMatrix {
 public:
  class Builder {
   public:
    Builder(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
    void add(std::size_t row, std::size_t col, const Rational& value);
    void add_row(std::size_t row, const SparseVector& v);
    SparseRationalMatrix build();

   private:
    std::size_t rows_, cols_;
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> triplets_;
  };

  SparseRationalMatrix() = default;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzero_count() const { return nnz_; }
  const std::vector<std::pair<std::size_t, Rational>>& row(std::size_t i) const {
    return row_data_[i];
  }
  Rational at(std::size_t i, std::size_t j) const;

  static SparseRationalMatrix identity(std::size_t n);
  SparseRationalMatrix transpose() const;
  SparseRationalMatrix multiply(const SparseRationalMatrix& rhs) const;
  SparseVector apply(const SparseVector& v) const;  // matrix * vector

  // Debug dump, MatrixMarket coordinate layout with rational entries.
  std::string to_matrix_market() const;

 private:
  std::size_t rows_ = 0, cols_ = 0, nnz_ = 0;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> row_data_;
  friend class Builder;
};

struct EliminationConfig {
  // Sparse elimination switches to the dense kernel above this density,
  // compared exactly as nnz * 100 > rows * cols * percent.
  unsigned dense_threshold_percent = 20;
};

std::size_t rank(const SparseRationalMatrix& m, const EliminationConfig& cfg = {});

// Canonical kernel basis: one vector per non-pivot column of the unique
// reduced row echelon form, with value 1 at its free column. Independent of
// row order and of the sparse/dense path.
std::vector<SparseVector> kernel_basis(const SparseRationalMatrix& m,
                                       const EliminationConfig& cfg = {});

// Dimension of the span of the given vectors. All sizes must agree.
std::size_t span_dimension(const std::vector<SparseVector>& vectors,
                           const EliminationConfig& cfg = {});

}  // namespace qg
