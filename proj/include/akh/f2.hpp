#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace akh::f2 {

using Index = std::uint32_t;
// A vector over F2 stored as its support, strictly increasing.
using Column = std::vector<Index>;

Column sum(const Column& a, const Column& b);
void add_into(Column& acc, const Column& b);
void toggle(Column& c, Index i);
bool contains(const Column& c, Index i);

class SparseMatrixF2 {
public:
  SparseMatrixF2() = default;
  SparseMatrixF2(std::size_t rows, std::size_t cols);

  static SparseMatrixF2 from_columns(std::size_t rows, std::vector<Column> cols);
  static SparseMatrixF2 identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  const Column& column(std::size_t j) const { return cols_[j]; }
  const std::vector<Column>& columns() const { return cols_; }

  void set_column(std::size_t j, Column c);
  void toggle(Index row, Index col);
  bool get(Index row, Index col) const;

  Column apply(const Column& x) const;
  SparseMatrixF2 transpose() const;
  SparseMatrixF2 operator*(const SparseMatrixF2& rhs) const;
  SparseMatrixF2 operator+(const SparseMatrixF2& rhs) const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  bool operator==(const SparseMatrixF2&) const = default;

private:
  std::size_t rows_ = 0;
  std::vector<Column> cols_;
};

struct SolveResult {
  std::size_t rank = 0;
  // Set when b was supplied and lies in the column space: A * solution == b.
  std::optional<Column> solution;
  // b minus the part of it eliminated by the column space. Empty iff b is in
  // the span; otherwise its largest entry is a row no reduced column can reach.
  Column residual;
};

SolveResult rank_and_solve(const SparseMatrixF2& a, const std::optional<Column>& b = std::nullopt);
std::size_t rank(const SparseMatrixF2& a);
std::vector<Column> kernel_basis(const SparseMatrixF2& a);

// Incremental column echelon form with pivot = largest row index.
// Keeps, for every stored column, the combination of inserted vectors it came from.
class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t rows) : pivot_(rows, -1) {}

  // Reduces v; stores it if independent. Returns true when v was independent.
  bool insert(Column v, Column tag);
  // Reduces v against the stored basis; returns residual and the xor of tags used.
  std::pair<Column, Column> reduce(Column v) const;
  std::size_t size() const { return vecs_.size(); }

private:
  std::vector<long> pivot_;
  std::vector<Column> vecs_;
  std::vector<Column> tags_;
};

}  // namespace akh::f2
