#include "akh/f2.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace akh::f2 {

Column sum(const Column& a, const Column& b) {
  Column out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void add_into(Column& acc, const Column& b) {
  if (b.empty()) return;
  if (b.size() == 1) {
    toggle(acc, b.front());
    return;
  }
  acc = sum(acc, b);
}

void toggle(Column& c, Index i) {
  auto it = std::lower_bound(c.begin(), c.end(), i);
  if (it != c.end() && *it == i)
    c.erase(it);
  else
    c.insert(it, i);
}

bool contains(const Column& c, Index i) { return std::binary_search(c.begin(), c.end(), i); }

SparseMatrixF2::SparseMatrixF2(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrixF2 SparseMatrixF2::from_columns(std::size_t rows, std::vector<Column> cols) {
  SparseMatrixF2 m(rows, 0);
  m.cols_ = std::move(cols);
  for (std::size_t j = 0; j < m.cols_.size(); ++j) {
    const Column& c = m.cols_[j];
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (c[t] >= rows || (t > 0 && c[t - 1] >= c[t]))
        throw std::invalid_argument("column " + std::to_string(j) + " is not a sorted in-range index list");
    }
  }
  return m;
}

SparseMatrixF2 SparseMatrixF2::identity(std::size_t n) {
  SparseMatrixF2 m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.cols_[j] = {static_cast<Index>(j)};
  return m;
}

void SparseMatrixF2::set_column(std::size_t j, Column c) {
  if (!c.empty() && c.back() >= rows_) throw std::invalid_argument("row index out of range");
  cols_.at(j) = std::move(c);
}

void SparseMatrixF2::toggle(Index row, Index col) {
  if (row >= rows_ || col >= cols_.size()) throw std::invalid_argument("entry out of range");
  f2::toggle(cols_[col], row);
}

bool SparseMatrixF2::get(Index row, Index col) const { return contains(cols_.at(col), row); }

Column SparseMatrixF2::apply(const Column& x) const {
  Column out;
  for (Index j : x) {
    if (j >= cols_.size()) throw std::invalid_argument("vector length does not match column count");
    add_into(out, cols_[j]);
  }
  return out;
}

SparseMatrixF2 SparseMatrixF2::transpose() const {
  SparseMatrixF2 t(cols_.size(), rows_);
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (Index i : cols_[j]) t.cols_[i].push_back(static_cast<Index>(j));
  return t;
}

SparseMatrixF2 SparseMatrixF2::operator*(const SparseMatrixF2& rhs) const {
  if (cols() != rhs.rows()) throw std::invalid_argument("dimension mismatch in product");
  SparseMatrixF2 out(rows_, rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) out.cols_[j] = apply(rhs.cols_[j]);
  return out;
}

SparseMatrixF2 SparseMatrixF2::operator+(const SparseMatrixF2& rhs) const {
  if (rows() != rhs.rows() || cols() != rhs.cols()) throw std::invalid_argument("dimension mismatch in sum");
  SparseMatrixF2 out(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j) out.cols_[j] = sum(cols_[j], rhs.cols_[j]);
  return out;
}

bool SparseMatrixF2::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
}

std::size_t SparseMatrixF2::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

bool EchelonBasis::insert(Column v, Column tag) {
  while (!v.empty()) {
    long p = pivot_[v.back()];
    if (p < 0) {
      pivot_[v.back()] = static_cast<long>(vecs_.size());
      vecs_.push_back(std::move(v));
      tags_.push_back(std::move(tag));
      return true;
    }
    add_into(v, vecs_[p]);
    add_into(tag, tags_[p]);
  }
  return false;
}

std::pair<Column, Column> EchelonBasis::reduce(Column v) const {
  Column tag;
  while (!v.empty()) {
    long p = pivot_[v.back()];
    if (p < 0) break;
    add_into(v, vecs_[p]);
    add_into(tag, tags_[p]);
  }
  return {std::move(v), std::move(tag)};
}

SolveResult rank_and_solve(const SparseMatrixF2& a, const std::optional<Column>& b) {
  EchelonBasis basis(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) basis.insert(a.column(j), {static_cast<Index>(j)});
  SolveResult r;
  r.rank = basis.size();
  if (!b) return r;
  if (!b->empty() && b->back() >= a.rows()) throw std::invalid_argument("right-hand side longer than row count");
  auto [residual, tag] = basis.reduce(*b);
  if (residual.empty())
    r.solution = std::move(tag);
  r.residual = std::move(residual);
  return r;
}

std::size_t rank(const SparseMatrixF2& a) { return rank_and_solve(a).rank; }

std::vector<Column> kernel_basis(const SparseMatrixF2& a) {
  EchelonBasis basis(a.rows());
  std::vector<Column> out;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Column tag{static_cast<Index>(j)};
    auto [residual, used] = basis.reduce(a.column(j));
    if (residual.empty()) {
      add_into(used, tag);
      out.push_back(std::move(used));
    } else {
      add_into(used, tag);
      basis.insert(std::move(residual), std::move(used));
    }
  }
  return out;
}

}  // namespace akh::f2
