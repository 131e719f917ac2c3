#pragma once

// Exact dense matrices over a Field, rank factorization and group inverses,
// and block-diagonal matrices (elements of a finite product of M_n(K)).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lpa/error.hpp"
#include "lpa/scalar.hpp"

namespace lpa {

class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Field f = Field::rationals())
      : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(std::size_t n, Field f = Field::rationals()) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
  }
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j, Field f = Field::rationals()) {
    Matrix m(n, n, f);
    m(i, j) = Scalar::one(f);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Field field() const noexcept { return field_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
  Scalar const& operator()(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }

  bool is_zero() const {
    for (auto const& s : data_) {
      if (!s.is_zero()) return false;
    }
    return true;
  }

  friend Matrix operator+(Matrix a, Matrix const& b) {
    a.require_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, Matrix const& b) {
    a.require_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Matrix operator*(Scalar const& k, Matrix a) {
    for (auto& s : a.data_) s = k * s;
    return a;
  }
  friend Matrix operator*(Matrix const& a, Matrix const& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix dimensions do not match");
    Matrix c(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        Scalar const& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }
  friend bool operator==(Matrix const& a, Matrix const& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Reduced row echelon form and its pivot columns.
  std::pair<Matrix, std::vector<std::size_t>> rref() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t pivot = row;
      while (pivot < rows_ && m(pivot, col).is_zero()) ++pivot;
      if (pivot == rows_) continue;
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(row, j), m(pivot, j));
      Scalar inv = m(row, col).inverse();
      for (std::size_t j = 0; j < cols_; ++j) m(row, j) = inv * m(row, j);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || m(i, col).is_zero()) continue;
        Scalar factor = m(i, col);
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) -= factor * m(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return {std::move(m), std::move(pivots)};
  }

  std::size_t rank() const { return rref().second.size(); }

  Matrix inverse() const {
    if (rows_ != cols_) throw PreconditionError("inverse of a non-square matrix");
    Matrix aug(rows_, 2 * cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = Scalar::one(field_);
    }
    auto [r, pivots] = aug.rref();
    if (pivots.size() < rows_ || (rows_ > 0 && pivots[rows_ - 1] != rows_ - 1)) {
      throw PreconditionError("matrix is singular");
    }
    Matrix inv(rows_, cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = r(i, cols_ + j);
    }
    return inv;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
      out += "]";
    }
    return out + "]";
  }

 private:
  void require_same_shape(Matrix const& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw PreconditionError("matrix dimensions do not match");
  }

  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::vector<Scalar> data_;
};

// m = left * right with left of full column rank and right of full row rank.
struct RankFactorization {
  Matrix left;
  Matrix right;
};

inline RankFactorization rank_factorization(Matrix const& m) {
  auto [reduced, pivots] = m.rref();
  std::size_t r = pivots.size();
  Matrix left(m.rows(), r, m.field());
  Matrix right(r, m.cols(), m.field());
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < m.rows(); ++i) left(i, k) = m(i, pivots[k]);
    for (std::size_t j = 0; j < m.cols(); ++j) right(k, j) = reduced(k, j);
  }
  return {std::move(left), std::move(right)};
}

// With m = C R, the group inverse exists iff R C is invertible (equivalently
// rank m = rank m^2), and then equals C (R C)^-2 R.
inline Matrix group_inverse(Matrix const& m) {
  if (m.rows() != m.cols()) throw PreconditionError("group inverse of a non-square matrix");
  auto [c, r] = rank_factorization(m);
  if (c.cols() == 0) return Matrix(m.rows(), m.cols(), m.field());
  Matrix core = r * c;
  if (core.rank() != core.rows()) throw NotGroupInvertible("rank drops on squaring; no group inverse");
  Matrix inv = core.inverse();
  return c * inv * inv * r;
}

inline bool is_group_invertible(Matrix const& m) { return m.rank() == (m * m).rank(); }

class BlockMatrix {
 public:
  BlockMatrix() = default;
  explicit BlockMatrix(std::vector<Matrix> blocks) : blocks_(std::move(blocks)) {
    for (auto const& b : blocks_) {
      if (b.rows() != b.cols()) throw PreconditionError("blocks must be square");
    }
  }
  static BlockMatrix zero(std::vector<std::size_t> const& sizes, Field f = Field::rationals()) {
    std::vector<Matrix> blocks;
    for (std::size_t n : sizes) blocks.emplace_back(n, n, f);
    return BlockMatrix(std::move(blocks));
  }

  std::size_t block_count() const noexcept { return blocks_.size(); }
  Matrix const& block(std::size_t i) const { return blocks_.at(i); }
  Matrix& block(std::size_t i) { return blocks_.at(i); }
  std::vector<Matrix> const& blocks() const noexcept { return blocks_; }

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> s;
    for (auto const& b : blocks_) s.push_back(b.rows());
    return s;
  }

  bool is_zero() const {
    for (auto const& b : blocks_) {
      if (!b.is_zero()) return false;
    }
    return true;
  }

  friend BlockMatrix operator+(BlockMatrix a, BlockMatrix const& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.blocks_.size(); ++i) a.blocks_[i] = a.blocks_[i] + b.blocks_[i];
    return a;
  }
  friend BlockMatrix operator-(BlockMatrix a, BlockMatrix const& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.blocks_.size(); ++i) a.blocks_[i] = a.blocks_[i] - b.blocks_[i];
    return a;
  }
  friend BlockMatrix operator*(BlockMatrix const& a, BlockMatrix const& b) {
    a.require_same_shape(b);
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < a.blocks_.size(); ++i) blocks.push_back(a.blocks_[i] * b.blocks_[i]);
    return BlockMatrix(std::move(blocks));
  }
  friend bool operator==(BlockMatrix const&, BlockMatrix const&) = default;

 private:
  void require_same_shape(BlockMatrix const& b) const {
    if (sizes() != b.sizes()) throw PreconditionError("block structures differ");
  }

  std::vector<Matrix> blocks_;
};

inline BlockMatrix group_inverse(BlockMatrix const& m) {
  std::vector<Matrix> blocks;
  for (auto const& b : m.blocks()) blocks.push_back(group_inverse(b));
  return BlockMatrix(std::move(blocks));
}

inline bool is_group_invertible(BlockMatrix const& m) {
  for (auto const& b : m.blocks()) {
    if (!is_group_invertible(b)) return false;
  }
  return true;
}

}  // namespace lpa
