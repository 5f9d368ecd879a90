#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlt/field.hpp"

namespace rlt {

/// Dense row-major matrix over a fixed finite field.
class Matrix {
 public:
  Matrix(const Field& F, size_t rows, size_t cols)
      : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(const Field& F, size_t n);
  static Matrix zero(const Field& F, size_t rows, size_t cols) { return Matrix(F, rows, cols); }
  static Matrix from_rows(const Field& F, const std::vector<std::vector<fel>>& rows);

  const Field& field() const { return F_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  fel at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  fel& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const fel* row(size_t r) const { return a_.data() + r * cols_; }
  fel* row(size_t r) { return a_.data() + r * cols_; }

  std::vector<fel> row_vec(size_t r) const { return std::vector<fel>(row(r), row(r) + cols_); }
  std::vector<fel> col_vec(size_t c) const;
  void set_row(size_t r, const std::vector<fel>& v);

  bool is_zero() const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(fel c) const;
  Matrix transposed() const;
  Matrix pow(uint64_t e) const;

  /// y = this * x
  std::vector<fel> apply(const std::vector<fel>& x) const;
  /// y = x^T * this (row vector through the matrix)
  std::vector<fel> apply_left(const std::vector<fel>& x) const;

  Matrix vstack(const Matrix& below) const;
  Matrix hstack(const Matrix& right) const;
  Matrix submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const;

  /// In-place reduced row-echelon form; returns (rank, pivot columns).
  std::pair<size_t, std::vector<size_t>> rref_in_place();

  size_t rank() const;
  std::optional<Matrix> inverse() const;
  bool is_nilpotent() const;  // powers up to rows()

  /// Characteristic polynomial coefficients c_0..c_n of det(tI - A)
  /// (monic, c_n = 1), computed by exact Hessenberg reduction.
  std::vector<fel> charpoly() const;

  std::string str() const;

 private:
  Field F_;
  size_t rows_, cols_;
  std::vector<fel> a_;
};

/// Result of an echelon computation kept with its pivots.
struct Echelon {
  Matrix mat;
  size_t rank;
  std::vector<size_t> pivots;
};

Echelon rref(const Matrix& m);

/// Basis of the right kernel {x : m x = 0}, rows = basis vectors, in the
/// canonical (RREF) form.
Matrix kernel_basis(const Matrix& m);

/// Solve m * x = b; nullopt when inconsistent.  Returns one solution.
std::optional<std::vector<fel>> solve(const Matrix& m, const std::vector<fel>& b);

}  // namespace rlt
