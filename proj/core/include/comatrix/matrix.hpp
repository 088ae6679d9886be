#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "comatrix/field.hpp"

namespace comatrix {

/// Dense row-major matrix over an exact field. Vectors are n x 1 matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix zero(Field field, std::size_t rows, std::size_t cols) { return {field, rows, cols}; }
  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix from_rows(Field field, const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix column(Field field, std::span<const std::int64_t> values);
  static Matrix column(Field field, std::initializer_list<std::int64_t> values);
  static Matrix unit_column(Field field, std::size_t n, std::size_t i);
  /// E_{r,c} of the given shape.
  static Matrix elementary(Field field, std::size_t rows, std::size_t cols, std::size_t r, std::size_t c);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar v) { data_[r * cols_ + c] = v; }
  void add_to(std::size_t r, std::size_t c, Scalar v) { data_[r * cols_ + c] = field_.add(data_[r * cols_ + c], v); }
  std::span<const Scalar> data() const { return data_; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(Scalar s) const;

  Matrix transpose() const;
  Matrix column_at(std::size_t c) const;
  Matrix row_at(std::size_t r) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Row-major flattening into a column vector.
  Matrix vectorize() const;
  static Matrix unvectorize(const Matrix& v, std::size_t rows, std::size_t cols);

  static Matrix kron(const Matrix& a, const Matrix& b);
  static Matrix hstack(const std::vector<Matrix>& blocks, Field field, std::size_t rows);
  static Matrix vstack(const std::vector<Matrix>& blocks, Field field, std::size_t cols);

  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  /// Total order used for canonical sorting and map keys.
  friend bool operator<(const Matrix& a, const Matrix& b);

  std::string str() const;
  /// Entries only, as nested brackets: [[1 0] [0 1]].
  std::string bracketed() const;

 private:
  void require_same_shape(const Matrix& rhs, const char* op) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Sum of coefficient-weighted matrices: sum_k coeffs(k) * mats[k].
Matrix linear_combination(const Matrix& coeffs, const std::vector<Matrix>& mats, Field field, std::size_t rows,
                          std::size_t cols);

}  // namespace comatrix
