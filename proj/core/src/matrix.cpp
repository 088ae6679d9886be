#include "comatrix/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace comatrix {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar{0, 1}) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

Matrix Matrix::from_rows(Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(field, v);
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows.front().size();
  Matrix m(field, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) throw DimensionMismatch("ragged rows in matrix literal");
    for (std::size_t c = 0; c < nc; ++c) m.set(r, c, field.from_int(rows[r][c]));
  }
  return m;
}

Matrix Matrix::column(Field field, std::span<const std::int64_t> values) {
  Matrix m(field, values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) m.set(i, 0, field.from_int(values[i]));
  return m;
}

Matrix Matrix::column(Field field, std::initializer_list<std::int64_t> values) {
  return column(field, std::span<const std::int64_t>(values.begin(), values.size()));
}

Matrix Matrix::unit_column(Field field, std::size_t n, std::size_t i) {
  Matrix m(field, n, 1);
  m.set(i, 0, field.one());
  return m;
}

Matrix Matrix::elementary(Field field, std::size_t rows, std::size_t cols, std::size_t r, std::size_t c) {
  Matrix m(field, rows, cols);
  m.set(r, c, field.one());
  return m;
}

void Matrix::require_same_shape(const Matrix& rhs, const char* op) const {
  if (!(field_ == rhs.field_)) throw FieldMismatch(std::string("field mismatch in ") + op);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw DimensionMismatch(std::string("shape mismatch in ") + op + ": " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " vs " + std::to_string(rhs.rows_) + "x" +
                            std::to_string(rhs.cols_));
  }
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (!(field_ == rhs.field_)) throw FieldMismatch("field mismatch in product");
  if (cols_ != rhs.rows_) {
    throw DimensionMismatch("product of " + std::to_string(rows_) + "x" + std::to_string(cols_) + " and " +
                            std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  }
  Matrix out(field_, rows_, rhs.cols_);
  if (field_.kind() == Field::Kind::Prime) {
    const std::int64_t p = field_.characteristic();
    std::vector<std::int64_t> acc(rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < cols_; ++k) {
        std::int64_t a = data_[i * cols_ + k].num;
        if (a == 0) continue;
        const Scalar* brow = rhs.data_.data() + k * rhs.cols_;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          if (brow[j].num != 0) acc[j] = (acc[j] + a * brow[j].num) % p;
        }
      }
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.data_[i * rhs.cols_ + j] = Scalar{acc[j], 1};
    }
    return out;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Scalar a = data_[i * cols_ + k];
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        Scalar b = rhs.data_[k * rhs.cols_ + j];
        if (b.is_zero()) continue;
        out.add_to(i, j, field_.mul(a, b));
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_shape(rhs, "sum");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require_same_shape(rhs, "difference");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.neg(data_[i]);
  return out;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(data_[i], s);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = data_[r * cols_ + c];
  return out;
}

Matrix Matrix::column_at(std::size_t c) const { return block(0, c, rows_, 1); }

Matrix Matrix::row_at(std::size_t r) const { return block(r, 0, 1, cols_); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out.data_[r * nc + c] = data_[(r0 + r) * cols_ + c0 + c];
  return out;
}

Matrix Matrix::vectorize() const {
  Matrix out(field_, rows_ * cols_, 1);
  out.data_ = data_;
  return out;
}

Matrix Matrix::unvectorize(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.cols_ != 1 || v.rows_ != rows * cols) throw DimensionMismatch("unvectorize: length mismatch");
  Matrix out(v.field_, rows, cols);
  out.data_ = v.data_;
  return out;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch("field mismatch in Kronecker product");
  Matrix out(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  const Field& f = a.field_;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      Scalar x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows_; ++k) {
        for (std::size_t l = 0; l < b.cols_; ++l) {
          Scalar y = b(k, l);
          if (y.is_zero()) continue;
          out.set(i * b.rows_ + k, j * b.cols_ + l, f.mul(x, y));
        }
      }
    }
  }
  return out;
}

Matrix Matrix::hstack(const std::vector<Matrix>& blocks, Field field, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows_ != rows) throw DimensionMismatch("hstack: row count mismatch");
    cols += b.cols_;
  }
  Matrix out(field, rows, cols);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols_; ++c) out.set(r, c0 + c, b(r, c));
    c0 += b.cols_;
  }
  return out;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks, Field field, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols_ != cols) throw DimensionMismatch("vstack: column count mismatch");
    rows += b.rows_;
  }
  Matrix out(field, rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(r0 * cols));
    r0 += b.rows_;
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      Scalar expect = r == c ? Scalar{1, 1} : Scalar{0, 1};
      if (!((*this)(r, c) == expect)) return false;
    }
  return true;
}

bool operator<(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.data_ < b.data_;
}

std::string Matrix::bracketed() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ' ';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << field_.format((*this)(r, c));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string Matrix::str() const { return std::to_string(rows_) + "x" + std::to_string(cols_) + " " + bracketed(); }

Matrix linear_combination(const Matrix& coeffs, const std::vector<Matrix>& mats, Field field, std::size_t rows,
                          std::size_t cols) {
  if (coeffs.rows() != mats.size()) throw DimensionMismatch("linear_combination: coefficient count mismatch");
  Matrix out(field, rows, cols);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    Scalar c = coeffs(k, 0);
    if (c.is_zero()) continue;
    out = out + mats[k].scaled(c);
  }
  return out;
}

}  // namespace comatrix
