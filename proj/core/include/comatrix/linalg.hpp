#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "comatrix/matrix.hpp"

namespace comatrix {

struct RrefResult {
  Matrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Particular solution of a*x = b with free variables set to zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Linear subspace of field^n stored as its reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  /// Span of the rows of `rows`.
  static Subspace from_rows(const Matrix& rows);
  /// Span of the columns of `cols`.
  static Subspace from_columns(const Matrix& cols) { return from_rows(cols.transpose()); }
  static Subspace zero(Field field, std::size_t ambient_dim);
  static Subspace full(Field field, std::size_t ambient_dim);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  /// dim x ambient_dim, RREF, no zero rows.
  const Matrix& basis() const { return basis_; }
  /// ambient_dim x dim, basis vectors as columns.
  Matrix columns() const { return basis_.transpose(); }
  Matrix vector(std::size_t i) const { return basis_.row_at(i).transpose(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Matrix& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of a member vector in the stored basis; throws if v is not a member.
  Matrix coords(const Matrix& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim_ != b.ambient_dim_) return a.ambient_dim_ < b.ambient_dim_;
    return a.basis_ < b.basis_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);

/// field^n / kernel, with projection (dim x n) and section (n x dim).
struct QuotientSpace {
  std::size_t ambient_dim = 0;
  Subspace kernel;
  std::size_t dim = 0;
  Matrix projection;
  Matrix section;
};

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& kernel);

/// Matrix of X -> a * X * b acting on row-major vectorizations.
Matrix sandwich_operator(const Matrix& a, const Matrix& b);

/// Number of subspaces of F_q^n of dimension k, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::int64_t q, std::size_t n, std::size_t k);
std::uint64_t subspace_count(const Field& field, std::size_t n, std::optional<std::size_t> dim_filter);

struct EnumerationOptions {
  std::optional<std::size_t> dim_filter;
  std::uint64_t budget = 1'000'000;
  unsigned workers = 1;
};

/// Visits each subspace once: by dimension, then pivot columns, then free entries
/// in row-major lexicographic order. Returning false from `visit` stops early.
void for_each_subspace(const Field& field, std::size_t n, const EnumerationOptions& options,
                       const std::function<bool(const Subspace&)>& visit);

/// Same order as for_each_subspace. With several workers the pivot patterns are
/// split across threads and the results concatenated in canonical order.
std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t n, const EnumerationOptions& options = {});

}  // namespace comatrix
