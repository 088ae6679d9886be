#include "comatrix/linalg.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace comatrix {

RrefResult rref(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  std::vector<Scalar> a(m.data().begin(), m.data().end());
  auto at = [&](std::size_t r, std::size_t c) -> Scalar& { return a[r * nc + c]; };

  RrefResult out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t piv = row;
    while (piv < nr && at(piv, col).is_zero()) ++piv;
    if (piv == nr) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < nc; ++c) std::swap(at(piv, c), at(row, c));
    }
    Scalar inv = f.inv(at(row, col));
    for (std::size_t c = col; c < nc; ++c) at(row, c) = f.mul(at(row, c), inv);
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == row) continue;
      Scalar factor = at(r, col);
      if (factor.is_zero()) continue;
      for (std::size_t c = col; c < nc; ++c) {
        Scalar v = at(row, c);
        if (!v.is_zero()) at(r, c) = f.sub(at(r, c), f.mul(factor, v));
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.matrix = Matrix(f, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out.matrix.set(r, c, at(r, c));
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: a and b have different row counts");
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  Matrix aug = Matrix::hstack({a, b}, a.field(), a.rows());
  RrefResult r = rref(aug);
  for (std::size_t p : r.pivots) {
    if (p >= n) return std::nullopt;
  }
  Matrix x(a.field(), n, k);
  for (std::size_t i = 0; i < r.rank; ++i) {
    for (std::size_t j = 0; j < k; ++j) x.set(r.pivots[i], j, r.matrix(i, n + j));
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.field(), m.rows()));
}

Subspace Subspace::from_rows(const Matrix& rows) {
  RrefResult r = rref(rows);
  Subspace s;
  s.ambient_dim_ = rows.cols();
  s.basis_ = r.matrix.block(0, 0, r.rank, rows.cols());
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::zero(Field field, std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = Matrix(field, 0, ambient_dim);
  return s;
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = Matrix::identity(field, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Matrix Subspace::coords(const Matrix& v) const {
  if (v.rows() != ambient_dim_ || v.cols() != 1) throw DimensionMismatch("coords: vector length mismatch");
  Matrix c(field(), dim(), 1);
  for (std::size_t i = 0; i < dim(); ++i) c.set(i, 0, v(pivots_[i], 0));
  if (!(basis_.transpose() * c == v)) throw DimensionMismatch("coords: vector is not in the subspace");
  return c;
}

bool Subspace::contains(const Matrix& v) const {
  if (v.rows() != ambient_dim_ || v.cols() != 1) throw DimensionMismatch("contains: vector length mismatch");
  Matrix c(field(), dim(), 1);
  for (std::size_t i = 0; i < dim(); ++i) c.set(i, 0, v(pivots_[i], 0));
  return basis_.transpose() * c == v;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionMismatch("contains: ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.vector(i))) return false;
  }
  return true;
}

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Matrix> rows;
  const Field& f = m.field();
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Matrix v(f, 1, n);
    v.set(0, free, f.one());
    for (std::size_t i = 0; i < r.rank; ++i) v.set(0, r.pivots[i], f.neg(r.matrix(i, free)));
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return Subspace::zero(f, n);
  return Subspace::from_rows(Matrix::vstack(rows, f, n));
}

Subspace image(const Matrix& m) { return Subspace::from_columns(m); }

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("intersect: ambient dimension mismatch");
  const Field& f = u.field();
  if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(f, u.ambient_dim());
  // x = U^T a = V^T b  <=>  [U^T | -V^T] (a; b) = 0
  Matrix system = Matrix::hstack({u.columns(), -v.columns()}, f, u.ambient_dim());
  Subspace k = kernel(system);
  if (k.dim() == 0) return Subspace::zero(f, u.ambient_dim());
  Matrix a = k.basis().block(0, 0, k.dim(), u.dim());
  return Subspace::from_rows(a * u.basis());
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("sum: ambient dimension mismatch");
  return Subspace::from_rows(Matrix::vstack({u.basis(), v.basis()}, u.field(), u.ambient_dim()));
}

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& kernel) {
  if (kernel.ambient_dim() != ambient_dim) throw DimensionMismatch("quotient: kernel lives in another space");
  const Field& f = kernel.field();
  std::vector<bool> is_pivot(ambient_dim, false);
  for (std::size_t p : kernel.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) free.push_back(c);

  QuotientSpace q;
  q.ambient_dim = ambient_dim;
  q.kernel = kernel;
  q.dim = free.size();
  q.projection = Matrix(f, q.dim, ambient_dim);
  q.section = Matrix(f, ambient_dim, q.dim);
  for (std::size_t j = 0; j < free.size(); ++j) {
    q.projection.set(j, free[j], f.one());
    q.section.set(free[j], j, f.one());
    for (std::size_t r = 0; r < kernel.dim(); ++r) {
      q.projection.set(j, kernel.pivots()[r], f.neg(kernel.basis()(r, free[j])));
    }
  }
  return q;
}

Matrix sandwich_operator(const Matrix& a, const Matrix& b) { return Matrix::kron(a, b.transpose()); }

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_pow(std::uint64_t q, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = sat_mul(r, q);
  return r;
}

void require_finite(const Field& field) {
  if (!field.is_finite()) throw InfiniteField("subspace enumeration needs a finite field, got " + field.name());
}

// All k-subsets of {0..n-1} in lexicographic order.
void pivot_patterns(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

// Visits all RREF matrices with the given pivot columns; false from visit aborts.
bool for_each_with_pivots(const Field& field, std::size_t n, const std::vector<std::size_t>& pivots,
                          const std::function<bool(const Subspace&)>& visit) {
  const std::size_t k = pivots.size();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::pair<std::size_t, std::size_t>> free_slots;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = pivots[r] + 1; c < n; ++c)
      if (!is_pivot[c]) free_slots.emplace_back(r, c);

  const std::int64_t q = field.characteristic();
  std::vector<std::int64_t> digits(free_slots.size(), 0);
  Matrix base(field, k, n);
  for (std::size_t r = 0; r < k; ++r) base.set(r, pivots[r], field.one());
  while (true) {
    Matrix m = base;
    for (std::size_t s = 0; s < free_slots.size(); ++s) m.set(free_slots[s].first, free_slots[s].second, {digits[s], 1});
    if (!visit(Subspace::from_rows(m.rows() == 0 ? Matrix(field, 0, n) : m))) return false;
    std::size_t pos = free_slots.size();
    while (pos > 0) {
      --pos;
      if (++digits[pos] < q) break;
      digits[pos] = 0;
      if (pos == 0) return true;
    }
    if (free_slots.empty()) return true;
  }
}

std::vector<std::size_t> dims_for(std::size_t n, const std::optional<std::size_t>& filter) {
  std::vector<std::size_t> dims;
  if (filter) {
    if (*filter <= n) dims.push_back(*filter);
  } else {
    for (std::size_t k = 0; k <= n; ++k) dims.push_back(k);
  }
  return dims;
}

}  // namespace

std::uint64_t gaussian_binomial(std::int64_t q, std::size_t n, std::size_t k) {
  if (k > n) return 0;
  // Sum over pivot patterns of q^(number of free entries) avoids division.
  std::vector<std::vector<std::size_t>> patterns;
  pivot_patterns(n, k, patterns);
  std::uint64_t total = 0;
  for (const auto& piv : patterns) {
    std::size_t free = 0;
    for (std::size_t r = 0; r < k; ++r) free += (n - piv[r] - 1) - (k - r - 1);
    total = sat_add(total, sat_pow(static_cast<std::uint64_t>(q), free));
  }
  return total;
}

std::uint64_t subspace_count(const Field& field, std::size_t n, std::optional<std::size_t> dim_filter) {
  require_finite(field);
  std::uint64_t total = 0;
  for (std::size_t k : dims_for(n, dim_filter)) total = sat_add(total, gaussian_binomial(field.characteristic(), n, k));
  return total;
}

void for_each_subspace(const Field& field, std::size_t n, const EnumerationOptions& options,
                       const std::function<bool(const Subspace&)>& visit) {
  require_finite(field);
  std::uint64_t count = subspace_count(field, n, options.dim_filter);
  if (count > options.budget) throw BudgetExceeded("subspace enumeration", count, options.budget);
  for (std::size_t k : dims_for(n, options.dim_filter)) {
    std::vector<std::vector<std::size_t>> patterns;
    pivot_patterns(n, k, patterns);
    for (const auto& piv : patterns) {
      if (!for_each_with_pivots(field, n, piv, visit)) return;
    }
  }
}

std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t n, const EnumerationOptions& options) {
  require_finite(field);
  std::uint64_t count = subspace_count(field, n, options.dim_filter);
  if (count > options.budget) throw BudgetExceeded("subspace enumeration", count, options.budget);

  std::vector<std::vector<std::size_t>> patterns;
  for (std::size_t k : dims_for(n, options.dim_filter)) pivot_patterns(n, k, patterns);
  std::vector<std::vector<Subspace>> chunks(patterns.size());
  auto work = [&](std::size_t i) {
    for_each_with_pivots(field, n, patterns[i], [&](const Subspace& s) {
      chunks[i].push_back(s);
      return true;
    });
  };
  unsigned workers = std::max(1u, options.workers);
  if (workers == 1 || patterns.size() < 2) {
    for (std::size_t i = 0; i < patterns.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < patterns.size(); i += workers) work(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(count));
  for (auto& c : chunks)
    for (auto& s : c) out.push_back(std::move(s));
  return out;
}

}  // namespace comatrix
