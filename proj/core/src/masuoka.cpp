#include "comatrix/masuoka.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <thread>

namespace comatrix {

namespace {

constexpr std::size_t kMissing = std::numeric_limits<std::size_t>::max();

Subspace span(const Field& f, std::size_t n, const std::vector<Matrix>& vectors) {
  if (vectors.empty()) return Subspace::zero(f, n);
  return Subspace::from_columns(Matrix::hstack(vectors, f, n));
}

std::vector<Matrix> basis_vectors(const Subspace& s) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(s.vector(i));
  return out;
}

std::vector<Matrix> lambda_images(const EndoRing& s) {
  std::vector<Matrix> out;
  const Matrix& l = s.extension.morphism.matrix;
  for (std::size_t i = 0; i < l.cols(); ++i) out.push_back(l.column_at(i));
  return out;
}

void put_column(Matrix& m, std::size_t j, const Matrix& v) {
  for (std::size_t r = 0; r < v.rows(); ++r) m.set(r, j, v(r, 0));
}

// Constraint matrix of a linear map on rows x cols matrices, one column per E_rs.
Matrix system_matrix(const Field& f, std::size_t rows, std::size_t cols,
                     const std::function<Matrix(const Matrix&)>& lin) {
  std::vector<Matrix> columns;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) columns.push_back(lin(Matrix::elementary(f, rows, cols, r, c)));
  if (columns.empty()) return Matrix(f, 0, 0);
  return Matrix::hstack(columns, f, columns.front().rows());
}

std::uint64_t saturating_power(std::int64_t p, std::size_t k) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= static_cast<std::uint64_t>(p);
  }
  return out;
}

// I with its (B, B)-bimodule structure in coordinates of I.
Bimodule ideal_bimodule(const EndoRing& s, const SubBimodule& i) {
  const Algebra& alg = *s.algebra;
  const Field& f = alg.field();
  std::vector<Matrix> left, right;
  for (const auto& b : lambda_images(s)) {
    Matrix l(f, i.dim(), i.dim()), r(f, i.dim(), i.dim());
    for (std::size_t q = 0; q < i.dim(); ++q) {
      put_column(l, q, i.space.coords(alg.multiply(b, i.space.vector(q))));
      put_column(r, q, i.space.coords(alg.multiply(i.space.vector(q), b)));
    }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  const AlgebraPtr& bsrc = s.extension.morphism.source;
  return {bsrc, bsrc, i.dim(), std::move(left), std::move(right)};
}

std::string morphism_name(std::size_t i) { return "g" + std::to_string(i); }

}  // namespace

bool is_sub_bimodule(const EndoRing& s, const Subspace& space) {
  const Algebra& alg = *s.algebra;
  for (const auto& b : lambda_images(s)) {
    for (std::size_t q = 0; q < space.dim(); ++q) {
      Matrix x = space.vector(q);
      if (!space.contains(alg.multiply(b, x)) || !space.contains(alg.multiply(x, b))) return false;
    }
  }
  return true;
}

SubBimodule sub_bimodule(const EndoRing& s, const std::vector<Matrix>& generators) {
  const Algebra& alg = *s.algebra;
  const Field& f = alg.field();
  Subspace cur = span(f, alg.dim(), generators);
  while (true) {
    std::vector<Matrix> vs = basis_vectors(cur);
    for (const auto& b : lambda_images(s)) {
      for (std::size_t q = 0; q < cur.dim(); ++q) {
        vs.push_back(alg.multiply(b, cur.vector(q)));
        vs.push_back(alg.multiply(cur.vector(q), b));
      }
    }
    Subspace next = span(f, alg.dim(), vs);
    if (next.dim() == cur.dim()) return {cur};
    cur = std::move(next);
  }
}

SubBimodule unit_bimodule(const EndoRing& s) {
  return {span(s.algebra->field(), s.algebra->dim(), lambda_images(s))};
}

SubBimodule full_bimodule(const EndoRing& s) { return {Subspace::full(s.algebra->field(), s.algebra->dim())}; }

SubBimodule product(const EndoRing& s, const SubBimodule& i, const SubBimodule& j) {
  const Algebra& alg = *s.algebra;
  if (i.space.ambient_dim() != alg.dim() || j.space.ambient_dim() != alg.dim()) {
    throw DimensionMismatch("product of sub-bimodules of different rings");
  }
  std::vector<Matrix> vs;
  for (std::size_t p = 0; p < i.dim(); ++p)
    for (std::size_t q = 0; q < j.dim(); ++q) vs.push_back(alg.multiply(i.space.vector(p), j.space.vector(q)));
  return {span(alg.field(), alg.dim(), vs)};
}

std::string describe(const SubBimodule& i) {
  std::string out = "span{";
  for (std::size_t q = 0; q < i.dim(); ++q) {
    if (q) out += ", ";
    out += i.space.vector(q).transpose().bracketed();
  }
  return out + "}";
}

std::optional<std::size_t> MonoidTable::inverse(std::size_t i) const {
  for (std::size_t j = 0; j < size(); ++j) {
    if (table[i][j] == unit && table[j][i] == unit) return j;
  }
  return std::nullopt;
}

std::vector<std::size_t> MonoidTable::units() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (inverse(i)) out.push_back(i);
  return out;
}

bool MonoidTable::is_commutative() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (table[i][j] != table[j][i]) return false;
  return true;
}

CheckReport check_monoid(const MonoidTable& m) {
  CheckReport report;
  report.subject = "monoid table";
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++report.checked;
      if (m(i, j) == kMissing) report.fail("closure", std::to_string(i) + "*" + std::to_string(j));
    }
  }
  if (!report.ok()) return report;
  for (std::size_t i = 0; i < n; ++i) {
    report.checked += 2;
    if (m(m.unit, i) != i || m(i, m.unit) != i) report.fail("unit law", std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++report.checked;
        if (m(m(i, j), k) != m(i, m(j, k))) {
          report.fail("associativity", "(" + std::to_string(i) + "*" + std::to_string(j) + ")*" + std::to_string(k));
        }
      }
  }
  return report;
}

std::optional<GammaCertificate> membership(const EndoRing& s, const SubBimodule& i, Hand hand, Representative rep) {
  const Algebra& alg = *s.algebra;
  const Field& f = alg.field();
  const std::size_t ds = alg.dim();
  const AlgebraPtr& b = s.extension.morphism.source;
  Bimodule ideal = ideal_bimodule(s, i);
  std::vector<Matrix> lambda = lambda_images(s);
  std::vector<Matrix> s_left, s_right, by_b_right, by_b_left;
  for (std::size_t k = 0; k < ds; ++k) {
    s_left.push_back(alg.left_mult(k));
    s_right.push_back(alg.right_mult(k));
  }
  for (const auto& l : lambda) {
    by_b_right.push_back(alg.right_mult_by(l));
    by_b_left.push_back(alg.left_mult_by(l));
  }
  const bool left = hand == Hand::Left;
  TensorProduct t = left ? TensorProduct(Bimodule(s.algebra, b, ds, s_left, by_b_right), ideal)
                         : TensorProduct(ideal, Bimodule(b, s.algebra, ds, by_b_left, s_right));
  if (t.dim() != ds) return std::nullopt;
  Matrix raw(f, ds, ds * i.dim());
  for (std::size_t p = 0; p < ds; ++p) {
    for (std::size_t q = 0; q < i.dim(); ++q) {
      if (left) {
        put_column(raw, p * i.dim() + q, alg.multiply(alg.basis_vector(p), i.space.vector(q)));
      } else {
        put_column(raw, q * ds + p, alg.multiply(i.space.vector(q), alg.basis_vector(p)));
      }
    }
  }
  Matrix m = t.descend(raw);
  std::optional<Matrix> inv = inverse(m);
  if (!inv) return std::nullopt;
  Matrix x = t.section() * (*inv * alg.unit());
  if (rep == Representative::Shifted) {
    for (std::size_t k = 0; k < t.space().kernel.dim(); ++k) x = x + t.space().kernel.vector(k);
  }
  GammaCertificate cert;
  cert.hand = hand;
  cert.ideal = i;
  const std::size_t n2 = left ? i.dim() : ds;
  for (std::size_t r = 0; r < x.rows(); ++r) {
    Scalar c = x(r, 0);
    if (c.is_zero()) continue;
    std::size_t u = r / n2, v = r % n2;
    if (left) {
      cert.pairs.emplace_back(alg.basis_vector(u).scaled(c), i.space.vector(v));
    } else {
      cert.pairs.emplace_back(i.space.vector(u).scaled(c), alg.basis_vector(v));
    }
  }
  return cert;
}

SubBimodule inverse_candidate(const EndoRing& s, const SubBimodule& i) {
  const Algebra& alg = *s.algebra;
  const Field& f = alg.field();
  QuotientSpace q = quotient(alg.dim(), unit_bimodule(s).space);
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < i.dim(); ++k) {
    Matrix x = i.space.vector(k);
    blocks.push_back(q.projection * alg.right_mult_by(x));
    blocks.push_back(q.projection * alg.left_mult_by(x));
  }
  if (blocks.empty()) return full_bimodule(s);
  return {kernel(Matrix::vstack(blocks, f, alg.dim()))};
}

bool is_invertible(const EndoRing& s, const SubBimodule& i) {
  SubBimodule j = inverse_candidate(s, i);
  SubBimodule unit = unit_bimodule(s);
  return product(s, i, j) == unit && product(s, j, i) == unit;
}

std::vector<SubBimodule> enumerate_sub_bimodules(const EndoRing& s, const EnumerationSettings& settings) {
  EnumerationOptions opts;
  opts.budget = settings.budget;
  opts.workers = settings.workers;
  std::vector<SubBimodule> out;
  for (auto& space : enumerate_subspaces(s.algebra->field(), s.algebra->dim(), opts)) {
    if (is_sub_bimodule(s, space)) out.push_back({std::move(space)});
  }
  return out;
}

namespace {

SubBimoduleMonoid inv_from(const EndoRing& s, const std::vector<SubBimodule>& subs) {
  SubBimoduleMonoid out;
  SubBimodule unit = unit_bimodule(s);
  out.elements.push_back(unit);
  for (const auto& i : subs) {
    if (!(i == unit) && is_invertible(s, i)) out.elements.push_back(i);
  }
  std::map<Subspace, std::size_t> index;
  for (std::size_t k = 0; k < out.elements.size(); ++k) index[out.elements[k].space] = k;
  const std::size_t n = out.elements.size();
  out.table.unit = 0;
  out.table.table.assign(n, std::vector<std::size_t>(n, kMissing));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(product(s, out.elements[a], out.elements[b]).space);
      if (it != index.end()) out.table.table[a][b] = it->second;
    }
  return out;
}

struct SigmaComodules {
  Comodule rho;
};

SubBimodule hom_as_sub(const ComatrixCoring& c, const Comodule& x, const Comodule& y) {
  HomSpace h = hom_comodules(x, y);
  std::vector<Matrix> vs;
  for (const auto& m : h.maps) vs.push_back(c.frame.endo.coords(m));
  return {span(c.frame.endo.algebra->field(), c.frame.endo.algebra->dim(), vs)};
}

SubBimodule f_left_with(const ComatrixCoring& c, const Comodule& rho, const CoringMorphism& g) {
  return hom_as_sub(c, induced_comodule(rho, g), rho);
}

SubBimodule f_right_with(const ComatrixCoring& c, const Comodule& rho, const CoringMorphism& g) {
  return hom_as_sub(c, rho, induced_comodule(rho, g));
}

}  // namespace

SubBimoduleMonoid enumerate_inv(const EndoRing& s, const EnumerationSettings& settings) {
  return inv_from(s, enumerate_sub_bimodules(s, settings));
}

SubBimodule f_left(const ComatrixCoring& c, const CoringMorphism& g) {
  return f_left_with(c, sigma_comodule(c), g);
}

SubBimodule f_right(const ComatrixCoring& c, const CoringMorphism& g) {
  return f_right_with(c, sigma_comodule(c), g);
}

CoringMorphism gamma(const ComatrixCoring& c, const GammaCertificate& cert) {
  const FramedBimodule& fr = c.frame;
  const Field& f = fr.sigma.field();
  const std::size_t nd = fr.dual.module.dim();
  const std::size_t m = fr.sigma.dim();
  std::vector<std::pair<Matrix, Matrix>> acting;
  for (const auto& [first, second] : cert.pairs) acting.emplace_back(first, fr.endo.endomorphism(second));
  Matrix raw(f, c.tensor.dim(), nd * m);
  for (std::size_t k = 0; k < nd; ++k) {
    Matrix uk = Matrix::unit_column(f, nd, k);
    for (std::size_t j = 0; j < m; ++j) {
      Matrix col(f, c.tensor.dim(), 1);
      for (const auto& [first, second] : acting) {
        col = col + c.tensor.pure(fr.dual_times(uk, first), second.column_at(j));
      }
      put_column(raw, k * m + j, col);
    }
  }
  return {c.coring, c.coring, c.tensor.descend(raw)};
}

CoringMorphism gamma_sweedler(const SweedlerCoring& sw, const GammaCertificate& cert) {
  const Algebra& alg = *sw.extension.morphism.target;
  const Field& f = alg.field();
  const std::size_t n = alg.dim();
  Matrix raw(f, sw.tensor.dim(), n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Matrix col(f, sw.tensor.dim(), 1);
      for (const auto& [first, second] : cert.pairs) {
        col = col + sw.tensor.pure(alg.multiply(alg.basis_vector(a), first), alg.multiply(second, alg.basis_vector(b)));
      }
      put_column(raw, a * n + b, col);
    }
  }
  return {sw.coring, sw.coring, sw.tensor.descend(raw)};
}

std::optional<std::size_t> EndomorphismMonoid::index_of(const Matrix& m) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].matrix == m) return i;
  return std::nullopt;
}

EndomorphismMonoid coring_endomorphisms(const CoringPtr& c, const EnumerationSettings& settings) {
  const Field& f = c->field();
  const std::size_t d = c->dim();
  const auto& left = c->module.left_action();
  const auto& right = c->module.right_action();
  Matrix system = system_matrix(f, d, d, [&](const Matrix& e) {
    std::vector<Matrix> parts;
    for (const auto& l : left) parts.push_back((e * l - l * e).vectorize());
    for (const auto& r : right) parts.push_back((e * r - r * e).vectorize());
    parts.push_back((c->counit * e).vectorize());
    return Matrix::vstack(parts, f, 1);
  });
  std::vector<Matrix> rhs_parts(left.size() + right.size(), Matrix(f, d * d, 1));
  rhs_parts.push_back(c->counit.vectorize());
  Matrix rhs = Matrix::vstack(rhs_parts, f, 1);

  EndomorphismMonoid out;
  std::optional<Matrix> particular = solve(system, rhs);
  if (!particular) return out;
  Subspace free = kernel(system);
  const std::size_t k = free.dim();
  if (k > 0 && !f.is_finite()) throw InfiniteField("coring endomorphisms form an infinite affine space over " + f.name());
  out.affine_points = k == 0 ? 1 : saturating_power(f.characteristic(), k);
  if (out.affine_points > settings.budget) {
    throw BudgetExceeded("coring endomorphism candidates", out.affine_points, settings.budget);
  }
  std::vector<Matrix> directions;
  for (std::size_t i = 0; i < k; ++i) directions.push_back(Matrix::unvectorize(free.vector(i), d, d));
  const Matrix base = Matrix::unvectorize(*particular, d, d);
  const std::uint64_t points = out.affine_points;
  const std::int64_t p = k == 0 ? 1 : f.characteristic();

  auto candidate = [&](std::uint64_t t) {
    Matrix phi = base;
    for (std::size_t i = k; i > 0; --i) {
      std::int64_t digit = static_cast<std::int64_t>(t % static_cast<std::uint64_t>(p));
      t /= static_cast<std::uint64_t>(p);
      if (digit) phi = phi + directions[i - 1].scaled(f.from_int(digit));
    }
    return phi;
  };
  auto accepts = [&](const Matrix& phi) {
    return c->comult * phi == tensor_maps(c->square, c->square, phi, phi) * c->comult;
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(settings.workers, static_cast<unsigned>(std::min<std::uint64_t>(points, 64))));
  std::vector<std::vector<std::uint64_t>> found(workers);
  auto run = [&](unsigned w) {
    std::uint64_t lo = points * w / workers, hi = points * (w + 1) / workers;
    for (std::uint64_t t = lo; t < hi; ++t)
      if (accepts(candidate(t))) found[w].push_back(t);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& th : threads) th.join();
  }
  for (const auto& chunk : found)
    for (auto t : chunk) out.elements.push_back({c, c, candidate(t)});

  std::map<Matrix, std::size_t> index;
  for (std::size_t i = 0; i < out.elements.size(); ++i) index[out.elements[i].matrix] = i;
  const std::size_t n = out.elements.size();
  out.table.table.assign(n, std::vector<std::size_t>(n, kMissing));
  out.table.unit = kMissing;
  auto id = index.find(Matrix::identity(f, d));
  if (id != index.end()) out.table.unit = id->second;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(out.elements[a].matrix * out.elements[b].matrix);
      if (it != index.end()) out.table.table[a][b] = it->second;
    }
  return out;
}

CoringMorphism hat_map(const ComatrixCoring& c, const SweedlerCoring& sw, const CoringMorphism& g) {
  const FramedBimodule& fr = c.frame;
  const EndoRing& e = fr.endo;
  const Field& f = fr.sigma.field();
  const std::size_t ds = e.algebra->dim();
  const std::size_t m = fr.sigma.dim();
  const std::size_t nd = fr.dual.module.dim();
  if (!same_algebra(sw.extension.morphism.target, e.algebra)) {
    throw InvalidStructure("hat map: Sweedler coring is not over the endomorphism ring");
  }
  auto xi = [&](const Matrix& u, const Matrix& functional) { return e.coords(rank_one_right(fr.sigma, u, functional)); };
  // xi(u_q (x) e_j*) for all q, j
  std::vector<std::vector<Matrix>> right_xi(m);
  for (std::size_t q = 0; q < m; ++q)
    for (std::size_t j = 0; j < fr.basis.size(); ++j)
      right_xi[q].push_back(xi(Matrix::unit_column(f, m, q), fr.dual_functional(j)));

  Matrix raw(f, sw.tensor.dim(), ds * ds);
  for (std::size_t a = 0; a < ds; ++a) {
    for (std::size_t b = 0; b < ds; ++b) {
      Matrix col(f, sw.tensor.dim(), 1);
      for (std::size_t i = 0; i < fr.basis.size(); ++i) {
        Matrix x = e.rep[a] * fr.basis.elements[i];
        for (std::size_t j = 0; j < fr.basis.size(); ++j) {
          Matrix y = e.rep[b] * fr.basis.elements[j];
          Matrix image = c.tensor.section() * (g.matrix * c.tensor.pure(fr.basis.functionals[i], y));
          for (std::size_t r = 0; r < image.rows(); ++r) {
            Scalar coef = image(r, 0);
            if (coef.is_zero()) continue;
            std::size_t p = r / m, q = r % m;
            Matrix left = xi(x, fr.dual.functionals[p]);
            col = col + sw.tensor.pure(left, right_xi[q][j]).scaled(coef);
          }
        }
      }
      put_column(raw, a * ds + b, col);
    }
  }
  (void)nd;
  return {sw.coring, sw.coring, sw.tensor.descend(raw)};
}

SubBimodule fixed_elements(const SweedlerCoring& sw, const CoringMorphism& h) {
  const Algebra& alg = *sw.extension.morphism.target;
  const Field& f = alg.field();
  std::vector<Matrix> cols;
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    Matrix s = alg.basis_vector(a);
    cols.push_back(h.matrix * sw.tensor.pure(s, alg.unit()) - sw.tensor.pure(alg.unit(), s));
  }
  return {kernel(Matrix::hstack(cols, f, sw.tensor.dim()))};
}

Separability is_separable_bimodule(const Bimodule& sigma) {
  const Field& f = sigma.field();
  const Algebra& b = *sigma.left_algebra();
  DualModule ld = left_dual(sigma);
  TensorProduct t(sigma, ld.module);
  const std::size_t nl = ld.module.dim();
  Matrix raw(f, b.dim(), sigma.dim() * nl);
  for (std::size_t j = 0; j < sigma.dim(); ++j)
    for (std::size_t k = 0; k < nl; ++k) put_column(raw, j * nl + k, ld.functionals[k].column_at(j));
  Matrix ev = t.descend(raw);
  const Bimodule& tb = t.bimodule();
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < b.dim(); ++i) blocks.push_back(tb.left_action()[i] - tb.right_action()[i]);
  blocks.push_back(ev);
  std::vector<Matrix> rhs(b.dim(), Matrix(f, t.dim(), 1));
  rhs.push_back(b.unit());
  Separability out;
  out.section = solve(Matrix::vstack(blocks, f, t.dim()), Matrix::vstack(rhs, f, 1));
  out.separable = out.section.has_value();
  return out;
}

SplitExtension is_split_extension(const RingExtension& ext) {
  const Algebra& b = *ext.morphism.source;
  const Algebra& s = *ext.morphism.target;
  const Field& f = b.field();
  std::vector<Matrix> lambda;
  for (std::size_t i = 0; i < b.dim(); ++i) lambda.push_back(ext.morphism.matrix.column_at(i));
  Matrix system = system_matrix(f, b.dim(), s.dim(), [&](const Matrix& a) {
    std::vector<Matrix> parts;
    for (std::size_t i = 0; i < b.dim(); ++i) {
      parts.push_back((a * s.left_mult_by(lambda[i]) - b.left_mult(i) * a).vectorize());
      parts.push_back((a * s.right_mult_by(lambda[i]) - b.right_mult(i) * a).vectorize());
    }
    parts.push_back(a * s.unit());
    return Matrix::vstack(parts, f, 1);
  });
  std::vector<Matrix> rhs(2 * b.dim(), Matrix(f, b.dim() * s.dim(), 1));
  rhs.push_back(b.unit());
  SplitExtension out;
  std::optional<Matrix> sol = solve(system, Matrix::vstack(rhs, f, 1));
  if (sol) {
    out.split = true;
    out.retraction = Matrix::unvectorize(*sol, b.dim(), s.dim());
  }
  return out;
}

FreeBasis free_basis(const Bimodule& m, Hand side, std::uint64_t budget) {
  FreeBasis out;
  const Field& f = m.field();
  const auto& acts = side == Hand::Left ? m.left_action() : m.right_action();
  const std::size_t dr = acts.size();
  const std::size_t n = m.dim();
  if (!f.is_finite()) {
    out.reason = "free-basis search needs a finite field";
    return out;
  }
  if (n == 0 || n % dr != 0) {
    out.reason = "dimension " + std::to_string(n) + " is not a positive multiple of " + std::to_string(dr);
    return out;
  }
  const std::size_t r = n / dr;
  const std::uint64_t total = saturating_power(f.characteristic(), n);
  if (total > budget) {
    out.reason = "module has more than " + std::to_string(budget) + " elements";
    return out;
  }
  auto element = [&](std::uint64_t t) {
    Matrix v(f, n, 1);
    for (std::size_t i = n; i > 0; --i) {
      v.set(i - 1, 0, f.from_int(static_cast<std::int64_t>(t % static_cast<std::uint64_t>(f.characteristic()))));
      t /= static_cast<std::uint64_t>(f.characteristic());
    }
    return v;
  };
  std::uint64_t visited = 0;
  std::vector<Matrix> chosen;
  std::function<bool(std::uint64_t, const std::vector<Matrix>&)> search = [&](std::uint64_t start,
                                                                               const std::vector<Matrix>& spanned) {
    if (chosen.size() == r) return true;
    for (std::uint64_t t = start; t < total; ++t) {
      if (++visited > budget) return false;
      Matrix u = element(t);
      std::vector<Matrix> next = spanned;
      for (const auto& a : acts) next.push_back(a * u);
      if (rank(Matrix::hstack(next, f, n)) != spanned.size() + dr) continue;
      chosen.push_back(u);
      if (search(t + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (search(1, {})) {
    out.found = true;
    out.basis = chosen;
  } else {
    out.reason = visited > budget ? "search budget exhausted" : "no free basis exists";
  }
  return out;
}

HypothesisReport check_hypotheses(const FramedBimodule& fr, std::uint64_t budget) {
  HypothesisReport h;
  h.separability = is_separable_bimodule(fr.sigma);
  h.left_free = free_basis(fr.sigma, Hand::Left, budget);
  h.dual_right_free = free_basis(fr.dual.module, Hand::Right, budget);
  const bool flat = h.left_free.found || h.dual_right_free.found;
  h.flatness = flat ? "verified" : "unverified";
  if (h.left_free.found) {
    h.summary = "Sigma is free of rank " + std::to_string(h.left_free.basis.size()) + " over B";
  } else if (h.dual_right_free.found) {
    h.summary = "Sigma* is free of rank " + std::to_string(h.dual_right_free.basis.size()) + " over B";
  } else {
    h.summary = "flatness unverified: " + h.left_free.reason;
  }
  h.summary += h.separability.separable ? "; Sigma is a separable bimodule" : "; Sigma is not a separable bimodule";
  return h;
}

bool TheoremBundle::ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.ok(); });
}

namespace {

Coring opposite_coring(const Coring& c) {
  AlgebraPtr op = opposite_algebra(c.base);
  Bimodule module = opposite_bimodule(c.module, op, op);
  TensorProduct square(module, module);
  const Field& f = c.field();
  const std::size_t d = c.dim();
  Matrix swap(f, d * d, d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) swap.set(y * d + x, x * d + y, f.one());
  Coring out;
  out.name = "opposite of " + c.name;
  out.base = op;
  out.module = module;
  out.square = square;
  out.comult = square.projection() * swap * c.square.section() * c.comult;
  out.counit = c.counit;
  return out;
}

void expect(CheckReport& r, bool cond, const std::string& identity, const std::string& witness) {
  ++r.checked;
  if (!cond) r.fail(identity, witness);
}

}  // namespace

TheoremBundle verify_theorems(const FramedBimodule& fr, const EnumerationSettings& settings) {
  TheoremBundle out;
  out.subject = "bimodule of dimension " + std::to_string(fr.sigma.dim());
  const EndoRing& s = fr.endo;
  ComatrixCoring c = build_comatrix_coring(fr);
  SweedlerCoring sw = build_sweedler_coring(s.extension);
  Comodule rho = sigma_comodule(c);
  const Field& f = fr.sigma.field();
  const SubBimodule unit = unit_bimodule(s);

  CheckReport axioms = check_coring_axioms(*c.coring);
  axioms.merge(check_coring_axioms(*sw.coring));
  axioms.merge(check_frame(fr));
  axioms.subject = "coring axioms";
  out.reports.push_back(axioms);

  std::vector<SubBimodule> subs = enumerate_sub_bimodules(s, settings);
  std::map<Subspace, GammaCertificate> left_certs, right_certs;
  for (const auto& i : subs) {
    if (auto cert = membership(s, i, Hand::Left)) {
      out.left_unital.push_back(i);
      left_certs.emplace(i.space, *cert);
    }
    if (auto cert = membership(s, i, Hand::Right)) {
      out.right_unital.push_back(i);
      right_certs.emplace(i.space, *cert);
    }
  }
  out.inv = inv_from(s, subs);
  out.endos = coring_endomorphisms(c.coring, settings);
  const auto& endos = out.endos.elements;
  const MonoidTable& et = out.endos.table;
  for (const auto& g : endos) {
    out.f_left_images.push_back(f_left_with(c, rho, g));
    out.f_right_images.push_back(f_right_with(c, rho, g));
  }

  CheckReport monoids = check_monoid(out.inv.table);
  monoids.merge(check_monoid(et));
  expect(monoids, et.unit != kMissing, "identity is a coring endomorphism", "id");
  for (std::size_t i = 0; i < endos.size(); ++i) {
    CheckReport r = check_coring_morphism(endos[i]);
    expect(monoids, r.ok(), "enumerated map is a coring morphism", morphism_name(i) + ": " + r.summary());
  }
  monoids.subject = "monoid tables";
  out.reports.push_back(monoids);
  if (!monoids.ok()) return out;

  auto find_endo = [&](const CoringMorphism& g) { return out.endos.index_of(g.matrix); };

  // Left correspondence
  CheckReport left;
  left.subject = "left correspondence";
  expect(left, out.f_left_images[et.unit] == unit, "F_l(id) = B", describe(out.f_left_images[et.unit]));
  for (std::size_t i = 0; i < endos.size(); ++i) {
    const SubBimodule& img = out.f_left_images[i];
    auto it = left_certs.find(img.space);
    expect(left, it != left_certs.end(), "F_l(g) is left unital", morphism_name(i) + " -> " + describe(img));
    if (it != left_certs.end()) {
      expect(left, gamma(c, it->second).matrix == endos[i].matrix, "Gamma_l(F_l(g)) = g", morphism_name(i));
    }
    for (std::size_t j = 0; j < endos.size(); ++j) {
      expect(left, out.f_left_images[et(i, j)] == product(s, img, out.f_left_images[j]), "F_l(g h) = F_l(g) F_l(h)",
             morphism_name(i) + ", " + morphism_name(j));
    }
  }
  for (const auto& i : out.left_unital) {
    const GammaCertificate& cert = left_certs.at(i.space);
    CoringMorphism g = gamma(c, cert);
    auto idx = find_endo(g);
    expect(left, idx.has_value(), "Gamma_l(I) is a coring endomorphism", describe(i));
    if (idx) expect(left, out.f_left_images[*idx] == i, "F_l(Gamma_l(I)) = I", describe(i));
    auto shifted = membership(s, i, Hand::Left, Representative::Shifted);
    expect(left, shifted && gamma(c, *shifted).matrix == g.matrix, "Gamma_l independent of representative",
           describe(i));
  }
  expect(left, out.left_unital.size() == endos.size(), "|End| = |I_l|",
         std::to_string(endos.size()) + " vs " + std::to_string(out.left_unital.size()));
  out.reports.push_back(left);

  // Right correspondence
  CheckReport right;
  right.subject = "right correspondence";
  expect(right, out.f_right_images[et.unit] == unit, "F_r(id) = B", describe(out.f_right_images[et.unit]));
  for (std::size_t i = 0; i < endos.size(); ++i) {
    const SubBimodule& img = out.f_right_images[i];
    auto it = right_certs.find(img.space);
    expect(right, it != right_certs.end(), "F_r(g) is right unital", morphism_name(i) + " -> " + describe(img));
    if (it != right_certs.end()) {
      expect(right, gamma(c, it->second).matrix == endos[i].matrix, "Gamma_r(F_r(g)) = g", morphism_name(i));
    }
    for (std::size_t j = 0; j < endos.size(); ++j) {
      expect(right, out.f_right_images[et(j, i)] == product(s, img, out.f_right_images[j]),
             "F_r(h g) = F_r(g) F_r(h)", morphism_name(i) + ", " + morphism_name(j));
    }
  }
  for (const auto& i : out.right_unital) {
    CoringMorphism g = gamma(c, right_certs.at(i.space));
    auto idx = find_endo(g);
    expect(right, idx.has_value(), "Gamma_r(I) is a coring endomorphism", describe(i));
    if (idx) expect(right, out.f_right_images[*idx] == i, "F_r(Gamma_r(I)) = I", describe(i));
    auto shifted = membership(s, i, Hand::Right, Representative::Shifted);
    expect(right, shifted && gamma(c, *shifted).matrix == g.matrix, "Gamma_r independent of representative",
           describe(i));
  }
  expect(right, out.right_unital.size() == endos.size(), "|End| = |I_r|",
         std::to_string(endos.size()) + " vs " + std::to_string(out.right_unital.size()));
  out.reports.push_back(right);

  // Opposite identification: W = (Sigma*)^o over A^o, End(W) = S^o.
  CheckReport opp;
  opp.subject = "opposite identification";
  {
    AlgebraPtr a_op = opposite_algebra(fr.right_algebra());
    AlgebraPtr b_op = opposite_algebra(fr.left_algebra());
    Bimodule w = opposite_bimodule(fr.dual.module, b_op, a_op);
    FramedBimodule frw = frame(w);
    ComatrixCoring cw = build_comatrix_coring(frw);
    const std::size_t ds = s.algebra->dim();
    Matrix phi(f, frw.endo.algebra->dim(), ds);
    for (std::size_t k = 0; k < ds; ++k) put_column(phi, k, frw.endo.coords(fr.dual_over_s.right_action()[k]));
    AlgebraMorphism phi_m{opposite_algebra(s.algebra), frw.endo.algebra, phi};
    expect(opp, check_algebra_morphism(phi_m).ok() && inverse(phi).has_value(), "S^o = End(W)", "phi");
    expect(opp, phi * s.extension.morphism.matrix == frw.endo.extension.morphism.matrix, "B^o = B^o", "lambda");

    // (w* (x) w)^o -> sum_i w (x) e_i w*(e_i*)
    const std::size_t nw = w.dim();
    const std::size_t ndw = frw.dual.module.dim();
    Matrix raw(f, c.tensor.dim(), ndw * nw);
    for (std::size_t k = 0; k < ndw; ++k)
      for (std::size_t v = 0; v < nw; ++v) {
        Matrix col(f, c.tensor.dim(), 1);
        for (std::size_t i = 0; i < fr.basis.size(); ++i) {
          Matrix a = frw.dual.functionals[k] * fr.basis.functionals[i];
          col = col + c.tensor.pure(Matrix::unit_column(f, nw, v), fr.sigma.act_right(a) * fr.basis.elements[i]);
        }
        put_column(raw, k * nw + v, col);
      }
    Matrix theta = cw.tensor.descend(raw);
    auto op_coring = std::make_shared<Coring>(opposite_coring(*cw.coring));
    CheckReport iso = check_coring_morphism({op_coring, c.coring, theta});
    expect(opp, iso.ok(), "(W* (x) W)^o = Sigma* (x) Sigma as corings", iso.summary());
    std::optional<Matrix> theta_inv = inverse(theta);
    expect(opp, theta_inv.has_value(), "coring isomorphism is bijective", "theta");

    auto map_sub = [&](const SubBimodule& i) {
      std::vector<Matrix> vs;
      for (std::size_t q = 0; q < i.dim(); ++q) vs.push_back(phi * i.space.vector(q));
      return SubBimodule{span(f, phi.rows(), vs)};
    };
    std::vector<SubBimodule> w_subs = enumerate_sub_bimodules(frw.endo, settings);
    std::size_t w_left = 0;
    for (const auto& j : w_subs)
      if (membership(frw.endo, j, Hand::Left)) ++w_left;
    expect(opp, w_left == out.right_unital.size(), "|I_r(S)| = |I_l(S^o)|",
           std::to_string(out.right_unital.size()) + " vs " + std::to_string(w_left));
    if (theta_inv && iso.ok()) {
      for (const auto& i : out.right_unital) {
        SubBimodule j = map_sub(i);
        auto cert = membership(frw.endo, j, Hand::Left);
        expect(opp, cert.has_value(), "I in I_r(S) iff I^o in I_l(S^o)", describe(i));
        if (!cert) continue;
        Matrix transported = theta * gamma(cw, *cert).matrix * *theta_inv;
        expect(opp, transported == gamma(c, right_certs.at(i.space)).matrix, "Gamma_r = Gamma_l of W",
               describe(i));
      }
      for (std::size_t i = 0; i < endos.size(); ++i) {
        CoringMorphism gw{cw.coring, cw.coring, *theta_inv * endos[i].matrix * theta};
        expect(opp, map_sub(out.f_right_images[i]) == f_left(cw, gw), "F_r(g) = F_l of W", morphism_name(i));
      }
    }
  }
  out.reports.push_back(opp);

  // Group isomorphism Inv_B(S) -> Aut_A(C)
  CheckReport group;
  group.subject = "group isomorphism";
  std::vector<std::size_t> auts = out.endos.automorphisms();
  expect(group, out.inv.elements.size() == auts.size(), "|Inv| = |Aut|",
         std::to_string(out.inv.elements.size()) + " vs " + std::to_string(auts.size()));
  for (std::size_t a = 0; a < out.inv.elements.size(); ++a) {
    const SubBimodule& i = out.inv.elements[a];
    auto lc = left_certs.find(i.space);
    auto rc = right_certs.find(i.space);
    expect(group, lc != left_certs.end() && rc != right_certs.end(), "Inv in I_l and I_r", describe(i));
    if (lc == left_certs.end() || rc == right_certs.end()) {
      out.gamma_of_inv.push_back(kMissing);
      continue;
    }
    auto gl = find_endo(gamma(c, lc->second));
    auto gr = find_endo(gamma(c, rc->second));
    out.gamma_of_inv.push_back(gl ? *gl : kMissing);
    expect(group, gl && et.inverse(*gl).has_value(), "Gamma(I) is an automorphism", describe(i));
    expect(group, gl && gr && et.inverse(*gr) == gl, "Gamma = (-)^-1 o Gamma'", describe(i));
  }
  {
    std::vector<std::size_t> sorted = out.gamma_of_inv;
    std::sort(sorted.begin(), sorted.end());
    expect(group, std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "Gamma injective on Inv", "");
    for (std::size_t a = 0; a < out.inv.elements.size(); ++a)
      for (std::size_t b = 0; b < out.inv.elements.size(); ++b) {
        std::size_t ga = out.gamma_of_inv[a], gb = out.gamma_of_inv[b], gab = out.gamma_of_inv[out.inv.table(a, b)];
        if (ga == kMissing || gb == kMissing) continue;
        expect(group, et(ga, gb) == gab, "Gamma(IJ) = Gamma(I) Gamma(J)",
               describe(out.inv.elements[a]) + ", " + describe(out.inv.elements[b]));
      }
  }
  out.reports.push_back(group);

  // F_l(g) = F_r(g^-1) on automorphisms
  CheckReport sym;
  sym.subject = "inverse symmetry";
  for (auto g : auts) {
    std::size_t gi = *et.inverse(g);
    expect(sym, out.f_left_images[g] == out.f_right_images[gi], "F_l(g) = F_r(g^-1)", morphism_name(g));
  }
  out.reports.push_back(sym);

  // Hat map into the Sweedler coring
  CheckReport hat;
  hat.subject = "hat map";
  std::vector<Matrix> hats;
  for (std::size_t i = 0; i < endos.size(); ++i) {
    CoringMorphism h = hat_map(c, sw, endos[i]);
    CheckReport r = check_coring_morphism(h);
    expect(hat, r.ok(), "hat(g) is a coring morphism", morphism_name(i) + ": " + r.summary());
    expect(hat, fixed_elements(sw, h) == out.f_left_images[i], "fixed elements of hat(g) = F_l(g)", morphism_name(i));
    hats.push_back(h.matrix);
  }
  expect(hat, hats[et.unit].is_identity(), "hat(id) = id", "id");
  for (std::size_t i = 0; i < hats.size(); ++i)
    for (std::size_t j = 0; j < hats.size(); ++j) {
      if (j > i) expect(hat, !(hats[i] == hats[j]), "hat injective", morphism_name(i) + ", " + morphism_name(j));
      expect(hat, hats[et(i, j)] == hats[i] * hats[j], "hat(g h) = hat(g) hat(h)",
             morphism_name(i) + ", " + morphism_name(j));
    }
  for (const auto& i : out.left_unital) {
    const GammaCertificate& cert = left_certs.at(i.space);
    auto idx = find_endo(gamma(c, cert));
    if (!idx) continue;
    expect(hat, hats[*idx] == gamma_sweedler(sw, cert).matrix, "hat o Gamma_l = Sweedler Gamma_l", describe(i));
  }
  out.reports.push_back(hat);

  CheckReport sep;
  sep.subject = "separability chain";
  out.hypotheses = check_hypotheses(fr, settings.budget);
  out.split = is_split_extension(s.extension);
  expect(sep, !out.hypotheses.separability.separable || out.split.split, "separable implies split",
         out.hypotheses.summary);
  out.reports.push_back(sep);
  return out;
}

}  // namespace comatrix
