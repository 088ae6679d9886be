// Brute-force oracles for fixture expectations. Everything here works on plain
// integer arrays mod p with a private elimination routine, so the values do not
// depend on the library's linear algebra, tensor or dual-basis code.

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "comatrix/fixtures.hpp"

namespace comatrix {

namespace {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

struct Fp {
  int p;
  int add(int a, int b) const { return (a + b) % p; }
  int sub(int a, int b) const { return ((a - b) % p + p) % p; }
  int mul(int a, int b) const { return static_cast<int>((static_cast<long long>(a) * b) % p); }
  int inv(int a) const {
    for (int x = 1; x < p; ++x)
      if (mul(a, x) == 1) return x;
    throw ArithmeticOverflow("oracle: zero has no inverse");
  }
};

Mat zeros(std::size_t r, std::size_t c) { return Mat(r, Vec(c, 0)); }

Mat to_mat(const Matrix& m) {
  Mat out = zeros(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = static_cast<int>(m(r, c).num);
  return out;
}

Mat mul(const Fp& f, const Mat& a, const Mat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat out = zeros(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t])
        for (std::size_t j = 0; j < m; ++j) out[i][j] = f.add(out[i][j], f.mul(a[i][t], b[t][j]));
  return out;
}

Vec apply(const Fp& f, const Mat& a, const Vec& v) {
  Vec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t t = 0; t < v.size(); ++t) out[i] = f.add(out[i], f.mul(a[i][t], v[t]));
  return out;
}

Vec flatten(const Mat& a) {
  Vec out;
  for (const auto& row : a) out.insert(out.end(), row.begin(), row.end());
  return out;
}

Mat unflatten(const Vec& v, std::size_t r, std::size_t c) {
  Mat out = zeros(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) out[i][j] = v[i * c + j];
  return out;
}

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

Vec vadd(const Fp& f, Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], b[i]);
  return a;
}

Vec vsub(const Fp& f, Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.sub(a[i], b[i]);
  return a;
}

Vec vscale(const Fp& f, Vec a, int s) {
  for (auto& x : a) x = f.mul(x, s);
  return a;
}

Vec vkron(const Fp& f, const Vec& a, const Vec& b) {
  Vec out;
  out.reserve(a.size() * b.size());
  for (int x : a)
    for (int y : b) out.push_back(f.mul(x, y));
  return out;
}

// Reduced echelon rows of the span of the given vectors.
struct Echelon {
  std::size_t n = 0;
  Mat rows;
  std::vector<std::size_t> pivots;
};

Echelon echelon(const Fp& f, Mat rows, std::size_t n) {
  Echelon e;
  e.n = n;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    rows[r] = vscale(f, rows[r], f.inv(rows[r][c]));
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c]) rows[i] = vsub(f, rows[i], vscale(f, rows[r], rows[i][c]));
    e.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

Mat msub(const Fp& f, const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a[r].size(); ++c) out[r][c] = f.sub(a[r][c], b[r][c]);
  return out;
}

std::size_t rank_of(const Fp& f, const Mat& rows, std::size_t n) { return echelon(f, rows, n).pivots.size(); }

// Quotient of F_p^n by a span; coordinates are the non-pivot entries after reduction.
struct Quot {
  Echelon rel;
  std::vector<std::size_t> free;

  std::size_t dim() const { return free.size(); }
  Vec reduce(const Fp& f, Vec v) const {
    for (std::size_t i = 0; i < rel.rows.size(); ++i) {
      int c = v[rel.pivots[i]];
      if (c) v = vsub(f, v, vscale(f, rel.rows[i], c));
    }
    Vec out;
    for (auto j : free) out.push_back(v[j]);
    return out;
  }
  Vec lift(const Vec& coords) const {
    Vec v(rel.n, 0);
    for (std::size_t i = 0; i < free.size(); ++i) v[free[i]] = coords[i];
    return v;
  }
};

Quot quotient_by(const Fp& f, const Mat& relations, std::size_t n) {
  Quot q;
  q.rel = echelon(f, relations, n);
  for (std::size_t j = 0; j < n; ++j)
    if (std::find(q.rel.pivots.begin(), q.rel.pivots.end(), j) == q.rel.pivots.end()) q.free.push_back(j);
  return q;
}

// Coordinates of v in the span of e (v must lie in it).
Vec coords_in(const Echelon& e, const Vec& v) {
  Vec out;
  for (auto p : e.pivots) out.push_back(v[p]);
  return out;
}

// Visits every vector of F_p^n.
void for_each_vector(int p, std::size_t n, const std::function<void(const Vec&)>& visit) {
  Vec v(n, 0);
  while (true) {
    visit(v);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++v[i] < p) break;
      v[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

// All vectors of F_p^n with the given linear constraints (each row a functional) vanishing.
Mat brute_solutions(const Fp& f, std::size_t n, const std::function<bool(const Vec&)>& ok) {
  Mat sols;
  for_each_vector(f.p, n, [&](const Vec& v) {
    if (ok(v)) sols.push_back(v);
  });
  return sols;
}

// Affine solution set of M x = b: a particular solution and a kernel basis.
struct Affine {
  bool consistent = false;
  Vec particular;
  Mat kernel;
};

Affine solve_affine(const Fp& f, const Mat& m, const Vec& b, std::size_t n) {
  Mat aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = echelon(f, aug, n + 1);
  Affine out;
  if (!e.pivots.empty() && e.pivots.back() == n) return out;
  out.consistent = true;
  out.particular.assign(n, 0);
  for (std::size_t i = 0; i < e.rows.size(); ++i) out.particular[e.pivots[i]] = e.rows[i][n];
  for (std::size_t j = 0; j < n; ++j) {
    if (std::find(e.pivots.begin(), e.pivots.end(), j) != e.pivots.end()) continue;
    Vec k(n, 0);
    k[j] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) k[e.pivots[i]] = f.sub(0, e.rows[i][j]);
    out.kernel.push_back(k);
  }
  return out;
}

// Raw data of a fixture in oracle form.
struct Raw {
  Fp f{2};
  std::size_t da = 0, db = 0, m = 0;
  std::vector<Mat> amul_left, amul_right;  // multiplication in A by basis elements
  std::vector<Mat> bmul_left, bmul_right;
  Vec a_unit, b_unit;
  std::vector<Mat> sl, sr;  // actions on Sigma
};

void mults(const Algebra& alg, std::vector<Mat>& left, std::vector<Mat>& right) {
  std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Mat l = zeros(n, n), r = zeros(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        l[k][j] = static_cast<int>(alg.constant(i, j, k).num);
        r[k][j] = static_cast<int>(alg.constant(j, i, k).num);
      }
    left.push_back(l);
    right.push_back(r);
  }
}

Vec column_vec(const Matrix& m) {
  Vec v;
  for (std::size_t r = 0; r < m.rows(); ++r) v.push_back(static_cast<int>(m(r, 0).num));
  return v;
}

Raw raw_of(const Fixture& fx) {
  if (!fx.field().is_finite()) throw InfiniteField("oracles need a finite field");
  Raw raw;
  raw.f = Fp{static_cast<int>(fx.field().characteristic())};
  raw.da = fx.a->dim();
  raw.db = fx.b->dim();
  raw.m = fx.sigma.dim();
  mults(*fx.a, raw.amul_left, raw.amul_right);
  mults(*fx.b, raw.bmul_left, raw.bmul_right);
  raw.a_unit = column_vec(fx.a->unit());
  raw.b_unit = column_vec(fx.b->unit());
  for (const auto& l : fx.sigma.left_action()) raw.sl.push_back(to_mat(l));
  for (const auto& r : fx.sigma.right_action()) raw.sr.push_back(to_mat(r));
  return raw;
}

// Right dual: all F (da x m) with F R_q = (right mult by a_q) F, found by enumeration.
Echelon right_dual_space(const Raw& raw) {
  const Fp& f = raw.f;
  Mat sols = brute_solutions(f, raw.da * raw.m, [&](const Vec& v) {
    Mat fm = unflatten(v, raw.da, raw.m);
    for (std::size_t q = 0; q < raw.da; ++q)
      if (mul(f, fm, raw.sr[q]) != mul(f, raw.amul_right[q], fm)) return false;
    return true;
  });
  return echelon(f, sols, raw.da * raw.m);
}

// The comatrix coring C = Sigma* (x)_B Sigma in oracle form.
struct RawCoring {
  std::size_t nd = 0;
  Echelon dual;
  Quot c;
  std::vector<Mat> left, right;  // A-actions on C
  Mat counit;                    // da x dim C
  Quot cc;                       // C (x)_A C as a quotient of C (x)_k C
  Mat comult;                    // dim CC x dim C
};

RawCoring raw_coring(const Raw& raw) {
  const Fp& f = raw.f;
  RawCoring rc;
  rc.dual = right_dual_space(raw);
  rc.nd = rc.dual.rows.size();
  const std::size_t m = raw.m, nd = rc.nd;
  auto functional = [&](std::size_t k) { return unflatten(rc.dual.rows[k], raw.da, m); };
  auto dual_coords = [&](const Mat& fm) { return coords_in(rc.dual, flatten(fm)); };

  Mat rel;
  for (std::size_t b = 0; b < raw.db; ++b)
    for (std::size_t k = 0; k < nd; ++k)
      for (std::size_t j = 0; j < m; ++j) {
        Vec fb = dual_coords(mul(f, functional(k), raw.sl[b]));
        Vec lhs = vkron(f, fb, unit(m, j));
        Vec rhs = vkron(f, unit(nd, k), apply(f, raw.sl[b], unit(m, j)));
        rel.push_back(vsub(f, lhs, rhs));
      }
  rc.c = quotient_by(f, rel, nd * m);
  const std::size_t dc = rc.c.dim();

  for (std::size_t a = 0; a < raw.da; ++a) {
    Mat l = zeros(dc, dc), r = zeros(dc, dc);
    for (std::size_t t = 0; t < dc; ++t) {
      std::size_t k = rc.c.free[t] / m, j = rc.c.free[t] % m;
      Vec lv = rc.c.reduce(f, vkron(f, dual_coords(mul(f, raw.amul_left[a], functional(k))), unit(m, j)));
      Vec rv = rc.c.reduce(f, vkron(f, unit(nd, k), apply(f, raw.sr[a], unit(m, j))));
      for (std::size_t s = 0; s < dc; ++s) {
        l[s][t] = lv[s];
        r[s][t] = rv[s];
      }
    }
    rc.left.push_back(l);
    rc.right.push_back(r);
  }
  rc.counit = zeros(raw.da, dc);
  for (std::size_t t = 0; t < dc; ++t) {
    std::size_t k = rc.c.free[t] / m, j = rc.c.free[t] % m;
    Vec v = apply(f, functional(k), unit(m, j));
    for (std::size_t s = 0; s < raw.da; ++s) rc.counit[s][t] = v[s];
  }

  // Dual basis with the standard basis vectors as generators:
  // sum_i sum_k c_ik (x -> sum_q (R_q e_i)(F_k x)_q) = id.
  const std::size_t unknowns = m * nd;
  Mat system = zeros(m * m, unknowns);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < nd; ++k) {
      Mat fk = functional(k);
      Mat rank_one = zeros(m, m);
      for (std::size_t q = 0; q < raw.da; ++q) {
        Vec re = apply(f, raw.sr[q], unit(m, i));
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t s = 0; s < m; ++s) rank_one[r][s] = f.add(rank_one[r][s], f.mul(re[r], fk[q][s]));
      }
      Vec col = flatten(rank_one);
      for (std::size_t e = 0; e < m * m; ++e) system[e][i * nd + k] = col[e];
    }
  Vec id(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) id[i * m + i] = 1;
  Affine sol = solve_affine(f, system, id, unknowns);
  if (!sol.consistent) throw NotProjective("oracle: no dual basis on standard generators");
  auto dual_of = [&](std::size_t i) {
    Vec c(nd, 0);
    for (std::size_t k = 0; k < nd; ++k) c[k] = sol.particular[i * nd + k];
    return c;
  };

  Mat crel;
  for (std::size_t a = 0; a < raw.da; ++a)
    for (std::size_t x = 0; x < dc; ++x)
      for (std::size_t y = 0; y < dc; ++y) {
        Vec xa(dc), ay(dc);
        for (std::size_t s = 0; s < dc; ++s) {
          xa[s] = rc.right[a][s][x];
          ay[s] = rc.left[a][s][y];
        }
        crel.push_back(vsub(f, vkron(f, xa, unit(dc, y)), vkron(f, unit(dc, x), ay)));
      }
  rc.cc = quotient_by(f, crel, dc * dc);
  rc.comult = zeros(rc.cc.dim(), dc);
  for (std::size_t t = 0; t < dc; ++t) {
    std::size_t k = rc.c.free[t] / m, j = rc.c.free[t] % m;
    Vec total(rc.cc.dim(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      Vec left = rc.c.reduce(f, vkron(f, unit(nd, k), unit(m, i)));
      Vec right = rc.c.reduce(f, vkron(f, dual_of(i), unit(m, j)));
      total = vadd(f, total, rc.cc.reduce(f, vkron(f, left, right)));
    }
    for (std::size_t s = 0; s < total.size(); ++s) rc.comult[s][t] = total[s];
  }
  return rc;
}

struct EndoCount {
  std::uint64_t affine_points = 0;
  std::size_t end = 0;
  std::size_t aut = 0;
};

EndoCount count_endomorphisms(const Raw& raw) {
  const Fp& f = raw.f;
  RawCoring rc = raw_coring(raw);
  const std::size_t dc = rc.c.dim();
  const std::size_t n = dc * dc;
  Mat cons;
  Vec rhs;
  auto add_rows = [&](const std::function<Mat(const Mat&)>& lin, const Mat& target) {
    // lin is linear in phi; rows are its entries as functionals of vec(phi).
    std::vector<Mat> images;
    for (std::size_t e = 0; e < n; ++e) images.push_back(lin(unflatten(unit(n, e), dc, dc)));
    for (std::size_t r = 0; r < target.size(); ++r)
      for (std::size_t s = 0; s < target[r].size(); ++s) {
        Vec row(n);
        for (std::size_t e = 0; e < n; ++e) row[e] = images[e][r][s];
        cons.push_back(row);
        rhs.push_back(target[r][s]);
      }
  };
  for (std::size_t a = 0; a < raw.da; ++a) {
    add_rows([&](const Mat& p) { return msub(f, mul(f, p, rc.left[a]), mul(f, rc.left[a], p)); }, zeros(dc, dc));
    add_rows([&](const Mat& p) { return msub(f, mul(f, p, rc.right[a]), mul(f, rc.right[a], p)); },
             zeros(dc, dc));
  }
  add_rows([&](const Mat& p) { return mul(f, rc.counit, p); }, rc.counit);
  Affine sol = solve_affine(f, cons, rhs, n);
  EndoCount out;
  if (!sol.consistent) return out;
  out.affine_points = 1;
  for (std::size_t i = 0; i < sol.kernel.size(); ++i) out.affine_points *= static_cast<std::uint64_t>(f.p);

  const std::size_t dcc = rc.cc.dim();
  for_each_vector(f.p, sol.kernel.size(), [&](const Vec& c) {
    Vec v = sol.particular;
    for (std::size_t i = 0; i < c.size(); ++i) v = vadd(f, v, vscale(f, sol.kernel[i], c[i]));
    Mat phi = unflatten(v, dc, dc);
    Mat lhs = mul(f, rc.comult, phi);
    Mat phi2 = zeros(dcc, dcc);
    for (std::size_t t = 0; t < dcc; ++t) {
      std::size_t x = rc.cc.free[t] / dc, y = rc.cc.free[t] % dc;
      Vec px(dc), py(dc);
      for (std::size_t s = 0; s < dc; ++s) {
        px[s] = phi[s][x];
        py[s] = phi[s][y];
      }
      Vec img = rc.cc.reduce(f, vkron(f, px, py));
      for (std::size_t s = 0; s < dcc; ++s) phi2[s][t] = img[s];
    }
    if (lhs != mul(f, phi2, rc.comult)) return;
    ++out.end;
    if (rank_of(f, phi, dc) == dc) ++out.aut;
  });
  return out;
}

// The endomorphism ring S = End_A(Sigma) by enumeration, with lambda(B).
struct RawEndo {
  Mat elements;  // all elements, flattened m x m
  Echelon basis;
  std::vector<Mat> lambda;  // L_b for basis b
};

RawEndo raw_endo(const Raw& raw) {
  const Fp& f = raw.f;
  RawEndo e;
  e.elements = brute_solutions(f, raw.m * raw.m, [&](const Vec& v) {
    Mat x = unflatten(v, raw.m, raw.m);
    for (const auto& r : raw.sr)
      if (mul(f, x, r) != mul(f, r, x)) return false;
    return true;
  });
  e.basis = echelon(f, e.elements, raw.m * raw.m);
  e.lambda = raw.sl;
  return e;
}

using Space = std::vector<char>;  // membership flags over RawEndo::elements

struct SubData {
  std::vector<Space> subs;
  std::vector<Space> bimodules;
  std::size_t il = 0, ir = 0;
  std::size_t inv = 0;
  bool abelian = true;
};

SubData sub_bimodules(const Raw& raw) {
  const Fp& f = raw.f;
  RawEndo e = raw_endo(raw);
  const std::size_t n = e.elements.size();
  const std::size_t m = raw.m;
  std::map<Vec, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[e.elements[i]] = i;
  auto prod = [&](std::size_t i, std::size_t j) {
    return index.at(flatten(mul(f, unflatten(e.elements[i], m, m), unflatten(e.elements[j], m, m))));
  };
  auto span_of = [&](const std::vector<std::size_t>& gens) {
    Space s(n, 0);
    std::size_t zero = index.at(Vec(m * m, 0));
    s[zero] = 1;
    std::vector<std::size_t> members{zero};
    for (auto g : gens) {
      if (s[g]) continue;
      std::vector<std::size_t> fresh;
      for (auto x : members)
        for (int c = 1; c < f.p; ++c) {
          std::size_t y = index.at(vadd(f, e.elements[x], vscale(f, e.elements[g], c)));
          if (!s[y]) {
            s[y] = 1;
            fresh.push_back(y);
          }
        }
      members.insert(members.end(), fresh.begin(), fresh.end());
    }
    return s;
  };
  auto members_of = [&](const Space& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
      if (s[i]) out.push_back(i);
    return out;
  };

  std::set<Space> seen;
  std::vector<Space> queue{span_of({})};
  seen.insert(queue.front());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Space cur = queue[q];
    for (std::size_t x = 0; x < n; ++x) {
      if (cur[x]) continue;
      std::vector<std::size_t> gens = members_of(cur);
      gens.push_back(x);
      Space next = span_of(gens);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  SubData out;
  out.subs = queue;

  std::vector<std::size_t> lambda_idx;
  for (const auto& l : e.lambda) lambda_idx.push_back(index.at(flatten(l)));
  for (const auto& s : out.subs) {
    bool closed = true;
    for (auto x : members_of(s))
      for (auto b : lambda_idx) closed = closed && s[prod(b, x)] && s[prod(x, b)];
    if (closed) out.bimodules.push_back(s);
  }
  std::vector<std::size_t> b_members;
  {
    Space bs = span_of(lambda_idx);
    b_members = members_of(bs);
  }
  Space bspace = span_of(b_members);
  auto product = [&](const Space& i, const Space& j) {
    std::vector<std::size_t> gens;
    for (auto x : members_of(i))
      for (auto y : members_of(j)) gens.push_back(prod(x, y));
    return span_of(gens);
  };
  auto dim_of = [&](const Space& s) {
    Mat rows;
    for (auto x : members_of(s)) rows.push_back(e.elements[x]);
    return rank_of(f, rows, m * m);
  };
  const std::size_t ds = e.basis.rows.size();

  // S (x)_B I -> S and I (x)_B S -> S
  auto bijective = [&](const Space& s, bool left) {
    Mat ibasis;
    {
      Mat rows;
      for (auto x : members_of(s)) rows.push_back(e.elements[x]);
      ibasis = echelon(f, rows, m * m).rows;
    }
    Echelon iech = echelon(f, ibasis, m * m);
    const std::size_t di = ibasis.size();
    const Mat& sb = e.basis.rows;
    auto s_coords = [&](const Vec& v) { return coords_in(e.basis, v); };
    auto i_coords = [&](const Vec& v) { return coords_in(iech, v); };
    auto compose = [&](const Vec& x, const Vec& y) { return flatten(mul(f, unflatten(x, m, m), unflatten(y, m, m))); };
    Mat rel;
    std::size_t width = ds * di;
    for (const auto& lb : e.lambda) {
      Vec l = flatten(lb);
      for (std::size_t p = 0; p < ds; ++p)
        for (std::size_t q = 0; q < di; ++q) {
          if (left) {
            rel.push_back(vsub(f, vkron(f, s_coords(compose(sb[p], l)), unit(di, q)),
                               vkron(f, unit(ds, p), i_coords(compose(l, ibasis[q])))));
          } else {
            rel.push_back(vsub(f, vkron(f, i_coords(compose(ibasis[q], l)), unit(ds, p)),
                               vkron(f, unit(di, q), s_coords(compose(l, sb[p])))));
          }
        }
    }
    std::size_t tensor_dim = width - rank_of(f, rel, width);
    Mat images;
    for (std::size_t p = 0; p < ds; ++p)
      for (std::size_t q = 0; q < di; ++q)
        images.push_back(left ? compose(sb[p], ibasis[q]) : compose(ibasis[q], sb[p]));
    return tensor_dim == ds && rank_of(f, images, m * m) == ds;
  };

  std::vector<Space> invertible;
  for (const auto& s : out.bimodules) {
    if (bijective(s, true)) ++out.il;
    if (bijective(s, false)) ++out.ir;
    for (const auto& j : out.bimodules) {
      if (product(s, j) == bspace && product(j, s) == bspace) {
        invertible.push_back(s);
        break;
      }
    }
  }
  (void)dim_of;
  out.inv = invertible.size();
  for (const auto& x : invertible)
    for (const auto& y : invertible) out.abelian = out.abelian && product(x, y) == product(y, x);
  return out;
}

// Sigma (x)_A *Sigma -> B splits as a B-bimodule map.
bool separable(const Raw& raw) {
  const Fp& f = raw.f;
  const std::size_t m = raw.m, db = raw.db;
  Mat sols = brute_solutions(f, db * m, [&](const Vec& v) {
    Mat phi = unflatten(v, db, m);
    for (std::size_t b = 0; b < db; ++b)
      if (mul(f, phi, raw.sl[b]) != mul(f, raw.bmul_left[b], phi)) return false;
    return true;
  });
  Echelon ld = echelon(f, sols, db * m);
  const std::size_t nl = ld.rows.size();
  auto phi_of = [&](std::size_t k) { return unflatten(ld.rows[k], db, m); };
  auto ld_coords = [&](const Mat& x) { return coords_in(ld, flatten(x)); };
  Mat rel;
  for (std::size_t a = 0; a < raw.da; ++a)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < nl; ++k)
        rel.push_back(vsub(f, vkron(f, apply(f, raw.sr[a], unit(m, j)), unit(nl, k)),
                           vkron(f, unit(m, j), ld_coords(mul(f, phi_of(k), raw.sr[a])))));
  Quot t = quotient_by(f, rel, m * nl);
  const std::size_t dt = t.dim();
  bool found = false;
  for_each_vector(f.p, dt, [&](const Vec& c) {
    if (found) return;
    Vec v = t.lift(c);
    Vec ev(db, 0);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < nl; ++k)
        if (v[j * nl + k]) ev = vadd(f, ev, vscale(f, apply(f, phi_of(k), unit(m, j)), v[j * nl + k]));
    if (ev != raw.b_unit) return;
    for (std::size_t b = 0; b < db; ++b) {
      Vec left(m * nl, 0), right(m * nl, 0);
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < nl; ++k) {
          int coef = v[j * nl + k];
          if (!coef) continue;
          left = vadd(f, left, vscale(f, vkron(f, apply(f, raw.sl[b], unit(m, j)), unit(nl, k)), coef));
          right = vadd(f, right, vscale(f, vkron(f, unit(m, j), ld_coords(mul(f, raw.bmul_right[b], phi_of(k)))), coef));
        }
      if (t.reduce(f, left) != t.reduce(f, right)) return;
    }
    found = true;
  });
  return found;
}

// A B-bilinear alpha: S -> B with alpha(1) = 1, by enumeration over all linear maps.
bool split(const Raw& raw) {
  const Fp& f = raw.f;
  RawEndo e = raw_endo(raw);
  const std::size_t ds = e.basis.rows.size(), db = raw.db, m = raw.m;
  auto s_coords = [&](const Mat& x) { return coords_in(e.basis, flatten(x)); };
  Mat id = zeros(m, m);
  for (std::size_t i = 0; i < m; ++i) id[i][i] = 1;
  Vec one = s_coords(id);
  bool found = false;
  for_each_vector(f.p, db * ds, [&](const Vec& v) {
    if (found) return;
    Mat alpha = unflatten(v, db, ds);
    if (apply(f, alpha, one) != raw.b_unit) return;
    for (std::size_t b = 0; b < db; ++b)
      for (std::size_t p = 0; p < ds; ++p) {
        Mat sp = unflatten(e.basis.rows[p], m, m);
        Vec ap = apply(f, alpha, unit(ds, p));
        if (apply(f, alpha, s_coords(mul(f, e.lambda[b], sp))) != apply(f, raw.bmul_left[b], ap)) return;
        if (apply(f, alpha, s_coords(mul(f, sp, e.lambda[b]))) != apply(f, raw.bmul_right[b], ap)) return;
      }
    found = true;
  });
  return found;
}

// Smallest r with Sigma free of rank r over B on the left, or 0.
std::size_t free_rank(const Raw& raw) {
  const Fp& f = raw.f;
  if (raw.m % raw.db != 0) return 0;
  const std::size_t r = raw.m / raw.db;
  bool found = false;
  for_each_vector(f.p, r * raw.m, [&](const Vec& v) {
    if (found) return;
    Mat images;
    for (std::size_t i = 0; i < r; ++i) {
      Vec u(v.begin() + static_cast<long>(i * raw.m), v.begin() + static_cast<long>((i + 1) * raw.m));
      for (std::size_t b = 0; b < raw.db; ++b) images.push_back(apply(f, raw.sl[b], u));
    }
    found = rank_of(f, images, raw.m) == raw.m;
  });
  return found ? r : 0;
}

std::string bracket(const Mat& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r) s += " ";
    s += "[";
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      if (c) s += " ";
      s += std::to_string(m[r][c]);
    }
    s += "]";
  }
  return s + "]";
}

std::string boolean(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string run_oracle(const Fixture& fx, const std::string& oracle) {
  Raw raw = raw_of(fx);
  auto colon = oracle.find(':');
  std::string proc = oracle.substr(0, colon);
  std::string quantity = colon == std::string::npos ? "" : oracle.substr(colon + 1);
  if (proc == "tensor_rank") return std::to_string(raw_coring(raw).c.dim());
  if (proc == "counit_table") return bracket(raw_coring(raw).counit);
  if (proc == "sub_bimodules") {
    SubData d = sub_bimodules(raw);
    if (quantity == "inv_order") return std::to_string(d.inv);
    if (quantity == "inv_abelian") return boolean(d.abelian);
    if (quantity == "sub_bimodule_count") return std::to_string(d.bimodules.size());
    if (quantity == "il_count") return std::to_string(d.il);
    if (quantity == "ir_count") return std::to_string(d.ir);
  }
  if (proc == "coring_endomorphisms") {
    EndoCount c = count_endomorphisms(raw);
    if (quantity == "affine_points") return std::to_string(c.affine_points);
    if (quantity == "end_order") return std::to_string(c.end);
    if (quantity == "aut_order") return std::to_string(c.aut);
  }
  if (proc == "separability") return boolean(separable(raw));
  if (proc == "split_extension") return boolean(split(raw));
  if (proc == "free_basis") return std::to_string(free_rank(raw));
  throw InvalidStructure("unknown oracle " + oracle);
}

}  // namespace comatrix
