// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fanlab/exactlin.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "fanlab/error.hpp"

namespace fanlab::exactlin {

RatMat RatMat::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
  RatMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMat RatMat::from_int_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  RatMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = mpq_class(mpz_class(static_cast<long>(rows[i][j])));
  }
  return m;
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVec RatMat::row(std::size_t i) const {
  return RatVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

RatVec RatMat::col(std::size_t j) const {
  RatVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mpz_class(static_cast<long>(v[i]));
  return out;
}

RatVec to_rat(const ZVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

mpq_class dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw PreconditionError("dot: length mismatch");
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw PreconditionError("add: length mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw PreconditionError("sub: length mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec scale(const RatVec& a, const mpq_class& s) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
  if (m.cols() != v.size()) throw PreconditionError("mat_vec: shape mismatch");
  RatVec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpq_class s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows()) throw PreconditionError("mat_mul: shape mismatch");
  RatMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatMat rref(RatMat m, std::vector<std::size_t>* pivots) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    mpq_class inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      mpq_class f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t rank(const RatMat& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

mpq_class det(const RatMat& m) {
  if (m.rows() != m.cols()) throw PreconditionError("det: matrix is not square");
  RatMat a = m;
  const std::size_t n = a.rows();
  mpq_class d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      mpq_class f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

RatMat inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw PreconditionError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  RatMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  RatMat r = rref(aug, &piv);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1))
    throw PreconditionError("inverse: matrix is singular");
  RatMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
  return out;
}

RatVec solve_square(const RatMat& a, const RatVec& b) {
  return mat_vec(inverse(a), b);
}

std::vector<RatVec> kernel(const RatMat& m) {
  std::vector<std::size_t> piv;
  RatMat r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : piv) is_pivot[p] = true;
  std::vector<RatVec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<RatVec>& vecs) {
  Subspace s(ambient);
  if (vecs.empty()) return s;
  RatMat r = rref(RatMat::from_rows(vecs, ambient));
  for (std::size_t i = 0; i < r.rows(); ++i) {
    RatVec row = r.row(i);
    if (is_zero(row)) break;
    s.basis_.push_back(std::move(row));
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    RatVec e(ambient);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
  }
  return s;
}

bool Subspace::contains(const RatVec& v) const {
  if (v.size() != ambient_) throw PreconditionError("Subspace::contains: dimension mismatch");
  std::vector<RatVec> rows = basis_;
  rows.push_back(v);
  return rank(RatMat::from_rows(rows, ambient_)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw PreconditionError("Subspace::contains: dimension mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const RatVec& v) { return contains(v); });
}

Subspace Subspace::annihilator() const {
  if (basis_.empty()) return full(ambient_);
  return span(ambient_, kernel(RatMat::from_rows(basis_, ambient_)));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw PreconditionError("sum: ambient dimension mismatch");
  std::vector<RatVec> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw PreconditionError("intersect: ambient dimension mismatch");
  // a n b = ann(ann a + ann b).
  return sum(a.annihilator(), b.annihilator()).annihilator();
}

IntVec primitive(const IntVec& v) {
  std::int64_t g = 0;
  for (std::int64_t x : v) g = std::gcd(g, std::llabs(x));
  if (g == 0) throw PreconditionError("primitive: zero vector");
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVec primitive(const RatVec& v) {
  mpz_class l = 1;
  for (const mpq_class& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  ZVec z(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpq_class s = v[i] * l;
    z[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  if (g == 0) throw PreconditionError("primitive: zero vector");
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_class q = z[i] / g;
    if (!q.fits_slong_p()) throw PreconditionError("primitive: entry overflows int64");
    out[i] = q.get_si();
  }
  return out;
}

std::vector<ZVec> hermite_normal_form(std::vector<ZVec> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = c; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= rows.size() || rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (std::size_t j = c; j < n; ++j) rows[r][j] = -rows[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = c; j < n; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

namespace {

ZVec to_z(const IntVec& v) {
  ZVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<long>(v[i]);
  return out;
}

IntVec from_z(const ZVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].fits_slong_p()) throw PreconditionError("lattice entry overflows int64");
    out[i] = v[i].get_si();
  }
  return out;
}

struct ColumnReduction {
  std::vector<ZVec> w;   // rows of U^{-1}; the first p span the saturation
  mpz_class det_l;       // determinant of the lower triangular block
};

// Finds a unimodular U with V U = [L | 0] by extended-gcd column operations.
ColumnReduction column_reduce(const std::vector<IntVec>& vs, std::size_t d) {
  const std::size_t p = vs.size();
  if (p > d) throw PreconditionError("more vectors than the ambient dimension");
  std::vector<ZVec> m(p);
  for (std::size_t i = 0; i < p; ++i) {
    if (vs[i].size() != d) throw PreconditionError("vector length differs from ambient dimension");
    m[i] = to_z(vs[i]);
  }
  std::vector<ZVec> u(d, ZVec(d));
  for (std::size_t i = 0; i < d; ++i) u[i][i] = 1;
  auto col_op = [&](std::size_t a, std::size_t b, const mpz_class& x, const mpz_class& y,
                    const mpz_class& z, const mpz_class& t) {
    // (col_a, col_b) <- (x col_a + y col_b, z col_a + t col_b)
    for (auto* mat : {&m, &u}) {
      for (auto& row : *mat) {
        mpz_class ca = row[a], cb = row[b];
        row[a] = x * ca + y * cb;
        row[b] = z * ca + t * cb;
      }
    }
  };
  mpz_class det_l = 1;
  for (std::size_t i = 0; i < p; ++i) {
    std::size_t nz = i;
    while (nz < d && m[i][nz] == 0) ++nz;
    if (nz == d) throw PreconditionError("input vectors are linearly dependent");
    if (nz != i) col_op(i, nz, 0, 1, 1, 0);
    for (std::size_t j = i + 1; j < d; ++j) {
      if (m[i][j] == 0) continue;
      mpz_class g, s, t;
      mpz_class a = m[i][i], b = m[i][j];
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      col_op(i, j, s, t, -b / g, a / g);
    }
    if (m[i][i] < 0)
      for (auto* mat : {&m, &u})
        for (auto& row : *mat) row[i] = -row[i];
    det_l *= m[i][i];
  }
  RatMat ur(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) ur(i, j) = u[i][j];
  RatMat inv = inverse(ur);
  ColumnReduction out;
  out.det_l = det_l;
  out.w.assign(d, ZVec(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out.w[i][j] = inv(i, j).get_num();
  return out;
}

std::vector<IntVec> complement_rows(const ColumnReduction& cr, std::size_t p) {
  std::vector<ZVec> tail(cr.w.begin() + static_cast<long>(p), cr.w.end());
  std::vector<IntVec> out;
  for (const ZVec& row : hermite_normal_form(tail)) out.push_back(from_z(row));
  return out;
}

}  // namespace

std::vector<IntVec> saturated_complement(const std::vector<IntVec>& vs, std::size_t d) {
  if (vs.empty()) {
    std::vector<IntVec> out(d, IntVec(d, 0));
    for (std::size_t i = 0; i < d; ++i) out[i][i] = 1;
    return out;
  }
  ColumnReduction cr = column_reduce(vs, d);
  if (abs(cr.det_l) == 1) {
    std::vector<IntVec> basis = lattice_basis_extend(vs, d).basis;
    return std::vector<IntVec>(basis.begin() + static_cast<long>(vs.size()), basis.end());
  }
  return complement_rows(cr, vs.size());
}

LatticeBasis lattice_basis_extend(const std::vector<IntVec>& vs, std::size_t d) {
  LatticeBasis out;
  std::vector<IntVec> complement;
  if (vs.empty()) {
    complement = saturated_complement(vs, d);
  } else {
    ColumnReduction cr = column_reduce(vs, d);
    if (abs(cr.det_l) != 1)
      throw PreconditionError("vectors do not extend to a Z-basis (index " +
                              mpz_class(abs(cr.det_l)).get_str() + ")");
    std::vector<ZVec> zrows;
    for (const IntVec& v : vs) zrows.push_back(to_z(v));
    std::vector<ZVec> h = hermite_normal_form(zrows);
    std::vector<bool> pivot_col(d, false);
    bool unit_pivots = true;
    for (const ZVec& row : h) {
      std::size_t c = 0;
      while (row[c] == 0) ++c;
      pivot_col[c] = true;
      if (row[c] != 1) unit_pivots = false;
    }
    if (unit_pivots) {
      for (std::size_t c = 0; c < d; ++c) {
        if (pivot_col[c]) continue;
        IntVec e(d, 0);
        e[c] = 1;
        complement.push_back(std::move(e));
      }
    } else {
      complement = complement_rows(cr, vs.size());
    }
  }
  out.basis = vs;
  out.basis.insert(out.basis.end(), complement.begin(), complement.end());
  RatMat b = RatMat::from_int_rows(out.basis, d);
  if (abs(det(b)) != 1) throw InconsistencyError("lattice completion is not unimodular");
  RatMat dual = inverse(b).transpose();
  for (std::size_t i = 0; i < d; ++i) out.dual.push_back(dual.row(i));
  return out;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const std::string& s) {
  const std::size_t slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw SchemaError("not a rational: '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  if (den[0] == '+') den = den.substr(1);
  mpz_class dn(den);
  if (dn == 0) throw SchemaError("zero denominator in '" + s + "'");
  mpq_class q(mpz_class(num), dn);
  q.canonicalize();
  return q;
}

}  // namespace fanlab::exactlin
