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

// Exact linear algebra over Q and Z: ranks, reduced row-echelon subspaces,
// kernels and Hermite-style lattice basis completion.

#ifndef FANLAB_EXACTLIN_HPP_
#define FANLAB_EXACTLIN_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fanlab::exactlin {

using RatVec = std::vector<mpq_class>;
using IntVec = std::vector<std::int64_t>;
using ZVec = std::vector<mpz_class>;

// Dense row-major rational matrix.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMat from_rows(const std::vector<RatVec>& rows, std::size_t cols);
  static RatMat from_int_rows(const std::vector<IntVec>& rows, std::size_t cols);
  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpq_class& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  RatVec row(std::size_t i) const;
  RatVec col(std::size_t j) const;
  RatMat transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> a_;
};

RatVec to_rat(const IntVec& v);
RatVec to_rat(const ZVec& v);
mpq_class dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const mpq_class& s);
bool is_zero(const RatVec& v);
RatVec mat_vec(const RatMat& m, const RatVec& v);
RatMat mat_mul(const RatMat& a, const RatMat& b);

// Reduced row-echelon form. Pivot columns are written to `pivots` if given.
RatMat rref(RatMat m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const RatMat& m);
mpq_class det(const RatMat& m);
// Throws PreconditionError if `m` is singular or not square.
RatMat inverse(const RatMat& m);
RatVec solve_square(const RatMat& a, const RatVec& b);
// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<RatVec> kernel(const RatMat& m);

// A linear subspace of Q^n stored as its canonical reduced row-echelon basis,
// so equality of subspaces is equality of bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<RatVec>& vecs);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatVec>& basis() const { return basis_; }
  bool contains(const RatVec& v) const;
  bool contains(const Subspace& other) const;
  // Vectors pairing to zero with every basis vector under the standard dot.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<RatVec> basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
// Throws PreconditionError on an ambient dimension mismatch.
Subspace intersect(const Subspace& a, const Subspace& b);

// Divides by the gcd of the entries. Throws PreconditionError on zero input.
IntVec primitive(const IntVec& v);
// Clears denominators first, then divides by the content.
IntVec primitive(const RatVec& v);

// Row Hermite normal form: echelon, positive pivots, entries above each pivot
// reduced into [0, pivot). Zero rows are dropped.
std::vector<ZVec> hermite_normal_form(std::vector<ZVec> rows);

struct LatticeBasis {
  // First entries are the input vectors; the rest complete a Z-basis of Z^d.
  std::vector<IntVec> basis;
  // dual[i] pairs to 1 with basis[i] and 0 with every other member.
  std::vector<RatVec> dual;
};

// Completes linearly independent integer vectors to a Z-basis of Z^d. The
// completion uses unit vectors on the non-pivot columns of the Hermite form of
// the input when its pivots are all 1, and otherwise the Hermite form of the
// tail of the inverse column transform. Throws PreconditionError when the
// input is dependent or does not extend (its lattice is not saturated or its
// Hermite determinant is not 1).
LatticeBasis lattice_basis_extend(const std::vector<IntVec>& vs, std::size_t d);

// Vectors w such that (saturation of span(vs)) + Z<w> = Z^d as a direct sum.
// Defined for any independent input. Agrees with the completion of
// lattice_basis_extend whenever that succeeds.
std::vector<IntVec> saturated_complement(const std::vector<IntVec>& vs,
                                         std::size_t d);

std::string to_string(const mpq_class& q);
mpq_class parse_rational(const std::string& s);

}  // namespace fanlab::exactlin

#endif  // FANLAB_EXACTLIN_HPP_
