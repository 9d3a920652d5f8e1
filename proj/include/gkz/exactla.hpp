#pragma once

// Exact integer and rational linear algebra on small dense matrices.
// Everything downstream (cones, semigroups, Groebner, duality) sits on top of
// these routines, so the invariants here are load-bearing:
//   hermite_normal_form:  U*M = H, |det U| = 1, H row-echelon with positive
//                         pivots and entries above each pivot reduced mod it.
//   smith_normal_form:    U*M*V = S diagonal, d1 | d2 | ... , di >= 0.
//   kernel_lattice:       basis of the *saturated* lattice {x : M x = 0}.
// No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Thrown when an internal invariant fails. The CLI maps this to exit code 2.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void check(bool cond, const char* what) {
  if (!cond) throw internal_error(what);
}

class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<IntVec>& rows);
  static IntMat from_cols(const std::vector<IntVec>& cols);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  IntMat transposed() const;
  IntMat submatrix_cols(const std::vector<int>& idx) const;

  bool operator==(const IntMat& o) const = default;

 private:
  std::size_t r_ = 0, c_ = 0;
  IntVec a_;
};

IntMat operator*(const IntMat& x, const IntMat& y);
IntVec mul(const IntMat& m, const IntVec& v);
RatVec mul(const IntMat& m, const RatVec& v);

Int dot(const IntVec& x, const IntVec& y);
Rat dot_rat(const IntVec& x, const RatVec& y);
IntVec add(const IntVec& x, const IntVec& y);
IntVec sub(const IntVec& x, const IntVec& y);
IntVec neg(const IntVec& x);
IntVec scale(const Int& k, const IntVec& x);
bool is_zero(const IntVec& x);

Int vec_gcd(const IntVec& v);
// Divides by the gcd of the entries. Zero vector stays zero. Sign unchanged.
IntVec primitive(IntVec v);

RatVec to_rat(const IntVec& v);
// Entrywise floor / fractional part.
Int rat_floor(const Rat& q);
bool is_integer(const Rat& q);
bool is_integer_vec(const RatVec& v);
std::optional<IntVec> to_int_vec(const RatVec& v);

struct HermiteResult {
  IntMat h;  // row-style HNF of m
  IntMat u;  // unimodular, u*m == h
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  // one per nonzero row of h
};

HermiteResult hermite_normal_form(const IntMat& m);

struct SmithResult {
  IntMat s, u, v;  // u*m*v == s
  IntVec divisors;  // nonzero diagonal entries, each dividing the next
};

SmithResult smith_normal_form(const IntMat& m);

std::size_t rank_of(const IntMat& m);

// Determinant of a square matrix (Bareiss, fraction-free).
Int det(const IntMat& m);

// Basis (as rows) of the saturated lattice {x in Z^cols : m*x = 0}.
std::vector<IntVec> kernel_lattice(const IntMat& m);

// One exact solution of m*x = rhs over Q, free variables set to 0.
// nullopt when inconsistent.
std::optional<RatVec> solve_rational(const IntMat& m, const RatVec& rhs);

// Lattice-of-rows helpers. A lattice is handed around as the nonzero rows of
// the HNF of its generators, which makes membership and canonical reps cheap.
std::vector<IntVec> lattice_basis(const std::vector<IntVec>& gens);
// Coordinates of v in the row basis (v = sum x_i b_i), integral or nullopt.
std::optional<IntVec> lattice_coords(const std::vector<IntVec>& basis, const IntVec& v);
std::optional<RatVec> lattice_coords_rat(const std::vector<IntVec>& basis, const RatVec& v);
bool in_lattice(const std::vector<IntVec>& basis, const IntVec& v);
// Canonical representative of v modulo the lattice spanned by the HNF rows.
IntVec reduce_mod_lattice(const std::vector<IntVec>& hnf_rows, IntVec v);

std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

}  // namespace gkz
