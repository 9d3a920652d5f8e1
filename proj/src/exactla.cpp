#include "gkz/exactla.hpp"

#include <algorithm>
#include <sstream>

namespace gkz {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return IntMat(0, 0);
  IntMat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check(rows[i].size() == m.cols(), "from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::from_cols(const std::vector<IntVec>& cols) {
  if (cols.empty()) return IntMat(0, 0);
  IntMat m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    check(cols[j].size() == m.rows(), "from_cols: ragged columns");
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntMat::row(std::size_t i) const {
  IntVec v(c_);
  for (std::size_t j = 0; j < c_; ++j) v[j] = at(i, j);
  return v;
}

IntVec IntMat::col(std::size_t j) const {
  IntVec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = at(i, j);
  return v;
}

IntMat IntMat::transposed() const {
  IntMat t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::submatrix_cols(const std::vector<int>& idx) const {
  IntMat m(r_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    check(idx[j] >= 0 && static_cast<std::size_t>(idx[j]) < c_, "submatrix_cols: bad index");
    for (std::size_t i = 0; i < r_; ++i) m.at(i, j) = at(i, idx[j]);
  }
  return m;
}

IntMat operator*(const IntMat& x, const IntMat& y) {
  check(x.cols() == y.rows(), "matmul: shape mismatch");
  IntMat z(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return z;
}

IntVec mul(const IntMat& m, const IntVec& v) {
  check(m.cols() == v.size(), "mul: shape mismatch");
  IntVec r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

RatVec mul(const IntMat& m, const RatVec& v) {
  check(m.cols() == v.size(), "mul: shape mismatch");
  RatVec r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += Rat(m.at(i, j)) * v[j];
  return r;
}

Int dot(const IntVec& x, const IntVec& y) {
  check(x.size() == y.size(), "dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Rat dot_rat(const IntVec& x, const RatVec& y) {
  check(x.size() == y.size(), "dot_rat: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += Rat(x[i]) * y[i];
  return s;
}

IntVec add(const IntVec& x, const IntVec& y) {
  check(x.size() == y.size(), "add: size mismatch");
  IntVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

IntVec sub(const IntVec& x, const IntVec& y) {
  check(x.size() == y.size(), "sub: size mismatch");
  IntVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

IntVec neg(const IntVec& x) {
  IntVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

IntVec scale(const Int& k, const IntVec& x) {
  IntVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = k * x[i];
  return r;
}

bool is_zero(const IntVec& x) {
  return std::all_of(x.begin(), x.end(), [](const Int& e) { return e == 0; });
}

Int vec_gcd(const IntVec& v) {
  Int g = 0;
  for (const Int& e : v) g = boost::multiprecision::gcd(g, e);
  return g;
}

IntVec primitive(IntVec v) {
  Int g = vec_gcd(v);
  if (g > 1)
    for (Int& e : v) e /= g;
  return v;
}

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

Int rat_floor(const Rat& q) {
  Int n = boost::multiprecision::numerator(q);
  Int d = boost::multiprecision::denominator(q);  // always > 0 for cpp_rational
  Int quo = n / d;
  if (n % d != 0 && n < 0) quo -= 1;
  return quo;
}

bool is_integer(const Rat& q) { return boost::multiprecision::denominator(q) == 1; }

bool is_integer_vec(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return is_integer(q); });
}

std::optional<IntVec> to_int_vec(const RatVec& v) {
  if (!is_integer_vec(v)) return std::nullopt;
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = boost::multiprecision::numerator(v[i]);
  return r;
}

namespace {

// Shared row-reduction engine. Works in-place on h while mirroring every row
// operation into u, so u * (original) == h stays true throughout.
struct RowReducer {
  IntMat h, u;

  explicit RowReducer(const IntMat& m) : h(m), u(IntMat::identity(m.rows())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < h.cols(); ++k) std::swap(h.at(i, k), h.at(j, k));
    for (std::size_t k = 0; k < u.cols(); ++k) std::swap(u.at(i, k), u.at(j, k));
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < h.cols(); ++k) h.at(i, k) = -h.at(i, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
  }
  // row_i -= q * row_j
  void add_multiple(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < h.cols(); ++k) h.at(i, k) -= q * h.at(j, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) -= q * u.at(j, k);
  }
};

}  // namespace

HermiteResult hermite_normal_form(const IntMat& m) {
  RowReducer rr(m);
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t top = 0;
  std::vector<std::size_t> pivots;

  for (std::size_t col = 0; col < nc && top < nr; ++col) {
    // Euclid on the entries of this column at or below `top`.
    while (true) {
      std::size_t best = nr;  // row with the smallest nonzero |entry|
      for (std::size_t i = top; i < nr; ++i) {
        if (rr.h.at(i, col) == 0) continue;
        if (best == nr ||
            boost::multiprecision::abs(rr.h.at(i, col)) < boost::multiprecision::abs(rr.h.at(best, col)))
          best = i;
      }
      if (best == nr) break;  // column clear below top
      rr.swap_rows(top, best);
      if (rr.h.at(top, col) < 0) rr.negate_row(top);
      bool cleared = true;
      for (std::size_t i = top + 1; i < nr; ++i) {
        if (rr.h.at(i, col) == 0) continue;
        Int q = rr.h.at(i, col) / rr.h.at(top, col);
        // round toward -inf so the remainder lands in [0, pivot)
        if (rr.h.at(i, col) % rr.h.at(top, col) != 0 && (rr.h.at(i, col) < 0) != (rr.h.at(top, col) < 0))
          q -= 1;
        rr.add_multiple(i, top, q);
        if (rr.h.at(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (top < nr && rr.h.at(top, col) != 0) {
      // reduce entries above the pivot into [0, pivot)
      for (std::size_t i = 0; i < top; ++i) {
        Int q = rr.h.at(i, col) / rr.h.at(top, col);
        if (rr.h.at(i, col) % rr.h.at(top, col) != 0 && rr.h.at(i, col) < 0) q -= 1;
        rr.add_multiple(i, top, q);
      }
      pivots.push_back(col);
      ++top;
    }
  }

  HermiteResult res;
  res.h = std::move(rr.h);
  res.u = std::move(rr.u);
  res.rank = pivots.size();
  res.pivot_cols = std::move(pivots);
  return res;
}

SmithResult smith_normal_form(const IntMat& m) {
  IntMat s = m;
  IntMat u = IntMat::identity(m.rows());
  IntMat v = IntMat::identity(m.cols());
  const std::size_t nr = m.rows(), nc = m.cols();

  auto row_add = [&](std::size_t i, std::size_t j, const Int& q) {  // row_i -= q row_j
    for (std::size_t k = 0; k < nc; ++k) s.at(i, k) -= q * s.at(j, k);
    for (std::size_t k = 0; k < nr; ++k) u.at(i, k) -= q * u.at(j, k);
  };
  auto col_add = [&](std::size_t i, std::size_t j, const Int& q) {  // col_i -= q col_j
    for (std::size_t k = 0; k < nr; ++k) s.at(k, i) -= q * s.at(k, j);
    for (std::size_t k = 0; k < nc; ++k) v.at(k, i) -= q * v.at(k, j);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < nc; ++k) std::swap(s.at(i, k), s.at(j, k));
    for (std::size_t k = 0; k < nr; ++k) std::swap(u.at(i, k), u.at(j, k));
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < nr; ++k) std::swap(s.at(k, i), s.at(k, j));
    for (std::size_t k = 0; k < nc; ++k) std::swap(v.at(k, i), v.at(k, j));
  };
  auto row_negate = [&](std::size_t i) {
    for (std::size_t k = 0; k < nc; ++k) s.at(i, k) = -s.at(i, k);
    for (std::size_t k = 0; k < nr; ++k) u.at(i, k) = -u.at(i, k);
  };

  std::size_t t = 0;
  while (t < nr && t < nc) {
    // locate smallest nonzero |entry| in the trailing block
    std::size_t pi = nr, pj = nc;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j) {
        if (s.at(i, j) == 0) continue;
        if (pi == nr || boost::multiprecision::abs(s.at(i, j)) < boost::multiprecision::abs(s.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi == nr) break;  // trailing block is zero
    row_swap(t, pi);
    col_swap(t, pj);
    if (s.at(t, t) < 0) row_negate(t);

    bool dirty = false;
    for (std::size_t i = t + 1; i < nr; ++i) {
      if (s.at(i, t) == 0) continue;
      Int q = s.at(i, t) / s.at(t, t);
      row_add(i, t, q);
      if (s.at(i, t) != 0) dirty = true;
    }
    for (std::size_t j = t + 1; j < nc; ++j) {
      if (s.at(t, j) == 0) continue;
      Int q = s.at(t, j) / s.at(t, t);
      col_add(j, t, q);
      if (s.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;  // smaller remainders appeared, redo the pivot hunt

    // divisibility sweep: pivot must divide every entry of the trailing block
    bool fixed = false;
    for (std::size_t i = t + 1; i < nr && !fixed; ++i)
      for (std::size_t j = t + 1; j < nc && !fixed; ++j)
        if (s.at(i, j) % s.at(t, t) != 0) {
          row_add(t, i, Int(-1));  // fold row i into the pivot row, retry
          fixed = true;
        }
    if (fixed) continue;
    ++t;
  }

  SmithResult res;
  res.divisors.clear();
  for (std::size_t i = 0; i < std::min(nr, nc); ++i)
    if (s.at(i, i) != 0) res.divisors.push_back(s.at(i, i));
  res.s = std::move(s);
  res.u = std::move(u);
  res.v = std::move(v);
  return res;
}

std::size_t rank_of(const IntMat& m) { return hermite_normal_form(m).rank; }

Int det(const IntMat& m) {
  check(m.rows() == m.cols(), "det: not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        check(num % prev == 0, "det: bareiss divisibility");
        a.at(i, j) = num / prev;
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

std::vector<IntVec> kernel_lattice(const IntMat& m) {
  // Rows u_i of U with U*(M^T) = H: wherever the H row vanishes, M u_i = 0.
  // The resulting rows span a saturated lattice (U unimodular).
  HermiteResult hr = hermite_normal_form(m.transposed());
  std::vector<IntVec> basis;
  for (std::size_t i = hr.rank; i < hr.u.rows(); ++i) basis.push_back(hr.u.row(i));
  return basis;
}

std::optional<RatVec> solve_rational(const IntMat& m, const RatVec& rhs) {
  check(m.rows() == rhs.size(), "solve_rational: shape mismatch");
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<RatVec> a(nr, RatVec(nc + 1));
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) a[i][j] = m.at(i, j);
    a[i][nc] = rhs[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t top = 0;
  for (std::size_t col = 0; col < nc && top < nr; ++col) {
    std::size_t p = top;
    while (p < nr && a[p][col] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[top], a[p]);
    Rat inv = a[top][col];
    for (std::size_t j = col; j <= nc; ++j) a[top][j] /= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == top || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j <= nc; ++j) a[i][j] -= f * a[top][j];
    }
    pivot_col.push_back(col);
    ++top;
  }
  for (std::size_t i = top; i < nr; ++i)
    if (a[i][nc] != 0) return std::nullopt;
  RatVec x(nc, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a[i][nc];
  return x;
}

std::vector<IntVec> lattice_basis(const std::vector<IntVec>& gens) {
  if (gens.empty()) return {};
  HermiteResult hr = hermite_normal_form(IntMat::from_rows(gens));
  std::vector<IntVec> basis;
  for (std::size_t i = 0; i < hr.rank; ++i) basis.push_back(hr.h.row(i));
  return basis;
}

std::optional<IntVec> lattice_coords(const std::vector<IntVec>& basis, const IntVec& v) {
  auto rc = lattice_coords_rat(basis, to_rat(v));
  if (!rc) return std::nullopt;
  return to_int_vec(*rc);
}

std::optional<RatVec> lattice_coords_rat(const std::vector<IntVec>& basis, const RatVec& v) {
  if (basis.empty()) {
    bool zero = std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
    if (!zero) return std::nullopt;
    return RatVec{};
  }
  // want x with x^T * B = v, i.e. B^T x = v
  IntMat bt = IntMat::from_rows(basis).transposed();
  return solve_rational(bt, v);
}

bool in_lattice(const std::vector<IntVec>& basis, const IntVec& v) {
  return lattice_coords(basis, v).has_value();
}

IntVec reduce_mod_lattice(const std::vector<IntVec>& hnf_rows, IntVec v) {
  for (const IntVec& row : hnf_rows) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    check(p < row.size() && row[p] > 0, "reduce_mod_lattice: rows must be nonzero HNF rows");
    Int q = v[p] / row[p];
    if (v[p] % row[p] != 0 && v[p] < 0) q -= 1;
    if (q != 0)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
  }
  return v;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace gkz
