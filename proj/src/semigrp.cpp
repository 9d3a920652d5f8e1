#include "gkz/semigrp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace gkz {

bool in_closure(const DegreeSet& ds, const RatVec& beta) {
  for (const auto& p : ds.points)
    if (to_rat(p) == beta) return true;
  for (const auto& comp : ds.components) {
    RatVec diff(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) diff[i] = beta[i] - Rat(comp.shift[i]);
    if (comp.directions.empty()) {
      if (std::all_of(diff.begin(), diff.end(), [](const Rat& q) { return q == 0; })) return true;
      continue;
    }
    if (solve_rational(IntMat::from_cols(comp.directions), diff)) return true;
  }
  return false;
}

GapReport numerical_semigroup_gaps(std::vector<Int> gens) {
  GapReport rep;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty() || gens.front() <= 0) return rep;
  Int g = 0;
  for (const Int& e : gens) g = boost::multiprecision::gcd(g, e);
  if (g != 1) return rep;
  rep.valid = true;

  Int bound_big = gens.front() * gens.back();  // Frobenius < min * max
  check(bound_big <= 10000000, "numerical_semigroup_gaps: generators too large");
  std::size_t bound = bound_big.convert_to<std::size_t>();
  std::vector<char> reach(bound + 1, 0);
  reach[0] = 1;
  for (std::size_t v = 1; v <= bound; ++v)
    for (const Int& e : gens) {
      std::size_t ge = e.convert_to<std::size_t>();
      if (ge <= v && reach[v - ge]) {
        reach[v] = 1;
        break;
      }
    }
  for (std::size_t v = 1; v <= bound; ++v)
    if (!reach[v]) rep.gaps.push_back(Int(v));
  rep.frobenius = rep.gaps.empty() ? Int(-1) : rep.gaps.back();
  rep.symmetric = true;
  if (rep.frobenius >= 0) {
    std::size_t f = rep.frobenius.convert_to<std::size_t>();
    for (std::size_t z = 0; z <= f; ++z)
      if (reach[z] == reach[f - z]) {  // z in S must pair with f-z not in S
        rep.symmetric = false;
        break;
      }
  }
  return rep;
}

std::optional<IntVec> SemigroupProfile::to_coords(const IntVec& ambient) const {
  return lattice_coords(lat_, ambient);
}

IntVec SemigroupProfile::to_ambient(const IntVec& coords) const {
  check(coords.size() == lat_.size(), "to_ambient: wrong length");
  IntVec v(a_.rows(), Int(0));
  for (std::size_t i = 0; i < lat_.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += coords[i] * lat_[i][j];
  return v;
}

IntVec SemigroupProfile::facet_values(const IntVec& c) const {
  IntVec vals(facets_.size());
  for (std::size_t j = 0; j < facets_.size(); ++j) vals[j] = dot(facets_[j].h, c);
  return vals;
}

bool SemigroupProfile::facets_nonneg(const IntVec& c) const {
  for (const auto& f : facets_)
    if (dot(f.h, c) < 0) return false;
  return true;
}

bool SemigroupProfile::facets_strict(const IntVec& c) const {
  for (const auto& f : facets_)
    if (dot(f.h, c) <= 0) return false;
  return true;
}

bool SemigroupProfile::member_coords(const IntVec& c) const {
  if (!facets_nonneg(c)) return false;
  // Memoized descent instead of a minimal-solution search: subtract
  // generators while the residual stays in the cone. The cone is pointed,
  // so (c - cone) meet cone is a bounded polytope and the walk terminates;
  // infeasible queries stay cheap where the solver-based route does not.
  std::set<IntVec> seen{c};
  std::vector<IntVec> stack{c};
  while (!stack.empty()) {
    IntVec q = std::move(stack.back());
    stack.pop_back();
    if (is_zero(q)) return true;
    for (std::size_t j = 0; j < ac_.cols(); ++j) {
      IntVec r = sub(q, ac_.col(j));
      if (!facets_nonneg(r)) continue;
      if (seen.insert(r).second) stack.push_back(r);
    }
  }
  return false;
}

bool SemigroupProfile::member(const IntVec& ambient) const {
  auto c = to_coords(ambient);
  return c && member_coords(*c);
}

bool SemigroupProfile::saturation_member_coords(const IntVec& c) const {
  return facets_nonneg(c);
}

bool SemigroupProfile::saturation_member(const IntVec& ambient) const {
  auto c = to_coords(ambient);
  return c && saturation_member_coords(*c);
}

std::vector<IntVec> SemigroupProfile::hilbert_basis() const {
  std::vector<IntVec> out;
  for (const auto& h : hilbert_) out.push_back(to_ambient(h));
  return out;
}

namespace {

IntMat unimodular_inverse(const IntMat& u) {
  const std::size_t n = u.rows();
  IntMat inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVec e(n, Rat(0));
    e[j] = 1;
    auto col = solve_rational(u, e);
    check(col.has_value(), "unimodular_inverse: singular");
    for (std::size_t i = 0; i < n; ++i) {
      check(is_integer((*col)[i]), "unimodular_inverse: non-integer entry");
      inv.at(i, j) = boost::multiprecision::numerator((*col)[i]);
    }
  }
  return inv;
}

// lattice points of { C t : t in [0,1)^r }, via the Smith form of C
std::vector<IntVec> parallelepiped_points(const IntMat& c) {
  const std::size_t r = c.rows();
  check(c.cols() == r, "parallelepiped_points: not square");
  SmithResult sr = smith_normal_form(c);
  check(sr.divisors.size() == r, "parallelepiped_points: singular subcone");
  IntMat uinv = unimodular_inverse(sr.u);

  Int count = 1;
  for (const Int& d : sr.divisors) count *= d;

  std::vector<IntVec> pts;
  IntVec y(r, Int(0));
  while (true) {
    IntVec z = mul(uinv, y);
    // reduce z into the half-open box: z -= C * floor(C^{-1} z)
    auto theta = solve_rational(c, to_rat(z));
    check(theta.has_value(), "parallelepiped_points: solve failed");
    IntVec fl(r);
    for (std::size_t i = 0; i < r; ++i) fl[i] = rat_floor((*theta)[i]);
    IntVec shift = mul(c, fl);
    for (std::size_t i = 0; i < r; ++i) z[i] -= shift[i];
    pts.push_back(std::move(z));

    std::size_t i = 0;
    while (i < r && y[i] + 1 == sr.divisors[i]) {
      y[i] = 0;
      ++i;
    }
    if (i == r) break;
    y[i] += 1;
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  check(Int(pts.size()) == count, "parallelepiped_points: wrong count");
  return pts;
}

}  // namespace

SemigroupProfile SemigroupProfile::build(const IntMat& a) {
  SemigroupProfile sp;
  sp.a_ = a;
  check(a.rows() > 0 && a.cols() > 0, "profile: empty matrix");
  for (std::size_t j = 0; j < a.cols(); ++j)
    check(!is_zero(a.col(j)), "profile: zero column");
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      check(a.col(i) != a.col(j), "profile: duplicate columns");
  check(is_pointed(a), "profile: cone must be pointed");

  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.col(j));
  sp.lat_ = lattice_basis(cols);
  const std::size_t r = sp.lat_.size();

  std::vector<IntVec> ccols;
  for (const auto& col : cols) {
    auto c = lattice_coords(sp.lat_, col);
    check(c.has_value(), "profile: column outside its own lattice");
    ccols.push_back(*c);
  }
  sp.ac_ = IntMat::from_cols(ccols);
  sp.facets_ = cone_facets(sp.ac_);

  IntVec w(r, Int(0));
  for (const auto& f : sp.facets_) w = add(w, f.h);
  w = primitive(std::move(w));
  for (std::size_t j = 0; j < sp.ac_.cols(); ++j)
    check(dot(w, sp.ac_.col(j)) > 0, "profile: grading not positive");
  sp.grading_ = w;

  // star simplicial subcones from the placing triangulation
  std::vector<int> all(sp.ac_.cols());
  for (std::size_t j = 0; j < sp.ac_.cols(); ++j) all[j] = static_cast<int>(j);
  std::vector<IntVec> idlat;
  for (std::size_t i = 0; i < r; ++i) {
    IntVec e(r, Int(0));
    e[i] = 1;
    idlat.push_back(std::move(e));
  }
  auto cert = normalized_volume(sp.ac_, all, &idlat);
  check(cert.volume > 0, "profile: cone is degenerate");
  for (const auto& s : cert.simplices) {
    if (!s.has_origin) continue;
    Subcone sc;
    sc.ray_cols = s.cols;
    sc.c = sp.ac_.submatrix_cols(s.cols);
    sc.pi_points = parallelepiped_points(sc.c);
    sp.subcones_.push_back(std::move(sc));
  }
  check(!sp.subcones_.empty(), "profile: no star subcones");

  // Hilbert basis: box points and rays generate the saturation; keep the
  // irreducible ones
  std::set<IntVec> genset;
  for (const auto& cc : ccols) genset.insert(cc);
  for (const auto& sc : sp.subcones_)
    for (const auto& p : sc.pi_points)
      if (!is_zero(p)) genset.insert(p);
  for (const auto& g : genset) {
    bool reducible = false;
    for (const auto& g2 : genset) {
      if (g2 == g) continue;
      IntVec diff = sub(g, g2);
      if (is_zero(diff)) continue;
      if (sp.facets_nonneg(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) sp.hilbert_.push_back(g);
  }
  std::sort(sp.hilbert_.begin(), sp.hilbert_.end(), [&](const IntVec& x, const IntVec& y) {
    Int wx = dot(sp.grading_, x), wy = dot(sp.grading_, y);
    if (wx != wy) return wx < wy;
    return x < y;
  });

  sp.normal_ = std::all_of(sp.hilbert_.begin(), sp.hilbert_.end(),
                           [&](const IntVec& h) { return sp.member_coords(h); });

  // conductor: a multiple of the Hilbert basis sum that lands every cell base
  // point in NA
  IntVec kappa(r, Int(0));
  for (const auto& h : sp.hilbert_) kappa = add(kappa, h);
  check(sp.facets_strict(kappa), "profile: basis sum not interior");
  for (int m = 1; m <= 512; ++m) {
    IntVec cand = scale(Int(m), kappa);
    bool ok = true;
    for (const auto& sc : sp.subcones_) {
      for (const auto& p : sc.pi_points) {
        if (!sp.member_coords(add(cand, p))) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) {
      sp.conductor_ = cand;
      return sp;
    }
  }
  throw internal_error("profile: conductor scan exhausted");
}

std::vector<int> SemigroupProfile::minimal_face_containing(const std::vector<int>& cols) const {
  // intersect the zero sets of all facets vanishing on every requested column
  std::vector<int> face(ac_.cols());
  for (std::size_t j = 0; j < ac_.cols(); ++j) face[j] = static_cast<int>(j);
  for (const auto& f : facets_) {
    bool onfacet = std::all_of(cols.begin(), cols.end(), [&](int cidx) {
      return std::find(f.zero_cols.begin(), f.zero_cols.end(), cidx) != f.zero_cols.end();
    });
    if (!onfacet) continue;
    std::vector<int> inter;
    std::set_intersection(face.begin(), face.end(), f.zero_cols.begin(), f.zero_cols.end(),
                          std::back_inserter(inter));
    face = std::move(inter);
  }
  return face;
}

std::vector<IntVec> SemigroupProfile::cell_cover_minimals(const Subcone& sc, const IntVec& p,
                                                          const std::vector<IntVec>& targets) const {
  const std::size_t n = ac_.cols(), r = rank();
  IntMat m(r, n + sc.c.cols());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = ac_.at(i, j);
    for (std::size_t j = 0; j < sc.c.cols(); ++j) m.at(i, n + j) = -sc.c.at(i, j);
  }
  std::vector<IntVec> gens;
  for (const auto& t : targets) {
    auto sols = minimal_nonneg_solutions(m, sub(p, t));
    for (const auto& s : sols) gens.emplace_back(s.begin() + n, s.end());
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // minimalize the projections
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < gens.size() && minimal; ++j) {
      if (i == j) continue;
      bool dom = true;
      for (std::size_t k = 0; k < gens[i].size(); ++k)
        if (gens[i][k] < gens[j][k]) dom = false;
      if (dom && gens[i] != gens[j]) minimal = false;
    }
    if (minimal) out.push_back(gens[i]);
  }
  return out;
}

std::vector<SemigroupProfile::CellPiece> SemigroupProfile::staircase_complement(
    const std::vector<IntVec>& gens, std::size_t dim) const {
  std::vector<CellPiece> pieces;
  if (gens.empty()) {
    CellPiece cp;
    cp.gamma = IntVec(dim, Int(0));
    for (std::size_t i = 0; i < dim; ++i) cp.free.push_back(static_cast<int>(i));
    pieces.push_back(std::move(cp));
    return pieces;
  }
  IntVec bound(dim, Int(0));
  for (const auto& g : gens)
    for (std::size_t i = 0; i < dim; ++i) bound[i] = std::max(bound[i], g[i]);

  const std::size_t subsets = std::size_t(1) << dim;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<int> free, fixed;
    for (std::size_t i = 0; i < dim; ++i)
      ((mask >> i) & 1) ? free.push_back(static_cast<int>(i)) : fixed.push_back(static_cast<int>(i));
    // enumerate offsets gamma over the fixed coordinates
    IntVec gamma(dim, Int(0));
    std::size_t guard = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t fi) {
      if (fi == fixed.size()) {
        // valid piece: no generator fits under gamma on the fixed coordinates
        for (const auto& g : gens) {
          bool fits = true;
          for (int i : fixed)
            if (g[i] > gamma[i]) {
              fits = false;
              break;
            }
          if (fits) return;
        }
        CellPiece cp;
        cp.gamma = gamma;
        cp.free = free;
        pieces.push_back(std::move(cp));
        check(++guard < 200000, "staircase_complement: piece explosion");
        return;
      }
      int i = fixed[fi];
      for (Int v = 0; v < bound[i]; ++v) {
        gamma[i] = v;
        rec(fi + 1);
      }
      gamma[i] = 0;
    };
    rec(0);
  }
  return pieces;
}

DegreeSet SemigroupProfile::assemble_degree_set(
    std::vector<IntVec> pts, std::vector<std::pair<IntVec, std::vector<int>>> pieces) const {
  // pieces arrive as (shift in coords, subcone ray column indices)
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::sort(pieces.begin(), pieces.end());
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());

  auto piece_contains = [&](const std::pair<IntVec, std::vector<int>>& big,
                            const std::pair<IntVec, std::vector<int>>& small) {
    IntMat dirs = ac_.submatrix_cols(big.second);
    if (!has_nonneg_solution(dirs, sub(small.first, big.first))) return false;
    for (int c : small.second)
      if (!has_nonneg_solution(dirs, ac_.col(c))) return false;
    return true;
  };

  std::vector<char> keep(pieces.size(), 1);
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      if (i == j || !keep[i] || !keep[j]) continue;
      if (piece_contains(pieces[j], pieces[i]) && !(piece_contains(pieces[i], pieces[j]) && i < j))
        keep[i] = 0;
    }

  DegreeSet ds;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!keep[i]) continue;
    DegreeComponent comp;
    comp.shift = to_ambient(pieces[i].first);
    for (int c : pieces[i].second) comp.directions.push_back(a_.col(c));
    comp.face_cols = minimal_face_containing(pieces[i].second);
    ds.components.push_back(std::move(comp));
  }
  for (const auto& p : pts) {
    bool absorbed = false;
    for (std::size_t i = 0; i < pieces.size() && !absorbed; ++i) {
      if (!keep[i]) continue;
      IntMat dirs = ac_.submatrix_cols(pieces[i].second);
      if (has_nonneg_solution(dirs, sub(p, pieces[i].first))) absorbed = true;
    }
    if (!absorbed) ds.points.push_back(to_ambient(p));
  }
  std::sort(ds.points.begin(), ds.points.end());
  std::sort(ds.components.begin(), ds.components.end(),
            [](const DegreeComponent& x, const DegreeComponent& y) {
              if (x.shift != y.shift) return x.shift < y.shift;
              return x.directions < y.directions;
            });
  return ds;
}

DegreeSet SemigroupProfile::holes() const {
  std::vector<IntVec> pts;
  std::vector<std::pair<IntVec, std::vector<int>>> pieces;
  const std::size_t r = rank();
  std::vector<IntVec> origin_target{IntVec(r, Int(0))};
  for (const auto& sc : subcones_) {
    for (const auto& p : sc.pi_points) {
      auto gens = cell_cover_minimals(sc, p, origin_target);
      for (const auto& cp : staircase_complement(gens, r)) {
        IntVec shift = add(p, mul(sc.c, cp.gamma));
        if (cp.free.empty()) {
          pts.push_back(shift);
        } else {
          std::vector<int> raycols;
          for (int i : cp.free) raycols.push_back(sc.ray_cols[i]);
          pieces.emplace_back(shift, raycols);
        }
      }
    }
  }
  return assemble_degree_set(std::move(pts), std::move(pieces));
}

std::vector<IntVec> SemigroupProfile::saturation_below(const Int& bound) const {
  std::set<IntVec> seen;
  IntVec zero(rank(), Int(0));
  std::vector<IntVec> queue{zero};
  seen.insert(zero);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    IntVec cur = queue[qi];
    for (const auto& h : hilbert_) {
      IntVec nxt = add(cur, h);
      if (dot(grading_, nxt) > bound) continue;
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  std::vector<IntVec> out;
  for (const auto& v : seen) out.push_back(to_ambient(v));
  return out;
}

std::vector<IntVec> SemigroupProfile::interior_generators() const {
  const std::size_t r = rank();
  const std::size_t e = facets_.size();
  // slab thresholds: the interior ideal generators lie where every Hilbert
  // basis element can still be subtracted without leaving the interior only
  // if some facet value is small; vertices of the resulting slab regions give
  // a grading bound
  std::vector<Int> mj(e, Int(0));
  for (std::size_t j = 0; j < e; ++j)
    for (const auto& h : hilbert_) mj[j] = std::max(mj[j], Int(dot(facets_[j].h, h)));

  // hyperplane pool: H_j = 0 and H_j = M_j; every vertex of every bounded slab
  // region activates r of them
  std::vector<std::pair<std::size_t, Int>> pool;
  for (std::size_t j = 0; j < e; ++j) {
    pool.emplace_back(j, Int(0));
    pool.emplace_back(j, mj[j]);
  }
  Int wbound = 0;
  std::vector<int> idx(r);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
    if (k == r) {
      IntMat m(r, r);
      RatVec rhs(r);
      for (std::size_t t = 0; t < r; ++t) {
        for (std::size_t c = 0; c < r; ++c) m.at(t, c) = facets_[pool[idx[t]].first].h[c];
        rhs[t] = pool[idx[t]].second;
      }
      if (rank_of(m) < r) return;
      auto x = solve_rational(m, rhs);
      if (!x) return;
      for (const auto& f : facets_)
        if (dot_rat(f.h, *x) < 0) return;
      Rat wx = dot_rat(grading_, *x);
      Int ceilw = rat_floor(wx);
      if (Rat(ceilw) < wx) ceilw += 1;
      wbound = std::max(wbound, ceilw);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      idx[k] = static_cast<int>(i);
      rec(i + 1, k + 1);
    }
  };
  rec(0, 0);

  std::vector<IntVec> out;
  for (const auto& v_amb : saturation_below(wbound)) {
    auto vc = to_coords(v_amb);
    check(vc.has_value(), "interior_generators: ambient round trip failed");
    const IntVec& v = *vc;
    if (!facets_strict(v)) continue;
    bool generator = true;
    for (const auto& h : hilbert_) {
      IntVec d = sub(v, h);
      if (facets_strict(d)) {  // still interior, so v is h + smaller interior
        generator = false;
        break;
      }
    }
    if (generator) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [&](const IntVec& x, const IntVec& y) {
    Int wx = dot(grading_, x), wy = dot(grading_, y);
    if (wx != wy) return wx < wy;
    return x < y;
  });
  std::vector<IntVec> amb;
  for (const auto& v : out) amb.push_back(to_ambient(v));
  return amb;
}

std::vector<IntVec> SemigroupProfile::h1_degrees() const {
  check(rank() == 2, "h1_degrees: only implemented for rank two");
  check(facets_.size() == 2, "h1_degrees: expected exactly two facets");

  // a column on each extreme ray; the grading-smallest one for determinism
  auto ray_col = [&](const FacetFunctional& f) {
    int best = -1;
    for (int c : f.zero_cols)
      if (best < 0 || dot(grading_, ac_.col(c)) < dot(grading_, ac_.col(best))) best = c;
    check(best >= 0, "h1_degrees: facet without columns");
    return ac_.col(best);
  };
  IntVec r1 = ray_col(facets_[0]), r2 = ray_col(facets_[1]);

  auto reaches = [&](const IntVec& v, const IntVec& ray) {
    IntMat m(2, ac_.cols() + 1);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < ac_.cols(); ++j) m.at(i, j) = ac_.at(i, j);
      m.at(i, ac_.cols()) = -ray[i];
    }
    return has_nonneg_solution(m, v);
  };

  DegreeSet hs = holes();
  for (const auto& comp : hs.components) {
    auto sc = to_coords(comp.shift);
    check(sc.has_value(), "h1_degrees: component shift outside lattice");
    check(!(reaches(*sc, r1) && reaches(*sc, r2)),
          "h1_degrees: cohomology support is not finite");
  }
  std::vector<IntVec> out;
  for (const auto& p_amb : hs.points) {
    auto pc = to_coords(p_amb);
    check(pc.has_value(), "h1_degrees: hole outside lattice");
    if (reaches(*pc, r1) && reaches(*pc, r2)) out.push_back(neg(p_amb));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DegreeSet SemigroupProfile::interior_minus_shifted(const IntVec& f_ambient) const {
  check(normal_, "interior_minus_shifted: profile must be normal");
  auto fc = to_coords(f_ambient);
  check(fc.has_value(), "interior_minus_shifted: shift outside lattice");
  check(facets_strict(*fc), "interior_minus_shifted: shift must be interior");

  const std::size_t r = rank();
  std::vector<IntVec> pts;
  std::vector<std::pair<IntVec, std::vector<int>>> pieces;
  std::vector<IntVec> ftarget{*fc};
  std::vector<IntVec> intgens;
  for (const auto& g_amb : interior_generators()) {
    auto g = to_coords(g_amb);
    check(g.has_value(), "interior_minus_shifted: generator outside lattice");
    intgens.push_back(*g);
  }

  for (const auto& sc : subcones_) {
    for (const auto& p : sc.pi_points) {
      auto gens = cell_cover_minimals(sc, p, ftarget);
      for (const auto& cp : staircase_complement(gens, r)) {
        IntVec shift = add(p, mul(sc.c, cp.gamma));
        if (cp.free.empty()) {
          if (facets_strict(shift)) pts.push_back(shift);
          continue;
        }
        // does the piece meet the interior? the interior trace of a subgrid is
        // upward closed, so nonempty means a full translated subgrid survives
        // and the closure is the whole affine span
        IntMat m(r, ac_.cols() + cp.free.size());
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < ac_.cols(); ++j) m.at(i, j) = ac_.at(i, j);
          for (std::size_t j = 0; j < cp.free.size(); ++j)
            m.at(i, ac_.cols() + j) = -sc.c.at(i, cp.free[j]);
        }
        bool survives = false;
        for (const auto& g : intgens) {
          if (has_nonneg_solution(m, sub(shift, g))) {
            survives = true;
            break;
          }
        }
        if (!survives) continue;
        std::vector<int> raycols;
        for (int i : cp.free) raycols.push_back(sc.ray_cols[i]);
        pieces.emplace_back(shift, raycols);
      }
    }
  }
  return assemble_degree_set(std::move(pts), std::move(pieces));
}

}  // namespace gkz
