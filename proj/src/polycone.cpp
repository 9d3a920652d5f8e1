#include "gkz/polycone.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace gkz {

namespace {

// all k-subsets of {0..n-1}, ascending
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k > n) return;
  std::vector<int> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == static_cast<int>(n - k + i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool is_pointed(const IntMat& a) {
  const std::size_t n = a.cols(), d = a.rows();
  for (std::size_t j = 0; j < n; ++j)
    if (is_zero(a.col(j))) return false;
  // 0 in conv(columns) iff it is witnessed by an affinely independent subset
  // of at most d+1 columns, where the barycentric solution is unique.
  bool found = false;
  for (std::size_t k = 1; k <= std::min(n, d + 1) && !found; ++k) {
    for_each_subset(n, k, [&](const std::vector<int>& idx) {
      if (found) return;
      IntMat sys(d + 1, k);
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < d; ++i) sys.at(i, j) = a.at(i, idx[j]);
        sys.at(d, j) = 1;
      }
      if (rank_of(sys) < k) return;  // affinely dependent, skip
      RatVec rhs(d + 1, Rat(0));
      rhs[d] = 1;
      auto sol = solve_rational(sys, rhs);
      if (!sol) return;
      bool nonneg = std::all_of(sol->begin(), sol->end(), [](const Rat& q) { return q >= 0; });
      if (nonneg) found = true;
    });
  }
  return !found;
}

MatrixValidation validate_matrix(const IntMat& a) {
  MatrixValidation v;
  v.nonempty = a.rows() > 0 && a.cols() > 0;
  if (!v.nonempty) {
    v.detail = "matrix has no rows or no columns";
    return v;
  }
  v.distinct_columns = true;
  for (std::size_t i = 0; i < a.cols() && v.distinct_columns; ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a.col(i) == a.col(j)) {
        v.distinct_columns = false;
        v.detail = "columns " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
      }
  v.full_rank = rank_of(a) == a.rows();
  if (!v.full_rank && v.detail.empty()) v.detail = "rows are linearly dependent";
  if (v.full_rank) {
    SmithResult sr = smith_normal_form(a);
    v.lattice_full = sr.divisors.size() == a.rows() &&
                     std::all_of(sr.divisors.begin(), sr.divisors.end(), [](const Int& e) { return e == 1; });
    if (!v.lattice_full && v.detail.empty())
      v.detail = "columns generate a proper sublattice of Z^d";
  }
  v.pointed = is_pointed(a);
  if (!v.pointed && v.detail.empty()) v.detail = "cone is not pointed";
  return v;
}

std::vector<FacetFunctional> cone_facets(const IntMat& a) {
  const std::size_t n = a.cols(), d = a.rows();
  check(rank_of(a) == d, "cone_facets: matrix must have full row rank");
  std::vector<FacetFunctional> out;
  std::set<IntVec> seen;

  auto consider = [&](IntVec h) {
    h = primitive(std::move(h));
    int pos = 0, negv = 0;
    for (std::size_t j = 0; j < n; ++j) {
      Int s = dot(h, a.col(j));
      if (s > 0) ++pos;
      if (s < 0) ++negv;
    }
    if (pos > 0 && negv > 0) return;  // slices the cone, not supporting
    if (negv > 0) h = neg(h);
    check(pos > 0 || negv > 0, "cone_facets: zero functional slipped through");
    if (!seen.insert(h).second) return;
    FacetFunctional f;
    f.h = h;
    for (std::size_t j = 0; j < n; ++j)
      if (dot(f.h, a.col(j)) == 0) f.zero_cols.push_back(static_cast<int>(j));
    out.push_back(std::move(f));
  };

  if (d == 1) {
    // pointed one-dimensional cone: a single facet at the origin
    IntVec h{a.at(0, 0) > 0 ? Int(1) : Int(-1)};
    consider(std::move(h));
  } else {
    for_each_subset(n, d - 1, [&](const std::vector<int>& idx) {
      std::vector<IntVec> rows;
      for (int j : idx) rows.push_back(a.col(j));
      IntMat m = IntMat::from_rows(rows);
      if (rank_of(m) != d - 1) return;
      auto ker = kernel_lattice(m);
      check(ker.size() == 1, "cone_facets: facet normal not unique");
      consider(ker[0]);
    });
  }
  std::sort(out.begin(), out.end(),
            [](const FacetFunctional& x, const FacetFunctional& y) { return x.h < y.h; });
  for (const auto& f : out) {
    if (d == 1) continue;
    std::vector<IntVec> rows;
    for (int j : f.zero_cols) rows.push_back(a.col(j));
    check(!rows.empty() && rank_of(IntMat::from_rows(rows)) == d - 1,
          "cone_facets: zero set rank is not d-1");
  }
  return out;
}

std::vector<PrimeFace> prime_faces(const IntMat& a) {
  auto facets = cone_facets(a);
  const std::size_t n = a.cols();

  std::vector<int> all(n);
  for (std::size_t j = 0; j < n; ++j) all[j] = static_cast<int>(j);

  std::set<std::vector<int>> sets;
  sets.insert(all);
  for (const auto& f : facets) sets.insert(f.zero_cols);
  // closure under pairwise intersection
  while (true) {
    std::set<std::vector<int>> next = sets;
    for (auto i = sets.begin(); i != sets.end(); ++i)
      for (auto j = std::next(i); j != sets.end(); ++j) {
        std::vector<int> inter;
        std::set_intersection(i->begin(), i->end(), j->begin(), j->end(), std::back_inserter(inter));
        next.insert(inter);
      }
    if (next.size() == sets.size()) break;
    sets = std::move(next);
  }

  std::vector<PrimeFace> out;
  for (const auto& cols : sets) {
    PrimeFace pf;
    pf.cols = cols;
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
      bool contains = std::includes(facets[fi].zero_cols.begin(), facets[fi].zero_cols.end(),
                                    cols.begin(), cols.end());
      if (contains) pf.facet_ids.push_back(static_cast<int>(fi));
    }
    pf.dim = cols.empty() ? 0 : rank_of(a.submatrix_cols(cols));
    // a face is cut out by the sum of its defining facet functionals: the
    // combined zero set must give back exactly this column set
    if (cols.size() < n) {
      check(!pf.facet_ids.empty(), "prime_faces: proper face without defining facet");
      std::set<int> zs(facets[pf.facet_ids[0]].zero_cols.begin(), facets[pf.facet_ids[0]].zero_cols.end());
      for (std::size_t k = 1; k < pf.facet_ids.size(); ++k) {
        std::set<int> nz;
        for (int c : facets[pf.facet_ids[k]].zero_cols)
          if (zs.count(c)) nz.insert(c);
        zs = std::move(nz);
      }
      check(std::vector<int>(zs.begin(), zs.end()) == cols, "prime_faces: zero set mismatch");
    }
    out.push_back(std::move(pf));
  }
  std::sort(out.begin(), out.end(), [](const PrimeFace& x, const PrimeFace& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return x.cols < y.cols;
  });
  return out;
}

namespace {

// Exact placing triangulation of conv(points), points inserted in the given
// order. Points are coordinates in the measuring lattice. Returns simplices
// as index lists into `pts`.
std::vector<std::vector<int>> placing_triangulation(const std::vector<IntVec>& pts) {
  std::vector<std::vector<int>> simplices;
  std::vector<int> dirs;  // point indices whose offsets from base span the hull
  int base = -1;

  auto offset_matrix = [&]() {
    std::vector<IntVec> cols;
    for (int di : dirs) cols.push_back(sub(pts[di], pts[base]));
    return IntMat::from_cols(cols);
  };
  // affine coordinates of q in the current hull frame; nullopt if outside
  auto hull_coords = [&](const IntVec& q) -> std::optional<RatVec> {
    if (dirs.empty()) return pts[static_cast<std::size_t>(base)] == q ? std::optional<RatVec>(RatVec{}) : std::nullopt;
    return solve_rational(offset_matrix(), to_rat(sub(q, pts[base])));
  };

  for (std::size_t pi = 0; pi < pts.size(); ++pi) {
    const IntVec& p = pts[pi];
    if (base < 0) {
      base = static_cast<int>(pi);
      simplices.push_back({static_cast<int>(pi)});
      continue;
    }
    auto coords = hull_coords(p);
    if (!coords) {
      // dimension jump: cone every simplex over the new vertex
      for (auto& s : simplices) s.push_back(static_cast<int>(pi));
      dirs.push_back(static_cast<int>(pi));
      continue;
    }
    const std::size_t k = dirs.size();  // current affine dimension
    if (k == 0) continue;               // duplicate of the base point

    // boundary ridges: (k-1)-subsets of simplex vertex sets seen exactly once
    std::map<std::vector<int>, std::pair<int, int>> ridge;  // ridge -> (count, owner simplex)
    for (std::size_t si = 0; si < simplices.size(); ++si) {
      const auto& s = simplices[si];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> r;
        for (std::size_t t = 0; t < s.size(); ++t)
          if (t != drop) r.push_back(s[t]);
        std::sort(r.begin(), r.end());
        auto it = ridge.find(r);
        if (it == ridge.end())
          ridge.emplace(r, std::make_pair(1, static_cast<int>(si)));
        else
          it->second.first += 1;
      }
    }

    // precompute hull coordinates for every referenced vertex and for p
    std::map<int, RatVec> yc;
    auto y_of = [&](int vi) -> const RatVec& {
      auto it = yc.find(vi);
      if (it == yc.end()) {
        auto c = hull_coords(pts[vi]);
        check(c.has_value(), "placing: vertex escaped its own hull");
        it = yc.emplace(vi, std::move(*c)).first;
      }
      return it->second;
    };
    RatVec yp = *coords;

    std::vector<std::vector<int>> added;
    for (const auto& [r, info] : ridge) {
      if (info.first != 1) continue;
      // hyperplane through the ridge inside the k-dim hull frame
      const RatVec& y0 = y_of(r[0]);
      std::vector<IntVec> rows;
      for (std::size_t t = 1; t < r.size(); ++t) {
        RatVec diff(k);
        Int lcm = 1;
        const RatVec& yt = y_of(r[t]);
        for (std::size_t j = 0; j < k; ++j) {
          diff[j] = yt[j] - y0[j];
          lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(diff[j]));
        }
        IntVec irow(k);
        for (std::size_t j = 0; j < k; ++j)
          irow[j] = boost::multiprecision::numerator(diff[j] * Rat(lcm));
        rows.push_back(std::move(irow));
      }
      IntVec normal;
      if (rows.empty()) {
        check(k == 1, "placing: empty ridge frame in dimension above one");
        normal = IntVec{1};
      } else {
        auto ker = kernel_lattice(IntMat::from_rows(rows));
        check(ker.size() == 1, "placing: ridge does not span a hyperplane");
        normal = ker[0];
      }
      // orient away from the owning simplex
      const auto& owner = simplices[info.second];
      int apex = -1;
      for (int vi : owner)
        if (std::find(r.begin(), r.end(), vi) == r.end()) apex = vi;
      check(apex >= 0, "placing: ridge owner has no apex");
      Rat s_apex = 0, s_p = 0;
      const RatVec& ya = y_of(apex);
      for (std::size_t j = 0; j < k; ++j) {
        s_apex += Rat(normal[j]) * (ya[j] - y0[j]);
        s_p += Rat(normal[j]) * (yp[j] - y0[j]);
      }
      check(s_apex != 0, "placing: degenerate simplex in complex");
      bool visible = (s_apex < 0 && s_p > 0) || (s_apex > 0 && s_p < 0);
      if (!visible) continue;
      std::vector<int> ns = r;
      ns.push_back(static_cast<int>(pi));
      added.push_back(std::move(ns));
    }
    for (auto& s : added) simplices.push_back(std::move(s));
  }
  return simplices;
}

}  // namespace

VolumeCertificate normalized_volume(const IntMat& a, const std::vector<int>& cols,
                                    const std::vector<IntVec>* lattice, InsertOrder order) {
  VolumeCertificate cert;
  if (cols.empty()) {
    cert.volume = 1;  // the vertex face
    return cert;
  }
  std::vector<IntVec> gens;
  for (int j : cols) gens.push_back(a.col(j));
  std::vector<IntVec> lat = lattice ? *lattice : lattice_basis(gens);
  cert.lattice_rows = lat;
  const std::size_t r = lat.size();

  // coordinates of the chosen columns in the measuring lattice
  std::vector<IntVec> pts;
  std::vector<int> orig;  // original column index per point, -1 for the origin
  for (std::size_t t = 0; t < gens.size(); ++t) {
    auto c = lattice_coords(lat, gens[t]);
    check(c.has_value(), "normalized_volume: column outside the measuring lattice");
    pts.push_back(std::move(*c));
    orig.push_back(cols[t]);
  }
  {  // degenerate in the lattice: affine span too small
    IntMat m = IntMat::from_rows(pts);
    if (rank_of(m) < r) {
      cert.volume = 0;
      return cert;
    }
  }

  std::vector<std::size_t> perm(pts.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    return order == InsertOrder::LexAsc ? pts[x] < pts[y] : pts[y] < pts[x];
  });
  std::vector<IntVec> ordered;
  std::vector<int> ordered_orig;
  for (std::size_t i : perm) {
    ordered.push_back(pts[i]);
    ordered_orig.push_back(orig[i]);
  }
  ordered.push_back(IntVec(r, Int(0)));  // origin goes in last
  ordered_orig.push_back(-1);

  auto tri = placing_triangulation(ordered);
  for (const auto& s : tri) {
    check(s.size() == r + 1, "normalized_volume: simplex of wrong dimension");
    IntMat edges(r, r);
    for (std::size_t t = 1; t <= r; ++t)
      for (std::size_t i = 0; i < r; ++i)
        edges.at(i, t - 1) = ordered[s[t]][i] - ordered[s[0]][i];
    Int dv = det(edges);
    if (dv < 0) dv = -dv;
    check(dv > 0, "normalized_volume: degenerate simplex");
    TriSimplex ts;
    ts.volume = dv;
    for (int vi : s) {
      if (ordered_orig[vi] < 0)
        ts.has_origin = true;
      else
        ts.cols.push_back(ordered_orig[vi]);
    }
    std::sort(ts.cols.begin(), ts.cols.end());
    cert.volume += dv;
    cert.simplices.push_back(std::move(ts));
  }
  std::sort(cert.simplices.begin(), cert.simplices.end(),
            [](const TriSimplex& x, const TriSimplex& y) { return x.cols < y.cols; });
  return cert;
}

VolumeCertificate normalized_volume(const IntMat& a) {
  std::vector<int> all(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) all[j] = static_cast<int>(j);
  return normalized_volume(a, all);
}

PyramidReduction iterated_pyramid_face(const IntMat& a) {
  auto faces = prime_faces(a);
  const std::size_t n = a.cols();
  std::vector<int> all(n);
  for (std::size_t j = 0; j < n; ++j) all[j] = static_cast<int>(j);

  auto find_face = [&](const std::vector<int>& cols) -> int {
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (faces[i].cols == cols) return static_cast<int>(i);
    return -1;
  };

  int start = find_face(all);
  check(start >= 0, "iterated_pyramid_face: full face missing");

  // BFS through single-column drops that lower the rank by one
  std::vector<int> parent(faces.size(), -2);
  parent[start] = -1;
  std::vector<int> queue{start};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int cur = queue[qi];
    const auto& g = faces[cur];
    for (std::size_t drop = 0; drop < g.cols.size(); ++drop) {
      std::vector<int> sub;
      for (std::size_t t = 0; t < g.cols.size(); ++t)
        if (t != drop) sub.push_back(g.cols[t]);
      int child = find_face(sub);
      if (child < 0 || parent[child] != -2) continue;
      if (faces[child].dim + 1 != g.dim) continue;
      parent[child] = cur;
      queue.push_back(child);
    }
  }

  int best = start;
  for (int idx : queue) {
    const auto& f = faces[idx];
    const auto& b = faces[best];
    if (f.cols.size() < b.cols.size() || (f.cols.size() == b.cols.size() && f.cols < b.cols))
      best = idx;
  }
  PyramidReduction red;
  red.face = faces[best];
  for (int cur = best; cur != -1; cur = parent[cur]) red.chain.push_back(faces[cur].cols);
  std::reverse(red.chain.begin(), red.chain.end());
  return red;
}

std::pair<Int, Int> face_volume_pair(const IntMat& a, const std::vector<int>& face_cols) {
  std::vector<int> all(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) all[j] = static_cast<int>(j);
  Int vf = normalized_volume(a, face_cols).volume;
  Int va = normalized_volume(a, all).volume;
  return {vf, va};
}

}  // namespace gkz
