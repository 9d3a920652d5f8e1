#include "gkz/toricgb.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "gkz/polycone.hpp"

namespace gkz {

namespace {

bool divides(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool disjoint_support(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

IntVec monomial_lcm(const IntVec& a, const IntVec& b) {
  IntVec m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

// rewrite the monomial to its normal form under the rule lead -> trail
IntVec reduce_monomial(IntVec m, const std::vector<Binomial>& gens) {
  bool again = true;
  while (again) {
    again = false;
    for (const auto& g : gens) {
      if (!divides(g.lead, m)) continue;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += g.trail[i] - g.lead[i];
      again = true;
      break;
    }
  }
  return m;
}

// positive weights under which every kernel vector of a is weight balanced:
// the facet functionals of the column cone, summed inside the column lattice
IntVec positive_weights(const IntMat& a) {
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.col(j));
  std::vector<IntVec> basis = lattice_basis(cols);
  std::vector<IntVec> cc;
  for (const auto& c : cols) {
    auto lc = lattice_coords(basis, c);
    check(lc.has_value(), "column outside its own lattice");
    cc.push_back(*lc);
  }
  IntVec grading(basis.size(), Int(0));
  for (const auto& f : cone_facets(IntMat::from_cols(cc))) grading = add(grading, f.h);
  IntVec weights(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    weights[j] = dot(grading, cc[j]);
    check(weights[j] > 0, "toric grading must be positive");
  }
  return weights;
}

}  // namespace

TermOrder TermOrder::grevlex(std::size_t nvars) {
  TermOrder ord;
  ord.stages.push_back(IntVec(nvars, Int(1)));
  ord.seq.resize(nvars);
  std::iota(ord.seq.begin(), ord.seq.end(), std::size_t{0});
  return ord;
}

TermOrder TermOrder::cheap_variable(const IntVec& weights, std::size_t cheap) {
  for (const auto& w : weights) check(w > 0, "saturation order needs positive weights");
  TermOrder ord;
  ord.stages.push_back(weights);
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (i != cheap) ord.seq.push_back(i);
  ord.seq.push_back(cheap);
  return ord;
}

TermOrder TermOrder::eliminate_last(std::size_t nvars) {
  TermOrder ord;
  IntVec block(nvars, Int(0));
  block[nvars - 1] = 1;
  ord.stages.push_back(block);
  ord.stages.push_back(IntVec(nvars, Int(1)));
  ord.seq.resize(nvars);
  std::iota(ord.seq.begin(), ord.seq.end(), std::size_t{0});
  return ord;
}

int TermOrder::compare(const IntVec& a, const IntVec& b) const {
  for (const auto& w : stages) {
    Int da = dot(w, a), db = dot(w, b);
    if (da != db) return da > db ? 1 : -1;
  }
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;  // reverse lex
  }
  return 0;
}

std::optional<Binomial> make_binomial(IntVec p, IntVec q, const TermOrder& ord) {
  int c = ord.compare(p, q);
  if (c == 0) return std::nullopt;
  if (c < 0) std::swap(p, q);
  return Binomial{std::move(p), std::move(q)};
}

std::optional<Binomial> reduce_binomial(Binomial b, const std::vector<Binomial>& gens,
                                        const TermOrder& ord) {
  // lead reduction can flip the orientation, so renormalize every step
  bool again = true;
  while (again) {
    again = false;
    for (const auto& g : gens) {
      if (!divides(g.lead, b.lead)) continue;
      IntVec p = b.lead;
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += g.trail[i] - g.lead[i];
      auto nb = make_binomial(std::move(p), b.trail, ord);
      if (!nb) return std::nullopt;
      b = *nb;
      again = true;
      break;
    }
  }
  b.trail = reduce_monomial(b.trail, gens);
  return b;
}

std::vector<Binomial> buchberger(std::vector<Binomial> gens, const TermOrder& ord) {
  std::vector<Binomial> g;
  for (auto& b : gens) {
    auto nb = make_binomial(b.lead, b.trail, ord);
    if (nb && std::find(g.begin(), g.end(), *nb) == g.end()) g.push_back(*nb);
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (disjoint_support(g[i].lead, g[j].lead)) continue;  // product criterion
    IntVec m = monomial_lcm(g[i].lead, g[j].lead);
    IntVec p = m, q = m;
    for (std::size_t k = 0; k < m.size(); ++k) {
      p[k] += g[j].trail[k] - g[j].lead[k];
      q[k] += g[i].trail[k] - g[i].lead[k];
    }
    auto s = make_binomial(std::move(p), std::move(q), ord);
    if (!s) continue;
    auto r = reduce_binomial(*s, g, ord);
    if (!r) continue;
    for (std::size_t k = 0; k < g.size(); ++k) pairs.emplace_back(k, g.size());
    g.push_back(*r);
    check(g.size() < 5000, "basis growth limit exceeded");
  }
  // minimal leads, then full tail reduction gives the canonical reduced basis
  std::sort(g.begin(), g.end(),
            [&](const Binomial& x, const Binomial& y) { return ord.compare(x.lead, y.lead) < 0; });
  std::vector<Binomial> kept;
  for (const auto& b : g) {
    bool redundant = false;
    for (const auto& h : kept)
      if (divides(h.lead, b.lead)) redundant = true;
    if (!redundant) kept.push_back(b);
  }
  for (auto& b : kept) b.trail = reduce_monomial(b.trail, kept);
  return kept;
}

std::vector<Binomial> quotient_variable_power(const std::vector<Binomial>& gens, std::size_t var,
                                              std::size_t nvars) {
  TermOrder elim = TermOrder::eliminate_last(nvars + 1);
  std::vector<Binomial> ext;
  for (const auto& b : gens) {
    IntVec p = b.lead, q = b.trail;
    p.push_back(0);
    q.push_back(0);
    auto nb = make_binomial(std::move(p), std::move(q), elim);
    if (nb) ext.push_back(*nb);
  }
  IntVec inv(nvars + 1, Int(0));
  inv[var] = 1;
  inv[nvars] = 1;
  ext.push_back(Binomial{inv, IntVec(nvars + 1, Int(0))});
  auto gb = buchberger(std::move(ext), elim);
  std::vector<Binomial> kept;
  for (const auto& b : gb) {
    if (b.lead[nvars] != 0 || b.trail[nvars] != 0) continue;
    IntVec p(b.lead.begin(), b.lead.end() - 1);
    IntVec q(b.trail.begin(), b.trail.end() - 1);
    kept.push_back(Binomial{std::move(p), std::move(q)});
  }
  return buchberger(std::move(kept), TermOrder::grevlex(nvars));
}

std::vector<Binomial> saturate_coordinates(std::vector<Binomial> gens, const IntVec& weights) {
  for (const auto& b : gens)
    check(dot(weights, b.lead) == dot(weights, b.trail),
          "coordinate saturation needs weight homogeneous generators");
  std::size_t n = weights.size();
  for (std::size_t v = 0; v < n; ++v) {
    gens = buchberger(std::move(gens), TermOrder::cheap_variable(weights, v));
    // with the cheapest variable last, stripping its common power saturates
    for (auto& b : gens) {
      Int m = std::min(b.lead[v], b.trail[v]);
      b.lead[v] -= m;
      b.trail[v] -= m;
    }
  }
  return gens;
}

BinomialIdeal toric_ideal(const IntMat& a) {
  check(is_pointed(a), "toric ideal needs a pointed column cone");
  std::vector<IntVec> ker = kernel_lattice(a);
  std::size_t n = a.cols();
  TermOrder grv = TermOrder::grevlex(n);
  std::vector<Binomial> gens;
  for (const IntVec& u : ker) {
    IntVec p(n, Int(0)), q(n, Int(0));
    for (std::size_t j = 0; j < n; ++j) {
      if (u[j] > 0) p[j] = u[j];
      if (u[j] < 0) q[j] = -u[j];
    }
    auto nb = make_binomial(std::move(p), std::move(q), grv);
    if (nb) gens.push_back(*nb);
  }
  if (gens.empty()) return {};
  return {buchberger(saturate_coordinates(std::move(gens), positive_weights(a)), grv)};
}

FaceIdeal face_ideal(const IntMat& a, const std::vector<int>& face_cols) {
  FaceIdeal out;
  BinomialIdeal sub = toric_ideal(a.submatrix_cols(face_cols));
  for (const auto& b : sub.gens) {
    IntVec p(a.cols(), Int(0)), q(a.cols(), Int(0));
    for (std::size_t k = 0; k < face_cols.size(); ++k) {
      p[face_cols[k]] = b.lead[k];
      q[face_cols[k]] = b.trail[k];
    }
    out.face_part.gens.push_back(Binomial{std::move(p), std::move(q)});
  }
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (std::find(face_cols.begin(), face_cols.end(), static_cast<int>(j)) == face_cols.end())
      out.killed_vars.push_back(static_cast<int>(j));
  return out;
}

CIInfo complete_intersection_info(const IntMat& a) {
  CIInfo info;
  info.codim = a.cols() - static_cast<std::size_t>(rank_of(a));
  BinomialIdeal ideal = toric_ideal(a);
  if (ideal.gens.empty()) {
    info.is_ci = info.codim == 0;
    return info;
  }
  // graded greedy: scan by a positive grading degree and keep what the
  // earlier picks cannot reach; the count is order independent
  TermOrder grv = TermOrder::grevlex(a.cols());
  IntVec w = positive_weights(a);
  std::vector<Binomial> sorted = ideal.gens;
  std::sort(sorted.begin(), sorted.end(), [&](const Binomial& x, const Binomial& y) {
    Int dx = dot(w, x.lead), dy = dot(w, y.lead);
    if (dx != dy) return dx < dy;
    return grv.compare(x.lead, y.lead) < 0;
  });
  std::vector<Binomial> picked;
  for (const auto& b : sorted) {
    if (!picked.empty()) {
      auto gb = buchberger(picked, grv);
      if (!reduce_binomial(b, gb, grv)) continue;
    }
    picked.push_back(b);
  }
  info.minimal_generators = picked.size();
  info.is_ci = info.minimal_generators == info.codim;
  return info;
}

bool is_homogeneous_projective(const IntMat& a) {
  return solve_rational(a.transposed(), RatVec(a.cols(), Rat(1))).has_value();
}

std::string to_string(const Binomial& b, const std::string& prefix) {
  auto mono = [&](const IntVec& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += prefix + std::to_string(i + 1);
      if (e[i] > 1) s += "^" + e[i].str();
    }
    return s.empty() ? std::string("1") : s;
  };
  return mono(b.lead) + " - " + mono(b.trail);
}

}  // namespace gkz
