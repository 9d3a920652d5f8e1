#include "gkz/diophantine.hpp"

#include <algorithm>
#include <set>

namespace gkz {

namespace {

bool dominates(const IntVec& x, const IntVec& y) {  // x >= y componentwise
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < y[i]) return false;
  return true;
}

// Level-synchronous Contejean-Devie on m x = 0. Nodes at level k have
// coordinate sum k, so distinct nodes on one level are incomparable and the
// domination prune below can never hide an undiscovered minimal solution.
// early_t: when >= 0, stop as soon as a solution with x[early_t] == 1 exists
// (feasibility queries); the full minimal set is not needed then.
std::vector<IntVec> contejean_devie(const IntMat& m, int early_t, bool* found_early) {
  const std::size_t n = m.cols();
  std::vector<IntVec> sols;
  std::set<IntVec> frontier;
  std::vector<IntVec> values;  // m*x cache, parallel to frontier iteration

  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    frontier.insert(std::move(e));
  }
  if (found_early) *found_early = false;

  std::size_t expanded = 0;
  while (!frontier.empty()) {
    // harvest solutions on this level first
    std::vector<IntVec> level(frontier.begin(), frontier.end());
    frontier.clear();
    std::vector<const IntVec*> pending;
    for (const auto& p : level) {
      IntVec mp = mul(m, p);
      if (is_zero(mp)) {
        if (early_t >= 0 && p[early_t] == 1) {
          if (found_early) *found_early = true;
          return sols;
        }
        sols.push_back(p);
      } else {
        pending.push_back(&p);
      }
    }
    for (const IntVec* pp : pending) {
      const IntVec& p = *pp;
      IntVec mp = mul(m, p);
      for (std::size_t i = 0; i < n; ++i) {
        // descend only when adding e_i moves m*p toward the origin
        Int ip = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) ip += mp[r] * m.at(r, i);
        if (ip >= 0) continue;
        IntVec q = p;
        q[i] += 1;
        bool dominated = false;
        for (const auto& s : sols)
          if (dominates(q, s)) {
            dominated = true;
            break;
          }
        if (!dominated) frontier.insert(std::move(q));
      }
      if (++expanded > 2000000) throw internal_error("contejean_devie: search space too large");
    }
  }
  // same-level duplicates aside, domination pruning already keeps sols minimal;
  // sweep once for safety
  std::vector<IntVec> minimal;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < sols.size() && keep; ++j)
      if (i != j && dominates(sols[i], sols[j]) && sols[i] != sols[j]) keep = false;
    if (keep) minimal.push_back(sols[i]);
  }
  std::sort(minimal.begin(), minimal.end());
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
  return minimal;
}

IntMat homogenize(const IntMat& m, const IntVec& rhs) {
  IntMat h(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) h.at(i, j) = m.at(i, j);
    h.at(i, m.cols()) = -rhs[i];
  }
  return h;
}

}  // namespace

std::vector<IntVec> minimal_nonzero_homogeneous(const IntMat& m) {
  return contejean_devie(m, -1, nullptr);
}

std::vector<IntVec> minimal_nonneg_solutions(const IntMat& m, const IntVec& rhs) {
  check(m.rows() == rhs.size(), "minimal_nonneg_solutions: shape mismatch");
  if (is_zero(rhs)) return {IntVec(m.cols(), Int(0))};
  // minimal solutions of the inhomogeneous system are exactly the minimal
  // solutions of the homogenized system with homogenizing coordinate 1
  auto hom = minimal_nonzero_homogeneous(homogenize(m, rhs));
  std::vector<IntVec> out;
  for (const auto& s : hom) {
    if (s[m.cols()] != 1) continue;
    out.emplace_back(s.begin(), s.begin() + m.cols());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_nonneg_solution(const IntMat& m, const IntVec& rhs) {
  check(m.rows() == rhs.size(), "has_nonneg_solution: shape mismatch");
  if (is_zero(rhs)) return true;
  bool found = false;
  contejean_devie(homogenize(m, rhs), static_cast<int>(m.cols()), &found);
  return found;
}

}  // namespace gkz
