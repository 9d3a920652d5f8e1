#pragma once

// Affine semigroup arithmetic for NA (nonnegative column combinations) and
// its saturation cone(A) meet ZA. All internal computation happens in ZA
// coordinates, where the column lattice is the full integer lattice; ambient
// vectors outside ZA are simply non-members. Hole sets, interior ideals and
// local cohomology supports are certified exact through an explicit cell
// decomposition of the saturation into shifted simplicial subcones.

#include "gkz/diophantine.hpp"
#include "gkz/polycone.hpp"

namespace gkz {

// z + N(directions), with the minimal prime face carrying the directions.
struct DegreeComponent {
  IntVec shift;
  std::vector<IntVec> directions;
  std::vector<int> face_cols;
};

struct DegreeSet {
  std::vector<IntVec> points;
  std::vector<DegreeComponent> components;
  bool empty() const { return points.empty() && components.empty(); }
};

// beta in the Zariski closure: equal to a point, or in the affine span of a
// component (shift + rational span of the directions).
bool in_closure(const DegreeSet& ds, const RatVec& beta);

struct GapReport {
  std::vector<Int> gaps;
  Int frobenius = -1;  // -1 when there are no gaps
  bool symmetric = true;
  bool valid = false;  // generators positive with gcd 1
};

GapReport numerical_semigroup_gaps(std::vector<Int> gens);

class SemigroupProfile {
 public:
  // Requires distinct nonzero columns and a pointed cone. Rank may be lower
  // than the row count; everything is measured in the column lattice ZA.
  static SemigroupProfile build(const IntMat& a);

  const IntMat& matrix() const { return a_; }
  const IntMat& coords_matrix() const { return ac_; }
  const std::vector<IntVec>& lattice_rows() const { return lat_; }
  std::size_t rank() const { return lat_.size(); }

  const std::vector<FacetFunctional>& facets() const { return facets_; }
  const IntVec& grading() const { return grading_; }  // positive on NA - 0

  std::optional<IntVec> to_coords(const IntVec& ambient) const;
  IntVec to_ambient(const IntVec& coords) const;

  bool member(const IntVec& ambient) const;           // in NA
  bool member_coords(const IntVec& c) const;
  bool saturation_member(const IntVec& ambient) const;  // in cone(A) meet ZA
  bool saturation_member_coords(const IntVec& c) const;

  const std::vector<IntVec>& hilbert_basis_coords() const { return hilbert_; }
  std::vector<IntVec> hilbert_basis() const;  // ambient, sorted by (grading, lex)
  bool is_normal() const { return normal_; }

  // c with c + saturation contained in NA, certified cellwise.
  IntVec conductor() const { return to_ambient(conductor_); }

  // saturation minus NA, exactly: finite points plus full shifted-cone pieces.
  DegreeSet holes() const;

  // minimal generators of the interior ideal of the saturation (all facet
  // functionals strictly positive), as a module over the saturation. Ambient.
  std::vector<IntVec> interior_generators() const;

  // Degrees of the first local cohomology of the semigroup ring against the
  // maximal graded ideal, in the cohomological convention (negatives of the
  // hole points reachable into NA along both extreme rays). Rank 2 only.
  std::vector<IntVec> h1_degrees() const;

  // Exact closure data for {v in interior(saturation) : v - f not in NA},
  // the degree support controlling the shifted-embedding comparisons.
  // Requires a normal profile; f is an interior element, ambient coords.
  DegreeSet interior_minus_shifted(const IntVec& f_ambient) const;

  // All saturation elements with grading value at most bound, ambient coords.
  std::vector<IntVec> saturation_below(const Int& bound) const;

 private:
  struct Subcone {
    std::vector<int> ray_cols;       // column indices of the simplicial rays
    IntMat c;                        // the rays as a square matrix, coords
    std::vector<IntVec> pi_points;   // lattice points of the half-open box
  };

  IntVec facet_values(const IntVec& c) const;
  bool facets_nonneg(const IntVec& c) const;
  bool facets_strict(const IntVec& c) const;
  std::vector<int> minimal_face_containing(const std::vector<int>& cols) const;

  // minimal lambda with p + C lambda in the union of (targets[t] + NA)
  std::vector<IntVec> cell_cover_minimals(const Subcone& sc, const IntVec& p,
                                          const std::vector<IntVec>& targets) const;
  // staircase complement pieces of the upward set generated by gens, as
  // (offset gamma, free coordinate set)
  struct CellPiece {
    IntVec gamma;
    std::vector<int> free;
  };
  std::vector<CellPiece> staircase_complement(const std::vector<IntVec>& gens,
                                              std::size_t dim) const;

  DegreeSet assemble_degree_set(std::vector<IntVec> pts,
                                std::vector<std::pair<IntVec, std::vector<int>>> pieces) const;

  IntMat a_;
  std::vector<IntVec> lat_;
  IntMat ac_;
  std::vector<FacetFunctional> facets_;
  IntVec grading_;
  std::vector<Subcone> subcones_;
  std::vector<IntVec> hilbert_;
  IntVec conductor_;
  bool normal_ = false;
};

}  // namespace gkz
