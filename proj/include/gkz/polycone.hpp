#pragma once

// Rational-cone geometry for an integer matrix A whose columns generate the
// cone. Pointedness is established combinatorially (no zero is a nontrivial
// convex combination of columns), facets come from rank-(d-1) column subsets,
// and normalized volume is certified by an explicit placing triangulation.

#include "gkz/exactla.hpp"

#include <utility>

namespace gkz {

struct MatrixValidation {
  bool nonempty = false;
  bool distinct_columns = false;
  bool full_rank = false;        // row rank equals the number of rows
  bool lattice_full = false;     // columns generate the full ambient lattice
  bool pointed = false;
  std::string detail;            // first failed property, human readable
  bool ok() const { return nonempty && distinct_columns && full_rank && lattice_full && pointed; }
};

MatrixValidation validate_matrix(const IntMat& a);

// 0 is not a convex combination of the columns (checked over all affinely
// independent column subsets; Caratheodory keeps that exhaustive).
bool is_pointed(const IntMat& a);

struct FacetFunctional {
  IntVec h;                    // primitive, h.a_j >= 0 for every column j
  std::vector<int> zero_cols;  // columns with h.a_j == 0
};

// Facets of cone(A). Requires rank(A) == rows(A) and a pointed cone.
// Sorted lexicographically by functional.
std::vector<FacetFunctional> cone_facets(const IntMat& a);

struct PrimeFace {
  std::vector<int> cols;       // column indices on the face, ascending
  std::vector<int> facet_ids;  // facets vanishing on the face
  std::size_t dim = 0;         // rank of the column subset
};

// All faces cut out by supporting hyperplanes, including the whole cone and
// the vertex face (empty column set). Sorted by (dim, cols).
std::vector<PrimeFace> prime_faces(const IntMat& a);

struct TriSimplex {
  std::vector<int> cols;  // column indices of the vertices other than 0
  bool has_origin = false;
  Int volume = 0;  // |det| of edge vectors, in lattice coordinates
};

struct VolumeCertificate {
  Int volume = 0;                  // normalized volume, sum of simplex dets
  std::vector<TriSimplex> simplices;
  std::vector<IntVec> lattice_rows;  // HNF basis of the measuring lattice
};

enum class InsertOrder { LexAsc, LexDesc };

// Normalized volume of conv(columns(cols) and 0) measured in `lattice`
// (HNF row basis; defaults to the lattice generated by the chosen columns).
// Degenerate bodies (affine rank below the lattice rank) get volume 0.
// The empty column set has volume 1 by convention.
VolumeCertificate normalized_volume(const IntMat& a, const std::vector<int>& cols,
                                    const std::vector<IntVec>* lattice = nullptr,
                                    InsertOrder order = InsertOrder::LexAsc);
VolumeCertificate normalized_volume(const IntMat& a);  // all columns, own lattice

struct PyramidReduction {
  // chain[0] is the full column set; each later entry drops one column whose
  // removal lowers the rank by one while staying a prime face.
  std::vector<std::vector<int>> chain;
  PrimeFace face;  // the minimal face reached
};

PyramidReduction iterated_pyramid_face(const IntMat& a);

// (volume of the face in its column lattice, volume of A in its column lattice)
std::pair<Int, Int> face_volume_pair(const IntMat& a, const std::vector<int>& face_cols);

}  // namespace gkz
