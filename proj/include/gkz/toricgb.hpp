#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkz/exactla.hpp"

namespace gkz {

// difference of two monic monomials, x^lead - x^trail with lead greater in
// the order that produced it; the class is closed under S-pairs and reduction
struct Binomial {
  IntVec lead;
  IntVec trail;
  bool operator==(const Binomial& o) const { return lead == o.lead && trail == o.trail; }
};

// monomial order given by weight stages refined by reverse lex; seq is the
// scan sequence, compared from the back, so the last entry is cheapest
struct TermOrder {
  std::vector<IntVec> stages;
  std::vector<std::size_t> seq;

  static TermOrder grevlex(std::size_t nvars);
  // positive weights, with one variable made cheapest for saturation passes
  static TermOrder cheap_variable(const IntVec& weights, std::size_t cheap);
  // block order eliminating the final variable
  static TermOrder eliminate_last(std::size_t nvars);

  int compare(const IntVec& a, const IntVec& b) const;
  bool greater(const IntVec& a, const IntVec& b) const { return compare(a, b) > 0; }
};

// orient p - q by the order; nullopt encodes the zero binomial
std::optional<Binomial> make_binomial(IntVec p, IntVec q, const TermOrder& ord);

// normal form; nullopt if the binomial reduces to zero
std::optional<Binomial> reduce_binomial(Binomial b, const std::vector<Binomial>& gens,
                                        const TermOrder& ord);

// reduced Groebner basis, sorted by leading monomial; canonical for the order
std::vector<Binomial> buchberger(std::vector<Binomial> gens, const TermOrder& ord);

// (ideal : x_var^inf) via an inverse variable and elimination; no grading needed
std::vector<Binomial> quotient_variable_power(const std::vector<Binomial>& gens,
                                              std::size_t var, std::size_t nvars);

// saturate by every variable in one sequential pass; every generator must be
// homogeneous for the given positive weights
std::vector<Binomial> saturate_coordinates(std::vector<Binomial> gens, const IntVec& weights);

struct BinomialIdeal {
  std::vector<Binomial> gens;  // reduced grevlex basis
  bool operator==(const BinomialIdeal& o) const { return gens == o.gens; }
};

// vanishing ideal of the monomial parametrization by the columns of a
BinomialIdeal toric_ideal(const IntMat& a);

struct FaceIdeal {
  BinomialIdeal face_part;        // exponents live in the full variable set
  std::vector<int> killed_vars;   // variables off the face
};

FaceIdeal face_ideal(const IntMat& a, const std::vector<int>& face_cols);

struct CIInfo {
  std::size_t minimal_generators = 0;
  std::size_t codim = 0;
  bool is_ci = false;
};

CIInfo complete_intersection_info(const IntMat& a);

// some row combination weights every column to one
bool is_homogeneous_projective(const IntMat& a);

std::string to_string(const Binomial& b, const std::string& prefix = "d");

}  // namespace gkz
