#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gkz/toricgb.hpp"

using namespace gkz;

namespace {

IntMat cubic() { return IntMat::from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}}); }
IntMat m0134() { return IntMat::from_rows({{1, 1, 1, 1}, {0, 1, 3, 4}}); }

Binomial from_vector(const IntVec& u) {
  IntVec p(u.size(), Int(0)), q(u.size(), Int(0));
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] > 0) p[j] = u[j];
    if (u[j] < 0) q[j] = -u[j];
  }
  return Binomial{p, q};
}

// saturate one variable at a time through the inverse-variable route; slower
// but needs no grading, so it cross-checks the graded passes
BinomialIdeal toric_ideal_by_elimination(const IntMat& a) {
  std::vector<Binomial> gens;
  TermOrder grv = TermOrder::grevlex(a.cols());
  for (const IntVec& u : kernel_lattice(a)) {
    auto nb = make_binomial(from_vector(u).lead, from_vector(u).trail, grv);
    if (nb) gens.push_back(*nb);
  }
  for (std::size_t v = 0; v < a.cols(); ++v) gens = quotient_variable_power(gens, v, a.cols());
  return {buchberger(gens, grv)};
}

}  // namespace

TEST_CASE("grevlex ordering basics") {
  TermOrder ord = TermOrder::grevlex(2);
  CHECK(ord.greater(IntVec{2, 0}, IntVec{1, 1}));
  CHECK(ord.greater(IntVec{1, 1}, IntVec{0, 2}));
  CHECK(ord.greater(IntVec{0, 2}, IntVec{1, 0}));
  CHECK(ord.compare(IntVec{1, 2}, IntVec{1, 2}) == 0);
}

TEST_CASE("twisted cubic ideal") {
  BinomialIdeal ideal = toric_ideal(cubic());
  REQUIRE(ideal.gens.size() == 3);
  CHECK(ideal.gens[0] == Binomial{IntVec{0, 0, 2, 0}, IntVec{0, 1, 0, 1}});
  CHECK(ideal.gens[1] == Binomial{IntVec{0, 1, 1, 0}, IntVec{1, 0, 0, 1}});
  CHECK(ideal.gens[2] == Binomial{IntVec{0, 2, 0, 0}, IntVec{1, 0, 1, 0}});
  CHECK(to_string(ideal.gens[0]) == "d3^2 - d2*d4");
  CHECK(to_string(ideal.gens[1]) == "d2*d3 - d1*d4");
  CHECK(to_string(ideal.gens[2]) == "d2^2 - d1*d3");
}

TEST_CASE("principal ideal of a numerical pair") {
  BinomialIdeal ideal = toric_ideal(IntMat::from_rows({{2, 5}}));
  REQUIRE(ideal.gens.size() == 1);
  CHECK(ideal.gens[0] == Binomial{IntVec{5, 0}, IntVec{0, 2}});
}

TEST_CASE("unit matrix has the zero ideal") {
  CHECK(toric_ideal(IntMat::identity(3)).gens.empty());
}

TEST_CASE("membership separates the kernel lattice") {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (const IntMat& a : {cubic(), m0134(), IntMat::from_rows({{1, 1, 1}, {0, 2, 3}}),
                          IntMat::from_rows({{1, 1, 1, 1}, {0, 2, 5, 7}})}) {
    BinomialIdeal ideal = toric_ideal(a);
    TermOrder grv = TermOrder::grevlex(a.cols());
    std::vector<IntVec> ker = kernel_lattice(a);
    for (int trial = 0; trial < 40; ++trial) {
      IntVec u(a.cols(), Int(0));
      for (const IntVec& kv : ker) {
        Int c = coef(rng);
        for (std::size_t j = 0; j < a.cols(); ++j) u[j] += c * kv[j];
      }
      auto nb = make_binomial(from_vector(u).lead, from_vector(u).trail, grv);
      if (!nb) continue;
      CHECK(!reduce_binomial(*nb, ideal.gens, grv).has_value());
    }
    for (int trial = 0; trial < 40; ++trial) {
      IntVec u(a.cols());
      for (std::size_t j = 0; j < a.cols(); ++j) u[j] = coef(rng);
      if (is_zero(mul(a, u))) continue;  // only off-kernel probes
      auto nb = make_binomial(from_vector(u).lead, from_vector(u).trail, grv);
      REQUIRE(nb.has_value());
      CHECK(reduce_binomial(*nb, ideal.gens, grv).has_value());
    }
  }
}

TEST_CASE("every S pair of the final basis reduces to zero") {
  for (const IntMat& a : {cubic(), m0134(), IntMat::from_rows({{1, 1, 1, 1}, {0, 2, 5, 7}})}) {
    BinomialIdeal ideal = toric_ideal(a);
    TermOrder grv = TermOrder::grevlex(a.cols());
    for (std::size_t i = 0; i < ideal.gens.size(); ++i)
      for (std::size_t j = i + 1; j < ideal.gens.size(); ++j) {
        const auto& f = ideal.gens[i];
        const auto& g = ideal.gens[j];
        IntVec m(f.lead.size());
        for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::max(f.lead[k], g.lead[k]);
        IntVec p = m, q = m;
        for (std::size_t k = 0; k < m.size(); ++k) {
          p[k] += g.trail[k] - g.lead[k];
          q[k] += f.trail[k] - f.lead[k];
        }
        auto s = make_binomial(p, q, grv);
        if (!s) continue;
        CHECK(!reduce_binomial(*s, ideal.gens, grv).has_value());
      }
  }
}

TEST_CASE("graded saturation agrees with the elimination route") {
  for (const IntMat& a : {cubic(), m0134(), IntMat::from_rows({{1, 1, 1}, {0, 1, 3}}),
                          IntMat::from_rows({{1, 1, 1, 1}, {0, 2, 5, 7}})}) {
    CHECK(toric_ideal(a) == toric_ideal_by_elimination(a));
  }
}

TEST_CASE("saturation can erase a monomial factor entirely") {
  // (d1*d2 - d1 : d1^inf) = (d2 - 1)
  TermOrder grv = TermOrder::grevlex(2);
  std::vector<Binomial> gens{*make_binomial(IntVec{1, 1}, IntVec{1, 0}, grv)};
  auto sat = quotient_variable_power(gens, 0, 2);
  REQUIRE(sat.size() == 1);
  CHECK(sat[0] == Binomial{IntVec{0, 1}, IntVec{0, 0}});
  CHECK(to_string(sat[0]) == "d2 - 1");
}

TEST_CASE("face ideals embed the sub matrix ideal") {
  auto f1 = face_ideal(cubic(), {0});
  CHECK(f1.face_part.gens.empty());
  CHECK(f1.killed_vars == std::vector<int>{1, 2, 3});

  auto f2 = face_ideal(cubic(), {0, 3});
  CHECK(f2.face_part.gens.empty());
  CHECK(f2.killed_vars == std::vector<int>{1, 2});

  auto f3 = face_ideal(cubic(), {0, 1, 2, 3});
  CHECK(f3.face_part == toric_ideal(cubic()));
  CHECK(f3.killed_vars.empty());
}

TEST_CASE("complete intersection detection") {
  auto pair = complete_intersection_info(IntMat::from_rows({{2, 5}}));
  CHECK(pair.minimal_generators == 1);
  CHECK(pair.codim == 1);
  CHECK(pair.is_ci);

  auto tc = complete_intersection_info(cubic());
  CHECK(tc.minimal_generators == 3);
  CHECK(tc.codim == 2);
  CHECK(!tc.is_ci);

  auto unit = complete_intersection_info(IntMat::identity(2));
  CHECK(unit.minimal_generators == 0);
  CHECK(unit.is_ci);

  // bounds that hold for any toric ideal
  for (const IntMat& a : {m0134(), IntMat::from_rows({{1, 1, 1, 1}, {0, 2, 5, 7}})}) {
    auto info = complete_intersection_info(a);
    CHECK(info.minimal_generators >= info.codim);
    CHECK(info.minimal_generators <= toric_ideal(a).gens.size());
  }
}

TEST_CASE("projective homogeneity witness") {
  CHECK(is_homogeneous_projective(cubic()));
  CHECK(is_homogeneous_projective(IntMat::identity(2)));
  CHECK(is_homogeneous_projective(IntMat::from_rows({{1, 1}, {0, 2}})));  // top row works
  CHECK(!is_homogeneous_projective(IntMat::from_rows({{2, 5}})));
  CHECK(!is_homogeneous_projective(IntMat::from_rows({{1, 1, 2}, {0, 2, 1}})));
}
