#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gkz/semigrp.hpp"

using namespace gkz;

namespace {

IntMat cubic() { return IntMat::from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}}); }
IntMat m0134() { return IntMat::from_rows({{1, 1, 1, 1}, {0, 1, 3, 4}}); }
IntMat m013() { return IntMat::from_rows({{1, 1, 1}, {0, 1, 3}}); }

// column-sum reachability, independent of the diophantine machinery
std::set<IntVec> semigroup_window(const IntMat& a, const IntVec& w, const Int& bound) {
  std::set<IntVec> seen;
  IntVec zero(a.rows(), Int(0));
  seen.insert(zero);
  std::vector<IntVec> queue{zero};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      IntVec nxt = add(queue[qi], a.col(j));
      if (dot(w, nxt) > bound) continue;
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return seen;
}

// all lattice points of the cone in a 2d box, filtered by the facet system
std::set<IntVec> saturation_window_2d(const SemigroupProfile& sp, const Int& bound) {
  std::set<IntVec> out;
  // coarse box: grading positive on the cone makes this finite
  for (Int x = 0; x <= bound; ++x)
    for (Int y = -4 * bound; y <= 4 * bound; ++y) {
      IntVec v{x, y};
      bool in = true;
      for (const auto& f : sp.facets())
        if (dot(f.h, v) < 0) in = false;
      if (in && dot(sp.grading(), v) <= bound) out.insert(v);
    }
  return out;
}

// materialize a degree set inside a grading window (works in coords = ambient
// for full-lattice examples)
std::set<IntVec> degree_set_window(const DegreeSet& ds, const IntVec& w, const Int& bound) {
  std::set<IntVec> out;
  for (const auto& p : ds.points)
    if (dot(w, p) <= bound) out.insert(p);
  for (const auto& comp : ds.components) {
    std::set<IntVec> seen{comp.shift};
    std::vector<IntVec> queue{comp.shift};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      if (dot(w, queue[qi]) <= bound) out.insert(queue[qi]);
      for (const auto& d : comp.directions) {
        IntVec nxt = add(queue[qi], d);
        if (dot(w, nxt) > 4 * bound) continue;
        if (seen.insert(nxt).second) queue.push_back(nxt);
      }
    }
  }
  // drop anything outside the window
  for (auto it = out.begin(); it != out.end();)
    it = (dot(w, *it) > bound) ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

TEST_CASE("membership matches column-sum reachability") {
  for (const IntMat& a : {cubic(), m0134(), m013()}) {
    auto sp = SemigroupProfile::build(a);
    Int bound = 40;
    auto window = semigroup_window(sp.coords_matrix(), sp.grading(), bound);
    for (Int x = 0; x <= 10; ++x)
      for (Int y = -2; y <= 12; ++y) {
        IntVec v{x, y};
        if (dot(sp.grading(), v) > bound) continue;
        CHECK(sp.member_coords(v) == (window.count(v) > 0));
      }
  }
}

TEST_CASE("saturation membership is the facet test on the column lattice") {
  auto sp = SemigroupProfile::build(m0134());
  CHECK(sp.saturation_member(IntVec{1, 2}));
  CHECK(!sp.member(IntVec{1, 2}));
  CHECK(sp.member(IntVec{2, 4}));
  CHECK(!sp.saturation_member(IntVec{1, 5}));
  CHECK(!sp.saturation_member(IntVec{-1, 0}));
}

TEST_CASE("index-two column lattice: everything is measured inside it") {
  auto sp = SemigroupProfile::build(IntMat::from_rows({{1, 1}, {0, 2}}));
  CHECK(sp.rank() == 2);
  CHECK(!sp.member(IntVec{1, 1}));             // outside the column lattice
  CHECK(!sp.saturation_member(IntVec{1, 1}));  // also outside, not a hole
  CHECK(sp.member(IntVec{1, 0}));
  CHECK(sp.member(IntVec{2, 2}));
  CHECK(sp.is_normal());
  CHECK(sp.holes().empty());
}

TEST_CASE("hilbert basis of the cubic is its column set") {
  auto sp = SemigroupProfile::build(cubic());
  auto hb = sp.hilbert_basis();
  REQUIRE(hb.size() == 4);
  CHECK(hb[0] == IntVec{1, 0});
  CHECK(hb[1] == IntVec{1, 1});
  CHECK(hb[2] == IntVec{1, 2});
  CHECK(hb[3] == IntVec{1, 3});
  CHECK(sp.is_normal());
  CHECK(sp.holes().empty());
}

TEST_CASE("hilbert basis of 0134 adds the missing middle point") {
  auto sp = SemigroupProfile::build(m0134());
  auto hb = sp.hilbert_basis();
  REQUIRE(hb.size() == 5);
  CHECK(hb[0] == IntVec{1, 0});
  CHECK(hb[1] == IntVec{1, 1});
  CHECK(hb[2] == IntVec{1, 2});
  CHECK(hb[3] == IntVec{1, 3});
  CHECK(hb[4] == IntVec{1, 4});
  CHECK(!sp.is_normal());
}

TEST_CASE("hilbert basis generates exactly the saturation window") {
  for (const IntMat& a : {cubic(), m0134(), m013()}) {
    auto sp = SemigroupProfile::build(a);
    Int bound = 32;
    std::set<IntVec> brute = saturation_window_2d(sp, bound);
    std::set<IntVec> gen;
    for (const auto& v : sp.saturation_below(bound)) {
      auto c = sp.to_coords(v);
      REQUIRE(c.has_value());
      if (dot(sp.grading(), *c) <= bound) gen.insert(*c);
    }
    CHECK(gen == brute);
  }
}

TEST_CASE("holes of 0134 are the single deep point") {
  auto sp = SemigroupProfile::build(m0134());
  auto hs = sp.holes();
  REQUIRE(hs.points.size() == 1);
  CHECK(hs.points[0] == IntVec{1, 2});
  CHECK(hs.components.empty());
}

TEST_CASE("holes of the truncated cubic form one ray component") {
  auto sp = SemigroupProfile::build(m013());
  auto hs = sp.holes();
  CHECK(hs.points.empty());
  REQUIRE(hs.components.size() == 1);
  CHECK(hs.components[0].shift == IntVec{1, 2});
  REQUIRE(hs.components[0].directions.size() == 1);
  CHECK(hs.components[0].directions[0] == IntVec{1, 3});
  CHECK(hs.components[0].face_cols == std::vector<int>{2});
}

TEST_CASE("hole sets match the window difference oracle") {
  for (const IntMat& a : {cubic(), m0134(), m013(), IntMat::from_rows({{1, 1, 1}, {0, 2, 3}}),
                          IntMat::from_rows({{2, 3}}), IntMat::from_rows({{2, 5}}),
                          IntMat::from_rows({{1, 1, 1, 1}, {0, 2, 5, 7}})}) {
    auto sp = SemigroupProfile::build(a);
    Int bound = 36;
    std::set<IntVec> na;
    for (const auto& v : semigroup_window(sp.coords_matrix(), sp.grading(), bound)) na.insert(v);
    std::set<IntVec> sat;
    for (const auto& v : sp.saturation_below(bound)) {
      auto c = sp.to_coords(v);
      if (dot(sp.grading(), *c) <= bound) sat.insert(*c);
    }
    std::set<IntVec> expect;
    for (const auto& v : sat)
      if (!na.count(v)) expect.insert(v);

    DegreeSet hs = sp.holes();
    DegreeSet hs_coords;  // translate ambient back to coords for the window
    for (const auto& p : hs.points) hs_coords.points.push_back(*sp.to_coords(p));
    for (const auto& comp : hs.components) {
      DegreeComponent c2;
      c2.shift = *sp.to_coords(comp.shift);
      for (const auto& d : comp.directions) c2.directions.push_back(*sp.to_coords(d));
      hs_coords.components.push_back(c2);
    }
    auto got = degree_set_window(hs_coords, sp.grading(), bound);
    CHECK(got == expect);
  }
}

TEST_CASE("holes are closed downward toward the semigroup") {
  auto sp = SemigroupProfile::build(m0134());
  auto hs = sp.holes();
  for (const auto& p : hs.points)
    for (std::size_t j = 0; j < sp.matrix().cols(); ++j) {
      IntVec down = sub(p, sp.matrix().col(j));
      if (sp.saturation_member(down)) CHECK(!sp.member(down));
    }
}

TEST_CASE("conductor certifies the saturation shift") {
  for (const IntMat& a : {cubic(), m0134(), m013()}) {
    auto sp = SemigroupProfile::build(a);
    IntVec c = sp.conductor();
    CHECK(sp.member(c));
    for (const auto& v : sp.saturation_below(20)) CHECK(sp.member(add(c, v)));
  }
  CHECK(SemigroupProfile::build(m0134()).conductor() == IntVec{5, 10});
}

TEST_CASE("interior ideal generators of the cubic") {
  auto sp = SemigroupProfile::build(cubic());
  auto gens = sp.interior_generators();
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == IntVec{1, 1});
  CHECK(gens[1] == IntVec{1, 2});
}

TEST_CASE("interior ideal generators cover the interior window") {
  for (const IntMat& a : {cubic(), m0134(), m013()}) {
    auto sp = SemigroupProfile::build(a);
    auto gens = sp.interior_generators();
    CHECK(!gens.empty());
    Int bound = 30;
    for (const auto& v_amb : sp.saturation_below(bound)) {
      auto v = sp.to_coords(v_amb);
      bool interior = true;
      for (const auto& f : sp.facets())
        if (dot(f.h, *v) <= 0) interior = false;
      if (!interior) continue;
      bool covered = false;
      for (const auto& g_amb : gens) {
        IntVec diff = sub(v_amb, g_amb);
        if (sp.saturation_member(diff)) covered = true;
      }
      CHECK(covered);
    }
    // minimality: no generator reachable from another
    for (const auto& g1 : gens)
      for (const auto& g2 : gens) {
        if (g1 == g2) continue;
        IntVec diff = sub(g1, g2);
        bool interior_diff = sp.saturation_member(diff);
        CHECK(!interior_diff);
      }
  }
}

TEST_CASE("first local cohomology degrees") {
  auto sp = SemigroupProfile::build(m0134());
  auto h1 = sp.h1_degrees();
  REQUIRE(h1.size() == 1);
  CHECK(h1[0] == IntVec{-1, -2});

  CHECK(SemigroupProfile::build(cubic()).h1_degrees().empty());
  CHECK(SemigroupProfile::build(m013()).h1_degrees().empty());
  CHECK(SemigroupProfile::build(IntMat::identity(2)).h1_degrees().empty());
}

TEST_CASE("interior minus shifted copy: strip supports along facets") {
  auto sp = SemigroupProfile::build(cubic());
  auto d1 = sp.interior_minus_shifted(IntVec{1, 1});
  CHECK(d1.points.empty());
  REQUIRE(d1.components.size() == 1);
  CHECK(d1.components[0].shift == IntVec{1, 2});
  REQUIRE(d1.components[0].directions.size() == 1);
  CHECK(d1.components[0].directions[0] == IntVec{1, 3});

  auto d2 = sp.interior_minus_shifted(IntVec{1, 2});
  CHECK(d2.points.empty());
  REQUIRE(d2.components.size() == 1);
  CHECK(d2.components[0].shift == IntVec{1, 1});
  CHECK(d2.components[0].directions[0] == IntVec{1, 0});

  // closure membership drives the embedding checks
  CHECK(in_closure(d1, RatVec{Rat(2), Rat(5)}));
  CHECK(!in_closure(d1, RatVec{Rat(1000), Rat(0)}));
  CHECK(in_closure(d2, RatVec{Rat(1000), Rat(1)}));
  CHECK(!in_closure(d2, RatVec{Rat(1000), Rat(0)}));
}

TEST_CASE("numerical semigroup gaps") {
  auto g25 = numerical_semigroup_gaps({Int(2), Int(5)});
  CHECK(g25.valid);
  CHECK(g25.gaps == std::vector<Int>{1, 3});
  CHECK(g25.frobenius == 3);
  CHECK(g25.symmetric);

  auto g34 = numerical_semigroup_gaps({Int(3), Int(4)});
  CHECK(g34.gaps == std::vector<Int>{1, 2, 5});
  CHECK(g34.frobenius == 5);
  CHECK(g34.symmetric);

  auto g357 = numerical_semigroup_gaps({Int(3), Int(5), Int(7)});
  CHECK(g357.gaps == std::vector<Int>{1, 2, 4});
  CHECK(g357.frobenius == 4);
  CHECK(!g357.symmetric);

  auto g1 = numerical_semigroup_gaps({Int(1)});
  CHECK(g1.valid);
  CHECK(g1.gaps.empty());
  CHECK(g1.frobenius == -1);
  CHECK(g1.symmetric);

  auto bad = numerical_semigroup_gaps({Int(2), Int(4)});
  CHECK(!bad.valid);

  auto big = numerical_semigroup_gaps({Int(6), Int(10), Int(15)});
  CHECK(big.frobenius == 29);
}

TEST_CASE("one dimensional profiles use the column lattice sign") {
  auto sp = SemigroupProfile::build(IntMat::from_rows({{2, 5}}));
  CHECK(sp.rank() == 1);
  CHECK(!sp.is_normal());
  auto hs = sp.holes();
  // gaps 1 and 3 of the numerical semigroup
  REQUIRE(hs.points.size() == 2);
  CHECK(hs.points[0] == IntVec{1});
  CHECK(hs.points[1] == IntVec{3});
  CHECK(hs.components.empty());

  auto spn = SemigroupProfile::build(IntMat::from_rows({{-2, -5}}));
  auto hsn = spn.holes();
  REQUIRE(hsn.points.size() == 2);
  CHECK(hsn.points[0] == IntVec{-3});
  CHECK(hsn.points[1] == IntVec{-1});
}

TEST_CASE("degree set closure membership") {
  DegreeSet ds;
  ds.points.push_back(IntVec{1, 2});
  DegreeComponent comp;
  comp.shift = IntVec{2, 5};
  comp.directions.push_back(IntVec{1, 3});
  ds.components.push_back(comp);
  CHECK(in_closure(ds, RatVec{Rat(1), Rat(2)}));
  CHECK(!in_closure(ds, RatVec{Rat(2), Rat(2)}));
  CHECK(in_closure(ds, RatVec{Rat(5), Rat(14)}));   // 2+3, 5+9
  CHECK(in_closure(ds, RatVec{Rat(1), Rat(2)}));
  CHECK(in_closure(ds, RatVec{Rat(3, 2), Rat(7, 2)}));  // 2+(1,3)*(-1/2)
  CHECK(!in_closure(ds, RatVec{Rat(1), Rat(3)}));
}
