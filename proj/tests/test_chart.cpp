#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>

#include "doctest.h"
#include "stq/chart.hpp"

using namespace stq;

namespace {

AngleExpr sym(Symbol s) { return AngleExpr::symbol(s); }

}  // namespace

TEST_CASE("angle expression arithmetic") {
  AngleExpr two_beta_gamma = sym(Symbol::beta) * Rational(2) + sym(Symbol::gamma);
  CHECK(two_beta_gamma.coeff(Symbol::beta) == Rational(2));
  CHECK(two_beta_gamma.coeff(Symbol::gamma) == Rational(1));
  CHECK(two_beta_gamma.to_string() == "2*beta+gamma");

  AngleExpr e = AngleExpr::pi_times(Rational(2, 3)) - sym(Symbol::alpha);
  CHECK(e.to_string() == "-alpha+(2/3)*pi");
  CHECK(e.evaluate({0.5, 0, 0, 0}) == doctest::Approx(2 * 3.14159265358979 / 3 - 0.5));

  CHECK(sym(Symbol::alpha).single_symbol() == Symbol::alpha);
  CHECK_FALSE(two_beta_gamma.single_symbol().has_value());
}

TEST_CASE("alternating length assignment") {
  auto wheel = pseudo_double_wheel(12);
  auto labels = alternating_length_assignment(12);
  int b_count = 0;
  for (auto l : labels) b_count += l == LengthLabel::B;
  CHECK(b_count == 6);
  CHECK(labels.size() == 24);

  const auto& m = wheel.map();
  auto expect_b = [&](VertexId u, VertexId v) {
    CHECK(labels[static_cast<size_t>(m.edge_index(u, v))] == LengthLabel::B);
  };
  expect_b(wheel.north(), 0);
  expect_b(wheel.north(), 6);
  expect_b(wheel.south(), 1);
  expect_b(wheel.south(), 7);
  expect_b(3, 4);
  expect_b(9, 10);

  CHECK_THROWS_AS((void)alternating_length_assignment(10), Error);

  auto labels18 = alternating_length_assignment(18);
  int b18 = 0;
  for (auto l : labels18) b18 += l == LengthLabel::B;
  CHECK(b18 == 9);
}

TEST_CASE("canonical chart vertex types") {
  Chart chart = canonical_chart(12);
  auto wheel = pseudo_double_wheel(12);

  AngleExpr v2 = vertex_type(chart, 2);
  CHECK(v2 == sym(Symbol::beta) * Rational(2) + sym(Symbol::gamma));
  AngleExpr v3 = vertex_type(chart, 3);
  CHECK(v3 == sym(Symbol::alpha) + sym(Symbol::gamma) + sym(Symbol::delta));
  AngleExpr north = vertex_type(chart, wheel.north());
  AngleExpr expected_pole =
      (sym(Symbol::alpha) + sym(Symbol::beta) + sym(Symbol::delta)) * Rational(2);
  CHECK(north == expected_pole);
  CHECK(vertex_type(chart, wheel.south()) == expected_pole);

  for (int i = 0; i < 12; ++i) {
    AngleExpr t = vertex_type(chart, i);
    bool is_v2_type = t == sym(Symbol::beta) * Rational(2) + sym(Symbol::gamma);
    bool is_v3_type = t == sym(Symbol::alpha) + sym(Symbol::gamma) + sym(Symbol::delta);
    CHECK((is_v2_type || is_v3_type));
  }
}

TEST_CASE("canonical chart passes the face pattern check") {
  Chart chart = canonical_chart(12);
  CHECK(chart.tile_type == 2);
  CHECK(face_pattern_check(chart).empty());
  CHECK(chart.fully_assigned());

  Chart chart18 = canonical_chart(18);
  CHECK(face_pattern_check(chart18).empty());
}

TEST_CASE("pattern violations are reported") {
  Chart chart = canonical_chart(12);
  auto wheel = pseudo_double_wheel(12);
  VertexId n = wheel.north();

  // swap the alpha and gamma corners inside the face (N, v0, v1, v2)
  Chart swapped = chart;
  swapped.set_k({0, n, 2}, AngleExpr::symbol(Symbol::gamma));
  swapped.set_k({2, 1, 0}, AngleExpr::symbol(Symbol::alpha));
  auto violations = face_pattern_check(swapped);
  REQUIRE(violations.size() == 1);
  const Face& f = violations[0].face;
  CHECK(std::find(f.begin(), f.end(), n) != f.end());
  CHECK(std::find(f.begin(), f.end(), 0) != f.end());

  // a face with edge labels (a,a,b,b) matches neither tile type
  Chart relabeled = chart;
  relabeled.edge_labels[static_cast<size_t>(chart.map.edge_index(1, 2))] = LengthLabel::B;
  auto bad = face_pattern_check(relabeled);
  CHECK(!bad.empty());
  bool mentions_edge = false;
  for (const auto& v : bad) {
    bool has1 = std::find(v.face.begin(), v.face.end(), 1) != v.face.end();
    bool has2 = std::find(v.face.begin(), v.face.end(), 2) != v.face.end();
    if (has1 && has2) mentions_edge = true;
  }
  CHECK(mentions_edge);
}

TEST_CASE("unassigned angle propagates") {
  auto wheel = pseudo_double_wheel(12);
  Chart partial = make_unassigned_chart(wheel.map(), 12, 2, alternating_length_assignment(12));
  CHECK_THROWS_AS((void)vertex_type(partial, 0), Error);
}

TEST_CASE("mirror chart is an involution and preserves vertex types") {
  Chart chart = canonical_chart(12);
  Chart m = mirror_chart(chart);
  CHECK(charts_equal(mirror_chart(m), chart));
  for (VertexId v = 0; v < chart.map.vertex_count(); ++v)
    CHECK(vertex_type(m, v) == vertex_type(chart, v));
  CHECK(m.tile_type == chart.tile_type);
}

TEST_CASE("chart is invariant under f and g") {
  Chart chart = canonical_chart(12);
  CHECK(charts_equal(apply_automorphism(chart, automorphism_f(12)), chart));
  CHECK(charts_equal(apply_automorphism(chart, automorphism_g(12)), chart));

  MapAutomorphism id;
  id.image.resize(14);
  for (int i = 0; i < 14; ++i) id.image[static_cast<size_t>(i)] = i;
  CHECK(charts_equal(apply_automorphism(chart, id), chart));

  MapAutomorphism bad = id;
  std::swap(bad.image[0], bad.image[1]);
  CHECK_THROWS_AS((void)apply_automorphism(chart, bad), Error);
}

TEST_CASE("equality up to symmetry") {
  Chart chart = canonical_chart(12);
  CHECK(equal_up_to_symmetry(chart, apply_automorphism(chart, automorphism_g(12))));
  CHECK(equal_up_to_symmetry(chart, mirror_chart(chart)));

  // swapping alpha and delta at one vertex is a genuinely different chart
  Chart tweaked = chart;
  tweaked.set_k({1, 0, 14 - 2}, AngleExpr::symbol(Symbol::alpha));
  CHECK_FALSE(charts_equal(tweaked, chart));
}

TEST_CASE("automorphisms preserve pattern check and vertex type multiset") {
  Chart chart = canonical_chart(12);
  auto autos = find_isomorphisms(chart.map, chart.map);
  REQUIRE(!autos.empty());
  auto type_multiset = [](const Chart& c) {
    std::map<std::string, int> ms;
    for (VertexId v = 0; v < c.map.vertex_count(); ++v) ms[vertex_type(c, v).to_string()]++;
    return ms;
  };
  auto base = type_multiset(chart);
  for (const auto& h : autos) {
    Chart img = apply_automorphism(chart, h);
    CHECK(face_pattern_check(img).empty());
    CHECK(type_multiset(img) == base);
  }
}
