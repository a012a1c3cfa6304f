#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "stq/sphere.hpp"

using namespace stq;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::mt19937_64 rng(20240611);

double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

SphericalPoint random_point() {
  // uniform on the sphere
  double z = uniform(-1, 1);
  double lon = uniform(0, 2 * kPi);
  return SphericalPoint(std::acos(z), lon);
}

OrthogonalTransform random_rotation() {
  Vec3 axis{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
  if (axis.norm() < 1e-3) axis = {1, 0, 0};
  return OrthogonalTransform::rotation(axis, uniform(0, 2 * kPi));
}

}  // namespace

TEST_CASE("geodesic distance basics") {
  SphericalPoint n(0, 0), s(kPi, 0);
  CHECK(geodesic_distance(n, s) == doctest::Approx(kPi).epsilon(1e-12));

  double b = std::acos(-5.0 / 9.0);
  CHECK(geodesic_distance(SphericalPoint(b, 0), n) == doctest::Approx(b).epsilon(1e-12));

  // distance between the second and third rim vertices equals the short edge
  double a = std::acos(1.0 / 3.0);
  double alpha = std::acos(-1.0 / (2 * std::sqrt(7.0)));
  double phi = std::acos(13.0 / 14.0);
  SphericalPoint v1(kPi - b, phi), v2(a, alpha);
  CHECK(geodesic_distance(v1, v2) == doctest::Approx(a).epsilon(1e-12));
}

TEST_CASE("spherical point normalization") {
  SphericalPoint p(kPi / 3, 2 * kPi + 1.0);
  CHECK(p.longitude() == doctest::Approx(1.0).epsilon(1e-12));
  SphericalPoint pole(0, 1.25);
  CHECK(pole.longitude() == 0.0);
  SphericalPoint south(kPi, -2.5);
  CHECK(south.longitude() == 0.0);

  for (int i = 0; i < 1000; ++i) {
    SphericalPoint q = random_point();
    SphericalPoint r = SphericalPoint::from_unit(q.unit());
    CHECK(q.unit().dot(r.unit()) >= 1 - 1e-12);
  }
}

TEST_CASE("cos_side") {
  double a = std::acos(1.0 / 3.0);
  CHECK(cos_side(a, a, 8 * kPi / 12) == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
  CHECK(cos_side(a, a, kPi / 3) == doctest::Approx(5.0 / 9.0).epsilon(1e-12));
  CHECK(cos_side(0.7, 0.7, 0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("angle_from_sides") {
  double a = std::acos(1.0 / 3.0);
  double b = std::acos(-5.0 / 9.0);
  CHECK(angle_from_sides(b, a, kPi - b) ==
        doctest::Approx(std::acos(-5.0 / (2 * std::sqrt(7.0)))).epsilon(1e-12));
  CHECK(angle_from_sides(a, b, kPi - b) ==
        doctest::Approx(std::acos(13.0 / 14.0)).epsilon(1e-12));
  CHECK(angle_from_sides(kPi / 2, kPi / 2, kPi / 2) == doctest::Approx(kPi / 2));
  CHECK_THROWS_AS(angle_from_sides(3.0, 0.1, 0.1), Error);
}

TEST_CASE("triangle existence and area") {
  double l = std::acos(-5.0 / (2 * std::sqrt(7.0)));
  double k = std::acos(13.0 / 14.0);
  double m = std::acos(5.0 / (2 * std::sqrt(7.0)));
  CHECK(triangle_exists(k, l, m));
  double t = 4 * kPi / 3 - l;
  CHECK(triangle_exists(t, kPi / 3, t));
  CHECK_FALSE(triangle_exists(kPi / 3, kPi / 3, kPi / 3));

  CHECK(triangle_area(kPi / 2, kPi / 2, kPi / 2) == doctest::Approx(kPi / 2).epsilon(1e-12));
  // the two triangles splitting one tile cover a twelfth of the sphere
  double area1 = triangle_area(k, l, m);
  double area2 = triangle_area(t, kPi / 3, t);
  CHECK(area1 + area2 == doctest::Approx(kPi / 3).epsilon(1e-12));
  CHECK_THROWS_AS(triangle_area(kPi / 3, kPi / 3, kPi / 3), Error);
}

TEST_CASE("fit_transform identity and rotations") {
  std::vector<SphericalPoint> pts{SphericalPoint(0.3, 0.1), SphericalPoint(1.1, 2.0),
                                  SphericalPoint(2.0, 4.4), SphericalPoint(1.5, 5.9)};
  auto id = fit_transform(pts, pts, DetSign::proper);
  REQUIRE(id.has_value());
  CHECK(id->distance(OrthogonalTransform()) < 1e-9);

  for (int i = 0; i < 200; ++i) {
    OrthogonalTransform r = random_rotation();
    std::vector<SphericalPoint> img;
    for (const auto& p : pts) img.push_back(r.apply(p));
    auto fit = fit_transform(pts, img, DetSign::any);
    REQUIRE(fit.has_value());
    CHECK(fit->determinant() == doctest::Approx(1.0).epsilon(1e-9));
    for (size_t k2 = 0; k2 < pts.size(); ++k2)
      CHECK(geodesic_distance(fit->apply(pts[k2]), img[k2]) < 1e-9);
  }
}

TEST_CASE("fit_transform improper and failures") {
  std::vector<SphericalPoint> pts{SphericalPoint(0.3, 0.1), SphericalPoint(1.1, 2.0),
                                  SphericalPoint(2.0, 4.4), SphericalPoint(1.5, 5.9)};
  OrthogonalTransform mirror = OrthogonalTransform::reflection({0, 1, 0});
  std::vector<SphericalPoint> img;
  for (const auto& p : pts) img.push_back(mirror.apply(p));
  CHECK_FALSE(fit_transform(pts, img, DetSign::proper).has_value());
  auto fit = fit_transform(pts, img, DetSign::improper);
  REQUIRE(fit.has_value());
  CHECK(fit->determinant() == doctest::Approx(-1.0).epsilon(1e-9));

  // garbled correspondence has no orthogonal fit at all
  std::vector<SphericalPoint> bad = img;
  std::swap(bad[0], bad[1]);
  bad[0] = SphericalPoint(0.77, 3.1);
  CHECK_FALSE(fit_transform(pts, bad, DetSign::any).has_value());

  // all points on the equator: ambiguous
  std::vector<SphericalPoint> equator{SphericalPoint(kPi / 2, 0), SphericalPoint(kPi / 2, 1),
                                      SphericalPoint(kPi / 2, 2)};
  CHECK_THROWS_AS((void)fit_transform(equator, equator, DetSign::any), Error);
}

TEST_CASE("fit_transform orthonormality property") {
  for (int i = 0; i < 1000; ++i) {
    std::vector<SphericalPoint> pts;
    for (int j = 0; j < 4; ++j) pts.push_back(random_point());
    Vec3 c01 = pts[0].unit().cross(pts[1].unit());
    if (c01.norm() < 1e-3) continue;
    if (std::abs(pts[2].unit().dot(c01.normalized())) < 1e-3) continue;
    OrthogonalTransform r = random_rotation();
    std::vector<SphericalPoint> img;
    for (const auto& p : pts) img.push_back(r.apply(p));
    auto fit = fit_transform(pts, img, DetSign::any);
    REQUIRE(fit.has_value());
    OrthogonalTransform tt = fit->compose(fit->inverse());
    CHECK(tt.distance(OrthogonalTransform()) < 1e-9);
    for (size_t k2 = 0; k2 < pts.size(); ++k2)
      CHECK(geodesic_distance(fit->apply(pts[k2]), img[k2]) < 1e-9);
  }
}

TEST_CASE("distance invariance under orthogonal transforms") {
  for (int i = 0; i < 1000; ++i) {
    SphericalPoint p = random_point(), q = random_point();
    OrthogonalTransform t = random_rotation();
    if (i % 2) t = t.compose(OrthogonalTransform::inversion());
    double d0 = geodesic_distance(p, q);
    double d1 = geodesic_distance(t.apply(p), t.apply(q));
    CHECK(std::abs(d0 - d1) < 1e-12);
    CHECK(d0 >= 0);
    CHECK(d0 <= kPi);
  }
}

TEST_CASE("distance zero iff equal") {
  for (int i = 0; i < 200; ++i) {
    SphericalPoint p = random_point();
    CHECK(geodesic_distance(p, p) < 1e-12);
    SphericalPoint q = random_point();
    if (p.unit().dot(q.unit()) < 1 - 1e-9) CHECK(geodesic_distance(p, q) > 1e-9);
  }
}

TEST_CASE("cosine law round trip") {
  int checked = 0;
  while (checked < 1000) {
    double a = uniform(0.1, kPi - 0.1), b = uniform(0.1, kPi - 0.1);
    double c = uniform(0.1, kPi - 0.1);
    double side = std::acos(cos_side(a, b, c));
    if (side < 1e-3 || side > kPi - 1e-3) continue;
    CHECK(angle_from_sides(side, a, b) == doctest::Approx(c).epsilon(1e-9));
    ++checked;
  }
}

TEST_CASE("triangle_exists permutation symmetry") {
  for (int i = 0; i < 1000; ++i) {
    double x = uniform(0.05, kPi + 0.5), y = uniform(0.05, kPi + 0.5),
           z = uniform(0.05, kPi + 0.5);
    bool base = triangle_exists(x, y, z);
    CHECK(triangle_exists(x, z, y) == base);
    CHECK(triangle_exists(y, x, z) == base);
    CHECK(triangle_exists(y, z, x) == base);
    CHECK(triangle_exists(z, x, y) == base);
    CHECK(triangle_exists(z, y, x) == base);
  }
}

TEST_CASE("arcs_cross") {
  SphericalPoint n(0, 0);
  GeodesicArc m1(n, SphericalPoint(1.0, 0.5));
  GeodesicArc m2(n, SphericalPoint(1.0, 2.5));
  CHECK_FALSE(arcs_cross(m1, m2));

  GeodesicArc equator(SphericalPoint(kPi / 2, 0), SphericalPoint(kPi / 2, kPi / 2));
  GeodesicArc meridian(SphericalPoint(kPi / 4, kPi / 4), SphericalPoint(3 * kPi / 4, kPi / 4));
  CHECK(arcs_cross(equator, meridian));

  // T junction: endpoint of one arc interior to the other
  GeodesicArc stem(SphericalPoint(kPi / 2, kPi / 4), SphericalPoint(kPi / 4, kPi / 4));
  CHECK(arcs_cross(equator, stem));

  // collinear arcs sharing only an endpoint
  GeodesicArc e1(SphericalPoint(kPi / 2, 0), SphericalPoint(kPi / 2, 1.0));
  GeodesicArc e2(SphericalPoint(kPi / 2, 1.0), SphericalPoint(kPi / 2, 2.0));
  CHECK_FALSE(arcs_cross(e1, e2));

  // collinear arcs overlapping in a segment
  GeodesicArc e3(SphericalPoint(kPi / 2, 0.5), SphericalPoint(kPi / 2, 1.5));
  CHECK(arcs_cross(e1, e3));

  CHECK_THROWS_AS(GeodesicArc(n, SphericalPoint(kPi, 0)), Error);
}

TEST_CASE("interior angle orientation") {
  // right-angle corner at the equator, interior to the northeast
  Vec3 at = SphericalPoint(kPi / 2, 0).unit();
  Vec3 north{0, 0, 1};
  Vec3 east = SphericalPoint(kPi / 2, 0.3).unit();
  double ang = interior_angle(north, at, east);
  CHECK(ang == doctest::Approx(kPi / 2).epsilon(1e-9));
  double reflex = interior_angle(east, at, north);
  CHECK(reflex == doctest::Approx(3 * kPi / 2).epsilon(1e-9));
}
