#pragma once

#include <array>
#include <optional>
#include <vector>

#include "stq/error.hpp"

namespace stq {

// Default angular tolerance for geometric assertions. The solved values are
// exact closed forms; 1e-9 absorbs double rounding across chained cosine laws.
inline constexpr double kAngularTol = 1e-9;

struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const;
  Vec3 normalized() const;
};

// Point on the unit sphere as (colatitude, longitude): colatitude in [0, pi]
// is the geodesic distance from the north pole, longitude normalized to
// [0, 2pi) and canonicalized to 0 at the poles.
class SphericalPoint {
 public:
  SphericalPoint() = default;
  SphericalPoint(double colatitude, double longitude);
  static SphericalPoint from_unit(const Vec3& v);

  double colatitude() const { return colat_; }
  double longitude() const { return lon_; }
  Vec3 unit() const;

 private:
  double colat_ = 0;
  double lon_ = 0;
};

double geodesic_distance(const Vec3& p, const Vec3& q);
double geodesic_distance(const SphericalPoint& p, const SphericalPoint& q);

// Third side of a spherical triangle from two sides and the included angle:
// cos c = cos a cos b + sin a sin b cos C.
double cos_side(double side_a, double side_b, double angle_c);

// Included angle from three sides (cosine theorem inverted). The cosine
// argument may overshoot [-1,1] by at most 1e-9; beyond that the triangle is
// degenerate.
double angle_from_sides(double opposite, double adjacent1, double adjacent2);

// Vinberg existence condition for a spherical triangle with inner angles
// A, B, C.
bool triangle_exists(double a, double b, double c);

// Spherical excess A+B+C-pi; requires triangle_exists.
double triangle_area(double a, double b, double c);

class OrthogonalTransform {
 public:
  OrthogonalTransform();  // identity
  // Columns must be orthonormal to 1e-12.
  explicit OrthogonalTransform(const std::array<std::array<double, 3>, 3>& m);
  static OrthogonalTransform from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);
  static OrthogonalTransform rotation(const Vec3& axis, double angle);
  static OrthogonalTransform reflection(const Vec3& plane_normal);
  static OrthogonalTransform inversion();

  Vec3 apply(const Vec3& v) const;
  SphericalPoint apply(const SphericalPoint& p) const;
  OrthogonalTransform compose(const OrthogonalTransform& inner) const;  // this*inner
  OrthogonalTransform inverse() const;                                  // transpose
  double determinant() const;
  double trace() const;
  double entry(int r, int c) const { return m_[r][c]; }
  // Max absolute entrywise difference.
  double distance(const OrthogonalTransform& o) const;

 private:
  double m_[3][3];
};

enum class DetSign { any, proper, improper };

// Orthogonal transform mapping src[i] to dst[i] within `tol` angular error,
// with the requested determinant sign, or nullopt when none exists. At least
// three points spanning more than a great circle are required for a unique
// fit; rank-deficient inputs are rejected.
std::optional<OrthogonalTransform> fit_transform(const std::vector<SphericalPoint>& src,
                                                 const std::vector<SphericalPoint>& dst,
                                                 DetSign det = DetSign::any,
                                                 double tol = kAngularTol);

// Minor great-circle arc between two endpoints that are neither identical nor
// antipodal.
class GeodesicArc {
 public:
  GeodesicArc(const SphericalPoint& a, const SphericalPoint& b);

  const SphericalPoint& a() const { return a_; }
  const SphericalPoint& b() const { return b_; }
  double length() const { return length_; }
  Vec3 pole() const { return pole_; }  // unit normal of the great circle

 private:
  SphericalPoint a_, b_;
  double length_;
  Vec3 pole_;
};

// True iff the arcs share a point that is not a common endpoint (transversal
// crossings, T-junctions and overlapping collinear segments all count; a
// shared endpoint alone does not).
bool arcs_cross(const GeodesicArc& x, const GeodesicArc& y, double tol = kAngularTol);

// Interior angle at corner `at` of an oriented spherical polygon, measured
// counterclockwise (seen from outside the sphere) from the direction toward
// `next` to the direction toward `prev`. Ranges over (0, 2pi); reflex corners
// of concave tiles yield values above pi.
double interior_angle(const Vec3& prev, const Vec3& at, const Vec3& next);

}  // namespace stq
