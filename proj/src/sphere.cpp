#include "stq/sphere.hpp"

#include <algorithm>
#include <cmath>

namespace stq {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

double wrap_longitude(double lon) {
  lon = std::fmod(lon, 2 * kPi);
  if (lon < 0) lon += 2 * kPi;
  if (lon >= 2 * kPi) lon = 0;  // fmod can land exactly on 2pi after the add
  return lon;
}

}  // namespace

double Vec3::norm() const { return std::sqrt(dot(*this)); }

Vec3 Vec3::normalized() const {
  double n = norm();
  if (n == 0) fail(ErrorCode::invalid_argument, "normalizing zero vector");
  return {x / n, y / n, z / n};
}

SphericalPoint::SphericalPoint(double colatitude, double longitude) {
  if (!(colatitude >= -1e-15 && colatitude <= kPi + 1e-15))
    fail(ErrorCode::invalid_argument, "colatitude outside [0, pi]");
  colat_ = std::clamp(colatitude, 0.0, kPi);
  lon_ = (colat_ == 0.0 || colat_ == kPi) ? 0.0 : wrap_longitude(longitude);
}

SphericalPoint SphericalPoint::from_unit(const Vec3& v) {
  Vec3 u = v.normalized();
  double colat = std::acos(clamp_unit(u.z));
  double lon = std::atan2(u.y, u.x);
  return SphericalPoint(colat, lon);
}

Vec3 SphericalPoint::unit() const {
  double s = std::sin(colat_);
  return {s * std::cos(lon_), s * std::sin(lon_), std::cos(colat_)};
}

double geodesic_distance(const Vec3& p, const Vec3& q) {
  // same value as acos of the clamped dot product, but stable near 0 and pi
  return std::atan2(p.cross(q).norm(), p.dot(q));
}

double geodesic_distance(const SphericalPoint& p, const SphericalPoint& q) {
  return geodesic_distance(p.unit(), q.unit());
}

double cos_side(double side_a, double side_b, double angle_c) {
  double v = std::cos(side_a) * std::cos(side_b) +
             std::sin(side_a) * std::sin(side_b) * std::cos(angle_c);
  return clamp_unit(v);
}

double angle_from_sides(double opposite, double adjacent1, double adjacent2) {
  double denom = std::sin(adjacent1) * std::sin(adjacent2);
  if (denom <= 0) fail(ErrorCode::degenerate_triangle, "adjacent sides must lie in (0, pi)");
  double c = (std::cos(opposite) - std::cos(adjacent1) * std::cos(adjacent2)) / denom;
  if (c > 1 + 1e-9 || c < -1 - 1e-9)
    fail(ErrorCode::degenerate_triangle, "no triangle with these sides");
  return std::acos(clamp_unit(c));
}

bool triangle_exists(double a, double b, double c) {
  if (!(a > 0 && a < kPi && b > 0 && b < kPi && c > 0 && c < kPi)) return false;
  return a + b + c > kPi && -a + b + c < kPi && a - b + c < kPi && a + b - c < kPi;
}

double triangle_area(double a, double b, double c) {
  if (!triangle_exists(a, b, c))
    fail(ErrorCode::degenerate_triangle, "angles do not satisfy the existence condition");
  return a + b + c - kPi;
}

OrthogonalTransform::OrthogonalTransform() {
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m_[r][c] = r == c ? 1.0 : 0.0;
}

OrthogonalTransform::OrthogonalTransform(const std::array<std::array<double, 3>, 3>& m) {
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m_[r][c] = m[r][c];
  for (int i = 0; i < 3; ++i) {
    Vec3 ci{m_[0][i], m_[1][i], m_[2][i]};
    if (std::abs(ci.norm() - 1.0) > 1e-12)
      fail(ErrorCode::invalid_argument, "columns are not unit length");
    for (int j = i + 1; j < 3; ++j) {
      Vec3 cj{m_[0][j], m_[1][j], m_[2][j]};
      if (std::abs(ci.dot(cj)) > 1e-12)
        fail(ErrorCode::invalid_argument, "columns are not orthogonal");
    }
  }
}

OrthogonalTransform OrthogonalTransform::from_columns(const Vec3& c0, const Vec3& c1,
                                                      const Vec3& c2) {
  OrthogonalTransform t;
  t.m_[0][0] = c0.x;
  t.m_[1][0] = c0.y;
  t.m_[2][0] = c0.z;
  t.m_[0][1] = c1.x;
  t.m_[1][1] = c1.y;
  t.m_[2][1] = c1.z;
  t.m_[0][2] = c2.x;
  t.m_[1][2] = c2.y;
  t.m_[2][2] = c2.z;
  return t;
}

OrthogonalTransform OrthogonalTransform::rotation(const Vec3& axis, double angle) {
  Vec3 u = axis.normalized();
  double c = std::cos(angle), s = std::sin(angle), t = 1 - c;
  OrthogonalTransform r;
  r.m_[0][0] = c + u.x * u.x * t;
  r.m_[0][1] = u.x * u.y * t - u.z * s;
  r.m_[0][2] = u.x * u.z * t + u.y * s;
  r.m_[1][0] = u.y * u.x * t + u.z * s;
  r.m_[1][1] = c + u.y * u.y * t;
  r.m_[1][2] = u.y * u.z * t - u.x * s;
  r.m_[2][0] = u.z * u.x * t - u.y * s;
  r.m_[2][1] = u.z * u.y * t + u.x * s;
  r.m_[2][2] = c + u.z * u.z * t;
  return r;
}

OrthogonalTransform OrthogonalTransform::reflection(const Vec3& plane_normal) {
  Vec3 n = plane_normal.normalized();
  OrthogonalTransform r;
  double nn[3] = {n.x, n.y, n.z};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m_[i][j] = (i == j ? 1.0 : 0.0) - 2 * nn[i] * nn[j];
  return r;
}

OrthogonalTransform OrthogonalTransform::inversion() {
  OrthogonalTransform r;
  for (int i = 0; i < 3; ++i) r.m_[i][i] = -1.0;
  return r;
}

Vec3 OrthogonalTransform::apply(const Vec3& v) const {
  return {m_[0][0] * v.x + m_[0][1] * v.y + m_[0][2] * v.z,
          m_[1][0] * v.x + m_[1][1] * v.y + m_[1][2] * v.z,
          m_[2][0] * v.x + m_[2][1] * v.y + m_[2][2] * v.z};
}

SphericalPoint OrthogonalTransform::apply(const SphericalPoint& p) const {
  return SphericalPoint::from_unit(apply(p.unit()));
}

OrthogonalTransform OrthogonalTransform::compose(const OrthogonalTransform& inner) const {
  OrthogonalTransform r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += m_[i][k] * inner.m_[k][j];
      r.m_[i][j] = s;
    }
  return r;
}

OrthogonalTransform OrthogonalTransform::inverse() const {
  OrthogonalTransform r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m_[i][j] = m_[j][i];
  return r;
}

double OrthogonalTransform::determinant() const {
  return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
         m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
         m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
}

double OrthogonalTransform::trace() const { return m_[0][0] + m_[1][1] + m_[2][2]; }

double OrthogonalTransform::distance(const OrthogonalTransform& o) const {
  double worst = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(m_[i][j] - o.m_[i][j]));
  return worst;
}

namespace {

// Orthonormal frame with e0 = points[i0] and e1 in the span of e0 and
// points[i1].
struct Frame {
  Vec3 e0, e1, e2;
};

Frame frame_from(const Vec3& p, const Vec3& q) {
  Vec3 e0 = p;
  Vec3 u = q - e0 * q.dot(e0);
  Vec3 e1 = u.normalized();
  return {e0, e1, e0.cross(e1)};
}

}  // namespace

std::optional<OrthogonalTransform> fit_transform(const std::vector<SphericalPoint>& src,
                                                 const std::vector<SphericalPoint>& dst,
                                                 DetSign det, double tol) {
  if (src.size() != dst.size())
    fail(ErrorCode::invalid_argument, "point lists differ in length");
  if (src.size() < 3) fail(ErrorCode::invalid_argument, "need at least three points");

  std::vector<Vec3> s(src.size()), d(dst.size());
  for (size_t i = 0; i < src.size(); ++i) s[i] = src[i].unit();
  for (size_t i = 0; i < dst.size(); ++i) d[i] = dst[i].unit();

  size_t j = 0;
  for (j = 1; j < s.size(); ++j)
    if (s[0].cross(s[j]).norm() > 1e-9) break;
  if (j == s.size()) fail(ErrorCode::rank_deficient, "source points span a single direction");
  Frame fs = frame_from(s[0], s[j]);

  bool full_rank = false;
  for (const Vec3& p : s)
    if (std::abs(p.dot(fs.e2)) > 1e-9) full_rank = true;
  if (!full_rank)
    fail(ErrorCode::rank_deficient, "source points lie on one great circle; fit is ambiguous");

  if (d[0].cross(d[j]).norm() <= 1e-9) return std::nullopt;
  Frame fd = frame_from(d[0], d[j]);

  auto verify = [&](const OrthogonalTransform& t) {
    for (size_t i = 0; i < s.size(); ++i)
      if (geodesic_distance(t.apply(s[i]), d[i]) > tol) return false;
    return true;
  };

  OrthogonalTransform src_inv =
      OrthogonalTransform::from_columns(fs.e0, fs.e1, fs.e2).inverse();
  if (det != DetSign::improper) {
    OrthogonalTransform proper =
        OrthogonalTransform::from_columns(fd.e0, fd.e1, fd.e2).compose(src_inv);
    if (verify(proper)) return proper;
  }
  if (det != DetSign::proper) {
    OrthogonalTransform improper =
        OrthogonalTransform::from_columns(fd.e0, fd.e1, -fd.e2).compose(src_inv);
    if (verify(improper)) return improper;
  }
  return std::nullopt;
}

GeodesicArc::GeodesicArc(const SphericalPoint& a, const SphericalPoint& b) : a_(a), b_(b) {
  Vec3 n = a.unit().cross(b.unit());
  if (n.norm() < 1e-12)
    fail(ErrorCode::invalid_argument, "arc endpoints identical or antipodal");
  pole_ = n.normalized();
  length_ = geodesic_distance(a, b);
}

namespace {

bool point_on_arc(const Vec3& p, const GeodesicArc& arc, double tol) {
  if (std::abs(p.dot(arc.pole())) > tol) return false;
  double da = geodesic_distance(p, arc.a().unit());
  double db = geodesic_distance(p, arc.b().unit());
  return da + db <= arc.length() + tol;
}

bool near_endpoint(const Vec3& p, const GeodesicArc& arc, double tol) {
  return geodesic_distance(p, arc.a().unit()) <= tol ||
         geodesic_distance(p, arc.b().unit()) <= tol;
}

}  // namespace

bool arcs_cross(const GeodesicArc& x, const GeodesicArc& y, double tol) {
  Vec3 c = x.pole().cross(y.pole());
  if (c.norm() > 1e-12) {
    for (const Vec3& t : {c.normalized(), -c.normalized()}) {
      if (!point_on_arc(t, x, tol) || !point_on_arc(t, y, tol)) continue;
      if (near_endpoint(t, x, tol) && near_endpoint(t, y, tol)) continue;
      return true;
    }
    return false;
  }

  // Same great circle: the arcs cross iff their angular intervals overlap in
  // more than a point.
  Vec3 u = x.a().unit();
  Vec3 w = x.pole().cross(u);
  auto param = [&](const Vec3& p) { return std::atan2(p.dot(w), p.dot(u)); };
  double xa = 0, xb = x.length();  // x runs from angle 0 to its length
  double ya = param(y.a().unit()), yb = param(y.b().unit());
  if (ya > yb) std::swap(ya, yb);
  // The minor arc of y is [ya, yb] when the gap is below pi, else it wraps.
  std::vector<std::pair<double, double>> yiv;
  if (yb - ya <= kPi)
    yiv.push_back({ya, yb});
  else {
    yiv.push_back({-kPi, ya});
    yiv.push_back({yb, kPi});
  }
  for (auto [lo, hi] : yiv) {
    double overlap = std::min(xb, hi) - std::max(xa, lo);
    if (overlap > tol) return true;
  }
  return false;
}

double interior_angle(const Vec3& prev, const Vec3& at, const Vec3& next) {
  Vec3 n = at.normalized();
  auto tangent_toward = [&](const Vec3& q) {
    Vec3 t = q - n * q.dot(n);
    return t.normalized();
  };
  Vec3 t_prev = tangent_toward(prev);
  Vec3 t_next = tangent_toward(next);
  double ang = std::atan2(t_next.cross(t_prev).dot(n), t_next.dot(t_prev));
  if (ang < 0) ang += 2 * kPi;
  return ang;
}

}  // namespace stq
