#include "uhg/projective.hpp"

namespace uhg {

Scalar form(const Triple& v) { return v[0] * v[0] + v[1] * v[1] - v[2] * v[2]; }

Scalar bilinear(const Triple& v, const Triple& w) {
  return v[0] * w[0] + v[1] * w[1] - v[2] * w[2];
}

Triple hcross(const Triple& v, const Triple& w) {
  return Triple{v[1] * w[2] - w[1] * v[2], v[2] * w[0] - w[2] * v[0], w[0] * v[1] - v[0] * w[1]};
}

Scalar det3(const Triple& a, const Triple& b, const Triple& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Triple scale3(const Triple& v, const Scalar& s) { return Triple{v[0] * s, v[1] * s, v[2] * s}; }

Triple add3(const Triple& v, const Triple& w) {
  return Triple{v[0] + w[0], v[1] + w[1], v[2] + w[2]};
}

Triple sub3(const Triple& v, const Triple& w) {
  return Triple{v[0] - w[0], v[1] - w[1], v[2] - w[2]};
}

Triple lincomb(const Scalar& s, const Triple& v, const Scalar& t, const Triple& w) {
  return Triple{s * v[0] + t * w[0], s * v[1] + t * w[1], s * v[2] + t * w[2]};
}

bool is_zero3(const Triple& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

bool proportional(const Triple& v, const Triple& w) {
  return (v[0] * w[1] - w[0] * v[1]).is_zero() && (v[1] * w[2] - w[1] * v[2]).is_zero() &&
         (v[2] * w[0] - w[2] * v[0]).is_zero();
}

Triple canonical3(const Triple& v) {
  for (int i = 2; i >= 0; --i) {
    if (!v[i].is_zero()) {
      Scalar inv = v[i].inverse();
      Triple out = scale3(v, inv);
      return out;
    }
  }
  throw error(errc::zero_triple, "zero triple has no canonical form");
}

int cmp3(const Triple& a, const Triple& b) {
  Triple ca = canonical3(a), cb = canonical3(b);
  for (int i = 0; i < 3; ++i) {
    int c = Scalar::cmp(ca[i], cb[i]);
    if (c != 0) return c;
  }
  return 0;
}

// ---------------------------------------------------------------------------

Proportion2::Proportion2(Scalar t, Scalar u) : t_(std::move(t)), u_(std::move(u)) {
  if (t_.is_zero() && u_.is_zero())
    throw error(errc::zero_triple, "proportion requires a nonzero pair");
}

bool Proportion2::operator==(const Proportion2& o) const {
  return (t_ * o.u_ - o.t_ * u_).is_zero();
}

Proportion2 Proportion2::canonical() const {
  if (!u_.is_zero()) return Proportion2(t_ / u_, u_.one());
  return Proportion2(t_.one(), u_.zero());
}

int Proportion2::cmp(const Proportion2& a, const Proportion2& b) {
  Proportion2 ca = a.canonical(), cb = b.canonical();
  int c = Scalar::cmp(ca.u_, cb.u_);
  if (c != 0) return c;
  return Scalar::cmp(ca.t_, cb.t_);
}

// ---------------------------------------------------------------------------

namespace {
Triple checked(Triple v) {
  if (is_zero3(v)) throw error(errc::zero_triple, "coordinates must not all vanish");
  return v;
}
}  // namespace

Point::Point(Scalar x, Scalar y, Scalar z) : v_(checked(Triple{std::move(x), std::move(y), std::move(z)})) {}
Point::Point(Triple v) : v_(checked(std::move(v))) {}

Line::Line(Scalar l, Scalar m, Scalar n) : v_(checked(Triple{std::move(l), std::move(m), std::move(n)})) {}
Line::Line(Triple v) : v_(checked(std::move(v))) {}

bool Point::is_null() const { return form(v_).is_zero(); }
bool Line::is_null() const { return form(v_).is_zero(); }

Line Point::dual() const { return Line(v_); }
Point Line::dual() const { return Point(v_); }

Line join(const Point& a1, const Point& a2) {
  if (a1 == a2) throw error(errc::identical_points, "join requires distinct points");
  return Line(hcross(a1.vec(), a2.vec()));
}

Point meet(const Line& L1, const Line& L2) {
  if (L1 == L2) throw error(errc::identical_lines, "meet requires distinct lines");
  return Point(hcross(L1.vec(), L2.vec()));
}

bool lies_on(const Point& a, const Line& L) { return bilinear(L.vec(), a.vec()).is_zero(); }
bool passes_through(const Line& L, const Point& a) { return lies_on(a, L); }

bool perpendicular(const Point& a1, const Point& a2) {
  return bilinear(a1.vec(), a2.vec()).is_zero();
}

bool perpendicular(const Line& L1, const Line& L2) {
  return bilinear(L1.vec(), L2.vec()).is_zero();
}

bool collinear(const Point& a1, const Point& a2, const Point& a3) {
  return det3(a1.vec(), a2.vec(), a3.vec()).is_zero();
}

bool concurrent(const Line& L1, const Line& L2, const Line& L3) {
  return det3(L1.vec(), L2.vec(), L3.vec()).is_zero();
}

Point point_on_join(const Triple& v1, const Triple& v2, const Proportion2& tu) {
  if (is_zero3(hcross(v1, v2)))
    throw error(errc::dependent_vectors, "parametrizing a join requires independent vectors");
  return Point(lincomb(tu.t(), v1, tu.u(), v2));
}

Proportion2 join_coordinates(const Point& a, const Triple& v1, const Triple& v2) {
  Triple w = hcross(v1, v2);
  if (is_zero3(w))
    throw error(errc::dependent_vectors, "parametrizing a join requires independent vectors");
  int k = 0;
  while (w[k].is_zero()) ++k;
  // a = t v1 + u v2 gives hcross(a, v2) = t w and hcross(a, v1) = -u w.
  Scalar t = hcross(a.vec(), v2)[k] / w[k];
  Scalar u = -(hcross(a.vec(), v1)[k] / w[k]);
  if (t.is_zero() && u.is_zero()) throw error(errc::not_on_join, "point does not lie on the join");
  Proportion2 tu(t, u);
  if (!proportional(lincomb(t, v1, u, v2), a.vec()))
    throw error(errc::not_on_join, "point does not lie on the join");
  return tu;
}

Line line_on_meet(const Triple& v1, const Triple& v2, const Proportion2& tu) {
  if (is_zero3(hcross(v1, v2)))
    throw error(errc::dependent_vectors, "parametrizing a meet requires independent vectors");
  return Line(lincomb(tu.t(), v1, tu.u(), v2));
}

Proportion2 meet_coordinates(const Line& L, const Triple& v1, const Triple& v2) {
  return join_coordinates(Point(L.vec()), v1, v2);
}

Point line_point_param(const Line& L, const Scalar& p, const Scalar& r, const Scalar& s) {
  const Scalar &l = L.vec()[0], &m = L.vec()[1], &n = L.vec()[2];
  return Point(n * p - m * s, l * s + n * r, l * p + m * r);
}

Line point_line_param(const Point& a, const Scalar& p, const Scalar& r, const Scalar& s) {
  const Scalar &x = a.vec()[0], &y = a.vec()[1], &z = a.vec()[2];
  return Line(z * p - y * s, x * s + z * r, x * p + y * r);
}

std::pair<Point, Point> two_points_on(const Line& L) {
  const Scalar &l = L.vec()[0], &m = L.vec()[1], &n = L.vec()[2];
  Scalar zero = l.zero();
  Triple cands[3] = {Triple{n, zero, l}, Triple{zero, n, m}, Triple{-m, l, zero}};
  for (int i = 0; i < 3; ++i) {
    if (is_zero3(cands[i])) continue;
    for (int j = i + 1; j < 3; ++j) {
      if (is_zero3(cands[j]) || proportional(cands[i], cands[j])) continue;
      return {Point(cands[i]), Point(cands[j])};
    }
  }
  throw error(errc::degenerate_configuration, "could not find two points on the line");
}

std::pair<Line, Line> two_lines_through(const Point& a) {
  auto pts = two_points_on(Line(a.vec()));
  return {Line(pts.first.vec()), Line(pts.second.vec())};
}

}  // namespace uhg
