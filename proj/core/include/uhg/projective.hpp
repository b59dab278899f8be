#pragma once

#include <array>
#include <optional>
#include <utility>

#include "uhg/field.hpp"

namespace uhg {

using Triple = std::array<Scalar, 3>;

Scalar form(const Triple& v);                         // x^2 + y^2 - z^2
Scalar bilinear(const Triple& v, const Triple& w);    // x1x2 + y1y2 - z1z2
Triple hcross(const Triple& v, const Triple& w);      // hyperbolic cross product
Scalar det3(const Triple& a, const Triple& b, const Triple& c);
Triple scale3(const Triple& v, const Scalar& s);
Triple add3(const Triple& v, const Triple& w);
Triple sub3(const Triple& v, const Triple& w);
Triple lincomb(const Scalar& s, const Triple& v, const Scalar& t, const Triple& w);
bool is_zero3(const Triple& v);
bool proportional(const Triple& v, const Triple& w);  // the three-minor equality test
Triple canonical3(const Triple& v);                   // last nonzero coordinate scaled to 1
int cmp3(const Triple& a, const Triple& b);           // lexicographic on canonical forms

/// A 2-proportion t:u (ordered pair, not both zero, up to scaling).
class Proportion2 {
 public:
  Proportion2(Scalar t, Scalar u);  // error: zero pair -> zero_triple
  const Scalar& t() const { return t_; }
  const Scalar& u() const { return u_; }
  bool operator==(const Proportion2& o) const;
  bool operator!=(const Proportion2& o) const { return !(*this == o); }
  Proportion2 canonical() const;  // u=1 when u!=0, else t=1
  static int cmp(const Proportion2& a, const Proportion2& b);

 private:
  Scalar t_, u_;
};

class Line;

/// A hyperbolic point [x:y:z].
class Point {
 public:
  Point(Scalar x, Scalar y, Scalar z);   // error: zero_triple
  explicit Point(Triple v);              // error: zero_triple
  const Triple& vec() const { return v_; }
  const Field& field() const { return v_[0].field(); }
  bool is_null() const;
  Line dual() const;
  bool operator==(const Point& o) const { return proportional(v_, o.v_); }
  bool operator!=(const Point& o) const { return !(*this == o); }
  Point canonical() const { return Point(canonical3(v_)); }

 private:
  Triple v_;
};

/// A hyperbolic line (l:m:n).
class Line {
 public:
  Line(Scalar l, Scalar m, Scalar n);    // error: zero_triple
  explicit Line(Triple v);               // error: zero_triple
  const Triple& vec() const { return v_; }
  const Field& field() const { return v_[0].field(); }
  bool is_null() const;
  Point dual() const;
  bool operator==(const Line& o) const { return proportional(v_, o.v_); }
  bool operator!=(const Line& o) const { return !(*this == o); }
  Line canonical() const { return Line(canonical3(v_)); }

 private:
  Triple v_;
};

Line join(const Point& a1, const Point& a2);   // error: identical_points
Point meet(const Line& L1, const Line& L2);    // error: identical_lines
bool lies_on(const Point& a, const Line& L);   // lx + my - nz = 0
bool passes_through(const Line& L, const Point& a);

bool perpendicular(const Point& a1, const Point& a2);
bool perpendicular(const Line& L1, const Line& L2);

bool collinear(const Point& a1, const Point& a2, const Point& a3);
bool concurrent(const Line& L1, const Line& L2, const Line& L3);

/// The point [t v1 + u v2]; v1, v2 must be independent.
Point point_on_join(const Triple& v1, const Triple& v2, const Proportion2& tu);
/// Inverse of point_on_join for a point on the join.  error: not_on_join
Proportion2 join_coordinates(const Point& a, const Triple& v1, const Triple& v2);
Line line_on_meet(const Triple& v1, const Triple& v2, const Proportion2& tu);
Proportion2 meet_coordinates(const Line& L, const Triple& v1, const Triple& v2);

/// The point [np - ms : ls + nr : lp + mr] on L = (l:m:n).  error: zero_triple
Point line_point_param(const Line& L, const Scalar& p, const Scalar& r, const Scalar& s);
/// Dual: the line (zp - ys : xs + zr : xp + yr) through a = [x:y:z].
Line point_line_param(const Point& a, const Scalar& p, const Scalar& r, const Scalar& s);

/// Two distinct points lying on L (deterministic choice).
std::pair<Point, Point> two_points_on(const Line& L);
std::pair<Line, Line> two_lines_through(const Point& a);

}  // namespace uhg
