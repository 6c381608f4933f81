#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace inflap {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  double norm2() const { return x * x + y * y; }
  Vec2 normalized() const { double n = norm(); return {x / n, y / n}; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

struct Rect {
  Vec2 lo, hi;
  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
};

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DomainKind { Disk, Ellipse, Square, Stadium, Polygon };

/// High Ridge of a convex domain: the set where the distance to the boundary
/// attains its maximum R (the inradius). A point for disk/ellipse/square, a
/// segment on the long axis for the stadium.
struct HighRidge {
  Vec2 a, b;        // endpoints; a == b for a single point
  double inradius;
  bool is_segment() const { return (b - a).norm() > 1e-14; }
};

/// Bounded convex plane domain with an analytic boundary parametrization
/// theta in [0, 2pi). Disk and ellipse use the standard trigonometric
/// parametrization; square, stadium and polygon are parametrized by the ray
/// from the center.
class ConvexDomain {
 public:
  static ConvexDomain disk(double radius, Vec2 center = {0, 0});
  static ConvexDomain ellipse(double a, double b, Vec2 center = {0, 0});
  static ConvexDomain square(double side, Vec2 center = {0, 0});
  static ConvexDomain stadium(double straight_length, double cap_radius,
                              Vec2 center = {0, 0});
  static ConvexDomain polygon(std::vector<Vec2> vertices);  // ccw, convex

  DomainKind kind() const { return kind_; }
  Vec2 center() const { return center_; }
  const std::vector<Vec2>& vertices() const { return vertices_; }
  double param_a() const { return a_; }  // radius / semi-axis / side / length
  double param_b() const { return b_; }

  bool symmetric_x() const { return sym_x_; }
  bool symmetric_y() const { return sym_y_; }

  Vec2 boundary_point(double theta) const;
  Vec2 boundary_tangent(double theta) const;  // d/dtheta, throws at vertices
  Vec2 outward_normal(double theta) const;    // unit, throws at vertices
  double curvature(double theta) const;       // >= 0, throws at vertices

  bool contains(Vec2 p) const;          // open set
  bool contains_closure(Vec2 p) const;  // with 1e-12 slack
  /// Distance from an inside point to the boundary. Throws if p is outside.
  double distance_to_boundary(Vec2 p) const;

  Rect bounding_box() const;
  double inradius() const;
  HighRidge high_ridge(double tol = 1e-12) const;

  /// True where the boundary is C^2 by construction (disk, ellipse). The
  /// stadium is only C^{1,1} at the welds and polygons have corners.
  bool smooth_by_kind() const;

  std::string describe() const;

 private:
  ConvexDomain() = default;
  double ray_to_boundary(double theta) const;  // square/stadium/polygon

  DomainKind kind_ = DomainKind::Disk;
  Vec2 center_{0, 0};
  double a_ = 1.0, b_ = 1.0;
  std::vector<Vec2> vertices_;
  bool sym_x_ = false, sym_y_ = false;
};

/// Inner obstacle K of the ring problem: a point (often the only case), a
/// closed convex set, or a segment (the High Ridge of a stadium).
class Obstacle {
 public:
  enum class Kind { Point, Set, Segment };

  static Obstacle point(Vec2 p) {
    Obstacle o;
    o.kind_ = Kind::Point;
    o.p0_ = p;
    o.p1_ = p;
    return o;
  }
  static Obstacle set(ConvexDomain d) {
    Obstacle o;
    o.kind_ = Kind::Set;
    o.set_ = std::move(d);
    return o;
  }
  static Obstacle segment(Vec2 a, Vec2 b) {
    Obstacle o;
    o.kind_ = Kind::Segment;
    o.p0_ = a;
    o.p1_ = b;
    return o;
  }

  Kind kind() const { return kind_; }
  Vec2 point_location() const { return p0_; }
  Vec2 segment_a() const { return p0_; }
  Vec2 segment_b() const { return p1_; }
  const ConvexDomain& domain() const { return *set_; }

  double distance(Vec2 p) const;  // 0 on/inside the obstacle
  bool contains_closure(Vec2 p, double tol = 1e-12) const {
    return distance(p) <= tol;
  }

  /// Checks the spec'd containment: point obstacles strictly inside Omega,
  /// set/segment obstacles with closure inside Omega.
  void validate_inside(const ConvexDomain& omega) const;

 private:
  Kind kind_ = Kind::Point;
  Vec2 p0_{0, 0}, p1_{0, 0};
  std::optional<ConvexDomain> set_;
};

// --- grid classification ---------------------------------------------------

enum class NodeLabel : std::uint8_t {
  Interior = 0,
  Boundary = 1,  // on the boundary or within h/2 inside it; Dirichlet
  Exterior = 2,
  ObstacleNode = 3,
};

struct GridSpec {
  Vec2 origin;  // coordinates of node (0, 0)
  double h = 0.0;
  int nx = 0, ny = 0;
  std::vector<NodeLabel> mask;  // row-major, idx = j*nx + i

  int idx(int i, int j) const { return j * nx + i; }
  Vec2 node(int i, int j) const {
    return {origin.x + i * h, origin.y + j * h};
  }
  NodeLabel label(int i, int j) const { return mask[idx(i, j)]; }
  int size() const { return nx * ny; }
  int count(NodeLabel l) const;
  bool same_layout(const GridSpec& o) const {
    return nx == o.nx && ny == o.ny && std::abs(h - o.h) < 1e-15 &&
           (origin - o.origin).norm() < 1e-12;
  }
};

/// Lays a uniform axis-aligned grid over the domain, with the domain center
/// on a node, and labels every node. Point obstacles are snapped to the
/// nearest node. Requires h < inradius/4.
GridSpec classify_grid(const ConvexDomain& domain, const Obstacle* obstacle,
                       double h);

// --- moving-plane assumption checks ----------------------------------------

struct MovingPlaneReport {
  bool bounded_convex = false;
  bool symmetric_x = false;
  bool symmetric_y = false;
  bool smooth_by_kind = false;   // C^2+ boundary assumed from the kind
  bool curvature_monotone = false;
  bool obstacle_at_origin = false;
  bool pass = false;
  double max_curvature_violation = 0.0;
  std::string detail;
};

/// Checks the symmetry/curvature assumptions needed for the boundary-speed
/// monotonicity results: symmetry in both axes, boundary curvature
/// non-decreasing with x in the first quadrant (slack 1e-9), obstacle at the
/// origin. Smoothness is reported as assumed from the domain kind, not
/// verified. Polygons fail with a reason instead of throwing.
MovingPlaneReport check_moving_plane_assumptions(
    const ConvexDomain& domain, const Obstacle* obstacle = nullptr);

/// x-intercept f(x1) f'(x1) + x1 of the normal line through the first-quadrant
/// boundary point at parameter theta, with the boundary written locally as a
/// graph x2 = f(x1). Throws on a vertical tangent.
double normal_axis_intercept(const ConvexDomain& domain, double theta);

}  // namespace inflap
