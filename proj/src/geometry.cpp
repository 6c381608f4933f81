#include "inflap/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <numbers>

namespace inflap {

namespace {

constexpr double kPi = std::numbers::pi;

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  Vec2 ab = b - a;
  double len2 = ab.norm2();
  if (len2 < 1e-300) return (p - a).norm();
  double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + ab * t)).norm();
}

}  // namespace

// --- construction -----------------------------------------------------------

ConvexDomain ConvexDomain::disk(double radius, Vec2 center) {
  if (!(radius > 0)) throw GeometryError("disk: radius must be positive");
  ConvexDomain d;
  d.kind_ = DomainKind::Disk;
  d.center_ = center;
  d.a_ = d.b_ = radius;
  d.sym_x_ = d.sym_y_ = true;
  return d;
}

ConvexDomain ConvexDomain::ellipse(double a, double b, Vec2 center) {
  if (!(a > 0) || !(b > 0)) throw GeometryError("ellipse: axes must be positive");
  ConvexDomain d;
  d.kind_ = DomainKind::Ellipse;
  d.center_ = center;
  d.a_ = a;
  d.b_ = b;
  d.sym_x_ = d.sym_y_ = true;
  return d;
}

ConvexDomain ConvexDomain::square(double side, Vec2 center) {
  if (!(side > 0)) throw GeometryError("square: side must be positive");
  ConvexDomain d;
  d.kind_ = DomainKind::Square;
  d.center_ = center;
  d.a_ = side;
  double s = side / 2;
  d.vertices_ = {center + Vec2{s, s}, center + Vec2{-s, s},
                 center + Vec2{-s, -s}, center + Vec2{s, -s}};
  d.sym_x_ = d.sym_y_ = true;
  return d;
}

ConvexDomain ConvexDomain::stadium(double straight_length, double cap_radius,
                                   Vec2 center) {
  if (!(straight_length >= 0) || !(cap_radius > 0))
    throw GeometryError("stadium: invalid dimensions");
  ConvexDomain d;
  d.kind_ = DomainKind::Stadium;
  d.center_ = center;
  d.a_ = straight_length;
  d.b_ = cap_radius;
  d.sym_x_ = d.sym_y_ = true;
  return d;
}

ConvexDomain ConvexDomain::polygon(std::vector<Vec2> vertices) {
  if (vertices.size() < 3) throw GeometryError("polygon: need >= 3 vertices");
  const int n = static_cast<int>(vertices.size());
  Vec2 c{0, 0};
  for (const Vec2& v : vertices) c += v;
  c = c / n;
  // closed, simple, positively oriented, convex: successive cross products
  // must stay positive
  for (int i = 0; i < n; ++i) {
    Vec2 e0 = vertices[(i + 1) % n] - vertices[i];
    Vec2 e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
    if (e0.cross(e1) <= 0)
      throw GeometryError("polygon: vertices must be convex and ccw");
  }
  ConvexDomain d;
  d.kind_ = DomainKind::Polygon;
  d.center_ = c;
  d.vertices_ = std::move(vertices);
  auto on_boundary = [&](Vec2 p) {
    for (int i = 0; i < n; ++i)
      if (point_segment_distance(p, d.vertices_[i],
                                 d.vertices_[(i + 1) % n]) < 1e-9)
        return true;
    return false;
  };
  d.sym_x_ = d.sym_y_ = true;
  for (const Vec2& v : d.vertices_) {
    if (!on_boundary({v.x, 2 * c.y - v.y})) d.sym_x_ = false;
    if (!on_boundary({2 * c.x - v.x, v.y})) d.sym_y_ = false;
  }
  return d;
}

// --- boundary parametrization ----------------------------------------------

double ConvexDomain::ray_to_boundary(double theta) const {
  double cs = std::cos(theta), sn = std::sin(theta);
  switch (kind_) {
    case DomainKind::Square:
      return (a_ / 2) / std::max(std::abs(cs), std::abs(sn));
    case DomainKind::Stadium: {
      double L = a_, r = b_;
      if (L * std::abs(sn) >= 2 * r * std::abs(cs)) return r / std::abs(sn);
      return (L * std::abs(cs) + std::sqrt(4 * r * r - L * L * sn * sn)) / 2;
    }
    case DomainKind::Polygon: {
      const int n = static_cast<int>(vertices_.size());
      Vec2 u{cs, sn};
      for (int i = 0; i < n; ++i) {
        Vec2 a = vertices_[i] - center_;
        Vec2 e = vertices_[(i + 1) % n] - vertices_[i];
        double den = u.cross(e);
        if (std::abs(den) < 1e-300) continue;
        double s = a.cross(e) / den;
        double tau = a.cross(u) / den;
        if (s > 0 && tau >= -1e-12 && tau <= 1 + 1e-12) return s;
      }
      throw GeometryError("polygon: ray cast failed");
    }
    default:
      throw GeometryError("ray_to_boundary: unsupported kind");
  }
}

Vec2 ConvexDomain::boundary_point(double theta) const {
  if (!std::isfinite(theta)) throw GeometryError("boundary_point: theta not finite");
  switch (kind_) {
    case DomainKind::Disk:
      return center_ + Vec2{a_ * std::cos(theta), a_ * std::sin(theta)};
    case DomainKind::Ellipse:
      return center_ + Vec2{a_ * std::cos(theta), b_ * std::sin(theta)};
    default: {
      double s = ray_to_boundary(theta);
      return center_ + Vec2{s * std::cos(theta), s * std::sin(theta)};
    }
  }
}

Vec2 ConvexDomain::boundary_tangent(double theta) const {
  switch (kind_) {
    case DomainKind::Disk:
      return {-std::sin(theta), std::cos(theta)};
    case DomainKind::Ellipse: {
      Vec2 t{-a_ * std::sin(theta), b_ * std::cos(theta)};
      return t.normalized();
    }
    case DomainKind::Stadium: {
      Vec2 p = boundary_point(theta) - center_;
      double L = a_, r = b_;
      if (std::abs(p.x) <= L / 2 + 1e-12 * (L + r)) {
        return p.y > 0 ? Vec2{-1, 0} : Vec2{1, 0};
      }
      Vec2 cap{p.x > 0 ? L / 2 : -L / 2, 0};
      Vec2 n = (p - cap) / r;
      return {-n.y, n.x};
    }
    case DomainKind::Square:
    case DomainKind::Polygon: {
      Vec2 p = boundary_point(theta);
      const std::vector<Vec2>& vs = vertices_;
      const int n = static_cast<int>(vs.size());
      double scale = std::sqrt(bounding_box().width() * bounding_box().height());
      for (int i = 0; i < n; ++i)
        if ((p - vs[i]).norm() < 1e-9 * scale)
          throw GeometryError("tangent undefined at a polygon vertex");
      int best = 0;
      double best_d = 1e300;
      for (int i = 0; i < n; ++i) {
        double d = point_segment_distance(p, vs[i], vs[(i + 1) % n]);
        if (d < best_d) {
          best_d = d;
          best = i;
        }
      }
      return (vs[(best + 1) % n] - vs[best]).normalized();
    }
  }
  throw GeometryError("boundary_tangent: unreachable");
}

Vec2 ConvexDomain::outward_normal(double theta) const {
  Vec2 t = boundary_tangent(theta);
  return {t.y, -t.x};  // ccw orientation
}

double ConvexDomain::curvature(double theta) const {
  switch (kind_) {
    case DomainKind::Disk:
      return 1.0 / a_;
    case DomainKind::Ellipse: {
      // |x'y'' - y'x''| / (x'^2 + y'^2)^{3/2} with the standard
      // parametrization; the numerator reduces to a*b
      double sn = std::sin(theta), cs = std::cos(theta);
      double speed2 = a_ * a_ * sn * sn + b_ * b_ * cs * cs;
      return a_ * b_ / (speed2 * std::sqrt(speed2));
    }
    case DomainKind::Stadium: {
      Vec2 p = boundary_point(theta) - center_;
      return std::abs(p.x) > a_ / 2 + 1e-12 * (a_ + b_) ? 1.0 / b_ : 0.0;
    }
    case DomainKind::Square:
    case DomainKind::Polygon:
      boundary_tangent(theta);  // throws at vertices
      return 0.0;
  }
  throw GeometryError("curvature: unreachable");
}

// --- membership and distance -----------------------------------------------

bool ConvexDomain::contains(Vec2 p) const {
  Vec2 q = p - center_;
  switch (kind_) {
    case DomainKind::Disk:
      return q.norm() < a_;
    case DomainKind::Ellipse: {
      double u = q.x / a_, v = q.y / b_;
      return u * u + v * v < 1.0;
    }
    case DomainKind::Square:
      return std::max(std::abs(q.x), std::abs(q.y)) < a_ / 2;
    case DomainKind::Stadium: {
      Vec2 sp{std::max(std::abs(q.x) - a_ / 2, 0.0), q.y};
      return sp.norm() < b_;
    }
    case DomainKind::Polygon: {
      const int n = static_cast<int>(vertices_.size());
      for (int i = 0; i < n; ++i) {
        Vec2 e = vertices_[(i + 1) % n] - vertices_[i];
        if (e.cross(p - vertices_[i]) <= 0) return false;
      }
      return true;
    }
  }
  return false;
}

bool ConvexDomain::contains_closure(Vec2 p) const {
  if (contains(p)) return true;
  Vec2 q = p - center_;
  const double tol = 1e-12;
  switch (kind_) {
    case DomainKind::Disk:
      return q.norm() <= a_ + tol;
    case DomainKind::Ellipse: {
      double u = q.x / a_, v = q.y / b_;
      return u * u + v * v <= 1.0 + tol;
    }
    case DomainKind::Square:
      return std::max(std::abs(q.x), std::abs(q.y)) <= a_ / 2 + tol;
    case DomainKind::Stadium: {
      Vec2 sp{std::max(std::abs(q.x) - a_ / 2, 0.0), q.y};
      return sp.norm() <= b_ + tol;
    }
    case DomainKind::Polygon: {
      const int n = static_cast<int>(vertices_.size());
      for (int i = 0; i < n; ++i)
        if (point_segment_distance(p, vertices_[i], vertices_[(i + 1) % n]) <=
            tol)
          return true;
      return false;
    }
  }
  return false;
}

double ConvexDomain::distance_to_boundary(Vec2 p) const {
  if (!contains_closure(p))
    throw GeometryError("distance_to_boundary: point outside the domain");
  Vec2 q = p - center_;
  switch (kind_) {
    case DomainKind::Disk:
      return std::max(a_ - q.norm(), 0.0);
    case DomainKind::Square:
      return std::max(a_ / 2 - std::max(std::abs(q.x), std::abs(q.y)), 0.0);
    case DomainKind::Stadium: {
      Vec2 sp{std::max(std::abs(q.x) - a_ / 2, 0.0), q.y};
      return std::max(b_ - sp.norm(), 0.0);
    }
    case DomainKind::Polygon: {
      double d = 1e300;
      const int n = static_cast<int>(vertices_.size());
      for (int i = 0; i < n; ++i)
        d = std::min(d, point_segment_distance(p, vertices_[i],
                                               vertices_[(i + 1) % n]));
      return d;
    }
    case DomainKind::Ellipse: {
      // Newton projection onto the ellipse with a bisection bracket.
      // Fold into the closed first quadrant; the nearest boundary point
      // stays there. Stationarity of |p - (a cos t, b sin t)|^2:
      //   g(t) = a px sin t - b py cos t - (a^2 - b^2) sin t cos t = 0,
      // g(0) <= 0 <= g(pi/2).
      double px = std::abs(q.x), py = std::abs(q.y);
      auto g = [&](double t) {
        double sn = std::sin(t), cs = std::cos(t);
        return a_ * px * sn - b_ * py * cs - (a_ * a_ - b_ * b_) * sn * cs;
      };
      auto gp = [&](double t) {
        double sn = std::sin(t), cs = std::cos(t);
        return a_ * px * cs + b_ * py * sn -
               (a_ * a_ - b_ * b_) * (cs * cs - sn * sn);
      };
      double lo = 0.0, hi = kPi / 2, t = kPi / 4;
      for (int it = 0; it < 200; ++it) {
        double gv = g(t);
        if (gv > 0)
          hi = t;
        else
          lo = t;
        double dg = gp(t);
        double tn = (std::abs(dg) > 1e-300) ? t - gv / dg : 0.5 * (lo + hi);
        if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
        if (std::abs(tn - t) < 1e-15) {
          t = tn;
          break;
        }
        t = tn;
        if (hi - lo < 1e-15) break;
      }
      Vec2 bp{a_ * std::cos(t), b_ * std::sin(t)};
      return (Vec2{px, py} - bp).norm();
    }
  }
  throw GeometryError("distance_to_boundary: unreachable");
}

// --- global quantities -------------------------------------------------------

Rect ConvexDomain::bounding_box() const {
  switch (kind_) {
    case DomainKind::Disk:
      return {center_ - Vec2{a_, a_}, center_ + Vec2{a_, a_}};
    case DomainKind::Ellipse:
      return {center_ - Vec2{a_, b_}, center_ + Vec2{a_, b_}};
    case DomainKind::Square:
      return {center_ - Vec2{a_ / 2, a_ / 2}, center_ + Vec2{a_ / 2, a_ / 2}};
    case DomainKind::Stadium:
      return {center_ - Vec2{a_ / 2 + b_, b_}, center_ + Vec2{a_ / 2 + b_, b_}};
    case DomainKind::Polygon: {
      Rect r{vertices_[0], vertices_[0]};
      for (const Vec2& v : vertices_) {
        r.lo.x = std::min(r.lo.x, v.x);
        r.lo.y = std::min(r.lo.y, v.y);
        r.hi.x = std::max(r.hi.x, v.x);
        r.hi.y = std::max(r.hi.y, v.y);
      }
      return r;
    }
  }
  throw GeometryError("bounding_box: unreachable");
}

double ConvexDomain::inradius() const {
  switch (kind_) {
    case DomainKind::Disk:
      return a_;
    case DomainKind::Ellipse:
      return std::min(a_, b_);
    case DomainKind::Square:
      return a_ / 2;
    case DomainKind::Stadium:
      return b_;
    case DomainKind::Polygon: {
      double d = 1e300;
      const int n = static_cast<int>(vertices_.size());
      for (int i = 0; i < n; ++i)
        d = std::min(d, point_segment_distance(center_, vertices_[i],
                                               vertices_[(i + 1) % n]));
      return d;
    }
  }
  throw GeometryError("inradius: unreachable");
}

HighRidge ConvexDomain::high_ridge(double tol) const {
  if (!(tol > 0)) throw GeometryError("high_ridge: tol must be positive");
  switch (kind_) {
    case DomainKind::Disk:
    case DomainKind::Ellipse:
    case DomainKind::Square:
      return {center_, center_, inradius()};
    case DomainKind::Stadium:
      return {center_ - Vec2{a_ / 2, 0}, center_ + Vec2{a_ / 2, 0}, b_};
    case DomainKind::Polygon:
      throw GeometryError("high_ridge: not available for generic polygons");
  }
  throw GeometryError("high_ridge: unreachable");
}

bool ConvexDomain::smooth_by_kind() const {
  return kind_ == DomainKind::Disk || kind_ == DomainKind::Ellipse;
}

std::string ConvexDomain::describe() const {
  char buf[128];
  switch (kind_) {
    case DomainKind::Disk:
      std::snprintf(buf, sizeof buf, "disk:%g", a_);
      break;
    case DomainKind::Ellipse:
      std::snprintf(buf, sizeof buf, "ellipse:%g,%g", a_, b_);
      break;
    case DomainKind::Square:
      std::snprintf(buf, sizeof buf, "square:%g", a_);
      break;
    case DomainKind::Stadium:
      std::snprintf(buf, sizeof buf, "stadium:%g,%g", a_, b_);
      break;
    case DomainKind::Polygon:
      std::snprintf(buf, sizeof buf, "polygon:%zu", vertices_.size());
      break;
  }
  return buf;
}

// --- obstacle ----------------------------------------------------------------

double Obstacle::distance(Vec2 p) const {
  switch (kind_) {
    case Kind::Point:
      return (p - p0_).norm();
    case Kind::Segment:
      return point_segment_distance(p, p0_, p1_);
    case Kind::Set: {
      if (set_->contains_closure(p)) return 0.0;
      // outside distance; fine-sampled boundary is enough for grid snapping
      double d = 1e300;
      for (int i = 0; i < 4096; ++i) {
        double th = 2 * kPi * i / 4096;
        d = std::min(d, (p - set_->boundary_point(th)).norm());
      }
      return d;
    }
  }
  return 0.0;
}

void Obstacle::validate_inside(const ConvexDomain& omega) const {
  switch (kind_) {
    case Kind::Point:
      if (!omega.contains(p0_))
        throw GeometryError("obstacle point must lie strictly inside the domain");
      break;
    case Kind::Segment:
      if (!omega.contains(p0_) || !omega.contains(p1_))
        throw GeometryError("obstacle segment must lie inside the domain");
      break;
    case Kind::Set: {
      Rect bb = set_->bounding_box();
      for (Vec2 corner : {bb.lo, bb.hi, Vec2{bb.lo.x, bb.hi.y}, Vec2{bb.hi.x, bb.lo.y}}) {
        (void)corner;
      }
      for (int i = 0; i < 256; ++i) {
        double th = 2 * kPi * i / 256;
        if (!omega.contains(set_->boundary_point(th)))
          throw GeometryError("obstacle set closure must be contained in the domain");
      }
      break;
    }
  }
}

// --- grid classification -----------------------------------------------------

int GridSpec::count(NodeLabel l) const {
  int c = 0;
  for (NodeLabel m : mask) c += (m == l);
  return c;
}

GridSpec classify_grid(const ConvexDomain& domain, const Obstacle* obstacle,
                       double h) {
  if (!(h > 0)) throw GeometryError("classify_grid: h must be positive");
  if (!(h < domain.inradius() / 4))
    throw GeometryError("classify_grid: h too coarse for this domain");
  if (obstacle) obstacle->validate_inside(domain);

  Rect bb = domain.bounding_box();
  Vec2 c = domain.center();
  double half_w = std::max(bb.hi.x - c.x, c.x - bb.lo.x);
  double half_h = std::max(bb.hi.y - c.y, c.y - bb.lo.y);
  int nhx = static_cast<int>(std::ceil(half_w / h - 1e-9)) + 1;
  int nhy = static_cast<int>(std::ceil(half_h / h - 1e-9)) + 1;

  GridSpec g;
  g.h = h;
  g.nx = 2 * nhx + 1;
  g.ny = 2 * nhy + 1;
  g.origin = {c.x - nhx * h, c.y - nhy * h};
  g.mask.assign(static_cast<size_t>(g.nx) * g.ny, NodeLabel::Exterior);

  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      Vec2 p = g.node(i, j);
      if (!domain.contains_closure(p)) continue;
      double d = domain.distance_to_boundary(p);
      g.mask[g.idx(i, j)] = d < h / 2 ? NodeLabel::Boundary : NodeLabel::Interior;
    }
  }

  if (obstacle) {
    auto nearest_node = [&](Vec2 p) {
      int i = std::clamp(static_cast<int>(std::lround((p.x - g.origin.x) / h)),
                         0, g.nx - 1);
      int j = std::clamp(static_cast<int>(std::lround((p.y - g.origin.y) / h)),
                         0, g.ny - 1);
      return g.idx(i, j);
    };
    int labeled = 0;
    if (obstacle->kind() == Obstacle::Kind::Point) {
      g.mask[nearest_node(obstacle->point_location())] = NodeLabel::ObstacleNode;
      labeled = 1;
    } else {
      for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
          if (g.label(i, j) == NodeLabel::Exterior) continue;
          if (obstacle->distance(g.node(i, j)) <= h / 2) {
            g.mask[g.idx(i, j)] = NodeLabel::ObstacleNode;
            ++labeled;
          }
        }
      if (labeled == 0) {
        Vec2 mid = (obstacle->segment_a() + obstacle->segment_b()) / 2;
        g.mask[nearest_node(mid)] = NodeLabel::ObstacleNode;
      }
    }
  }
  return g;
}

// --- moving-plane assumptions -------------------------------------------------

MovingPlaneReport check_moving_plane_assumptions(const ConvexDomain& domain,
                                                 const Obstacle* obstacle) {
  MovingPlaneReport rep;
  rep.bounded_convex = true;

  Vec2 c = domain.center();
  bool centered = c.norm() <= 1e-12;
  rep.symmetric_x = domain.symmetric_x() && centered;
  rep.symmetric_y = domain.symmetric_y() && centered;
  rep.smooth_by_kind = domain.smooth_by_kind();

  if (domain.kind() == DomainKind::Square ||
      domain.kind() == DomainKind::Polygon) {
    rep.curvature_monotone = false;
    rep.detail = "polygonal boundary: curvature is undefined at vertices";
  } else {
    // curvature must be non-decreasing with x through the first quadrant
    const int n = 2048;
    std::vector<std::pair<double, double>> samples;  // (x, kappa)
    samples.reserve(n);
    for (int i = 1; i < n; ++i) {
      double th = (kPi / 2) * i / n;
      Vec2 p = domain.boundary_point(th);
      samples.push_back({p.x, domain.curvature(th)});
    }
    std::sort(samples.begin(), samples.end());
    double worst = 0.0;
    for (size_t i = 1; i < samples.size(); ++i)
      worst = std::max(worst, samples[i - 1].second - samples[i].second);
    rep.max_curvature_violation = worst;
    rep.curvature_monotone = worst <= 1e-9;
  }

  rep.obstacle_at_origin = true;
  if (obstacle) {
    rep.obstacle_at_origin = obstacle->kind() == Obstacle::Kind::Point &&
                             obstacle->point_location().norm() <= 1e-12;
  }

  rep.pass = rep.bounded_convex && rep.symmetric_x && rep.symmetric_y &&
             rep.smooth_by_kind && rep.curvature_monotone &&
             rep.obstacle_at_origin;
  if (!rep.pass && rep.detail.empty()) {
    if (!rep.symmetric_x || !rep.symmetric_y)
      rep.detail = "domain is not symmetric about both coordinate axes";
    else if (!rep.smooth_by_kind)
      rep.detail = "boundary is not smooth enough by kind";
    else if (!rep.curvature_monotone)
      rep.detail = "curvature is not monotone with x in the first quadrant";
    else if (!rep.obstacle_at_origin)
      rep.detail = "obstacle is not the origin";
  }
  return rep;
}

double normal_axis_intercept(const ConvexDomain& domain, double theta) {
  Vec2 p = domain.boundary_point(theta);
  Vec2 t = domain.boundary_tangent(theta);
  if (std::abs(t.x) < 1e-12)
    throw GeometryError("normal_axis_intercept: vertical tangent");
  // boundary as a graph x2 = f(x1): f' = t.y / t.x
  return p.y * (t.y / t.x) + p.x;
}

}  // namespace inflap
