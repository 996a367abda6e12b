#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "coverplan/errors.hpp"

namespace coverplan::geom {

// Coordinate snapping tolerance (m). Points closer than this to a cut line /
// boundary are treated as lying on it. Coordinates are never moved.
inline constexpr double kSnapEps = 1e-9;
// Minimum loop area (m^2). Loops below this are dropped with a recorded warning.
inline constexpr double kAreaEps = 1e-12;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Point2&) const = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline Point2 operator-(Point2 p) { return {-p.x, -p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point2 p) { return dot(p, p); }
inline double norm(Point2 p) { return std::sqrt(norm2(p)); }
inline double dist(Point2 a, Point2 b) { return norm(b - a); }
inline bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Segment {
    Point2 a;
    Point2 b;
};

enum class PointClass { Inside, Outside, Boundary };

// Strictly convex CCW polygon. Degenerate hulls (a point or a segment) are
// representable so that zero-extent shapes flow through sweeps and Minkowski
// sums exactly; scene-level validation is where fuller invariants apply.
class ConvexPolygon {
public:
    ConvexPolygon() = default;
    // Takes arbitrary points; the stored form is their strict convex hull,
    // CCW, rotated so the lexicographically smallest vertex comes first.
    static ConvexPolygon hull_of(std::vector<Point2> pts);

    std::span<const Point2> vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    bool degenerate() const { return verts_.size() < 3; }
    double area() const;
    Point2 centroid() const;
    double circumradius_about_origin() const;

    ConvexPolygon translated(Point2 t) const;
    ConvexPolygon reflected() const;  // point reflection about the origin
    ConvexPolygon scaled(double factor) const;  // about the origin

    // Signed distance from p to the boundary: positive inside.
    double signed_depth(Point2 p) const;
    PointClass classify(Point2 p, double eps = kSnapEps) const;
    bool contains(Point2 p, double eps = kSnapEps) const {
        return classify(p, eps) != PointClass::Outside;
    }

    bool operator==(const ConvexPolygon&) const = default;

private:
    std::vector<Point2> verts_;
};

// A directed loop: the region interior lies to the LEFT of every edge
// (outer loops CCW, holes CW). Even-odd semantics over the loop multiset.
struct Loop {
    std::vector<Point2> pts;
    double signed_area() const;
};

// Plane region with holes; possibly several disjoint components. Invariants:
// loops pairwise non-crossing, consistent interior-left orientation.
class Region {
public:
    Region() = default;
    explicit Region(std::vector<Loop> loops) : loops_(std::move(loops)) {}
    static Region from_convex(const ConvexPolygon& p);
    static Region rectangle(Point2 lo, Point2 hi);

    const std::vector<Loop>& loops() const { return loops_; }
    std::vector<Loop>& loops() { return loops_; }
    bool empty() const { return loops_.empty(); }
    double area() const;  // Σ signed loop areas
    PointClass classify(Point2 p, double eps = kSnapEps) const;
    bool contains(Point2 p, double eps = kSnapEps) const {
        return classify(p, eps) == PointClass::Inside;
    }
    // Distance from p to the nearest boundary point.
    double boundary_distance(Point2 p) const;
    std::pair<Point2, Point2> bbox() const;

    // Structural validation used at trust boundaries (scene load): loop sizes,
    // finiteness, simplicity, pairwise non-crossing. O(n^2) segment checks.
    void validate(const std::string& field) const;

    std::vector<Loop> outer_loops() const;
    std::vector<Loop> hole_loops() const;

private:
    std::vector<Loop> loops_;
};

// ---- Split primitive -------------------------------------------------------
//
// Splits a region by the oriented line through `origin` with direction `dir`.
// `neg` keeps the right-hand side (signed side < 0), `pos` the left.
// Coordinates are never moved: both outputs share the parent's vertices and
// the interpolated crossing points, and closure edges along the cut appear in
// both outputs with opposite directions, so area(neg) + area(pos) telescopes
// to area(input) at machine precision.
struct SplitResult {
    Region neg;
    Region pos;
};
SplitResult split_region(const Region& r, Point2 origin, Point2 dir);

// Region ∩ convex and Region ∖ convex in one pass of half-plane splits.
struct ConvexSplit {
    Region inside;
    Region outside;
};
ConvexSplit split_by_convex(const Region& r, const ConvexPolygon& c);

enum class BoolOp { Union, Intersection, Difference };
Region boolean_op(BoolOp op, const Region& a, const Region& b);

// Convex cells exactly partitioning the region (solid-BSP of its own edges).
std::vector<ConvexPolygon> convex_pieces(const Region& r);

ConvexPolygon convex_hull(std::vector<Point2> pts);
ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b);
ConvexPolygon swept_hull(const ConvexPolygon& shape, Point2 from, Point2 to);

// True iff interiors overlap or boundaries properly cross. Boundary-touching
// shapes (within kSnapEps) do not count as intersecting.
bool intersects(const ConvexPolygon& a, const ConvexPolygon& b);
bool intersects(const Region& r, const ConvexPolygon& c);

// A point strictly inside the region, away from its boundary when possible.
std::optional<Point2> interior_point(const Region& r);

// Count of loops dropped for falling below kAreaEps (recorded warnings).
std::uint64_t dropped_loop_count();
void reset_dropped_loop_count();

}  // namespace coverplan::geom
