#include "coverplan/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <limits>

namespace coverplan::geom {

namespace {

std::atomic<std::uint64_t> g_dropped_loops{0};

constexpr double kCrossEps = 1e-12;  // strict-turn threshold for hulls

double orient(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }

double point_segment_dist(Point2 p, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = norm2(ab);
    if (len2 <= 0.0) return dist(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, a + t * ab);
}

// Proper (interior-point) crossing of two segments. Collinear overlaps and
// endpoint touches within eps do not count.
bool proper_cross(Point2 p1, Point2 p2, Point2 q1, Point2 q2, double eps = kSnapEps) {
    const double lq = dist(q1, q2), lp = dist(p1, p2);
    if (lq <= eps || lp <= eps) return false;
    auto snap = [](double v, double tol) { return std::abs(v) <= tol ? 0.0 : v; };
    const double d1 = snap(orient(q1, q2, p1), eps * lq);
    const double d2 = snap(orient(q1, q2, p2), eps * lq);
    const double d3 = snap(orient(p1, p2, q1), eps * lp);
    const double d4 = snap(orient(p1, p2, q2), eps * lp);
    return d1 * d2 < 0.0 && d3 * d4 < 0.0;
}

}  // namespace

std::uint64_t dropped_loop_count() { return g_dropped_loops.load(); }
void reset_dropped_loop_count() { g_dropped_loops.store(0); }

// ---- ConvexPolygon ---------------------------------------------------------

ConvexPolygon ConvexPolygon::hull_of(std::vector<Point2> pts) {
    for (const auto& p : pts)
        if (!finite(p)) throw DegenerateGeometry("non-finite coordinate in polygon");
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    // drop near-duplicates against the last kept point
    std::vector<Point2> uniq;
    for (const auto& p : pts) {
        if (!uniq.empty() && std::abs(p.x - uniq.back().x) <= kSnapEps &&
            std::abs(p.y - uniq.back().y) <= kSnapEps)
            continue;
        uniq.push_back(p);
    }
    ConvexPolygon out;
    if (uniq.size() <= 2) {
        out.verts_ = std::move(uniq);
        return out;
    }
    const std::size_t n = uniq.size();
    std::vector<Point2> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower hull
        while (k >= 2 && orient(h[k - 2], h[k - 1], uniq[i]) <= kCrossEps) --k;
        h[k++] = uniq[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper hull
        while (k >= lower && orient(h[k - 2], h[k - 1], uniq[i]) <= kCrossEps) --k;
        h[k++] = uniq[i];
    }
    h.resize(k - 1);
    out.verts_ = std::move(h);
    if (out.verts_.size() < 3) {
        // collinear input collapses to a segment
        out.verts_ = {uniq.front(), uniq.back()};
    }
    return out;
}

double ConvexPolygon::area() const {
    if (verts_.size() < 3) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        s += cross(verts_[i], verts_[(i + 1) % verts_.size()]);
    return 0.5 * s;
}

Point2 ConvexPolygon::centroid() const {
    if (verts_.empty()) return {};
    if (verts_.size() < 3) {
        Point2 s{};
        for (auto& v : verts_) s = s + v;
        return (1.0 / static_cast<double>(verts_.size())) * s;
    }
    double a = 0.0;
    Point2 c{};
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Point2 p = verts_[i], q = verts_[(i + 1) % verts_.size()];
        const double w = cross(p, q);
        a += w;
        c = c + w * (p + q);
    }
    return (1.0 / (3.0 * a)) * c;
}

double ConvexPolygon::circumradius_about_origin() const {
    double r = 0.0;
    for (auto& v : verts_) r = std::max(r, norm(v));
    return r;
}

ConvexPolygon ConvexPolygon::translated(Point2 t) const {
    ConvexPolygon out = *this;
    for (auto& v : out.verts_) v = v + t;
    return out;
}

ConvexPolygon ConvexPolygon::reflected() const {
    std::vector<Point2> pts;
    pts.reserve(verts_.size());
    for (auto& v : verts_) pts.push_back(-v);
    return hull_of(std::move(pts));
}

ConvexPolygon ConvexPolygon::scaled(double factor) const {
    std::vector<Point2> pts;
    pts.reserve(verts_.size());
    for (auto& v : verts_) pts.push_back(factor * v);
    return hull_of(std::move(pts));
}

double ConvexPolygon::signed_depth(Point2 p) const {
    if (verts_.empty()) return -std::numeric_limits<double>::infinity();
    if (verts_.size() == 1) return -dist(p, verts_[0]);
    if (verts_.size() == 2) return -point_segment_dist(p, verts_[0], verts_[1]);
    double depth = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Point2 a = verts_[i], b = verts_[(i + 1) % verts_.size()];
        depth = std::min(depth, cross(b - a, p - a) / dist(a, b));
    }
    return depth;
}

PointClass ConvexPolygon::classify(Point2 p, double eps) const {
    const double d = signed_depth(p);
    if (d > eps) return PointClass::Inside;
    if (d < -eps) return PointClass::Outside;
    return PointClass::Boundary;
}

// ---- Loop / Region ---------------------------------------------------------

double Loop::signed_area() const {
    if (pts.size() < 3) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        s += cross(pts[i], pts[(i + 1) % pts.size()]);
    return 0.5 * s;
}

Region Region::from_convex(const ConvexPolygon& p) {
    if (p.size() < 3) return Region{};
    Loop l;
    l.pts.assign(p.vertices().begin(), p.vertices().end());
    return Region({std::move(l)});
}

Region Region::rectangle(Point2 lo, Point2 hi) {
    Loop l;
    l.pts = {{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}};
    return Region({std::move(l)});
}

double Region::area() const {
    double s = 0.0;
    for (const auto& l : loops_) s += l.signed_area();
    return s;
}

PointClass Region::classify(Point2 p, double eps) const {
    for (const auto& l : loops_) {
        const std::size_t n = l.pts.size();
        for (std::size_t i = 0; i < n; ++i)
            if (point_segment_dist(p, l.pts[i], l.pts[(i + 1) % n]) <= eps)
                return PointClass::Boundary;
    }
    bool inside = false;
    for (const auto& l : loops_) {
        const std::size_t n = l.pts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2 a = l.pts[i], b = l.pts[(i + 1) % n];
            if ((a.y > p.y) != (b.y > p.y)) {
                const double xi = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
                if (xi > p.x) inside = !inside;
            }
        }
    }
    return inside ? PointClass::Inside : PointClass::Outside;
}

double Region::boundary_distance(Point2 p) const {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& l : loops_) {
        const std::size_t n = l.pts.size();
        for (std::size_t i = 0; i < n; ++i)
            d = std::min(d, point_segment_dist(p, l.pts[i], l.pts[(i + 1) % n]));
    }
    return d;
}

std::pair<Point2, Point2> Region::bbox() const {
    Point2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    Point2 hi{-lo.x, -lo.y};
    for (const auto& l : loops_)
        for (const auto& p : l.pts) {
            lo.x = std::min(lo.x, p.x);
            lo.y = std::min(lo.y, p.y);
            hi.x = std::max(hi.x, p.x);
            hi.y = std::max(hi.y, p.y);
        }
    return {lo, hi};
}

std::vector<Loop> Region::outer_loops() const {
    std::vector<Loop> out;
    for (const auto& l : loops_)
        if (l.signed_area() > 0.0) out.push_back(l);
    return out;
}

std::vector<Loop> Region::hole_loops() const {
    std::vector<Loop> out;
    for (const auto& l : loops_)
        if (l.signed_area() < 0.0) out.push_back(l);
    return out;
}

void Region::validate(const std::string& field) const {
    for (std::size_t li = 0; li < loops_.size(); ++li) {
        const auto& l = loops_[li];
        const std::string where = field + ".loops[" + std::to_string(li) + "]";
        if (l.pts.size() < 3) throw ValidationError(where, "loop needs at least 3 vertices");
        for (const auto& p : l.pts)
            if (!finite(p)) throw ValidationError(where, "non-finite coordinate");
        if (std::abs(l.signed_area()) < kAreaEps)
            throw ValidationError(where, "loop area below minimum");
        const std::size_t n = l.pts.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (j == i + 1 || (i == 0 && j == n - 1)) continue;  // adjacent edges
                if (proper_cross(l.pts[i], l.pts[(i + 1) % n], l.pts[j], l.pts[(j + 1) % n]))
                    throw ValidationError(where, "self-intersecting loop");
            }
    }
    for (std::size_t a = 0; a < loops_.size(); ++a)
        for (std::size_t b = a + 1; b < loops_.size(); ++b) {
            const auto& la = loops_[a];
            const auto& lb = loops_[b];
            for (std::size_t i = 0; i < la.pts.size(); ++i)
                for (std::size_t j = 0; j < lb.pts.size(); ++j)
                    if (proper_cross(la.pts[i], la.pts[(i + 1) % la.pts.size()], lb.pts[j],
                                     lb.pts[(j + 1) % lb.pts.size()]))
                        throw ValidationError(field, "crossing loops");
        }
    if (area() < -kAreaEps) throw ValidationError(field, "negative total area");
}

// ---- split_region ----------------------------------------------------------

namespace {

struct Chain {
    std::vector<Point2> pts;
};

// Collects chains and untouched loops for one side of the cut, then stitches
// chains into closed loops along the line.
struct SideAccum {
    int side;  // -1 keeps signed-side < 0, +1 keeps > 0
    std::vector<Loop> whole;
    std::vector<Chain> chains;
    std::vector<Point2> cur;
    bool open = false;

    void open_at(Point2 p) {
        cur.clear();
        cur.push_back(p);
        open = true;
    }
    void push(Point2 p) { cur.push_back(p); }
    void close() {
        chains.push_back(Chain{std::move(cur)});
        cur.clear();
        open = false;
    }
};

void emit_loop(std::vector<Loop>& out, std::vector<Point2> pts) {
    std::vector<Point2> clean;
    clean.reserve(pts.size());
    for (const auto& p : pts) {
        if (!clean.empty() && norm2(p - clean.back()) < 1e-28) continue;
        clean.push_back(p);
    }
    while (clean.size() > 1 && norm2(clean.front() - clean.back()) < 1e-28) clean.pop_back();
    if (clean.size() < 3) {
        ++g_dropped_loops;
        return;
    }
    Loop l{std::move(clean)};
    if (std::abs(l.signed_area()) < kAreaEps) {
        ++g_dropped_loops;
        return;
    }
    out.push_back(std::move(l));
}

// Walks one mixed loop for one side, appending maximal kept chains.
void walk_loop_side(const std::vector<Point2>& pts, const std::vector<int>& cls,
                    const std::vector<Point2>& crossing, Point2 u, SideAccum& acc) {
    const std::size_t n = pts.size();
    std::size_t k0 = n;
    for (std::size_t i = 0; i < n; ++i)
        if (cls[i] * acc.side < 0) {
            k0 = i;
            break;
        }
    assert(k0 < n);  // caller guarantees a mixed loop
    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t i = (k0 + s) % n, j = (i + 1) % n;
        const int ia = cls[i] * acc.side, ib = cls[j] * acc.side;
        const Point2 a = pts[i], b = pts[j];
        if (ia > 0) {
            if (ib >= 0) {
                acc.push(b);
            } else {
                acc.push(crossing[i]);
                acc.close();
            }
        } else if (ia == 0) {
            if (ib > 0) {
                if (!acc.open) acc.open_at(a);
                acc.push(b);
            } else if (ib == 0) {
                // edge running along the cut: part of this side's boundary
                // only when its direction matches the closure direction
                const bool kept = static_cast<double>(acc.side) * dot(b - a, u) > 0.0;
                if (kept) {
                    if (!acc.open) acc.open_at(a);
                    acc.push(b);
                } else if (acc.open) {
                    acc.close();
                }
            } else if (acc.open) {
                acc.close();
            }
        } else {
            if (ib > 0) {
                acc.open_at(crossing[i]);
                acc.push(b);
            }
            // ib <= 0: stays outside this side
        }
    }
    if (acc.open) acc.close();  // defensive: valid inputs close via transitions
}

Region stitch_side(SideAccum&& acc, Point2 origin, Point2 u) {
    std::vector<Loop> loops = std::move(acc.whole);
    const std::size_t m = acc.chains.size();
    if (m == 0) return Region(std::move(loops));

    struct Event {
        double t;
        bool is_end;
        std::size_t chain;
    };
    std::vector<Event> events;
    events.reserve(2 * m);
    for (std::size_t k = 0; k < m; ++k) {
        events.push_back({dot(u, acc.chains[k].pts.front() - origin), false, k});
        events.push_back({dot(u, acc.chains[k].pts.back() - origin), true, k});
    }
    // Closure travels along -u on the neg side, +u on the pos side. Scan in
    // closure order; an END opens a closure interval, the matching START
    // closes it (LIFO for nested touches). Ties: END first, then chain id.
    const double dir = acc.side < 0 ? -1.0 : 1.0;
    std::sort(events.begin(), events.end(), [dir](const Event& a, const Event& b) {
        const double ka = dir * a.t, kb = dir * b.t;
        if (ka != kb) return ka < kb;
        if (a.is_end != b.is_end) return a.is_end;
        return a.chain < b.chain;
    });

    std::vector<std::size_t> next(m, SIZE_MAX);
    std::vector<std::size_t> stack;
    std::vector<std::size_t> stray_starts;
    for (const auto& ev : events) {
        if (ev.is_end) {
            stack.push_back(ev.chain);
        } else if (!stack.empty()) {
            next[stack.back()] = ev.chain;
            stack.pop_back();
        } else {
            stray_starts.push_back(ev.chain);
        }
    }
    // Salvage pairing for inconsistent input; counted as degenerate output.
    for (std::size_t i = 0; i < stack.size() && i < stray_starts.size(); ++i) {
        next[stack[i]] = stray_starts[i];
        ++g_dropped_loops;
    }
    for (std::size_t k = 0; k < m; ++k)
        if (next[k] == SIZE_MAX) next[k] = k;

    std::vector<bool> visited(m, false);
    for (std::size_t k = 0; k < m; ++k) {
        if (visited[k]) continue;
        std::vector<Point2> pts;
        std::size_t c = k;
        do {
            visited[c] = true;
            pts.insert(pts.end(), acc.chains[c].pts.begin(), acc.chains[c].pts.end());
            c = next[c];
        } while (c != k && !visited[c]);
        emit_loop(loops, std::move(pts));
    }
    return Region(std::move(loops));
}

}  // namespace

SplitResult split_region(const Region& r, Point2 origin, Point2 dir) {
    const double len = norm(dir);
    if (len <= 0.0) throw DegenerateGeometry("zero-length split direction");
    const Point2 u = (1.0 / len) * dir;
    const Point2 nrm{-u.y, u.x};  // left normal: signed side > 0 is left of u

    SideAccum neg{-1}, pos{+1};
    for (const auto& loop : r.loops()) {
        const std::size_t n = loop.pts.size();
        if (n < 3) continue;
        std::vector<double> d(n);
        std::vector<int> cls(n);
        bool has_neg = false, has_pos = false;
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            d[i] = dot(nrm, loop.pts[i] - origin);
            mean += d[i];
            cls[i] = std::abs(d[i]) <= kSnapEps ? 0 : (d[i] < 0 ? -1 : 1);
            has_neg |= cls[i] < 0;
            has_pos |= cls[i] > 0;
        }
        if (!has_neg && !has_pos) {
            (mean >= 0.0 ? pos : neg).whole.push_back(loop);
            continue;
        }
        if (!has_neg) {
            pos.whole.push_back(loop);
            continue;
        }
        if (!has_pos) {
            neg.whole.push_back(loop);
            continue;
        }
        // Crossing points are computed once and shared by both outputs.
        std::vector<Point2> crossing(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = (i + 1) % n;
            if (cls[i] * cls[j] == -1) {
                const double s = d[i] / (d[i] - d[j]);
                crossing[i] = loop.pts[i] + s * (loop.pts[j] - loop.pts[i]);
            }
        }
        walk_loop_side(loop.pts, cls, crossing, u, neg);
        walk_loop_side(loop.pts, cls, crossing, u, pos);
    }
    return {stitch_side(std::move(neg), origin, u), stitch_side(std::move(pos), origin, u)};
}

ConvexSplit split_by_convex(const Region& r, const ConvexPolygon& c) {
    if (c.size() < 3) return {Region{}, r};
    Region inside = r;
    std::vector<Loop> outside;
    const auto vs = c.vertices();
    for (std::size_t i = 0; i < vs.size() && !inside.empty(); ++i) {
        const Point2 a = vs[i], b = vs[(i + 1) % vs.size()];
        auto [shaved, kept] = split_region(inside, a, b - a);
        inside = std::move(kept);
        for (auto& l : shaved.loops()) outside.push_back(std::move(l));
    }
    return {std::move(inside), Region(std::move(outside))};
}

// ---- solid BSP over a region's own edges -----------------------------------

namespace {

constexpr int kLeafIn = -1;
constexpr int kLeafOut = -2;

struct BspEdge {
    Point2 a, b;
};

struct BspNode {
    Point2 origin, dir;
    int neg = kLeafOut, pos = kLeafIn;
};

int build_bsp(std::vector<BspEdge> edges, std::vector<BspNode>& nodes) {
    // root line = first edge's supporting line; interior side is the left
    const BspEdge root = edges.front();
    const Point2 u = (1.0 / norm(root.b - root.a)) * (root.b - root.a);
    const Point2 nrm{-u.y, u.x};
    std::vector<BspEdge> neg, pos;
    for (const auto& e : edges) {
        const double da = dot(nrm, e.a - root.a), db = dot(nrm, e.b - root.a);
        const int ca = std::abs(da) <= kSnapEps ? 0 : (da < 0 ? -1 : 1);
        const int cb = std::abs(db) <= kSnapEps ? 0 : (db < 0 ? -1 : 1);
        if (ca == 0 && cb == 0) continue;  // coincident: consumed by this node
        if (ca >= 0 && cb >= 0) {
            pos.push_back(e);
        } else if (ca <= 0 && cb <= 0) {
            neg.push_back(e);
        } else {
            const double s = da / (da - db);
            const Point2 x = e.a + s * (e.b - e.a);
            if (ca > 0) {
                pos.push_back({e.a, x});
                neg.push_back({x, e.b});
            } else {
                neg.push_back({e.a, x});
                pos.push_back({x, e.b});
            }
        }
    }
    const int idx = static_cast<int>(nodes.size());
    nodes.push_back({root.a, root.b - root.a, kLeafOut, kLeafIn});
    if (!pos.empty()) {
        const int child = build_bsp(std::move(pos), nodes);
        nodes[idx].pos = child;
    }
    if (!neg.empty()) {
        const int child = build_bsp(std::move(neg), nodes);
        nodes[idx].neg = child;
    }
    return idx;
}

std::vector<BspEdge> region_edges(const Region& r) {
    std::vector<BspEdge> edges;
    for (const auto& l : r.loops()) {
        const std::size_t n = l.pts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2 a = l.pts[i], b = l.pts[(i + 1) % n];
            if (norm2(b - a) > 1e-28) edges.push_back({a, b});
        }
    }
    return edges;
}

template <typename LeafFn>
void push_fragments(const Region& piece, const std::vector<BspNode>& nodes, int node,
                    LeafFn&& fn) {
    if (piece.empty()) return;
    if (node < 0) {
        fn(node == kLeafIn, piece);
        return;
    }
    auto [neg, pos] = split_region(piece, nodes[node].origin, nodes[node].dir);
    push_fragments(pos, nodes, nodes[node].pos, fn);
    push_fragments(neg, nodes, nodes[node].neg, fn);
}

}  // namespace

Region boolean_op(BoolOp op, const Region& a, const Region& b) {
    if (b.empty()) {
        switch (op) {
            case BoolOp::Union: return a;
            case BoolOp::Intersection: return Region{};
            case BoolOp::Difference: return a;
        }
    }
    if (a.empty()) return op == BoolOp::Union ? b : Region{};

    std::vector<BspNode> nodes;
    build_bsp(region_edges(b), nodes);

    std::vector<Loop> in_loops, out_loops;
    push_fragments(a, nodes, 0, [&](bool inside, const Region& piece) {
        auto& dst = inside ? in_loops : out_loops;
        for (const auto& l : piece.loops()) dst.push_back(l);
    });

    switch (op) {
        case BoolOp::Intersection: return Region(std::move(in_loops));
        case BoolOp::Difference: return Region(std::move(out_loops));
        case BoolOp::Union: {
            // B plus the parts of A outside B: interior-disjoint loop sets
            std::vector<Loop> loops = b.loops();
            for (auto& l : out_loops) loops.push_back(std::move(l));
            return Region(std::move(loops));
        }
    }
    return Region{};
}

std::vector<ConvexPolygon> convex_pieces(const Region& r) {
    std::vector<ConvexPolygon> pieces;
    if (r.empty()) return pieces;
    std::vector<BspNode> nodes;
    build_bsp(region_edges(r), nodes);
    push_fragments(r, nodes, 0, [&](bool inside, const Region& piece) {
        if (!inside) return;
        std::vector<Point2> pts;
        for (const auto& l : piece.loops())
            pts.insert(pts.end(), l.pts.begin(), l.pts.end());
        ConvexPolygon hull = ConvexPolygon::hull_of(std::move(pts));
        if (!hull.degenerate()) pieces.push_back(std::move(hull));
    });
    return pieces;
}

// ---- hulls, sums, sweeps ----------------------------------------------------

ConvexPolygon convex_hull(std::vector<Point2> pts) { return ConvexPolygon::hull_of(std::move(pts)); }

ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.size() == 0 || b.size() == 0) return {};
    if (a.degenerate() || b.degenerate()) {
        std::vector<Point2> sums;
        for (auto& va : a.vertices())
            for (auto& vb : b.vertices()) sums.push_back(va + vb);
        return ConvexPolygon::hull_of(std::move(sums));
    }
    // classic CCW edge merge from the bottom-most vertices
    auto bottom = [](std::span<const Point2> v) {
        std::size_t k = 0;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i].y < v[k].y || (v[i].y == v[k].y && v[i].x < v[k].x)) k = i;
        return k;
    };
    const auto va = a.vertices(), vb = b.vertices();
    const std::size_t na = va.size(), nb = vb.size();
    std::size_t ia = bottom(va), ib = bottom(vb);
    std::vector<Point2> out;
    out.reserve(na + nb + 1);
    Point2 cur = va[ia] + vb[ib];
    for (std::size_t ea = 0, eb = 0; ea < na || eb < nb;) {
        out.push_back(cur);
        const Point2 da = va[(ia + 1) % na] - va[ia % na];
        const Point2 db = vb[(ib + 1) % nb] - vb[ib % nb];
        double c = ea < na && eb < nb ? cross(da, db) : (ea < na ? 1.0 : -1.0);
        if (c > 0) {
            cur = cur + da;
            ++ia;
            ++ea;
        } else if (c < 0) {
            cur = cur + db;
            ++ib;
            ++eb;
        } else {
            cur = cur + da + db;
            ++ia;
            ++ea;
            ++ib;
            ++eb;
        }
    }
    return ConvexPolygon::hull_of(std::move(out));
}

ConvexPolygon swept_hull(const ConvexPolygon& shape, Point2 from, Point2 to) {
    std::vector<Point2> pts;
    pts.reserve(2 * shape.size());
    for (auto& v : shape.vertices()) {
        pts.push_back(v + from);
        pts.push_back(v + to);
    }
    return ConvexPolygon::hull_of(std::move(pts));
}

// ---- intersection predicates -------------------------------------------------

bool intersects(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.degenerate() || b.degenerate()) return false;  // empty interiors
    auto separated_by = [](const ConvexPolygon& edges_of, const ConvexPolygon& other) {
        const auto v = edges_of.vertices();
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point2 e = v[(i + 1) % v.size()] - v[i];
            const Point2 n{-e.y, e.x};  // inward normal (CCW)
            const double ln = norm(n);
            double hi = -std::numeric_limits<double>::infinity();
            for (auto& w : other.vertices()) hi = std::max(hi, dot(n, w - v[i]));
            if (hi <= kSnapEps * ln) return true;  // other fully on/outside this edge
        }
        return false;
    };
    return !separated_by(a, b) && !separated_by(b, a);
}

bool intersects(const Region& r, const ConvexPolygon& c) {
    if (r.empty() || c.degenerate()) return false;
    const auto cv = c.vertices();
    for (const auto& l : r.loops()) {
        const std::size_t n = l.pts.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < cv.size(); ++j)
                if (proper_cross(l.pts[i], l.pts[(i + 1) % n], cv[j], cv[(j + 1) % cv.size()]))
                    return true;
    }
    for (auto& v : cv)
        if (r.classify(v) == PointClass::Inside) return true;
    for (const auto& l : r.loops())
        for (auto& v : l.pts)
            if (c.signed_depth(v) > kSnapEps) return true;
    return r.classify(c.centroid()) == PointClass::Inside;
}

// ---- interior point -----------------------------------------------------------

std::optional<Point2> interior_point(const Region& r) {
    if (r.empty()) return std::nullopt;
    std::vector<double> ys;
    for (const auto& l : r.loops())
        for (auto& p : l.pts) ys.push_back(p.y);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end(),
                         [](double a, double b) { return std::abs(a - b) <= 1e-12; }),
             ys.end());

    struct Slab {
        double y;
        double gap;
    };
    std::vector<Slab> slabs;
    for (std::size_t i = 0; i + 1 < ys.size(); ++i)
        slabs.push_back({0.5 * (ys[i] + ys[i + 1]), ys[i + 1] - ys[i]});
    std::stable_sort(slabs.begin(), slabs.end(),
                     [](const Slab& a, const Slab& b) { return a.gap > b.gap; });
    if (slabs.size() > 64) slabs.resize(64);

    for (const auto& slab : slabs) {
        std::vector<double> xs;
        for (const auto& l : r.loops()) {
            const std::size_t n = l.pts.size();
            for (std::size_t i = 0; i < n; ++i) {
                const Point2 a = l.pts[i], b = l.pts[(i + 1) % n];
                if ((a.y > slab.y) != (b.y > slab.y))
                    xs.push_back(a.x + (slab.y - a.y) / (b.y - a.y) * (b.x - a.x));
            }
        }
        if (xs.size() < 2) continue;
        std::sort(xs.begin(), xs.end());
        double best_w = 0.0, best_x = 0.0;
        for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
            const double w = xs[i + 1] - xs[i];
            if (w > best_w) {
                best_w = w;
                best_x = 0.5 * (xs[i] + xs[i + 1]);
            }
        }
        const Point2 p{best_x, slab.y};
        if (best_w > 0.0 && r.classify(p) == PointClass::Inside) return p;
    }
    // fallback: centroid of the largest loop
    const Loop* big = nullptr;
    double best = 0.0;
    for (const auto& l : r.loops())
        if (std::abs(l.signed_area()) > best) {
            best = std::abs(l.signed_area());
            big = &l;
        }
    if (big) {
        Point2 c{};
        for (auto& p : big->pts) c = c + p;
        c = (1.0 / static_cast<double>(big->pts.size())) * c;
        if (r.classify(c) == PointClass::Inside) return c;
    }
    return std::nullopt;
}

}  // namespace coverplan::geom
