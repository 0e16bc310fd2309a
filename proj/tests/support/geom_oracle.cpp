// Drawn-curve bracket oracle. The geometric model: cone points sit on the
// unit circle; the cut ray of cone point x_j is the outward radial ray
// { x_j * (1 + t), t > 0 }, which lies strictly outside the unit disk, so a
// curve crosses it only where the curve itself leaves the disk — and the
// drawings below leave the disk only on their winding spirals, once per unit
// letter. Crossing the ray anticlockwise around x_j reads as one positive
// letter on generator j, clockwise as one negative letter; the crossing word
// along the polygon is the free homotopy class. Everything is exact rational
// arithmetic; any zero sign in a predicate aborts the attempt and redraws
// with perturbed radii rather than guessing.

#include "support/geom_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace orbigold::oracle {
namespace {

Point sub(const Point& a, const Point& b) {
    return {a.first - b.first, a.second - b.second};
}

Rat det(const Point& a, const Point& b) {
    return a.first * b.second - a.second * b.first;
}

Rat dot(const Point& a, const Point& b) {
    return a.first * b.first + a.second * b.second;
}

int sign_of(const Rat& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

// (cos theta, sin theta) for tan(theta/2) = n/d, exactly on the unit circle.
Point half_angle_point(long long n, long long d) {
    Rat nn(n), dd(d);
    Rat denom = dd * dd + nn * nn;
    return {(dd * dd - nn * nn) / denom, 2 * nn * dd / denom};
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

// Snap to the 2^-20 grid: keeps every vertex coordinate on one small common
// denominator so the exact predicates stay cheap. The grid step is far below
// every clearance margin used by the construction.
Rat quantize(const Rat& v) {
    Rat scaled = v * 1048576;
    Int two_n = 2 * boost::multiprecision::numerator(scaled) + boost::multiprecision::denominator(scaled);
    Int q = floor_div(two_n, 2 * boost::multiprecision::denominator(scaled));
    return Rat(q, 1048576);
}

Point quantize(const Point& p) {
    return {quantize(p.first), quantize(p.second)};
}

// Sixteen exact unit directions, anticlockwise from (1, 0), roughly 22.5
// degrees apart. Consecutive gaps stay well under 90 degrees, so a radially
// monotone polygon over one full pass of the table winds exactly once.
const std::vector<Point>& direction_table() {
    static const std::vector<Point> table = [] {
        const std::pair<long long, long long> upper[] = {
            {0, 1}, {1, 5}, {2, 5}, {2, 3}, {1, 1}, {3, 2}, {12, 5}, {5, 1}};
        std::vector<Point> t;
        for (auto [n, d] : upper) t.push_back(half_angle_point(n, d));
        t.push_back({Rat(-1), Rat(0)});
        for (int k = 7; k >= 1; --k) t.push_back({t[k].first, -t[k].second});
        return t;
    }();
    return table;
}

Rat orient(const Point& a, const Point& b, const Point& c) {
    return det(sub(b, a), sub(c, a));
}

bool boxes_overlap(const Point& a, const Point& b, const Point& c, const Point& d) {
    auto lo = [](const Rat& x, const Rat& y) { return x < y ? x : y; };
    auto hi = [](const Rat& x, const Rat& y) { return x < y ? y : x; };
    return hi(a.first, b.first) >= lo(c.first, d.first) &&
           hi(c.first, d.first) >= lo(a.first, b.first) &&
           hi(a.second, b.second) >= lo(c.second, d.second) &&
           hi(c.second, d.second) >= lo(a.second, b.second);
}

struct PairCrossing {
    std::size_t seg_a;
    std::size_t seg_b;
    Point at;
    int sign;  // orientation of (direction of A, direction of B)
};

// All crossings between two closed polygons. Transversality is mandatory:
// any zero orientation with overlapping bounding boxes (endpoint contact,
// collinear overlap, coincident vertices) aborts the attempt.
std::vector<PairCrossing> transverse_crossings(const std::vector<Point>& A,
                                               const std::vector<Point>& B) {
    std::vector<PairCrossing> out;
    for (std::size_t i = 0; i < A.size(); ++i) {
        const Point& a = A[i];
        const Point& b = A[(i + 1) % A.size()];
        for (std::size_t j = 0; j < B.size(); ++j) {
            const Point& c = B[j];
            const Point& d = B[(j + 1) % B.size()];
            Rat o1 = orient(a, b, c), o2 = orient(a, b, d);
            Rat o3 = orient(c, d, a), o4 = orient(c, d, b);
            if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
                if (boxes_overlap(a, b, c, d))
                    throw oracle_degenerate("non-transverse contact between the curves");
                continue;
            }
            if (sign_of(o1) != sign_of(o2) && sign_of(o3) != sign_of(o4)) {
                Point ab = sub(b, a), cd = sub(d, c), rhs = sub(c, a);
                Rat denom = -det(ab, cd);  // determinant of columns (ab, -cd)
                Rat s = -det(rhs, cd) / denom;
                Point at{a.first + s * ab.first, a.second + s * ab.second};
                // Crossing sign: the bracket counts a crossing positively
                // when (second curve's direction, first curve's direction) is
                // a positively oriented frame in standard xy coordinates —
                // i.e. the source convention orients the disk opposite to the
                // anticlockwise cut-ray reading used here. Pinned against the
                // worked bracket on orders (3,4), where the drawn crossings
                // collapse to exactly the two golden terms; the uniqueness
                // sweep below it then fixes every remaining sign choice.
                out.push_back({i, j, at, sign_of(det(cd, ab))});
            }
        }
    }
    return out;
}

// The loop that follows A from the crossing all the way around, then B all
// the way around. The crossing point appears twice; both visits are genuine
// polygon vertices of the welded curve.
std::vector<Point> splice(const std::vector<Point>& A, std::size_t seg_a,
                          const std::vector<Point>& B, std::size_t seg_b, const Point& at) {
    std::vector<Point> out;
    out.reserve(A.size() + B.size() + 2);
    out.push_back(at);
    for (std::size_t k = 1; k <= A.size(); ++k) out.push_back(A[(seg_a + k) % A.size()]);
    out.push_back(at);
    for (std::size_t k = 1; k <= B.size(); ++k) out.push_back(B[(seg_b + k) % B.size()]);
    return out;
}

}  // namespace

std::vector<Point> cone_placement(const words::OrbifoldSignature& sig) {
    const unsigned r = sig.rank();
    if (r < 2 || r > 6)
        throw std::invalid_argument("drawn-curve oracle supports 2 to 6 cone points");
    const double pi = 3.14159265358979323846;
    std::vector<Point> pts;
    for (unsigned i = 0; i < r; ++i) {
        // Offset start angle: deliberately NOT the engine's placement, so
        // agreement also exercises independence from the marked-point layout.
        double theta = 0.4 + 2.0 * pi * i / r;
        while (theta > pi) theta -= 2.0 * pi;
        long long num = std::llround(std::tan(theta / 2) * 256.0);
        pts.push_back(quantize(half_angle_point(num, 256)));
    }
    // Exact sanity: pairwise distinct and in convex anticlockwise position.
    for (unsigned i = 0; i < r; ++i)
        for (unsigned j = i + 1; j < r; ++j) {
            if (pts[i] == pts[j]) throw std::logic_error("cone placement collision");
            for (unsigned k = j + 1; k < r; ++k)
                if (orient(pts[i], pts[j], pts[k]) <= 0)
                    throw std::logic_error("cone placement not convex anticlockwise");
        }
    return pts;
}

std::vector<Point> draw_loop(const words::OrbifoldSignature& sig,
                             const std::vector<unsigned>& expanded, int curve_index,
                             unsigned attempt) {
    const auto cones = cone_placement(sig);
    const auto& dirs = direction_table();
    const int K = 16;
    const Rat jitter = Rat(attempt, 65536);
    const Rat winding_base = curve_index == 0 ? Rat(1, 12) : Rat(1, 7);
    const Rat hub_base = curve_index == 0 ? Rat(1, 64) : Rat(1, 48);

    std::vector<Point> poly;
    if (expanded.empty()) {
        // Honest trivial loop: a tiny spiral circle around the centre. It
        // crosses no cut ray, and its crossings with the other curve must
        // cancel in the bracket.
        for (int k = 0; k <= K; ++k) {
            const Point& d = dirs[(attempt + k) % 16];
            Rat radius = (hub_base + jitter) * Rat(128 + k, 128);
            poly.push_back(quantize({radius * d.first, radius * d.second}));
        }
        return poly;
    }

    for (std::size_t t = 0; t < expanded.size(); ++t) {
        const Point& x = cones.at(expanded[t]);
        Rat rho = winding_base + Rat(static_cast<long long>(t), 2048) + jitter;
        Rat hub_radius = hub_base + Rat(static_cast<long long>(t), 8192) + jitter / 4;

        // Hub waypoint near the centre; its direction rotates with the visit
        // so the spokes spread out instead of stacking.
        const Point& h = dirs[(3 * t + 7 * static_cast<std::size_t>(curve_index) + attempt) % 16];
        poly.push_back(quantize({hub_radius * h.first, hub_radius * h.second}));

        // Entry direction: the table direction pointing most nearly back at
        // the centre, so the whole spoke segment stays inside the unit disk.
        std::size_t k0 = 0;
        Rat best = dot(dirs[0], x);
        for (std::size_t k = 1; k < dirs.size(); ++k) {
            Rat d = dot(dirs[k], x);
            if (d < best) {
                best = d;
                k0 = k;
            }
        }

        // One full anticlockwise pass of the direction table on a gently
        // growing radius: winds exactly once around x, and the exit sits
        // strictly outside the entry so the turn closes without touching.
        for (int k = 0; k <= K; ++k) {
            const Point& d = dirs[(k0 + static_cast<std::size_t>(k)) % 16];
            Rat radius = rho * Rat(128 + k, 128);
            poly.push_back(quantize({x.first + radius * d.first, x.second + radius * d.second}));
        }
    }
    return poly;
}

namespace {
std::vector<words::RawLetter> read_raw(const std::vector<Point>& cones,
                                       const std::vector<Point>& curve);
}

words::CyclicWord read_class(const words::OrbifoldSignature& sig,
                             const std::vector<Point>& curve) {
    return words::CyclicWord(sig, read_raw(cone_placement(sig), curve));
}

namespace {
std::vector<words::RawLetter> read_raw(const std::vector<Point>& cones,
                                       const std::vector<Point>& curve) {
    const std::size_t n = curve.size();

    // Every point of every cut ray has squared norm at least that of its cone
    // point, and squared norm along a segment peaks at an endpoint; segments
    // strictly inside the smallest cone radius can therefore be skipped.
    Rat ray_reach = dot(cones[0], cones[0]);
    for (const Point& x : cones) {
        Rat nx = dot(x, x);
        if (nx < ray_reach) ray_reach = nx;
    }
    std::vector<Rat> norms;
    norms.reserve(n);
    for (const Point& v : curve) norms.push_back(dot(v, v));

    for (std::size_t i = 0; i < n; ++i) {
        if (norms[i] < ray_reach) continue;
        for (const Point& x : cones)
            if (det(x, curve[i]) == 0 && dot(x, curve[i]) >= dot(x, x))
                throw oracle_degenerate("polygon vertex on a cut ray");
    }

    struct Hit {
        std::size_t seg;
        Rat s;
        unsigned gen;
        int direction;
    };
    std::vector<Hit> hits;
    for (std::size_t i = 0; i < n; ++i) {
        if (norms[i] < ray_reach && norms[(i + 1) % n] < ray_reach) continue;
        const Point& a = curve[i];
        const Point& b = curve[(i + 1) % n];
        Point ab = sub(b, a);
        for (unsigned j = 0; j < cones.size(); ++j) {
            const Point& x = cones[j];
            // a + s*ab = x + t*x: columns (ab, -x), right-hand side x - a.
            Rat denom = -det(ab, x);
            Point rhs = sub(x, a);
            if (denom == 0) {
                if (det(x, a) != 0) continue;  // parallel, off the ray's line
                // Collinear with the ray's line: harmless only while the
                // segment stays strictly short of the ray's base point.
                if (dot(x, a) < dot(x, x) && dot(x, b) < dot(x, x)) continue;
                throw oracle_degenerate("polygon segment collinear with a cut ray");
            }
            Rat s = -det(rhs, x) / denom;
            if (s <= 0 || s >= 1) continue;  // vertex contacts already excluded above
            Rat t = det(ab, rhs) / denom;
            if (t < 0) continue;
            if (t == 0) throw oracle_degenerate("polygon segment through a cone point");
            hits.push_back({i, s, j, sign_of(det(x, ab))});
        }
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& lhs, const Hit& rhs) {
        if (lhs.seg != rhs.seg) return lhs.seg < rhs.seg;
        return lhs.s < rhs.s;
    });
    std::vector<words::RawLetter> raw;
    raw.reserve(hits.size());
    for (const Hit& h : hits) raw.push_back({h.gen, h.direction});
    return raw;
}

std::vector<CrossingTerm> trace_attempts(const words::OrbifoldSignature& sig,
                                         const words::CyclicWord& alpha,
                                         const words::CyclicWord& beta) {
    const auto cones = cone_placement(sig);
    for (unsigned attempt = 0; attempt < 48; ++attempt) {
        try {
            auto A = draw_loop(sig, alpha.expand(), 0, attempt);
            auto B = draw_loop(sig, beta.expand(), 1, attempt);
            if (words::CyclicWord(sig, read_raw(cones, A)) != alpha)
                throw oracle_degenerate("alpha drawing reads back as a different class");
            if (words::CyclicWord(sig, read_raw(cones, B)) != beta)
                throw oracle_degenerate("beta drawing reads back as a different class");
            std::vector<CrossingTerm> out;
            for (const PairCrossing& c : transverse_crossings(A, B)) {
                auto welded = splice(A, c.seg_a, B, c.seg_b, c.at);
                auto raw = read_raw(cones, welded);
                out.push_back({c.sign, raw, words::CyclicWord(sig, raw)});
            }
            return out;
        } catch (const oracle_degenerate&) {
            continue;  // redraw with perturbed radii and hub angles
        }
    }
    throw std::runtime_error("drawn-curve oracle: every perturbed drawing was degenerate");
}
}  // namespace

loops::LoopCombination oracle_bracket(const words::OrbifoldSignature& sig,
                                      const words::CyclicWord& alpha,
                                      const words::CyclicWord& beta) {
    loops::LoopCombination out(sig);
    for (const CrossingTerm& t : trace_attempts(sig, alpha, beta)) out.add_term(t.cls, Rat(t.sign));
    return out;
}

std::vector<CrossingTerm> oracle_bracket_trace(const words::OrbifoldSignature& sig,
                                               const words::CyclicWord& alpha,
                                               const words::CyclicWord& beta) {
    return trace_attempts(sig, alpha, beta);
}

}  // namespace orbigold::oracle
