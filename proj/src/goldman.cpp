#include "orbigold/goldman.hpp"

#include <cmath>
#include <stdexcept>

namespace orbigold::goldman {

namespace {

// Exact unit-circle point from the tangent half-angle t: x = (1-t^2)/(1+t^2),
// y = 2t/(1+t^2). These satisfy x^2 + y^2 = 1 exactly for every rational t.
std::pair<Rat, Rat> circle_point(const Rat& t) {
    Rat t2 = t * t;
    Rat den = 1 + t2;
    return {(1 - t2) / den, (2 * t) / den};
}

Rat det(const std::pair<Rat, Rat>& u, const std::pair<Rat, Rat>& v) {
    return u.first * v.second - u.second * v.first;
}

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

ChordGeometry::ChordGeometry(unsigned r) {
    if (r < 2) throw std::invalid_argument("chord geometry needs at least two cone points");
    points_.reserve(r);
    for (unsigned i = 0; i < r; ++i) {
        double theta = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(r);
        if (2 * i == r) {
            points_.emplace_back(Rat(-1), Rat(0));  // angle pi: infinite half-angle tangent
            continue;
        }
        double t = std::tan(theta / 2.0);
        // Round the seed to a dyadic rational; the point itself is then exact.
        const long long denom = 1LL << 20;
        Rat tq(Int(static_cast<long long>(std::llround(t * static_cast<double>(denom)))),
               Int(denom));
        points_.push_back(circle_point(tq));
    }
    // The only property any predicate uses: pairwise distinct points in
    // strictly convex anticlockwise position, in index order. Verified
    // exactly, so the floating-point seeding above cannot leak inexactness.
    for (unsigned a = 0; a < r; ++a)
        for (unsigned b = a + 1; b < r; ++b)
            for (unsigned c = b + 1; c < r; ++c)
                if (orientation(a, b, c) <= 0)
                    throw std::logic_error("cone point placement lost its circular order");
}

std::pair<Rat, Rat> ChordGeometry::chord_direction(unsigned i, unsigned j) const {
    if (i == j) throw std::invalid_argument("degenerate chord has no direction");
    const auto& p = points_.at(i);
    const auto& q = points_.at(j);
    return {q.first - p.first, q.second - p.second};
}

std::pair<Rat, Rat> ChordGeometry::tangent_direction(unsigned k) const {
    const auto& p = points_.at(k);
    return {-p.second, p.first};
}

int ChordGeometry::det_sign(const std::pair<Rat, Rat>& u, const std::pair<Rat, Rat>& v) {
    return sign_of(det(u, v));
}

int ChordGeometry::orientation(unsigned a, unsigned b, unsigned c) const {
    const auto& pa = points_.at(a);
    const auto& pb = points_.at(b);
    const auto& pc = points_.at(c);
    std::pair<Rat, Rat> ab{pb.first - pa.first, pb.second - pa.second};
    std::pair<Rat, Rat> ac{pc.first - pa.first, pc.second - pa.second};
    return sign_of(det(ab, ac));
}

bool ChordGeometry::chords_cross(unsigned i, unsigned j, unsigned k, unsigned l) const {
    return orientation(i, j, k) * orientation(i, j, l) < 0 &&
           orientation(k, l, i) * orientation(k, l, j) < 0;
}

std::vector<Interval> intervals_of(const std::vector<unsigned>& expanded, Owner owner) {
    std::vector<Interval> gaps;
    const std::size_t m = expanded.size();
    gaps.reserve(m);
    for (std::size_t t = 0; t < m; ++t)
        gaps.push_back(Interval{owner, static_cast<unsigned>(t), expanded[t],
                                expanded[(t + 1) % m]});
    return gaps;
}

std::vector<AdmissiblePair> admissible_pairs_two_points(const std::vector<unsigned>& alpha,
                                                        const std::vector<unsigned>& beta,
                                                        const words::OrbifoldSignature& sig) {
    if (sig.rank() != 2)
        throw std::invalid_argument("two-point pair rule requires exactly two cone points");

    std::vector<AdmissiblePair> pairs;
    for (const Interval& red : intervals_of(alpha, Owner::red)) {
        if (red.before_gen == red.after_gen) continue;  // red endpoints must differ
        for (const Interval& blue : intervals_of(beta, Owner::blue)) {
            if (blue.before_gen != blue.after_gen) continue;  // blue endpoints must agree
            // Sign table (endpoints written in the figures' reading order,
            // which is reversed traversal): red ab with blue aa and red ba
            // with blue bb are +1, the other two combinations -1. Along the
            // traversal reading used by Interval this says: +1 exactly when
            // the blue gap sits at the cone point the red gap runs towards.
            int sign = (blue.before_gen == red.after_gen) ? +1 : -1;
            pairs.push_back(AdmissiblePair{red, blue, sign});
        }
    }
    return pairs;
}

namespace detail {

std::vector<AdmissiblePair> admissible_pairs_general_with_senses(
    const std::vector<unsigned>& alpha, const std::vector<unsigned>& beta,
    const words::OrbifoldSignature& sig, int sense_at_blue_start, int sense_at_blue_end) {
    if (sig.rank() < 2)
        throw std::invalid_argument("general pair rule requires at least two cone points");
    ChordGeometry geo(sig.rank());

    std::vector<AdmissiblePair> pairs;
    for (const Interval& red : intervals_of(alpha, Owner::red)) {
        const unsigned i = red.before_gen, j = red.after_gen;
        if (i == j) continue;  // a red gap needs two distinct cone points
        const auto red_dir = geo.chord_direction(i, j);

        for (const Interval& blue : intervals_of(beta, Owner::blue)) {
            const unsigned k = blue.before_gen, l = blue.after_gen;

            bool admissible = false;
            int sign = 0;

            // Crossing orientation convention, uniform across the branches:
            // a crossing counts with the sign of the frame (blue direction,
            // red direction). In the degenerate branch the blue connector
            // slips CLOCKWISE past its cone point, so its direction is the
            // reversed anticlockwise tangent and the sign reduces to
            // det(red, tangent). The convention is pinned twice over: the
            // two-cone-point branch against the worked golden brackets, the
            // two chord branches against the drawn-curve oracle sweeps.
            if (k == l) {
                // Degenerate blue gap: a strand staying at x_k. It meets the
                // red chord exactly when the chord ends at x_k; no further
                // condition.
                admissible = (k == i || k == j);
                if (admissible) sign = ChordGeometry::det_sign(red_dir, geo.tangent_direction(k));
            } else if ((i == k && j == l) || (i == l && j == k)) {
                // Equal chords overlap instead of crossing in one point.
                admissible = false;
            } else if (i != k && i != l && j != k && j != l) {
                admissible = geo.chords_cross(i, j, k, l);
                if (admissible)
                    sign = ChordGeometry::det_sign(geo.chord_direction(k, l), red_dir);
            } else {
                // Exactly one shared endpoint: the chords span a genuine
                // triangle, and whether the nearby strands cross is settled
                // by which side of the blue chord the red one leaves on. The
                // two cases (shared cone point at the blue gap's start vs at
                // its end) take opposite orientation senses.
                const unsigned shared = (k == i || k == j) ? k : l;
                const unsigned red_other = (shared == i) ? j : i;
                const unsigned blue_other = (shared == k) ? l : k;
                const int orient = geo.orientation(shared, red_other, blue_other);
                const int wanted = (shared == k) ? sense_at_blue_start : sense_at_blue_end;
                admissible = (orient == wanted);
                if (admissible)
                    sign = ChordGeometry::det_sign(geo.chord_direction(k, l), red_dir);
            }

            if (admissible) {
                if (sign == 0)
                    throw std::logic_error("admissible pair with degenerate crossing sign");
                pairs.push_back(AdmissiblePair{red, blue, sign});
            }
        }
    }
    return pairs;
}

}  // namespace detail

std::vector<AdmissiblePair> admissible_pairs_general(const std::vector<unsigned>& alpha,
                                                     const std::vector<unsigned>& beta,
                                                     const words::OrbifoldSignature& sig) {
    return detail::admissible_pairs_general_with_senses(alpha, beta, sig, kSenseAtBlueStart,
                                                        kSenseAtBlueEnd);
}

words::CyclicWord cut_and_insert(const words::OrbifoldSignature& sig,
                                 const std::vector<unsigned>& alpha, const Interval& red,
                                 const std::vector<unsigned>& beta, const Interval& blue) {
    auto as_word = [&sig](const std::vector<unsigned>& units) {
        std::vector<words::RawLetter> raw;
        raw.reserve(units.size());
        for (unsigned g : units) raw.emplace_back(g, 1);
        return words::CyclicWord(sig, raw);
    };
    if (beta.empty()) return as_word(alpha);
    if (alpha.empty()) return as_word(beta);

    if (red.position >= alpha.size() || blue.position >= beta.size())
        throw std::invalid_argument("cut position outside its word");

    std::vector<words::RawLetter> raw;
    raw.reserve(alpha.size() + beta.size());
    for (std::size_t t = 1; t <= alpha.size(); ++t)
        raw.emplace_back(alpha[(red.position + t) % alpha.size()], 1);
    for (std::size_t t = 1; t <= beta.size(); ++t)
        raw.emplace_back(beta[(blue.position + t) % beta.size()], 1);
    return words::CyclicWord(sig, raw);
}

loops::LoopCombination goldman_bracket(const words::OrbifoldSignature& sig,
                                       const words::CyclicWord& alpha,
                                       const words::CyclicWord& beta, PairRule rule) {
    loops::LoopCombination out(sig);
    if (alpha.empty() || beta.empty()) return out;

    const std::vector<unsigned> a = alpha.expand();
    const std::vector<unsigned> b = beta.expand();
    const std::vector<AdmissiblePair> pairs = (rule == PairRule::two_points)
                                                  ? admissible_pairs_two_points(a, b, sig)
                                                  : admissible_pairs_general(a, b, sig);
    for (const AdmissiblePair& p : pairs)
        out.add_term(cut_and_insert(sig, a, p.red, b, p.blue), p.sign);
    return out;
}

loops::LoopCombination goldman_bracket(const loops::LoopCombination& a,
                                       const loops::LoopCombination& b) {
    if (a.signature() != b.signature())
        throw std::invalid_argument("bracket of combinations: signature mismatch");
    loops::LoopCombination out(a.signature());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            loops::LoopCombination part = goldman_bracket(a.signature(), wa, wb);
            part *= ca * cb;
            out += part;
        }
    return out;
}

}  // namespace orbigold::goldman
