#pragma once

// The Goldman bracket of free loops on a disk with r cone points, computed by
// cut-and-insert on cyclic words. A loop class is presented as a cyclic word;
// expanding powers to unit letters marks one visit per letter at its cone
// point. The gaps ("intervals") between consecutive visits of the first loop
// are colored red, those of the second blue. A red/blue pair of gaps is
// admissible when the chords they span in a fixed circular placement of the
// cone points cross (with tie-break rules at shared endpoints and for
// degenerate blue gaps); each admissible pair contributes, with a sign given
// by the orientation of the crossing, the class obtained by cutting both
// loops at their gaps and joining them into one circle preserving both cyclic
// orders. The signed sum over admissible pairs is the bracket.

#include "orbigold/cyclic_words.hpp"
#include "orbigold/loop_module.hpp"
#include "orbigold/rational.hpp"

#include <utility>
#include <vector>

namespace orbigold::goldman {

enum class Owner { red, blue };

// The gap between unit letter `position` and unit letter `position + 1`
// (cyclically) of an expanded word. Endpoint generators are recorded in
// traversal order: the cone point visited just before the gap, then the one
// visited just after.
struct Interval {
    Owner owner;
    unsigned position;
    unsigned before_gen;
    unsigned after_gen;
    bool operator==(const Interval&) const = default;
};

struct AdmissiblePair {
    Interval red;
    Interval blue;
    int sign;  // +1 or -1
    bool operator==(const AdmissiblePair&) const = default;
};

// Exact model of the marked disk: cone point x_i sits on the unit circle near
// angle 2*pi*i/r, anticlockwise with i. The coordinates are exact rationals
// on the circle (tangent half-angle points), so every geometric predicate
// below is an exact sign computation. Floating point only seeds the
// placement; the constructor verifies the required convex anticlockwise
// position exactly, and no predicate depends on anything beyond that order.
class ChordGeometry {
public:
    explicit ChordGeometry(unsigned r);

    unsigned rank() const { return static_cast<unsigned>(points_.size()); }
    const std::pair<Rat, Rat>& point(unsigned i) const { return points_.at(i); }

    // Direction of the oriented chord x_i -> x_j; requires i != j.
    std::pair<Rat, Rat> chord_direction(unsigned i, unsigned j) const;

    // Anticlockwise tangent of the circle at x_k; stands in for the direction
    // of a loop strand staying at one cone point (degenerate blue gap).
    std::pair<Rat, Rat> tangent_direction(unsigned k) const;

    // Sign of det(u v), i.e. of the crossing u -> v: +1, 0, or -1.
    static int det_sign(const std::pair<Rat, Rat>& u, const std::pair<Rat, Rat>& v);

    // Orientation of the point triple (x_a, x_b, x_c): +1 anticlockwise.
    int orientation(unsigned a, unsigned b, unsigned c) const;

    // Strict interior crossing of chords [x_i, x_j] and [x_k, x_l]; the four
    // indices must be pairwise distinct.
    bool chords_cross(unsigned i, unsigned j, unsigned k, unsigned l) const;

private:
    std::vector<std::pair<Rat, Rat>> points_;
};

// All gaps of an expanded word, in traversal order. Empty input has no gaps.
std::vector<Interval> intervals_of(const std::vector<unsigned>& expanded, Owner owner);

// The two-cone-point procedure, transliterated: a pair is admissible exactly
// when the red gap endpoints carry different generators and the blue gap
// endpoints equal ones; the sign is +1 when the blue gap's generator is the
// one the red gap runs towards, -1 when it is the one the red gap leaves.
// Throws unless the signature has exactly two cone points.
std::vector<AdmissiblePair> admissible_pairs_two_points(const std::vector<unsigned>& alpha,
                                                        const std::vector<unsigned>& beta,
                                                        const words::OrbifoldSignature& sig);

// The general procedure for any r >= 2, by exact chord geometry. Restricted
// to r = 2 it reproduces admissible_pairs_two_points exactly.
std::vector<AdmissiblePair> admissible_pairs_general(const std::vector<unsigned>& alpha,
                                                     const std::vector<unsigned>& beta,
                                                     const words::OrbifoldSignature& sig);

namespace detail {
// The shared-endpoint tie-break, parameterized by the orientation senses for
// the two cases (shared point at the blue gap's start / at its end). Exists
// so the test suite can demonstrate that the frozen senses are the unique
// choice agreeing with the drawn-curve oracle; production code goes through
// admissible_pairs_general.
std::vector<AdmissiblePair> admissible_pairs_general_with_senses(
    const std::vector<unsigned>& alpha, const std::vector<unsigned>& beta,
    const words::OrbifoldSignature& sig, int sense_at_blue_start, int sense_at_blue_end);
}  // namespace detail

// Frozen tie-break senses: a one-shared-endpoint pair with all-distinct
// remaining endpoints is admissible iff orientation(shared, red-other,
// blue-other) equals the sense for its case. Pinned by sweeping both loops'
// drawn-curve intersections against all four candidate conventions (see
// goldman oracle tests) and frozen by golden brackets; the two cases take
// opposite senses.
inline constexpr int kSenseAtBlueStart = +1;
inline constexpr int kSenseAtBlueEnd = -1;

// Cuts alpha at the red gap and beta at the blue gap, joins the two linear
// arcs (each read from its cut onward) into one circle, and normalizes. An
// empty word acts as the identity: the other word is returned unchanged.
words::CyclicWord cut_and_insert(const words::OrbifoldSignature& sig,
                                 const std::vector<unsigned>& alpha, const Interval& red,
                                 const std::vector<unsigned>& beta, const Interval& blue);

enum class PairRule { general, two_points };

// The bracket of two loop classes: the signed sum of cut-and-insert classes
// over all admissible pairs. Integer structure constants, exact.
loops::LoopCombination goldman_bracket(const words::OrbifoldSignature& sig,
                                       const words::CyclicWord& alpha,
                                       const words::CyclicWord& beta,
                                       PairRule rule = PairRule::general);

// Bilinear extension to combinations.
loops::LoopCombination goldman_bracket(const loops::LoopCombination& a,
                                       const loops::LoopCombination& b);

}  // namespace orbigold::goldman
