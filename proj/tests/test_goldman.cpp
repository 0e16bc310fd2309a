// The loop bracket on the marked disk: worked examples frozen as goldens,
// cut-and-insert mechanics, the exact chord geometry, and agreement of the
// general pairing rule with the two-cone-point one.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "orbigold/cyclic_words.hpp"
#include "orbigold/goldman.hpp"
#include "orbigold/loop_module.hpp"

using namespace orbigold;
using goldman::Interval;
using goldman::Owner;
using goldman::PairRule;
using words::CyclicWord;
using words::OrbifoldSignature;

namespace {

CyclicWord w(const OrbifoldSignature& sig, const std::string& text) {
    return CyclicWord(sig, words::parse_word(text, sig));
}

loops::LoopCombination bracket(const OrbifoldSignature& sig, const std::string& a,
                               const std::string& b, PairRule rule = PairRule::general) {
    return goldman::goldman_bracket(sig, w(sig, a), w(sig, b), rule);
}

// Enumerate every class with expanded length in [1, max_len] over sig by
// normalizing all unit-letter strings and deduplicating.
std::vector<CyclicWord> classes_up_to(const OrbifoldSignature& sig, std::size_t max_len) {
    std::vector<CyclicWord> out;
    std::vector<unsigned> digits;
    for (std::size_t len = 1; len <= max_len; ++len) {
        digits.assign(len, 0);
        while (true) {
            std::vector<words::RawLetter> raw;
            for (unsigned d : digits) raw.push_back({d, 1});
            CyclicWord word(sig, raw);
            if (!word.empty()) out.push_back(word);
            std::size_t i = 0;
            for (; i < len; ++i) {
                if (++digits[i] < sig.rank()) break;
                digits[i] = 0;
            }
            if (i == len) break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

TEST_CASE("worked example: orders (2,4) kill the bracket of a^2 b and a b^2") {
    OrbifoldSignature sig = OrbifoldSignature::parse("2,4");
    CHECK(bracket(sig, "aab", "abb", PairRule::general).is_zero());
    CHECK(bracket(sig, "aab", "abb", PairRule::two_points).is_zero());
}

TEST_CASE("worked example: orders (3,4) give the two-term bracket") {
    OrbifoldSignature sig = OrbifoldSignature::parse("3,4");
    loops::LoopCombination expected(sig);
    expected.add_term(w(sig, "babbaa"), Rat(1));
    expected.add_term(w(sig, "bbabaa"), Rat(-1));

    loops::LoopCombination general = bracket(sig, "aab", "abb", PairRule::general);
    loops::LoopCombination two = bracket(sig, "aab", "abb", PairRule::two_points);
    CHECK(general == expected);
    CHECK(two == expected);
    CHECK(general.str() == "-1*abaabb +1*abbaab");
}

TEST_CASE("the trivial class brackets to zero with everything") {
    OrbifoldSignature sig = OrbifoldSignature::parse("3,4");
    for (const char* other : {"a", "ab", "aab", "abb", "abaabb"}) {
        CHECK(goldman::goldman_bracket(sig, CyclicWord{}, w(sig, other)).is_zero());
        CHECK(goldman::goldman_bracket(sig, w(sig, other), CyclicWord{}).is_zero());
    }
}

TEST_CASE("single-letter classes are central (sample; exhaustive in acceptance)") {
    for (const char* orders : {"2,3", "3,4", "2,2,2"}) {
        OrbifoldSignature sig = OrbifoldSignature::parse(orders);
        std::vector<CyclicWord> singles;
        for (unsigned g = 0; g < sig.rank(); ++g)
            for (unsigned e = 1; e < sig.order(g); ++e)
                singles.push_back(CyclicWord(sig, {{g, e}}));
        for (const CyclicWord& s : singles)
            for (const CyclicWord& other : classes_up_to(sig, 4)) {
                CHECK(goldman::goldman_bracket(sig, s, other).is_zero());
                CHECK(goldman::goldman_bracket(sig, other, s).is_zero());
            }
    }
}

TEST_CASE("intervals of an expanded word record traversal-order endpoints") {
    std::vector<unsigned> expanded = {0, 0, 1};  // a a b
    auto gaps = goldman::intervals_of(expanded, Owner::red);
    REQUIRE(gaps.size() == 3);
    CHECK(gaps[0] == Interval{Owner::red, 0, 0, 0});  // between the two a's
    CHECK(gaps[1] == Interval{Owner::red, 1, 0, 1});  // a -> b
    CHECK(gaps[2] == Interval{Owner::red, 2, 1, 0});  // b -> wrap to a
    CHECK(goldman::intervals_of({}, Owner::blue).empty());
    auto single = goldman::intervals_of({1}, Owner::blue);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == Interval{Owner::blue, 0, 1, 1});
}

TEST_CASE("cut and insert splices both cyclic orders") {
    OrbifoldSignature sig = OrbifoldSignature::parse("3,4");
    std::vector<unsigned> alpha = {0, 0, 1};  // a a b
    std::vector<unsigned> beta = {0, 1, 1};   // a b b

    // Cut alpha between letters 1 and 2 (gap a->b), beta between letters 1
    // and 2 (gap b->b): arcs (b a a) and (b a b) joined read b a a b a b,
    // which normalizes to the canonical class of a b^2 a^2 b.
    Interval red{Owner::red, 1, 0, 1};
    Interval blue{Owner::blue, 1, 1, 1};
    CyclicWord welded = goldman::cut_and_insert(sig, alpha, red, beta, blue);
    CHECK(welded == w(sig, "abbaab"));

    // An empty word acts as the identity on the other side.
    CHECK(goldman::cut_and_insert(sig, {}, red, beta, blue) == w(sig, "abb"));
    CHECK(goldman::cut_and_insert(sig, alpha, red, {}, blue) == w(sig, "aab"));
}

TEST_CASE("cut and insert respects both cyclic orders on a bigger instance") {
    OrbifoldSignature sig = OrbifoldSignature::parse("3,4,5");
    std::vector<unsigned> alpha = {0, 1, 2, 1};  // a b c b
    std::vector<unsigned> beta = {2, 0, 2};      // c a c
    // Cut alpha after position 2 (gap c->b), beta after position 0 (gap c->a):
    // arcs (b a b c) and (a c c), welded word b a b c a c c.
    Interval red{Owner::red, 2, 2, 1};
    Interval blue{Owner::blue, 0, 2, 0};
    CyclicWord welded = goldman::cut_and_insert(sig, alpha, red, beta, blue);
    CHECK(welded == CyclicWord(sig, {{1, 1}, {0, 1}, {1, 1}, {2, 1}, {0, 1}, {2, 2}}));
}

TEST_CASE("two-point rule requires exactly two cone points") {
    OrbifoldSignature sig = OrbifoldSignature::parse("2,2,2");
    CHECK_THROWS_AS(bracket(sig, "ab", "bc", PairRule::two_points), std::invalid_argument);
}

TEST_CASE("chord geometry: convex anticlockwise placement, exact predicates") {
    for (unsigned r = 3; r <= 6; ++r) {
        goldman::ChordGeometry geom(r);
        REQUIRE(geom.rank() == r);
        // Points on the unit circle, anticlockwise: every ordered triple
        // i < j < k is positively oriented.
        for (unsigned i = 0; i < r; ++i) {
            const auto& [x, y] = geom.point(i);
            CHECK(x * x + y * y == Rat(1));
            for (unsigned j = i + 1; j < r; ++j)
                for (unsigned k = j + 1; k < r; ++k) CHECK(geom.orientation(i, j, k) == 1);
        }
    }
    goldman::ChordGeometry quad(4);
    CHECK(quad.chords_cross(0, 2, 1, 3));       // diagonals of a convex quad
    CHECK(quad.chords_cross(2, 0, 3, 1));       // orientation-independent
    CHECK_FALSE(quad.chords_cross(0, 1, 2, 3));  // disjoint sides
    CHECK_FALSE(quad.chords_cross(1, 2, 3, 0));

    goldman::ChordGeometry tri(3);
    // det sign of tangent vs chord: tangent at 0 points anticlockwise.
    CHECK(goldman::ChordGeometry::det_sign(tri.tangent_direction(0),
                                           tri.chord_direction(0, 1)) != 0);
}

TEST_CASE("general rule restricted to two cone points matches the special rule") {
    for (const char* orders : {"2,4", "3,4", "5,5"}) {
        OrbifoldSignature sig = OrbifoldSignature::parse(orders);
        auto classes = classes_up_to(sig, 4);
        for (const CyclicWord& a : classes)
            for (const CyclicWord& b : classes) {
                auto pg = goldman::admissible_pairs_general(a.expand(), b.expand(), sig);
                auto pt = goldman::admissible_pairs_two_points(a.expand(), b.expand(), sig);
                CHECK(pg == pt);
                CHECK(goldman::goldman_bracket(sig, a, b, PairRule::general) ==
                      goldman::goldman_bracket(sig, a, b, PairRule::two_points));
            }
    }
}

TEST_CASE("bilinear extension agrees with termwise brackets") {
    OrbifoldSignature sig = OrbifoldSignature::parse("3,4");
    loops::LoopCombination x(sig), y(sig);
    x.add_term(w(sig, "aab"), Rat(2));
    x.add_term(w(sig, "ab"), Rat(-1, 3));
    y.add_term(w(sig, "abb"), Rat(1));
    y.add_term(w(sig, "b"), Rat(5));

    loops::LoopCombination expected(sig);
    expected += Rat(2) * goldman::goldman_bracket(sig, w(sig, "aab"), w(sig, "abb"));
    expected += Rat(10) * goldman::goldman_bracket(sig, w(sig, "aab"), w(sig, "b"));
    expected += Rat(-1, 3) * goldman::goldman_bracket(sig, w(sig, "ab"), w(sig, "abb"));
    expected += Rat(-5, 3) * goldman::goldman_bracket(sig, w(sig, "ab"), w(sig, "b"));
    CHECK(goldman::goldman_bracket(x, y) == expected);
}

TEST_CASE("admissible pairs carry unit signs and valid gap positions") {
    OrbifoldSignature sig = OrbifoldSignature::parse("2,3,4");
    auto classes = classes_up_to(sig, 3);
    for (const CyclicWord& a : classes)
        for (const CyclicWord& b : classes) {
            auto alpha = a.expand();
            auto beta = b.expand();
            for (const auto& pair : goldman::admissible_pairs_general(alpha, beta, sig)) {
                CHECK((pair.sign == 1 || pair.sign == -1));
                CHECK(pair.red.owner == Owner::red);
                CHECK(pair.blue.owner == Owner::blue);
                CHECK(pair.red.position < alpha.size());
                CHECK(pair.blue.position < beta.size());
            }
        }
}
