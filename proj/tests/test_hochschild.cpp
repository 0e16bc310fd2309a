// Normalized chains of three small commutative algebras, truncated at three
// inner slots: hand-computed operator matrices anchor the conventions, the
// homology dimensions are checked against their classical values (truncated
// polynomials: one class per positive degree; a semisimple group algebra:
// none), and the verification sweeps cover the mixed-complex identities,
// shuffle laws, tower maps with the connecting homomorphism, and the
// homology-level derivation statements.  The strict chain-level forms of the
// derivation rule are exercised as documented counterexamples.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "orbigold/hochschild.hpp"
#include "orbigold/qlinalg.hpp"

using namespace orbigold;
using hochschild::MixedComplex;
using hochschild::SmallAlgebra;

namespace {

std::size_t homology_dim(const MixedComplex& mc, int p) {
    const std::size_t dim = mc.chain_dim(p);
    const std::size_t rk_out = p > 0 ? qlinalg::rank(mc.boundary(p)) : 0;
    const std::size_t rk_in = qlinalg::rank(mc.boundary(p + 1));
    return dim - rk_out - rk_in;
}

}  // namespace

TEST_CASE("the built-in algebras validate and have the expected shape") {
    for (const auto& A : {SmallAlgebra::ground_field(), SmallAlgebra::dual_numbers(),
                          SmallAlgebra::cyclic_group_algebra()}) {
        const auto report = A.validate();
        CAPTURE(A.name());
        CAPTURE(report.witness);
        CHECK(report.pass);
    }
    CHECK(SmallAlgebra::ground_field().dim() == 1);
    CHECK(SmallAlgebra::dual_numbers().dim() == 2);
    CHECK(SmallAlgebra::cyclic_group_algebra().dim() == 2);

    // x * x = 0 in one, g * g = 1 in the other: the defining relations.
    CHECK(SmallAlgebra::dual_numbers().product(1, 1) == hochschild::Vec{Rat(0), Rat(0)});
    CHECK(SmallAlgebra::cyclic_group_algebra().product(1, 1) == hochschild::Vec{Rat(1), Rat(0)});
}

TEST_CASE("chain spaces have the expected dimensions") {
    MixedComplex field(SmallAlgebra::ground_field(), 3);
    CHECK(field.chain_dim(0) == 1);
    for (int p = 1; p <= 5; ++p) CHECK(field.chain_dim(p) == 0);

    // One non-unit basis element: every slot count gives a two-dimensional
    // space, led by either the unit or the generator.
    for (const auto& A : {SmallAlgebra::dual_numbers(), SmallAlgebra::cyclic_group_algebra()}) {
        MixedComplex mc(A, 3);
        for (int p = 0; p <= 5; ++p) CHECK(mc.chain_dim(p) == 2);
    }
}

TEST_CASE("operator matrices match the hand computation") {
    // Basis convention in every C_p here: index 0 is led by the unit, index 1
    // by the generator; all inner slots carry the generator.
    MixedComplex dual(SmallAlgebra::dual_numbers(), 3);

    // b alternates: zero from odd slot counts (the two end terms cancel),
    // and (1|x|..|x) -> 2 (x|x|..|x) from even ones, since x*x = 0 kills
    // every inner contraction.
    CHECK(dual.boundary(1).is_zero());
    CHECK(dual.boundary(3).is_zero());
    qlinalg::QMat b2(2, 2);
    b2.at(1, 0) = 2;
    CHECK(dual.boundary(2) == b2);

    // B(1) = 0, B(x) = (1|x); one slot up, B vanishes by normalization; from
    // two slots, B(x|x|x) puts the unit in front of all three rotations.
    qlinalg::QMat B0(2, 2);
    B0.at(0, 1) = 1;
    CHECK(dual.connes_B(0) == B0);
    CHECK(dual.connes_B(1).is_zero());
    qlinalg::QMat B2(2, 2);
    B2.at(0, 1) = 3;
    CHECK(dual.connes_B(2) == B2);

    // In the group algebra g*g = 1 instead: the inner contraction of
    // (g|g|g) survives as 2 (1|g) and the end terms of (1|g|g) give 2 (g|g).
    MixedComplex group(SmallAlgebra::cyclic_group_algebra(), 3);
    CHECK(group.boundary(1).is_zero());
    qlinalg::QMat g2(2, 2);
    g2.at(1, 0) = 2;
    g2.at(0, 1) = 2;
    CHECK(group.boundary(2) == g2);
    CHECK(group.connes_B(0) == B0);
}

TEST_CASE("homology dimensions match the classical values") {
    MixedComplex field(SmallAlgebra::ground_field(), 3);
    CHECK(homology_dim(field, 0) == 1);
    for (int p = 1; p <= 3; ++p) CHECK(homology_dim(field, p) == 0);

    // Truncated polynomials in characteristic zero: the algebra itself in
    // degree zero and one class in every higher degree.
    MixedComplex dual(SmallAlgebra::dual_numbers(), 3);
    CHECK(homology_dim(dual, 0) == 2);
    for (int p = 1; p <= 3; ++p) CHECK(homology_dim(dual, p) == 1);

    // The rational group algebra of Z/2 is semisimple: nothing above
    // degree zero.
    MixedComplex group(SmallAlgebra::cyclic_group_algebra(), 3);
    CHECK(homology_dim(group, 0) == 2);
    for (int p = 1; p <= 3; ++p) CHECK(homology_dim(group, p) == 0);
}

TEST_CASE("shuffle products match the hand computation") {
    MixedComplex dual(SmallAlgebra::dual_numbers(), 3);
    const hochschild::Vec x{Rat(0), Rat(1)};         // (x) in C_0
    const hochschild::Vec one_x{Rat(1), Rat(0)};     // (1|x) in C_1
    const hochschild::Vec x_x{Rat(0), Rat(1)};       // (x|x) in C_1
    const hochschild::Vec zero1{Rat(0), Rat(0)};

    // Scalars multiply into the lead: x . (1|x) = (x|x), on either side.
    CHECK(dual.shuffle(0, x, 1, one_x) == x_x);
    CHECK(dual.shuffle(1, one_x, 0, x) == x_x);
    // x . x = 0 in degree zero.
    CHECK(dual.shuffle(0, x, 0, x) == hochschild::Vec{Rat(0), Rat(0)});
    // An odd chain squares to zero under graded commutativity.
    CHECK(dual.shuffle(1, one_x, 1, one_x) == hochschild::Vec{Rat(0), Rat(0)});
}

TEST_CASE("mixed-complex identities hold for all three algebras") {
    for (const auto& A : {SmallAlgebra::ground_field(), SmallAlgebra::dual_numbers(),
                          SmallAlgebra::cyclic_group_algebra()}) {
        MixedComplex mc(A, 3);
        const auto report = hochschild::verify_mixed_identities(mc);
        CAPTURE(A.name());
        CAPTURE(report.witness);
        CHECK(report.pass);
    }
}

TEST_CASE("shuffle laws hold for all three algebras") {
    for (const auto& A : {SmallAlgebra::ground_field(), SmallAlgebra::dual_numbers(),
                          SmallAlgebra::cyclic_group_algebra()}) {
        MixedComplex mc(A, 3);
        const auto report = hochschild::verify_shuffle_laws(mc);
        CAPTURE(A.name());
        CAPTURE(report.witness);
        CHECK(report.pass);
    }
}

TEST_CASE("tower maps verify, connecting homomorphism included") {
    for (const auto& A : {SmallAlgebra::ground_field(), SmallAlgebra::dual_numbers(),
                          SmallAlgebra::cyclic_group_algebra()}) {
        MixedComplex mc(A, 3);
        const auto report = hochschild::verify_tower_maps(mc);
        CAPTURE(A.name());
        CAPTURE(report.witness);
        CHECK(report.pass);
    }
}

TEST_CASE("the cyclic operator is a derivation on homology but not on chains") {
    // Homology-level statement: holds everywhere.
    for (const auto& A : {SmallAlgebra::ground_field(), SmallAlgebra::dual_numbers(),
                          SmallAlgebra::cyclic_group_algebra()}) {
        MixedComplex mc(A, 3);
        const auto report = hochschild::verify_homology_identities(mc);
        CAPTURE(A.name());
        CAPTURE(report.witness);
        CHECK(report.pass);
    }

    // Strict chain-level statement: vacuously true over the ground field,
    // false as soon as a generator exists.
    MixedComplex field(SmallAlgebra::ground_field(), 3);
    CHECK(hochschild::check_shuffle_derivation(field).pass);
    CHECK(hochschild::check_shuffle_second_order(field).pass);

    MixedComplex dual(SmallAlgebra::dual_numbers(), 3);
    CHECK_FALSE(hochschild::check_shuffle_derivation(dual).pass);
    CHECK_FALSE(hochschild::check_shuffle_second_order(dual).pass);

    MixedComplex group(SmallAlgebra::cyclic_group_algebra(), 3);
    CHECK_FALSE(hochschild::check_shuffle_derivation(group).pass);
    CHECK_FALSE(hochschild::check_shuffle_second_order(group).pass);

    // The canonical counterexample, in coordinates: B(x * x) = B(0) = 0,
    // while B(x).x + x.B(x) = 2 (x|x) -- and the defect is exactly the
    // boundary of (1|x|x), so it vanishes on homology.
    const hochschild::Vec x{Rat(0), Rat(1)};
    const hochschild::Vec bx = [&] {
        hochschild::Vec v(2, Rat(0));
        const auto B0 = dual.connes_B(0);
        return B0.apply(x);
    }();
    hochschild::Vec rhs = dual.shuffle(1, bx, 0, x);
    const hochschild::Vec other = dual.shuffle(0, x, 1, bx);
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += other[i];
    CHECK(rhs == hochschild::Vec{Rat(0), Rat(2)});
    const hochschild::Vec one_x_x{Rat(1), Rat(0)};  // (1|x|x) in C_2
    CHECK(dual.boundary(2).apply(one_x_x) == rhs);
}
