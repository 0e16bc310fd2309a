#pragma once

// Normalized Hochschild chains of small commutative algebras, with the
// boundary b, the degree-lowering cyclic operator B, and the shuffle
// product; on top of them the totalized tower TC with its inclusion q,
// shift pi, and connecting-style map T, mirroring the Gysin-sequence shape
// at the chain level.
//
// Internal degrees are nonpositive: a chain with p inner slots sits in
// degree -p, so b has degree +1 and B degree -1. In total degree k the tower
// is the finite sum of the chain spaces in degrees k, k+2, k+4, ..., 0, with
// differential d(c)_i = b(c_i) + B(c_{i+1}).

#include "orbigold/qlinalg.hpp"
#include "orbigold/rational.hpp"
#include "orbigold/report.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace orbigold::hochschild {

using Vec = std::vector<Rat>;

// A small unital commutative algebra over the rationals. Basis element 0 is
// the unit; the other basis elements descend to a basis of A modulo the unit
// line, which is what the normalized inner slots are built from.
class SmallAlgebra {
public:
    SmallAlgebra(std::string name, std::vector<std::vector<Vec>> table);

    static SmallAlgebra ground_field();          // the rationals themselves
    static SmallAlgebra dual_numbers();          // k[x]/(x^2)
    static SmallAlgebra cyclic_group_algebra();  // k[Z/2]

    const std::string& name() const { return name_; }
    std::size_t dim() const { return table_.size(); }
    const Vec& product(std::size_t i, std::size_t j) const { return table_[i][j]; }

    // Unit behavior, associativity, commutativity.
    CheckReport validate() const;

private:
    std::string name_;
    std::vector<std::vector<Vec>> table_;
};

// The normalized chain spaces C_p (p inner slots, each running over the
// non-unit basis elements) for p up to a materialization bound, with the
// operators between them assembled as exact matrices. Identity sweeps run on
// slot counts up to max_slots; spaces two steps beyond are materialized so
// every composite stays inside exact data.
class MixedComplex {
public:
    MixedComplex(SmallAlgebra algebra, std::size_t max_slots);

    const SmallAlgebra& algebra() const { return algebra_; }
    std::size_t max_slots() const { return max_slots_; }

    std::size_t chain_dim(int p) const;

    qlinalg::QMat boundary(int p) const;  // b: C_p -> C_{p-1}
    qlinalg::QMat connes_B(int p) const;  // B: C_p -> C_{p+1}

    // Shuffle product C_p x C_q -> C_{p+q} with the interleaving signs.
    Vec shuffle(int p, const Vec& x, int q, const Vec& y) const;

    // Tower in total degree k <= 0: components (p, index) with p running
    // down from -k in steps of two.
    std::vector<std::pair<int, std::size_t>> tower_basis(int k) const;
    qlinalg::QMat tower_d(int k) const;   // TC_k -> TC_{k+1}
    qlinalg::QMat tower_q(int k) const;   // C_{-k} -> TC_k, the top component
    qlinalg::QMat tower_pi(int k) const;  // TC_k -> TC_{k+2}, drops the top
    qlinalg::QMat tower_T(int k) const;   // TC_k -> C_{-(k+1)}, b of the top

private:
    // Decode/encode a basis index of C_p as (i0, inner slots).
    std::vector<std::size_t> decode(int p, std::size_t index) const;
    std::size_t encode(const std::vector<std::size_t>& tensor) const;
    void add_tensor(Vec& acc, const std::vector<std::size_t>& tensor, const Rat& coeff) const;

    SmallAlgebra algebra_;
    std::size_t max_slots_;
    std::size_t materialized_;  // bases exist for p <= materialized_
};

// b^2 = 0, B^2 = 0, b B + B b = 0 on all materialized slot counts.
CheckReport verify_mixed_identities(const MixedComplex& mc);

// Shuffle graded commutativity and associativity, and b as a chain map for
// the shuffle (Leibniz rule for the product).
CheckReport verify_shuffle_laws(const MixedComplex& mc);

// q and pi strict chain maps, the per-degree split exactness of
// 0 -> C -> TC -> TC[2] -> 0 by rank bookkeeping, the two zero residuals
// making T a chain map, and agreement of T on homology with the connecting
// homomorphism read off the short exact sequence.
CheckReport verify_tower_maps(const MixedComplex& mc);

// Strict chain-level derivation rule B(sh(x,y)) = sh(Bx,y) + (-1)^p sh(x,By)
// on basis pairs. This FAILS in general: already for the dual numbers,
// B(x * x) = 0 while B(x)*x + x*B(x) = 2 (x|x), and the defect is the
// boundary of (1|x|x). It holds only after passing to homology, which is
// what verify_homology_identities certifies; this strict form is reported
// for documentation, not asserted.
CheckReport check_shuffle_derivation(const MixedComplex& mc);

// The strict seven-term second-order identity for B against the shuffle
// product on basis triples. Like the strict derivation rule it can fail at
// chain level and is reported rather than asserted.
CheckReport check_shuffle_second_order(const MixedComplex& mc);

// The honest forms of the two statements above: on every pair/triple drawn
// from bases of the cycle spaces ker(b), the derivation defect and the
// seven-term defect are exact boundaries — equivalently, B induces a
// derivation for the shuffle product on homology and the induced operator
// is second order there. Exact arithmetic throughout.
CheckReport verify_homology_identities(const MixedComplex& mc);

}  // namespace orbigold::hochschild
