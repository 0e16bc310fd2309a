#pragma once

// Finite-dimensional graded-commutative algebras carrying a degree +1
// square-zero operator D, the bracket derived from D's failure to be a
// derivation, and the checks tying them together: the seven-term identity
// expressing that D is a second-order operator, the Leibniz rule for the
// derived bracket, and the bracket's graded antisymmetry and Jacobi identity
// in the shifted grading.
//
// On top of that sits the Gysin-sequence construction: an exact couple
//   ... -> B_i -q-> H_i -c-> H_{i-2} -T-> B_{i-1} -q-> H_{i-1} -> ...
// with Delta = T o q, whose string bracket {x,y} = (-1)^{|x|} q(T(x) * T(y))
// is a graded Lie bracket on H, and T an anti-morphism onto the derived
// bracket. Synthetic instances are built from any algebra whose operator is
// acyclic, by totalizing the tower of its shifted copies.

#include "orbigold/qlinalg.hpp"
#include "orbigold/rational.hpp"
#include "orbigold/report.hpp"
#include "orbigold/sweep.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orbigold::bv {

using Vec = std::vector<Rat>;

class GradedBVData {
public:
    // Structure constants start all-zero; fill with set_product/set_d.
    GradedBVData(std::string name, std::vector<int> degrees);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return degrees_.size(); }
    int degree(std::size_t i) const { return degrees_[i]; }
    const std::vector<int>& degrees() const { return degrees_; }

    void set_product(std::size_t i, std::size_t j, Vec value);
    const Vec& product(std::size_t i, std::size_t j) const { return prod_[i][j]; }

    void set_d(qlinalg::QMat d);
    const qlinalg::QMat& d_matrix() const { return d_; }

    Vec multiply(const Vec& a, const Vec& b) const;
    Vec apply_d(const Vec& a) const { return d_.apply(a); }

    // Splits a vector into its homogeneous pieces, sparsely.
    std::vector<std::pair<int, Vec>> homogeneous_parts(const Vec& v) const;

    // Structural invariants: homogeneous product entries, graded
    // commutativity, associativity, D homogeneous of degree +1, D^2 = 0.
    // (Whether D is second order is a separate, reported check.)
    CheckReport validate_structure() const;

private:
    std::string name_;
    std::vector<int> degrees_;
    std::vector<std::vector<Vec>> prod_;
    qlinalg::QMat d_;
};

// {a; b} = (-1)^{|a|} D(a b) - (-1)^{|a|} D(a) b - a D(b), extended
// bilinearly from homogeneous pieces.
Vec derived_bracket(const GradedBVData& A, const Vec& a, const Vec& b);

// The seven-term second-order identity, on all basis triples (a, b, c):
// D(abc) - D(ab)c - (-1)^{|a|} a D(bc) - (-1)^{(|a|+1)|b|} b D(ac)
//   + D(a)bc + (-1)^{|a|} a D(b) c + (-1)^{|a|+|b|} a b D(c) = 0.
CheckReport check_bv_identity(const GradedBVData& A);

// The derived bracket as a derivation of its second slot, on all triples:
// {a; bc} = {a; b} c + (-1)^{|b|(|a|+1)} b {a; c}.
CheckReport check_leibniz(const GradedBVData& A);

// Graded antisymmetry and Jacobi of the derived bracket in the shifted
// grading (degrees raised by one), on all basis pairs/triples.
CheckReport check_derived_bracket_laws(const GradedBVData& A,
                                       sweep::Execution exec = sweep::Execution::serial);

// Deterministic family of structurally valid instances: exterior algebras
// with first- and second-order operators, truncated polynomial tensor
// exterior algebras, direct sums, plus a sprinkling of genuinely third-order
// operators (structurally valid, failing both reported identities — the
// two checks must agree on them too).
std::vector<GradedBVData> generate_bv_instances(std::size_t count, std::uint64_t seed);

// Zero operator perturbed on a single basis element into a genuinely
// third-order one (still degree +1 and square zero): structurally valid but
// failing both reported identities. The canonical negative example.
GradedBVData third_order_example();

struct GysinData {
    GradedBVData algebra;        // B with its product and operator Delta
    std::vector<int> h_degrees;  // degrees of the H basis
    qlinalg::QMat q;             // B -> H, degree 0
    qlinalg::QMat c;             // H -> H, degree -2
    qlinalg::QMat t;             // H -> B, degree +1
};

// Degree compatibility of the maps, the three zero compositions, exactness
// at every spot by rank bookkeeping per degree, and Delta = T o q.
CheckReport verify_gysin_structure(const GysinData& G);

// {x, y} = (-1)^{|x|} q(T(x) * T(y)) for x, y in H coordinates.
Vec string_bracket(const GysinData& G, const Vec& x, const Vec& y);

// Antisymmetry and Jacobi of the string bracket (shifted grading), on all
// basis pairs/triples of H.
CheckReport verify_string_lie(const GysinData& G,
                              sweep::Execution exec = sweep::Execution::serial);

// T({x,y}) = -{T(x), T(y)}_Delta on all basis pairs.
CheckReport verify_T_lie_morphism(const GysinData& G);

// Builds H as the homology of the tower totalization of (B, Delta); requires
// Delta to be acyclic (kernel = image), which makes H finitely supported.
// Throws std::invalid_argument otherwise.
GysinData synthesize_gysin(const GradedBVData& B);

// Is ker(Delta) = im(Delta)? The synthesizability criterion.
bool operator_acyclic(const GradedBVData& B);

}  // namespace orbigold::bv
