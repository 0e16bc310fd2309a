#pragma once

// An explicit non-nilpotent graded Lie algebra: the string bracket of the
// quotient orbifold of a product of two odd spheres S^{2n+1} by a finite
// group. The equivariant loop homology has a bivariate basis in two families,
// e_{i,j} in even degrees and f_{i,j} in odd ones, and the bracket is given
// by closed binomial structure constants. This module houses the table and
// its verification (grading, graded Jacobi, the eigenvalue identity on
// ad(e_{1,1}), non-nilpotency).

#include "orbigold/rational.hpp"
#include "orbigold/report.hpp"
#include "orbigold/sweep.hpp"

#include <optional>
#include <string>

namespace orbigold::sphere {

enum class Family { e, f };

struct SphereBasisElement {
    Family family;
    unsigned i = 0;
    unsigned j = 0;
    unsigned n = 1;  // the sphere parameter of S^{2n+1}

    // e indices range over N^2 minus (0,0); f over all of N^2.
    bool valid() const { return n >= 1 && (family == Family::f || i + j > 0); }

    long long degree() const {
        long long s = static_cast<long long>(i) + static_cast<long long>(j);
        return family == Family::e ? 2LL * n * s : 2LL * n * (s + 2) + 1;
    }
    // Lie grading: degrees shifted by 2 - dim, dim = 4n + 2. Only the parity
    // enters Koszul signs: e elements are even, f elements odd.
    long long lie_degree() const { return degree() - 4LL * n; }

    std::string str() const;
    bool operator==(const SphereBasisElement&) const = default;
};

// A bracket value: an exact multiple of one basis element, or zero.
struct SphereTerm {
    Rat coefficient;  // zero encodes the zero bracket
    SphereBasisElement element;

    bool is_zero() const { return coefficient == 0; }
};

// The structure-constant table:
//   [f_{i,j}, e_{k,l}] = C(i,j,k,l) * f_{i+k-1, j+l-1}
//   [e_{i,j}, e_{k,l}] = -C(i,j,k,l) * e_{i+k-1, j+l-1}
//   [f, f] = 0,   [e, f] = -[f, e]
// with C(i,j,k,l) = binom(i+k, i) * binom(j+l, j) * (i*l - j*k) / ((i+k)(j+l)).
// The coefficient is defined to be 0 whenever i*l - j*k = 0 (which covers
// every vanishing denominator), and a bracket whose e-target would be the
// missing index (0,0) is 0 as well; the formula already sends that index to
// zero in every bracket against it, so the convention is consistent.
SphereTerm sphere_bracket(const SphereBasisElement& x, const SphereBasisElement& y);

// Graded Jacobi on all basis triples with indices <= index_bound.
CheckReport verify_sphere_jacobi(unsigned index_bound, unsigned n,
                                 sweep::Execution exec = sweep::Execution::serial);

// |[x,y]| = |x| + |y| - 4n for every nonzero bracket with indices <= bound.
CheckReport verify_grading(unsigned index_bound, unsigned n);

// ad(e_{1,1}) acts on e_{i,j} with eigenvalue i - j; iterating it on e_{2,1}
// never reaches zero. Checks the eigenvalue grid and depth-fold brackets.
CheckReport verify_non_nilpotency(unsigned grid_bound, unsigned depth, unsigned n);

}  // namespace orbigold::sphere
