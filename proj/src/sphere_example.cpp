#include "orbigold/sphere_example.hpp"

#include <stdexcept>
#include <vector>

namespace orbigold::sphere {

std::string SphereBasisElement::str() const {
    return std::string(family == Family::e ? "e" : "f") + "(" + std::to_string(i) + "," +
           std::to_string(j) + ")";
}

namespace {

// binom(i+k, i) * binom(j+l, j) * (i*l - j*k) / ((i+k)(j+l)), defined as zero
// whenever i*l - j*k vanishes; that case subsumes both vanishing denominators
// (i+k = 0 forces i = k = 0, hence i*l - j*k = 0, and likewise j+l = 0).
Rat bracket_coefficient(unsigned i, unsigned j, unsigned k, unsigned l) {
    const long long il_jk = static_cast<long long>(i) * l - static_cast<long long>(j) * k;
    if (il_jk == 0) return 0;
    Rat num = Rat(binomial(i + k, i)) * Rat(binomial(j + l, j)) * il_jk;
    return num / (Rat(static_cast<long long>(i) + k) * Rat(static_cast<long long>(j) + l));
}

SphereTerm zero_term(unsigned n) {
    return SphereTerm{0, SphereBasisElement{Family::e, 0, 1, n}};
}

bool odd(const SphereBasisElement& x) { return x.family == Family::f; }

}  // namespace

SphereTerm sphere_bracket(const SphereBasisElement& x, const SphereBasisElement& y) {
    if (!x.valid() || !y.valid()) throw std::invalid_argument("sphere bracket: invalid index");
    if (x.n != y.n) throw std::invalid_argument("sphere bracket: mismatched sphere parameter");
    const unsigned n = x.n;

    if (x.family == Family::f && y.family == Family::f) return zero_term(n);

    if (x.family == Family::e && y.family == Family::f) {
        // Graded antisymmetry in the Lie grading: e is even, f odd, so
        // [e, f] = -[f, e].
        SphereTerm t = sphere_bracket(y, x);
        t.coefficient = -t.coefficient;
        return t;
    }

    const unsigned i = x.i, j = x.j, k = y.i, l = y.j;
    Rat c = bracket_coefficient(i, j, k, l);
    if (c == 0) return zero_term(n);

    // Both surviving cases target index (i+k-1, j+l-1); c != 0 rules out
    // i+k = 0 and j+l = 0, so the decrements stay in range.
    const unsigned ti = i + k - 1, tj = j + l - 1;

    // Both families carry the numerator (j*k - i*l). The orientation must
    // match between them: the f family is a module over the e family, and the
    // mixed Jacobi identity [[f,e],e'] - [[f,e'],e] = [f,[e,e']] forces the
    // module action to use the same determinant orientation as the e/e
    // bracket (flipping exactly one of the two breaks the identity by twice
    // the expected term — the verification sweep detects this immediately).
    // The e/e orientation itself is pinned by [e_{1,1}, e_{i,j}] = (i-j) e_{i,j}.
    if (x.family == Family::f) {
        // [f_{i,j}, e_{k,l}] = (jk - il)-oriented coefficient * f_{i+k-1, j+l-1}.
        return SphereTerm{-c, SphereBasisElement{Family::f, ti, tj, n}};
    }

    // The e family is missing the index (0,0): a bracket targeting it is
    // zero. That element would bracket to zero with everything anyway (its
    // coefficient factor vanishes identically when (i,j) = (0,0)), so
    // dropping it is consistent with Jacobi — which the sweep confirms.
    if (ti == 0 && tj == 0) return zero_term(n);
    return SphereTerm{-c, SphereBasisElement{Family::e, ti, tj, n}};
}

namespace {

std::vector<SphereBasisElement> basis_up_to(unsigned bound, unsigned n) {
    std::vector<SphereBasisElement> basis;
    for (unsigned i = 0; i <= bound; ++i)
        for (unsigned j = 0; j <= bound; ++j) {
            if (i + j > 0) basis.push_back(SphereBasisElement{Family::e, i, j, n});
            basis.push_back(SphereBasisElement{Family::f, i, j, n});
        }
    return basis;
}

// [x, t] for a scalar multiple t of a basis element.
SphereTerm bracket_with_term(const SphereBasisElement& x, const SphereTerm& t) {
    if (t.is_zero()) return t;
    SphereTerm out = sphere_bracket(x, t.element);
    out.coefficient *= t.coefficient;
    return out;
}

}  // namespace

CheckReport verify_sphere_jacobi(unsigned index_bound, unsigned n, sweep::Execution exec) {
    const std::vector<SphereBasisElement> basis = basis_up_to(index_bound, n);
    const std::size_t m = basis.size();

    auto kernel = [&](std::size_t flat) -> CheckReport {
        const SphereBasisElement& x = basis[flat / (m * m)];
        const SphereBasisElement& y = basis[(flat / m) % m];
        const SphereBasisElement& z = basis[flat % m];

        // Graded Jacobi, left-normed form in the Lie grading:
        //   [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]].
        // Every bracket value is a multiple of one basis element, so collect
        // the three sides as (coefficient, element) pairs and cancel.
        const int sign_xy = (odd(x) && odd(y)) ? -1 : +1;
        SphereTerm lhs = bracket_with_term(x, sphere_bracket(y, z));
        SphereTerm r1 = sphere_bracket(x, y);
        SphereTerm rhs1 = r1.is_zero() ? r1 : [&] {
            SphereTerm t = sphere_bracket(r1.element, z);
            t.coefficient *= r1.coefficient;
            return t;
        }();
        SphereTerm rhs2 = bracket_with_term(y, sphere_bracket(x, z));
        rhs2.coefficient *= sign_xy;

        // Accumulate lhs - rhs1 - rhs2 over the (at most three) elements.
        struct Acc {
            SphereBasisElement elem;
            Rat coeff;
        };
        std::vector<Acc> acc;
        auto put = [&acc](const SphereTerm& t, int s) {
            if (t.is_zero()) return;
            for (Acc& a : acc)
                if (a.elem == t.element) {
                    a.coeff += s * t.coefficient;
                    return;
                }
            acc.push_back(Acc{t.element, s * t.coefficient});
        };
        put(lhs, +1);
        put(rhs1, -1);
        put(rhs2, -1);
        for (const Acc& a : acc)
            if (a.coeff != 0)
                return CheckReport::failure("Jacobi fails on (" + x.str() + ", " + y.str() +
                                            ", " + z.str() + "): residual " +
                                            rat_to_string(a.coeff) + " * " + a.elem.str());
        return {};
    };

    return merge_reports(sweep::map_indexed<CheckReport>(m * m * m, exec, kernel));
}

CheckReport verify_grading(unsigned index_bound, unsigned n) {
    for (const SphereBasisElement& x : basis_up_to(index_bound, n))
        for (const SphereBasisElement& y : basis_up_to(index_bound, n)) {
            SphereTerm t = sphere_bracket(x, y);
            if (t.is_zero()) continue;
            if (t.element.degree() != x.degree() + y.degree() - 4LL * n)
                return CheckReport::failure("degree of [" + x.str() + ", " + y.str() + "] is " +
                                            std::to_string(t.element.degree()) + ", expected " +
                                            std::to_string(x.degree() + y.degree() - 4LL * n));
        }
    return {};
}

CheckReport verify_non_nilpotency(unsigned grid_bound, unsigned depth, unsigned n) {
    const SphereBasisElement e11{Family::e, 1, 1, n};

    for (unsigned i = 0; i <= grid_bound; ++i)
        for (unsigned j = 0; j <= grid_bound; ++j) {
            if (i + j == 0) continue;
            SphereBasisElement eij{Family::e, i, j, n};
            SphereTerm t = sphere_bracket(e11, eij);
            Rat expected = static_cast<long long>(i) - static_cast<long long>(j);
            if (expected == 0) {
                if (!t.is_zero())
                    return CheckReport::failure("[e(1,1), " + eij.str() + "] should vanish");
            } else if (t.is_zero() || t.coefficient != expected || !(t.element == eij)) {
                return CheckReport::failure("[e(1,1), " + eij.str() + "] != (i-j) * " + eij.str());
            }
        }

    // Iterated ad(e_{1,1}) on e_{2,1} multiplies by (2-1) each time; after any
    // number of steps the result is still e_{2,1}, never zero.
    SphereTerm t{1, SphereBasisElement{Family::e, 2, 1, n}};
    for (unsigned step = 0; step < depth; ++step) {
        t = bracket_with_term(e11, t);
        if (t.is_zero())
            return CheckReport::failure("ad(e(1,1))^" + std::to_string(step + 1) +
                                        " annihilated e(2,1)");
    }
    return {};
}

}  // namespace orbigold::sphere
