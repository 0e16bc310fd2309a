#pragma once

// The free module on conjugacy classes of loops: finite formal sums of
// canonical cyclic words with exact rational coefficients. The degree-0
// equivariant homology of the free loop space of the orbifold disk is exactly
// this module, so bracket values live here.

#include "orbigold/cyclic_words.hpp"
#include "orbigold/rational.hpp"

#include <map>
#include <string>

namespace orbigold::loops {

class LoopCombination {
public:
    explicit LoopCombination(words::OrbifoldSignature sig) : sig_(std::move(sig)) {}

    const words::OrbifoldSignature& signature() const { return sig_; }
    const std::map<words::CyclicWord, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    // Adds c * word; cancels to zero coefficients are pruned immediately, so
    // only nonzero terms are ever stored.
    void add_term(const words::CyclicWord& word, const Rat& coefficient);

    LoopCombination& operator+=(const LoopCombination& rhs);
    LoopCombination& operator-=(const LoopCombination& rhs);
    LoopCombination& operator*=(const Rat& scalar);

    friend LoopCombination operator+(LoopCombination lhs, const LoopCombination& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend LoopCombination operator-(LoopCombination lhs, const LoopCombination& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend LoopCombination operator*(const Rat& scalar, LoopCombination rhs) {
        rhs *= scalar;
        return rhs;
    }

    bool operator==(const LoopCombination& rhs) const {
        return sig_ == rhs.sig_ && terms_ == rhs.terms_;
    }

    // "+1*abbaab -1*abaabb" with terms sorted by canonical word; "0" if empty.
    std::string str() const;

private:
    words::OrbifoldSignature sig_;
    std::map<words::CyclicWord, Rat> terms_;
};

}  // namespace orbigold::loops
