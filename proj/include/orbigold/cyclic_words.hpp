#pragma once

// Conjugacy classes of loops on a disk with marked cone points. The
// fundamental group is a free product of finite cyclic groups, one factor
// Z/n_i per cone point; free homotopy classes of loops are conjugacy classes,
// and every class has a unique canonical representative: a cyclically reduced
// word (exponents in [1, n_i-1], cyclically adjacent letters on distinct
// generators) taken at its lexicographically minimal rotation. CyclicWord
// stores exactly that representative, so class equality is value equality.

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orbigold::words {

// The cyclically ordered cone-point orders (n_1, ..., n_r), each >= 2.
class OrbifoldSignature {
public:
    explicit OrbifoldSignature(std::vector<unsigned> orders);

    unsigned rank() const { return static_cast<unsigned>(orders_.size()); }
    unsigned order(unsigned gen) const;

    bool operator==(const OrbifoldSignature&) const = default;

    static OrbifoldSignature parse(const std::string& text);  // "3,4"
    std::string str() const;

private:
    std::vector<unsigned> orders_;
};

// One syllable g^e. Canonical words keep 1 <= exp <= order(gen) - 1.
// Letters order lexicographically by (generator, exponent).
struct Letter {
    unsigned gen;
    unsigned exp;
    auto operator<=>(const Letter&) const = default;
};

// Unnormalized input syllable: any exponent, reduced modulo the generator
// order during normalization.
using RawLetter = std::pair<unsigned, long long>;

class CyclicWord {
public:
    CyclicWord() = default;  // the trivial loop

    // Normalizes: exponents mod n_i, removal of trivial syllables, cyclic
    // merging of adjacent syllables on the same generator (to a fixed point),
    // then the minimal rotation. Throws std::invalid_argument on a generator
    // index outside the signature.
    CyclicWord(const OrbifoldSignature& sig, const std::vector<RawLetter>& raw);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    std::size_t expanded_length() const;  // sum of exponents
    std::vector<unsigned> expand() const;  // one generator index per unit letter

    auto operator<=>(const CyclicWord&) const = default;

private:
    std::vector<Letter> letters_;
};

inline CyclicWord normalize(const OrbifoldSignature& sig, const std::vector<RawLetter>& raw) {
    return CyclicWord(sig, raw);
}

// Do two spellings present conjugate group elements (equal free homotopy
// classes)? Equivalent to equality of normal forms.
inline bool conjugacy_equal(const OrbifoldSignature& sig, const std::vector<RawLetter>& a,
                            const std::vector<RawLetter>& b) {
    return CyclicWord(sig, a) == CyclicWord(sig, b);
}

// Word grammar: a concatenation of tokens, each "g<i>" or "g<i>^<e>" with
// 1-based generator numbers, or a single letter a..z standing for g1..g26.
// "1" denotes the trivial loop. ASCII spaces between tokens are ignored.
struct WordParseError : std::invalid_argument {
    WordParseError(std::size_t pos, const std::string& what)
        : std::invalid_argument("position " + std::to_string(pos) + ": " + what), position(pos) {}
    std::size_t position;
};

std::vector<RawLetter> parse_word(const std::string& text, const OrbifoldSignature& sig);

// Canonical display form: repeated letters ("abbaab") when the signature has
// at most 26 generators, "g<i>^<e>" tokens otherwise; "1" for the trivial loop.
std::string format_word(const CyclicWord& word, const OrbifoldSignature& sig);

}  // namespace orbigold::words
