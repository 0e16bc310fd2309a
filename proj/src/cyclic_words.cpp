#include "orbigold/cyclic_words.hpp"

#include <algorithm>

namespace orbigold::words {

OrbifoldSignature::OrbifoldSignature(std::vector<unsigned> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw std::invalid_argument("signature needs at least one cone point");
    for (unsigned n : orders_)
        if (n < 2) throw std::invalid_argument("cone point orders must be at least 2");
}

unsigned OrbifoldSignature::order(unsigned gen) const {
    if (gen >= orders_.size()) throw std::invalid_argument("generator index out of range");
    return orders_[gen];
}

OrbifoldSignature OrbifoldSignature::parse(const std::string& text) {
    std::vector<unsigned> orders;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad signature '" + text + "': expected comma-separated integers");
        orders.push_back(static_cast<unsigned>(std::stoul(piece)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == text.size())
            throw std::invalid_argument("bad signature '" + text + "': trailing comma");
    }
    if (orders.empty()) throw std::invalid_argument("empty signature");
    return OrbifoldSignature(std::move(orders));
}

std::string OrbifoldSignature::str() const {
    std::string out;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(orders_[i]);
    }
    return out;
}

namespace {

// One round of reduction: drop trivial syllables and merge equal-generator
// neighbours, including across the cyclic wrap. Returns true if anything
// changed.
bool reduce_once(const OrbifoldSignature& sig, std::vector<Letter>& w) {
    bool changed = false;

    std::vector<Letter> out;
    out.reserve(w.size());
    for (const Letter& l : w) {
        if (l.exp == 0) {
            changed = true;
            continue;
        }
        if (!out.empty() && out.back().gen == l.gen) {
            out.back().exp = (out.back().exp + l.exp) % sig.order(l.gen);
            if (out.back().exp == 0) out.pop_back();
            changed = true;
        } else {
            out.push_back(l);
        }
    }

    // Cyclic wrap: the last syllable is adjacent to the first.
    while (out.size() >= 2 && out.front().gen == out.back().gen) {
        out.front().exp = (out.front().exp + out.back().exp) % sig.order(out.front().gen);
        out.pop_back();
        if (out.front().exp == 0) out.erase(out.begin());
        changed = true;
    }

    w = std::move(out);
    return changed;
}

std::vector<Letter> minimal_rotation(std::vector<Letter> w) {
    if (w.size() < 2) return w;
    std::size_t best = 0;
    auto less_rotation = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Letter& la = w[(a + i) % w.size()];
            const Letter& lb = w[(b + i) % w.size()];
            if (la != lb) return la < lb;
        }
        return false;
    };
    for (std::size_t s = 1; s < w.size(); ++s)
        if (less_rotation(s, best)) best = s;
    std::rotate(w.begin(), w.begin() + static_cast<long>(best), w.end());
    return w;
}

}  // namespace

CyclicWord::CyclicWord(const OrbifoldSignature& sig, const std::vector<RawLetter>& raw) {
    std::vector<Letter> w;
    w.reserve(raw.size());
    for (const auto& [gen, exp] : raw) {
        long long n = sig.order(gen);  // validates gen
        long long e = ((exp % n) + n) % n;
        if (e != 0) w.push_back(Letter{gen, static_cast<unsigned>(e)});
    }
    while (reduce_once(sig, w)) {
    }
    letters_ = minimal_rotation(std::move(w));
}

std::size_t CyclicWord::expanded_length() const {
    std::size_t total = 0;
    for (const Letter& l : letters_) total += l.exp;
    return total;
}

std::vector<unsigned> CyclicWord::expand() const {
    std::vector<unsigned> units;
    units.reserve(expanded_length());
    for (const Letter& l : letters_)
        for (unsigned i = 0; i < l.exp; ++i) units.push_back(l.gen);
    return units;
}

std::vector<RawLetter> parse_word(const std::string& text, const OrbifoldSignature& sig) {
    std::vector<RawLetter> raw;
    std::size_t pos = 0;
    auto read_number = [&](const char* what) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) throw WordParseError(start, std::string("expected ") + what);
        return std::stoll(text.substr(start, pos - start));
    };
    while (pos < text.size()) {
        char c = text[pos];
        if (c == ' ') {
            ++pos;
        } else if (c == '1' && raw.empty() && pos + 1 == text.size()) {
            ++pos;  // the trivial loop
        } else if (c >= 'a' && c <= 'z' && c != 'g') {
            unsigned gen = static_cast<unsigned>(c - 'a');
            if (gen >= sig.rank())
                throw WordParseError(pos, std::string("letter '") + c + "' exceeds the signature");
            raw.emplace_back(gen, 1);
            ++pos;
        } else if (c == 'g') {
            std::size_t token_start = pos;
            ++pos;
            if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') {
                // Bare 'g' is the seventh shorthand letter, not a g-token.
                unsigned gen = static_cast<unsigned>('g' - 'a');
                if (gen >= sig.rank())
                    throw WordParseError(token_start, "letter 'g' exceeds the signature");
                raw.emplace_back(gen, 1);
                continue;
            }
            long long index = read_number("generator number after 'g'");
            if (index < 1 || static_cast<unsigned long long>(index) > sig.rank())
                throw WordParseError(token_start, "generator g" + std::to_string(index) +
                                                      " exceeds the signature");
            long long exp = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                exp = read_number("exponent after '^'");
            }
            raw.emplace_back(static_cast<unsigned>(index - 1), exp);
        } else {
            throw WordParseError(pos, std::string("unexpected character '") + c + "'");
        }
    }
    return raw;
}

std::string format_word(const CyclicWord& word, const OrbifoldSignature& sig) {
    if (word.empty()) return "1";
    std::string out;
    if (sig.rank() <= 26) {
        for (const Letter& l : word.letters())
            out.append(l.exp, static_cast<char>('a' + l.gen));
    } else {
        for (const Letter& l : word.letters()) {
            out += 'g';
            out += std::to_string(l.gen + 1);
            if (l.exp != 1) {
                out += '^';
                out += std::to_string(l.exp);
            }
        }
    }
    return out;
}

}  // namespace orbigold::words
