#include "orbigold/loop_module.hpp"

namespace orbigold::loops {

void LoopCombination::add_term(const words::CyclicWord& word, const Rat& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(word, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

LoopCombination& LoopCombination::operator+=(const LoopCombination& rhs) {
    if (sig_ != rhs.sig_)
        throw std::invalid_argument("loop combination sum: signature mismatch");
    for (const auto& [word, coeff] : rhs.terms_) add_term(word, coeff);
    return *this;
}

LoopCombination& LoopCombination::operator-=(const LoopCombination& rhs) {
    if (sig_ != rhs.sig_)
        throw std::invalid_argument("loop combination difference: signature mismatch");
    for (const auto& [word, coeff] : rhs.terms_) add_term(word, -coeff);
    return *this;
}

LoopCombination& LoopCombination::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [word, coeff] : terms_) coeff *= scalar;
    return *this;
}

std::string LoopCombination::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [word, coeff] : terms_) {
        if (!out.empty()) out += ' ';
        out += (coeff < 0) ? "-" : "+";
        Rat mag = coeff < 0 ? Rat(-coeff) : coeff;
        out += rat_to_string(mag);
        out += '*';
        out += words::format_word(word, sig_);
    }
    return out;
}

}  // namespace orbigold::loops
