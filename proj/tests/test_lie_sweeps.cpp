// Bulk structural laws of the loop bracket: antisymmetry over exhaustive
// class pairs and the Jacobi identity over seeded random triples, across a
// spread of signatures (two to four cone points, orders up to five). Every
// sweep kernel runs under both execution policies and the two result
// sequences must be identical index by index — the parallel path is a pure
// reordering of the same exact computations.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "orbigold/cyclic_words.hpp"
#include "orbigold/goldman.hpp"
#include "orbigold/loop_module.hpp"
#include "orbigold/report.hpp"
#include "orbigold/sweep.hpp"

using namespace orbigold;

namespace {

std::vector<words::CyclicWord> classes_up_to(const words::OrbifoldSignature& sig,
                                             std::size_t max_len) {
    std::set<words::CyclicWord> seen;
    std::vector<std::vector<unsigned>> stack{{}};
    while (!stack.empty()) {
        std::vector<unsigned> cur = stack.back();
        stack.pop_back();
        if (!cur.empty()) {
            std::vector<words::RawLetter> raw;
            for (unsigned g : cur) raw.push_back({g, 1});
            words::CyclicWord w(sig, raw);
            if (w.expanded_length() > 0 && w.expanded_length() <= max_len) seen.insert(w);
        }
        if (cur.size() < max_len)
            for (unsigned g = 0; g < sig.rank(); ++g) {
                cur.push_back(g);
                stack.push_back(cur);
                cur.pop_back();
            }
    }
    return {seen.begin(), seen.end()};
}

loops::LoopCombination as_combination(const words::OrbifoldSignature& sig,
                                      const words::CyclicWord& w) {
    loops::LoopCombination c(sig);
    c.add_term(w, Rat(1));
    return c;
}

// Runs one kernel under both policies, asserts bit-identical reports, and
// returns the serial sequence.
template <class Fn>
std::vector<CheckReport> run_both_ways(std::size_t count, Fn&& kernel) {
    auto serial = sweep::map_indexed<CheckReport>(count, sweep::Execution::serial, kernel);
    auto parallel = sweep::map_indexed<CheckReport>(count, sweep::Execution::parallel, kernel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].pass == parallel[i].pass);
        CHECK(serial[i].witness == parallel[i].witness);
    }
    return serial;
}

}  // namespace

TEST_CASE("bracket is antisymmetric on exhaustive class pairs") {
    struct Plan {
        std::vector<unsigned> orders;
        std::size_t max_len;
    };
    const std::vector<Plan> plans = {
        {{2, 4}, 4}, {{3, 4}, 4}, {{5, 5}, 3}, {{2, 2, 2}, 3}, {{2, 3, 4}, 3}, {{2, 3, 4, 5}, 2}};
    for (const auto& plan : plans) {
        words::OrbifoldSignature sig(plan.orders);
        auto classes = classes_up_to(sig, plan.max_len);
        const std::size_t count = classes.size() * classes.size();
        auto kernel = [&](std::size_t idx) -> CheckReport {
            const auto& a = classes[idx / classes.size()];
            const auto& b = classes[idx % classes.size()];
            auto sum = goldman::goldman_bracket(sig, a, b) + goldman::goldman_bracket(sig, b, a);
            if (sum.is_zero()) return {};
            return CheckReport::failure("antisymmetry fails for (" + words::format_word(a, sig) +
                                        ", " + words::format_word(b, sig) + ") over " + sig.str() +
                                        ": " + sum.str());
        };
        auto reports = run_both_ways(count, kernel);
        auto merged = merge_reports(reports);
        CAPTURE(merged.witness);
        CHECK(merged.pass);
    }
}

TEST_CASE("bracket satisfies the Jacobi identity on seeded random triples") {
    const std::vector<std::vector<unsigned>> signatures = {
        {2, 3}, {2, 4}, {3, 4}, {5, 5}, {2, 2, 2}, {2, 3, 4}, {3, 4, 5}, {2, 2, 2, 2}, {2, 3, 4, 5}};
    std::mt19937_64 rng(20260819u);
    for (const auto& orders : signatures) {
        words::OrbifoldSignature sig(orders);
        std::uniform_int_distribution<std::size_t> len_dist(1, 6);
        std::uniform_int_distribution<unsigned> gen_dist(0, sig.rank() - 1);
        auto random_class = [&] {
            std::vector<words::RawLetter> raw;
            std::size_t len = len_dist(rng);
            for (std::size_t t = 0; t < len; ++t) raw.push_back({gen_dist(rng), 1});
            return words::CyclicWord(sig, raw);
        };
        // Draw the triples up front so both execution policies see the same
        // inputs and the kernel itself stays deterministic.
        struct Triple {
            words::CyclicWord a, b, c;
        };
        std::vector<Triple> triples;
        for (int t = 0; t < 16; ++t) triples.push_back({random_class(), random_class(), random_class()});
        auto kernel = [&](std::size_t idx) -> CheckReport {
            const Triple& t = triples[idx];
            auto ca = as_combination(sig, t.a);
            auto cb = as_combination(sig, t.b);
            auto cc = as_combination(sig, t.c);
            auto jac = goldman::goldman_bracket(ca, goldman::goldman_bracket(cb, cc)) +
                       goldman::goldman_bracket(cb, goldman::goldman_bracket(cc, ca)) +
                       goldman::goldman_bracket(cc, goldman::goldman_bracket(ca, cb));
            if (jac.is_zero()) return {};
            return CheckReport::failure(
                "Jacobi fails over " + sig.str() + " for (" + words::format_word(t.a, sig) + ", " +
                words::format_word(t.b, sig) + ", " + words::format_word(t.c, sig) + "): " +
                jac.str());
        };
        auto reports = run_both_ways(triples.size(), kernel);
        auto merged = merge_reports(reports);
        CAPTURE(sig.str());
        CAPTURE(merged.witness);
        CHECK(merged.pass);
    }
}

TEST_CASE("both pairing rules give identical sweep reports at two cone points") {
    words::OrbifoldSignature sig({3, 4});
    auto classes = classes_up_to(sig, 4);
    const std::size_t count = classes.size() * classes.size();
    auto kernel = [&](std::size_t idx) -> CheckReport {
        const auto& a = classes[idx / classes.size()];
        const auto& b = classes[idx % classes.size()];
        auto general = goldman::goldman_bracket(sig, a, b, goldman::PairRule::general);
        auto special = goldman::goldman_bracket(sig, a, b, goldman::PairRule::two_points);
        if (general == special) return {};
        return CheckReport::failure("rules disagree for (" + words::format_word(a, sig) + ", " +
                                    words::format_word(b, sig) + "): " + general.str() + " vs " +
                                    special.str());
    };
    auto merged = merge_reports(run_both_ways(count, kernel));
    CAPTURE(merged.witness);
    CHECK(merged.pass);
}
