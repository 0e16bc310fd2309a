// Wall-clock comparison of the verification sweeps' two execution policies.
// Each kernel runs once serially and once under OpenMP; the reports must be
// identical (the parallel path is a pure reordering of the same exact
// computations), and the two timings are printed side by side.  On a single
// hardware thread the parallel column only measures scheduling overhead; on
// a multicore host it shows the available speedup.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "orbigold/cyclic_words.hpp"
#include "orbigold/goldman.hpp"
#include "orbigold/graded_bv.hpp"
#include "orbigold/loop_module.hpp"
#include "orbigold/report.hpp"
#include "orbigold/sphere_example.hpp"
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

double seconds_of(const std::function<CheckReport(sweep::Execution)>& kernel,
                  sweep::Execution exec, CheckReport& out) {
    const auto start = std::chrono::steady_clock::now();
    out = kernel(exec);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
    struct Bench {
        std::string name;
        std::function<CheckReport(sweep::Execution)> kernel;
    };
    std::vector<Bench> benches;

    // Loop-bracket antisymmetry over an exhaustive pair grid.
    benches.push_back({"loop antisymmetry, orders (2,3,4), length <= 4", [](sweep::Execution exec) {
                           words::OrbifoldSignature sig({2, 3, 4});
                           const auto classes = classes_up_to(sig, 4);
                           const std::size_t m = classes.size();
                           auto reports = sweep::map_indexed<CheckReport>(
                               m * m, exec, [&](std::size_t idx) -> CheckReport {
                                   const auto& a = classes[idx / m];
                                   const auto& b = classes[idx % m];
                                   auto s = goldman::goldman_bracket(sig, a, b);
                                   const auto t = goldman::goldman_bracket(sig, b, a);
                                   for (const auto& [w, c] : t.terms()) s.add_term(w, c);
                                   if (!s.is_zero()) return CheckReport::failure("antisymmetry");
                                   return {};
                               });
                           return merge_reports(reports);
                       }});

    // Graded Jacobi of the weighted-sphere table on a dense triple grid.
    benches.push_back({"sphere Jacobi, index bound 5", [](sweep::Execution exec) {
                           return sphere::verify_sphere_jacobi(5, 1, exec);
                       }});

    // Derived-bracket laws across a slice of the generated algebra family.
    benches.push_back({"derived bracket laws, 12 generated algebras", [](sweep::Execution exec) {
                           const auto instances = bv::generate_bv_instances(12, 2026ull);
                           for (const auto& A : instances) {
                               if (!bv::check_bv_identity(A).pass) continue;
                               if (auto r = bv::check_derived_bracket_laws(A, exec); !r.pass)
                                   return r;
                           }
                           return CheckReport{};
                       }});

    // String-bracket laws on a synthesized exact sequence.
    benches.push_back({"string bracket laws on synthesized sequences", [](sweep::Execution exec) {
                           const auto instances = bv::generate_bv_instances(24, 2026ull);
                           for (const auto& A : instances) {
                               if (!bv::check_bv_identity(A).pass || !bv::operator_acyclic(A))
                                   continue;
                               const auto G = bv::synthesize_gysin(A);
                               if (auto r = bv::verify_string_lie(G, exec); !r.pass) return r;
                           }
                           return CheckReport{};
                       }});

    std::cout << std::left << std::setw(52) << "kernel" << std::right << std::setw(12)
              << "serial [s]" << std::setw(14) << "parallel [s]" << std::setw(10) << "ratio"
              << "\n";
    bool all_ok = true;
    for (const auto& bench : benches) {
        CheckReport serial_report, parallel_report;
        const double t_serial = seconds_of(bench.kernel, sweep::Execution::serial, serial_report);
        const double t_parallel =
            seconds_of(bench.kernel, sweep::Execution::parallel, parallel_report);
        const bool same = serial_report.pass == parallel_report.pass &&
                          serial_report.witness == parallel_report.witness;
        all_ok = all_ok && same && serial_report.pass;

        std::cout << std::left << std::setw(52) << bench.name << std::right << std::fixed
                  << std::setprecision(3) << std::setw(12) << t_serial << std::setw(14)
                  << t_parallel << std::setw(10) << std::setprecision(2)
                  << (t_parallel > 0 ? t_serial / t_parallel : 0.0);
        if (!serial_report.pass) std::cout << "  [kernel FAILED: " << serial_report.witness << "]";
        if (!same) std::cout << "  [POLICY MISMATCH]";
        std::cout << "\n";
    }
    if (!all_ok) {
        std::cout << "benchmark kernels disagreed or failed\n";
        return 1;
    }
    return 0;
}
