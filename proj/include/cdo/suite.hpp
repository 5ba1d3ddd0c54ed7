#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace cdo {

// Run `count` independent work items, serially or with OpenMP; the first
// thrown failure is rethrown after the sweep drains.
void sweep(int count, const std::function<void(int)>& fn, bool parallel);

// Invariant families.  Each throws on violation and returns quietly on
// success; `parallel` selects the OpenMP sweep, the serial path is the
// reference the tests compare against.
void check_order_laws(int max_weight);
void check_successor_and_closure(int max_weight);
void check_multiply_laws(unsigned seed, int samples);
void check_sl2_brackets(int max_weight, bool parallel);
void check_sl2_stability(int max_weight, bool parallel);
void check_adjoint_laws(int max_weight, int cap_delta, bool parallel);
void check_adjoint_golden(int cap_delta);
void check_solver_sweep(int max_weight, int cap_delta, bool parallel);
void check_canonical_example(int cap_delta);
void check_virasoro(int cap_delta);
void check_constant_sweep(int max_weight, int cap_delta, bool parallel);
void check_t_identities(int max_weight);
void check_quasimod_rules();
void check_character_crosscheck(int order, bool parallel);
void check_truncation_stability(int adjoint_weight, int lifting_weight, bool parallel);

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

SuiteResult run_check(const std::string& name, const std::function<void()>& fn);

// The reviewer-facing invariant suite; prints one line per family.
// Returns false iff any family failed.
bool run_suite(int max_weight, bool parallel, std::ostream& out);

}  // namespace cdo
