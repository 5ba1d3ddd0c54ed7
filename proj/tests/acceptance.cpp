// Acceptance suite: one line per criterion, exact checks only.
// Exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cdo/adjoint.hpp"
#include "cdo/character.hpp"
#include "cdo/lifting.hpp"
#include "cdo/suite.hpp"

namespace {

using namespace cdo;

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void()> run;
};

Word uword(std::vector<int> lam, std::vector<int> mu, int upow, int a0 = 0) {
    Word w;
    w.an = Partition(std::move(lam));
    w.bn = Partition(std::move(mu));
    w.upow = upow;
    w.a0 = a0;
    return w;
}

// 1. The paper's four-term expansion with coefficients 1, 2, -1, 2.
void criterion_adjoint_golden() {
    check_adjoint_golden(0);
    PartitionPair p{Partition({1}), Partition({1})};
    const UElement& e = adjoint_monomial(p).element;
    check(e.size() == 4, "expansion must have exactly four terms");
    check(e.coeff(uword({1}, {1}, 0)) == GammaPoly(1), "slot ((1),(1)) != 1");
    check(e.coeff(uword({}, {2}, -1)) == GammaPoly::monomial(2, 1), "slot (∅,(2)) != 2γu⁻¹");
    check(e.coeff(uword({}, {1, 1}, -2)) == GammaPoly::monomial(-1, 2),
          "slot (∅,(1,1)) != -γ²u⁻²");
    check(e.coeff(uword({}, {1, 1}, -1, 1)) == GammaPoly::monomial(2, 1),
          "slot (∅,(1,1),a0) != 2γu⁻¹");
}

// 2. Lemma 4.1 exponent/ordering laws, c⁰ diagonal 1, weight ≤ 5.
void criterion_structure_constants() { check_adjoint_laws(5, 0, true); }

// 3. Solver sweep: all pairs of weight ≤ 6 with l ≤ -1; triangularity,
//    diagonal i(2l+i+1) < 0, and (3.3)-(3.5) asserted per pair.
void criterion_solver() { check_solver_sweep(6, 0, true); }

// 4. solve_lifting(∅,(2,1)) frozen and equal to the t-coefficient route.
void criterion_canonical() { check_canonical_example(0); }

// 5. Virasoro vector: operator, vector, and zero residual.
void criterion_virasoro() { check_virasoro(0); }

// 6. Constant lifting at scale: (4.6)-(4.9) for all l = 0 pairs, weight ≤ 6.
void criterion_constant_scale() { check_constant_sweep(6, 0, true); }

// 7. Lemma 6.1 (both parts), Lemma 6.2, and (6.3), weight ≤ 6; includes the
//    t-integrality flag.
void criterion_t_identities() { check_t_identities(6); }

// 8. Theorem 1.1 vs (5.4) to q³⁰, builtin and synthetic tables; the Γ(1)
//    series begins 1, 0, 2, 4.
void criterion_character() { check_character_crosscheck(30, true); }

// 9. Truncation stability: criteria 1-6 recomputed with caps raised by one.
void criterion_truncation() { check_truncation_stability(5, 6, true); }

// 10. sl2 bracket identities on every basis monomial of weight ≤ 4
//     (zero-mode powers up to 3 each).
void criterion_sl2() { check_sl2_brackets(4, true); }

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"adjoint golden test ((1),(1)), exact", 1.0, criterion_adjoint_golden},
        {"structure-constant laws, weight <= 5, exact", 30.0, criterion_structure_constants},
        {"lifting solver sweep, weight <= 6, l <= -1, exact", 120.0, criterion_solver},
        {"canonical example (∅,(2,1)): solver == t-route, exact", 30.0, criterion_canonical},
        {"constant lifting ((1),(1)) -> Virasoro vector, exact", 30.0, criterion_virasoro},
        {"constant lifting at scale, weight <= 6, exact", 120.0, criterion_constant_scale},
        {"t-coefficient identities, weight <= 6, exact", 60.0, criterion_t_identities},
        {"character cross-check to q^30, exact", 10.0, criterion_character},
        {"truncation stability audit (caps + 1), exact", 300.0, criterion_truncation},
        {"sl2 bracket suite, weight <= 4, exact", 30.0, criterion_sl2},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = true;
        try {
            criteria[i].run();
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %zu: %s (%.2fs, budget %.0fs)\n", pass ? "PASS" : "FAIL",
                    i + 1, criteria[i].name.c_str(), secs, criteria[i].budget_seconds);
        if (!pass) {
            std::printf("       %s\n", detail.c_str());
            ++failures;
        } else if (secs > criteria[i].budget_seconds) {
            std::printf("       note: exceeded the stated runtime budget\n");
        }
    }
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return failures ? 1 : 0;
}
