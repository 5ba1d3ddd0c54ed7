#pragma once

#include <optional>
#include <vector>

#include "cdo/adjoint.hpp"
#include "cdo/sl2.hpp"
#include "cdo/symbolic.hpp"

namespace cdo {

enum class LiftKind { Solved, Constant, Section6 };

// A = a_{-λ0} b_{-μ0} + l.o.t., b0-free, leading coefficient exactly 1.
struct LiftingOperator {
    PartitionPair leading;
    BElement element;
    LiftKind kind = LiftKind::Solved;
};

// Γ-invariant vector: Σ coeff · a_{-λ} b_{-μ} · s^{(depth)} (symbol absent
// for the constant function).
struct VectorTerm {
    Rational coeff;
    PartitionPair pair;
    std::optional<FunctionSymbol> sym;
    bool operator==(const VectorTerm& o) const = default;
};

struct InvariantVector {
    std::vector<VectorTerm> terms;
};

// Diagnostics of the Theorem 3.5 solve, exposed for the acceptance suite.
struct LiftingSolve {
    LiftingOperator op;
    std::vector<BasisWord> basis;     // the listing (3.14)
    std::vector<BasisWord> quotient;  // the listing (3.15)
    size_t maximal_count = 0;         // size of the a0-free block (l1+1)
    std::vector<std::vector<Rational>> B;  // quotient × maximal block
    std::vector<std::vector<Rational>> C;  // quotient × quotient, lower triangular
};

// Nonconstant-form lifting: requires l(λ0,μ0) ≤ -1.  Solves B·X + C·Y = 0
// with x0 = 1 and the remaining free coordinates pinned to 0, then asserts
// E0.A = 0, H0.A = 2l·A, F0.A = -2l·A·b0 exactly.  cap_delta > 0 re-runs
// with looser truncation for the stability audit.
LiftingSolve solve_lifting(const PartitionPair& p0, int cap_delta = 0);
LiftingOperator solve_lifting_operator(const PartitionPair& p0);

// Constant-form lifting (4.14): requires l(λ0,μ0) = 0.  Asserts the
// operator equations E0.A = 0, H0.A = -2A, F0.A = 2A·b0 and the symbolic
// identity A·γu⁻¹ = π(g) a_{-λ0}b_{-μ0} - a_{-λ0}b_{-μ0}.
LiftingOperator constant_lifting_operator(const PartitionPair& p0, int cap_delta = 0);

// Closed-form lifting of f ∈ M_{2l}(Γ(1)) with leading term b_{-μ} f,
// p(μ) = l: F = Σ_s Σ_{p(μ')=l+s} t^μ_{μ'} Π_{t<s}(2l+t)⁻¹ b_{-μ'} f^{(s)}.
// The result is verified invariant before being returned.
InvariantVector section6_lifting(const Partition& mu, int weight2l);

// The invariant vector attached to a lifting operator: A applied to a
// modular form of weight -2l (solved / section6 kinds), or
// a_{-λ0}b_{-μ0}·1 + A·E (constant kind).
InvariantVector lifting_vector(const LiftingOperator& op);

struct VerifyResult {
    bool invariant = false;
    SymbolicSum residual;  // π(g)v - v; empty iff invariant
};

// Fully symbolic check of π(g)v = v over the (γ, u)-ring; true is a proof
// of invariance under every g whose symbols obey their transformation
// rules, false only reports the sufficient condition failed.
VerifyResult verify_invariance(const InvariantVector& v, int cap_delta = 0);

// b0-free b-flavor element → u-flavor (the only flavor bridge).
UElement to_u_flavor(const BElement& e);

std::string vector_str(const InvariantVector& v);

}  // namespace cdo
