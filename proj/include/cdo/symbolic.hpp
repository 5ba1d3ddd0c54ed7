#pragma once

#include <optional>

#include "cdo/element.hpp"
#include "cdo/quasimod.hpp"

namespace cdo {

// One slot of the assembled verification ring
//   (γ-polynomial) · a_{-λ} b_{-μ} · u^upow · s^{(depth)},
// with the symbol absent for pure functions of (γ, u).
struct SymKey {
    Partition lambda;
    Partition mu;
    int upow = 0;
    std::optional<FunctionSymbol> sym;

    bool operator==(const SymKey& o) const = default;
    auto operator<=>(const SymKey& o) const = default;
};

class SymbolicSum {
  public:
    using Terms = std::map<SymKey, GammaPoly>;

    static SymbolicSum single(SymKey k, GammaPoly c) {
        SymbolicSum s;
        s.add(std::move(k), std::move(c));
        return s;
    }

    void add(SymKey k, const GammaPoly& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(std::move(k), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SymbolicSum& operator+=(const SymbolicSum& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    SymbolicSum scaled(const GammaPoly& s) const {
        SymbolicSum r;
        for (const auto& [k, c] : terms_) r.add(k, c * s);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    bool operator==(const SymbolicSum& o) const { return terms_ == o.terms_; }

    std::string str() const;

  private:
    Terms terms_;
};

// The function part of a symbol's transformation law, as a SymbolicSum
// with empty partitions: s^{(depth)}(gb) expanded in (γ, u, s^{(j)}(b)).
SymbolicSum transformed_symbol(const FunctionSymbol& s);

// Apply a K-reduced u-flavor operator to a function part: each a0 acts as
// d/db (on u-powers: mγu^{m-1}; on symbols: depth+1).  The result carries
// no a0.  `fn` must have empty partitions.
SymbolicSum apply_operator(const UElement& op, const SymbolicSum& fn);

// Spec surface: apply to a bare symbol / to the constant function 1.
SymbolicSum apply_to_symbol(const UElement& op, const FunctionSymbol& f);
SymbolicSum apply_to_constant(const UElement& op);

}  // namespace cdo
