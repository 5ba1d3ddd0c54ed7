#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdo/rational.hpp"

namespace cdo {

// A formal function of b: the depth-th derivative of a modular form of the
// given even weight, or of the rescaled Eisenstein symbol E = (π/6i)E₂.
enum class SymbolKind { Modular, QuasiE };

struct FunctionSymbol {
    std::string name;  // display only, e.g. "f", "E"
    SymbolKind kind = SymbolKind::Modular;
    int weight = 0;    // 2k; fixed to 2 for QuasiE
    int depth = 0;     // derivative order

    FunctionSymbol derived(int extra = 1) const {
        FunctionSymbol s = *this;
        s.depth += extra;
        return s;
    }
    bool operator==(const FunctionSymbol& o) const = default;
    auto operator<=>(const FunctionSymbol& o) const = default;
    std::string str() const;
};

// One term of a transformation law:  c · γ^gamma_pow · u^upow · s^{(depth)},
// or a pure function of (γ, u) when depth is absent.
struct RuleTerm {
    Rational c;
    int gamma_pow = 0;
    int upow = 0;
    std::optional<int> depth;
};

struct TransformRule {
    std::vector<RuleTerm> terms;
    bool operator==(const TransformRule& o) const;
};

TransformRule base_rule(SymbolKind kind, int weight2k);  // depth-0 law

// Differentiate both sides of a law once: d/db[s^{(i)}(gb)] = s^{(i+1)}(gb)·u⁻²
// with [d/db, u^m] = mγu^{m-1}.
TransformRule derive_transform(const TransformRule& r);

// Memoized rule for s^{(depth)}(gb); rows c^i_j of the §5 table.
const TransformRule& transform_rule(SymbolKind kind, int weight2k, int depth);

// ---- truncated q-series over exact rationals -------------------------------

class QSeries {
  public:
    explicit QSeries(int order) : c_(order + 1, Rational(0)) {
        require(order >= 0, "QSeries: negative truncation order");
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int n) const { return c_.at(n); }
    Rational& operator[](int n) { return c_.at(n); }

    QSeries& operator+=(const QSeries& o);
    QSeries operator*(const QSeries& o) const;  // truncated to min order
    QSeries& mul_inv_one_minus_qk(int k);       // *= Π-free factor 1/(1-q^k)

    bool operator==(const QSeries& o) const { return c_ == o.c_; }
    std::string str() const;

  private:
    std::vector<Rational> c_;
};

// E₂ = 1 - 24 Σ σ(n) qⁿ.
QSeries e2_qexpansion(int order);

// dim M_k(Γ) data.  Entries are queried for even k ≥ 0; odd or negative
// weights are 0 without consulting the table.  A supplied table missing a
// requested even weight raises missing_dimension_error (never a silent 0).
struct DimensionTable {
    std::string group;
    std::map<int, long> dims;
};

// Builtin Γ(1) dimensions.
long dim_M_full(int weight);
DimensionTable full_level_table(int max_weight);

// table == nullptr selects the Γ(1) builtin.
long dim_M(int weight, const DimensionTable* table);

}  // namespace cdo
