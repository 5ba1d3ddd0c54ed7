#pragma once

#include <string>
#include <vector>

#include "cdo/rational.hpp"

namespace cdo {

// Dense polynomial in γ over exact rationals.  γ only ever enters with
// nonnegative powers; the Laurent behaviour lives in u = γb+δ.
class GammaPoly {
  public:
    GammaPoly() = default;
    GammaPoly(const Rational& c) { if (c != 0) coeffs_ = {c}; }          // NOLINT: implicit by design
    GammaPoly(int c) : GammaPoly(Rational(c)) {}                         // NOLINT

    static GammaPoly monomial(const Rational& c, int deg);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
    Rational coeff(int deg) const {
        return deg >= 0 && deg <= degree() ? coeffs_[deg] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // True iff exactly one nonzero coefficient; reports it.
    bool is_monomial(Rational* c = nullptr, int* deg = nullptr) const;

    GammaPoly& operator+=(const GammaPoly& o);
    GammaPoly operator+(const GammaPoly& o) const { GammaPoly r = *this; r += o; return r; }
    GammaPoly operator-() const;
    GammaPoly operator-(const GammaPoly& o) const { return *this + (-o); }
    GammaPoly operator*(const GammaPoly& o) const;
    GammaPoly& operator*=(const GammaPoly& o) { *this = *this * o; return *this; }

    GammaPoly shifted(int dg, const Rational& c) const;  // * c·γ^dg

    bool operator==(const GammaPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const GammaPoly& o) const { return coeffs_ != o.coeffs_; }

    std::string str() const;  // "3/2", "2*g", "-g^2", "(1 - 2*g^3)"

  private:
    void trim();
    std::vector<Rational> coeffs_;  // coeffs_[d] multiplies γ^d
};

}  // namespace cdo
