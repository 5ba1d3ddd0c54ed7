#include "cdo/gamma_poly.hpp"

namespace cdo {

GammaPoly GammaPoly::monomial(const Rational& c, int deg) {
    GammaPoly p;
    if (c == 0) return p;
    p.coeffs_.assign(deg + 1, Rational(0));
    p.coeffs_[deg] = c;
    return p;
}

bool GammaPoly::is_monomial(Rational* c, int* deg) const {
    int found = -1;
    for (int d = 0; d <= degree(); ++d) {
        if (coeffs_[d] == 0) continue;
        if (found >= 0) return false;
        found = d;
    }
    if (found < 0) return false;
    if (c) *c = coeffs_[found];
    if (deg) *deg = found;
    return true;
}

void GammaPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

GammaPoly& GammaPoly::operator+=(const GammaPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

GammaPoly GammaPoly::operator-() const {
    GammaPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

GammaPoly GammaPoly::operator*(const GammaPoly& o) const {
    GammaPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            if (o.coeffs_[j] != 0) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
}

GammaPoly GammaPoly::shifted(int dg, const Rational& c) const {
    GammaPoly r;
    if (is_zero() || c == 0) return r;
    r.coeffs_.assign(coeffs_.size() + dg, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + dg] = coeffs_[i] * c;
    r.trim();
    return r;
}

std::string GammaPoly::str() const {
    if (is_zero()) return "0";
    Rational c;
    int deg = 0;
    auto mono = [](const Rational& cc, int d) {
        std::string s;
        if (d == 0) return rational_str(cc);
        if (cc == -1) s = "-";
        else if (cc != 1) s = rational_str(cc) + "*";
        s += "g";
        if (d > 1) s += "^" + std::to_string(d);
        return s;
    };
    if (is_monomial(&c, &deg)) return mono(c, deg);
    std::string s = "(";
    bool first = true;
    for (int d = 0; d <= degree(); ++d) {
        if (coeffs_[d] == 0) continue;
        if (!first) s += coeffs_[d] > 0 ? " + " : " - ";
        Rational a = (!first && coeffs_[d] < 0) ? Rational(-coeffs_[d]) : coeffs_[d];
        s += mono(a, d);
        first = false;
    }
    return s + ")";
}

}  // namespace cdo
