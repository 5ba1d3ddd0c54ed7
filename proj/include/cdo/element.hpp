#pragma once

#include <limits>
#include <map>
#include <string>

#include "cdo/gamma_poly.hpp"
#include "cdo/partition.hpp"
#include "cdo/rational.hpp"

namespace cdo {

// One PBW word of the completed Heisenberg envelope:
//
//     a_{-λ} b_{-μ} u^m a0^k b0^l a_{λ+} b_{μ+}
//
// Creations first, then zero modes, then annihilators (the K-direction).
// b-flavor words keep upow = 0; u-flavor words keep b0 = 0 (b0 lives
// inside u = γ·b0 + δ there).
struct Word {
    Partition an;   // a_{-n}, n ≥ 1
    Partition bn;   // b_{-m}, m ≥ 1
    int upow = 0;
    int a0 = 0;
    int b0 = 0;
    Partition ap;   // a_{n}, n ≥ 1 (annihilators)
    Partition bp;   // b_{m}, m ≥ 1

    int creation_weight() const { return an.weight() + bn.weight(); }
    int net_weight() const { return creation_weight() - ap.weight() - bp.weight(); }
    bool has_annihilators() const { return !ap.is_empty() || !bp.is_empty(); }
    PartitionPair pair() const { return {an, bn}; }

    // 2(p(λ) - p(μ) + k - l), annihilators included with their signs.
    int h_weight() const {
        return 2 * (an.count() + a0 + ap.count() - bn.count() - b0 - bp.count());
    }
    // Additive degree of the Lemma 4.1 bookkeeping: h(a) = -1, h(b) = +1.
    int h_degree() const {
        return -(an.count() + a0 + ap.count()) + bn.count() + b0 + bp.count();
    }

    bool operator==(const Word& o) const = default;
};

// Map order: greater words (under the (B1)-(B3) order extended to the
// remaining fields) come first, so iteration prints leading terms first.
struct WordEarlier {
    bool operator()(const Word& x, const Word& y) const;
};

struct BFlavor {
    using Coeff = Rational;
    static constexpr bool is_u = false;
    static constexpr const char* name = "b";
    static bool coeff_zero(const Coeff& c) { return c == 0; }
};

struct UFlavor {
    using Coeff = GammaPoly;
    static constexpr bool is_u = true;
    static constexpr const char* name = "u";
    static bool coeff_zero(const Coeff& c) { return c.is_zero(); }
};

constexpr int kNoCap = std::numeric_limits<int>::max();

template <class F>
class Element {
  public:
    using Coeff = typename F::Coeff;
    using Terms = std::map<Word, Coeff, WordEarlier>;

    Element() = default;

    static Element unit() { return single(Word{}, Coeff(1)); }
    static Element single(Word w, Coeff c) {
        Element e;
        e.add(std::move(w), std::move(c));
        return e;
    }

    void add(Word w, const Coeff& c) {
        if (F::coeff_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(std::move(w), c);
        if (!fresh) {
            it->second += c;
            if (F::coeff_zero(it->second)) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    Coeff coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    Element& operator+=(const Element& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    Element operator+(const Element& o) const { Element r = *this; r += o; return r; }
    Element operator-() const {
        Element r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    Element operator-(const Element& o) const { return *this + (-o); }
    Element scaled(const Coeff& s) const {
        Element r;
        if (F::coeff_zero(s)) return r;
        for (const auto& [w, c] : terms_) r.add(w, c * s);
        return r;
    }

    bool operator==(const Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return terms_ != o.terms_; }

  private:
    Terms terms_;
};

using BElement = Element<BFlavor>;
using UElement = Element<UFlavor>;

// Normal-ordered product; keeps annihilator-carrying words (needed inside
// adjoint / F0 chains, where later right factors still contract them).
// Words whose creation weight exceeds `cap` are dropped.
template <class F>
Element<F> mul_raw(const Element<F>& x, const Element<F>& y, int cap);

// Drop every word still carrying an annihilator (projection along K).
template <class F>
Element<F> k_reduce(const Element<F>& x);

// The public product in Ū/K: normal order, reduce mod K, cap.
template <class F>
Element<F> multiply(const Element<F>& x, const Element<F>& y, int cap) {
    require(cap >= 0, "multiply: weight_cap must be nonnegative");
    return k_reduce(mul_raw(x, y, cap));
}

// Convenience single-generator elements.
Word word_a_neg(int n);
Word word_b_neg(int n);
Word word_a_pos(int n);
Word word_b_pos(int n);
Word word_a0(int k);
Word word_b0(int l);
Word word_u(int m);

std::string word_str(const Word& w);
template <class F>
std::string element_str(const Element<F>& e);

extern template class Element<BFlavor>;
extern template class Element<UFlavor>;
extern template Element<BFlavor> mul_raw(const Element<BFlavor>&, const Element<BFlavor>&, int);
extern template Element<UFlavor> mul_raw(const Element<UFlavor>&, const Element<UFlavor>&, int);
extern template Element<BFlavor> k_reduce(const Element<BFlavor>&);
extern template Element<UFlavor> k_reduce(const Element<UFlavor>&);
extern template std::string element_str(const Element<BFlavor>&);
extern template std::string element_str(const Element<UFlavor>&);

}  // namespace cdo
