#include "cdo/element.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace cdo {

namespace {

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> out;
    out.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(out), std::greater<int>());
    return Partition(std::move(out));
}

int compare_parts_raw(const Partition& a, const Partition& b) {
    if (a.parts() == b.parts()) return 0;
    return a.parts() < b.parts() ? -1 : 1;
}

}  // namespace

bool WordEarlier::operator()(const Word& x, const Word& y) const {
    if (int c = compare_words(x.pair(), x.a0, x.b0, y.pair(), y.a0, y.b0); c != 0)
        return c > 0;
    if (x.upow != y.upow) return x.upow > y.upow;
    if (int c = compare_parts_raw(x.ap, y.ap); c != 0) return c < 0;
    return compare_parts_raw(x.bp, y.bp) < 0;
}

Word word_a_neg(int n) { Word w; w.an = Partition({n}); return w; }
Word word_b_neg(int n) { Word w; w.bn = Partition({n}); return w; }
Word word_a_pos(int n) { Word w; w.ap = Partition({n}); return w; }
Word word_b_pos(int n) { Word w; w.bp = Partition({n}); return w; }
Word word_a0(int k) { Word w; w.a0 = k; return w; }
Word word_b0(int l) { Word w; w.b0 = l; return w; }
Word word_u(int m) { Word w; w.upow = m; return w; }

namespace {

// One independent contraction pool with its branch weights.
struct Slot {
    enum Kind { BposAneg, AposBneg, ZeroMode } kind;
    int index = 0;  // mode index for the partition pools
    std::vector<std::pair<int, Integer>> branches;  // (j, combinatorial factor)
};

template <class F>
void mul_word_pair(const Word& w1, const typename F::Coeff& c1, const Word& w2,
                   const typename F::Coeff& c2, int cap, Element<F>& out) {
    std::vector<Slot> slots;

    auto add_pool = [&slots](Slot::Kind kind, int k, int p, int q, int sign) {
        if (p == 0 || q == 0) return;
        Slot s{kind, k, {}};
        for (int j = 1; j <= std::min(p, q); ++j) {
            Integer f = factorial(j) * binomial(p, j) * binomial(q, j);
            if (sign < 0 && (j & 1)) f = -f;
            s.branches.emplace_back(j, f);
        }
        slots.push_back(std::move(s));
    };

    // b_k (k in w1.bp) moving right through a_{-k} in w2: [b_k, a_{-k}] = -1.
    {
        int prev = 0;
        for (int k : w1.bp.parts()) {
            if (k == prev) continue;
            prev = k;
            add_pool(Slot::BposAneg, k, w1.bp.multiplicity(k), w2.an.multiplicity(k), -1);
        }
    }
    // a_k (k in w1.ap) through b_{-k} in w2: [a_k, b_{-k}] = +1.
    {
        int prev = 0;
        for (int k : w1.ap.parts()) {
            if (k == prev) continue;
            prev = k;
            add_pool(Slot::AposBneg, k, w1.ap.multiplicity(k), w2.bn.multiplicity(k), +1);
        }
    }
    // Zero modes.  u-flavor: a0^s u^m = Σ_j C(s,j) m(m-1)..(m-j+1) γ^j u^{m-j} a0^{s-j}.
    // b-flavor:   b0^l a0^s = Σ_j (-1)^j j! C(l,j) C(s,j) a0^{s-j} b0^{l-j}.
    if constexpr (F::is_u) {
        if (w1.a0 > 0 && w2.upow != 0) {
            Slot s{Slot::ZeroMode, 0, {}};
            for (int j = 1; j <= w1.a0; ++j) {
                Integer f = binomial(w1.a0, j) * falling(w2.upow, j);
                if (f != 0) s.branches.emplace_back(j, f);
            }
            if (!s.branches.empty()) slots.push_back(std::move(s));
        }
    } else {
        if (w1.b0 > 0 && w2.a0 > 0) {
            Slot s{Slot::ZeroMode, 0, {}};
            for (int j = 1; j <= std::min(w1.b0, w2.a0); ++j) {
                Integer f = factorial(j) * binomial(w1.b0, j) * binomial(w2.a0, j);
                if (j & 1) f = -f;
                s.branches.emplace_back(j, f);
            }
            slots.push_back(std::move(s));
        }
    }

    // Walk the branch product; j = 0 with factor 1 is implicit in every slot.
    std::vector<int> choice(slots.size(), 0);      // chosen j per slot
    std::function<void(size_t, Integer)> rec = [&](size_t i, Integer factor) {
        if (i < slots.size()) {
            rec(i + 1, factor);  // j = 0
            for (const auto& [j, f] : slots[i].branches) {
                choice[i] = j;
                rec(i + 1, factor * f);
                choice[i] = 0;
            }
            return;
        }

        Word w;
        Partition an2 = w2.an, bn2 = w2.bn, bp1 = w1.bp, ap1 = w1.ap;
        int jzero = 0;
        for (size_t t = 0; t < slots.size(); ++t) {
            int j = choice[t];
            if (j == 0) continue;
            switch (slots[t].kind) {
                case Slot::BposAneg:
                    an2 = an2.minus(slots[t].index, j);
                    bp1 = bp1.minus(slots[t].index, j);
                    break;
                case Slot::AposBneg:
                    bn2 = bn2.minus(slots[t].index, j);
                    ap1 = ap1.minus(slots[t].index, j);
                    break;
                case Slot::ZeroMode:
                    jzero = j;
                    break;
            }
        }
        w.an = merge_parts(w1.an, an2);
        w.bn = merge_parts(w1.bn, bn2);
        if (w.creation_weight() > cap) return;
        w.ap = merge_parts(ap1, w2.ap);
        w.bp = merge_parts(bp1, w2.bp);
        if constexpr (F::is_u) {
            w.upow = w1.upow + w2.upow - jzero;
            w.a0 = w1.a0 - jzero + w2.a0;
            GammaPoly coeff = (c1 * c2).shifted(jzero, Rational(factor));
            out.add(std::move(w), coeff);
        } else {
            w.a0 = w1.a0 + w2.a0 - jzero;
            w.b0 = w1.b0 - jzero + w2.b0;
            out.add(std::move(w), c1 * c2 * Rational(factor));
        }
    };
    rec(0, Integer(1));
}

}  // namespace

template <class F>
Element<F> mul_raw(const Element<F>& x, const Element<F>& y, int cap) {
    Element<F> out;
    for (const auto& [w1, c1] : x.terms())
        for (const auto& [w2, c2] : y.terms()) mul_word_pair<F>(w1, c1, w2, c2, cap, out);
    return out;
}

template <class F>
Element<F> k_reduce(const Element<F>& x) {
    Element<F> out;
    for (const auto& [w, c] : x.terms())
        if (!w.has_annihilators()) out.add(w, c);
    return out;
}

std::string word_str(const Word& w) {
    std::string s;
    for (int n : w.an.parts()) s += "a[-" + std::to_string(n) + "]";
    for (int m : w.bn.parts()) s += "b[-" + std::to_string(m) + "]";
    if (w.upow != 0) s += "u^" + std::to_string(w.upow);
    if (w.a0 > 0) s += w.a0 == 1 ? "a0" : "a0^" + std::to_string(w.a0);
    if (w.b0 > 0) s += w.b0 == 1 ? "b0" : "b0^" + std::to_string(w.b0);
    for (int n : w.ap.parts()) s += "a[" + std::to_string(n) + "]";
    for (int m : w.bp.parts()) s += "b[" + std::to_string(m) + "]";
    return s;
}

namespace {

// Splits a coefficient into (magnitude string, negative flag, needs '*').
struct CoeffPiece {
    std::string text;
    bool negative = false;
    bool trivial = false;  // magnitude 1, omit before a nonempty word
};

CoeffPiece coeff_piece(const Rational& c) {
    CoeffPiece p;
    p.negative = c < 0;
    Rational a = p.negative ? Rational(-c) : c;
    p.trivial = a == 1;
    p.text = rational_str(a);
    return p;
}

CoeffPiece coeff_piece(const GammaPoly& c) {
    CoeffPiece p;
    Rational r;
    int deg = 0;
    if (c.is_monomial(&r, &deg)) {
        p.negative = r < 0;
        GammaPoly a = GammaPoly::monomial(p.negative ? Rational(-r) : r, deg);
        p.trivial = (deg == 0 && (r == 1 || r == -1));
        p.text = a.str();
    } else {
        p.text = c.str();
    }
    return p;
}

}  // namespace

template <class F>
std::string element_str(const Element<F>& e) {
    if (e.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        CoeffPiece p = coeff_piece(c);
        if (first) {
            if (p.negative) s += "-";
        } else {
            s += p.negative ? " - " : " + ";
        }
        std::string ws = word_str(w);
        if (ws.empty()) s += p.text;
        else if (p.trivial) s += ws;
        else s += p.text + "*" + ws;
        first = false;
    }
    return s;
}

template class Element<BFlavor>;
template class Element<UFlavor>;
template Element<BFlavor> mul_raw(const Element<BFlavor>&, const Element<BFlavor>&, int);
template Element<UFlavor> mul_raw(const Element<UFlavor>&, const Element<UFlavor>&, int);
template Element<BFlavor> k_reduce(const Element<BFlavor>&);
template Element<UFlavor> k_reduce(const Element<UFlavor>&);
template std::string element_str(const Element<BFlavor>&);
template std::string element_str(const Element<UFlavor>&);

}  // namespace cdo
