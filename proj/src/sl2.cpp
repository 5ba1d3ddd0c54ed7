#include "cdo/sl2.hpp"

namespace cdo {

namespace {

// b with subscript `sub` (≠ 0): creation for sub < 0, annihilator for sub > 0.
void put_b_mode(Word& w, int sub) {
    if (sub < 0) w.bn = w.bn.with_part(-sub);
    else w.bp = w.bp.with_part(sub);
}

}  // namespace

BElement f0_on_a_neg(int n, int cap) {
    BElement e;
    // -2 Σ_{i≥0} a_{-1-i} b_{-n+i+1}
    for (int i = 0; i + 1 <= cap; ++i) {
        int sub = -n + i + 1;
        if (sub > cap) break;
        Word w;
        w.an = Partition({1 + i});
        if (sub == 0) w.b0 = 1;
        else put_b_mode(w, sub);
        e.add(std::move(w), Rational(-2));
    }
    // -2 Σ_{i≥0} b_{-n-i} a_i
    for (int i = 0; n + i <= cap; ++i) {
        Word w;
        w.bn = Partition({n + i});
        if (i == 0) w.a0 = 1;
        else w.ap = Partition({i});
        e.add(std::move(w), Rational(-2));
    }
    return e;
}

BElement f0_on_b_neg(int m) {
    BElement e;
    Word lead;
    lead.bn = Partition({m});
    lead.b0 = 1;
    e.add(std::move(lead), Rational(2));
    for (int i = 1; i < m; ++i) {
        Word w;
        w.bn = Partition({i, m - i});
        e.add(std::move(w), Rational(1));
    }
    return e;
}

BElement f0_on_a0_pow(int k) {
    BElement e;
    if (k >= 1) {
        e.add(word_a0(k - 1), Rational(k) * (k + 1));
        Word w;
        w.a0 = k;
        w.b0 = 1;
        e.add(std::move(w), Rational(-2) * k);
    }
    return e;
}

BElement f0_on_b0_pow(int l) {
    BElement e;
    if (l >= 1) e.add(word_b0(l + 1), Rational(l));
    return e;
}

namespace {

BElement act_f(const Word& w, const Rational& c, int cap) {
    const int wcap = cap < 0 ? w.creation_weight() : cap;

    // Factor sequence of the canonical word; Leibniz over each factor.
    std::vector<BElement> replacements;
    std::vector<Word> singles;  // the factor itself, as a one-generator word
    for (int n : w.an.parts()) {
        replacements.push_back(f0_on_a_neg(n, wcap));
        singles.push_back(word_a_neg(n));
    }
    for (int m : w.bn.parts()) {
        replacements.push_back(f0_on_b_neg(m));
        singles.push_back(word_b_neg(m));
    }
    if (w.a0 > 0) {
        replacements.push_back(f0_on_a0_pow(w.a0));
        singles.push_back(word_a0(w.a0));
    }
    if (w.b0 > 0) {
        replacements.push_back(f0_on_b0_pow(w.b0));
        singles.push_back(word_b0(w.b0));
    }

    // prefix = factors before i, suffix = factors after i; both are plain
    // words because the factor list is already in canonical order.
    auto span_word = [&](size_t from, size_t to) {
        Word r;
        std::vector<int> an, bn;
        for (size_t j = from; j < to; ++j) {
            const Word& s = singles[j];
            an.insert(an.end(), s.an.parts().begin(), s.an.parts().end());
            bn.insert(bn.end(), s.bn.parts().begin(), s.bn.parts().end());
            r.a0 += s.a0;
            r.b0 += s.b0;
        }
        r.an = Partition(std::move(an));
        r.bn = Partition(std::move(bn));
        return r;
    };

    BElement total;
    for (size_t i = 0; i < replacements.size(); ++i) {
        Word prefix = span_word(0, i);
        Word suffix = span_word(i + 1, singles.size());
        BElement piece = mul_raw(BElement::single(prefix, Rational(1)), replacements[i], wcap);
        piece = mul_raw(piece, BElement::single(suffix, Rational(1)), wcap);
        total += piece.scaled(c);
    }
    return total;
}

}  // namespace

BElement act_zero_mode(Sl2 x, const BElement& v, int cap) {
    BElement out;
    for (const auto& [w, c] : v.terms()) {
        require(!w.has_annihilators() && w.upow == 0,
                "act_zero_mode expects b-flavor words in the Ū/K basis");
        switch (x) {
            case Sl2::E: {
                if (w.b0 >= 1) {
                    Word r = w;
                    r.b0 -= 1;
                    out.add(std::move(r), c * Rational(-w.b0));
                }
                break;
            }
            case Sl2::H:
                out.add(w, c * Rational(w.h_weight()));
                break;
            case Sl2::F:
                out += act_f(w, c, cap);
                break;
        }
    }
    return x == Sl2::F ? k_reduce(out) : out;
}

}  // namespace cdo
