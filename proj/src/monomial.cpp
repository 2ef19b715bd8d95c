#include "diffalg/monomial.hpp"

#include <map>

namespace diffalg {

std::strong_ordering compare_generators(const DiffVar& a, const DiffVar& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    // eps_i part of the multidegree: eps_a > eps_b lex iff a.var < b.var.
    if (a.var != b.var) return b.var <=> a.var;
    return a.op <=> b.op;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    auto& out = r.factors_;
    const auto& a = factors_;
    const auto& b = o.factors_;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        auto c = compare_generators(a[i].first, b[j].first);
        if (c == std::strong_ordering::equal) {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        } else if (c == std::strong_ordering::greater) {
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return r;
}

Monomial Monomial::times(const DiffVar& v, uint32_t exp) const {
    if (exp == 0) return *this;
    Monomial single;
    single.factors_.emplace_back(v, exp);
    return times(single);
}

std::vector<uint64_t> Monomial::multidegree(const Ambient& amb) const {
    std::vector<uint64_t> md(amb.n + amb.m, 0);
    for (const auto& [v, e] : factors_) {
        if (v.var >= amb.n) throw ParameterError("variable index out of range");
        md[v.var] += e;
        for (uint32_t j = 0; j < amb.m; ++j)
            md[amb.n + j] += static_cast<uint64_t>(v.op[j]) * e;
    }
    return md;
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;

    // Variable-exponent part of the multidegree, sparse dense-lex walk
    // (ascending variable index, larger exponent wins at the first
    // difference).
    std::map<uint32_t, uint64_t> ea, eb;
    for (const auto& [v, e] : a.factors()) ea[v.var] += e;
    for (const auto& [v, e] : b.factors()) eb[v.var] += e;
    {
        auto ia = ea.begin();
        auto ib = eb.begin();
        while (ia != ea.end() || ib != eb.end()) {
            uint32_t va = ia != ea.end() ? ia->first : UINT32_MAX;
            uint32_t vb = ib != eb.end() ? ib->first : UINT32_MAX;
            if (va < vb) return std::strong_ordering::greater;
            if (vb < va) return std::strong_ordering::less;
            if (ia->second != ib->second) return ia->second <=> ib->second;
            ++ia;
            ++ib;
        }
    }

    // Per-derivation total orders.
    uint32_t m = 0;
    if (!a.factors().empty()) m = a.factors()[0].first.op.size();
    else if (!b.factors().empty()) m = b.factors()[0].first.op.size();
    for (uint32_t j = 0; j < m; ++j) {
        uint64_t ta = 0, tb = 0;
        for (const auto& [v, e] : a.factors()) ta += static_cast<uint64_t>(v.op[j]) * e;
        for (const auto& [v, e] : b.factors()) tb += static_cast<uint64_t>(v.op[j]) * e;
        if (ta != tb) return ta <=> tb;
    }

    // Equal multidegree: lex on the expanded factor sequences. Runs of equal
    // generators are compared by exponent; the larger run wins because the
    // generator following it is strictly smaller.
    size_t i = 0, j = 0;
    while (i < a.factors().size() && j < b.factors().size()) {
        const auto& fa = a.factors()[i];
        const auto& fb = b.factors()[j];
        if (auto c = compare_generators(fa.first, fb.first); c != 0) return c;
        if (fa.second != fb.second) return fa.second <=> fb.second;
        ++i;
        ++j;
    }
    return (a.factors().size() - i) <=> (b.factors().size() - j);
}

}  // namespace diffalg
