#include "diffalg/polynomial.hpp"

#include <algorithm>

namespace diffalg {

DiffPolynomial DiffPolynomial::constant(Ambient amb, Rational c) {
    DiffPolynomial p(amb);
    if (!c.is_zero()) p.terms_.emplace(Monomial::unit(), std::move(c));
    return p;
}

DiffPolynomial DiffPolynomial::generator(Ambient amb, uint32_t var, MultiIndex op) {
    if (var >= amb.n) throw ParameterError("variable index out of range");
    if (op.size() != amb.m) throw ParameterError("derivation arity mismatch");
    DiffPolynomial p(amb);
    p.terms_.emplace(Monomial::generator(DiffVar{var, std::move(op)}), Rational(1));
    return p;
}

DiffPolynomial DiffPolynomial::term(Ambient amb, Monomial mono, Rational c) {
    DiffPolynomial p(amb);
    if (!c.is_zero()) p.terms_.emplace(std::move(mono), std::move(c));
    return p;
}

const Monomial& DiffPolynomial::leading_monomial() const {
    if (terms_.empty()) throw DomainError("leading monomial of the zero polynomial");
    return terms_.begin()->first;
}

void DiffPolynomial::add_term(const Monomial& mono, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {

void require_same_ambient(const DiffPolynomial& p, const DiffPolynomial& q) {
    if (!(p.ambient() == q.ambient()))
        throw ParameterError("ambient (n, m) mismatch");
}

}  // namespace

DiffPolynomial add(const DiffPolynomial& p, const DiffPolynomial& q) {
    require_same_ambient(p, q);
    DiffPolynomial r = p;
    for (const auto& [mono, c] : q.terms()) r.add_term(mono, c);
    return r;
}

DiffPolynomial sub(const DiffPolynomial& p, const DiffPolynomial& q) {
    require_same_ambient(p, q);
    DiffPolynomial r = p;
    for (const auto& [mono, c] : q.terms()) r.add_term(mono, -c);
    return r;
}

DiffPolynomial neg(const DiffPolynomial& p) {
    DiffPolynomial r(p.ambient());
    for (const auto& [mono, c] : p.terms()) r.add_term(mono, -c);
    return r;
}

DiffPolynomial scale(const DiffPolynomial& p, const Rational& c) {
    DiffPolynomial r(p.ambient());
    if (c.is_zero()) return r;
    for (const auto& [mono, k] : p.terms()) r.add_term(mono, k * c);
    return r;
}

DiffPolynomial mul(const DiffPolynomial& p, const DiffPolynomial& q, const Limits& lim) {
    require_same_ambient(p, q);
    DiffPolynomial r(p.ambient());
    if (p.is_zero() || q.is_zero()) return r;
    long long d = deg(p).value() + deg(q).value();
    if (d > lim.max_degree)
        throw ResourceError("product degree " + std::to_string(d) + " exceeds cap " +
                            std::to_string(lim.max_degree));
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms()) r.add_term(mp.times(mq), cp * cq);
    return r;
}

DiffPolynomial derive(const DiffPolynomial& p, uint32_t i) {
    if (i >= p.ambient().m) throw ParameterError("derivation index out of range");
    DiffPolynomial r(p.ambient());
    for (const auto& [mono, c] : p.terms()) {
        // Leibniz over the factor list of each monomial.
        const auto& fs = mono.factors();
        for (size_t k = 0; k < fs.size(); ++k) {
            Monomial rest = Monomial::unit();
            for (size_t j = 0; j < fs.size(); ++j) {
                if (j == k) {
                    if (fs[j].second > 1) rest = rest.times(fs[j].first, fs[j].second - 1);
                } else {
                    rest = rest.times(fs[j].first, fs[j].second);
                }
            }
            DiffVar bumped{fs[k].first.var, fs[k].first.op.bumped(i)};
            r.add_term(rest.times(bumped, 1), c * Rational(fs[k].second));
        }
    }
    return r;
}

DiffPolynomial derive_op(const DiffPolynomial& p, const MultiIndex& op) {
    if (op.size() != p.ambient().m) throw ParameterError("derivation arity mismatch");
    DiffPolynomial r = p;
    for (uint32_t i = 0; i < op.size(); ++i)
        for (uint32_t k = 0; k < op[i]; ++k) r = derive(r, i);
    return r;
}

std::vector<uint64_t> multidegree(const Monomial& mono, const Ambient& amb) {
    return mono.multidegree(amb);
}

Degree deg(const DiffPolynomial& p) {
    if (p.is_zero()) return Degree::bottom();
    // Terms are sorted by degree first, so the leading monomial realises it.
    return Degree(static_cast<long long>(p.leading_monomial().degree()));
}

namespace {

long long weighted_degree(const Monomial& mono, const Ambient& amb, const WeightVector& w) {
    auto md = mono.multidegree(amb);
    long long s = 0;
    for (size_t i = 0; i < md.size(); ++i) s += w[i] * static_cast<long long>(md[i]);
    return s;
}

void require_weight(const DiffPolynomial& p, const WeightVector& w) {
    if (w.size() != p.ambient().n + p.ambient().m)
        throw ParameterError("weight vector length mismatch");
}

}  // namespace

Degree deg_w(const DiffPolynomial& p, const WeightVector& w) {
    require_weight(p, w);
    if (p.is_zero()) return Degree::bottom();
    long long best = 0;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        long long d = weighted_degree(mono, p.ambient(), w);
        if (first || d > best) best = d;
        first = false;
    }
    return Degree(best);
}

DiffPolynomial leading_part(const DiffPolynomial& p, const WeightVector& w) {
    require_weight(p, w);
    if (p.is_zero()) throw DomainError("leading part of the zero polynomial");
    long long top = deg_w(p, w).value();
    DiffPolynomial r(p.ambient());
    for (const auto& [mono, c] : p.terms())
        if (weighted_degree(mono, p.ambient(), w) == top) r.add_term(mono, c);
    return r;
}

DiffPolynomial leading_part(const DiffPolynomial& p) {
    if (p.is_zero()) throw DomainError("leading part of the zero polynomial");
    long long top = deg(p).value();
    DiffPolynomial r(p.ambient());
    for (const auto& [mono, c] : p.terms()) {
        if (static_cast<long long>(mono.degree()) < top) break;  // descending order
        r.add_term(mono, c);
    }
    return r;
}

bool is_homogeneous(const DiffPolynomial& p) {
    if (p.is_zero()) return true;
    uint64_t d = p.leading_monomial().degree();
    for (const auto& [mono, c] : p.terms())
        if (mono.degree() != d) return false;
    return true;
}

bool is_homogeneous_w(const DiffPolynomial& p, const WeightVector& w) {
    require_weight(p, w);
    if (p.is_zero()) return true;
    std::optional<long long> d;
    for (const auto& [mono, c] : p.terms()) {
        long long dw = weighted_degree(mono, p.ambient(), w);
        if (!d) d = dw;
        else if (*d != dw) return false;
    }
    return true;
}

DiffPolynomial lower_part(const DiffPolynomial& p, const WeightVector& w, long long cutoff) {
    require_weight(p, w);
    DiffPolynomial r(p.ambient());
    for (const auto& [mono, c] : p.terms())
        if (weighted_degree(mono, p.ambient(), w) < cutoff) r.add_term(mono, c);
    return r;
}

DiffPolynomial substitute(const DiffPolynomial& g,
                          std::span<const DiffPolynomial> targets,
                          const Limits& lim) {
    if (targets.size() != g.ambient().n)
        throw ParameterError("substitution arity mismatch");
    Ambient out;
    if (targets.empty()) {
        out = Ambient{0, g.ambient().m};
    } else {
        out = targets[0].ambient();
        for (const auto& t : targets)
            if (!(t.ambient() == out)) throw ParameterError("substitution targets with mixed ambients");
        if (out.m != g.ambient().m)
            throw ParameterError("substitution derivation count mismatch");
    }

    // Memoised derived targets keyed by (variable, operator).
    std::map<std::pair<uint32_t, MultiIndex>, DiffPolynomial> derived;
    auto target_for = [&](const DiffVar& v) -> const DiffPolynomial& {
        auto key = std::make_pair(v.var, v.op);
        auto it = derived.find(key);
        if (it == derived.end())
            it = derived.emplace(key, derive_op(targets[v.var], v.op)).first;
        return it->second;
    };

    DiffPolynomial r(out);
    for (const auto& [mono, c] : g.terms()) {
        // Degree guard before expanding the term.
        long long predicted = 0;
        bool vanishes = false;
        for (const auto& [v, e] : mono.factors()) {
            const DiffPolynomial& t = target_for(v);
            if (t.is_zero()) {
                vanishes = true;
                break;
            }
            predicted += static_cast<long long>(e) * deg(t).value();
        }
        if (vanishes) continue;
        if (predicted > lim.max_degree)
            throw ResourceError("substitution degree " + std::to_string(predicted) +
                                " exceeds cap " + std::to_string(lim.max_degree));

        DiffPolynomial term = DiffPolynomial::constant(out, c);
        for (const auto& [v, e] : mono.factors()) {
            const DiffPolynomial& t = target_for(v);
            for (uint32_t k = 0; k < e; ++k) term = mul(term, t, lim);
        }
        r = add(r, term);
    }
    return r;
}

DiffPolynomial substitute(const DiffPolynomial& g,
                          std::initializer_list<DiffPolynomial> targets,
                          const Limits& lim) {
    std::vector<DiffPolynomial> v(targets);
    return substitute(g, std::span<const DiffPolynomial>(v), lim);
}

DiffVar leader(const DiffPolynomial& p) {
    if (p.is_constant()) throw DomainError("leader of a constant");
    std::optional<DiffVar> best;
    for (const auto& [mono, c] : p.terms())
        for (const auto& [v, e] : mono.factors())
            if (!best || compare_generators(v, *best) == std::strong_ordering::greater)
                best = v;
    return *best;
}

}  // namespace diffalg
