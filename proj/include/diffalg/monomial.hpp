#ifndef DIFFALG_MONOMIAL_HPP
#define DIFFALG_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "diffalg/error.hpp"

namespace diffalg {

/// Ambient parameters of the algebra k{x_1..x_n} with derivations d_1..d_m.
struct Ambient {
    uint32_t n = 0;  ///< number of variables
    uint32_t m = 0;  ///< number of commuting derivations

    friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// Commutative derivation word d_1^{i_1} ... d_m^{i_m}, stored as the
/// exponent vector (i_1, ..., i_m).
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(uint32_t m) : e_(m, 0) {}
    MultiIndex(std::initializer_list<uint32_t> e) : e_(e) {}

    uint32_t size() const { return static_cast<uint32_t>(e_.size()); }
    uint32_t operator[](uint32_t i) const { return e_[i]; }

    /// Total order of the operator, i_1 + ... + i_m.
    uint64_t order() const {
        uint64_t s = 0;
        for (uint32_t v : e_) s += v;
        return s;
    }

    bool is_zero() const { return order() == 0; }

    /// The operator with derivation `i` (0-based) applied once more.
    MultiIndex bumped(uint32_t i) const {
        if (i >= size()) throw ParameterError("derivation index out of range");
        MultiIndex r = *this;
        ++r.e_[i];
        return r;
    }

    MultiIndex plus(const MultiIndex& o) const {
        if (o.size() != size()) throw ParameterError("derivation arity mismatch");
        MultiIndex r = *this;
        for (uint32_t i = 0; i < size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

    /// Lexicographic, leftmost entry most significant.
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        for (uint32_t i = 0; i < a.size(); ++i)
            if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
        return std::strong_ordering::equal;
    }

private:
    std::vector<uint32_t> e_;
};

/// Generator x_i^theta. Variable indices are 0-based.
struct DiffVar {
    uint32_t var = 0;
    MultiIndex op;

    /// deg(x_i^theta) = 1 + |theta|.
    uint64_t degree() const { return 1 + op.order(); }

    friend bool operator==(const DiffVar&, const DiffVar&) = default;
};

/// Total order on generators: by degree, then lexicographically on the
/// multidegree vector (eps_i, gamma(theta)) with the leftmost component most
/// significant. Note that a *smaller* variable index gives a lex-larger
/// basis vector eps_i.
std::strong_ordering compare_generators(const DiffVar& a, const DiffVar& b);

/// Commutative monomial in the generators x_i^theta. Factors are kept
/// sorted with the largest generator first; exponents are positive; the
/// empty factor list is the unit monomial.
class Monomial {
public:
    using Factor = std::pair<DiffVar, uint32_t>;

    Monomial() = default;
    static Monomial unit() { return Monomial(); }
    static Monomial generator(const DiffVar& v) {
        Monomial r;
        r.factors_.emplace_back(v, 1);
        return r;
    }

    bool is_unit() const { return factors_.empty(); }
    const std::vector<Factor>& factors() const { return factors_; }

    uint64_t degree() const {
        uint64_t s = 0;
        for (const auto& [v, e] : factors_) s += v.degree() * e;
        return s;
    }

    Monomial times(const Monomial& o) const;
    Monomial times(const DiffVar& v, uint32_t exp) const;

    /// Multidegree vector (variable exponents, then per-derivation total
    /// orders); length n + m.
    std::vector<uint64_t> multidegree(const Ambient& amb) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Total monomial order: degree, then lex on the multidegree vector, then
/// lex on the expanded factor sequences (largest generator first). Ambient
/// independent; two monomials of equal degree and equal multidegree always
/// have factor sequences of equal length.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b);

/// Comparator placing the largest monomial first (canonical storage and
/// printing order).
struct MonomialDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare_monomials(a, b) == std::strong_ordering::greater;
    }
};

}  // namespace diffalg

#endif
