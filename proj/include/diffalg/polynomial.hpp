#ifndef DIFFALG_POLYNOMIAL_HPP
#define DIFFALG_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "diffalg/monomial.hpp"
#include "diffalg/rational.hpp"

namespace diffalg {

/// Resource caps. Exceeding one raises ResourceError, never a wrong result.
struct Limits {
    long long max_degree = 64;        ///< cap on mul/substitute result degree
    long long max_candidates = 100000;///< cap on membership candidate monomials
    long long max_system_cells = 50000000;  ///< rows*cols cap on linear systems
};

/// Degree value with a bottom element for the zero polynomial. BOTTOM
/// compares below every integer and absorbs under addition.
class Degree {
public:
    static Degree bottom() { return Degree(); }
    Degree(long long v) : bottom_(false), v_(v) {}

    bool is_bottom() const { return bottom_; }
    long long value() const {
        if (bottom_) throw DomainError("degree of the zero polynomial has no integer value");
        return v_;
    }

    friend Degree operator+(const Degree& a, const Degree& b) {
        if (a.bottom_ || b.bottom_) return bottom();
        return Degree(a.v_ + b.v_);
    }
    friend bool operator==(const Degree&, const Degree&) = default;
    friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
        if (a.bottom_ && b.bottom_) return std::strong_ordering::equal;
        if (a.bottom_) return std::strong_ordering::less;
        if (b.bottom_) return std::strong_ordering::greater;
        return a.v_ <=> b.v_;
    }

private:
    Degree() : bottom_(true), v_(0) {}
    bool bottom_;
    long long v_;
};

using WeightVector = std::vector<long long>;

/// Differential polynomial: a sparse rational linear combination of
/// monomials in the generators x_i^theta, over the fixed ambient (n, m).
/// Values are immutable in style: all operations return new polynomials.
/// Terms are stored in descending canonical monomial order.
class DiffPolynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialDescending>;

    explicit DiffPolynomial(Ambient amb) : amb_(amb) {}

    static DiffPolynomial zero(Ambient amb) { return DiffPolynomial(amb); }
    static DiffPolynomial constant(Ambient amb, Rational c);
    static DiffPolynomial generator(Ambient amb, uint32_t var, MultiIndex op);
    static DiffPolynomial variable(Ambient amb, uint32_t var) {
        return generator(amb, var, MultiIndex(amb.m));
    }
    static DiffPolynomial term(Ambient amb, Monomial mono, Rational c);

    const Ambient& ambient() const { return amb_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    std::size_t term_count() const { return terms_.size(); }
    Rational coeff(const Monomial& mono) const {
        auto it = terms_.find(mono);
        return it == terms_.end() ? Rational() : it->second;
    }
    /// Largest monomial (throws on zero).
    const Monomial& leading_monomial() const;

    void add_term(const Monomial& mono, const Rational& c);

    friend bool operator==(const DiffPolynomial& a, const DiffPolynomial& b) {
        return a.amb_ == b.amb_ && a.terms_ == b.terms_;
    }

private:
    Ambient amb_;
    TermMap terms_;
};

// --- arithmetic -----------------------------------------------------------

DiffPolynomial add(const DiffPolynomial& p, const DiffPolynomial& q);
DiffPolynomial sub(const DiffPolynomial& p, const DiffPolynomial& q);
DiffPolynomial neg(const DiffPolynomial& p);
DiffPolynomial scale(const DiffPolynomial& p, const Rational& c);
DiffPolynomial mul(const DiffPolynomial& p, const DiffPolynomial& q,
                   const Limits& lim = Limits{});

inline DiffPolynomial operator+(const DiffPolynomial& p, const DiffPolynomial& q) { return add(p, q); }
inline DiffPolynomial operator-(const DiffPolynomial& p, const DiffPolynomial& q) { return sub(p, q); }
inline DiffPolynomial operator-(const DiffPolynomial& p) { return neg(p); }
inline DiffPolynomial operator*(const DiffPolynomial& p, const DiffPolynomial& q) { return mul(p, q); }
inline DiffPolynomial operator*(const Rational& c, const DiffPolynomial& p) { return scale(p, c); }

// --- derivations ----------------------------------------------------------

/// Applies derivation `i` (0-based) once: linear over the constants, Leibniz
/// on products, and x_j^theta goes to x_j^{theta d_i}.
DiffPolynomial derive(const DiffPolynomial& p, uint32_t i);

/// Applies the full operator theta (any iteration order gives the same
/// result; the derivations commute).
DiffPolynomial derive_op(const DiffPolynomial& p, const MultiIndex& op);

// --- gradings -------------------------------------------------------------

std::vector<uint64_t> multidegree(const Monomial& mono, const Ambient& amb);

/// Total degree: max over monomials of the multidegree component sum;
/// BOTTOM for the zero polynomial, 0 for nonzero constants.
Degree deg(const DiffPolynomial& p);

/// Weighted degree w . alpha(mono), maximised over monomials. `w` must have
/// length n + m.
Degree deg_w(const DiffPolynomial& p, const WeightVector& w);

/// Sum of the terms of maximal w-degree (w-homogeneous). Throws DomainError
/// on the zero polynomial.
DiffPolynomial leading_part(const DiffPolynomial& p, const WeightVector& w);

/// Leading homogeneous part with respect to plain degree (the all-ones
/// weight).
DiffPolynomial leading_part(const DiffPolynomial& p);

bool is_homogeneous(const DiffPolynomial& p);
bool is_homogeneous_w(const DiffPolynomial& p, const WeightVector& w);

/// Terms of w-degree strictly below `cutoff`.
DiffPolynomial lower_part(const DiffPolynomial& p, const WeightVector& w, long long cutoff);

// --- substitution ---------------------------------------------------------

/// Evaluates g(f_1, ..., f_s): generator z_j^theta maps to
/// derive_op(targets[j], theta), extended as a ring homomorphism over the
/// rationals. All targets must share an ambient whose derivation count
/// equals g's.
DiffPolynomial substitute(const DiffPolynomial& g,
                          std::span<const DiffPolynomial> targets,
                          const Limits& lim = Limits{});
DiffPolynomial substitute(const DiffPolynomial& g,
                          std::initializer_list<DiffPolynomial> targets,
                          const Limits& lim = Limits{});

// --- order ----------------------------------------------------------------

/// The greatest generator occurring in p. Throws DomainError when p is
/// constant.
DiffVar leader(const DiffPolynomial& p);

}  // namespace diffalg

#endif
