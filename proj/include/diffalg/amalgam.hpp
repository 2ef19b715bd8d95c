#ifndef DIFFALG_AMALGAM_HPP
#define DIFFALG_AMALGAM_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "diffalg/endomorphism.hpp"

namespace diffalg {

/// Left coset representative of Af_2 modulo C: the identity or (y, x + a y).
struct A0Element {
    std::optional<Rational> a;  ///< engaged: (y, x + a y); empty: identity

    static A0Element identity() { return A0Element{}; }
    static A0Element swap_shear(Rational a) { return A0Element{std::move(a)}; }
    bool is_identity() const { return !a.has_value(); }

    friend bool operator==(const A0Element&, const A0Element&) = default;
};

/// Left coset representative of Tr_2 modulo C: (x + q(y), y) where every
/// homogeneous component of q has degree >= 2. q == 0 is the identity.
struct B0Element {
    explicit B0Element(DiffPolynomial q);
    static B0Element identity(uint32_t m) {
        return B0Element(DiffPolynomial::zero(Ambient{1, m}));
    }
    bool is_identity() const { return q.is_zero(); }

    DiffPolynomial q;  ///< one-variable polynomial in y
};

Endomorphism to_endo(const A0Element& g, uint32_t m);
Endomorphism to_endo(const B0Element& b, uint32_t m);

/// Alternating normal form
///   gamma_first . beta_1 . gamma_2 . beta_2 ... gamma_k . beta_k
///   . gamma_last . lambda
/// with every beta_i and every interior gamma non-identity and lambda in C.
/// When there is no beta (k = 0) the form is gamma_first . lambda and
/// gamma_last is kept as the identity.
struct NormalForm {
    A0Element gamma_first;
    std::vector<B0Element> betas;
    std::vector<A0Element> gammas;  ///< interior; size = max(betas.size()-1, 0)
    A0Element gamma_last;
    CElement lambda = CElement::identity();
    uint32_t m = 0;

    static NormalForm identity(uint32_t m) {
        NormalForm nf;
        nf.m = m;
        return nf;
    }
    std::size_t k() const { return betas.size(); }
    bool is_identity_form() const {
        return betas.empty() && gamma_first.is_identity() && gamma_last.is_identity() &&
               lambda.is_identity();
    }

    /// Shape invariants: alternation, no interior identities, k = 0 tail
    /// convention. Throws ParameterError on violation.
    void validate() const;
};

using ElementaryWord = std::vector<ElementaryAuto>;
using AffineOrTriangular = std::variant<AffineAuto, TriangularAuto>;

// --- coset splits -----------------------------------------------------------

/// l = gamma . eta with gamma in A_0 and eta in C.
std::pair<A0Element, CElement> affine_coset_split(const AffineAuto& l);

/// psi = beta . mu with beta in B_0 and mu in C. The degree >= 2 part of the
/// shift moves into beta scaled by the inverse leading coefficient.
std::pair<B0Element, CElement> triangular_coset_split(const TriangularAuto& psi);

/// Rewrites lambda . beta as beta' . lambda' with beta' in B_0 and lambda'
/// in C: beta' carries (1/a)(q(b1 y + c1) minus its degree < 2 part).
std::pair<B0Element, CElement> conjugate_b0_through_c(const CElement& lambda,
                                                      const B0Element& beta,
                                                      const Limits& lim = Limits{});

/// Writes an elementary automorphism as a short product of triangular and
/// affine factors (the swap conjugation for axis 2). Identity triangular
/// factors are dropped; recomposition equals the input.
std::vector<AffineOrTriangular> elementary_to_word(const ElementaryAuto& s);

// --- normal forms -----------------------------------------------------------

/// Folds the word left to right into the alternating normal form, splitting
/// each factor into coset representative and C part and pushing the pending
/// C element through incoming B_0 factors by conjugation. Adjacent B_0
/// representatives merge when the interior A_0 element collapses to the
/// identity.
NormalForm normalize(const ElementaryWord& word, uint32_t m, const Limits& lim = Limits{});

/// Composes the factors of the normal form in order.
Endomorphism evaluate(const NormalForm& nf, const Limits& lim = Limits{});

/// Plain left-to-right composition of an elementary word (oracle and CLI
/// path; independent of normalize).
Endomorphism compose_word(const ElementaryWord& word, uint32_t m, const Limits& lim = Limits{});

/// Degrees (deg f1, deg f2) of the evaluated form, computed from the shape
/// data alone. Requires the reduced shape beta_1 gamma_2 ... gamma_k beta_k
/// (identity gamma_first, gamma_last and lambda, k >= 1). With n_i = deg q_i
/// and s_i the y-multiplicity of q_i the recursion is
///   d1(1) = n_1,              d2(1) = 1,
///   d1(i) = n_i + (d1(i-1) - 1) s_i,   d2(i) = d1(i-1).
std::pair<long long, long long> degree_formula(const NormalForm& nf);

/// Executable uniqueness: true iff nf is the all-identity form or its
/// evaluation differs from the identity.
bool assert_unique(const NormalForm& nf, const Limits& lim = Limits{});

/// Deterministic text dump: one factor per line ("G id" / "G a=<rat>",
/// "B q=<expr in y>", final "C a=... b=... c=... b1=... c1=..."); the
/// gamma_last line is printed only when k >= 1.
std::string dump(const NormalForm& nf);

/// Maximal y-multiplicity over the monomials of a one-variable polynomial
/// (derived generators count with multiplicity).
long long y_multiplicity(const DiffPolynomial& q);

/// Decomposes an invertible affine map into elementary automorphisms
/// (left-to-right composition order).
ElementaryWord affine_to_word(const AffineAuto& l, uint32_t m);

}  // namespace diffalg

#endif
