#ifndef DIFFALG_ENDOMORPHISM_HPP
#define DIFFALG_ENDOMORPHISM_HPP

#include <optional>

#include "diffalg/polynomial.hpp"

namespace diffalg {

/// Substitution endomorphism of k{x,y}: x -> fx, y -> fy. Both components
/// live in the two-variable ambient with a common derivation count.
class Endomorphism {
public:
    Endomorphism(DiffPolynomial fx, DiffPolynomial fy);

    static Endomorphism identity(uint32_t m);

    const DiffPolynomial& fx() const { return fx_; }
    const DiffPolynomial& fy() const { return fy_; }
    const Ambient& ambient() const { return fx_.ambient(); }

    friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
        return a.fx_ == b.fx_ && a.fy_ == b.fy_;
    }

private:
    DiffPolynomial fx_, fy_;
};

/// sigma(1,a,f) = (a x + f(y), y) or sigma(2,a,g) = (x, a y + g(x)),
/// a nonzero. The shift is stored as a one-variable polynomial.
struct ElementaryAuto {
    ElementaryAuto(int axis, Rational a, DiffPolynomial shift);

    int axis;            ///< 1 or 2
    Rational a;          ///< nonzero scale
    DiffPolynomial shift;///< in y when axis = 1, in x when axis = 2
};

/// (a1 x + b1 y + c1, a2 x + b2 y + c2) with a1 b2 != a2 b1.
struct AffineAuto {
    AffineAuto(Rational a1, Rational b1, Rational c1,
               Rational a2, Rational b2, Rational c2);

    Rational a1, b1, c1, a2, b2, c2;

    Rational det() const { return a1 * b2 - a2 * b1; }
};

/// (a x + h(y), b y + c) with a, b nonzero; h is a one-variable polynomial.
struct TriangularAuto {
    TriangularAuto(Rational a, DiffPolynomial h, Rational b, Rational c);

    Rational a;
    DiffPolynomial h;
    Rational b, c;
};

/// Element of C = Af_2 intersect Tr_2: (a x + b y + c, b1 y + c1) with
/// a, b1 nonzero.
struct CElement {
    CElement(Rational a, Rational b, Rational c, Rational b1, Rational c1);

    static CElement identity() {
        return CElement(Rational(1), Rational(0), Rational(0), Rational(1), Rational(0));
    }
    bool is_identity() const {
        return a.is_one() && b.is_zero() && c.is_zero() && b1.is_one() && c1.is_zero();
    }

    Rational a, b, c, b1, c1;
};

// --- conversions ------------------------------------------------------------

Endomorphism to_endo(const ElementaryAuto& s);
Endomorphism to_endo(const AffineAuto& l, uint32_t m);
Endomorphism to_endo(const TriangularAuto& t);
Endomorphism to_endo(const CElement& c, uint32_t m);

AffineAuto to_affine(const CElement& c);
TriangularAuto to_triangular(const CElement& c, uint32_t m);

// --- group operations -------------------------------------------------------

/// Applies the endomorphism to a polynomial over the same ambient.
DiffPolynomial apply(const Endomorphism& phi, const DiffPolynomial& p,
                     const Limits& lim = Limits{});

/// compose(outer, inner) is p -> outer(inner(p)): with outer = (f1, f2) and
/// inner = (g1, g2) the result is (g1(f1,f2), g2(f1,f2)).
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner,
                     const Limits& lim = Limits{});

AffineAuto compose_affine(const AffineAuto& outer, const AffineAuto& inner);
CElement compose_c(const CElement& outer, const CElement& inner);

AffineAuto invert_affine(const AffineAuto& l);
TriangularAuto invert_triangular(const TriangularAuto& t, const Limits& lim = Limits{});
CElement invert_c(const CElement& c);
ElementaryAuto invert_elementary(const ElementaryAuto& s);

/// deg(f1) + deg(f2); throws DomainError when a component is zero.
long long auto_degree(const Endomorphism& phi);

/// True iff both compositions equal the identity.
bool verify_inverse_pair(const Endomorphism& phi, const Endomorphism& psi,
                         const Limits& lim = Limits{});

// --- shape recognition ------------------------------------------------------

enum class EndoClass { affine, triangular, in_c, general };

struct Classification {
    EndoClass kind = EndoClass::general;
    std::optional<AffineAuto> affine;
    std::optional<TriangularAuto> triangular;
    std::optional<CElement> c;
};

/// Pattern-matches the component shapes. Returns structured forms only for
/// valid group elements (nonsingular linear part, nonzero scales); anything
/// else is general.
Classification classify(const Endomorphism& phi);

const char* endo_class_name(EndoClass k);

}  // namespace diffalg

#endif
