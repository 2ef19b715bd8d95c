#include "diffalg/endomorphism.hpp"

namespace diffalg {

Endomorphism::Endomorphism(DiffPolynomial fx, DiffPolynomial fy)
    : fx_(std::move(fx)), fy_(std::move(fy)) {
    if (!(fx_.ambient() == fy_.ambient()))
        throw ParameterError("endomorphism components with mismatched ambients");
    if (fx_.ambient().n != 2)
        throw ParameterError("endomorphisms are defined over two variables");
}

Endomorphism Endomorphism::identity(uint32_t m) {
    Ambient amb{2, m};
    return Endomorphism(DiffPolynomial::variable(amb, 0), DiffPolynomial::variable(amb, 1));
}

ElementaryAuto::ElementaryAuto(int axis_, Rational a_, DiffPolynomial shift_)
    : axis(axis_), a(std::move(a_)), shift(std::move(shift_)) {
    if (axis != 1 && axis != 2) throw ParameterError("elementary axis must be 1 or 2");
    if (a.is_zero()) throw ParameterError("elementary scale must be nonzero");
    if (shift.ambient().n != 1)
        throw ParameterError("elementary shift must be a one-variable polynomial");
}

AffineAuto::AffineAuto(Rational a1_, Rational b1_, Rational c1_,
                       Rational a2_, Rational b2_, Rational c2_)
    : a1(std::move(a1_)), b1(std::move(b1_)), c1(std::move(c1_)),
      a2(std::move(a2_)), b2(std::move(b2_)), c2(std::move(c2_)) {
    if (det().is_zero()) throw ParameterError("affine map with singular linear part");
}

TriangularAuto::TriangularAuto(Rational a_, DiffPolynomial h_, Rational b_, Rational c_)
    : a(std::move(a_)), h(std::move(h_)), b(std::move(b_)), c(std::move(c_)) {
    if (a.is_zero() || b.is_zero()) throw ParameterError("triangular scales must be nonzero");
    if (h.ambient().n != 1)
        throw ParameterError("triangular shift must be a one-variable polynomial");
}

CElement::CElement(Rational a_, Rational b_, Rational c_, Rational b1_, Rational c1_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)),
      b1(std::move(b1_)), c1(std::move(c1_)) {
    if (a.is_zero() || b1.is_zero()) throw ParameterError("C element with zero scale");
}

namespace {

DiffPolynomial affine_component(const Ambient& amb, const Rational& cx,
                                const Rational& cy, const Rational& c0) {
    DiffPolynomial p = DiffPolynomial::constant(amb, c0);
    p = add(p, scale(DiffPolynomial::variable(amb, 0), cx));
    p = add(p, scale(DiffPolynomial::variable(amb, 1), cy));
    return p;
}

/// Re-expresses a one-variable polynomial through the given two-variable
/// target (the shift evaluated at y or at x).
DiffPolynomial shift_at(const DiffPolynomial& shift, const DiffPolynomial& target) {
    return substitute(shift, {target});
}

}  // namespace

Endomorphism to_endo(const ElementaryAuto& s) {
    Ambient amb{2, s.shift.ambient().m};
    DiffPolynomial x = DiffPolynomial::variable(amb, 0);
    DiffPolynomial y = DiffPolynomial::variable(amb, 1);
    if (s.axis == 1)
        return Endomorphism(add(scale(x, s.a), shift_at(s.shift, y)), y);
    return Endomorphism(x, add(scale(y, s.a), shift_at(s.shift, x)));
}

Endomorphism to_endo(const AffineAuto& l, uint32_t m) {
    Ambient amb{2, m};
    return Endomorphism(affine_component(amb, l.a1, l.b1, l.c1),
                        affine_component(amb, l.a2, l.b2, l.c2));
}

Endomorphism to_endo(const TriangularAuto& t) {
    Ambient amb{2, t.h.ambient().m};
    DiffPolynomial x = DiffPolynomial::variable(amb, 0);
    DiffPolynomial y = DiffPolynomial::variable(amb, 1);
    return Endomorphism(add(scale(x, t.a), shift_at(t.h, y)),
                        add(scale(y, t.b), DiffPolynomial::constant(amb, t.c)));
}

Endomorphism to_endo(const CElement& c, uint32_t m) {
    Ambient amb{2, m};
    return Endomorphism(affine_component(amb, c.a, c.b, c.c),
                        affine_component(amb, Rational(0), c.b1, c.c1));
}

AffineAuto to_affine(const CElement& c) {
    return AffineAuto(c.a, c.b, c.c, Rational(0), c.b1, c.c1);
}

TriangularAuto to_triangular(const CElement& c, uint32_t m) {
    Ambient one{1, m};
    DiffPolynomial h = add(scale(DiffPolynomial::variable(one, 0), c.b),
                           DiffPolynomial::constant(one, c.c));
    return TriangularAuto(c.a, h, c.b1, c.c1);
}

DiffPolynomial apply(const Endomorphism& phi, const DiffPolynomial& p, const Limits& lim) {
    if (!(p.ambient() == phi.ambient()))
        throw ParameterError("ambient (n, m) mismatch");
    DiffPolynomial targets[2] = {phi.fx(), phi.fy()};
    return substitute(p, std::span<const DiffPolynomial>(targets, 2), lim);
}

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner, const Limits& lim) {
    if (!(outer.ambient() == inner.ambient()))
        throw ParameterError("ambient (n, m) mismatch");
    return Endomorphism(apply(outer, inner.fx(), lim), apply(outer, inner.fy(), lim));
}

AffineAuto compose_affine(const AffineAuto& outer, const AffineAuto& inner) {
    return AffineAuto(inner.a1 * outer.a1 + inner.b1 * outer.a2,
                      inner.a1 * outer.b1 + inner.b1 * outer.b2,
                      inner.a1 * outer.c1 + inner.b1 * outer.c2 + inner.c1,
                      inner.a2 * outer.a1 + inner.b2 * outer.a2,
                      inner.a2 * outer.b1 + inner.b2 * outer.b2,
                      inner.a2 * outer.c1 + inner.b2 * outer.c2 + inner.c2);
}

CElement compose_c(const CElement& outer, const CElement& inner) {
    return CElement(inner.a * outer.a,
                    inner.a * outer.b + inner.b * outer.b1,
                    inner.a * outer.c + inner.b * outer.c1 + inner.c,
                    inner.b1 * outer.b1,
                    inner.b1 * outer.c1 + inner.c1);
}

AffineAuto invert_affine(const AffineAuto& l) {
    Rational d = l.det();
    Rational p1 = l.b2 / d, q1 = -l.b1 / d;
    Rational p2 = -l.a2 / d, q2 = l.a1 / d;
    return AffineAuto(p1, q1, -(p1 * l.c1 + q1 * l.c2),
                      p2, q2, -(p2 * l.c1 + q2 * l.c2));
}

TriangularAuto invert_triangular(const TriangularAuto& t, const Limits& lim) {
    // (a x + h(y), b y + c)^{-1} = (a^{-1}(x - h(b^{-1}(y - c))), b^{-1}(y - c))
    Ambient one = t.h.ambient();
    Rational binv = t.b.inverse();
    DiffPolynomial inner = add(scale(DiffPolynomial::variable(one, 0), binv),
                               DiffPolynomial::constant(one, -(t.c * binv)));
    DiffPolynomial h_inv = scale(substitute(t.h, {inner}, lim), -t.a.inverse());
    return TriangularAuto(t.a.inverse(), h_inv, binv, -(t.c * binv));
}

CElement invert_c(const CElement& c) {
    Rational ai = c.a.inverse(), b1i = c.b1.inverse();
    // second component: (y - c1)/b1; first: (x - b*(y-c1)/b1 - c)/a
    return CElement(ai, -(c.b * b1i * ai), (c.b * c.c1 * b1i - c.c) * ai,
                    b1i, -(c.c1 * b1i));
}

ElementaryAuto invert_elementary(const ElementaryAuto& s) {
    Rational ai = s.a.inverse();
    return ElementaryAuto(s.axis, ai, scale(s.shift, -ai));
}

long long auto_degree(const Endomorphism& phi) {
    if (phi.fx().is_zero() || phi.fy().is_zero())
        throw DomainError("degree of an endomorphism with a zero component");
    return deg(phi.fx()).value() + deg(phi.fy()).value();
}

bool verify_inverse_pair(const Endomorphism& phi, const Endomorphism& psi, const Limits& lim) {
    if (!(phi.ambient() == psi.ambient()))
        throw ParameterError("ambient (n, m) mismatch");
    Endomorphism id = Endomorphism::identity(phi.ambient().m);
    return compose(phi, psi, lim) == id && compose(psi, phi, lim) == id;
}

namespace {

struct LinearForm {
    Rational cx, cy, c0;
};

/// Reads a component of degree <= 1 as cx*x + cy*y + c0; monomials of
/// degree <= 1 are the unit and the underived variables.
std::optional<LinearForm> read_linear(const DiffPolynomial& p) {
    LinearForm f{Rational(0), Rational(0), Rational(0)};
    for (const auto& [mono, c] : p.terms()) {
        if (mono.is_unit()) {
            f.c0 = c;
            continue;
        }
        if (mono.degree() != 1) return std::nullopt;
        const auto& v = mono.factors()[0].first;
        if (v.var == 0) f.cx = c;
        else f.cy = c;
    }
    return f;
}

/// Reads a component as a*x + h(y) with h one-variable in y; the plain x
/// coefficient is separate, everything else must be a pure-y monomial.
std::optional<std::pair<Rational, DiffPolynomial>> read_x_plus_shift(const DiffPolynomial& p) {
    Ambient one{1, p.ambient().m};
    Rational a(0);
    DiffPolynomial h(one);
    for (const auto& [mono, c] : p.terms()) {
        if (mono.degree() == 1 && mono.factors()[0].first.var == 0) {
            a = c;
            continue;
        }
        Monomial remapped;
        bool pure_y = true;
        for (const auto& [v, e] : mono.factors()) {
            if (v.var != 1) {
                pure_y = false;
                break;
            }
            remapped = remapped.times(DiffVar{0, v.op}, e);
        }
        if (!pure_y) return std::nullopt;
        h.add_term(remapped, c);
    }
    return std::make_pair(a, h);
}

}  // namespace

Classification classify(const Endomorphism& phi) {
    Classification cls;

    auto f1 = read_linear(phi.fx());
    auto f2 = read_linear(phi.fy());
    bool affine = false;
    if (f1 && f2) {
        Rational d = f1->cx * f2->cy - f2->cx * f1->cy;
        if (!d.is_zero()) {
            affine = true;
            cls.affine = AffineAuto(f1->cx, f1->cy, f1->c0, f2->cx, f2->cy, f2->c0);
        }
    }

    bool triangular = false;
    if (f2 && f2->cx.is_zero() && !f2->cy.is_zero()) {
        auto top = read_x_plus_shift(phi.fx());
        if (top && !top->first.is_zero()) {
            triangular = true;
            cls.triangular = TriangularAuto(top->first, top->second, f2->cy, f2->c0);
        }
    }

    if (affine && triangular) {
        cls.kind = EndoClass::in_c;
        cls.c = CElement(f1->cx, f1->cy, f1->c0, f2->cy, f2->c0);
    } else if (affine) {
        cls.kind = EndoClass::affine;
    } else if (triangular) {
        cls.kind = EndoClass::triangular;
    } else {
        cls.kind = EndoClass::general;
    }
    return cls;
}

const char* endo_class_name(EndoClass k) {
    switch (k) {
        case EndoClass::affine: return "affine";
        case EndoClass::triangular: return "triangular";
        case EndoClass::in_c: return "in_C";
        case EndoClass::general: return "general";
    }
    return "general";
}

}  // namespace diffalg
