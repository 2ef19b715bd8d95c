#include "diffalg/amalgam.hpp"

#include "diffalg/parser.hpp"

namespace diffalg {

B0Element::B0Element(DiffPolynomial q_) : q(std::move(q_)) {
    if (q.ambient().n != 1)
        throw ParameterError("B0 shift must be a one-variable polynomial");
    for (const auto& [mono, c] : q.terms())
        if (mono.degree() < 2)
            throw ParameterError("B0 shift must have homogeneous components of degree >= 2");
}

Endomorphism to_endo(const A0Element& g, uint32_t m) {
    if (g.is_identity()) return Endomorphism::identity(m);
    Ambient amb{2, m};
    DiffPolynomial x = DiffPolynomial::variable(amb, 0);
    DiffPolynomial y = DiffPolynomial::variable(amb, 1);
    return Endomorphism(y, add(x, scale(y, *g.a)));
}

Endomorphism to_endo(const B0Element& b, uint32_t m) {
    Ambient amb{2, m};
    DiffPolynomial x = DiffPolynomial::variable(amb, 0);
    DiffPolynomial y = DiffPolynomial::variable(amb, 1);
    return Endomorphism(add(x, substitute(b.q, {y})), y);
}

void NormalForm::validate() const {
    if (!betas.empty() && gammas.size() != betas.size() - 1)
        throw ParameterError("normal form alternation broken");
    if (betas.empty() && !gammas.empty())
        throw ParameterError("normal form with interior factors but no B0 part");
    if (betas.empty() && !gamma_last.is_identity())
        throw ParameterError("normal form with k = 0 must keep gamma_last = id");
    for (const auto& b : betas)
        if (b.is_identity()) throw ParameterError("identity B0 factor in normal form");
    for (const auto& g : gammas)
        if (g.is_identity()) throw ParameterError("identity interior A0 factor in normal form");
}

namespace {

AffineAuto to_affine(const A0Element& g) {
    if (g.is_identity())
        return AffineAuto(Rational(1), Rational(0), Rational(0),
                          Rational(0), Rational(1), Rational(0));
    return AffineAuto(Rational(0), Rational(1), Rational(0),
                      Rational(1), *g.a, Rational(0));
}

/// Splits a one-variable polynomial into (degree >= 2 part, linear
/// coefficient, constant).
struct ShiftParts {
    DiffPolynomial high;
    Rational lin;
    Rational cst;
};

ShiftParts split_shift(const DiffPolynomial& h) {
    ShiftParts parts{DiffPolynomial::zero(h.ambient()), Rational(0), Rational(0)};
    for (const auto& [mono, c] : h.terms()) {
        if (mono.is_unit()) parts.cst = c;
        else if (mono.degree() == 1) parts.lin = c;
        else parts.high.add_term(mono, c);
    }
    return parts;
}

}  // namespace

std::pair<A0Element, CElement> affine_coset_split(const AffineAuto& l) {
    if (l.a2.is_zero()) {
        return {A0Element::identity(), CElement(l.a1, l.b1, l.c1, l.b2, l.c2)};
    }
    A0Element gamma = A0Element::swap_shear(l.b2 / l.a2);
    CElement eta(l.b1 - l.a1 * l.b2 / l.a2, l.a1, l.c1, l.a2, l.c2);
    return {gamma, eta};
}

std::pair<B0Element, CElement> triangular_coset_split(const TriangularAuto& psi) {
    ShiftParts parts = split_shift(psi.h);
    B0Element beta(scale(parts.high, psi.a.inverse()));
    CElement mu(psi.a, parts.lin, parts.cst, psi.b, psi.c);
    return {beta, mu};
}

std::pair<B0Element, CElement> conjugate_b0_through_c(const CElement& lambda,
                                                      const B0Element& beta,
                                                      const Limits& lim) {
    if (beta.is_identity()) return {beta, lambda};
    Ambient one = beta.q.ambient();
    DiffPolynomial inner = add(scale(DiffPolynomial::variable(one, 0), lambda.b1),
                               DiffPolynomial::constant(one, lambda.c1));
    DiffPolynomial r = substitute(beta.q, {inner}, lim);
    ShiftParts parts = split_shift(r);
    B0Element beta_prime(scale(parts.high, lambda.a.inverse()));
    CElement lambda_prime(lambda.a, lambda.b + parts.lin, lambda.c + parts.cst,
                          lambda.b1, lambda.c1);
    return {beta_prime, lambda_prime};
}

std::vector<AffineOrTriangular> elementary_to_word(const ElementaryAuto& s) {
    ShiftParts parts = split_shift(s.shift);
    std::vector<AffineOrTriangular> out;
    Rational inv = s.a.inverse();
    if (s.axis == 1) {
        if (!parts.high.is_zero())
            out.emplace_back(TriangularAuto(Rational(1), scale(parts.high, inv),
                                            Rational(1), Rational(0)));
        out.emplace_back(AffineAuto(s.a, parts.lin, parts.cst,
                                    Rational(0), Rational(1), Rational(0)));
    } else {
        out.emplace_back(AffineAuto(Rational(0), Rational(1), Rational(0),
                                    Rational(1), Rational(0), Rational(0)));
        if (!parts.high.is_zero())
            out.emplace_back(TriangularAuto(Rational(1), scale(parts.high, inv),
                                            Rational(1), Rational(0)));
        out.emplace_back(AffineAuto(Rational(0), Rational(1), Rational(0),
                                    s.a, parts.lin, parts.cst));
    }
    return out;
}

namespace {

void append_affine(NormalForm& nf, const AffineAuto& f) {
    A0Element& slot = nf.betas.empty() ? nf.gamma_first : nf.gamma_last;
    AffineAuto total =
        compose_affine(compose_affine(to_affine(slot), diffalg::to_affine(nf.lambda)), f);
    auto [gamma, eta] = affine_coset_split(total);
    slot = gamma;
    nf.lambda = eta;
}

void append_triangular(NormalForm& nf, const TriangularAuto& f, const Limits& lim) {
    auto [beta_f, mu_f] = triangular_coset_split(f);
    auto [beta, lambda_c] = conjugate_b0_through_c(nf.lambda, beta_f, lim);
    CElement tail = compose_c(lambda_c, mu_f);
    if (beta.is_identity()) {
        nf.lambda = tail;
        return;
    }
    if (nf.betas.empty()) {
        nf.betas.push_back(std::move(beta));
    } else if (!nf.gamma_last.is_identity()) {
        nf.gammas.push_back(nf.gamma_last);
        nf.betas.push_back(std::move(beta));
    } else {
        // gamma collapsed to the identity: adjacent B0 factors merge.
        DiffPolynomial q = add(nf.betas.back().q, beta.q);
        if (q.is_zero()) {
            nf.betas.pop_back();
            if (!nf.gammas.empty()) {
                nf.gamma_last = nf.gammas.back();
                nf.gammas.pop_back();
                nf.lambda = tail;
                return;
            }
        } else {
            nf.betas.back() = B0Element(std::move(q));
        }
    }
    nf.gamma_last = A0Element::identity();
    nf.lambda = tail;
}

}  // namespace

NormalForm normalize(const ElementaryWord& word, uint32_t m, const Limits& lim) {
    NormalForm nf = NormalForm::identity(m);
    for (const auto& s : word) {
        if (s.shift.ambient().m != m)
            throw ParameterError("elementary factor derivation count mismatch");
        for (const auto& factor : elementary_to_word(s)) {
            if (std::holds_alternative<AffineAuto>(factor))
                append_affine(nf, std::get<AffineAuto>(factor));
            else
                append_triangular(nf, std::get<TriangularAuto>(factor), lim);
        }
    }
    nf.validate();
    return nf;
}

Endomorphism evaluate(const NormalForm& nf, const Limits& lim) {
    nf.validate();
    Endomorphism e = to_endo(nf.gamma_first, nf.m);
    for (std::size_t i = 0; i < nf.betas.size(); ++i) {
        e = compose(e, to_endo(nf.betas[i], nf.m), lim);
        if (i < nf.gammas.size()) e = compose(e, to_endo(nf.gammas[i], nf.m), lim);
    }
    if (!nf.gamma_last.is_identity()) e = compose(e, to_endo(nf.gamma_last, nf.m), lim);
    if (!nf.lambda.is_identity()) e = compose(e, to_endo(nf.lambda, nf.m), lim);
    return e;
}

Endomorphism compose_word(const ElementaryWord& word, uint32_t m, const Limits& lim) {
    Endomorphism e = Endomorphism::identity(m);
    for (const auto& s : word) {
        if (s.shift.ambient().m != m)
            throw ParameterError("elementary factor derivation count mismatch");
        e = compose(e, to_endo(s), lim);
    }
    return e;
}

long long y_multiplicity(const DiffPolynomial& q) {
    long long best = 0;
    for (const auto& [mono, c] : q.terms()) {
        long long s = 0;
        for (const auto& [v, e] : mono.factors()) s += e;
        if (s > best) best = s;
    }
    return best;
}

std::pair<long long, long long> degree_formula(const NormalForm& nf) {
    nf.validate();
    if (nf.betas.empty() || !nf.gamma_first.is_identity() || !nf.gamma_last.is_identity() ||
        !nf.lambda.is_identity())
        throw ParameterError("degree formula requires the shape beta_1 gamma_2 ... beta_k");
    long long d1 = deg(nf.betas[0].q).value();
    long long d2 = 1;
    for (std::size_t i = 1; i < nf.betas.size(); ++i) {
        long long n = deg(nf.betas[i].q).value();
        long long s = y_multiplicity(nf.betas[i].q);
        long long t = d1;
        d1 = n + (t - 1) * s;
        d2 = t;
    }
    return {d1, d2};
}

bool assert_unique(const NormalForm& nf, const Limits& lim) {
    if (nf.is_identity_form()) return true;
    return !(evaluate(nf, lim) == Endomorphism::identity(nf.m));
}

std::string dump(const NormalForm& nf) {
    nf.validate();
    std::vector<std::string> y_name{"y"};
    auto a0_line = [](const A0Element& g) {
        return g.is_identity() ? std::string("G id") : "G a=" + g.a->str();
    };
    std::string out = a0_line(nf.gamma_first) + "\n";
    for (std::size_t i = 0; i < nf.betas.size(); ++i) {
        out += "B q=" + to_string(nf.betas[i].q, y_name) + "\n";
        if (i < nf.gammas.size()) out += a0_line(nf.gammas[i]) + "\n";
    }
    if (!nf.betas.empty()) out += a0_line(nf.gamma_last) + "\n";
    out += "C a=" + nf.lambda.a.str() + " b=" + nf.lambda.b.str() +
           " c=" + nf.lambda.c.str() + " b1=" + nf.lambda.b1.str() +
           " c1=" + nf.lambda.c1.str() + "\n";
    return out;
}

ElementaryWord affine_to_word(const AffineAuto& l, uint32_t m) {
    Ambient one{1, m};
    auto linear_shift = [&](const Rational& cv, const Rational& c0) {
        return add(scale(DiffPolynomial::variable(one, 0), cv),
                   DiffPolynomial::constant(one, c0));
    };

    AffineAuto cur = l;
    std::vector<ElementaryAuto> applied;
    auto right_mul = [&](ElementaryAuto s, const Rational& scale_coeff,
                         const Rational& lin, const Rational& cst) {
        // Structural right multiplication: axis 1 replaces row 1 by
        // a*row1 + lin*row2 + cst, axis 2 replaces row 2 symmetrically.
        if (s.axis == 1) {
            cur = AffineAuto(scale_coeff * cur.a1 + lin * cur.a2,
                             scale_coeff * cur.b1 + lin * cur.b2,
                             scale_coeff * cur.c1 + lin * cur.c2 + cst,
                             cur.a2, cur.b2, cur.c2);
        } else {
            cur = AffineAuto(cur.a1, cur.b1, cur.c1,
                             scale_coeff * cur.a2 + lin * cur.a1,
                             scale_coeff * cur.b2 + lin * cur.b1,
                             scale_coeff * cur.c2 + lin * cur.c1 + cst);
        }
        applied.push_back(std::move(s));
    };
    auto push = [&](int axis, const Rational& a, const Rational& lin, const Rational& cst) {
        right_mul(ElementaryAuto(axis, a, linear_shift(lin, cst)), a, lin, cst);
    };

    if (cur.a1.is_zero()) push(1, Rational(1), Rational(1), Rational(0));
    if (!cur.a2.is_zero()) push(2, Rational(1), -(cur.a2 / cur.a1), Rational(0));
    if (!cur.b1.is_zero()) push(1, Rational(1), -(cur.b1 / cur.b2), Rational(0));
    if (!cur.a1.is_one() || !cur.c1.is_zero())
        push(1, cur.a1.inverse(), Rational(0), -(cur.c1 / cur.a1));
    if (!cur.b2.is_one() || !cur.c2.is_zero())
        push(2, cur.b2.inverse(), Rational(0), -(cur.c2 / cur.b2));

    if (!cur.a1.is_one() || !cur.b1.is_zero() || !cur.c1.is_zero() ||
        !cur.a2.is_zero() || !cur.b2.is_one() || !cur.c2.is_zero())
        throw Error("affine decomposition did not reach the identity");

    ElementaryWord word;
    for (auto it = applied.rbegin(); it != applied.rend(); ++it)
        word.push_back(invert_elementary(*it));
    return word;
}

}  // namespace diffalg
