#include "diffalg/reduction.hpp"

#include <algorithm>
#include <map>

#include "diffalg/parser.hpp"

namespace diffalg {

std::optional<Rational> linear_dependence(const DiffPolynomial& u, const DiffPolynomial& v) {
    if (u.is_zero() || v.is_zero())
        throw ParameterError("linear dependence requires nonzero inputs");
    if (!is_homogeneous(u) || !is_homogeneous(v))
        throw ParameterError("linear dependence requires homogeneous inputs");
    if (!(deg(u) == deg(v)))
        throw ParameterError("linear dependence requires equal degrees");
    const Monomial& pivot = v.leading_monomial();
    Rational gamma = u.coeff(pivot) / v.coeff(pivot);
    if (gamma.is_zero()) return std::nullopt;
    if (u == scale(v, gamma)) return gamma;
    return std::nullopt;
}

namespace {

/// All derivation operators with |theta| == r, descending lex order.
void operators_of_order(uint32_t m, long long r, std::vector<MultiIndex>& out) {
    if (m == 0) {
        if (r == 0) out.push_back(MultiIndex(0));
        return;
    }
    // compositions of r into m parts
    std::vector<uint32_t> parts(m, 0);
    auto rec = [&](auto&& self, uint32_t pos, long long rest) -> void {
        if (pos + 1 == m) {
            parts[pos] = static_cast<uint32_t>(rest);
            MultiIndex op(m);
            for (uint32_t i = 0; i < m; ++i)
                for (uint32_t k = 0; k < parts[i]; ++k) op = op.bumped(i);
            out.push_back(op);
            return;
        }
        for (long long v = rest; v >= 0; --v) {
            parts[pos] = static_cast<uint32_t>(v);
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, r);
}

}  // namespace

std::vector<Monomial> enumerate_candidate_monomials(long long d, long long D, uint32_t m,
                                                    const Limits& lim) {
    if (d <= 0) throw ParameterError("candidate enumeration requires generator degree >= 1");
    std::vector<Monomial> out;
    if (D < 0) return out;
    if (D == 0) {
        out.push_back(Monomial::unit());
        return out;
    }

    for (long long s = 1; s * d <= D; ++s) {
        long long rest = D - s * d;
        // ops usable by any factor: order <= rest, fixed descending list
        std::vector<MultiIndex> ops;
        for (long long r = rest; r >= 0; --r) operators_of_order(m, r, ops);

        std::vector<uint32_t> chosen;
        auto rec = [&](auto&& self, std::size_t min_idx, long long left, long long slots) -> void {
            if (slots == 0) {
                if (left != 0) return;
                Monomial mono;
                for (uint32_t idx : chosen) mono = mono.times(DiffVar{0, ops[idx]}, 1);
                out.push_back(mono);
                if (static_cast<long long>(out.size()) > lim.max_candidates)
                    throw ResourceError("candidate monomial count exceeds cap " +
                                        std::to_string(lim.max_candidates));
                return;
            }
            for (std::size_t i = min_idx; i < ops.size(); ++i) {
                long long ord = static_cast<long long>(ops[i].order());
                if (ord > left) continue;
                // remaining slots can absorb at most `left`, at least 0 each
                if (left - ord > (slots - 1) * rest) continue;
                chosen.push_back(static_cast<uint32_t>(i));
                self(self, i, left - ord, slots - 1);
                chosen.pop_back();
            }
        };
        rec(rec, 0, rest, s);
    }

    std::sort(out.begin(), out.end(), MonomialDescending{});
    return out;
}

MembershipSolution hom_membership(const DiffPolynomial& u, const DiffPolynomial& h,
                                  const Limits& lim) {
    if (u.is_zero() || h.is_zero())
        throw ParameterError("membership requires nonzero inputs");
    if (!(u.ambient() == h.ambient())) throw ParameterError("ambient (n, m) mismatch");
    if (!is_homogeneous(u) || !is_homogeneous(h))
        throw ParameterError("membership requires homogeneous inputs");
    long long D = deg(u).value();
    long long d = deg(h).value();
    if (d == 0) throw ParameterError("membership requires a nonconstant generator");

    uint32_t m = h.ambient().m;
    std::vector<Monomial> candidates = enumerate_candidate_monomials(d, D, m, lim);
    if (candidates.empty()) return MembershipSolution{};

    // Expand each candidate at h, sharing derived powers of h across
    // candidates.
    std::map<MultiIndex, DiffPolynomial> derived;
    auto h_theta = [&](const MultiIndex& op) -> const DiffPolynomial& {
        auto it = derived.find(op);
        if (it == derived.end()) it = derived.emplace(op, derive_op(h, op)).first;
        return it->second;
    };
    std::vector<DiffPolynomial> expansions;
    expansions.reserve(candidates.size());
    for (const Monomial& t : candidates) {
        DiffPolynomial e = DiffPolynomial::constant(h.ambient(), Rational(1));
        for (const auto& [v, exp] : t.factors())
            for (uint32_t k = 0; k < exp; ++k) e = mul(e, h_theta(v.op), lim);
        expansions.push_back(std::move(e));
    }

    // Row index: every monomial seen in u or in an expansion, canonical
    // descending order.
    std::map<Monomial, std::size_t, MonomialDescending> row_of;
    for (const auto& [mono, c] : u.terms()) row_of.emplace(mono, 0);
    for (const auto& e : expansions)
        for (const auto& [mono, c] : e.terms()) row_of.emplace(mono, 0);
    std::size_t n_rows = 0;
    for (auto& [mono, idx] : row_of) idx = n_rows++;

    if (static_cast<long long>(n_rows) * static_cast<long long>(candidates.size()) >
        lim.max_system_cells)
        throw ResourceError("membership system size exceeds cap");

    LinearSystem sys;
    sys.tags = candidates;
    sys.rows.assign(n_rows, std::vector<Rational>(candidates.size(), Rational(0)));
    sys.rhs.assign(n_rows, Rational(0));
    for (std::size_t j = 0; j < expansions.size(); ++j)
        for (const auto& [mono, c] : expansions[j].terms())
            sys.rows[row_of.at(mono)][j] = c;
    for (const auto& [mono, c] : u.terms()) sys.rhs[row_of.at(mono)] = c;

    auto solution = solve_linear(sys);
    if (!solution) return MembershipSolution{};

    DiffPolynomial g(Ambient{1, m});
    for (std::size_t j = 0; j < candidates.size(); ++j)
        g.add_term(candidates[j], (*solution)[j]);

    if (!(substitute(g, {h}, lim) == u))
        throw Error("membership solver returned an unsound certificate");
    return MembershipSolution{std::move(g)};
}

namespace {

std::optional<std::pair<Endomorphism, ReductionStep>> reduce_once(
    const Endomorphism& phi, const Limits& lim, std::vector<MembershipQuery>* queries) {
    if (phi.fx().is_zero() || phi.fy().is_zero())
        throw DomainError("reduction on an endomorphism with a zero component");

    long long d1 = deg(phi.fx()).value();
    long long d2 = deg(phi.fy()).value();
    int order[2] = {1, 2};
    if (d2 > d1) {
        order[0] = 2;
        order[1] = 1;
    }

    for (int axis : order) {
        const DiffPolynomial& fi = axis == 1 ? phi.fx() : phi.fy();
        const DiffPolynomial& fj = axis == 1 ? phi.fy() : phi.fx();
        if (fj.is_constant()) continue;  // no membership query against a constant

        DiffPolynomial u = leading_part(fi);
        DiffPolynomial h = leading_part(fj);
        MembershipSolution sol = hom_membership(u, h, lim);
        if (queries) queries->push_back(MembershipQuery{axis, u, h, sol.found()});
        if (!sol.found()) continue;

        DiffPolynomial replaced = sub(fi, substitute(*sol.g, {fj}, lim));
        long long before = auto_degree(phi);
        long long after = -1;
        if (!replaced.is_zero())
            after = deg(replaced).value() + deg(fj).value();
        if (after >= before)
            throw Error("elementary step failed to decrease the degree");
        Endomorphism next = axis == 1 ? Endomorphism(replaced, phi.fy())
                                      : Endomorphism(phi.fx(), replaced);
        return std::make_pair(std::move(next),
                              ReductionStep{axis, std::move(*sol.g), before, after});
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::pair<Endomorphism, ReductionStep>> try_elementary_reduce(
    const Endomorphism& phi, const Limits& lim) {
    return reduce_once(phi, lim, nullptr);
}

TamenessVerdict decide_tame(const Endomorphism& phi, const Limits& lim) {
    uint32_t m = phi.ambient().m;
    Endomorphism cur = phi;
    TamenessVerdict verdict;

    while (true) {
        if (cur.fx().is_zero() || cur.fy().is_zero())
            throw DomainError("reduction reached a zero component; input is not an automorphism");
        Classification cls = classify(cur);
        if (cls.kind == EndoClass::affine || cls.kind == EndoClass::in_c) {
            AffineAuto tail = cls.affine ? *cls.affine : to_affine(*cls.c);
            if (verdict.steps.empty()) {
                verdict.kind = Tameness::affine;
                verdict.status = AutoStatus::verified;
                return verdict;
            }
            verdict.kind = Tameness::tame;
            verdict.status = AutoStatus::verified;
            verdict.word = affine_to_word(tail, m);
            for (auto it = verdict.steps.rbegin(); it != verdict.steps.rend(); ++it)
                verdict.word.emplace_back(it->axis, Rational(1), it->g);
            if (!(compose_word(verdict.word, m, lim) == phi))
                throw Error("tame factorisation failed to recompose the input");
            return verdict;
        }

        std::vector<MembershipQuery> queries;
        auto step = reduce_once(cur, lim, &queries);
        if (!step) {
            verdict.kind = Tameness::irreducible;
            verdict.status = AutoStatus::unverified;
            verdict.stuck = cur;
            verdict.failed_queries = std::move(queries);
            return verdict;
        }
        verdict.steps.push_back(step->second);
        cur = step->first;
    }
}

std::pair<Endomorphism, Endomorphism> anick_analog(uint32_t m) {
    if (m < 2)
        throw ParameterError(
            "the wild-candidate construction requires at least two derivations; "
            "with a single derivation no tame/wild claim is made");
    Ambient amb{2, m};
    DiffPolynomial x = DiffPolynomial::variable(amb, 0);
    DiffPolynomial y = DiffPolynomial::variable(amb, 1);
    DiffPolynomial w = sub(derive(x, 0), derive(y, 1));
    Endomorphism phi(add(x, derive(w, 1)), add(y, derive(w, 0)));
    Endomorphism phi_inv(sub(x, derive(w, 1)), sub(y, derive(w, 0)));
    if (!verify_inverse_pair(phi, phi_inv))
        throw Error("constructed inverse pair failed verification");
    return {std::move(phi), std::move(phi_inv)};
}

WildCertificate certify_wild_anick(uint32_t m, const Limits& lim) {
    auto [phi, phi_inv] = anick_analog(m);
    WildCertificate cert{phi, phi_inv, leading_part(phi.fx()), leading_part(phi.fy())};

    cert.inverse_ok = verify_inverse_pair(phi, phi_inv, lim);
    cert.membership_fx_absent = !hom_membership(cert.lead_fx, cert.lead_fy, lim).found();
    cert.membership_fy_absent = !hom_membership(cert.lead_fy, cert.lead_fx, lim).found();
    cert.shape = classify(phi).kind;
    cert.tameness = decide_tame(phi, lim).kind;

    if (!cert.inverse_ok)
        throw CertificationError("inverse pair verification failed");
    if (!cert.membership_fx_absent || !cert.membership_fy_absent)
        throw CertificationError("unexpected membership success; wildness not certified");
    if (cert.shape != EndoClass::general)
        throw CertificationError("unexpected structured shape for the wild candidate");
    if (cert.tameness != Tameness::irreducible)
        throw CertificationError("reduction loop did not report an irreducible pair");
    return cert;
}

std::string to_text(const WildCertificate& cert) {
    auto yesno = [](bool b) { return b ? "true" : "false"; };
    std::string s;
    s += "input fx=" + to_string(cert.phi.fx()) + "\n";
    s += "input fy=" + to_string(cert.phi.fy()) + "\n";
    s += "inverse fx=" + to_string(cert.phi_inv.fx()) + "\n";
    s += "inverse fy=" + to_string(cert.phi_inv.fy()) + "\n";
    s += std::string("inverse_pair=") + yesno(cert.inverse_ok) + "\n";
    s += "leading fx=" + to_string(cert.lead_fx) + "\n";
    s += "leading fy=" + to_string(cert.lead_fy) + "\n";
    s += std::string("membership fx in k{fy}: ") +
         (cert.membership_fx_absent ? "ABSENT" : "PRESENT") + "\n";
    s += std::string("membership fy in k{fx}: ") +
         (cert.membership_fy_absent ? "ABSENT" : "PRESENT") + "\n";
    s += std::string("classify=") + endo_class_name(cert.shape) + "\n";
    std::string tame = cert.tameness == Tameness::affine
                           ? "AFFINE"
                           : cert.tameness == Tameness::tame ? "TAME" : "IRREDUCIBLE";
    s += "tameness=" + tame + "\n";
    s += std::string("verdict=") +
         (cert.tameness == Tameness::irreducible && cert.inverse_ok ? "WILD" : "UNDECIDED") +
         "\n";
    return s;
}

}  // namespace diffalg
