#ifndef DIFFALG_REDUCTION_HPP
#define DIFFALG_REDUCTION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffalg/amalgam.hpp"
#include "diffalg/endomorphism.hpp"
#include "diffalg/linear_solver.hpp"

namespace diffalg {

/// Certificate for u in k{h}: a one-variable polynomial G with G(h) = u,
/// or absent.
struct MembershipSolution {
    std::optional<DiffPolynomial> g;
    bool found() const { return g.has_value(); }
};

/// For nonzero homogeneous u, v of equal degree: gamma with u = gamma v,
/// or nullopt. Throws ParameterError on non-homogeneous or degree-mismatched
/// input.
std::optional<Rational> linear_dependence(const DiffPolynomial& u, const DiffPolynomial& v);

/// All monomials z^{theta_1} ... z^{theta_s} (s >= 0, unordered factors)
/// whose weighted degree s*d + sum |theta_i| equals D, for a generator of
/// degree d >= 1. The list is finite because every factor weighs at least d;
/// s = 0 contributes the unit monomial only when D = 0. Sorted descending.
std::vector<Monomial> enumerate_candidate_monomials(long long d, long long D, uint32_t m,
                                                    const Limits& lim = Limits{});

/// Decides whether the homogeneous u lies in the differential subalgebra
/// generated by the homogeneous h (deg h >= 1): forms the unknown-coefficient
/// combination over the candidate monomials, expands symbolically and matches
/// coefficients as an exact linear system. A returned G always satisfies
/// G(h) = u (checked before returning).
MembershipSolution hom_membership(const DiffPolynomial& u, const DiffPolynomial& h,
                                  const Limits& lim = Limits{});

/// One elementary transformation f_i -> f_i - G(f_j) that strictly lowered
/// the total degree. degree_after is -1 when the component vanished (possible
/// only for inputs that are not automorphisms).
struct ReductionStep {
    int axis;
    DiffPolynomial g;
    long long degree_before;
    long long degree_after;
};

struct MembershipQuery {
    int axis;
    DiffPolynomial u, h;
    bool found;
};

/// Attempts one degree-decreasing elementary transformation, trying the
/// higher-degree coordinate first (axis 1 on ties). Constant coordinates are
/// stripped through a degree-0 certificate; a constant opposite coordinate
/// blocks the query on that axis.
std::optional<std::pair<Endomorphism, ReductionStep>> try_elementary_reduce(
    const Endomorphism& phi, const Limits& lim = Limits{});

enum class Tameness { affine, tame, irreducible };
enum class AutoStatus { verified, unverified };

struct TamenessVerdict {
    Tameness kind = Tameness::affine;
    AutoStatus status = AutoStatus::unverified;
    std::vector<ReductionStep> steps;            ///< tame: recorded reductions
    ElementaryWord word;                         ///< tame: exact factorisation
    std::optional<Endomorphism> stuck;           ///< irreducible: final pair
    std::vector<MembershipQuery> failed_queries; ///< irreducible: per-axis certificates
};

/// Reduction loop: strips degree until the pair is a valid affine
/// automorphism (AFFINE/TAME, with an elementary factorisation whose
/// recomposition is checked exactly) or no axis admits a reduction
/// (IRREDUCIBLE, with the failed membership queries). Terminates because
/// every step strictly decreases the total degree.
TamenessVerdict decide_tame(const Endomorphism& phi, const Limits& lim = Limits{});

/// The wild-candidate pair (x + w^{d2}, y + w^{d1}) with w = x^{d1} - y^{d2},
/// together with its inverse (x - w^{d2}, y - w^{d1}); requires m >= 2. The
/// inverse relation is checked by composition before returning.
std::pair<Endomorphism, Endomorphism> anick_analog(uint32_t m);

struct WildCertificate {
    Endomorphism phi, phi_inv;
    DiffPolynomial lead_fx, lead_fy;
    bool inverse_ok = false;
    bool membership_fx_absent = false;
    bool membership_fy_absent = false;
    EndoClass shape = EndoClass::general;
    Tameness tameness = Tameness::irreducible;
};

/// Runs the full wildness pipeline for the pair above: inverse verification,
/// both leading-part membership queries (which must come back absent), shape
/// classification and the reduction loop. Any unexpected outcome throws
/// CertificationError.
WildCertificate certify_wild_anick(uint32_t m, const Limits& lim = Limits{});

/// Deterministic key-value serialisation of the certificate.
std::string to_text(const WildCertificate& cert);

}  // namespace diffalg

#endif
