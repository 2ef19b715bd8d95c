#ifndef DIFFALG_LINEAR_SOLVER_HPP
#define DIFFALG_LINEAR_SOLVER_HPP

#include <optional>
#include <vector>

#include "diffalg/monomial.hpp"
#include "diffalg/rational.hpp"

namespace diffalg {

/// Dense exact-rational system A c = rhs. Column j carries the candidate
/// monomial it stands for.
struct LinearSystem {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<Monomial> tags;

    std::size_t row_count() const { return rows.size(); }
    std::size_t col_count() const { return tags.size(); }
};

/// Exact Gauss-Jordan elimination. Deterministic pivoting: columns left to
/// right, first row with a nonzero entry. Returns one solution with free
/// variables set to zero, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_linear(const LinearSystem& sys);

}  // namespace diffalg

#endif
