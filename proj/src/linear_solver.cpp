#include "diffalg/linear_solver.hpp"

#include "diffalg/error.hpp"

namespace diffalg {

std::optional<std::vector<Rational>> solve_linear(const LinearSystem& sys) {
    const std::size_t n_rows = sys.row_count();
    const std::size_t n_cols = sys.col_count();
    for (const auto& row : sys.rows)
        if (row.size() != n_cols) throw ParameterError("ragged linear system");
    if (sys.rhs.size() != n_rows) throw ParameterError("right-hand side length mismatch");

    auto a = sys.rows;
    auto b = sys.rhs;

    std::vector<std::size_t> pivot_row_of_col(n_cols, SIZE_MAX);
    std::vector<bool> row_used(n_rows, false);

    for (std::size_t col = 0; col < n_cols; ++col) {
        std::size_t pivot = SIZE_MAX;
        for (std::size_t r = 0; r < n_rows; ++r) {
            if (!row_used[r] && !a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == SIZE_MAX) continue;  // free column
        row_used[pivot] = true;
        pivot_row_of_col[col] = pivot;

        Rational inv = a[pivot][col].inverse();
        for (std::size_t j = col; j < n_cols; ++j) a[pivot][j] *= inv;
        b[pivot] *= inv;

        for (std::size_t r = 0; r < n_rows; ++r) {
            if (r == pivot || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (std::size_t j = col; j < n_cols; ++j) a[r][j] -= f * a[pivot][j];
            b[r] -= f * b[pivot];
        }
    }

    for (std::size_t r = 0; r < n_rows; ++r)
        if (!row_used[r] && !b[r].is_zero()) return std::nullopt;

    std::vector<Rational> x(n_cols, Rational(0));
    for (std::size_t col = 0; col < n_cols; ++col)
        if (pivot_row_of_col[col] != SIZE_MAX) x[col] = b[pivot_row_of_col[col]];
    return x;
}

}  // namespace diffalg
