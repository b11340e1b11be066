#pragma once

#include <optional>
#include <vector>

#include "cohfun/matrix.hpp"

namespace cohfun {

/// Smith decomposition u * m * v = s with unimodular u, v.
///
/// `diag` holds the nonzero diagonal entries d_1 | d_2 | ... | d_k of s,
/// canonicalized (positive over Z, 1 over F_p). The inverses of u and v
/// are tracked alongside so callers never need to invert a matrix.
struct SnfResult {
    Matrix s;
    Matrix u;
    Matrix v;
    Matrix u_inv;
    Matrix v_inv;
    std::vector<Int> diag;

    std::size_t rank() const { return diag.size(); }
};

/// Total function; any shape including 0x0.
SnfResult smith_normal_form(const Matrix& m);

struct LinearSolution {
    Matrix particular;   // cols x 1
    Matrix homogeneous;  // cols x (cols - rank); columns generate {x : m x = 0}
};

/// Solves m x = b for a single column b. nullopt if b is not in the column
/// span of m over the ring (e.g. 2x = 1 over Z).
std::optional<LinearSolution> solve_linear(const Matrix& m, const Matrix& b);

/// A Smith decomposition kept around to solve many right-hand sides.
class LinearSolver {
public:
    explicit LinearSolver(const Matrix& m);

    /// Some X with m X = b, column by column; nullopt if any column fails.
    std::optional<Matrix> solve(const Matrix& b) const;
    bool in_column_span(const Matrix& b) const;
    /// Basis of the solution lattice of m x = 0.
    Matrix nullspace() const;
    const SnfResult& snf() const { return snf_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    SnfResult snf_;
};

/// Basis (full column rank) of the lattice spanned by the columns of g.
Matrix lattice_basis(const Matrix& g);

}  // namespace cohfun
