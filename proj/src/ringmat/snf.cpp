#include "cohfun/snf.hpp"

#include <stdexcept>

namespace cohfun {

namespace {

// Working state of the elimination. Every row operation on s is mirrored on
// u (and inversely on u_inv as a column operation); every column operation
// on s is mirrored on v (and inversely on v_inv as a row operation).
class Elimination {
public:
    explicit Elimination(const Matrix& m)
        : ring_(m.ring()),
          s_(m),
          u_(Matrix::identity(ring_, m.rows())),
          ui_(Matrix::identity(ring_, m.rows())),
          v_(Matrix::identity(ring_, m.cols())),
          vi_(Matrix::identity(ring_, m.cols())) {}

    // row_i += q * row_j
    void add_row(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        row_axpy(s_, i, j, q);
        row_axpy(u_, i, j, q);
        col_axpy(ui_, j, i, ring_.neg(q));
    }

    // col_i += q * col_j
    void add_col(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        col_axpy(s_, i, j, q);
        col_axpy(v_, i, j, q);
        row_axpy(vi_, j, i, ring_.neg(q));
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        row_swap(s_, i, j);
        row_swap(u_, i, j);
        col_swap(ui_, i, j);
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        col_swap(s_, i, j);
        col_swap(v_, i, j);
        row_swap(vi_, i, j);
    }

    void scale_row(std::size_t i, const Int& unit) {
        if (unit == 1) return;
        Int inv = ring_.unit_inverse(unit);
        for (std::size_t j = 0; j < s_.cols(); ++j) s_.set(i, j, s_(i, j) * unit);
        for (std::size_t j = 0; j < u_.cols(); ++j) u_.set(i, j, u_(i, j) * unit);
        for (std::size_t r = 0; r < ui_.rows(); ++r) ui_.set(r, i, ui_(r, i) * inv);
    }

    SnfResult run() {
        const std::size_t rows = s_.rows(), cols = s_.cols();
        std::vector<Int> diag;
        for (std::size_t t = 0; t < rows && t < cols; ++t) {
            std::size_t pi = 0, pj = 0;
            if (!min_entry(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            for (;;) {
                bool clean = true;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (s_(i, t) == 0) continue;
                    Int q, r;
                    ring_.divmod(s_(i, t), s_(t, t), q, r);
                    add_row(i, t, ring_.neg(q));
                    if (s_(i, t) != 0) clean = false;
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (s_(t, j) == 0) continue;
                    Int q, r;
                    ring_.divmod(s_(t, j), s_(t, t), q, r);
                    add_col(j, t, ring_.neg(q));
                    if (s_(t, j) != 0) clean = false;
                }
                if (!clean) {
                    promote_smaller_remainder(t);
                    continue;
                }
                if (fix_divisibility(t)) continue;
                break;
            }
            scale_row(t, ring_.normalizer(s_(t, t)));
            diag.push_back(s_(t, t));
        }
        return SnfResult{std::move(s_), std::move(u_), std::move(v_), std::move(ui_), std::move(vi_), std::move(diag)};
    }

private:
    static void row_axpy(Matrix& m, std::size_t i, std::size_t j, const Int& q) {
        const BaseRing& ring = m.ring();
        Int* ri = m.row_ptr(i);
        const Int* rj = m.row_ptr(j);
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (rj[c] != 0) ri[c] = ring.reduce(ri[c] + q * rj[c]);
    }

    static void col_axpy(Matrix& m, std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (m(r, j) != 0) m.set(r, i, m(r, i) + q * m(r, j));
    }

    static void row_swap(Matrix& m, std::size_t i, std::size_t j) {
        Int* a = m.row_ptr(i);
        Int* b = m.row_ptr(j);
        for (std::size_t c = 0; c < m.cols(); ++c) mpz_swap(a[c].get_mpz_t(), b[c].get_mpz_t());
    }

    static void col_swap(Matrix& m, std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Int* row = m.row_ptr(r);
            mpz_swap(row[i].get_mpz_t(), row[j].get_mpz_t());
        }
    }

    bool min_entry(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best;
        for (std::size_t i = t; i < s_.rows(); ++i)
            for (std::size_t j = t; j < s_.cols(); ++j) {
                if (s_(i, j) == 0) continue;
                Int sz = ring_.size(s_(i, j));
                if (!found || sz < best) {
                    found = true;
                    best = sz;
                    pi = i;
                    pj = j;
                    if (best == 1) return true;
                }
            }
        return found;
    }

    // After a reduction pass left nonzero remainders in row/column t, move
    // the smallest of them into the pivot position.
    void promote_smaller_remainder(std::size_t t) {
        Int best = ring_.size(s_(t, t));
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < s_.rows(); ++i)
            if (s_(i, t) != 0 && ring_.size(s_(i, t)) < best) {
                best = ring_.size(s_(i, t));
                bi = i;
                bj = t;
            }
        for (std::size_t j = t + 1; j < s_.cols(); ++j)
            if (s_(t, j) != 0 && ring_.size(s_(t, j)) < best) {
                best = ring_.size(s_(t, j));
                bi = t;
                bj = j;
            }
        swap_rows(t, bi);
        swap_cols(t, bj);
    }

    bool fix_divisibility(std::size_t t) {
        for (std::size_t i = t + 1; i < s_.rows(); ++i)
            for (std::size_t j = t + 1; j < s_.cols(); ++j)
                if (s_(i, j) != 0 && !ring_.divides(s_(t, t), s_(i, j))) {
                    add_row(t, i, 1);
                    return true;
                }
        return false;
    }

    BaseRing ring_;
    Matrix s_, u_, ui_, v_, vi_;
};

}  // namespace

SnfResult smith_normal_form(const Matrix& m) { return Elimination(m).run(); }

LinearSolver::LinearSolver(const Matrix& m) : rows_(m.rows()), cols_(m.cols()), snf_(smith_normal_form(m)) {}

std::optional<Matrix> LinearSolver::solve(const Matrix& b) const {
    if (b.rows() != rows_) throw std::invalid_argument("solve: right-hand side has wrong row count");
    const BaseRing& ring = snf_.s.ring();
    const std::size_t k = snf_.rank();
    Matrix c = snf_.u * b;
    Matrix y(ring, cols_, b.cols());
    for (std::size_t col = 0; col < b.cols(); ++col) {
        for (std::size_t i = 0; i < k; ++i) {
            if (!ring.divides(snf_.diag[i], c(i, col))) return std::nullopt;
            y.set(i, col, ring.exact_div(c(i, col), snf_.diag[i]));
        }
        for (std::size_t i = k; i < rows_; ++i)
            if (c(i, col) != 0) return std::nullopt;
    }
    return snf_.v * y;
}

bool LinearSolver::in_column_span(const Matrix& b) const { return solve(b).has_value(); }

Matrix LinearSolver::nullspace() const { return snf_.v.columns(snf_.rank(), cols_ - snf_.rank()); }

std::optional<LinearSolution> solve_linear(const Matrix& m, const Matrix& b) {
    if (b.cols() != 1) throw std::invalid_argument("solve_linear: b must be a single column");
    LinearSolver solver(m);
    auto x = solver.solve(b);
    if (!x) return std::nullopt;
    return LinearSolution{std::move(*x), solver.nullspace()};
}

Matrix lattice_basis(const Matrix& g) {
    SnfResult snf = smith_normal_form(g);
    const std::size_t k = snf.rank();
    Matrix basis = snf.u_inv.columns(0, k);
    Matrix scaled(g.ring(), basis.rows(), k);
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (std::size_t j = 0; j < k; ++j) scaled.set(i, j, basis(i, j) * snf.diag[j]);
    return scaled;
}

}  // namespace cohfun
