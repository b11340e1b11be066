#include "catch_amalgamated.hpp"

#include "cohfun/matrix.hpp"
#include "cohfun/random.hpp"
#include "cohfun/snf.hpp"
#include "cohfun/verify.hpp"

using namespace cohfun;

namespace {

const BaseRing Z = BaseRing::integers();

Matrix random_matrix(Rng& rng, const BaseRing& ring, std::size_t r, std::size_t c, long bound) {
    Matrix m(ring, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, Int(static_cast<long>(rng.uniform(-bound, bound))));
    return m;
}

void require_valid_snf(const Matrix& m, const SnfResult& s) {
    const BaseRing& ring = m.ring();
    REQUIRE(s.u * m * s.v == s.s);
    REQUIRE(s.u * s.u_inv == Matrix::identity(ring, m.rows()));
    REQUIRE(s.v * s.v_inv == Matrix::identity(ring, m.cols()));
    REQUIRE(ring.is_unit(ring.reduce(bareiss_determinant(s.u))));
    REQUIRE(ring.is_unit(ring.reduce(bareiss_determinant(s.v))));
    for (std::size_t i = 0; i < s.s.rows(); ++i)
        for (std::size_t j = 0; j < s.s.cols(); ++j) {
            if (i == j && i < s.rank()) {
                REQUIRE(s.s(i, j) == s.diag[i]);
                REQUIRE(s.diag[i] != 0);
            } else {
                REQUIRE(s.s(i, j) == 0);
            }
        }
    for (std::size_t i = 0; i + 1 < s.rank(); ++i) REQUIRE(ring.divides(s.diag[i], s.diag[i + 1]));
}

}  // namespace

TEST_CASE("ring arithmetic over Z and F_p") {
    const BaseRing f5 = BaseRing::prime_field(5);
    CHECK(f5.reduce(Int(-1)) == 4);
    CHECK(f5.mul(Int(3), Int(4)) == 2);
    CHECK(f5.unit_inverse(Int(2)) == 3);
    CHECK(Z.gcd(Int(-4), Int(6)) == 2);
    CHECK(Z.is_unit(Int(-1)));
    CHECK_FALSE(Z.is_unit(Int(2)));
    CHECK(Z.name() == "Z");
    CHECK(f5.name() == "F5");
    CHECK_THROWS_AS(BaseRing::prime_field(4), std::invalid_argument);
    CHECK_THROWS_AS(BaseRing::prime_field(1), std::invalid_argument);
}

TEST_CASE("Euclidean division leaves a smaller remainder") {
    Rng rng(7);
    for (int k = 0; k < 500; ++k) {
        Int a = static_cast<long>(rng.uniform(-100, 100));
        Int b = static_cast<long>(rng.uniform(-20, 20));
        if (b == 0) continue;
        Int q, r;
        Z.divmod(a, b, q, r);
        REQUIRE(a == q * b + r);
        REQUIRE((r == 0 || Z.size(r) < Z.size(b)));
    }
}

TEST_CASE("zero-dimensional matrices are values") {
    Matrix a(Z, 0, 3), b(Z, 3, 0), c(Z, 0, 0);
    CHECK((a * Matrix(Z, 3, 2)).rows() == 0);
    CHECK((b * a) == Matrix(Z, 3, 3));
    CHECK((a * b) == c);
    CHECK(c.str() == "[](0x0)");
    CHECK(Matrix::hcat(b, Matrix::identity(Z, 3)).cols() == 3);
}

TEST_CASE("Smith normal form examples") {
    SECTION("diag(2, 3) over Z") {
        Matrix m = Matrix::from_rows(Z, {{2, 0}, {0, 3}});
        SnfResult s = smith_normal_form(m);
        require_valid_snf(m, s);
        CHECK(s.diag == std::vector<Int>{1, 6});
    }
    SECTION("empty matrix") {
        SnfResult s = smith_normal_form(Matrix(Z, 0, 0));
        CHECK(s.diag.empty());
    }
    SECTION("identity") {
        Matrix m = Matrix::identity(Z, 3);
        SnfResult s = smith_normal_form(m);
        require_valid_snf(m, s);
        CHECK(s.diag == std::vector<Int>{1, 1, 1});
    }
    SECTION("over F_5 the diagonal is all ones") {
        const BaseRing f5 = BaseRing::prime_field(5);
        Matrix m = Matrix::from_rows(f5, {{2, 4}, {1, 3}, {3, 1}});
        SnfResult s = smith_normal_form(m);
        require_valid_snf(m, s);
        CHECK(s.diag == std::vector<Int>{1, 1});
        // Every row is a multiple of (1, 2) mod 5.
        Matrix r1 = Matrix::from_rows(f5, {{2, 4}, {1, 2}, {3, 1}});
        SnfResult t = smith_normal_form(r1);
        require_valid_snf(r1, t);
        CHECK(t.diag == std::vector<Int>{1});
    }
}

TEST_CASE("Smith normal form on random matrices") {
    for (const BaseRing& ring : {Z, BaseRing::prime_field(3)}) {
        Rng rng(11);
        for (int k = 0; k < 300; ++k) {
            Matrix m = random_matrix(rng, ring, rng.below(7), rng.below(7), 9);
            require_valid_snf(m, smith_normal_form(m));
        }
    }
}

TEST_CASE("solve_linear examples") {
    auto one = [](long v) { return Matrix::from_rows(Z, {{v}}); };
    SECTION("2x = 6") {
        auto s = solve_linear(one(2), one(6));
        REQUIRE(s);
        CHECK(s->particular == one(3));
        CHECK(s->homogeneous.cols() == 0);
    }
    SECTION("2x = 1 has no integer solution") { CHECK_FALSE(solve_linear(one(2), one(1))); }
    SECTION("x + y = 0") {
        auto s = solve_linear(Matrix::from_rows(Z, {{1, 1}}), one(0));
        REQUIRE(s);
        CHECK(s->particular.is_zero());
        REQUIRE(s->homogeneous.cols() == 1);
        const Matrix h = s->homogeneous;
        CHECK(h(0, 0) == -h(1, 0));
        CHECK(abs(h(0, 0)) == 1);
    }
}

// Oracle: every solution with entries in a small box is found by brute force
// and must be reachable from the returned particular solution plus lattice.
TEST_CASE("solve_linear agrees with box enumeration") {
    Rng rng(3);
    for (int k = 0; k < 150; ++k) {
        const std::size_t rows = 1 + rng.below(2), cols = 1 + rng.below(2);
        Matrix m = random_matrix(rng, Z, rows, cols, 3);
        Matrix x0 = random_matrix(rng, Z, cols, 1, 2);
        Matrix b = (k % 3 == 0) ? random_matrix(rng, Z, rows, 1, 4) : m * x0;
        bool box_found = false;
        const long R = 6;
        std::vector<long> idx(cols, -R);
        while (true) {
            Matrix x(Z, cols, 1);
            for (std::size_t j = 0; j < cols; ++j) x.set(j, 0, Int(idx[j]));
            if (m * x == b) box_found = true;
            std::size_t j = 0;
            while (j < cols && ++idx[j] > R) idx[j++] = -R;
            if (j == cols) break;
        }
        auto s = solve_linear(m, b);
        if (box_found) REQUIRE(s);
        if (s) {
            REQUIRE(m * s->particular == b);
            REQUIRE((m * s->homogeneous).is_zero());
            // The homogeneous basis has full rank equal to cols - rank(m).
            REQUIRE(s->homogeneous.cols() == cols - smith_normal_form(m).rank());
        }
    }
}

TEST_CASE("LinearSolver solves many right-hand sides") {
    Matrix m = Matrix::from_rows(Z, {{2, 4}, {0, 6}});
    LinearSolver solver(m);
    Matrix b = Matrix::from_rows(Z, {{2, 6}, {0, 6}});
    auto x = solver.solve(b);
    REQUIRE(x);
    CHECK(m * *x == b);
    CHECK_FALSE(solver.in_column_span(Matrix::from_rows(Z, {{1}, {0}})));
}

TEST_CASE("parallel multiply matches the serial kernel") {
    Rng rng(5);
    for (std::size_t n : {0u, 1u, 7u, 40u, 90u}) {
        Matrix a = random_matrix(rng, Z, n, n + 3, 1000);
        Matrix b = random_matrix(rng, Z, n + 3, n, 1000);
        CHECK(kernels::multiply_serial(a, b) == kernels::multiply_parallel(a, b));
    }
}

TEST_CASE("lattice_basis spans the same lattice") {
    Matrix g = Matrix::from_rows(Z, {{2, 4, 6}, {0, 0, 0}});
    Matrix b = lattice_basis(g);
    CHECK(b.cols() == 1);
    LinearSolver sb(b), sg(g);
    CHECK(sb.in_column_span(g));
    CHECK(sg.in_column_span(b));
}
