#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ergo/coefficients.hpp"
#include "ergo/verify.hpp"
#include "generators.hpp"

using namespace ergo;
using ergo::testing::random_ematrix;
using ergo::testing::random_matrix;

TEST_CASE("column_stat") {
    const std::vector<double> constant{1.0, 1.0, 1.0};
    CHECK(column_stat(constant, 0).cs_value == 0.0);

    const std::vector<double> four{4.0, 3.0, 2.0, 1.0};
    CHECK(column_stat(four, 2).cs_value == 4.0);  // (4+3) - (2+1)
    CHECK(column_stat(four, 2).column_index == 2);

    // odd length: the median element is skipped entirely
    const std::vector<double> odd{3.0, -1.0, -1.0, 0.0, -1.0, 0.0};
    CHECK(column_stat(odd, 0).cs_value == 6.0);
    const std::vector<double> five{5.0, 1.0, 0.0, -1.0, -2.0};
    CHECK(column_stat(five, 0).cs_value == 9.0);  // (5+1) - (-1-2)
}

TEST_CASE("rho_hat") {
    const Matrix l = fixtures::example_4_5_laplacian();
    CHECK(rho_hat(l) == 6.0);
    CHECK(rho_hat(Matrix::ones(4)) == 0.0);
    CHECK(rho_hat(fixtures::corollary_2_13_a()) == 8.0);
}

TEST_CASE("tau_inf frozen values") {
    CHECK(tau_inf(fixtures::example_2_14_a()) == 2.0);
    CHECK(tau_inf(fixtures::example_2_9_circulant()) == 4.0);

    const Matrix b = fixtures::example_2_17_b();
    CHECK(tau_inf(b) == 2.0);
    CHECK(tau_inf(b * b) == 4.0);
}

TEST_CASE("tau_1 frozen values") {
    const Matrix m(2, {0.5, 0.5, 1.5, -0.5});
    CHECK(tau_1(m) == 1.0);
    CHECK(tau_1(fixtures::example_4_1_laplacian()) == 7.0);
    CHECK(tau_1(Matrix::ones(5) * 3.0) == 0.0);
}

TEST_CASE("tau_1 min-form") {
    const EMatrix m = validate_ematrix(Matrix(2, {0.5, 0.5, 1.5, -0.5}));
    CHECK(tau_1_minform(m) == doctest::Approx(1.0));

    const EMatrix j = validate_ematrix(Matrix::ones(4) * 0.25);
    CHECK(tau_1_minform(j) == doctest::Approx(0.0));

    const EMatrix l = validate_ematrix(fixtures::example_4_5_laplacian());
    CHECK(tau_1_minform(l) == doctest::Approx(5.0));
}

TEST_CASE("the two tau_1 forms agree on random e-matrices") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const EMatrix a = random_ematrix(rng, 2 + rng() % 9);
        CHECK(std::abs(tau_1(a.matrix()) - tau_1_minform(a)) <= 1e-9);
    }
}

TEST_CASE("cs equals the minimal sum of absolute deviations") {
    // cs_j = min over c of sum_i |a_ij - c|, attained at the median
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 9;
        const Matrix m = random_matrix(rng, n);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<double> col = m.column(j);
            std::vector<double> sorted = col;
            std::sort(sorted.begin(), sorted.end());
            const double median = 0.5 * (sorted[(n - 1) / 2] + sorted[n / 2]);
            double dev = 0.0;
            for (double v : col) dev += std::abs(v - median);
            CHECK(std::abs(column_stat(col, j).cs_value - dev) <= 1e-9);
        }
    }
}

TEST_CASE("semi-norm axioms hold on e-matrices") {
    std::mt19937_64 rng(23);
    for (PNorm p : {PNorm::One, PNorm::Infinity}) {
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t n = 2 + rng() % 9;
            const EMatrix a = random_ematrix(rng, n);
            const EMatrix b = random_ematrix(rng, n);
            const double scale =
                std::uniform_real_distribution<double>(-3.0, 3.0)(rng);

            const double ta = tau(a.matrix(), p);
            CHECK(ta >= 0.0);
            CHECK(tau(a.matrix() + b.matrix(), p) <=
                  ta + tau(b.matrix(), p) + 1e-9);
            CHECK(std::abs(tau(a.matrix() * scale, p) - std::abs(scale) * ta) <=
                  1e-9 * (1.0 + ta));
            // submultiplicative on products of e-matrices
            CHECK(tau(a.matrix() * b.matrix(), p) <=
                  ta * tau(b.matrix(), p) + 1e-9);
        }
    }
}

TEST_CASE("submultiplicativity fails off the e-matrix cone") {
    const Matrix a = fixtures::example_2_2_a();
    const Matrix b = fixtures::example_2_2_b();
    CHECK(tau_1(a * b) == 22.5);
    CHECK(tau_1(a) * tau_1(b) == 6.0);
    CHECK(tau_inf(a * b) == 17.0);
    CHECK(tau_inf(a) * tau_inf(b) == 5.0);
}

TEST_CASE("tau is invariant under rank-one shifts") {
    std::mt19937_64 rng(24);
    for (double alpha : {-3.0, 0.5, 2.0}) {
        for (int trial = 0; trial < 50; ++trial) {
            const EMatrix a = random_ematrix(rng, 2 + rng() % 7);
            const EMatrix shifted = add_rank_one_shift(a, alpha);
            for (PNorm p : {PNorm::One, PNorm::Infinity})
                CHECK(std::abs(tau(a.matrix(), p) - tau(shifted.matrix(), p)) <=
                      1e-9 * (1.0 + tau(a.matrix(), p)));
        }
    }
}

TEST_CASE("tau annihilates multiples of J") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng() % 7;
        const EMatrix b = random_ematrix(rng, n);
        const Matrix j = Matrix::ones(n);
        for (PNorm p : {PNorm::One, PNorm::Infinity}) {
            CHECK(tau(j * b.matrix(), p) <= 1e-9 * (1 + b.matrix().max_abs()) * n);
            CHECK(tau(b.matrix() * j, p) <= 1e-9 * (1 + b.matrix().max_abs()) * n);
        }
    }
}

TEST_CASE("tau is dominated by the induced norm of the transpose") {
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 100; ++trial) {
        const EMatrix a = random_ematrix(rng, 2 + rng() % 9);
        CHECK(tau_1(a.matrix()) <=
              induced_norm(a.matrix().transpose(), PNorm::One) + 1e-9);
        CHECK(tau_inf(a.matrix()) <=
              induced_norm(a.matrix().transpose(), PNorm::Infinity) + 1e-9);
    }
}

TEST_CASE("rank-one e-matrices have tau zero") {
    // e * v^T has identical rows, so both coefficients vanish
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng() % 7;
        std::uniform_real_distribution<double> dist(-5.0, 5.0);
        Matrix m(n);
        std::vector<double> v(n);
        for (double& x : v) x = dist(rng);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = v[j];
        CHECK(tau_1(m) == 0.0);
        CHECK(tau_inf(m) == 0.0);
    }
}
