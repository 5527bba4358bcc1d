#include <doctest.h>

#include <cmath>

#include "ergo/matrix.hpp"
#include "ergo/spectrum.hpp"
#include "ergo/verify.hpp"
#include "generators.hpp"

using namespace ergo;
using ergo::testing::oracle_nontrivial_moduli;
using ergo::testing::random_ematrix;

TEST_CASE("validate_ematrix accepts constant row sums") {
    const EMatrix e = validate_ematrix(fixtures::example_2_14_a());
    CHECK(e.trivial_eigenvalue() == doctest::Approx(2.0));

    const EMatrix zero = validate_ematrix(Matrix(4));
    CHECK(zero.trivial_eigenvalue() == 0.0);
}

TEST_CASE("validate_ematrix rejects and reports the worst row") {
    try {
        validate_ematrix(fixtures::example_2_2_b());  // row sums 4, 3, 4
        FAIL("expected NotConstantRowSum");
    } catch (const NotConstantRowSum& e) {
        CHECK(e.worst_row() == 1);
        CHECK(e.deviation() == doctest::Approx(2.0 / 3.0));
    }
}

TEST_CASE("multiply") {
    const Matrix ab = fixtures::example_2_2_a() * fixtures::example_2_2_b();
    CHECK(ab(0, 0) == 9.0);
    CHECK(ab(0, 1) == 7.0);
    CHECK(ab(0, 2) == 6.0);

    const Matrix a = fixtures::example_2_14_a();
    const Matrix ai = a * Matrix::identity(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(ai(i, j) == a(i, j));

    const Matrix jj = Matrix::ones(4) * Matrix::ones(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(jj(i, j) == 4.0);

    CHECK_THROWS_AS(Matrix(2) * Matrix(3), DimensionMismatch);
}

TEST_CASE("scaled_power reconstructs plain powers") {
    const EMatrix a = validate_ematrix(fixtures::example_2_14_a());

    const ScaledPower k1 = scaled_power(a, 1);
    CHECK(k1.log_scale == 0.0);
    CHECK(k1.scaled_matrix(1, 0) == 2.0);

    const ScaledPower k3 = scaled_power(a, 3);
    CHECK(reconstruct_entry(k3, 1, 0) == doctest::Approx(4.0));
    CHECK(reconstruct_entry(k3, 1, 1) == doctest::Approx(0.0));
    CHECK(reconstruct_entry(k3, 1, 2) == doctest::Approx(4.0));

    const ScaledPower k10 = scaled_power(a, 10);
    CHECK(reconstruct_entry(k10, 0, 0) == doctest::Approx(341.0));
    CHECK(reconstruct_entry(k10, 0, 1) == doctest::Approx(171.0));
    CHECK(reconstruct_entry(k10, 0, 2) == doctest::Approx(512.0));
}

TEST_CASE("scaled_power matches naive multiplication") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng() % 7;
        const EMatrix a = random_ematrix(rng, n);
        Matrix naive = a.matrix();
        for (int k = 2; k <= 6; ++k) {
            naive = naive * a.matrix();
            const ScaledPower sp = scaled_power(a, k);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const double got = reconstruct_entry(sp, i, j);
                    CHECK(std::abs(got - naive(i, j)) <=
                          1e-9 * std::max(1.0, std::abs(naive(i, j))));
                }
        }
    }
}

TEST_CASE("invert") {
    const EMatrix l = validate_ematrix(fixtures::example_4_2_laplacian());
    const EMatrix shifted = add_rank_one_shift(l, 1.0);
    const EMatrix m = invert(shifted);
    CHECK(m.trivial_eigenvalue() == doctest::Approx(0.25));
    CHECK(m.matrix()(1, 0) == doctest::Approx(0.0));
    CHECK(m.matrix()(1, 1) == doctest::Approx(5.0 / 12.0));
    CHECK(m.matrix()(1, 2) == doctest::Approx(-0.25));
    CHECK(m.matrix()(1, 3) == doctest::Approx(1.0 / 12.0));

    const EMatrix id = validate_ematrix(Matrix::identity(5));
    const EMatrix id_inv = invert(id);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(id_inv.matrix()(i, i) == doctest::Approx(1.0));

    CHECK_THROWS_AS(invert(l), SingularMatrix);
}

TEST_CASE("invert round-trip on random well-conditioned e-matrices") {
    std::mt19937_64 rng(12);
    int tested = 0;
    while (tested < 40) {
        const EMatrix a = random_ematrix(rng, 2 + rng() % 7);
        if (std::abs(determinant(a.matrix())) < 1e-3) continue;
        ++tested;
        const EMatrix inv = invert(a);
        const Matrix prod = a.matrix() * inv.matrix();
        Matrix residual = prod - Matrix::identity(a.size());
        CHECK(induced_norm(residual, PNorm::Infinity) <= 1e-8);
    }
}

TEST_CASE("rank-one shift moves only the trivial eigenvalue") {
    const EMatrix l = validate_ematrix(fixtures::example_4_2_laplacian());
    const EMatrix shifted = add_rank_one_shift(l, 1.0);
    CHECK(shifted.matrix()(0, 0) == 4.0);
    CHECK(shifted.matrix()(0, 1) == 0.0);
    CHECK(shifted.trivial_eigenvalue() == doctest::Approx(4.0));

    const EMatrix a = validate_ematrix(fixtures::example_2_14_a());
    const EMatrix same = add_rank_one_shift(a, 0.0);
    CHECK(same.matrix()(1, 0) == a.matrix()(1, 0));

    // spectrum {2,-1,0} becomes {5,-1,0}
    const EMatrix b = add_rank_one_shift(a, 1.0);
    CHECK(b.trivial_eigenvalue() == doctest::Approx(5.0));
    const Spectrum s = spectrum(b.matrix());
    CHECK(std::abs(s.eigenvalues[0]) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(std::abs(s.eigenvalues[1]) == doctest::Approx(1.0));
    CHECK(std::abs(s.eigenvalues[2]) == doctest::Approx(5.0));
}

TEST_CASE("Brauer shift preserves the non-trivial spectrum") {
    std::mt19937_64 rng(13);
    for (double alpha : {-2.0, 1.0, 3.0}) {
        for (int trial = 0; trial < 20; ++trial) {
            const EMatrix a = random_ematrix(rng, 2 + rng() % 5);
            const auto before = oracle_nontrivial_moduli(a);
            const auto after = oracle_nontrivial_moduli(add_rank_one_shift(a, alpha));
            REQUIRE(before.size() == after.size());
            for (std::size_t i = 0; i < before.size(); ++i)
                CHECK(std::abs(before[i] - after[i]) <= 1e-6);
        }
    }
}

TEST_CASE("diagonal shift") {
    const EMatrix l = validate_ematrix(fixtures::example_4_2_laplacian());
    const EMatrix shifted = add_diagonal_shift(l, 0.1);
    CHECK(shifted.matrix()(0, 0) == doctest::Approx(3.1));
    CHECK(shifted.matrix()(0, 1) == -1.0);
    CHECK(shifted.trivial_eigenvalue() == doctest::Approx(0.1));

    const std::vector<double> eig =
        jacobi_eigenvalues(add_diagonal_shift(l, 1.0).matrix());
    const double expected[] = {1.0, 2.0, 4.0, 5.0};
    for (int i = 0; i < 4; ++i) CHECK(eig[i] == doctest::Approx(expected[i]));
}

TEST_CASE("induced norms") {
    CHECK(induced_norm(Matrix::identity(3), PNorm::One) == 1.0);
    CHECK(induced_norm(Matrix::ones(4), PNorm::Infinity) == 4.0);
    CHECK(induced_norm(fixtures::example_2_2_a(), PNorm::One) == 6.0);
}

TEST_CASE("e-matrix closure under arithmetic") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng() % 7;
        const EMatrix a = random_ematrix(rng, n);
        const EMatrix b = random_ematrix(rng, n);

        const EMatrix sum = validate_ematrix(a.matrix() + b.matrix());
        CHECK(sum.trivial_eigenvalue() ==
              doctest::Approx(a.trivial_eigenvalue() + b.trivial_eigenvalue()));

        const Matrix ab = a.matrix() * b.matrix();
        const EMatrix prod = validate_ematrix(ab, 1e-9 * (1 + ab.max_abs()) * n);
        CHECK(prod.trivial_eigenvalue() ==
              doctest::Approx(a.trivial_eigenvalue() * b.trivial_eigenvalue()));

        const EMatrix shifted = validate_ematrix(add_rank_one_shift(a, 1.5).matrix());
        CHECK(shifted.trivial_eigenvalue() ==
              doctest::Approx(a.trivial_eigenvalue() + 1.5 * n));

        const EMatrix diag = validate_ematrix(add_diagonal_shift(a, -2.0).matrix());
        CHECK(diag.trivial_eigenvalue() ==
              doctest::Approx(a.trivial_eigenvalue() - 2.0));
    }
}
