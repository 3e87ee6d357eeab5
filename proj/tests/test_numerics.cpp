#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hdcr/covariance.hpp"
#include "hdcr/errors.hpp"
#include "hdcr/numerics.hpp"
#include "oracles.hpp"

using namespace hdcr;

TEST_CASE("ln_gamma known values") {
    CHECK(std::abs(ln_gamma(1.0)) <= 1e-15);
    CHECK(std::abs(ln_gamma(0.5) - 0.57236494292470008) <= 1e-12);
    // ln(sqrt(pi) / 2)
    const double expected = std::log(std::sqrt(std::numbers::pi) / 2.0);
    CHECK(std::abs(expected - (-0.12078223763524522)) <= 1e-15);
    CHECK(std::abs(ln_gamma(1.5) - expected) <= 1e-12);
}

TEST_CASE("ln_gamma rejects non-positive arguments") {
    CHECK_THROWS_AS(ln_gamma(0.0), DomainError);
    CHECK_THROWS_AS(ln_gamma(-1.5), DomainError);
    CHECK_THROWS_AS(ln_gamma(std::nan("")), DomainError);
}

TEST_CASE("ln_gamma matches libm lgamma on [0.5, 200] to 1e-10") {
    double worst = 0.0;
    for (double x = 0.5; x <= 200.0; x += 0.0625) worst = std::max(worst, std::abs(ln_gamma(x) - std::lgamma(x)));
    CHECK(worst <= 1e-10);
}

TEST_CASE("ln_gamma finite across [0.1, 1e6]") {
    for (double x = 0.1; x <= 1e6; x *= 1.37) CHECK(std::isfinite(ln_gamma(x)));
    CHECK(std::isfinite(ln_gamma(1e6)));
    CHECK(std::abs(ln_gamma(0.1) - std::lgamma(0.1)) <= 1e-10);
}

TEST_CASE("ln_gamma recurrence Gamma(x+1) = x Gamma(x)") {
    for (double x = 0.5; x <= 20.0; x += 0.5) {
        const double lhs = std::exp(ln_gamma(x + 1.0));
        const double rhs = x * std::exp(ln_gamma(x));
        CHECK(std::abs(lhs / rhs - 1.0) <= 1e-9);
    }
}

TEST_CASE("cholesky_lower examples") {
    CHECK(cholesky_lower(Matrix::identity(3)) == Matrix::identity(3));

    const Matrix l = cholesky_lower(Matrix{{4, 2}, {2, 5}});
    CHECK(l(0, 0) == doctest::Approx(2.0));
    CHECK(l(0, 1) == 0.0);
    CHECK(l(1, 0) == doctest::Approx(1.0));
    CHECK(l(1, 1) == doctest::Approx(2.0));

    const Matrix sigma = materialize(toeplitz_model(4, 0.5));
    const Matrix ls = cholesky_lower(sigma);
    CHECK(ls.gram().frobenius_distance(sigma) <= 1e-10);
}

TEST_CASE("cholesky_lower errors") {
    CHECK_THROWS_AS(cholesky_lower(Matrix{{1, 2}, {2, 1}}), NotSpdError);
    CHECK_THROWS_AS(cholesky_lower(Matrix{{1, 0}, {0, 0}}), NotSpdError);
    CHECK_THROWS_AS(cholesky_lower(Matrix{{1, 0.5}, {0.2, 1}}), DomainError);
}

TEST_CASE("cholesky_lower reproduces random lower factors") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> off(-1.0, 1.0), diag(0.5, 2.0);
    for (std::size_t d = 1; d <= 32; d += 3) {
        Matrix l(d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < i; ++j) l(i, j) = off(gen);
            l(i, i) = diag(gen);
        }
        const Matrix back = cholesky_lower(l.gram());
        double worst = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) worst = std::max(worst, std::abs(back(i, j) - l(i, j)));
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("power iteration examples") {
    CHECK(power_iteration_lambda_max(Matrix::identity(5)) == doctest::Approx(1.0).epsilon(1e-12));
    const std::vector<double> diag{1, 2, 7};
    CHECK(power_iteration_lambda_max(Matrix::diagonal(diag)) == doctest::Approx(7.0).epsilon(1e-8));

    const double l50 = power_iteration_lambda_max(materialize(toeplitz_model(50, 0.9)));
    CHECK(l50 > 1.0);
    CHECK(l50 < 19.0);
    CHECK(power_iteration_lambda_max(materialize(toeplitz_model(60, 0.9))) >= l50);
}

TEST_CASE("power iteration agrees with a dense Jacobi eigensolver") {
    for (double c : {0.0, 0.5, 0.9})
        for (std::size_t d : {2, 5, 12, 24}) {
            const Matrix m = materialize(toeplitz_model(d, c));
            const double oracle_max = oracle::jacobi_eigenvalues(m).back();
            CHECK(power_iteration_lambda_max(m) == doctest::Approx(oracle_max).epsilon(1e-8));
        }
}

TEST_CASE("power iteration convergence error carries the last iterate") {
    // Close top eigenvalues converge slowly; three steps are not enough.
    const std::vector<double> diag{3.0, 1.0, 2.9};
    try {
        power_iteration_lambda_max(Matrix::diagonal(diag), 1e-15, 3);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.last_value() > 1.0);
        CHECK(e.last_value() <= 3.0);
    }
}

TEST_CASE("power iteration respects the row-sum eigenvalue bound and grows with d") {
    for (double c : {0.0, 0.5, 0.9}) {
        double prev = 0.0;
        for (std::size_t d = 2; d <= 256; ++d) {
            const double lam = power_iteration_lambda_max(materialize(toeplitz_model(d, c)));
            CHECK(lam <= one_norm_eigen_bound(c) + 1e-9);
            CHECK(lam >= prev);
            prev = lam;
        }
    }
}
