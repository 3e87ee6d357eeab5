#include <doctest.h>

#include <cmath>

#include "hdcr/covariance.hpp"
#include "hdcr/errors.hpp"
#include "hdcr/numerics.hpp"

using namespace hdcr;

TEST_CASE("toeplitz_model entries") {
    CHECK(materialize(toeplitz_model(3, 0.0)) == Matrix::identity(3));
    CHECK(materialize(toeplitz_model(2, 0.5)) == Matrix{{1.0, 0.5}, {0.5, 1.0}});
    CHECK(toeplitz_model(3, 0.9).entry(0, 2) == doctest::Approx(0.81).epsilon(1e-15));
    CHECK(materialize(toeplitz_model(1, 0.7)) == Matrix{{1.0}});
}

TEST_CASE("toeplitz_model domain errors") {
    CHECK_THROWS_AS(toeplitz_model(3, 1.0), DomainError);
    CHECK_THROWS_AS(toeplitz_model(3, -0.1), DomainError);
    CHECK_THROWS_AS(toeplitz_model(0, 0.5), DomainError);
}

TEST_CASE("one_norm_eigen_bound") {
    CHECK(one_norm_eigen_bound(0.0) == 1.0);
    CHECK(one_norm_eigen_bound(0.5) == doctest::Approx(3.0));
    CHECK(one_norm_eigen_bound(0.9) == doctest::Approx(19.0));
    CHECK_THROWS_AS(one_norm_eigen_bound(1.0), DomainError);
}

TEST_CASE("explicit model round-trips through materialize") {
    const Matrix m{{2.0, 0.3, 0.1}, {0.3, 1.5, -0.2}, {0.1, -0.2, 1.0}};
    const auto model = CovarianceModel::explicit_matrix(m);
    CHECK(materialize(model) == m);
    CHECK_THROWS_AS(CovarianceModel::explicit_matrix(Matrix{{1, 2}, {2, 1}}), NotSpdError);
}

TEST_CASE("materialize enforces the dense cap") {
    CHECK_THROWS_AS(materialize(toeplitz_model(kDenseCap + 1, 0.5)), SizeError);
}

TEST_CASE("permuted examples") {
    const auto base = toeplitz_model(2, 0.5);
    const Permutation swap{1, 0};
    CHECK(materialize(permuted(base, swap)) == materialize(base));

    const Permutation ident{0, 1, 2};
    CHECK(materialize(permuted(toeplitz_model(3, 0.5), ident)) == materialize(toeplitz_model(3, 0.5)));

    // perm = (2,3,1) one-based: entry (1,2) becomes Sigma_{2,3} = 0.5
    const Permutation cyc{1, 2, 0};
    const auto p = permuted(toeplitz_model(3, 0.5), cyc);
    CHECK(p.entry(0, 1) == doctest::Approx(0.5));
    CHECK(p.entry(0, 2) == doctest::Approx(0.5));  // Sigma_{2,1}
    CHECK(p.entry(1, 2) == doctest::Approx(0.25)); // Sigma_{3,1}
}

TEST_CASE("permuted rejects invalid permutations") {
    const auto base = toeplitz_model(3, 0.5);
    CHECK_THROWS_AS(permuted(base, Permutation{0, 0, 1}), DomainError);
    CHECK_THROWS_AS(permuted(base, Permutation{0, 1}), DomainError);
    CHECK_THROWS_AS(permuted(base, Permutation{0, 1, 3}), DomainError);
}

TEST_CASE("permuting an explicit model permutes entries") {
    const Matrix m{{2.0, 0.3, 0.1}, {0.3, 1.5, -0.2}, {0.1, -0.2, 1.0}};
    const Permutation perm{2, 0, 1};
    const auto p = permuted(CovarianceModel::explicit_matrix(m), perm);
    CHECK_FALSE(p.is_toeplitz());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(p.entry(i, j) == m(perm[i], perm[j]));
}

TEST_CASE("permutations compose on Toeplitz models") {
    const auto base = toeplitz_model(5, 0.7);
    const Permutation a{4, 2, 0, 1, 3}, b{1, 0, 4, 3, 2};
    const auto twice = permuted(permuted(base, a), b);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) CHECK(twice.entry(i, j) == base.entry(a[b[i]], a[b[j]]));
}

TEST_CASE("lambda_max stays under the row-sum bound") {
    for (double c : {0.0, 0.3, 0.5, 0.9})
        for (std::size_t d : {1, 2, 7, 32, 128})
            CHECK(power_iteration_lambda_max(materialize(toeplitz_model(d, c))) <= one_norm_eigen_bound(c) + 1e-9);
}

TEST_CASE("permutation preserves lambda_max") {
    for (double c : {0.5, 0.9})
        for (std::size_t d : {4, 16, 32}) {
            const auto base = toeplitz_model(d, c);
            const auto perm = random_permutation(d, 1234 + d);
            const double before = power_iteration_lambda_max(materialize(base), 1e-12);
            const double after = power_iteration_lambda_max(materialize(permuted(base, perm)), 1e-12);
            CHECK(after == doctest::Approx(before).epsilon(1e-8));
        }
}

TEST_CASE("materialized Toeplitz matrices factor for c up to 0.99") {
    for (double c : {0.0, 0.5, 0.9, 0.95, 0.99})
        for (std::size_t d : {1, 16, 128, 512}) CHECK_NOTHROW(cholesky_lower(materialize(toeplitz_model(d, c))));
}

TEST_CASE("random_permutation is a deterministic bijection") {
    const auto a = random_permutation(100, 99);
    CHECK(is_permutation(a, 100));
    CHECK(a == random_permutation(100, 99));
    CHECK(a != random_permutation(100, 100));
}
