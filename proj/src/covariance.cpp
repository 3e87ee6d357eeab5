#include "hdcr/covariance.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "hdcr/errors.hpp"
#include "hdcr/rng.hpp"

namespace hdcr {

namespace {

void check_c(double c, const char* who) {
    if (!(c >= 0.0 && c < 1.0)) throw DomainError(std::string(who) + ": c must lie in [0, 1), got " + std::to_string(c));
}

} // namespace

bool is_permutation(std::span<const std::size_t> perm, std::size_t d) {
    if (perm.size() != d) return false;
    std::vector<bool> seen(d, false);
    for (std::size_t v : perm) {
        if (v >= d || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

CovarianceModel CovarianceModel::toeplitz(std::size_t d, double c) {
    if (d < 1) throw DomainError("toeplitz_model: d must be at least 1");
    check_c(c, "toeplitz_model");
    return CovarianceModel(d, Toeplitz{c});
}

CovarianceModel CovarianceModel::explicit_matrix(Matrix m) {
    const std::size_t d = m.size();
    if (d < 1) throw DomainError("explicit covariance: empty matrix");
    if (d > kDenseCap) throw SizeError("explicit covariance: dimension exceeds cap");
    // Throws NotSpdError / DomainError for asymmetric or indefinite input.
    (void)cholesky_lower(m);
    return CovarianceModel(d, Explicit{std::move(m)});
}

double CovarianceModel::toeplitz_c() const {
    if (const auto* t = std::get_if<Toeplitz>(&kind_)) return t->c;
    throw DomainError("covariance model is not Toeplitz");
}

const Matrix& CovarianceModel::explicit_matrix() const {
    if (const auto* e = std::get_if<Explicit>(&kind_)) return e->matrix;
    throw DomainError("covariance model is not explicit");
}

double CovarianceModel::entry(std::size_t i, std::size_t j) const {
    if (i >= d_ || j >= d_) throw DomainError("covariance entry index out of range");
    if (perm_) {
        i = (*perm_)[i];
        j = (*perm_)[j];
    }
    if (const auto* t = std::get_if<Toeplitz>(&kind_)) {
        const std::size_t lag = i > j ? i - j : j - i;
        return lag == 0 ? 1.0 : std::pow(t->c, static_cast<double>(lag));
    }
    return std::get<Explicit>(kind_).matrix(i, j);
}

CovarianceModel toeplitz_model(std::size_t d, double c) { return CovarianceModel::toeplitz(d, c); }

double one_norm_eigen_bound(double c) {
    check_c(c, "one_norm_eigen_bound");
    return (1.0 + c) / (1.0 - c);
}

Matrix materialize(const CovarianceModel& model) {
    const std::size_t d = model.dim();
    if (d > kDenseCap) throw SizeError("materialize: dimension " + std::to_string(d) + " exceeds cap");
    if (!model.is_toeplitz() && !model.permutation()) return model.explicit_matrix();
    Matrix m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = model.entry(i, j);
    return m;
}

CovarianceModel permuted(const CovarianceModel& model, std::span<const std::size_t> perm) {
    const std::size_t d = model.dim();
    if (!is_permutation(perm, d)) throw DomainError("permuted: not a permutation of {0.." + std::to_string(d - 1) + "}");

    if (model.is_toeplitz()) {
        CovarianceModel out = model;
        Permutation composed(d);
        // entry'(i,j) = entry(perm[i], perm[j]) composed with any earlier permutation
        for (std::size_t i = 0; i < d; ++i) composed[i] = model.perm_ ? (*model.perm_)[perm[i]] : perm[i];
        out.perm_ = std::move(composed);
        return out;
    }

    const Matrix& src = model.explicit_matrix();
    Matrix m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = src(perm[i], perm[j]);
    return CovarianceModel(d, CovarianceModel::Explicit{std::move(m)});
}

Permutation random_permutation(std::size_t d, std::uint64_t seed) {
    Permutation perm(d);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    SplitMix64 rng(seed);
    for (std::size_t i = d; i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i));
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

} // namespace hdcr
