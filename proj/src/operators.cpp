#include "voigt/operators.hpp"

#include <numbers>

namespace voigt {

static constexpr double two_pi = 2.0 * std::numbers::pi;
static constexpr double four_pi_sq = two_pi * two_pi;

SpectralField leray_project(const SpectralField& field) {
    const auto& t = ModeTable::get(field.grid());
    auto out = field;
    Eigen::ArrayXcd kdotu = Eigen::ArrayXcd::Zero(field.grid().num_modes());
    for (int d = 0; d < field.grid().dim; ++d) kdotu += t.k[d] * field.comp(d);
    kdotu *= t.inv_ksq;
    for (int d = 0; d < field.grid().dim; ++d) out.comp(d) -= t.k[d] * kdotu;
    out.set_zero_mean();
    return out;
}

SpectralField helmholtz_inverse(const SpectralField& field, double alpha) {
    if (alpha < 0) throw ConfigError("helmholtz_inverse: alpha must be >= 0");
    if (alpha == 0) return field;
    const auto& t = ModeTable::get(field.grid());
    auto out = field;
    const Eigen::ArrayXd scale = 1.0 / (1.0 + (alpha * alpha * four_pi_sq) * t.ksq);
    for (int c = 0; c < field.components(); ++c) out.comp(c) *= scale;
    return out;
}

SpectralField partial_derivative(const SpectralField& field, int axis) {
    const auto& t = ModeTable::get(field.grid());
    auto out = field;
    const std::complex<double> factor(0.0, two_pi);
    for (int c = 0; c < field.components(); ++c) out.comp(c) = factor * t.k[axis] * field.comp(c);
    return out;
}

std::vector<SpectralField> gradient(const SpectralField& field) {
    std::vector<SpectralField> g;
    g.reserve(field.grid().dim);
    for (int d = 0; d < field.grid().dim; ++d) g.push_back(partial_derivative(field, d));
    return g;
}

SpectralField divergence(const SpectralField& field) {
    const auto& t = ModeTable::get(field.grid());
    auto out = SpectralField::zero(field.grid(), 1);
    const std::complex<double> factor(0.0, two_pi);
    for (int d = 0; d < field.grid().dim; ++d) out.comp(0) += factor * t.k[d] * field.comp(d);
    return out;
}

SpectralField laplacian(const SpectralField& field) {
    const auto& t = ModeTable::get(field.grid());
    auto out = field;
    for (int c = 0; c < field.components(); ++c) out.comp(c) *= -four_pi_sq * t.ksq;
    return out;
}

SpectralField dealias_truncate(const SpectralField& field, TruncationRule rule) {
    const auto& t = ModeTable::get(field.grid());
    auto out = field;
    if (rule.kind == TruncationRule::Kind::two_thirds) {
        for (int c = 0; c < field.components(); ++c) out.comp(c) *= t.dealias23;
    } else {
        const double rsq = double(rule.radius) * rule.radius;
        const Eigen::ArrayXd mask = (t.ksq <= rsq).cast<double>();
        for (int c = 0; c < field.components(); ++c) out.comp(c) *= mask;
    }
    return out;
}

SpectralField spectral_prolong(const SpectralField& field, int new_n) {
    const auto& grid = field.grid();
    if (new_n < grid.n) throw ConfigError("spectral_prolong: new_n must be >= n");
    const auto fine = GridSpec::make(grid.dim, new_n);
    auto out = SpectralField::zero(fine, field.components());
    const auto m = grid.num_modes();
    for (std::int64_t i = 0; i < m; ++i) {
        const auto k = grid.wavevector_at(i);
        const auto j = fine.index_of(k);
        for (int c = 0; c < field.components(); ++c) out.comp(c)(j) = field.comp(c)(i);
    }
    return out;
}

double solenoidal_defect(const SpectralField& field) {
    const auto& t = ModeTable::get(field.grid());
    Eigen::ArrayXcd kdotu = Eigen::ArrayXcd::Zero(field.grid().num_modes());
    double den = 0;
    for (int d = 0; d < field.grid().dim; ++d) {
        kdotu += t.k[d] * field.comp(d);
        den += (t.ksq * field.comp(d).abs2()).sum();
    }
    if (den == 0) return 0.0;
    return std::sqrt(kdotu.abs2().sum() / den);
}

}  // namespace voigt
