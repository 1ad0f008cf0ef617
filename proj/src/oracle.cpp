#include "voigt/oracle.hpp"

#include <cmath>
#include <numbers>

namespace voigt {
namespace oracle {

static constexpr double two_pi = 2.0 * std::numbers::pi;

DenseModeSet DenseModeSet::from_field(const SpectralField& field) {
    DenseModeSet set;
    set.grid = field.grid();
    const auto m = field.grid().num_modes();
    for (std::int64_t i = 0; i < m; ++i) {
        Mode mode{field.grid().wavevector_at(i), {}};
        bool nonzero = false;
        for (int c = 0; c < field.components(); ++c) {
            mode.coeff[c] = field.comp(c)(i);
            if (mode.coeff[c] != std::complex<double>(0.0)) nonzero = true;
        }
        if (nonzero) set.modes.push_back(mode);
    }
    return set;
}

SpectralField DenseModeSet::to_field(int components) const {
    auto f = SpectralField::zero(grid, components);
    for (const auto& m : modes)
        for (int c = 0; c < components; ++c) f.at(c, m.k) = m.coeff[c];
    return f;
}

namespace {

bool in_rule(const std::array<int, 3>& k, const GridSpec& grid, TruncationRule rule) {
    if (rule.kind == TruncationRule::Kind::two_thirds) {
        for (int d = 0; d < grid.dim; ++d)
            if (std::abs(k[d]) > grid.dealias_cutoff()) return false;
        return true;
    }
    long ksq = 0;
    for (int d = 0; d < grid.dim; ++d) ksq += long(k[d]) * k[d];
    return ksq <= long(rule.radius) * rule.radius;
}

}  // namespace

SpectralField convolution_nonlinear_term(const SpectralField& u, TruncationRule rule) {
    const auto& grid = u.grid();
    const auto trunc = dealias_truncate(u, rule);
    const auto set = DenseModeSet::from_field(trunc);
    if (set.modes.size() > 10000)
        throw ConfigError("convolution_nonlinear_term: too many active modes (O(M^2) oracle)");

    auto out = SpectralField::zero(grid, u.components());
    const int dim = grid.dim;
    for (const auto& p : set.modes) {
        for (const auto& q : set.modes) {
            std::array<int, 3> k{0, 0, 0};
            bool representable = true;
            for (int d = 0; d < dim; ++d) {
                k[d] = p.k[d] + q.k[d];
                if (k[d] < -grid.n / 2 || k[d] > grid.n / 2 - 1) representable = false;
            }
            if (!representable || !in_rule(k, grid, rule)) continue;
            // (2pi i q . u_hat_p) u_hat_q
            std::complex<double> qdotp(0.0, 0.0);
            for (int d = 0; d < dim; ++d) qdotp += double(q.k[d]) * p.coeff[d];
            const std::complex<double> factor = std::complex<double>(0.0, two_pi) * qdotp;
            const auto idx = grid.index_of(k);
            for (int c = 0; c < dim; ++c) out.comp(c)(idx) += factor * q.coeff[c];
        }
    }

    // per-mode Leray projection, independent of the fast-path implementation
    const auto m = grid.num_modes();
    for (std::int64_t i = 0; i < m; ++i) {
        const auto k = grid.wavevector_at(i);
        double ksq = 0;
        for (int d = 0; d < dim; ++d) ksq += double(k[d]) * k[d];
        if (ksq == 0) {
            for (int c = 0; c < dim; ++c) out.comp(c)(i) = 0.0;
            continue;
        }
        std::complex<double> kdot(0.0, 0.0);
        for (int d = 0; d < dim; ++d) kdot += double(k[d]) * out.comp(d)(i);
        kdot /= ksq;
        for (int c = 0; c < dim; ++c) out.comp(c)(i) -= double(k[c]) * kdot;
    }
    return out;
}

double fd_time_derivative(const SimState& before, const SimState& center,
                          const SimState& after, double h, const VoigtParams& params,
                          RhsKind kind) {
    if (h <= 0) throw ConfigError("fd_time_derivative: h must be > 0");
    double res_sq = 0;
    const double inv2h = 1.0 / (2.0 * h);
    if (kind == RhsKind::mhd_voigt) {
        const auto [du, db] = rhs_mhd_voigt(center, params);
        auto ru = after.u - before.u;
        ru *= inv2h;
        ru -= du;
        res_sq += ru.l2_norm_sq();
        auto rb = *after.b - *before.b;
        rb *= inv2h;
        rb -= db;
        res_sq += rb.l2_norm_sq();
    } else {
        auto du = kind == RhsKind::euler ? rhs_euler(center) : rhs_voigt(center, params);
        auto ru = after.u - before.u;
        ru *= inv2h;
        ru -= du;
        res_sq += ru.l2_norm_sq();
    }
    return std::sqrt(res_sq);
}

double direct_norm_sums(const SpectralField& field, const NormSpec& spec) {
    const auto& grid = field.grid();
    const auto m = grid.num_modes();
    long double sum = 0;
    const bool gevrey = spec.gevrey_tau > 0 || spec.gevrey_r > 0;
    for (std::int64_t i = 0; i < m; ++i) {
        const auto k = grid.wavevector_at(i);
        double ksq = 0;
        for (int d = 0; d < grid.dim; ++d) ksq += double(k[d]) * k[d];
        const double kabs = std::sqrt(ksq);
        long double a2 = 0;
        for (int c = 0; c < field.components(); ++c) a2 += std::norm(field.comp(c)(i));
        if (a2 == 0) continue;
        double w;
        if (gevrey) {
            if (kabs == 0) {
                w = spec.gevrey_r > 0 ? 0.0 : 1.0;
            } else {
                w = std::pow(two_pi * kabs, 2.0 * spec.gevrey_r) *
                    std::exp(2.0 * spec.gevrey_tau * two_pi * kabs);
            }
        } else if (spec.seminorm) {
            w = std::pow(two_pi * two_pi * ksq, spec.m);
        } else {
            w = std::pow(1.0 + two_pi * two_pi * ksq, spec.m);
        }
        sum += w * a2;
    }
    return std::sqrt(double(sum));
}

}  // namespace oracle
}  // namespace voigt
