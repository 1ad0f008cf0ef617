#include "voigt/norms.hpp"

#include <cmath>
#include <numbers>

namespace voigt {

static constexpr double two_pi = 2.0 * std::numbers::pi;
static constexpr double four_pi_sq = two_pi * two_pi;

double sobolev_norm(const SpectralField& field, double m) {
    if (m < 0) throw ConfigError("sobolev_norm: m must be >= 0");
    const auto& t = ModeTable::get(field.grid());
    const Eigen::ArrayXd w = (1.0 + four_pi_sq * t.ksq).pow(m);
    double s = 0;
    for (int c = 0; c < field.components(); ++c) s += (w * field.comp(c).abs2()).sum();
    return std::sqrt(s);
}

double sobolev_seminorm(const SpectralField& field, double m) {
    if (m < 0) throw ConfigError("sobolev_seminorm: m must be >= 0");
    const auto& t = ModeTable::get(field.grid());
    const Eigen::ArrayXd w = (four_pi_sq * t.ksq).pow(m);
    double s = 0;
    for (int c = 0; c < field.components(); ++c) s += (w * field.comp(c).abs2()).sum();
    return std::sqrt(s);
}

GevreyNorm gevrey_norm(const SpectralField& field, double r, double tau) {
    if (r < 0 || tau < 0) throw ConfigError("gevrey_norm: r and tau must be >= 0");
    const auto& t = ModeTable::get(field.grid());
    // log of per-mode weight (2pi|k|)^{2r} e^{2 tau 2pi |k|}; the k=0 mode
    // contributes only for r = 0.
    constexpr double exp_clamp = 700.0;  // just below log(DBL_MAX)
    GevreyNorm out;
    double s = 0;
    const auto m = field.grid().num_modes();
    for (std::int64_t i = 0; i < m; ++i) {
        double a2 = 0;
        for (int c = 0; c < field.components(); ++c) a2 += std::norm(field.comp(c)(i));
        if (a2 == 0) continue;
        double le;
        if (t.kabs(i) == 0) {
            if (r > 0) continue;  // weight 0
            le = 0;
        } else {
            le = 2.0 * r * std::log(two_pi * t.kabs(i)) + 2.0 * tau * two_pi * t.kabs(i);
        }
        if (le > exp_clamp) {
            le = exp_clamp;
            out.saturated = true;
        }
        s += std::exp(le) * a2;
    }
    out.value = std::sqrt(s);
    return out;
}

}  // namespace voigt
