#include "voigt/initial_conditions.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "voigt/operators.hpp"
#include "voigt/transform.hpp"

namespace voigt {

static constexpr double two_pi = 2.0 * std::numbers::pi;

SpectralField taylor_green(const GridSpec& grid) {
    auto phys = PhysicalField::zero(grid);
    const int n = grid.n;
    if (grid.dim == 2) {
        for (int i = 0; i < n; ++i) {
            const double x = double(i) / n;
            for (int j = 0; j < n; ++j) {
                const double y = double(j) / n;
                const auto idx = std::int64_t(i) * n + j;
                phys.comp[0](idx) = std::sin(two_pi * x) * std::cos(two_pi * y);
                phys.comp[1](idx) = -std::cos(two_pi * x) * std::sin(two_pi * y);
            }
        }
    } else {
        for (int i = 0; i < n; ++i) {
            const double x = double(i) / n;
            for (int j = 0; j < n; ++j) {
                const double y = double(j) / n;
                for (int l = 0; l < n; ++l) {
                    const double z = double(l) / n;
                    const auto idx = (std::int64_t(i) * n + j) * n + l;
                    phys.comp[0](idx) =
                        std::sin(two_pi * x) * std::cos(two_pi * y) * std::cos(two_pi * z);
                    phys.comp[1](idx) =
                        -std::cos(two_pi * x) * std::sin(two_pi * y) * std::cos(two_pi * z);
                    phys.comp[2](idx) = 0.0;
                }
            }
        }
    }
    auto f = to_spectral(phys);
    f.set_zero_mean();
    return f;
}

namespace {

// k is the canonical representative of the Hermitian pair {k, -k} if its
// first nonzero component is positive.
bool canonical_half(const std::array<int, 3>& k, int dim) {
    for (int d = 0; d < dim; ++d) {
        if (k[d] > 0) return true;
        if (k[d] < 0) return false;
    }
    return false;  // k = 0
}

std::array<int, 3> negate(const std::array<int, 3>& k) { return {-k[0], -k[1], -k[2]}; }

}  // namespace

SpectralField random_analytic(const GridSpec& grid, std::uint64_t seed, double tau0,
                              double energy) {
    if (tau0 < 0) throw ConfigError("random_analytic: tau0 must be >= 0");
    if (energy <= 0) throw ConfigError("random_analytic: energy must be > 0");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    auto f = SpectralField::zero(grid);
    const int cutoff = grid.dealias_cutoff();
    const auto m = grid.num_modes();
    for (std::int64_t i = 0; i < m; ++i) {
        const auto k = grid.wavevector_at(i);
        bool inside = true;
        double ksq = 0;
        for (int d = 0; d < grid.dim; ++d) {
            if (std::abs(k[d]) > cutoff) inside = false;
            ksq += double(k[d]) * k[d];
        }
        if (!inside || !canonical_half(k, grid.dim)) continue;
        const double envelope = std::exp(-tau0 * two_pi * std::sqrt(ksq));
        const auto neg = grid.index_of(negate(k));
        for (int c = 0; c < grid.dim; ++c) {
            const std::complex<double> z(gauss(rng), gauss(rng));
            f.comp(c)(i) = envelope * z;
            f.comp(c)(neg) = envelope * std::conj(z);
        }
    }
    f = leray_project(f);
    const double e = f.l2_norm_sq();
    if (e == 0) throw ConfigError("random_analytic: degenerate draw");
    f *= std::sqrt(energy / e);
    return f;
}

SpectralField synthetic_exponential_spectrum(const GridSpec& grid, double tau0,
                                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, two_pi);

    auto f = SpectralField::zero(grid);
    const int cutoff = grid.dealias_cutoff();
    const auto m = grid.num_modes();
    for (std::int64_t i = 0; i < m; ++i) {
        const auto k = grid.wavevector_at(i);
        bool inside = true;
        double ksq = 0;
        for (int d = 0; d < grid.dim; ++d) {
            if (std::abs(k[d]) > cutoff) inside = false;
            ksq += double(k[d]) * k[d];
        }
        if (!inside || !canonical_half(k, grid.dim)) continue;
        const double kabs = std::sqrt(ksq);
        // unit vector orthogonal to k so the per-mode amplitude is exact
        std::array<double, 3> e{};
        if (grid.dim == 2) {
            e = {-k[1] / kabs, k[0] / kabs, 0.0};
        } else {
            std::array<double, 3> a = (k[0] == 0 && k[1] == 0) ? std::array<double, 3>{1, 0, 0}
                                                               : std::array<double, 3>{0, 0, 1};
            e = {k[1] * a[2] - k[2] * a[1], k[2] * a[0] - k[0] * a[2],
                 k[0] * a[1] - k[1] * a[0]};
            const double len = std::sqrt(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);
            for (auto& v : e) v /= len;
        }
        const std::complex<double> phase = std::polar(std::exp(-tau0 * two_pi * kabs), angle(rng));
        const auto neg = grid.index_of(negate(k));
        for (int c = 0; c < grid.dim; ++c) {
            f.comp(c)(i) = phase * e[c];
            f.comp(c)(neg) = std::conj(phase * e[c]);
        }
    }
    return f;
}

}  // namespace voigt
