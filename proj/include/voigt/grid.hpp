#pragma once

#include <array>
#include <cstdint>

#include "voigt/errors.hpp"

namespace voigt {

/// Discretization of the unit torus [0,1]^dim with n modes per axis.
///
/// Wavevectors follow the usual FFT index order along each axis:
/// index i in [0,n) maps to k = i for i < n/2 and k = i - n otherwise,
/// so k ranges over {-n/2, ..., n/2-1}. Flattened mode storage is
/// row-major over the axes (axis 0 slowest).
struct GridSpec {
    int dim = 3;
    int n = 16;

    static GridSpec make(int dim, int n) {
        if (dim != 2 && dim != 3)
            throw ConfigError("grid dim must be 2 or 3, got " + std::to_string(dim));
        if (n < 4) throw ConfigError("n must be >= 4, got " + std::to_string(n));
        if (n % 2 != 0) throw ConfigError("n must be even, got " + std::to_string(n));
        return GridSpec{dim, n};
    }

    std::int64_t num_modes() const {
        std::int64_t m = 1;
        for (int d = 0; d < dim; ++d) m *= n;
        return m;
    }

    /// Axis index -> signed wavenumber.
    int wavenumber(int i) const { return i < n / 2 ? i : i - n; }

    /// Signed wavenumber -> axis index.
    int axis_index(int k) const { return k >= 0 ? k : k + n; }

    /// Flattened storage index of a wavevector (unused axes must be 0).
    std::int64_t index_of(const std::array<int, 3>& k) const {
        std::int64_t idx = 0;
        for (int d = 0; d < dim; ++d) idx = idx * n + axis_index(k[d]);
        return idx;
    }

    /// Wavevector at a flattened storage index (unused axes set to 0).
    std::array<int, 3> wavevector_at(std::int64_t idx) const {
        std::array<int, 3> k{0, 0, 0};
        for (int d = dim - 1; d >= 0; --d) {
            k[d] = wavenumber(static_cast<int>(idx % n));
            idx /= n;
        }
        return k;
    }

    /// Largest |k_i| kept by the 2/3 dealiasing rule. Alias-free quadratic
    /// products need 3K < n (an image of mode 2K folds to 2K - n, which
    /// touches -K exactly when 3K = n), hence the strict floor((n-1)/3).
    int dealias_cutoff() const { return (n - 1) / 3; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

}  // namespace voigt
