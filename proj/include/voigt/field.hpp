#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "voigt/grid.hpp"

namespace voigt {

/// Per-grid tables of wavevector data, laid out like the mode storage.
/// Cached per (dim, n) so operators reduce to Eigen array expressions.
struct ModeTable {
    Eigen::ArrayXd k[3];       // signed wavenumber component per mode
    Eigen::ArrayXd ksq;        // |k|^2
    Eigen::ArrayXd inv_ksq;    // 1/|k|^2, zero at k = 0
    Eigen::ArrayXd kabs;       // |k|
    Eigen::ArrayXd dealias23;  // 1 if |k_i| <= n/3 for all i, else 0

    static const ModeTable& get(const GridSpec& grid);
};

/// Vector (or scalar) field on the torus stored as complex Fourier
/// coefficients of e^{2*pi*i k.x}. Mean-zero fields have a zero k=0 mode.
class SpectralField {
public:
    SpectralField() = default;

    static SpectralField zero(const GridSpec& grid, int components = 0) {
        SpectralField f;
        f.grid_ = grid;
        int nc = components > 0 ? components : grid.dim;
        f.comp_.resize(nc);
        for (auto& c : f.comp_) c = Eigen::ArrayXcd::Zero(grid.num_modes());
        return f;
    }

    const GridSpec& grid() const { return grid_; }
    int components() const { return static_cast<int>(comp_.size()); }

    Eigen::ArrayXcd& comp(int i) { return comp_[i]; }
    const Eigen::ArrayXcd& comp(int i) const { return comp_[i]; }

    std::complex<double>& at(int c, const std::array<int, 3>& k) {
        return comp_[c](grid_.index_of(k));
    }
    std::complex<double> at(int c, const std::array<int, 3>& k) const {
        return comp_[c](grid_.index_of(k));
    }

    /// Sum over modes of |u_hat|^2; equals the mean of |u(x)|^2 (Parseval).
    double l2_norm_sq() const {
        double s = 0;
        for (const auto& c : comp_) s += c.abs2().sum();
        return s;
    }
    double l2_norm() const { return std::sqrt(l2_norm_sq()); }

    bool all_finite() const {
        for (const auto& c : comp_)
            if (!c.allFinite()) return false;
        return true;
    }

    void set_zero_mean() {
        for (auto& c : comp_) c(0) = 0.0;
    }

    SpectralField& operator+=(const SpectralField& o) {
        for (int i = 0; i < components(); ++i) comp_[i] += o.comp_[i];
        return *this;
    }
    SpectralField& operator-=(const SpectralField& o) {
        for (int i = 0; i < components(); ++i) comp_[i] -= o.comp_[i];
        return *this;
    }
    SpectralField& operator*=(double s) {
        for (auto& c : comp_) c *= s;
        return *this;
    }

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

    /// a += s * b without temporaries.
    void axpy(double s, const SpectralField& b) {
        for (int i = 0; i < components(); ++i) comp_[i] += s * b.comp_[i];
    }

private:
    GridSpec grid_;
    std::vector<Eigen::ArrayXcd> comp_;
};

/// L^2 inner product (u,v) = Re sum_k u_hat . conj(v_hat).
inline double inner_product(const SpectralField& a, const SpectralField& b) {
    double s = 0;
    for (int i = 0; i < a.components(); ++i)
        s += (a.comp(i) * b.comp(i).conjugate()).sum().real();
    return s;
}

/// Real-valued samples on the n^dim physical grid, x_j = j/n per axis,
/// same row-major flattening as the spectral storage.
struct PhysicalField {
    GridSpec grid;
    std::vector<Eigen::ArrayXd> comp;

    static PhysicalField zero(const GridSpec& grid, int components = 0) {
        PhysicalField f;
        f.grid = grid;
        int nc = components > 0 ? components : grid.dim;
        f.comp.resize(nc);
        for (auto& c : f.comp) c = Eigen::ArrayXd::Zero(grid.num_modes());
        return f;
    }
};

}  // namespace voigt
