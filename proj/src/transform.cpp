#include "voigt/transform.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <tuple>

namespace voigt {
namespace {

// One cached in-place c2c plan per (dim, n, sign). thread_local keeps the
// planner out of any cross-thread synchronization; FFTW wisdom still makes
// repeated planning cheap within a thread.
class FftPlan {
public:
    FftPlan(const GridSpec& grid, int sign) {
        size_ = grid.num_modes();
        buf_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * size_));
        int dims[3] = {grid.n, grid.n, grid.n};
        plan_ = fftw_plan_dft(grid.dim, dims, buf_, buf_, sign, FFTW_ESTIMATE);
    }
    ~FftPlan() {
        fftw_destroy_plan(plan_);
        fftw_free(buf_);
    }
    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;

    std::complex<double>* buffer() { return reinterpret_cast<std::complex<double>*>(buf_); }
    std::int64_t size() const { return size_; }
    void execute() { fftw_execute(plan_); }

private:
    fftw_complex* buf_;
    fftw_plan plan_;
    std::int64_t size_;
};

FftPlan& plan_for(const GridSpec& grid, int sign) {
    thread_local std::map<std::tuple<int, int, int>, std::unique_ptr<FftPlan>> cache;
    auto& slot = cache[{grid.dim, grid.n, sign}];
    if (!slot) slot = std::make_unique<FftPlan>(grid, sign);
    return *slot;
}

}  // namespace

PhysicalField to_physical(const SpectralField& field) {
    auto& plan = plan_for(field.grid(), FFTW_BACKWARD);
    auto out = PhysicalField::zero(field.grid(), field.components());
    const auto m = plan.size();
    for (int c = 0; c < field.components(); ++c) {
        Eigen::Map<Eigen::ArrayXcd> buf(plan.buffer(), m);
        buf = field.comp(c);
        plan.execute();
        out.comp[c] = buf.real();
    }
    return out;
}

SpectralField to_spectral(const PhysicalField& samples) {
    auto& plan = plan_for(samples.grid, FFTW_FORWARD);
    auto out = SpectralField::zero(samples.grid, static_cast<int>(samples.comp.size()));
    const auto m = plan.size();
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t c = 0; c < samples.comp.size(); ++c) {
        Eigen::Map<Eigen::ArrayXcd> buf(plan.buffer(), m);
        buf = samples.comp[c].cast<std::complex<double>>();
        plan.execute();
        out.comp(static_cast<int>(c)) = buf * scale;
    }
    return out;
}

}  // namespace voigt
