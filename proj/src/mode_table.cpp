#include <map>
#include <memory>

#include "voigt/field.hpp"

namespace voigt {

static ModeTable build(const GridSpec& grid) {
    ModeTable t;
    const auto m = grid.num_modes();
    for (int d = 0; d < 3; ++d) t.k[d] = Eigen::ArrayXd::Zero(m);
    t.ksq = Eigen::ArrayXd::Zero(m);
    t.inv_ksq = Eigen::ArrayXd::Zero(m);
    t.kabs = Eigen::ArrayXd::Zero(m);
    t.dealias23 = Eigen::ArrayXd::Zero(m);
    const int cutoff = grid.dealias_cutoff();
    for (std::int64_t i = 0; i < m; ++i) {
        const auto k = grid.wavevector_at(i);
        double ksq = 0;
        bool keep = true;
        for (int d = 0; d < grid.dim; ++d) {
            t.k[d](i) = k[d];
            ksq += double(k[d]) * k[d];
            if (std::abs(k[d]) > cutoff) keep = false;
        }
        t.ksq(i) = ksq;
        t.kabs(i) = std::sqrt(ksq);
        t.inv_ksq(i) = ksq > 0 ? 1.0 / ksq : 0.0;
        t.dealias23(i) = keep ? 1.0 : 0.0;
    }
    return t;
}

const ModeTable& ModeTable::get(const GridSpec& grid) {
    thread_local std::map<std::pair<int, int>, std::unique_ptr<ModeTable>> cache;
    auto& slot = cache[{grid.dim, grid.n}];
    if (!slot) slot = std::make_unique<ModeTable>(build(grid));
    return *slot;
}

}  // namespace voigt
