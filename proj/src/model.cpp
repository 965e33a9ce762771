#include "nhosc/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nhosc {

ModelParams::ModelParams(double alpha, double homega, double mu) : alpha_(alpha), homega_(homega), mu_(mu) {
    if (!std::isfinite(alpha) || !std::isfinite(homega) || !std::isfinite(mu))
        throw std::invalid_argument("model parameters must be finite");
    if (!(homega > 0.0)) throw std::invalid_argument("homega must be > 0, got " + std::to_string(homega));
    if (mu < 0.0) throw std::invalid_argument("mu must be >= 0, got " + std::to_string(mu));
}

SubspaceIndex SubspaceIndex::from_int(long long value) {
    if (value < 0) throw std::invalid_argument("subspace index n must be >= 0, got " + std::to_string(value));
    return SubspaceIndex(static_cast<unsigned>(value));
}

double SubspaceIndex::size_factor() const noexcept { return std::sqrt(static_cast<double>(n) + 1.0); }

double coupling(const ModelParams& p, SubspaceIndex n) { return p.mu() * n.size_factor(); }

BlockMatrix2 build_block(const ModelParams& p, SubspaceIndex n) {
    const double nn = static_cast<double>(n.n);
    const double c = coupling(p, n);
    return {0.5 * p.alpha() + nn * p.homega(), c, -c, -0.5 * p.alpha() + (nn + 1.0) * p.homega()};
}

BlockMatrix2 adjoint_block(const BlockMatrix2& m) { return m.adjoint(); }

double sigma_z_residual(const ModelParams& p, SubspaceIndex n) {
    const BlockMatrix2 h = build_block(p, n);
    const BlockMatrix2 sz = BlockMatrix2::diagonal(1.0, -1.0);
    // sigma_z is its own inverse
    return (sz * h * sz - h.adjoint()).frobenius_norm();
}

}  // namespace nhosc
