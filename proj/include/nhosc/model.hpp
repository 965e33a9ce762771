#pragma once

#include "nhosc/matrix2.hpp"

namespace nhosc {

/// Physical inputs of the spin-1/2 + oscillator model. Only the product
/// hbar*omega enters, so it is stored as one field. Energies are in units
/// with k_B = 1.
class ModelParams {
public:
    /// Throws std::invalid_argument unless homega > 0, mu >= 0 and all finite.
    ModelParams(double alpha, double homega, double mu);

    double alpha() const noexcept { return alpha_; }
    double homega() const noexcept { return homega_; }
    double mu() const noexcept { return mu_; }
    /// homega - alpha
    double delta() const noexcept { return homega_ - alpha_; }

    ModelParams with_mu(double mu) const { return {alpha_, homega_, mu}; }

private:
    double alpha_;
    double homega_;
    double mu_;
};

/// Oscillator quantum number n labelling the invariant subspace spanned by
/// |n,+1/2> and |n+1,-1/2>.
struct SubspaceIndex {
    unsigned n = 0;

    constexpr SubspaceIndex() = default;
    constexpr explicit SubspaceIndex(unsigned value) : n(value) {}
    /// Throws std::invalid_argument for negative values.
    static SubspaceIndex from_int(long long value);

    double size_factor() const noexcept;  // sqrt(n+1)
    friend constexpr bool operator==(SubspaceIndex a, SubspaceIndex b) { return a.n == b.n; }
};

/// The coupling magnitude mu*sqrt(n+1) of the subspace block.
double coupling(const ModelParams& p, SubspaceIndex n);

/// H_{n+1} = [[alpha/2 + n hw, mu sqrt(n+1)], [-mu sqrt(n+1), -alpha/2 + (n+1) hw]]
BlockMatrix2 build_block(const ModelParams& p, SubspaceIndex n);

BlockMatrix2 adjoint_block(const BlockMatrix2& m);

/// Frobenius norm of sigma_z H sigma_z^{-1} - H^dagger on the block.
double sigma_z_residual(const ModelParams& p, SubspaceIndex n);

}  // namespace nhosc
