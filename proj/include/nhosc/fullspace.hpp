#pragma once

#include <cstddef>
#include <vector>

#include "nhosc/model.hpp"
#include "nhosc/smallmat.hpp"

namespace nhosc {

/// Oscillator levels 0..cutoff tensored with the spin. Basis index of
/// |n, +1/2> is 2n, of |n, -1/2> is 2n+1.
class TruncatedSpace {
public:
    /// Throws std::invalid_argument for cutoff < 1.
    explicit TruncatedSpace(unsigned cutoff);

    unsigned cutoff() const noexcept { return cutoff_; }
    std::size_t dim() const noexcept { return 2 * (static_cast<std::size_t>(cutoff_) + 1); }
    static std::size_t index(unsigned n, bool spin_up) { return 2 * static_cast<std::size_t>(n) + (spin_up ? 0 : 1); }

    DenseMatrix annihilation() const;  ///< a (x) 1
    DenseMatrix creation() const;      ///< a^dagger (x) 1
    DenseMatrix number() const;        ///< a^dagger a (x) 1
    DenseMatrix sigma_z() const;       ///< 1 (x) diag(1, -1)
    DenseMatrix sigma_plus() const;    ///< 1 (x) |+><-|
    DenseMatrix sigma_minus() const;   ///< 1 (x) |-><+|
    DenseMatrix parity() const;        ///< diag((-1)^n) (x) 1

private:
    DenseMatrix oscillator_ladder() const;  // a on the oscillator factor alone
    unsigned cutoff_;
};

/// H = (alpha/2) sigma_z + hw a^dagger a + mu (sigma_+ a - sigma_- a^dagger)
/// on the truncated space. The coupling out of |cutoff, +1/2> is cut.
DenseMatrix assemble_full(const ModelParams& p, const TruncatedSpace& space);

/// H with sigma -> -sigma (so sigma_+- -> -sigma_-+), a, a^dagger fixed and
/// entries complex conjugated.
DenseMatrix pt_transform(const ModelParams& p, const TruncatedSpace& space);

/// Largest distance in a greedy nearest-neighbour matching of two
/// multisets; +infinity if their sizes differ.
double multiset_distance(std::vector<cplx> expected, std::vector<cplx> computed);

struct BlockDecompositionReport {
    std::vector<cplx> expected;  ///< {-alpha/2} and the block spectra n = 0..cutoff-1
    std::vector<cplx> computed;  ///< eigN with the dangling |cutoff,+1/2> removed
    double max_mismatch;
    double ground_state_error;   ///< distance from -alpha/2 to the nearest eigenvalue
    bool passed;                 ///< max_mismatch <= tolerance
};

/// Throws std::invalid_argument for cutoff < 2; ConvergenceFailure propagates.
BlockDecompositionReport block_decomposition_check(const ModelParams& p, unsigned cutoff, double tolerance = 1e-8);

struct SymmetryReport {
    double h_norm;
    double commutator_residual;  ///< ||[H, P sigma_z]||_F
    double sigma_z_residual;     ///< ||sigma_z H sigma_z - H^dagger||_F
    double parity_residual;      ///< ||P H P - H^dagger||_F
    double pt_residual;          ///< ||H_PT - H||_F
};

SymmetryReport symmetry_report(const ModelParams& p, unsigned cutoff);

}  // namespace nhosc
