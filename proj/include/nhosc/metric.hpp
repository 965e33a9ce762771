#pragma once

#include <array>

#include "nhosc/matrix2.hpp"
#include "nhosc/model.hpp"
#include "nhosc/spectral.hpp"

namespace nhosc {

/// Matched right/left eigenvector pairs of a diagonalizable 2x2 block.
struct BiorthoSystem {
    std::array<Vec2, 2> right;
    std::array<Vec2, 2> left;
    std::array<cplx, 2> values;
    BlockMatrix2 overlap;  ///< overlap(i, j) = <L^i|R^j>
};

/// Biorthonormal eigenvector system of `m`: left vectors are eigenvectors of
/// adjoint(m) for the conjugate eigenvalue, scaled so <L^i|R^i> = 1.
/// Throws DefectiveMatrix at an exceptional point.
BiorthoSystem biortho_system(const BlockMatrix2& m);

/// Rescale each pair (L, R) -> (c L, R / conj(c)) so |L| = |R|, keeping
/// <L|R> = 1, and rotate the common phase so the largest component of R
/// is real and positive.
BiorthoSystem fix_gauge_balanced(const BiorthoSystem& b);

/// sum_i |L^i><L^i|
BlockMatrix2 left_projector_sum(const BiorthoSystem& b);

struct MetricMatrix {
    BlockMatrix2 matrix;
    PhaseRegion region;
    SubspaceIndex n;
};

/// Metric operator from gauge-fixed left eigenvectors. mu = 0 returns the
/// identity. Throws ExceptionalPoint at the EP.
MetricMatrix eta(const ModelParams& p, SubspaceIndex n);

/// Closed forms for general Delta (D = sqrt|disc|, c = mu sqrt(n+1)):
///   unbroken (1/D) [[|Delta|, -sgn(Delta) 2c], [-sgn(Delta) 2c, |Delta|]]
///   broken   (1/D) [[2c, -Delta], [-Delta, 2c]]
MetricMatrix eta_closed_form(const ModelParams& p, SubspaceIndex n);

struct MetricDiagnostics {
    double symmetry_residual;      ///< ||eta - eta^T|| + ||Im eta||, Frobenius
    double det_error;              ///< |det eta - 1|
    bool positive_definite;
    double intertwining_residual;  ///< ||eta H - H^dagger eta||_F
    double h_norm;                 ///< ||H||_F
    PhaseRegion region;
};

/// Throws ExceptionalPoint at the EP. The intertwining residual only
/// vanishes in the unbroken region; in the broken region it is a diagnostic.
MetricDiagnostics verify_metric(const ModelParams& p, SubspaceIndex n);

}  // namespace nhosc
