#pragma once

#include <string_view>

#include "nhosc/matrix2.hpp"
#include "nhosc/model.hpp"

namespace nhosc {

/// Phase of one invariant subspace. The exceptional point is kept separate
/// from the unbroken region because the metric and the partition function
/// are singular there.
enum class PhaseRegion { Unbroken, Broken, Exceptional };

std::string_view to_string(PhaseRegion r);

struct Spectrum2 {
    cplx e_plus;
    cplx e_minus;
    PhaseRegion region;
    double discriminant;  ///< Delta^2 - 4 mu^2 (n+1)
};

/// Delta^2 - 4 mu^2 (n+1), evaluated in real arithmetic.
double discriminant(const ModelParams& p, SubspaceIndex n);

/// Closed-form eigenvalues E = ((2n+1) hw +- sqrt(disc)) / 2 with
/// e_plus >= e_minus (unbroken) or Im(e_plus) > 0 (broken).
Spectrum2 block_spectrum(const ModelParams& p, SubspaceIndex n);

PhaseRegion classify(const ModelParams& p, SubspaceIndex n);

/// mu_c = |Delta| / (2 sqrt(n+1))
double critical_coupling(const ModelParams& p, SubspaceIndex n);

/// Bisection on the sign of the discriminant over mu in [lo, hi], to a
/// bracket width of 1e-12. Only alpha and homega of `p` are used.
/// Throws NoSignChange if the discriminant does not change sign.
double locate_ep_numeric(const ModelParams& p, SubspaceIndex n, double lo, double hi);

}  // namespace nhosc
