#pragma once

#include <optional>

#include "nhosc/matrix2.hpp"
#include "nhosc/model.hpp"
#include "nhosc/spectral.hpp"

namespace nhosc {

/// tau = k_B T in energy units, strictly positive.
class Temperature {
public:
    explicit Temperature(double tau);
    double tau() const noexcept { return tau_; }

private:
    double tau_;
};

/// Raw trace tr(exp(-H/tau) eta) of the subspace. Throws ExceptionalPoint.
cplx partition_trace(const ModelParams& p, SubspaceIndex n, Temperature t);

/// Real part of partition_trace after checking |Im| < 1e-10 |Z|.
/// May be negative in the broken region (cos factor).
double partition_function(const ModelParams& p, SubspaceIndex n, Temperature t);

/// Unbroken: (2|Delta|/D) exp(-(2n+1)hw/2tau) cosh(D/2tau)
/// Broken:   (4 mu sqrt(n+1)/D) exp(-(2n+1)hw/2tau) cos(D/2tau)
double partition_function_closed_form(const ModelParams& p, SubspaceIndex n, Temperature t);

/// d ln|Z| / d tau and d^2 ln|Z| / d tau^2 from the closed forms, with the
/// summed magnitudes of the terms making up each derivative.
struct LogZDerivatives {
    double first;
    double second;
    double first_scale;
    double second_scale;
};
LogZDerivatives log_z_derivatives(const ModelParams& p, SubspaceIndex n, Temperature t);

/// b / tau with b = sqrt|disc| / 2: the argument of cosh (unbroken) or
/// cos (broken) in Z. Throws ExceptionalPoint.
double reduced_gap(const ModelParams& p, SubspaceIndex n, Temperature t);

/// -tau ln Z, or nullopt when Z <= 0.
std::optional<double> free_energy(const ModelParams& p, SubspaceIndex n, Temperature t);

/// ln Z + tau d ln Z / d tau in closed form, or nullopt when Z <= 0.
std::optional<double> entropy(const ModelParams& p, SubspaceIndex n, Temperature t);

/// 2 tau d ln|Z|/d tau + tau^2 d^2 ln|Z|/d tau^2: (b/tau)^2 sech^2(b/tau)
/// unbroken, -(b/tau)^2 sec^2(b/tau) broken, with b = sqrt|disc|/2.
double specific_heat(const ModelParams& p, SubspaceIndex n, Temperature t);

struct ThermoPoint {
    SubspaceIndex n;
    double mu = 0.0;
    double tau = 0.0;
    PhaseRegion region = PhaseRegion::Exceptional;
    std::optional<double> z;
    std::optional<double> free_energy;
    std::optional<double> entropy;
    std::optional<double> specific_heat;
    bool z_positive = false;
};

/// Bundles Z, F, S and C_v from one branch. Never throws for valid
/// parameters; an EP yields a point with every observable empty.
ThermoPoint thermo_point(const ModelParams& p, SubspaceIndex n, Temperature t);

/// d1/d2 errors are relative to the summed term magnitudes of the analytic
/// derivative; entropy and cv errors are plain relative errors.
struct FiniteDiffReport {
    double step;
    double d1_numeric, d1_analytic, d1_rel_error;
    double d2_numeric, d2_analytic, d2_rel_error;
    double entropy_numeric, entropy_analytic, entropy_rel_error;
    double cv_numeric, cv_analytic, cv_rel_error;
};

/// Centered differences of ln Z (matrix route) at tau +- step against the
/// analytic derivatives. Throws StencilCrossesSingularity when a stencil
/// point has Z <= 0 or tau - step <= 0.
FiniteDiffReport finite_diff_check(const ModelParams& p, SubspaceIndex n, Temperature t, double step);

}  // namespace nhosc
