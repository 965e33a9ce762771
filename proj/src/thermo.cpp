#include "nhosc/thermo.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "nhosc/errors.hpp"
#include "nhosc/metric.hpp"
#include "nhosc/smallmat.hpp"

namespace nhosc {

namespace {

// Closed-form data of one subspace: Z = prefactor * exp(-e0/tau) * g(b/tau)
// with g = cosh (unbroken) or cos (broken).
struct Branch {
    PhaseRegion region;
    double prefactor;  // tr(eta)
    double b;          // sqrt|disc| / 2
    double e0;         // (2n+1) hw / 2
};

Branch branch_of(const ModelParams& p, SubspaceIndex n) {
    const PhaseRegion region = classify(p, n);
    if (region == PhaseRegion::Exceptional)
        throw ExceptionalPoint("thermodynamics undefined at the exceptional point (n=" + std::to_string(n.n) +
                               ", mu=" + std::to_string(p.mu()) + ")");
    const double big_d = std::sqrt(std::abs(discriminant(p, n)));
    const double e0 = 0.5 * (2.0 * n.n + 1.0) * p.homega();
    double prefactor = 2.0;
    if (p.mu() > 0.0)
        prefactor = region == PhaseRegion::Unbroken ? 2.0 * std::abs(p.delta()) / big_d : 4.0 * coupling(p, n) / big_d;
    return {region, prefactor, 0.5 * big_d, e0};
}

double rel_error(double numeric, double exact) {
    const double diff = std::abs(numeric - exact);
    return exact == 0.0 ? diff : diff / std::abs(exact);
}

}  // namespace

Temperature::Temperature(double tau) : tau_(tau) {
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw std::invalid_argument("temperature tau must be finite and > 0, got " + std::to_string(tau));
}

cplx partition_trace(const ModelParams& p, SubspaceIndex n, Temperature t) {
    const MetricMatrix metric = eta(p, n);  // throws at the EP
    const BlockMatrix2 boltzmann = expm2(build_block(p, n), -1.0 / t.tau());
    return (boltzmann * metric.matrix).trace();
}

double partition_function(const ModelParams& p, SubspaceIndex n, Temperature t) {
    const cplx z = partition_trace(p, n, t);
    if (std::abs(z.imag()) >= 1e-10 * std::abs(z) && z.imag() != 0.0) {
        std::ostringstream msg;
        msg << "partition trace is not real: Z = " << z.real() << " + " << z.imag() << "i";
        throw std::logic_error(msg.str());
    }
    return z.real();
}

double partition_function_closed_form(const ModelParams& p, SubspaceIndex n, Temperature t) {
    const Branch br = branch_of(p, n);
    const double x = br.b / t.tau();
    const double g = br.region == PhaseRegion::Unbroken ? std::cosh(x) : std::cos(x);
    return br.prefactor * std::exp(-br.e0 / t.tau()) * g;
}

LogZDerivatives log_z_derivatives(const ModelParams& p, SubspaceIndex n, Temperature t) {
    const Branch br = branch_of(p, n);
    const double tau = t.tau();
    const double x = br.b / tau;
    const double tau2 = tau * tau;
    const double tau3 = tau2 * tau;
    // the scales are the summed magnitudes of the terms in each derivative
    double t1[2];
    double t2[3];
    if (br.region == PhaseRegion::Unbroken) {
        const double th = std::tanh(x);
        const double sech = 1.0 / std::cosh(x);
        t1[0] = br.e0 / tau2;
        t1[1] = -(br.b / tau2) * th;
        t2[0] = -2.0 * br.e0 / tau3;
        t2[1] = (2.0 * br.b / tau3) * th;
        t2[2] = x * x / tau2 * sech * sech;
    } else {
        const double tn = std::tan(x);
        const double sec = 1.0 / std::cos(x);
        t1[0] = br.e0 / tau2;
        t1[1] = (br.b / tau2) * tn;
        t2[0] = -2.0 * br.e0 / tau3;
        t2[1] = -(2.0 * br.b / tau3) * tn;
        t2[2] = -x * x / tau2 * sec * sec;
    }
    return {t1[0] + t1[1], t2[0] + t2[1] + t2[2], std::abs(t1[0]) + std::abs(t1[1]),
            std::abs(t2[0]) + std::abs(t2[1]) + std::abs(t2[2])};
}

double reduced_gap(const ModelParams& p, SubspaceIndex n, Temperature t) { return branch_of(p, n).b / t.tau(); }

std::optional<double> free_energy(const ModelParams& p, SubspaceIndex n, Temperature t) {
    const double z = partition_function(p, n, t);
    if (!(z > 0.0)) return std::nullopt;
    return -t.tau() * std::log(z);
}

std::optional<double> entropy(const ModelParams& p, SubspaceIndex n, Temperature t) {
    const double z = partition_function(p, n, t);
    if (!(z > 0.0)) return std::nullopt;
    const Branch br = branch_of(p, n);
    const double x = br.b / t.tau();
    // the exp(-e0/tau) factor cancels between ln Z and tau d ln Z/d tau
    if (br.region == PhaseRegion::Unbroken)
        return std::log(br.prefactor) + std::log(std::cosh(x)) - x * std::tanh(x);
    return std::log(br.prefactor) + std::log(std::abs(std::cos(x))) + x * std::tan(x);
}

double specific_heat(const ModelParams& p, SubspaceIndex n, Temperature t) {
    const Branch br = branch_of(p, n);
    const double x = br.b / t.tau();
    if (br.region == PhaseRegion::Unbroken) {
        const double sech = 1.0 / std::cosh(x);
        return x * x * sech * sech;
    }
    const double sec = 1.0 / std::cos(x);
    return -x * x * sec * sec;
}

ThermoPoint thermo_point(const ModelParams& p, SubspaceIndex n, Temperature t) {
    ThermoPoint pt;
    pt.n = n;
    pt.mu = p.mu();
    pt.tau = t.tau();
    pt.region = classify(p, n);
    if (pt.region == PhaseRegion::Exceptional) return pt;

    const double z = partition_function(p, n, t);
    pt.z = z;
    pt.z_positive = z > 0.0;
    pt.specific_heat = specific_heat(p, n, t);
    if (pt.z_positive) {
        pt.free_energy = free_energy(p, n, t);
        pt.entropy = entropy(p, n, t);
    }
    return pt;
}

FiniteDiffReport finite_diff_check(const ModelParams& p, SubspaceIndex n, Temperature t, double step) {
    const double tau = t.tau();
    if (!(step > 0.0) || !(tau - step > 0.0))
        throw StencilCrossesSingularity("stencil leaves tau > 0 (tau=" + std::to_string(tau) +
                                        ", step=" + std::to_string(step) + ")");
    double ln_z[3];
    const double taus[3] = {tau - step, tau, tau + step};
    for (int i = 0; i < 3; ++i) {
        const double z = partition_function(p, n, Temperature(taus[i]));
        if (!(z > 0.0)) {
            std::ostringstream msg;
            msg << "Z <= 0 at stencil point tau=" << taus[i] << " (Z=" << z << ")";
            throw StencilCrossesSingularity(msg.str());
        }
        ln_z[i] = std::log(z);
    }

    FiniteDiffReport r{};
    r.step = step;
    r.d1_numeric = (ln_z[2] - ln_z[0]) / (2.0 * step);
    r.d2_numeric = (ln_z[2] - 2.0 * ln_z[1] + ln_z[0]) / (step * step);
    const LogZDerivatives exact = log_z_derivatives(p, n, t);
    r.d1_analytic = exact.first;
    r.d2_analytic = exact.second;
    // measured against the term magnitudes so zero crossings of a
    // derivative do not inflate the error
    r.d1_rel_error = std::abs(r.d1_numeric - r.d1_analytic) / exact.first_scale;
    r.d2_rel_error = std::abs(r.d2_numeric - r.d2_analytic) / exact.second_scale;

    r.entropy_numeric = ln_z[1] + tau * r.d1_numeric;
    r.entropy_analytic = *entropy(p, n, t);
    r.entropy_rel_error = rel_error(r.entropy_numeric, r.entropy_analytic);
    r.cv_numeric = 2.0 * tau * r.d1_numeric + tau * tau * r.d2_numeric;
    r.cv_analytic = specific_heat(p, n, t);
    r.cv_rel_error = rel_error(r.cv_numeric, r.cv_analytic);
    return r;
}

}  // namespace nhosc
