#include "nhosc/spectral.hpp"

#include <cmath>
#include <sstream>

#include "nhosc/errors.hpp"
#include "nhosc/smallmat.hpp"

namespace nhosc {

std::string_view to_string(PhaseRegion r) {
    switch (r) {
        case PhaseRegion::Unbroken: return "unbroken";
        case PhaseRegion::Broken: return "broken";
        case PhaseRegion::Exceptional: return "exceptional";
    }
    return "unknown";
}

double discriminant(const ModelParams& p, SubspaceIndex n) {
    const double d = p.delta();
    const double c = coupling(p, n);
    return d * d - 4.0 * c * c;
}

PhaseRegion classify(const ModelParams& p, SubspaceIndex n) {
    // mu = 0 is Hermitian and diagonal even when Delta = 0
    if (p.mu() == 0.0) return PhaseRegion::Unbroken;
    const double disc = discriminant(p, n);
    if (discriminant_vanishes(std::abs(disc), p.delta())) return PhaseRegion::Exceptional;
    return disc > 0.0 ? PhaseRegion::Unbroken : PhaseRegion::Broken;
}

Spectrum2 block_spectrum(const ModelParams& p, SubspaceIndex n) {
    const double center = 0.5 * (2.0 * n.n + 1.0) * p.homega();
    const double disc = discriminant(p, n);
    const PhaseRegion region = classify(p, n);
    Spectrum2 s{center, center, region, disc};
    switch (region) {
        case PhaseRegion::Unbroken: {
            const double half = 0.5 * std::sqrt(std::fmax(disc, 0.0));
            s.e_plus = center + half;
            s.e_minus = center - half;
            break;
        }
        case PhaseRegion::Broken: {
            const double half = 0.5 * std::sqrt(-disc);
            s.e_plus = cplx(center, half);
            s.e_minus = cplx(center, -half);
            break;
        }
        case PhaseRegion::Exceptional: break;
    }
    return s;
}

double critical_coupling(const ModelParams& p, SubspaceIndex n) {
    return std::abs(p.delta()) / (2.0 * n.size_factor());
}

double locate_ep_numeric(const ModelParams& p, SubspaceIndex n, double lo, double hi) {
    if (!(lo <= hi) || lo < 0.0) {
        std::ostringstream msg;
        msg << "invalid bracket [" << lo << ", " << hi << "]";
        throw NoSignChange(msg.str());
    }
    auto g = [&](double mu) { return discriminant(p.with_mu(mu), n); };
    double g_lo = g(lo);
    const double g_hi = g(hi);
    if (g_lo == 0.0) return lo;
    if (g_hi == 0.0) return hi;
    if ((g_lo > 0.0) == (g_hi > 0.0)) {
        std::ostringstream msg;
        msg << "discriminant has no sign change on [" << lo << ", " << hi << "]";
        throw NoSignChange(msg.str());
    }
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double g_mid = g(mid);
        if (g_mid == 0.0) return mid;
        if ((g_mid > 0.0) == (g_lo > 0.0)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace nhosc
