// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
// Usage: nhosc_acceptance [path-to-nhosc-binary]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "nhosc/cli.hpp"
#include "nhosc/errors.hpp"
#include "nhosc/fullspace.hpp"
#include "nhosc/metric.hpp"
#include "nhosc/model.hpp"
#include "nhosc/spectral.hpp"
#include "nhosc/sweep.hpp"
#include "nhosc/thermo.hpp"
#include "oracles.hpp"

using namespace nhosc;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

const ModelParams kFigure(5.0, 1.0, 0.0);
constexpr unsigned kMaxN = 8;

std::string sci(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

// 40 couplings strictly inside each region of subspace n
std::vector<double> unbroken_mus(double mu_c) {
    std::vector<double> v;
    for (int k = 0; k < 40; ++k) v.push_back(mu_c * k / 40.5);
    return v;
}
std::vector<double> broken_mus(double mu_c) {
    std::vector<double> v;
    for (int k = 1; k <= 40; ++k) v.push_back(mu_c * (1.0 + 2.0 * k / 40.0));
    return v;
}

Outcome ep_locations() {
    const std::array<std::pair<unsigned, double>, 4> expected{
        {{0, 2.0}, {1, std::sqrt(2.0)}, {2, 2.0 / std::sqrt(3.0)}, {5, 2.0 / std::sqrt(6.0)}}};
    double closed = 0.0, numeric = 0.0;
    for (auto [n, mu_c] : expected) {
        const double got = critical_coupling(kFigure, SubspaceIndex(n));
        closed = std::max(closed, std::abs(got - mu_c));
        numeric = std::max(numeric, std::abs(locate_ep_numeric(kFigure, SubspaceIndex(n), 0.5 * mu_c, 1.5 * mu_c) - got));
    }
    return {closed < 1e-12 && numeric < 1e-10, "closed " + sci(closed) + ", bisection " + sci(numeric)};
}

Outcome metric_reproduction() {
    const double r3 = 1.0 / std::sqrt(3.0), r5 = 1.0 / std::sqrt(5.0);
    const BlockMatrix2 want1{2 * r3, r3, r3, 2 * r3};
    const BlockMatrix2 want3{3 * r5, 2 * r5, 2 * r5, 3 * r5};
    double fixed = 0.0;
    for (auto [mu, want] : {std::pair{1.0, want1}, std::pair{3.0, want3}}) {
        const BlockMatrix2 got = eta(kFigure.with_mu(mu), SubspaceIndex(0)).matrix;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) fixed = std::max(fixed, std::abs(got(i, j) - want(i, j)));
    }
    double routes = 0.0;
    int points = 0;
    for (unsigned k = 0; k <= kMaxN; ++k) {
        const SubspaceIndex n(k);
        const double mu_c = critical_coupling(kFigure, n);
        for (const auto& grid : {unbroken_mus(mu_c), broken_mus(mu_c)})
            for (double mu : grid) {
                const ModelParams p = kFigure.with_mu(mu);
                routes = std::max(routes, (eta(p, n).matrix - eta_closed_form(p, n).matrix).frobenius_norm());
                ++points;
            }
    }
    return {fixed < 1e-12 && routes < 1e-10,
            "reference metrics " + sci(fixed) + ", routes " + sci(routes) + " over " + std::to_string(points) + " points"};
}

Outcome intertwining() {
    double worst = 0.0;
    for (unsigned k = 0; k <= kMaxN; ++k) {
        const SubspaceIndex n(k);
        for (double mu : unbroken_mus(critical_coupling(kFigure, n))) {
            const MetricDiagnostics d = verify_metric(kFigure.with_mu(mu), n);
            worst = std::max(worst, d.intertwining_residual / d.h_norm);
        }
    }
    const double broken = verify_metric(kFigure.with_mu(3.0), SubspaceIndex(0)).intertwining_residual;
    const double broken_err = std::abs(broken - std::sqrt(40.0));
    return {worst < 1e-10 && broken_err < 1e-9,
            "unbroken " + sci(worst) + " ||H||, broken residual " + std::to_string(broken) + " (err " +
                sci(broken_err) + ")"};
}

Outcome partition_dual_route() {
    std::vector<double> taus;
    for (int k = 0; k <= 12; ++k) taus.push_back(0.1 * std::pow(10.0, k / 4.0));  // 0.1 .. 100
    double rel = 0.0, imag = 0.0;
    int points = 0;
    for (unsigned k = 0; k <= kMaxN; ++k) {
        const SubspaceIndex n(k);
        const double mu_c = critical_coupling(kFigure, n);
        for (const auto& grid : {unbroken_mus(mu_c), broken_mus(mu_c)})
            for (double mu : grid)
                for (double tau : taus) {
                    const ModelParams p = kFigure.with_mu(mu);
                    const Temperature t(tau);
                    const cplx z = partition_trace(p, n, t);
                    const double zc = partition_function_closed_form(p, n, t);
                    rel = std::max(rel, std::abs(z.real() - zc) / std::abs(zc));
                    imag = std::max(imag, std::abs(z.imag()) / std::abs(z));
                    ++points;
                }
    }
    return {rel < 1e-10 && imag < 1e-10,
            "rel " + sci(rel) + ", imag " + sci(imag) + " over " + std::to_string(points) + " points"};
}

// Smooth: off the EP by 10% of mu_c, cos(b/tau) >= 0.5 in the broken
// region, and |S|, |C_v| >= 0.1 so a relative error is meaningful. tau >= 2
// keeps the O(h^2) error of the exp(-E0/tau) term, which cancels out of S
// and C_v, below the tolerance.
Outcome derivative_correctness() {
    std::vector<std::tuple<ModelParams, SubspaceIndex, Temperature>> smooth;
    for (double tau : {2.0, 3.0, 5.0, 10.0})
        for (unsigned k = 0; k <= kMaxN; ++k) {
            const SubspaceIndex n(k);
            const double mu_c = critical_coupling(kFigure, n);
            for (int i = 0; i <= 40; ++i) {
                const ModelParams p = kFigure.with_mu(0.1 * i);
                const Temperature t(tau);
                const PhaseRegion region = classify(p, n);
                if (region == PhaseRegion::Exceptional || (p.mu() > 0 && std::abs(p.mu() - mu_c) < 0.1 * mu_c)) continue;
                if (region == PhaseRegion::Broken && std::cos(reduced_gap(p, n, t)) < 0.5) continue;
                const ThermoPoint pt = thermo_point(p, n, t);
                if (!pt.entropy || std::abs(*pt.entropy) < 0.1 || std::abs(*pt.specific_heat) < 0.1) continue;
                smooth.emplace_back(p, n, t);
            }
        }
    if (smooth.size() < 200) return {false, "only " + std::to_string(smooth.size()) + " smooth points"};
    double s_worst = 0.0, cv_worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const auto& [p, n, t] = smooth[i * smooth.size() / 200];
        const FiniteDiffReport r = finite_diff_check(p, n, t, 1e-4 * t.tau());
        s_worst = std::max(s_worst, r.entropy_rel_error);
        cv_worst = std::max(cv_worst, r.cv_rel_error);
    }
    return {s_worst < 1e-6 && cv_worst < 1e-6, "S " + sci(s_worst) + ", Cv " + sci(cv_worst) + " at 200 of " +
                                                    std::to_string(smooth.size()) + " smooth points"};
}

Outcome figure_behaviour() {
    const Temperature t(5.0);
    std::ostringstream detail;
    bool ok = true;

    // (a) divergence of F and S on both sides of each mu_c
    double min_peak = 1e300, max_spread = 0.0;
    for (unsigned k : {0u, 1u, 2u, 5u}) {
        const SubspaceIndex n(k);
        const double mu_c = critical_coupling(kFigure, n);
        for (double side : {-1.0, 1.0}) {
            double prev_f = 0.0, prev_s = 0.0, peak = 0.0;
            double lo = 1e300, hi = -1e300;
            for (int e = 3; e <= 6; ++e) {
                const double gap = 0.5 * std::pow(10.0, -e);  // strictly inside 1e-3
                const ModelParams p = kFigure.with_mu(mu_c + side * gap);
                const auto f = free_energy(p, n, t);
                const auto s = entropy(p, n, t);
                if (!f || !s) {
                    ok = false;
                    continue;
                }
                ok = ok && std::abs(*f) > prev_f && std::abs(*s) > prev_s;
                prev_f = std::abs(*f);
                prev_s = std::abs(*s);
                peak = std::max(peak, std::abs(*s));
                if (e <= 5) {  // two decades: 5e-4 .. 5e-6
                    lo = std::min(lo, *s + 0.5 * std::log(gap));
                    hi = std::max(hi, *s + 0.5 * std::log(gap));
                }
            }
            min_peak = std::min(min_peak, peak);
            max_spread = std::max(max_spread, hi - lo);
        }
    }
    ok = ok && min_peak > 4.0 && max_spread < 0.1;
    detail << "(a) min max|S| " << sci(min_peak) << ", spread of S + ln|gap|/2 " << sci(max_spread);

    // (b) sign structure on the figure sweeps over n = 0..8
    SweepSpec spec;
    spec.tau = t.tau();
    for (unsigned k = 0; k <= kMaxN; ++k) spec.subspaces.push_back(k);
    int bad_sign = 0;
    for (const SweepRow& r : figure_dataset(3, spec)) {
        if (r.region == PhaseRegion::Unbroken && !(*r.specific_heat >= 0.0)) ++bad_sign;
        if (r.region == PhaseRegion::Broken && r.valid && !(*r.specific_heat <= 0.0)) ++bad_sign;
    }
    ok = ok && bad_sign == 0;
    detail << "; (b) " << bad_sign << " sign violations";

    // (c) C_v vanishes near each EP
    double cv_near = 0.0;
    for (unsigned k = 0; k <= kMaxN; ++k) {
        const SubspaceIndex n(k);
        const double mu_c = critical_coupling(kFigure, n);
        for (int i = 1; i <= 99; ++i) {
            const double gap = 1e-4 * i * mu_c;
            for (double side : {-1.0, 1.0})
                cv_near = std::max(cv_near, std::abs(specific_heat(kFigure.with_mu(mu_c + side * gap), n, t)));
        }
    }
    ok = ok && cv_near < 1e-2;
    detail << "; (c) max |Cv| " << sci(cv_near);
    return {ok, detail.str()};
}

Outcome full_space_oracle() {
    constexpr unsigned cutoff = 8;
    double mismatch = 0.0, ground = 0.0, comm = 0.0, sz = 0.0;
    // mu = 1 sits on the n = 3 exceptional point
    for (double mu : {0.0, 0.5, 1.0, 1.3, 2.5, 3.0, 4.0}) {
        const ModelParams p = kFigure.with_mu(mu);
        const BlockDecompositionReport r = block_decomposition_check(p, cutoff);
        mismatch = std::max(mismatch, r.max_mismatch);
        ground = std::max(ground, r.ground_state_error);
        const SymmetryReport s = symmetry_report(p, cutoff);
        comm = std::max(comm, s.commutator_residual / s.h_norm);
        sz = std::max(sz, s.sigma_z_residual / s.h_norm);
    }
    const SymmetryReport at1 = symmetry_report(kFigure.with_mu(1.0), cutoff);
    const double pt = at1.pt_residual / at1.h_norm;
    return {mismatch < 1e-8 && ground < 1e-8 && comm < 1e-12 && sz < 1e-12 && pt > 0.1,
            "spectrum " + sci(mismatch) + ", ground " + sci(ground) + ", [H,P sz] " + sci(comm) + ", sz " + sci(sz) +
                ", PT " + sci(pt) + " ||H||"};
}

Outcome hermitian_limit() {
    double worst = 0.0;
    for (double tau : {0.5, 1.0, 5.0})
        for (unsigned k = 0; k <= kMaxN; ++k) {
            const SubspaceIndex n(k);
            const Spectrum2 sp = block_spectrum(kFigure, n);
            const double gibbs = oracle::gibbs_entropy({sp.e_plus.real(), sp.e_minus.real()}, tau);
            worst = std::max(worst, std::abs(*entropy(kFigure, n, Temperature(tau)) - gibbs));
        }
    return {worst < 1e-9, "max |S - S_gibbs| " + sci(worst)};
}

std::string run_in_process(int fig) {
    const std::string id = std::to_string(fig);
    const char* argv[] = {"nhosc", "fig", "--id", id.c_str()};
    std::ostringstream out, err;
    run_cli(4, argv, out, err);
    return out.str();
}

std::string run_binary(const std::string& tool, int fig) {
    const std::string cmd = "'" + tool + "' fig --id " + std::to_string(fig);
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string data;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) data.append(buf.data(), got);
    pclose(pipe);
    return data;
}

Outcome determinism(const std::string& tool) {
    bool ok = true;
    std::size_t bytes = 0;
    for (int fig = 1; fig <= 3; ++fig) {
        const std::string a = run_in_process(fig);
        ok = ok && !a.empty() && a == run_in_process(fig);
        if (!tool.empty()) {
            const std::string b = run_binary(tool, fig);
            ok = ok && b == run_binary(tool, fig) && b == a;
        }
        bytes += a.size();
    }
    return {ok, std::to_string(bytes) + " bytes per run" + (tool.empty() ? " (in-process only)" : ", binary and in-process")};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string tool = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 EP locations", ep_locations},
        {"2 metric reproduction", metric_reproduction},
        {"3 intertwining", intertwining},
        {"4 partition function dual route", partition_dual_route},
        {"5 derivative correctness", derivative_correctness},
        {"6 figure behaviour at tau=5", figure_behaviour},
        {"7 full-space oracle", full_space_oracle},
        {"8 Hermitian-limit Gibbs entropy", hermitian_limit},
        {"9 determinism", [&] { return determinism(tool); }},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (!o.passed) ++failures;
        std::cout << (o.passed ? "PASS" : "FAIL") << "  [" << name << "]  " << o.detail << "  (" << sci(ms) << " ms)\n";
    }
    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria FAILED")
              << "\n";
    return failures == 0 ? 0 : 1;
}
