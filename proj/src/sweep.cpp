#include "nhosc/sweep.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <thread>

#include "nhosc/errors.hpp"
#include "nhosc/thermo.hpp"

namespace nhosc {

void SweepSpec::validate() const {
    // constructing these validates alpha, homega and tau
    const ModelParams params(alpha, homega, 0.0);
    const Temperature t(tau);
    (void)params;
    (void)t;
    if (steps < 2) throw std::invalid_argument("sweep needs steps >= 2, got " + std::to_string(steps));
    if (!(mu_min >= 0.0)) throw std::invalid_argument("sweep needs mu_min >= 0");
    if (!(mu_min < mu_max)) throw std::invalid_argument("sweep needs mu_min < mu_max");
    if (!std::isfinite(mu_max)) throw std::invalid_argument("sweep needs finite mu_max");
    if (!(ep_window >= 0.0)) throw std::invalid_argument("sweep needs ep_window >= 0");
    if (subspaces.empty()) throw std::invalid_argument("sweep needs at least one subspace");
}

namespace {

SweepRow evaluate_row(const SweepSpec& spec, unsigned n, double mu) {
    SweepRow row;
    row.n = n;
    row.mu = mu;
    row.tau = spec.tau;
    try {
        const ModelParams p(spec.alpha, spec.homega, mu);
        const SubspaceIndex idx(n);
        row.mu_c = critical_coupling(p, idx);
        if (mu > 0.0 && std::abs(mu - row.mu_c) <= spec.ep_window) {
            row.region = PhaseRegion::Exceptional;
            return row;
        }
        const ThermoPoint pt = thermo_point(p, idx, Temperature(spec.tau));
        row.region = pt.region;
        row.z = pt.z;
        row.free_energy = pt.free_energy;
        row.entropy = pt.entropy;
        if (pt.specific_heat && std::isfinite(*pt.specific_heat)) row.specific_heat = pt.specific_heat;
        row.valid = pt.region != PhaseRegion::Exceptional && pt.z_positive;
    } catch (const std::exception& e) {
        row.error = e.what();
        row.valid = false;
    }
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    std::vector<unsigned> ns = spec.subspaces;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

    const auto steps = static_cast<std::size_t>(spec.steps);
    const double h = (spec.mu_max - spec.mu_min) / static_cast<double>(steps - 1);
    std::vector<SweepRow> rows(ns.size() * steps);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const std::size_t i = k % steps;
            const double mu = i + 1 == steps ? spec.mu_max : spec.mu_min + static_cast<double>(i) * h;
            rows[k] = evaluate_row(spec, ns[k / steps], mu);
        }
    };

    unsigned threads = spec.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : spec.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, rows.size() / 64)));
    if (threads <= 1) {
        work(0, rows.size());
        return rows;
    }
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (rows.size() + threads - 1) / threads;
        for (std::size_t begin = 0; begin < rows.size(); begin += chunk)
            pool.emplace_back(work, begin, std::min(rows.size(), begin + chunk));
    }
    return rows;
}

EmitFormat parse_format(const std::string& s) {
    if (s == "csv") return EmitFormat::Csv;
    if (s == "json") return EmitFormat::Json;
    throw std::invalid_argument("unknown format '" + s + "' (expected csv or json)");
}

std::string format_number(double x) {
    if (!std::isfinite(x)) return {};
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string opt_field(const std::optional<double>& x) { return x ? format_number(*x) : std::string{}; }

nlohmann::ordered_json opt_json(const std::optional<double>& x) {
    if (!x || !std::isfinite(*x)) return nullptr;
    return std::stod(format_number(*x));
}

}  // namespace

void emit(const std::vector<SweepRow>& rows, EmitFormat format, std::ostream& out) {
    if (format == EmitFormat::Csv) {
        out << "n,mu,tau,region,mu_c,Z,F,S,Cv,valid\n";
        for (const SweepRow& r : rows) {
            out << r.n << ',' << format_number(r.mu) << ',' << format_number(r.tau) << ',' << to_string(r.region)
                << ',' << format_number(r.mu_c) << ',' << opt_field(r.z) << ',' << opt_field(r.free_energy) << ','
                << opt_field(r.entropy) << ',' << opt_field(r.specific_heat) << ',' << (r.valid ? "true" : "false")
                << '\n';
        }
        return;
    }
    auto arr = nlohmann::ordered_json::array();
    for (const SweepRow& r : rows) {
        nlohmann::ordered_json j;
        j["n"] = r.n;
        j["mu"] = opt_json(r.mu);
        j["tau"] = opt_json(r.tau);
        j["region"] = std::string(to_string(r.region));
        j["mu_c"] = opt_json(r.mu_c);
        j["Z"] = opt_json(r.z);
        j["F"] = opt_json(r.free_energy);
        j["S"] = opt_json(r.entropy);
        j["Cv"] = opt_json(r.specific_heat);
        j["valid"] = r.valid;
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
}

void emit(const std::vector<SweepRow>& rows, EmitFormat format, const std::string& destination) {
    if (destination.empty() || destination == "-" || destination == "stdout") {
        emit(rows, format, std::cout);
        std::cout.flush();
        if (!std::cout) throw IoError("failed writing to standard output");
        return;
    }
    std::ofstream file(destination, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + destination + "' for writing");
    emit(rows, format, file);
    file.flush();
    if (!file) throw IoError("failed writing to '" + destination + "'");
}

std::vector<SweepRow> figure_dataset(int fig, SweepSpec spec) {
    if (fig < 1 || fig > 3) throw std::invalid_argument("figure id must be 1, 2 or 3, got " + std::to_string(fig));
    if (spec.subspaces.empty()) spec.subspaces = {0, 1, 2, 5};
    // every figure shares the row layout; the selected observable is
    // populated on all valid rows (F, S) or all non-EP rows (Cv)
    return run_sweep(spec);
}

}  // namespace nhosc
