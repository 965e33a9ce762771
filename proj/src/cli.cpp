#include "nhosc/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nhosc/errors.hpp"
#include "nhosc/spectral.hpp"
#include "nhosc/sweep.hpp"
#include "nhosc/thermo.hpp"
#include "nhosc/verify.hpp"

namespace nhosc {

namespace {

constexpr const char* kVersion = "nhosc 0.1.0";

struct CliConfig {
    double alpha = 5.0;
    double homega = 1.0;
    double tau = 5.0;
    std::vector<long long> n;
    std::optional<double> mu;
    double mu_min = 0.0;
    double mu_max = 4.0;
    int steps = 401;
    double ep_window = 1e-6;
    std::string format = "csv";
    std::string output = "-";
    unsigned cutoff = 8;
    int fig_id = 1;
};

std::string format_complex(cplx z) {
    if (z.imag() == 0.0) return format_number(z.real());
    const std::string im = format_number(std::abs(z.imag()));
    return format_number(z.real()) + (z.imag() < 0.0 ? "-" : "+") + im + "i";
}

std::string opt_text(const std::optional<double>& x) { return x ? format_number(*x) : "undefined"; }

nlohmann::ordered_json opt_json(const std::optional<double>& x) {
    if (!x || !std::isfinite(*x)) return nullptr;
    return std::stod(format_number(*x));
}

SubspaceIndex single_subspace(const CliConfig& c) {
    if (c.n.size() > 1) throw std::invalid_argument("this subcommand takes a single --n");
    return SubspaceIndex::from_int(c.n.empty() ? 0 : c.n.front());
}

double required_mu(const CliConfig& c) {
    if (!c.mu) throw std::invalid_argument("--mu is required");
    return *c.mu;
}

void check_format(const CliConfig& c) { (void)parse_format(c.format); }

int cmd_spectrum(const CliConfig& c, std::ostream& out) {
    check_format(c);
    const ModelParams p(c.alpha, c.homega, required_mu(c));
    const SubspaceIndex n = single_subspace(c);
    const Spectrum2 s = block_spectrum(p, n);
    const double mu_c = critical_coupling(p, n);
    if (c.format == "json") {
        nlohmann::ordered_json j;
        j["n"] = n.n;
        j["alpha"] = c.alpha;
        j["homega"] = c.homega;
        j["mu"] = p.mu();
        j["discriminant"] = std::stod(format_number(s.discriminant));
        j["region"] = std::string(to_string(s.region));
        j["e_plus"] = {std::stod(format_number(s.e_plus.real())), std::stod(format_number(s.e_plus.imag()))};
        j["e_minus"] = {std::stod(format_number(s.e_minus.real())), std::stod(format_number(s.e_minus.imag()))};
        j["mu_c"] = std::stod(format_number(mu_c));
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "n            " << n.n << '\n'
        << "alpha        " << format_number(c.alpha) << '\n'
        << "homega       " << format_number(c.homega) << '\n'
        << "mu           " << format_number(p.mu()) << '\n'
        << "discriminant " << format_number(s.discriminant) << '\n'
        << "region       " << to_string(s.region) << '\n'
        << "E+           " << format_complex(s.e_plus) << '\n'
        << "E-           " << format_complex(s.e_minus) << '\n'
        << "mu_c         " << format_number(mu_c) << '\n';
    return kExitOk;
}

int cmd_thermo(const CliConfig& c, std::ostream& out) {
    check_format(c);
    const ModelParams p(c.alpha, c.homega, required_mu(c));
    const SubspaceIndex n = single_subspace(c);
    const ThermoPoint pt = thermo_point(p, n, Temperature(c.tau));
    if (c.format == "json") {
        nlohmann::ordered_json j;
        j["n"] = n.n;
        j["mu"] = pt.mu;
        j["tau"] = pt.tau;
        j["region"] = std::string(to_string(pt.region));
        j["mu_c"] = std::stod(format_number(critical_coupling(p, n)));
        j["Z"] = opt_json(pt.z);
        j["F"] = opt_json(pt.free_energy);
        j["S"] = opt_json(pt.entropy);
        j["Cv"] = opt_json(pt.specific_heat);
        j["z_positive"] = pt.z_positive;
        out << j.dump(2) << '\n';
    } else {
        out << "n       " << n.n << '\n'
            << "mu      " << format_number(pt.mu) << '\n'
            << "tau     " << format_number(pt.tau) << '\n'
            << "region  " << to_string(pt.region) << '\n'
            << "mu_c    " << format_number(critical_coupling(p, n)) << '\n'
            << "Z       " << opt_text(pt.z) << '\n'
            << "F       " << opt_text(pt.free_energy) << '\n'
            << "S       " << opt_text(pt.entropy) << '\n'
            << "Cv      " << opt_text(pt.specific_heat) << '\n'
            << "Z>0     " << (pt.z_positive ? "true" : "false") << '\n';
    }
    const bool any = pt.z || pt.free_energy || pt.entropy || pt.specific_heat;
    return any ? kExitOk : kExitUndefined;
}

SweepSpec sweep_spec(const CliConfig& c) {
    SweepSpec s;
    s.alpha = c.alpha;
    s.homega = c.homega;
    s.tau = c.tau;
    s.subspaces.clear();
    for (long long k : c.n) s.subspaces.push_back(SubspaceIndex::from_int(k).n);
    s.mu_min = c.mu_min;
    s.mu_max = c.mu_max;
    s.steps = c.steps;
    s.ep_window = c.ep_window;
    return s;
}

void write_rows(const std::vector<SweepRow>& rows, const CliConfig& c, std::ostream& out) {
    const EmitFormat f = parse_format(c.format);
    if (c.output.empty() || c.output == "-" || c.output == "stdout")
        emit(rows, f, out);
    else
        emit(rows, f, c.output);
}

int cmd_sweep(const CliConfig& c, std::ostream& out) {
    SweepSpec s = sweep_spec(c);
    if (s.subspaces.empty()) s.subspaces = {0};
    parse_format(c.format);
    write_rows(run_sweep(s), c, out);
    return kExitOk;
}

int cmd_fig(const CliConfig& c, std::ostream& out) {
    parse_format(c.format);
    write_rows(figure_dataset(c.fig_id, sweep_spec(c)), c, out);
    return kExitOk;
}

int cmd_verify(const CliConfig& c, std::ostream& out) {
    if (c.cutoff < 2) throw std::invalid_argument("--cutoff must be >= 2 for verify");
    const auto results = run_verification_suite({c.alpha, c.homega, c.tau, c.cutoff});
    bool ok = true;
    for (const CheckResult& r : results) {
        ok = ok && r.passed;
        out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  worst=" << std::setprecision(3) << r.worst
            << " threshold=" << r.threshold;
        if (!r.detail.empty()) out << "  (" << r.detail << ')';
        out << '\n';
    }
    out << (ok ? "all checks passed" : "verification FAILED") << '\n';
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectra, metric operators and thermodynamics of a pseudo-Hermitian spin-1/2 oscillator model",
                 "nhosc"};
    app.fallthrough();
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", kVersion);

    CliConfig c;
    app.add_option("--alpha", c.alpha, "level splitting alpha")->capture_default_str();
    app.add_option("--homega", c.homega, "oscillator quantum hbar*omega")->capture_default_str();
    app.add_option("--tau", c.tau, "temperature k_B T in energy units")->capture_default_str();
    app.add_option("--n", c.n, "subspace index (repeatable for sweep/fig)");
    app.add_option("--mu", c.mu, "non-Hermitian coupling mu >= 0");
    app.add_option("--mu-min", c.mu_min, "sweep lower bound")->capture_default_str();
    app.add_option("--mu-max", c.mu_max, "sweep upper bound")->capture_default_str();
    app.add_option("--steps", c.steps, "sweep grid points (>= 2)")->capture_default_str();
    app.add_option("--ep-window", c.ep_window, "half-width of the excluded band around mu_c")->capture_default_str();
    app.add_option("--format", c.format, "csv or json")->capture_default_str();
    app.add_option("--output", c.output, "output path, or - for stdout")->capture_default_str();
    app.add_option("--cutoff", c.cutoff, "oscillator cutoff for the full-space oracle")->capture_default_str();

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues, discriminant, region and mu_c of one subspace");
    auto* thermo = app.add_subcommand("thermo", "Z, F, S and Cv at one point");
    auto* sweep = app.add_subcommand("sweep", "observables over a uniform mu grid");
    auto* fig = app.add_subcommand("fig", "figure dataset (1: F, 2: S, 3: Cv)");
    fig->add_option("--id", c.fig_id, "figure number 1, 2 or 3")->required();
    auto* verify = app.add_subcommand("verify", "run the oracle suite; exit 4 on any failure");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(c, out);
        if (thermo->parsed()) return cmd_thermo(c, out);
        if (sweep->parsed()) return cmd_sweep(c, out);
        if (fig->parsed()) return cmd_fig(c, out);
        if (verify->parsed()) return cmd_verify(c, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace nhosc
