#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nhosc/spectral.hpp"

namespace nhosc {

struct SweepSpec {
    double alpha = 5.0;
    double homega = 1.0;
    double tau = 5.0;
    std::vector<unsigned> subspaces{0};
    double mu_min = 0.0;
    double mu_max = 4.0;
    int steps = 401;
    /// Half-width of the band around each mu_c whose rows are tagged
    /// Exceptional and carry no observables.
    double ep_window = 1e-6;
    /// Worker threads for grid evaluation; 0 picks hardware concurrency.
    unsigned threads = 0;

    /// Throws std::invalid_argument on an inconsistent spec.
    void validate() const;
};

struct SweepRow {
    unsigned n = 0;
    double mu = 0.0;
    double tau = 0.0;
    PhaseRegion region = PhaseRegion::Exceptional;
    double mu_c = 0.0;
    std::optional<double> z;
    std::optional<double> free_energy;
    std::optional<double> entropy;
    std::optional<double> specific_heat;
    bool valid = false;
    std::string error;  ///< non-empty if evaluating this row threw
};

/// Uniform mu grid per subspace, rows ordered by (n, mu). Output does not
/// depend on the thread count.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

enum class EmitFormat { Csv, Json };

EmitFormat parse_format(const std::string& s);

/// CSV header `n,mu,tau,region,mu_c,Z,F,S,Cv,valid`; numbers with 12
/// significant digits; undefined values are empty fields (null in JSON).
void emit(const std::vector<SweepRow>& rows, EmitFormat format, std::ostream& out);

/// `destination` is a file path, or "-"/"stdout" for standard output.
/// Throws IoError naming the destination on failure.
void emit(const std::vector<SweepRow>& rows, EmitFormat format, const std::string& destination);

/// %.12g, or an empty string for non-finite values.
std::string format_number(double x);

/// Dataset for figure 1 (free energy), 2 (entropy) or 3 (specific heat).
/// An empty subspace list defaults to n in {0, 1, 2, 5}.
std::vector<SweepRow> figure_dataset(int fig, SweepSpec spec);

}  // namespace nhosc
