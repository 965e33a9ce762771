#include "nhosc/fullspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nhosc/spectral.hpp"

namespace nhosc {

namespace {

DenseMatrix spin_matrix(cplx a00, cplx a01, cplx a10, cplx a11) {
    DenseMatrix s(2);
    s(0, 0) = a00;
    s(0, 1) = a01;
    s(1, 0) = a10;
    s(1, 1) = a11;
    return s;
}

}  // namespace

TruncatedSpace::TruncatedSpace(unsigned cutoff) : cutoff_(cutoff) {
    if (cutoff < 1) throw std::invalid_argument("truncated space needs cutoff >= 1");
}

DenseMatrix TruncatedSpace::oscillator_ladder() const {
    DenseMatrix a(cutoff_ + 1);
    for (unsigned n = 1; n <= cutoff_; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

DenseMatrix TruncatedSpace::annihilation() const { return DenseMatrix::kron(oscillator_ladder(), DenseMatrix::identity(2)); }

DenseMatrix TruncatedSpace::creation() const { return annihilation().adjoint(); }

DenseMatrix TruncatedSpace::number() const {
    DenseMatrix n(cutoff_ + 1);
    for (unsigned k = 0; k <= cutoff_; ++k) n(k, k) = static_cast<double>(k);
    return DenseMatrix::kron(n, DenseMatrix::identity(2));
}

DenseMatrix TruncatedSpace::sigma_z() const {
    return DenseMatrix::kron(DenseMatrix::identity(cutoff_ + 1), spin_matrix(1.0, 0.0, 0.0, -1.0));
}

DenseMatrix TruncatedSpace::sigma_plus() const {
    return DenseMatrix::kron(DenseMatrix::identity(cutoff_ + 1), spin_matrix(0.0, 1.0, 0.0, 0.0));
}

DenseMatrix TruncatedSpace::sigma_minus() const {
    return DenseMatrix::kron(DenseMatrix::identity(cutoff_ + 1), spin_matrix(0.0, 0.0, 1.0, 0.0));
}

DenseMatrix TruncatedSpace::parity() const {
    DenseMatrix p(cutoff_ + 1);
    for (unsigned k = 0; k <= cutoff_; ++k) p(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
    return DenseMatrix::kron(p, DenseMatrix::identity(2));
}

DenseMatrix assemble_full(const ModelParams& p, const TruncatedSpace& space) {
    const DenseMatrix a = space.annihilation();
    const DenseMatrix ad = space.creation();
    return (0.5 * p.alpha()) * space.sigma_z() + cplx(p.homega()) * space.number() +
           cplx(p.mu()) * (space.sigma_plus() * a - space.sigma_minus() * ad);
}

DenseMatrix pt_transform(const ModelParams& p, const TruncatedSpace& space) {
    const DenseMatrix a = space.annihilation();
    const DenseMatrix ad = space.creation();
    // sigma_z -> -sigma_z, sigma_+ -> -sigma_-, sigma_- -> -sigma_+
    const DenseMatrix h = (-0.5 * p.alpha()) * space.sigma_z() + cplx(p.homega()) * space.number() +
                          cplx(p.mu()) * (cplx(-1.0) * (space.sigma_minus() * a) + space.sigma_plus() * ad);
    return h.conj();
}

double multiset_distance(std::vector<cplx> expected, std::vector<cplx> computed) {
    if (expected.size() != computed.size()) return std::numeric_limits<double>::infinity();
    auto by_parts = [](cplx x, cplx y) { return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag(); };
    std::sort(expected.begin(), expected.end(), by_parts);
    std::vector<bool> used(computed.size(), false);
    double worst = 0.0;
    for (const cplx& e : expected) {
        std::size_t best = computed.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < computed.size(); ++j) {
            if (used[j]) continue;
            const double dist = std::abs(computed[j] - e);
            if (dist < best_dist) {
                best_dist = dist;
                best = j;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_dist);
    }
    return worst;
}

BlockDecompositionReport block_decomposition_check(const ModelParams& p, unsigned cutoff, double tolerance) {
    if (cutoff < 2) throw std::invalid_argument("block decomposition check needs cutoff >= 2");
    const TruncatedSpace space(cutoff);
    const DenseMatrix h = assemble_full(p, space);

    BlockDecompositionReport r;
    r.expected.push_back(-0.5 * p.alpha());
    for (unsigned n = 0; n < cutoff; ++n) {
        const Spectrum2 s = block_spectrum(p, SubspaceIndex(n));
        r.expected.push_back(s.e_plus);
        r.expected.push_back(s.e_minus);
    }
    // |cutoff, +1/2> lost its partner |cutoff+1, -1/2> to the truncation
    r.computed = eigN(h.without({TruncatedSpace::index(cutoff, true)}));
    r.max_mismatch = multiset_distance(r.expected, r.computed);

    const cplx ground = -0.5 * p.alpha();
    r.ground_state_error = std::numeric_limits<double>::infinity();
    for (const cplx& x : r.computed) r.ground_state_error = std::min(r.ground_state_error, std::abs(x - ground));
    r.passed = r.max_mismatch <= tolerance;
    return r;
}

SymmetryReport symmetry_report(const ModelParams& p, unsigned cutoff) {
    if (cutoff < 2) throw std::invalid_argument("symmetry report needs cutoff >= 2");
    const TruncatedSpace space(cutoff);
    const DenseMatrix h = assemble_full(p, space);
    const DenseMatrix h_dag = h.adjoint();
    const DenseMatrix sz = space.sigma_z();
    const DenseMatrix par = space.parity();
    const DenseMatrix grading = par * sz;

    SymmetryReport r{};
    r.h_norm = h.frobenius_norm();
    r.commutator_residual = (h * grading - grading * h).frobenius_norm();
    r.sigma_z_residual = (sz * h * sz - h_dag).frobenius_norm();
    r.parity_residual = (par * h * par - h_dag).frobenius_norm();
    r.pt_residual = (pt_transform(p, space) - h).frobenius_norm();
    return r;
}

}  // namespace nhosc
