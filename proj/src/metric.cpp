#include "nhosc/metric.hpp"

#include <cmath>
#include <string>

#include "nhosc/errors.hpp"
#include "nhosc/smallmat.hpp"

namespace nhosc {

namespace {

void refuse_at_ep(PhaseRegion region, const ModelParams& p, SubspaceIndex n) {
    if (region == PhaseRegion::Exceptional)
        throw ExceptionalPoint("metric is singular at the exceptional point (n=" + std::to_string(n.n) +
                               ", mu=" + std::to_string(p.mu()) + ")");
}

}  // namespace

BiorthoSystem biortho_system(const BlockMatrix2& m) {
    const auto pairs = eig2(m);
    BiorthoSystem b;
    for (std::size_t i = 0; i < 2; ++i) {
        b.values[i] = pairs[i].value;
        b.right[i] = pairs[i].right;
        // <L/conj(N)|R> = N/N = 1
        const cplx overlap = inner(pairs[i].left, pairs[i].right);
        b.left[i] = (1.0 / std::conj(overlap)) * pairs[i].left;
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            b.overlap(i, j) = inner(b.left[static_cast<std::size_t>(i)], b.right[static_cast<std::size_t>(j)]);
    return b;
}

BiorthoSystem fix_gauge_balanced(const BiorthoSystem& b) {
    BiorthoSystem out = b;
    for (std::size_t i = 0; i < 2; ++i) {
        const Vec2& r = b.right[i];
        const Vec2& l = b.left[i];
        const double modulus = std::sqrt(r.norm() / l.norm());
        const int big = std::abs(r[0]) >= std::abs(r[1]) ? 0 : 1;
        // both vectors pick up the same phase, so <L|R> is unchanged
        const cplx phase = std::conj(r[big]) / std::abs(r[big]);
        out.left[i] = (modulus * phase) * l;
        out.right[i] = (phase / modulus) * r;
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.overlap(i, j) = inner(out.left[static_cast<std::size_t>(i)], out.right[static_cast<std::size_t>(j)]);
    return out;
}

BlockMatrix2 left_projector_sum(const BiorthoSystem& b) {
    return BlockMatrix2::outer(b.left[0], b.left[0]) + BlockMatrix2::outer(b.left[1], b.left[1]);
}

MetricMatrix eta(const ModelParams& p, SubspaceIndex n) {
    const PhaseRegion region = classify(p, n);
    if (p.mu() == 0.0) return {BlockMatrix2::identity(), region, n};
    refuse_at_ep(region, p, n);
    const BiorthoSystem gauged = fix_gauge_balanced(biortho_system(build_block(p, n)));
    return {left_projector_sum(gauged), region, n};
}

MetricMatrix eta_closed_form(const ModelParams& p, SubspaceIndex n) {
    const PhaseRegion region = classify(p, n);
    if (p.mu() == 0.0) return {BlockMatrix2::identity(), region, n};
    refuse_at_ep(region, p, n);
    const double d = p.delta();
    const double c2 = 2.0 * coupling(p, n);
    const double big_d = std::sqrt(std::abs(discriminant(p, n)));
    if (region == PhaseRegion::Unbroken) {
        const double off = -std::copysign(c2, d) / big_d;
        const double diag = std::abs(d) / big_d;
        return {{diag, off, off, diag}, region, n};
    }
    const double diag = c2 / big_d;
    const double off = -d / big_d;
    return {{diag, off, off, diag}, region, n};
}

MetricDiagnostics verify_metric(const ModelParams& p, SubspaceIndex n) {
    const MetricMatrix m = eta(p, n);
    const BlockMatrix2& e = m.matrix;
    const BlockMatrix2 h = build_block(p, n);

    MetricDiagnostics d{};
    d.region = m.region;
    d.symmetry_residual = std::hypot(std::abs(e(0, 1) - e(1, 0)) * std::sqrt(2.0), e.max_abs_imag());
    d.det_error = std::abs(e.det() - 1.0);
    const double tr = e.trace().real();
    d.positive_definite = tr > 0.0 && e.det().real() > 0.0;
    d.intertwining_residual = (e * h - h.adjoint() * e).frobenius_norm();
    d.h_norm = h.frobenius_norm();
    return d;
}

}  // namespace nhosc
