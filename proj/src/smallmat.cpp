#include "nhosc/smallmat.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "nhosc/errors.hpp"

namespace nhosc {

namespace {

struct Split {
    cplx half_trace;
    cplx half_diff;     // (a - d)/2
    cplx disc_quarter;  // ((a - d)/2)^2 + b c, so that M^2 = disc_quarter * I
};

Split split(const BlockMatrix2& m) {
    const cplx half_diff = 0.5 * (m(0, 0) - m(1, 1));
    return {0.5 * m.trace(), half_diff, half_diff * half_diff + m(0, 1) * m(1, 0)};
}

bool is_real(const BlockMatrix2& m) { return m.max_abs_imag() == 0.0; }

// Pick the better conditioned of the two null vectors of (m - lambda I).
Vec2 null_vector(const BlockMatrix2& m, cplx lambda) {
    const Vec2 from_row0{{m(0, 1), lambda - m(0, 0)}};
    const Vec2 from_row1{{lambda - m(1, 1), m(1, 0)}};
    return from_row0.norm2() >= from_row1.norm2() ? from_row0 : from_row1;
}

}  // namespace

bool discriminant_vanishes(double discriminant_abs, double splitting) {
    return discriminant_abs < kEpTolerance * std::max(1.0, splitting * splitting);
}

std::array<cplx, 2> eigenvalues2(const BlockMatrix2& m) {
    const Split s = split(m);
    cplx r;
    if (is_real(m)) {
        // real sign test before any square root
        const double q = s.disc_quarter.real();
        r = q >= 0.0 ? cplx(std::sqrt(q), 0.0) : cplx(0.0, std::sqrt(-q));
    } else {
        r = std::sqrt(s.disc_quarter);
    }
    return {s.half_trace + r, s.half_trace - r};
}

std::array<Eigenpair2, 2> eig2(const BlockMatrix2& m) {
    const Split s = split(m);
    const auto values = eigenvalues2(m);
    const double splitting = 2.0 * std::abs(s.half_diff);
    const double disc_abs = 4.0 * std::abs(s.disc_quarter);
    if (discriminant_vanishes(disc_abs, splitting)) {
        const double off = std::abs(m(0, 1)) + std::abs(m(1, 0));
        if (off <= kEpTolerance * std::max(1.0, splitting)) {
            // scalar multiple of the identity: any basis diagonalizes it
            const Vec2 e0{{1.0, 0.0}};
            const Vec2 e1{{0.0, 1.0}};
            return {Eigenpair2{values[0], e0, e0}, Eigenpair2{values[1], e1, e1}};
        }
        throw DefectiveMatrix(values, disc_abs);
    }

    const BlockMatrix2 adj = m.adjoint();
    std::array<Eigenpair2, 2> out;
    for (int i = 0; i < 2; ++i) {
        const cplx lambda = values[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i)] = {lambda, null_vector(m, lambda), null_vector(adj, std::conj(lambda))};
    }
    return out;
}

BlockMatrix2 expm2(const BlockMatrix2& m, double scale) {
    const Split s = split(m);
    const BlockMatrix2 traceless{s.half_diff, m(0, 1), m(1, 0), -s.half_diff};
    // exp(scale*M) = C(w) I + scale * S(w) M with w = scale^2 q,
    // C(w) = cosh(sqrt w), S(w) = sinh(sqrt w)/sqrt w.
    const cplx w = scale * scale * s.disc_quarter;
    cplx c_part;
    cplx s_part;
    if (std::abs(w) < 1e-2) {
        // near the EP: power series in w, terms 1/(2k)! and 1/(2k+1)!
        cplx term_c = 1.0;
        cplx term_s = 1.0;
        c_part = term_c;
        s_part = term_s;
        for (int k = 1; k < 30; ++k) {
            term_c *= w / (static_cast<double>(2 * k - 1) * static_cast<double>(2 * k));
            term_s *= w / (static_cast<double>(2 * k) * static_cast<double>(2 * k + 1));
            c_part += term_c;
            s_part += term_s;
            if (std::abs(term_c) < 1e-18 * std::abs(c_part) && std::abs(term_s) < 1e-18 * std::abs(s_part)) break;
        }
    } else if (is_real(m)) {
        const double wr = w.real();
        if (wr > 0.0) {
            const double z = std::sqrt(wr);
            c_part = std::cosh(z);
            s_part = std::sinh(z) / z;
        } else {
            const double z = std::sqrt(-wr);
            c_part = std::cos(z);
            s_part = std::sin(z) / z;
        }
    } else {
        const cplx z = std::sqrt(w);
        c_part = std::cosh(z);
        s_part = std::sinh(z) / z;
    }
    const cplx prefactor = std::exp(scale * s.half_trace);
    BlockMatrix2 out = c_part * BlockMatrix2::identity() + (scale * s_part) * traceless;
    return prefactor * out;
}

DenseMatrix::DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, cplx{}) {}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix out(dim);
    for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
    return out;
}

DenseMatrix DenseMatrix::kron(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (std::size_t k = 0; k < b.dim(); ++k)
                for (std::size_t l = 0; l < b.dim(); ++l) out(i * b.dim() + k, j * b.dim() + l) = aij * b(k, l);
        }
    return out;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

DenseMatrix DenseMatrix::conj() const {
    DenseMatrix out = *this;
    for (auto& x : out.data_) x = std::conj(x);
    return out;
}

double DenseMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : data_) s += std::norm(x);
    return std::sqrt(s);
}

DenseMatrix DenseMatrix::without(const std::vector<std::size_t>& drop) const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < dim_; ++i)
        if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
    DenseMatrix out(keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c) out(r, c) = (*this)(keep[r], keep[c]);
    return out;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch in DenseMatrix +=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch in DenseMatrix -=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

DenseMatrix& DenseMatrix::operator*=(cplx s) {
    for (auto& x : data_) x *= s;
    return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in DenseMatrix product");
    const std::size_t n = a.dim();
    DenseMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

std::vector<cplx> eigN(const DenseMatrix& m, std::size_t dim_cap) {
    const std::size_t n = m.dim();
    if (n == 0) return {};
    if (n > dim_cap)
        throw std::invalid_argument("eigN: dimension " + std::to_string(n) + " exceeds cap " + std::to_string(dim_cap));
    Eigen::MatrixXcd a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("eigN: QR iteration did not converge (dim " + std::to_string(n) + ")");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

}  // namespace nhosc
