#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "nhosc/matrix2.hpp"

namespace nhosc {

/// Relative threshold used to declare a 2x2 discriminant zero:
/// |disc| < kEpTolerance * max(1, scale^2).
inline constexpr double kEpTolerance = 1e-12;

/// True when a discriminant counts as zero for a splitting of the given size.
bool discriminant_vanishes(double discriminant_abs, double splitting);

struct Eigenpair2 {
    cplx value;
    Vec2 right;  ///< m * right = value * right
    Vec2 left;   ///< adjoint(m) * left = conj(value) * left
};

/// Eigenvalues of a 2x2 matrix, always available. Ordered as
/// tr/2 + r, tr/2 - r with r the principal square root of disc/4.
std::array<cplx, 2> eigenvalues2(const BlockMatrix2& m);

/// Eigenvalues with matched right/left eigenvectors (unnormalized).
/// Throws DefectiveMatrix when the discriminant vanishes and the matrix is
/// not a multiple of the identity.
std::array<Eigenpair2, 2> eig2(const BlockMatrix2& m);

/// exp(scale * m) via the traceless split m = cI + M, M^2 = qI.
BlockMatrix2 expm2(const BlockMatrix2& m, double scale);

/// Square complex matrix, row-major. Only used by the full-space oracle.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim);

    static DenseMatrix identity(std::size_t dim);
    /// Kronecker product a (x) b.
    static DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

    std::size_t dim() const noexcept { return dim_; }
    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    DenseMatrix adjoint() const;
    DenseMatrix conj() const;
    double frobenius_norm() const;
    /// Copy with the listed rows/columns removed (indices need not be sorted).
    DenseMatrix without(const std::vector<std::size_t>& drop) const;

    DenseMatrix& operator+=(const DenseMatrix& o);
    DenseMatrix& operator-=(const DenseMatrix& o);
    DenseMatrix& operator*=(cplx s);
    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
    friend DenseMatrix operator*(cplx s, DenseMatrix a) { return a *= s; }
    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

private:
    std::size_t dim_ = 0;
    std::vector<cplx> data_;
};

inline constexpr std::size_t kDenseDimCap = 256;

/// All eigenvalues of a general complex matrix. Throws std::invalid_argument
/// above dim_cap and ConvergenceFailure if the QR iteration does not converge.
std::vector<cplx> eigN(const DenseMatrix& m, std::size_t dim_cap = kDenseDimCap);

}  // namespace nhosc
