#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace nhosc {

using cplx = std::complex<double>;

/// Two-component complex column vector.
struct Vec2 {
    std::array<cplx, 2> v{};

    cplx& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
    const cplx& operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

    double norm2() const { return std::norm(v[0]) + std::norm(v[1]); }
    double norm() const { return std::sqrt(norm2()); }

    friend Vec2 operator*(cplx s, const Vec2& x) { return Vec2{{s * x.v[0], s * x.v[1]}}; }
    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return Vec2{{a.v[0] + b.v[0], a.v[1] + b.v[1]}}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return Vec2{{a.v[0] - b.v[0], a.v[1] - b.v[1]}}; }
};

/// <a|b>, antilinear in the first argument.
inline cplx inner(const Vec2& a, const Vec2& b) {
    return std::conj(a.v[0]) * b.v[0] + std::conj(a.v[1]) * b.v[1];
}

/// Dense 2x2 complex matrix, row-major. Within the model the basis order is
/// [|n,+1/2>, |n+1,-1/2>].
class BlockMatrix2 {
public:
    constexpr BlockMatrix2() = default;
    constexpr BlockMatrix2(cplx a00, cplx a01, cplx a10, cplx a11) : e_{{{a00, a01}, {a10, a11}}} {}

    static constexpr BlockMatrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr BlockMatrix2 zero() { return {}; }
    static BlockMatrix2 diagonal(cplx d0, cplx d1) { return {d0, 0.0, 0.0, d1}; }
    /// |x><y|
    static BlockMatrix2 outer(const Vec2& x, const Vec2& y) {
        return {x[0] * std::conj(y[0]), x[0] * std::conj(y[1]),
                x[1] * std::conj(y[0]), x[1] * std::conj(y[1])};
    }

    cplx& operator()(int r, int c) { return e_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    const cplx& operator()(int r, int c) const {
        return e_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }

    cplx trace() const { return e_[0][0] + e_[1][1]; }
    cplx det() const { return e_[0][0] * e_[1][1] - e_[0][1] * e_[1][0]; }

    BlockMatrix2 adjoint() const {
        return {std::conj(e_[0][0]), std::conj(e_[1][0]), std::conj(e_[0][1]), std::conj(e_[1][1])};
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& row : e_)
            for (const auto& x : row) s += std::norm(x);
        return std::sqrt(s);
    }

    double max_abs_imag() const {
        double m = 0.0;
        for (const auto& row : e_)
            for (const auto& x : row) m = std::fmax(m, std::abs(x.imag()));
        return m;
    }

    bool is_finite() const {
        for (const auto& row : e_)
            for (const auto& x : row)
                if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
        return true;
    }

    BlockMatrix2& operator+=(const BlockMatrix2& o) {
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) (*this)(r, c) += o(r, c);
        return *this;
    }
    BlockMatrix2& operator-=(const BlockMatrix2& o) {
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) (*this)(r, c) -= o(r, c);
        return *this;
    }
    BlockMatrix2& operator*=(cplx s) {
        for (auto& row : e_)
            for (auto& x : row) x *= s;
        return *this;
    }

    friend BlockMatrix2 operator+(BlockMatrix2 a, const BlockMatrix2& b) { return a += b; }
    friend BlockMatrix2 operator-(BlockMatrix2 a, const BlockMatrix2& b) { return a -= b; }
    friend BlockMatrix2 operator*(cplx s, BlockMatrix2 a) { return a *= s; }
    friend BlockMatrix2 operator*(BlockMatrix2 a, cplx s) { return a *= s; }

    friend BlockMatrix2 operator*(const BlockMatrix2& a, const BlockMatrix2& b) {
        BlockMatrix2 out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
        return out;
    }

    friend Vec2 operator*(const BlockMatrix2& a, const Vec2& x) {
        return Vec2{{a(0, 0) * x[0] + a(0, 1) * x[1], a(1, 0) * x[0] + a(1, 1) * x[1]}};
    }

private:
    std::array<std::array<cplx, 2>, 2> e_{};
};

/// Entrywise comparison with explicit tolerances: |a-b| <= atol + rtol*|b|.
inline bool approx_equal(const BlockMatrix2& a, const BlockMatrix2& b, double atol, double rtol = 0.0) {
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (std::abs(a(r, c) - b(r, c)) > atol + rtol * std::abs(b(r, c))) return false;
    return true;
}

}  // namespace nhosc
