#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "nhosc/errors.hpp"
#include "nhosc/fullspace.hpp"
#include "nhosc/model.hpp"
#include "nhosc/smallmat.hpp"
#include "oracles.hpp"

using namespace nhosc;

namespace {

BlockMatrix2 random_matrix(std::mt19937_64& rng, bool real_only) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    auto draw = [&]() { return real_only ? cplx(u(rng), 0.0) : cplx(u(rng), u(rng)); };
    return {draw(), draw(), draw(), draw()};
}

}  // namespace

TEST_CASE("eig2 examples") {
    SUBCASE("diagonal") {
        const auto pairs = eig2({2.5, 0.0, 0.0, -1.5});
        CHECK(pairs[0].value == cplx(2.5));
        CHECK(pairs[1].value == cplx(-1.5));
    }
    SUBCASE("coupled block") {
        const BlockMatrix2 m{2.5, 1.0, -1.0, -1.5};
        const auto pairs = eig2(m);
        const auto roots = oracle::char_poly_roots(m);
        const double hi = std::max(roots[0].real(), roots[1].real());
        const double lo = std::min(roots[0].real(), roots[1].real());
        CHECK(pairs[0].value.real() == doctest::Approx(hi).epsilon(1e-12));
        CHECK(pairs[1].value.real() == doctest::Approx(lo).epsilon(1e-12));
        CHECK(pairs[0].value.real() == doctest::Approx(0.5 + std::sqrt(3.0)).epsilon(1e-14));
        CHECK(pairs[1].value.real() == doctest::Approx(0.5 - std::sqrt(3.0)).epsilon(1e-14));
        for (const auto& e : pairs) {
            CHECK((m * e.right - e.value * e.right).norm() < 1e-12);
            CHECK((m.adjoint() * e.left - std::conj(e.value) * e.left).norm() < 1e-12);
        }
    }
    SUBCASE("exceptional point") {
        const BlockMatrix2 m{2.5, 2.0, -2.0, -1.5};
        CHECK_THROWS_AS(eig2(m), DefectiveMatrix);
        try {
            eig2(m);
        } catch (const DefectiveMatrix& e) {
            CHECK(e.eigenvalues()[0] == cplx(0.5));
            CHECK(e.eigenvalues()[1] == cplx(0.5));
        }
    }
    SUBCASE("scalar matrix is not defective") {
        const auto pairs = eig2({1.5, 0.0, 0.0, 1.5});
        CHECK(pairs[0].value == cplx(1.5));
        CHECK(pairs[0].right.norm() == 1.0);
    }
}

TEST_CASE("eig2 trace/determinant invariants") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const BlockMatrix2 m = random_matrix(rng, trial % 2 == 0);
        const auto v = eigenvalues2(m);
        const double scale = 1.0 + m.frobenius_norm();
        CHECK(std::abs(v[0] + v[1] - m.trace()) <= 1e-12 * scale);
        CHECK(std::abs(v[0] * v[1] - m.det()) <= 1e-12 * scale * scale);
        try {
            const auto pairs = eig2(m);
            for (const auto& e : pairs) {
                CHECK((m * e.right - e.value * e.right).norm() <= 1e-11 * scale * e.right.norm());
                CHECK((m.adjoint() * e.left - std::conj(e.value) * e.left).norm() <= 1e-11 * scale * e.left.norm());
            }
            // matched pairs overlap, mismatched ones are orthogonal
            CHECK(std::abs(inner(pairs[0].left, pairs[1].right)) <= 1e-10 * pairs[0].left.norm() * pairs[1].right.norm());
            CHECK(std::abs(inner(pairs[0].left, pairs[0].right)) > 0.0);
        } catch (const DefectiveMatrix&) {
        }
    }
}

TEST_CASE("expm2 examples") {
    CHECK(approx_equal(expm2(BlockMatrix2::zero(), 3.7), BlockMatrix2::identity(), 0.0));

    const auto d = expm2({2.5, 0.0, 0.0, -1.5}, -1.0);
    CHECK(d(0, 0).real() == doctest::Approx(std::exp(-2.5)).epsilon(1e-14));
    CHECK(d(1, 1).real() == doctest::Approx(std::exp(1.5)).epsilon(1e-14));
    CHECK(std::abs(d(0, 1)) == 0.0);

    const BlockMatrix2 m{2.5, 1.0, -1.0, -1.5};
    const double r3 = std::sqrt(3.0);
    const BlockMatrix2 expected =
        std::exp(-0.5) * (std::cosh(r3) * BlockMatrix2::identity() - (std::sinh(r3) / r3) * BlockMatrix2{2.0, 1.0, -1.0, -2.0});
    const BlockMatrix2 series = oracle::series_expm(m, -1.0);
    CHECK(approx_equal(expected, series, 1e-12 * series.frobenius_norm()));
    CHECK((expm2(m, -1.0) - series).frobenius_norm() <= 1e-10 * series.frobenius_norm());
    // frozen from scipy.linalg.expm
    CHECK(expm2(m, -1.0)(0, 0).real() == doctest::Approx(-0.14956784).epsilon(1e-7));
    CHECK(expm2(m, -1.0)(1, 1).real() == doctest::Approx(3.685129).epsilon(1e-6));
}

TEST_CASE("expm2 agrees with series and satisfies group properties") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> su(-2.0, 2.0);
    for (int trial = 0; trial < 300; ++trial) {
        const BlockMatrix2 m = random_matrix(rng, trial % 3 != 0);
        const double s = su(rng);
        const BlockMatrix2 e = expm2(m, s);
        const BlockMatrix2 ref = oracle::series_expm(m, s);
        CHECK((e - ref).frobenius_norm() <= 1e-10 * ref.frobenius_norm());
        const BlockMatrix2 inv = expm2(m, -s);
        const double cond = std::max(1.0, e.frobenius_norm() * inv.frobenius_norm() / 1e3);
        CHECK((e * inv - BlockMatrix2::identity()).frobenius_norm() <= 1e-10 * cond);
        const cplx det_expected = std::exp(s * m.trace());
        CHECK(std::abs(e.det() - det_expected) <= 1e-10 * std::abs(det_expected));
    }
}

TEST_CASE("expm2 near and at the exceptional point") {
    for (double mu : {2.0, 2.0 - 1e-9, 2.0 + 1e-9, 2.0 + 1e-4}) {
        const BlockMatrix2 h = build_block(ModelParams(5, 1, mu), SubspaceIndex(0));
        for (double s : {-0.1, -1.0, -5.0}) {
            const BlockMatrix2 ref = oracle::series_expm(h, s);
            CHECK((expm2(h, s) - ref).frobenius_norm() <= 1e-10 * ref.frobenius_norm());
        }
    }
}

TEST_CASE("eigN") {
    SUBCASE("identity") {
        const auto ev = eigN(DenseMatrix::identity(4));
        REQUIRE(ev.size() == 4);
        for (const auto& x : ev) CHECK(std::abs(x - 1.0) < 1e-14);
    }
    SUBCASE("block diagonal") {
        DenseMatrix m(4);
        m(0, 0) = 2.5;
        m(1, 1) = -1.5;
        m(2, 2) = 2.5;
        m(3, 3) = -1.5;
        CHECK(multiset_distance({2.5, -1.5, 2.5, -1.5}, eigN(m)) < 1e-14);
    }
    SUBCASE("assembled from random 2x2 blocks") {
        std::mt19937_64 rng(3);
        DenseMatrix m(8);
        std::vector<cplx> expected;
        for (std::size_t b = 0; b < 4; ++b) {
            const BlockMatrix2 blk = random_matrix(rng, b % 2 == 0);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) m(2 * b + r, 2 * b + c) = blk(r, c);
            const auto v = eigenvalues2(blk);
            expected.insert(expected.end(), v.begin(), v.end());
        }
        CHECK(multiset_distance(expected, eigN(m)) < 1e-8);
    }
    SUBCASE("truncated Hamiltonian contains closed-form block values") {
        const auto ev = eigN(assemble_full(ModelParams(5, 1, 1), TruncatedSpace(6)));
        auto contains = [&](cplx target) {
            return std::any_of(ev.begin(), ev.end(), [&](cplx x) { return std::abs(x - target) < 1e-8; });
        };
        CHECK(contains(-2.5));
        CHECK(contains(0.5 + std::sqrt(3.0)));
        CHECK(contains(0.5 - std::sqrt(3.0)));
    }
    SUBCASE("dimension cap") {
        CHECK_THROWS_AS(eigN(DenseMatrix::identity(10), 8), std::invalid_argument);
    }
}
