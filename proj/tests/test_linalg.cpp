#include <doctest.h>

#include <random>

#include "momenta/linalg.hpp"

using namespace momenta;
using linalg::Mat;
using linalg::Vec;

TEST_SUITE("linalg") {

TEST_CASE("rank and null space of simple matrices") {
    Mat a(2, 3);
    a << 1, 0, 0, 0, 1, 0;
    CHECK(linalg::rank(a) == 2);
    const Mat ker = linalg::null_space(a);
    REQUIRE(ker.cols() == 1);
    CHECK(std::abs(std::abs(ker(2, 0)) - 1.0) < 1e-12);

    CHECK(linalg::rank(Mat::Zero(4, 4)) == 0);
    CHECK(linalg::null_space(Mat::Zero(2, 5)).cols() == 5);
}

TEST_CASE("sum, intersection, annihilator") {
    Mat a(3, 1), b(3, 2);
    a << 1, 0, 0;
    b << 1, 0, 1, 0, 0, 1;
    CHECK(linalg::subspace_sum(a, b).cols() == 3);

    // span{e1, e2} ∩ span{e2, e3} = span{e2}
    Mat u(3, 2), v(3, 2);
    u << 1, 0, 0, 1, 0, 0;
    v << 0, 0, 1, 0, 0, 1;
    const Mat inter = linalg::subspace_intersection(u, v);
    REQUIRE(inter.cols() == 1);
    CHECK(std::abs(std::abs(inter(1, 0)) - 1.0) < 1e-12);

    const Mat ann = linalg::annihilator(u, 3);
    REQUIRE(ann.cols() == 1);
    CHECK(std::abs(std::abs(ann(2, 0)) - 1.0) < 1e-12);

    CHECK(linalg::annihilator(Mat(3, 0), 3).cols() == 3);
}

TEST_CASE("containment and preimage") {
    Mat big(4, 2), small(4, 1);
    big << 1, 0, 0, 1, 0, 0, 0, 0;
    small << 1, 2, 0, 0;
    CHECK(linalg::contains(big, small));
    small(2, 0) = 1;
    CHECK_FALSE(linalg::contains(big, small));

    // preimage of span{e1} under the projection onto the first two coords
    Mat m(2, 3);
    m << 1, 0, 0, 0, 1, 0;
    Mat s(2, 1);
    s << 1, 0;
    const Mat pre = linalg::preimage(m, s);
    CHECK(pre.cols() == 2);  // span{e1, e3}
    for (int c = 0; c < pre.cols(); ++c) CHECK(std::abs(pre(1, c)) < 1e-12);
}

TEST_CASE("rank identities on random subspaces") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 3);
        const int k = 1 + static_cast<int>(rng() % (n - 1));
        Mat a(n, k);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j) a(i, j) = dist(rng);
        const Mat basis = linalg::orthonormal_basis(a);
        const Mat ann = linalg::annihilator(basis, n);
        CHECK(basis.cols() + ann.cols() == n);
        // Annihilator really annihilates.
        if (basis.cols() > 0 && ann.cols() > 0)
            CHECK((ann.transpose() * basis).cwiseAbs().maxCoeff() < 1e-10);
        // v inside the span has no residual outside it.
        Vec coeffs(basis.cols());
        for (int j = 0; j < coeffs.size(); ++j) coeffs(j) = dist(rng);
        CHECK(linalg::residual_outside(basis, basis * coeffs) < 1e-10);
    }
}

TEST_CASE("least squares residual reporting") {
    Mat a(3, 1);
    a << 1, 0, 0;
    Vec b(3);
    b << 2, 1, 0;
    double res = 0.0;
    const Vec x = linalg::least_squares(a, b, &res);
    CHECK(x(0) == doctest::Approx(2.0));
    CHECK(res == doctest::Approx(1.0));
}

}  // TEST_SUITE
