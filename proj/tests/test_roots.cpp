#include <doctest.h>

#include <random>

#include "momenta/linalg.hpp"
#include "momenta/roots.hpp"

using namespace momenta;
using lie::LieAlgebra;
using roots::Face;
using roots::RootSystemData;
using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

TEST_SUITE("roots") {

TEST_CASE("su(2): two roots, one simple root, rank one") {
    const auto rsd = roots::root_decomposition(LieAlgebra::su2());
    CHECK(rsd.roots.size() == 2);
    CHECK(rsd.simple.size() == 1);
    CHECK(rsd.rank() == 1);
    CHECK(rsd.center_dim == 0);
    CHECK((rsd.roots[0] + rsd.roots[1]).norm() < 1e-10);
}

TEST_CASE("su(3): six roots, two simples, and the third positive root is their sum") {
    const auto rsd = roots::root_decomposition(LieAlgebra::su3());
    CHECK(rsd.roots.size() == 6);
    CHECK(rsd.simple.size() == 2);
    CHECK(rsd.rank() == 2);

    const Vec s1 = rsd.roots[rsd.simple[0]];
    const Vec s2 = rsd.roots[rsd.simple[1]];
    const Vec sum = s1 + s2;
    bool found = false;
    for (const auto& r : rsd.roots)
        if ((r - sum).lpNorm<Eigen::Infinity>() < 1e-8) found = true;
    CHECK(found);
}

TEST_CASE("root vectors are Killing-orthogonal to the Cartan subalgebra") {
    const auto rsd = roots::root_decomposition(LieAlgebra::su3());
    const auto& alg = rsd.algebra;
    for (size_t k = 0; k < rsd.roots.size(); ++k) {
        // Complex-bilinear Killing pairing tr(ad h · ad v).
        Eigen::MatrixXcd ad_v = Eigen::MatrixXcd::Zero(alg->dim(), alg->dim());
        for (int j = 0; j < alg->dim(); ++j)
            ad_v += rsd.root_vectors[k](j) * alg->ad_basis(j).cast<std::complex<double>>();
        for (int i : rsd.cartan_indices) {
            Vec e = Vec::Zero(alg->dim());
            e(i) = 1.0;
            const std::complex<double> pairing =
                (alg->ad(e).cast<std::complex<double>>() * ad_v).trace();
            CHECK(std::abs(pairing) < 1e-9);
        }
    }
}

TEST_CASE("abelian algebras have no roots and a full center") {
    const auto rsd = roots::root_decomposition(LieAlgebra::torus(3));
    CHECK(rsd.roots.empty());
    CHECK(rsd.simple.empty());
    CHECK(rsd.center_dim == 3);
    CHECK(roots::all_faces(rsd).size() == 1);
}

TEST_CASE("u(2): one-dimensional center, two roots annihilating it") {
    const auto rsd = roots::root_decomposition(LieAlgebra::u2());
    CHECK(rsd.center_dim == 1);
    CHECK(rsd.roots.size() == 2);
    // Cartan basis is (e3, z); the roots vanish on the center coordinate.
    for (const auto& r : rsd.roots) CHECK(std::abs(r(1)) < 1e-10);

    // The z*-component passes through the chamber tests untouched: a pure
    // center covector sits on every wall, and shifting any covector along z*
    // changes neither membership nor its face.
    Vec center_dual(2);
    center_dual << 0.0, 1.3;
    const auto on_walls = roots::chamber_membership(rsd, center_dual);
    CHECK(on_walls.member);
    CHECK(std::abs(on_walls.margin) < 1e-12);
    CHECK(roots::face_of(rsd, center_dual).zero_set == std::vector<int>{0});

    std::mt19937_64 rng(13);
    const Vec interior = roots::sample_in_face(rsd, Face{}, rng);
    const Vec shifted = interior + center_dual;
    CHECK(roots::chamber_membership(rsd, shifted).member);
    CHECK(roots::face_of(rsd, shifted).zero_set == roots::face_of(rsd, interior).zero_set);
}

TEST_CASE("su(2)xsu(2): two mutually orthogonal simple roots") {
    const auto rsd =
        roots::root_decomposition(LieAlgebra::product(LieAlgebra::su2(), LieAlgebra::su2()));
    CHECK(rsd.roots.size() == 4);
    CHECK(rsd.simple.size() == 2);
    const Vec s1 = rsd.roots[rsd.simple[0]];
    const Vec s2 = rsd.roots[rsd.simple[1]];
    CHECK(std::abs(rsd.pair(s1, s2)) < 1e-10);
    CHECK(rsd.pair(s1, s1) > 0.0);
}

TEST_CASE("simple-root expansion of every root has uniform sign") {
    for (const auto& alg : {LieAlgebra::su2(), LieAlgebra::su3(), LieAlgebra::u2()}) {
        const auto rsd = roots::root_decomposition(alg);
        Mat s(rsd.rank(), rsd.simple.size());
        for (size_t j = 0; j < rsd.simple.size(); ++j) s.col(j) = rsd.roots[rsd.simple[j]];
        for (const auto& root : rsd.roots) {
            double res = 0.0;
            const Vec c = linalg::least_squares(s, root, &res);
            CHECK(res < 1e-8);
            CHECK((c.minCoeff() > -1e-8 || c.maxCoeff() < 1e-8));
        }
    }
}

TEST_CASE("chamber membership: origin, sum of simples, negated simple") {
    const auto rsd = roots::root_decomposition(LieAlgebra::su3());
    const auto at_origin = roots::chamber_membership(rsd, Vec::Zero(2));
    CHECK(at_origin.member);
    CHECK(std::abs(at_origin.margin) < 1e-12);

    Vec sum = Vec::Zero(2);
    for (int k : rsd.simple) sum += rsd.roots[k];
    const auto inside = roots::chamber_membership(rsd, sum);
    CHECK(inside.member);
    CHECK(inside.margin > 0.0);

    const auto outside = roots::chamber_membership(rsd, Vec(-rsd.roots[rsd.simple[0]]));
    CHECK_FALSE(outside.member);
}

TEST_CASE("face classification of chamber points") {
    const auto rsd = roots::root_decomposition(LieAlgebra::su3());
    std::mt19937_64 rng(5);

    const Face interior{};
    const Vec generic = roots::sample_in_face(rsd, interior, rng);
    CHECK(roots::face_of(rsd, generic).zero_set.empty());

    const Face everything{{0, 1}};
    CHECK(roots::face_of(rsd, Vec::Zero(2)).zero_set == std::vector<int>{0, 1});

    const Face wall{{0}};
    const Vec on_wall = roots::sample_in_face(rsd, wall, rng);
    CHECK(roots::face_of(rsd, on_wall).zero_set == std::vector<int>{0});

    // Outside the chamber: face_of refuses.
    CHECK_THROWS_AS(roots::face_of(rsd, Vec(-rsd.roots[rsd.simple[0]])), SetupError);
}

TEST_CASE("face partial order") {
    const Face vertex{{0, 1}};
    const Face interior{};
    const Face wall0{{0}};
    const Face wall1{{1}};
    CHECK(roots::face_leq(vertex, interior));
    CHECK(roots::face_leq(vertex, wall0));
    CHECK(roots::face_leq(wall0, interior));
    CHECK_FALSE(roots::face_leq(interior, vertex));
    CHECK_FALSE(roots::face_leq(wall0, wall1));
    CHECK_FALSE(roots::face_leq(wall1, wall0));
    CHECK(roots::face_leq(wall0, wall0));
}

TEST_CASE("face isotropy of su(3): interior t, wall t+pair, vertex everything") {
    const auto rsd = roots::root_decomposition(LieAlgebra::su3());
    const auto interior = roots::isotropy_algebra_of_face(rsd, Face{});
    CHECK(interior.dim == 2);
    CHECK(interior.null_space_dim == 2);
    // The interior isotropy algebra is exactly the Cartan.
    for (int c = 0; c < interior.basis.cols(); ++c)
        for (int row = 0; row < interior.basis.rows(); ++row)
            if (row != rsd.cartan_indices[0] && row != rsd.cartan_indices[1])
                CHECK(std::abs(interior.basis(row, c)) < 1e-10);

    CHECK(roots::isotropy_algebra_of_face(rsd, Face{{0}}).dim == 4);
    CHECK(roots::isotropy_algebra_of_face(rsd, Face{{1}}).dim == 4);
    CHECK(roots::isotropy_algebra_of_face(rsd, Face{{0, 1}}).dim == 8);
}

TEST_CASE("commutator subalgebras over the face lattice") {
    const auto rsd = roots::root_decomposition(LieAlgebra::su3());
    const auto interior = roots::isotropy_algebra_of_face(rsd, Face{});
    CHECK(roots::commutator_subalgebra(rsd.algebra, interior.basis).cols() == 0);

    const auto wall = roots::isotropy_algebra_of_face(rsd, Face{{0}});
    CHECK(roots::commutator_subalgebra(rsd.algebra, wall.basis).cols() == 3);

    const auto vertex = roots::isotropy_algebra_of_face(rsd, Face{{0, 1}});
    CHECK(roots::commutator_subalgebra(rsd.algebra, vertex.basis).cols() == 8);

    // Non-closed spans are rejected.
    const auto so3 = LieAlgebra::so3();
    Mat open_span(3, 2);
    open_span << 1, 0, 0, 1, 0, 0;
    CHECK_THROWS_AS(roots::commutator_subalgebra(so3, open_span), SetupError);
}

TEST_CASE("classify dual values into face buckets") {
    const auto rsd = roots::root_decomposition(LieAlgebra::su3());
    std::mt19937_64 rng(9);
    std::vector<Vec> values;
    // Three interior values, two wall values, one vertex.
    for (int i = 0; i < 3; ++i)
        values.push_back(rsd.embed_in_dual(roots::sample_in_face(rsd, Face{}, rng)));
    for (int i = 0; i < 2; ++i)
        values.push_back(rsd.embed_in_dual(roots::sample_in_face(rsd, Face{{1}}, rng)));
    values.push_back(rsd.embed_in_dual(Vec::Zero(2)));

    const auto classification = roots::classify_values(rsd, values);
    size_t total = 0;
    for (const auto& [key, members] : classification.buckets) total += members.size();
    CHECK(total == values.size());
    CHECK(classification.buckets.at({}).size() == 3);
    CHECK(classification.buckets.at({1}).size() == 2);
    CHECK(classification.buckets.at({0, 1}).size() == 1);
    CHECK(classification.commutator_dims.at({}) == 0);
    CHECK(classification.commutator_dims.at({1}) == 3);
    CHECK(classification.commutator_dims.at({0, 1}) == 8);

    // Values outside the chamber are rejected, not moved.
    values.push_back(rsd.embed_in_dual(Vec(-rsd.roots[rsd.simple[0]])));
    CHECK_THROWS_AS(roots::classify_values(rsd, values), SetupError);
}

TEST_CASE("natural slice membership is the union of faces above") {
    const auto rsd = roots::root_decomposition(LieAlgebra::su3());
    std::mt19937_64 rng(11);
    const Face wall0{{0}};
    // The slice at a wall point contains the wall and the interior...
    CHECK(roots::natural_slice_contains(rsd, wall0, roots::sample_in_face(rsd, wall0, rng)));
    CHECK(roots::natural_slice_contains(rsd, wall0, roots::sample_in_face(rsd, Face{}, rng)));
    // ...but not the other wall, the vertex, or anything outside the chamber.
    CHECK_FALSE(roots::natural_slice_contains(rsd, wall0, roots::sample_in_face(rsd, Face{{1}}, rng)));
    CHECK_FALSE(roots::natural_slice_contains(rsd, wall0, Vec::Zero(2)));
    CHECK_FALSE(roots::natural_slice_contains(rsd, wall0, Vec(-rsd.roots[rsd.simple[0]])));
    // The vertex slice is the whole chamber; the interior slice only itself.
    CHECK(roots::natural_slice_contains(rsd, Face{{0, 1}}, roots::sample_in_face(rsd, wall0, rng)));
    CHECK_FALSE(roots::natural_slice_contains(rsd, Face{}, roots::sample_in_face(rsd, wall0, rng)));
}

TEST_CASE("classify moment samples of the sphere inclusion by face") {
    // so(3): rank one, so the chamber is a half-line in t* = span(e3*)^; points
    // of S² with the right sign of x₃ land in the interior face, equator
    // points at the vertex λ = 0.
    const auto rsd = roots::root_decomposition(LieAlgebra::so3());
    REQUIRE(rsd.simple.size() == 1);
    const double sign = rsd.pair(rsd.roots[rsd.simple[0]], Vec::Ones(1)) > 0 ? 1.0 : -1.0;

    const auto sc = momenta::action::builtin_scenario("sphere-so3");
    std::vector<momenta::phase::StatePoint> points;
    auto on_sphere = [&](double x, double y, double z) {
        Eigen::Vector3d v(x, y, z);
        v.normalize();
        return sc.action->space->make_point(v);
    };
    points.push_back(on_sphere(0.3, 0.4, sign * 0.8));
    points.push_back(on_sphere(-0.5, 0.1, sign * 0.2));
    points.push_back(on_sphere(1.0, 0.0, 0.0));  // equator: μ restricted to t is 0

    const auto classification = roots::classify_moment_samples(rsd, sc.moment, points);
    CHECK(classification.buckets.at({}).size() == 2);
    CHECK(classification.buckets.at({0}).size() == 1);
    CHECK(classification.commutator_dims.at({}) == 0);   // [T, T]
    CHECK(classification.commutator_dims.at({0}) == 3);  // [SO(3), SO(3)]

    // A value strictly outside the chamber is rejected.
    points.push_back(on_sphere(0.0, 0.3, -sign * 0.9));
    CHECK_THROWS_AS(roots::classify_moment_samples(rsd, sc.moment, points), SetupError);
}

TEST_CASE("decomposition completeness for the built-in compact algebras") {
    for (const auto& alg : {LieAlgebra::su2(), LieAlgebra::su3(), LieAlgebra::u2(),
                            LieAlgebra::product(LieAlgebra::su2(), LieAlgebra::su2())}) {
        const auto rsd = roots::root_decomposition(alg);
        CHECK(static_cast<int>(rsd.roots.size()) + rsd.rank() == alg->dim());
    }
}

}  // TEST_SUITE
