#include <doctest.h>

#include <cmath>
#include <random>

#include "momenta/action.hpp"
#include "momenta/linalg.hpp"

using namespace momenta;
using action::GroupAction;
using action::MomentMap;
using lie::AlgebraElement;
using lie::LieAlgebra;
using phase::Mat;
using phase::PhaseSpace;
using phase::ScalarField;
using phase::StatePoint;
using phase::Vec;

namespace {

Vec random_vec(int n, std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> dist(0.0, scale);
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = dist(rng);
    return v;
}

AlgebraElement elem(const lie::AlgebraPtr& alg, const Vec& coeffs) { return {alg, coeffs}; }

}  // namespace

TEST_SUITE("action") {

TEST_CASE("translation generator is (a, 0), from the action itself") {
    // The action (q,p) ↦ (q+ta, p) differentiates to (a, 0); the analytic
    // evaluator and the finite difference of the action agree on that.
    const auto sc = action::builtin_scenario("linear-momentum");
    std::mt19937_64 rng(1);
    const StatePoint p = sc.action->space->random_point(rng);
    const Vec a = random_vec(3, rng);
    const Vec gen = action::infinitesimal_generator(*sc.action, elem(sc.action->algebra, a), p);
    CHECK((gen.head(3) - a).norm() < 1e-12);
    CHECK(gen.tail(3).norm() < 1e-12);

    GroupAction fd_only = *sc.action;
    fd_only.generator = nullptr;
    const Vec gen_fd = action::infinitesimal_generator(fd_only, elem(sc.action->algebra, a), p);
    CHECK((gen - gen_fd).lpNorm<Eigen::Infinity>() < 1e-9);
}

TEST_CASE("rotation generator on R^6 is (Xq, Xp)") {
    const auto sc = action::builtin_scenario("angular-momentum");
    std::mt19937_64 rng(2);
    const StatePoint p = sc.action->space->random_point(rng);
    const Eigen::Vector3d w = random_vec(3, rng);
    const Vec gen = action::infinitesimal_generator(*sc.action, elem(sc.action->algebra, w), p);
    CHECK((gen.head(3) - Vec(w.cross(Eigen::Vector3d(p.coords.head(3))))).norm() < 1e-12);
    CHECK((gen.tail(3) - Vec(w.cross(Eigen::Vector3d(p.coords.tail(3))))).norm() < 1e-12);

    // Zero element generates the zero field.
    CHECK(action::infinitesimal_generator(*sc.action, elem(sc.action->algebra, Vec::Zero(3)), p)
              .norm() == 0.0);
}

TEST_CASE("isotropy and orbit tangents on the sphere") {
    const auto sc = action::builtin_scenario("sphere-so3");
    std::mt19937_64 rng(3);
    const StatePoint x = sc.action->space->random_point(rng);
    const auto iso = action::isotropy_algebra_basis(*sc.action, x);
    REQUIRE(iso.size() == 1);
    // The stabilizer direction is parallel to x under the hat identification.
    const Eigen::Vector3d axis = iso[0].coeffs;
    CHECK(axis.cross(Eigen::Vector3d(x.coords)).norm() < 1e-10);
    CHECK(action::orbit_tangent_basis(*sc.action, x).cols() == 2);
}

TEST_CASE("isotropy of free and trivial actions") {
    // Left translation on T*SO(3) is free.
    const auto sc = action::builtin_scenario("cotangent-left-translation");
    std::mt19937_64 rng(4);
    const StatePoint p = sc.action->space->random_point(rng);
    CHECK(action::isotropy_algebra_basis(*sc.action, p).empty());

    // Trivial action: the whole algebra stabilizes, no orbit directions.
    auto trivial = std::make_shared<GroupAction>();
    trivial->algebra = LieAlgebra::so3();
    trivial->space = PhaseSpace::sphere2(1.0);
    trivial->act = [](const lie::GroupElement&, const StatePoint& q) { return q; };
    trivial->generator = [](const AlgebraElement&, const StatePoint& q) {
        return Vec(Vec::Zero(q.space->tangent_rep_dim()));
    };
    const StatePoint x = trivial->space->random_point(rng);
    CHECK(action::isotropy_algebra_basis(*trivial, x).size() == 3);
    CHECK(action::orbit_tangent_basis(*trivial, x).cols() == 0);
}

TEST_CASE("moment from the canonical potential: angular and linear momentum") {
    std::mt19937_64 rng(5);
    // θ = p·dq on R^6 in coordinates (q, p).
    const action::OneForm theta = [](const StatePoint& p, const Vec& v) {
        return p.coords.tail(3).dot(v.head(3));
    };
    {
        const auto sc = action::builtin_scenario("angular-momentum");
        const MomentMap mm = action::moment_from_potential(sc.action, theta, rng);
        for (int i = 0; i < 10; ++i) {
            const StatePoint p = sc.action->space->random_point(rng);
            const Eigen::Vector3d expected =
                Eigen::Vector3d(p.coords.head(3)).cross(Eigen::Vector3d(p.coords.tail(3)));
            CHECK((mm(p).coeffs - Vec(expected)).lpNorm<Eigen::Infinity>() < 1e-12);
        }
    }
    {
        const auto sc = action::builtin_scenario("linear-momentum");
        const MomentMap mm = action::moment_from_potential(sc.action, theta, rng);
        for (int i = 0; i < 10; ++i) {
            const StatePoint p = sc.action->space->random_point(rng);
            CHECK((mm(p).coeffs - p.coords.tail(3)).lpNorm<Eigen::Infinity>() < 1e-12);
        }
        // Vanishing covector: the moment vanishes.
        Vec origin(6);
        origin << 0.4, -0.1, 0.2, 0, 0, 0;
        CHECK(mm(sc.action->space->make_point(origin)).coeffs.norm() < 1e-12);
    }
}

TEST_CASE("non-invariant potential is rejected") {
    const auto sc = action::builtin_scenario("angular-momentum");
    std::mt19937_64 rng(6);
    const action::OneForm skewed = [](const StatePoint& p, const Vec& v) {
        return p.coords.tail(3).dot(v.head(3)) + 0.3 * v(0);
    };
    CHECK_THROWS_AS(action::moment_from_potential(sc.action, skewed, rng), InvarianceViolation);
}

TEST_CASE("cotangent lift of the rotation action reproduces angular momentum") {
    // Base: SO(3) on the configuration space R^3.
    auto base = std::make_shared<GroupAction>();
    base->algebra = LieAlgebra::so3();
    base->space = PhaseSpace::constant_poisson(Mat::Zero(3, 3));  // plain R^3 carrier
    base->act = [](const lie::GroupElement& g, const StatePoint& q) {
        StatePoint out = q;
        out.coords = g.real_matrix() * q.coords;
        return out;
    };
    base->generator = [](const AlgebraElement& xi, const StatePoint& q) {
        return Vec(Eigen::Vector3d(xi.coeffs).cross(Eigen::Vector3d(q.coords)));
    };
    const auto lifted_space = PhaseSpace::standard_symplectic(3);
    const MomentMap mm = action::cotangent_lift_moment(base, lifted_space);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
        const StatePoint p = lifted_space->random_point(rng);
        // Oracle: μ(α)(ξ) = α(ξ_Q(π(α))) = p·(ξ × q) = (q × p)·ξ.
        const Eigen::Vector3d q = p.coords.head(3), mom = p.coords.tail(3);
        for (int k = 0; k < 3; ++k) {
            Vec e = Vec::Zero(3);
            e(k) = 1.0;
            const double lhs = mm(p).coeffs(k);
            const double rhs = mom.dot(Eigen::Vector3d(e).cross(q));
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
        CHECK((mm(p).coeffs - Vec(q.cross(mom))).lpNorm<Eigen::Infinity>() < 1e-12);
    }
}

TEST_CASE("left-translation moment map is the second projection") {
    const auto sc = action::builtin_scenario("cotangent-left-translation");
    std::mt19937_64 rng(8);
    const StatePoint p = sc.action->space->random_point(rng);
    CHECK((sc.moment(p).coeffs - p.coords).norm() == 0.0);
    // α = 0 maps to zero.
    const StatePoint zero = sc.action->space->make_point(
        lie::exponential({sc.action->algebra, random_vec(3, rng)}),
        {sc.action->algebra, Vec::Zero(3)});
    CHECK(sc.moment(zero).coeffs.norm() == 0.0);
}

TEST_CASE("moment condition holds for the built-in moment maps") {
    std::mt19937_64 rng(9);
    for (const auto& id : {"angular-momentum", "sphere-so3", "hamiltonian-r-action"}) {
        const auto sc = action::builtin_scenario(id);
        std::vector<StatePoint> points;
        for (int i = 0; i < 100; ++i) points.push_back(sc.action->space->random_point(rng));
        CHECK(action::check_moment_condition(sc.moment, points) < 1e-6);
    }
}

TEST_CASE("equivariance residuals and the rotation identity oracle") {
    std::mt19937_64 rng(10);
    const auto sc = action::builtin_scenario("angular-momentum");
    std::vector<StatePoint> points;
    std::vector<lie::GroupElement> groups;
    for (int i = 0; i < 50; ++i) {
        points.push_back(sc.action->space->random_point(rng));
        groups.push_back(lie::exponential({sc.action->algebra, random_vec(3, rng)}));
    }
    CHECK(action::check_equivariance(sc.moment, groups, points) < 1e-10);

    // Oracle: (Rq)×(Rp) = R(q×p) directly.
    const Eigen::Matrix3d r = groups.front().real_matrix();
    const Eigen::Vector3d q = points.front().coords.head(3), mom = points.front().coords.tail(3);
    CHECK(((r * q).cross(r * mom) - r * q.cross(mom)).norm() < 1e-12);

    // Identity element: zero residual.
    CHECK(action::check_equivariance(sc.moment, {lie::group_identity(sc.action->algebra)},
                                     {points.front()}) < 1e-15);

    // Diagonal action on S²×S²: μ(Rx, Ry) = R(x+y).
    const auto diag = action::builtin_scenario("s2xs2-diagonal");
    std::vector<StatePoint> pairs;
    for (int i = 0; i < 50; ++i) pairs.push_back(diag.action->space->random_point(rng));
    CHECK(action::check_equivariance(diag.moment, groups, pairs) < 1e-10);
}

TEST_CASE("Noether drift for the central-force system, its reverse, and a comoment flow") {
    const auto sc = action::builtin_scenario("angular-momentum");
    const double drift =
        action::check_noether(sc.moment, *sc.invariant_hamiltonian, sc.flow_start, 2.0, 1e-3);
    CHECK(drift < 1e-6);

    // Time reversal: the flow of −H obeys the same bound.
    ScalarField reversed = *sc.invariant_hamiltonian;
    const ScalarField original = *sc.invariant_hamiltonian;
    reversed.eval = [original](const StatePoint& p) { return -original.eval(p); };
    reversed.gradient = [original](const StatePoint& p) { return Vec(-original.gradient(p)); };
    CHECK(action::check_noether(sc.moment, reversed, sc.flow_start, 2.0, 1e-3) < 1e-6);

    // μ̂(ξ) is conserved along its own flow ({f,f} = 0); it is not invariant
    // under the whole group, so this is checked directly rather than through
    // check_noether's symmetry precondition.
    const AlgebraElement xi{sc.action->algebra, Eigen::Vector3d(0.3, -1.0, 0.5)};
    const ScalarField comoment = sc.moment.comoment(xi);
    const auto traj = phase::flow(sc.action->space, comoment, sc.flow_start, 2.0, 1e-3);
    const double value0 = comoment.eval(sc.flow_start);
    double self_drift = 0.0;
    for (const auto& s : traj.states)
        self_drift = std::max(self_drift, std::abs(comoment.eval(s) - value0));
    CHECK(self_drift < 1e-9);
}

TEST_CASE("non-invariant Hamiltonian raises a symmetry violation") {
    const auto sc = action::builtin_scenario("angular-momentum");
    ScalarField skewed;
    skewed.eval = [](const StatePoint& p) { return p.coords(0); };
    CHECK_THROWS_AS(action::check_noether(sc.moment, skewed, sc.flow_start, 1.0, 1e-2),
                    InvarianceViolation);
}

TEST_CASE("comoment antihomomorphism for angular momentum, sphere, and an abelian action") {
    std::mt19937_64 rng(11);
    {
        const auto sc = action::builtin_scenario("angular-momentum");
        std::vector<StatePoint> points;
        for (int i = 0; i < 30; ++i) points.push_back(sc.action->space->random_point(rng));
        CHECK(action::check_comoment_antihom(sc.moment, points) < 1e-6);
    }
    {
        const auto sc = action::builtin_scenario("sphere-so3");
        std::vector<StatePoint> points;
        for (int i = 0; i < 30; ++i) points.push_back(sc.action->space->random_point(rng));
        CHECK(action::check_comoment_antihom(sc.moment, points) < 1e-5);
    }
    {
        const auto sc = action::builtin_scenario("linear-momentum");
        std::vector<StatePoint> points;
        for (int i = 0; i < 10; ++i) points.push_back(sc.action->space->random_point(rng));
        CHECK(action::check_comoment_antihom(sc.moment, points) < 1e-8);
    }
}

TEST_CASE("equivariance pushforward identity mu_* xi_M = xi_{g*} after mu") {
    std::mt19937_64 rng(12);
    for (const auto& id : {"angular-momentum", "sphere-so3", "s2xs2-diagonal"}) {
        const auto sc = action::builtin_scenario(id);
        for (int i = 0; i < 10; ++i) {
            const StatePoint p = sc.action->space->random_point(rng);
            const Vec xi = random_vec(3, rng);
            const Vec gen = action::infinitesimal_generator(*sc.action, elem(sc.action->algebra, xi), p);
            auto mu_coords = [&](const StatePoint& q) { return Vec(sc.moment(q).coeffs); };
            const Vec pushed = action::pushforward_fd(mu_coords, p, gen, 1e-6);
            const Vec expected =
                lie::coadjoint_generator(elem(sc.action->algebra, xi), sc.moment(p)).coeffs;
            CHECK((pushed - expected).lpNorm<Eigen::Infinity>() < 1e-4);
        }
    }
}

TEST_CASE("Ad(g)-generator identity (Ad(g)xi)_M = Phi_g* xi_M") {
    std::mt19937_64 rng(13);
    const auto sc = action::builtin_scenario("angular-momentum");
    for (int i = 0; i < 10; ++i) {
        const StatePoint p = sc.action->space->random_point(rng);
        const Vec xi = random_vec(3, rng);
        const auto g = lie::exponential({sc.action->algebra, random_vec(3, rng)});
        const Vec gen_at_p = action::infinitesimal_generator(*sc.action, elem(sc.action->algebra, xi), p);
        auto map = [&](const StatePoint& q) { return Vec(sc.action->act(g, q).coords); };
        const Vec lhs = action::pushforward_fd(map, p, gen_at_p, 1e-6);
        const Vec rhs = action::infinitesimal_generator(
            *sc.action, lie::adjoint(g, elem(sc.action->algebra, xi)), sc.action->act(g, p));
        CHECK((lhs - rhs).lpNorm<Eigen::Infinity>() < 1e-5);
    }
}

TEST_CASE("generator bracket anti-morphism [xi_M, eta_M] = -[xi,eta]_M") {
    std::mt19937_64 rng(14);
    const auto sc = action::builtin_scenario("angular-momentum");
    const auto& act = *sc.action;
    const double h = 1e-4;
    for (int trial = 0; trial < 5; ++trial) {
        const StatePoint p = act.space->random_point(rng);
        const Vec xi = random_vec(3, rng), eta = random_vec(3, rng);
        auto vf = [&](const Vec& coeffs, const StatePoint& q) {
            return act.generator(elem(act.algebra, coeffs), q);
        };
        // [X,Y]^i = Σ_j X^j ∂_j Y^i − Y^j ∂_j X^i by ambient central differences.
        Vec bracket_xy = Vec::Zero(6);
        const Vec x = vf(xi, p), y = vf(eta, p);
        for (int j = 0; j < 6; ++j) {
            Vec dir = Vec::Zero(6);
            dir(j) = 1.0;
            StatePoint plus = p, minus = p;
            plus.coords += h * dir;
            minus.coords -= h * dir;
            bracket_xy += x(j) * (vf(eta, plus) - vf(eta, minus)) / (2 * h) -
                          y(j) * (vf(xi, plus) - vf(xi, minus)) / (2 * h);
        }
        const Vec expected =
            -vf(lie::bracket(elem(act.algebra, xi), elem(act.algebra, eta)).coeffs, p);
        CHECK((bracket_xy - expected).lpNorm<Eigen::Infinity>() < 1e-3);
    }
}

TEST_CASE("analytic gradients of the scenario Hamiltonians match central differences") {
    std::mt19937_64 rng(15);
    for (const auto& id : {"linear-momentum", "angular-momentum", "s2xs2-diagonal",
                           "hamiltonian-r-action"}) {
        const auto sc = action::builtin_scenario(id);
        REQUIRE(sc.invariant_hamiltonian);
        REQUIRE(sc.invariant_hamiltonian->gradient);
        for (int i = 0; i < 10; ++i) {
            const StatePoint p = sc.action->space->random_point(rng);
            const Vec analytic = sc.invariant_hamiltonian->gradient(p);
            ScalarField fd_only = *sc.invariant_hamiltonian;
            fd_only.gradient = nullptr;
            const Vec numeric = phase::gradient_of(fd_only, p);
            CHECK((analytic - numeric).lpNorm<Eigen::Infinity>() <
                  1e-5 * (1.0 + analytic.lpNorm<Eigen::Infinity>()));
        }
    }
}

TEST_CASE("the diagonal moment map is not a submersion at antipodal pairs") {
    const auto sc = action::builtin_scenario("s2xs2-diagonal");
    Vec anti(6);
    anti << 0.6, 0.8, 0.0, -0.6, -0.8, 0.0;
    const StatePoint p = sc.action->space->make_point(anti);
    // The orbit itself still has rank 2 there.
    CHECK(action::orbit_tangent_basis(*sc.action, p).cols() == 2);
    const Mat tangent = sc.action->space->tangent_basis(p);
    auto mu_coords = [&](const StatePoint& q) { return Vec(sc.moment(q).coeffs); };
    Mat dmu(3, tangent.cols());
    for (int c = 0; c < tangent.cols(); ++c)
        dmu.col(c) = action::pushforward_fd(mu_coords, p, tangent.col(c), 1e-6);
    CHECK(linalg::rank(dmu, 1e-6) == 2);
    // The image is span(x)^⊥.
    const Mat image = linalg::orthonormal_basis(dmu, 1e-6);
    CHECK((image.transpose() * anti.head(3)).cwiseAbs().maxCoeff() < 1e-6);
}

}  // TEST_SUITE
