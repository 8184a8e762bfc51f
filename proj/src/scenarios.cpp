#include "momenta/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <thread>

#include "momenta/action.hpp"
#include "momenta/linalg.hpp"
#include "momenta/reduction.hpp"
#include "momenta/roots.hpp"
#include "momenta/transversal.hpp"

namespace momenta::scenario {

using action::ActionPtr;
using action::GroupAction;
using action::MomentMap;
using lie::AlgebraElement;
using lie::DualElement;
using lie::GroupElement;
using lie::LieAlgebra;
using phase::Mat;
using phase::PhaseSpace;
using phase::ScalarField;
using phase::SpacePtr;
using phase::StatePoint;
using phase::Vec;

namespace {

Check make_check(std::string name, std::string anchor, double residual, double tolerance,
                 int criterion = 0) {
    Check c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.residual = residual;
    c.tolerance = tolerance;
    c.pass = residual <= tolerance;
    c.criterion = criterion;
    return c;
}

std::vector<StatePoint> sample_points(const SpacePtr& space, int count, std::mt19937_64& rng) {
    std::vector<StatePoint> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(space->random_point(rng));
    return out;
}

std::vector<GroupElement> sample_groups(const lie::AlgebraPtr& alg, int count, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 0.8);
    std::vector<GroupElement> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        Vec xi(alg->dim());
        for (int k = 0; k < xi.size(); ++k) xi(k) = dist(rng);
        out.push_back(lie::exponential({alg, xi}));
    }
    return out;
}

// Worst deviation of the analytic generator from the action's finite difference.
double generator_fd_residual(const GroupAction& act, const std::vector<StatePoint>& points,
                             std::mt19937_64& rng) {
    if (!act.generator) return 0.0;
    std::normal_distribution<double> dist(0.0, 1.0);
    double worst = 0.0;
    const double h = 1e-6;
    for (const auto& p : points) {
        Vec xi(act.algebra->dim());
        for (int k = 0; k < xi.size(); ++k) xi(k) = dist(rng);
        const Vec analytic = act.generator({act.algebra, xi}, p);
        GroupAction fd_only = act;
        fd_only.generator = nullptr;
        fd_only.fd_step = h;
        const Vec numeric = action::infinitesimal_generator(fd_only, {act.algebra, xi}, p);
        worst = std::max(worst, (analytic - numeric).lpNorm<Eigen::Infinity>());
    }
    return worst;
}

double action_composition_residual(const GroupAction& act, const std::vector<StatePoint>& points,
                                   std::mt19937_64& rng) {
    double worst = 0.0;
    const auto gs = sample_groups(act.algebra, static_cast<int>(points.size()), rng);
    const auto hs = sample_groups(act.algebra, static_cast<int>(points.size()), rng);
    for (size_t i = 0; i < points.size(); ++i) {
        const StatePoint lhs = act.act(gs[i], act.act(hs[i], points[i]));
        const StatePoint rhs = act.act(lie::multiply(gs[i], hs[i]), points[i]);
        double d = (lhs.coords - rhs.coords).lpNorm<Eigen::Infinity>();
        if (lhs.group)
            d = std::max(d, (lhs.group->matrix - rhs.group->matrix).cwiseAbs().maxCoeff());
        worst = std::max(worst, d);
    }
    return worst;
}

// -- Rigid-body helpers -------------------------------------------------------------

const Eigen::Vector3d kInertia(1.0, 2.0, 3.0);

ScalarField body_energy_on_dual() {
    ScalarField h;
    h.eval = [](const StatePoint& p) {
        double e = 0.0;
        for (int i = 0; i < 3; ++i) e += 0.5 * p.coords(i) * p.coords(i) / kInertia(i);
        return e;
    };
    h.gradient = [](const StatePoint& p) {
        Vec g(3);
        for (int i = 0; i < 3; ++i) g(i) = p.coords(i) / kInertia(i);
        return g;
    };
    return h;
}

ScalarField left_invariant_energy(const lie::AlgebraPtr& alg) {
    ScalarField h;
    h.eval = [alg](const StatePoint& p) {
        const DualElement body = lie::coadjoint(lie::inverse(*p.group), {alg, p.coords});
        double e = 0.0;
        for (int i = 0; i < 3; ++i) e += 0.5 * body.coeffs(i) * body.coeffs(i) / kInertia(i);
        return e;
    };
    return h;
}

std::function<StatePoint(const StatePoint&)> body_momentum_projection(const SpacePtr& reduced) {
    return [reduced](const StatePoint& p) {
        const DualElement body =
            lie::coadjoint(lie::inverse(*p.group), {reduced->algebra(), p.coords});
        return reduced->make_point(body.coeffs);
    };
}

// -- Harmonic oscillator helpers -----------------------------------------------------

ActionPtr circle_action(int n) {
    auto a = std::make_shared<GroupAction>();
    a->algebra = LieAlgebra::translation(1);
    a->space = PhaseSpace::standard_symplectic(n);
    a->act = [n](const GroupElement& g, const StatePoint& p) {
        const double t = g.angles(0);
        const double c = std::cos(t), s = std::sin(t);
        StatePoint out = p;
        for (int i = 0; i < n; ++i) {
            const double q = p.coords(i), mom = p.coords(n + i);
            out.coords(i) = q * c + mom * s;
            out.coords(n + i) = mom * c - q * s;
        }
        return out;
    };
    a->generator = [n](const AlgebraElement& xi, const StatePoint& p) {
        Vec v(2 * n);
        v.head(n) = p.coords.tail(n);
        v.tail(n) = -p.coords.head(n);
        return Vec(xi.coeffs(0) * v);
    };
    return a;
}

ScalarField harmonic_hamiltonian() {
    ScalarField h;
    h.eval = [](const StatePoint& p) { return 0.5 * p.coords.squaredNorm(); };
    h.gradient = [](const StatePoint& p) { return Vec(p.coords); };
    return h;
}

MomentMap harmonic_moment(int n) {
    MomentMap mm;
    mm.action = circle_action(n);
    mm.mu = [alg = mm.action->algebra](const StatePoint& p) {
        Vec c(1);
        c(0) = 0.5 * p.coords.squaredNorm();
        return DualElement{alg, c};
    };
    return mm;
}

/// Phase-gauge-fixed representative of [z] ∈ CP^{n−1}; the gauge index is fixed
/// by the caller so that representatives along a flow are comparable.
Vec projective_representative(const Vec& coords, int gauge) {
    const int n = static_cast<int>(coords.size()) / 2;
    using C = std::complex<double>;
    std::vector<C> z(n);
    for (int i = 0; i < n; ++i) z[i] = C(coords(i), coords(n + i));
    const C phase = std::conj(z[gauge]) / std::abs(z[gauge]);
    Vec out(2 * n);
    for (int i = 0; i < n; ++i) {
        const C w = z[i] * phase;
        out(i) = w.real();
        out(n + i) = w.imag();
    }
    return out;
}

// -- R^5 example space ----------------------------------------------------------------

SpacePtr r5_space() {
    Mat p = Mat::Zero(5, 5);
    p(0, 1) = 1;
    p(1, 0) = -1;
    p(2, 3) = 1;
    p(3, 2) = -1;
    return PhaseSpace::constant_poisson(p);
}

ScalarField coordinate_constraint(int index, double value) {
    ScalarField f;
    f.eval = [index, value](const StatePoint& p) { return p.coords(index) - value; };
    f.gradient = [index](const StatePoint& p) {
        Vec g = Vec::Zero(p.space->tangent_rep_dim());
        g(index) = 1.0;
        return g;
    };
    return f;
}

transversal::Submanifold r5_hyperplane() {
    return {r5_space(), {coordinate_constraint(4, 0.7)}};
}
transversal::Submanifold r5_line() {
    return {r5_space(),
            {coordinate_constraint(0, 0.1), coordinate_constraint(1, -0.2),
             coordinate_constraint(2, 0.3), coordinate_constraint(3, 0.4)}};
}
transversal::Submanifold r5_3plane() {
    return {r5_space(), {coordinate_constraint(0, 0.1), coordinate_constraint(1, -0.2)}};
}
transversal::Submanifold r5_3plane_other() {
    return {r5_space(), {coordinate_constraint(2, 0.5), coordinate_constraint(3, -0.1)}};
}

StatePoint r5_point(const transversal::Submanifold& n, std::mt19937_64& rng) {
    StatePoint p = n.space->random_point(rng);
    return transversal::project_to_submanifold(n, p);
}

// -- Cross-section scenario setups ------------------------------------------------------

transversal::CrossSectionSetup s2xs2_setup() {
    const auto sc = action::builtin_scenario("s2xs2-diagonal");
    transversal::CrossSectionSetup setup;
    setup.mm = sc.moment;
    setup.lambda = Eigen::Vector3d(0.0, 0.0, 1.3);
    setup.z_tangent = Mat::Zero(3, 1);
    setup.z_tangent(2, 0) = 1.0;
    for (int i = 0; i < 2; ++i) {
        setup.z_constraints.push_back([i](const Vec& v) { return v(i); });
    }
    return setup;
}

StatePoint s2xs2_base_point() {
    const auto sc = action::builtin_scenario("s2xs2-diagonal");
    const double a = std::sqrt(1.0 - 0.65 * 0.65);
    Vec x(6);
    x << a, 0.0, 0.65, -a, 0.0, 0.65;
    return sc.action->space->make_point(x);
}

/// Coadjoint SO(3)-action on so(3)*: the identity map is its moment map.
MomentMap so3dual_identity_moment() {
    auto a = std::make_shared<GroupAction>();
    a->algebra = LieAlgebra::so3();
    a->space = PhaseSpace::lie_poisson_dual(a->algebra);
    a->act = [](const GroupElement& g, const StatePoint& p) {
        StatePoint out = p;
        out.coords = g.real_matrix() * p.coords;
        return out;
    };
    a->generator = [](const AlgebraElement& xi, const StatePoint& p) {
        return Vec(Eigen::Vector3d(xi.coeffs).cross(Eigen::Vector3d(p.coords)));
    };
    MomentMap mm;
    mm.action = a;
    mm.mu = [alg = a->algebra](const StatePoint& p) { return DualElement{alg, p.coords}; };
    return mm;
}

transversal::CrossSectionSetup so3dual_setup() {
    transversal::CrossSectionSetup setup;
    setup.mm = so3dual_identity_moment();
    setup.lambda = Eigen::Vector3d(0.5, 0.7, -0.3);
    const Eigen::Vector3d unit = Eigen::Vector3d(setup.lambda).normalized();
    // Two directions orthogonal to the ray.
    Eigen::Vector3d u1 = unit.cross(Eigen::Vector3d(0, 0, 1));
    if (u1.norm() < 1e-6) u1 = unit.cross(Eigen::Vector3d(1, 0, 0));
    u1.normalize();
    const Eigen::Vector3d u2 = unit.cross(u1).normalized();
    setup.z_tangent = Mat(3, 1);
    setup.z_tangent.col(0) = unit;
    const Vec lambda = setup.lambda;
    setup.z_constraints.push_back([u1, lambda](const Vec& v) { return u1.dot(v - lambda); });
    setup.z_constraints.push_back([u2, lambda](const Vec& v) { return u2.dot(v - lambda); });
    return setup;
}

// -- Quadratic test fields ---------------------------------------------------------------

ScalarField random_quadratic(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Mat a(dim, dim);
    Vec b(dim);
    for (int i = 0; i < dim; ++i) {
        b(i) = dist(rng);
        for (int j = 0; j < dim; ++j) a(i, j) = dist(rng);
    }
    a = Mat(0.5 * (a + a.transpose().eval()));
    ScalarField f;
    f.eval = [a, b](const StatePoint& p) {
        return 0.5 * p.coords.dot(a * p.coords) + b.dot(p.coords);
    };
    f.gradient = [a, b](const StatePoint& p) { return Vec(a * p.coords + b); };
    return f;
}

/// Quadratic in (α, rotation entries) for cotangent-group spaces.
ScalarField random_cotangent_quadratic(std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Mat a(3, 3), c(3, 3);
    Vec b(3);
    for (int i = 0; i < 3; ++i) {
        b(i) = dist(rng);
        for (int j = 0; j < 3; ++j) {
            a(i, j) = dist(rng);
            c(i, j) = dist(rng);
        }
    }
    a = Mat(0.5 * (a + a.transpose().eval()));
    ScalarField f;
    f.eval = [a, b, c](const StatePoint& p) {
        const Eigen::Matrix3d r = p.group->real_matrix();
        return 0.5 * p.coords.dot(a * p.coords) + b.dot(p.coords) + (c.array() * r.array()).sum();
    };
    // Group-direction derivative of Σ c_ij R_ij along e_k is tr(cᵀ ê_k R).
    f.gradient = [a, b, c](const StatePoint& p) {
        const Eigen::Matrix3d r = p.group->real_matrix();
        Vec g(6);
        for (int k = 0; k < 3; ++k) {
            Eigen::Vector3d e = Eigen::Vector3d::Zero();
            e(k) = 1.0;
            g(k) = (c.transpose() * (lie::hat(e) * r)).trace();
        }
        g.tail(3) = a * p.coords + b;
        return g;
    };
    return f;
}

// -- Scenario batteries --------------------------------------------------------------------

Report moment_map_battery(const Config& config) {
    const auto sc = action::builtin_scenario(config.scenario);
    std::mt19937_64 rng(config.seed);
    Report rep;
    rep.scenario_id = config.scenario;

    const auto points = sample_points(sc.action->space, config.samples, rng);
    const auto groups = sample_groups(sc.action->algebra, config.samples, rng);

    const bool antihom_criterion =
        config.scenario == "angular-momentum" || config.scenario == "sphere-so3";
    const bool noether_criterion = config.scenario == "angular-momentum";

    rep.checks.push_back(make_check("moment-condition", "moment map definition i_{xi_M} omega = d mu-hat(xi)",
                                    action::check_moment_condition(sc.moment, points), 1e-5, 2));
    rep.checks.push_back(make_check("equivariance", "mu after Phi_g = Ad*(g) after mu",
                                    action::check_equivariance(sc.moment, groups, points), 1e-8, 3));
    rep.checks.push_back(make_check(
        "comoment-antihomomorphism", "{mu-hat(xi), mu-hat(eta)} = -mu-hat([xi,eta])",
        action::check_comoment_antihom(sc.moment, points), 1e-5, antihom_criterion ? 4 : 0));
    rep.checks.push_back(make_check("generator-fd-match", "infinitesimal generator definition",
                                    generator_fd_residual(*sc.action, points, rng), 1e-5));
    rep.checks.push_back(make_check("action-composition", "group action axioms",
                                    action_composition_residual(*sc.action, points, rng), 1e-9));
    if (sc.invariant_hamiltonian) {
        rep.checks.push_back(make_check(
            "noether-drift", "Noether: mu is a conserved quantity",
            action::check_noether(sc.moment, *sc.invariant_hamiltonian, sc.flow_start, config.T,
                                  config.dt),
            1e-6, noether_criterion ? 1 : 0));
        const auto traj = phase::flow(sc.action->space, *sc.invariant_hamiltonian, sc.flow_start,
                                      config.T, config.dt);
        const double e0 = sc.invariant_hamiltonian->eval(sc.flow_start);
        double energy_drift = 0.0;
        for (const auto& s : traj.states)
            energy_drift = std::max(energy_drift, std::abs(sc.invariant_hamiltonian->eval(s) - e0));
        rep.checks.push_back(
            make_check("energy-drift", "dH conservation along the flow", energy_drift, 1e-6));
    }
    return rep;
}

Report rigid_body_battery(const Config& config) {
    Report rep;
    rep.scenario_id = config.scenario;
    std::mt19937_64 rng(config.seed);

    const auto alg = LieAlgebra::so3();
    const SpacePtr dual = PhaseSpace::lie_poisson_dual(alg);
    const ScalarField h = body_energy_on_dual();

    // Conservation + intermediate-axis instability on one trajectory.
    {
        const Vec alpha0 = Eigen::Vector3d(0.02, 1.0, 0.0);
        const auto traj = reduction::lie_poisson_flow(alg, h, {alg, alpha0}, config.T, config.dt);
        double energy_drift = 0.0, casimir_drift = 0.0, max_excursion = 0.0;
        const double e0 = h.eval(traj.states.front());
        const double c0 = alpha0.squaredNorm();
        const Eigen::Vector3d equilibrium(0.0, 1.0, 0.0);
        for (const auto& s : traj.states) {
            energy_drift = std::max(energy_drift, std::abs(h.eval(s) - e0));
            casimir_drift = std::max(casimir_drift, std::abs(s.coords.squaredNorm() - c0));
            max_excursion = std::max(max_excursion, (Eigen::Vector3d(s.coords) - equilibrium).norm());
        }
        rep.checks.push_back(
            make_check("lie-poisson-energy-drift", "Lie-Poisson structure on g*", energy_drift, 1e-6, 6));
        rep.checks.push_back(
            make_check("lie-poisson-casimir-drift", "Casimir |alpha|^2 on so(3)*", casimir_drift, 1e-6, 6));
        rep.checks.push_back(make_check("intermediate-axis-instability",
                                        "rigid-body Euler equations, unstable middle axis",
                                        0.1 - max_excursion, 0.0, 6));
    }

    // π-relatedness of the T*SO(3) dynamics with the Lie-Poisson flow.
    const SpacePtr tstar = PhaseSpace::cotangent_group(alg);
    const ScalarField big_h = left_invariant_energy(alg);
    {
        const auto samples = sample_points(tstar, 50, rng);
        const double residual = reduction::check_pi_relatedness(
            tstar, big_h, body_momentum_projection(dual), dual, h, samples);
        rep.checks.push_back(
            make_check("pi-relatedness", "reduced dynamics: X_H and X_h are pi-related", residual, 1e-4, 7));
    }

    // Reconstruction of the lifted motion, with an order study.
    auto run_reconstruction = [&](double dt) {
        const Vec alpha0 = Eigen::Vector3d(0.15, 0.8, 0.3);
        const StatePoint p0 = tstar->make_point(lie::group_identity(alg), {alg, alpha0});
        const auto full = phase::flow(tstar, big_h, p0, 5.0, dt);
        // Gauge twist by a curve in G_alpha: beta is a nontrivial lift of the
        // same reduced motion.
        const Vec axis = Eigen::Vector3d(alpha0).normalized();
        phase::Trajectory beta;
        beta.times = full.times;
        beta.states.reserve(full.size());
        const auto lifted = action::left_translation_action(tstar);
        for (size_t k = 0; k < full.size(); ++k) {
            const double s = 0.25 * std::sin(1.1 * full.times[k]);
            beta.states.push_back(lifted->act(lie::exponential({alg, s * axis}), full.states[k]));
        }
        const MomentMap mm = action::left_translation_moment(lifted);
        // The solve threshold is 1e-6 at the nominal dt = 1e-3 and scales with
        // the O(dt²) truncation floor of the central-difference β̇ so that
        // coarse-step convergence studies still run.
        const double solve_tolerance = std::max(1e-6, dt * dt);
        return reduction::reconstruct(mm, big_h, beta, {alg, alpha0}, lie::group_identity(alg),
                                      solve_tolerance);
    };
    const auto coarse = run_reconstruction(config.dt);
    const auto fine = run_reconstruction(config.dt / 2.0);
    rep.checks.push_back(make_check("reconstruction-residual", "lifted motion solves Hamilton's equations",
                                    coarse.residual, 1e-4, 8));
    rep.checks.push_back(make_check("reconstruction-order",
                                    "second-order exponential midpoint group update",
                                    3.0 - coarse.residual / fine.residual, 0.0, 8));
    rep.checks.push_back(make_check("reconstruction-solve-residual",
                                    "algebraic stage xi(t)_M(beta) = X_H(beta) - beta-dot",
                                    coarse.solve_residual, std::max(1e-6, config.dt * config.dt)));
    rep.checks.push_back(make_check("reconstruction-level-drift", "beta stays in the moment level set",
                                    coarse.level_drift, 1e-6));

    // Degeneracy structure of i*omega on mu^{-1}(alpha) = G x {alpha}.
    {
        const auto lifted = action::left_translation_action(tstar);
        const MomentMap mm = action::left_translation_moment(lifted);
        const Vec alpha0 = Eigen::Vector3d(0.15, 0.8, 0.3);
        const StatePoint p = tstar->make_point(lie::exponential({alg, Eigen::Vector3d(0.3, -0.2, 0.5)}),
                                               {alg, alpha0});
        const auto r = reduction::check_reduced_form_descends(mm, {alg, alpha0}, p);
        const bool ok = r.degeneracy_matches_orbit && r.degeneracy_dim == 1 && r.level_dim == 3 &&
                        r.cross_residual < 1e-6;
        rep.checks.push_back(make_check("tstar-reduced-form-degeneracy",
                                        "Marsden-Weinstein: i*omega descends through G_alpha",
                                        ok ? 0.0 : 1.0, 0.0));
    }
    return rep;
}

Report harmonic_battery(const Config& config) {
    Report rep;
    rep.scenario_id = config.scenario;
    for (int n : {2, 3}) {
        std::mt19937_64 rng(config.seed + n);
        const SpacePtr space = PhaseSpace::standard_symplectic(n);
        const ScalarField h = harmonic_hamiltonian();
        Vec start(2 * n);
        std::normal_distribution<double> dist(0.0, 1.0);
        for (int i = 0; i < 2 * n; ++i) start(i) = dist(rng);
        start /= start.norm();  // H = 1/2 level, the unit sphere S^{2n-1}
        const StatePoint p0 = space->make_point(start);

        const auto traj = phase::flow(space, h, p0, config.T, config.dt);
        double sphere_drift = 0.0;
        for (const auto& s : traj.states)
            sphere_drift = std::max(sphere_drift, std::abs(s.coords.squaredNorm() - 1.0));

        int gauge = 0;
        for (int i = 1; i < n; ++i)
            if (start(i) * start(i) + start(n + i) * start(n + i) >
                start(gauge) * start(gauge) + start(n + gauge) * start(n + gauge))
                gauge = i;
        const Vec rep0 = projective_representative(p0.coords, gauge);
        double projective_drift = 0.0;
        for (const auto& s : traj.states)
            projective_drift = std::max(
                projective_drift,
                (projective_representative(s.coords, gauge) - rep0).lpNorm<Eigen::Infinity>());

        const MomentMap mm = harmonic_moment(n);
        Vec level(1);
        level(0) = 0.5;
        int worst_defect = -1;
        for (size_t k = 0; k < traj.size(); k += traj.size() / 5 + 1) {
            const auto r = reduction::check_reduced_form_descends(mm, {mm.action->algebra, level},
                                                                  traj.states[k]);
            worst_defect = std::max(worst_defect, std::abs(r.degeneracy_dim - 1) +
                                                      std::abs(r.reduced_rank - 2 * (n - 1)));
        }

        // Reduced field through the projective representative map is zero.
        auto rep_map = [gauge](const StatePoint& q) {
            return projective_representative(q.coords, gauge);
        };
        const Vec xh = phase::hamiltonian_vf(space, h, p0);
        const double reduced_field =
            action::pushforward_fd(rep_map, p0, xh, 1e-5).lpNorm<Eigen::Infinity>();

        const std::string tag = "-n" + std::to_string(n);
        rep.checks.push_back(make_check("sphere-preservation" + tag,
                                        "harmonic flow preserves H^{-1}(1/2) = S^{2n-1}",
                                        sphere_drift, 1e-8, 9));
        rep.checks.push_back(make_check("projective-identity" + tag,
                                        "reduction to CP^{n-1}: flow descends to the identity",
                                        projective_drift, 1e-9, 9));
        rep.checks.push_back(make_check("degeneracy-count" + tag,
                                        "i*omega kernel = S^1 orbit direction",
                                        static_cast<double>(worst_defect), 0.0, 9));
        rep.checks.push_back(make_check("reduced-field-zero" + tag,
                                        "pi-related field on the projective quotient vanishes",
                                        reduced_field, 1e-6));
    }
    return rep;
}

Report kks_battery(const Config& config) {
    Report rep;
    rep.scenario_id = config.scenario;
    std::mt19937_64 rng(config.seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    const auto alg = LieAlgebra::so3();
    const SpacePtr dual = PhaseSpace::lie_poisson_dual(alg);
    const Vec beta0 = Eigen::Vector3d(0.3, -0.4, 1.2);

    double antisym = 0.0, rep_indep = 0.0, pairing = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        Vec xi(3), eta(3), g(3);
        for (int i = 0; i < 3; ++i) {
            xi(i) = dist(rng);
            eta(i) = dist(rng);
            g(i) = dist(rng);
        }
        const DualElement beta = lie::coadjoint(lie::exponential({alg, g}), {alg, beta0});
        const double value = reduction::kks_form(beta, {alg, xi}, {alg, eta});

        antisym = std::max(antisym, std::abs(value + reduction::kks_form(beta, {alg, eta}, {alg, xi})));

        // Representatives differ by the kernel of xi -> xi_{g*}(beta): for so(3)*
        // that kernel is the beta-axis.
        const Vec kernel_dir = Eigen::Vector3d(beta.coeffs).normalized();
        const double shifted =
            reduction::kks_form(beta, {alg, Vec(xi + 0.7 * kernel_dir)}, {alg, eta});
        rep_indep = std::max(rep_indep, std::abs(shifted - value));

        // Match against the Lie-Poisson bivector pairing on orbit tangents.
        const StatePoint b = dual->make_point(beta.coeffs);
        const Mat pmat = dual->bivector(b);
        const Vec u = lie::coadjoint_generator({alg, xi}, beta).coeffs;
        const Vec v = lie::coadjoint_generator({alg, eta}, beta).coeffs;
        Eigen::JacobiSVD<Mat> svd(pmat, Eigen::ComputeThinU | Eigen::ComputeThinV);
        svd.setThreshold(1e-10);
        const Vec lambda_u = svd.solve(u);
        const Vec lambda_v = svd.solve(v);
        pairing = std::max(pairing, std::abs(lambda_u.dot(pmat * lambda_v) - value));
    }
    rep.checks.push_back(
        make_check("kks-antisymmetry", "Kirillov-Kostant-Souriau form", antisym, 1e-12, 5));
    rep.checks.push_back(make_check("kks-representative-independence",
                                    "KKS is well defined on orbit tangents", rep_indep, 1e-12, 5));
    rep.checks.push_back(make_check("kks-bivector-pairing",
                                    "KKS equals the Lie-Poisson leaf form", pairing, 1e-9, 5));
    return rep;
}

Report marsden_ratiu_battery(const Config& config) {
    Report rep;
    rep.scenario_id = config.scenario;
    std::mt19937_64 rng(config.seed);

    // N = M with the orbit distribution of a canonical action: always reducible.
    {
        const auto sc = action::builtin_scenario("angular-momentum");
        reduction::MarsdenRatiuInput input;
        input.space = sc.action->space;
        input.distribution = [act = sc.action](const StatePoint& p) {
            return action::orbit_tangent_basis(*act, p);
        };
        const auto samples = sample_points(sc.action->space, 20, rng);
        const auto verdicts = reduction::check_marsden_ratiu(input, samples);
        const int failures = static_cast<int>(std::count(verdicts.begin(), verdicts.end(), false));
        rep.checks.push_back(make_check("orbit-distribution-reducible",
                                        "Marsden-Ratiu: Pi(E deg) in TN + E for orbit distributions",
                                        failures, 0.0, 10));
    }

    // The R^5 catalogue: hyperplanes are Poisson submanifolds (not transversal),
    // lines and the named 3-planes are transversal.
    auto classify = [&](const transversal::Submanifold& n, int count) {
        int poisson_sub = 0, transversal_count = 0;
        for (int i = 0; i < count; ++i) {
            const StatePoint p = r5_point(n, rng);
            const auto r = transversal::is_poisson_transversal(n, p);
            poisson_sub += r.is_poisson_sub ? 1 : 0;
            transversal_count += r.is_transversal ? 1 : 0;
        }
        return std::pair<int, int>{poisson_sub, transversal_count};
    };
    const int count = 10;
    const auto [hp_sub, hp_trans] = classify(r5_hyperplane(), count);
    const auto [ln_sub, ln_trans] = classify(r5_line(), count);
    const auto [pl_sub, pl_trans] = classify(r5_3plane(), count);
    const auto [pl2_sub, pl2_trans] = classify(r5_3plane_other(), count);
    rep.checks.push_back(make_check("r5-hyperplane-poisson-submanifold",
                                    "hyperplanes {x5=k} are Poisson submanifolds",
                                    count - hp_sub, 0.0, 10));
    rep.checks.push_back(make_check("r5-hyperplane-not-transversal",
                                    "hyperplanes are not Poisson transversals", hp_trans, 0.0, 10));
    rep.checks.push_back(make_check("r5-line-transversal", "lines with x1..x4 fixed are transversals",
                                    count - ln_trans, 0.0, 10));
    rep.checks.push_back(make_check("r5-line-not-poisson-submanifold",
                                    "Pi(dx1) leaves the line", ln_sub, 0.0, 10));
    rep.checks.push_back(make_check("r5-3plane-transversal", "3-planes with (x1,x2) fixed are transversals",
                                    count - pl_trans, 0.0, 10));
    rep.checks.push_back(make_check("r5-3plane-x3x4-transversal",
                                    "3-planes with (x3,x4) fixed are transversals",
                                    count - pl2_trans, 0.0, 10));
    (void)pl_sub;
    (void)pl2_sub;

    // Hyperplane with E = 0 satisfies the reducibility condition (Pi(T*M) ⊆ TN).
    {
        reduction::MarsdenRatiuInput input;
        input.space = r5_space();
        input.n_constraints = r5_hyperplane().constraints;
        std::vector<StatePoint> samples;
        for (int i = 0; i < 10; ++i) samples.push_back(r5_point(r5_hyperplane(), rng));
        const auto verdicts = reduction::check_marsden_ratiu(input, samples);
        const int failures = static_cast<int>(std::count(verdicts.begin(), verdicts.end(), false));
        rep.checks.push_back(make_check("r5-hyperplane-reducible-e0",
                                        "Poisson submanifolds are reducible with E = 0", failures,
                                        0.0, 10));
    }
    return rep;
}

Report transversal_battery(const Config& config) {
    Report rep;
    rep.scenario_id = config.scenario;
    std::mt19937_64 rng(config.seed);
    std::normal_distribution<double> dist(0.0, 1.0);

    // Characterization agreement on randomized affine subspace scenarios in
    // dims 4..6, with bivectors of varying rank. Disagreement throws inside
    // is_poisson_transversal; count every completed verdict.
    {
        int agreed = 0;
        const int trials = config.samples;
        for (int t = 0; t < trials; ++t) {
            const int dim = 4 + static_cast<int>(rng() % 3);
            Mat a(dim, dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) a(i, j) = dist(rng);
            Mat p = a - a.transpose();
            if (t % 3 == 1) {
                // Degenerate bivector: kill a random direction pair.
                const int k = static_cast<int>(rng() % dim);
                p.row(k).setZero();
                p.col(k).setZero();
            }
            const SpacePtr space = PhaseSpace::constant_poisson(p);
            const int codim = 1 + static_cast<int>(rng() % (dim - 1));
            std::vector<ScalarField> constraints;
            StatePoint origin = space->make_point(Vec::Zero(dim));
            for (int c = 0; c < codim; ++c) {
                Vec normal(dim);
                for (int i = 0; i < dim; ++i) normal(i) = dist(rng);
                ScalarField f;
                f.eval = [normal](const StatePoint& q) { return normal.dot(q.coords); };
                f.gradient = [normal](const StatePoint&) { return normal; };
                constraints.push_back(std::move(f));
            }
            const transversal::Submanifold n{space, constraints};
            transversal::is_poisson_transversal(n, origin);  // throws on disagreement
            ++agreed;
        }
        // Named scenarios run through the same assertion.
        for (const auto& n : {r5_hyperplane(), r5_line(), r5_3plane()})
            transversal::is_poisson_transversal(n, r5_point(n, rng));
        rep.checks.push_back(make_check("characterization-agreement",
                                        "four equivalent characterizations of Poisson transversals",
                                        trials - agreed, 0.0, 12));
    }

    // Transversal test vs the direct symplectic-subspace test W ∩ W^perp = 0
    // for nondegenerate ambient bivectors.
    {
        int mismatches = 0;
        for (int t = 0; t < config.samples; ++t) {
            const int half = 2 + static_cast<int>(rng() % 2);  // R^4 or R^6
            const int dim = 2 * half;
            Mat a(dim, dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) a(i, j) = dist(rng);
            Mat p = a - a.transpose();
            if (linalg::rank(p) < dim) continue;  // want a symplectic ambient
            const SpacePtr space = PhaseSpace::constant_poisson(p);
            const int codim = 2 * (1 + static_cast<int>(rng() % (half - 1)));
            std::vector<ScalarField> constraints;
            Mat normals(dim, codim);
            for (int c = 0; c < codim; ++c) {
                Vec normal(dim);
                for (int i = 0; i < dim; ++i) normal(i) = dist(rng);
                normals.col(c) = normal;
                ScalarField f;
                f.eval = [normal](const StatePoint& q) { return normal.dot(q.coords); };
                f.gradient = [normal](const StatePoint&) { return normal; };
                constraints.push_back(std::move(f));
            }
            const transversal::Submanifold n{space, constraints};
            const StatePoint origin = space->make_point(Vec::Zero(dim));
            const auto verdict = transversal::is_poisson_transversal(n, origin);
            // Direct test: omega restricted to TN is nondegenerate.
            const Mat tn = linalg::null_space(normals.transpose());
            const Mat omega = space->symplectic_matrix(origin);
            const Mat w = tn.transpose() * omega * tn;
            const bool symplectic_subspace = linalg::rank(w) == w.rows();
            if (verdict.is_transversal != symplectic_subspace) ++mismatches;
        }
        rep.checks.push_back(make_check("transversal-vs-symplectic-subspace",
                                        "symplectic ambient: transversal = symplectic submanifold",
                                        mismatches, 0.0, 12));
    }

    // Splitting Pi = Pi_N + V: reassembly residual on the named transversals.
    {
        double worst = 0.0;
        for (const auto& n : {r5_line(), r5_3plane()})
            for (int i = 0; i < 10; ++i)
                worst = std::max(worst, transversal::splitting_residual(n, r5_point(n, rng), rng));
        rep.checks.push_back(make_check("splitting-reassembly",
                                        "splitting of Pi along a Poisson transversal", worst, 1e-9, 13));
    }

    // Induced bivector on the 3-plane equals d3 ∧ d4; induced Jacobi residuals.
    {
        const auto n = r5_3plane();
        const StatePoint p = r5_point(n, rng);
        const auto induced = transversal::induced_bivector(n, p);
        // Expected: in the TN basis, the bivector restricted from ∂3∧∂4.
        Mat p34 = Mat::Zero(5, 5);
        p34(2, 3) = 1;
        p34(3, 2) = -1;
        const double structure_residual = (induced.matrix - induced.tn.transpose() * p34 * induced.tn)
                                              .cwiseAbs()
                                              .maxCoeff();
        rep.checks.push_back(make_check("induced-bivector-3plane",
                                        "induced structure on {x1,x2 fixed} is d3^d4",
                                        structure_residual, 1e-12, 13));

        auto linear_field = [](double a, double b, double c) {
            return transversal::ChartField([a, b, c](const Vec& y) {
                return a * y(0) + b * y(1) + c * y(2);
            });
        };
        const double jacobi_linear = transversal::check_induced_jacobi(
            n, p, linear_field(1, 0, 0.3), linear_field(0, 1, -0.2), linear_field(0.5, 0.5, 1));
        rep.checks.push_back(make_check("induced-jacobi-linear",
                                        "induced bracket of linear fields on a flat transversal",
                                        jacobi_linear, 1e-10, 13));

        auto quadratic_field = [&rng, &dist](int k) {
            Mat a(k, k);
            Vec b(k);
            for (int i = 0; i < k; ++i) {
                b(i) = dist(rng);
                for (int j = 0; j < k; ++j) a(i, j) = dist(rng);
            }
            a = Mat(0.5 * (a + a.transpose().eval()));
            return transversal::ChartField(
                [a, b](const Vec& y) { return 0.5 * y.dot(a * y) + b.dot(y); });
        };
        const double jacobi_quad = transversal::check_induced_jacobi(
            n, p, quadratic_field(3), quadratic_field(3), quadratic_field(3));
        rep.checks.push_back(make_check("induced-jacobi-quadratic",
                                        "induced bivector defines a Poisson structure", jacobi_quad,
                                        1e-4, 13));
    }

    // Cross-section theorems.
    {
        const auto setup = s2xs2_setup();
        const StatePoint base = s2xs2_base_point();
        const auto symp = transversal::check_symplectic_cross_section(setup, base, 20, 0.05,
                                                                      static_cast<unsigned>(config.seed));
        rep.checks.push_back(make_check("cross-section-s2xs2-symplectic",
                                        "Guillemin-Sternberg: mu^{-1}(Z) is symplectic near p",
                                        symp.checked_points - symp.passes, 0.0, 14));
        const auto poisson = transversal::check_poisson_cross_section(setup, base, 20, 0.05,
                                                                      static_cast<unsigned>(config.seed));
        rep.checks.push_back(make_check("cross-section-s2xs2-poisson",
                                        "Poisson cross-section: mu^{-1}(Z) is a transversal",
                                        poisson.checked_points - poisson.passes, 0.0, 14));

        const auto dual_setup = so3dual_setup();
        const StatePoint dual_base =
            dual_setup.mm.action->space->make_point(dual_setup.lambda);
        const auto dual_rep = transversal::check_poisson_cross_section(
            dual_setup, dual_base, 20, 0.05, static_cast<unsigned>(config.seed));
        rep.checks.push_back(make_check("cross-section-so3dual-poisson",
                                        "coadjoint cross-section on so(3)*",
                                        dual_rep.checked_points - dual_rep.passes, 0.0, 14));
    }
    return rep;
}

Report jacobi_battery(const Config& config) {
    Report rep;
    rep.scenario_id = config.scenario;

    struct Candidate {
        std::string name;
        SpacePtr space;
        bool cotangent;
    };
    const auto so3 = LieAlgebra::so3();
    const auto s2 = PhaseSpace::sphere2(1.0);
    const std::vector<Candidate> spaces = {
        {"standard-r6", PhaseSpace::standard_symplectic(3), false},
        {"sphere", s2, false},
        {"lie-poisson-so3", PhaseSpace::lie_poisson_dual(so3), false},
        {"cotangent-so3", PhaseSpace::cotangent_group(so3), true},
        {"poisson-r5", r5_space(), false},
        {"s2xs2", PhaseSpace::product({s2, s2}), false},
    };

    for (const auto& cand : spaces) {
        const int points = std::max(1, config.samples);
        std::vector<double> residuals(points, 0.0);
        // One seed per point: the result is identical for any worker count.
        auto worker = [&](int begin, int end) {
            for (int i = begin; i < end; ++i) {
                std::mt19937_64 rng(config.seed + 1000003ULL * static_cast<std::uint64_t>(i));
                const StatePoint p = cand.space->random_point(rng);
                const ScalarField f = cand.cotangent
                                          ? random_cotangent_quadratic(rng)
                                          : random_quadratic(cand.space->tangent_rep_dim(), rng);
                const ScalarField g = cand.cotangent
                                          ? random_cotangent_quadratic(rng)
                                          : random_quadratic(cand.space->tangent_rep_dim(), rng);
                const ScalarField h = cand.cotangent
                                          ? random_cotangent_quadratic(rng)
                                          : random_quadratic(cand.space->tangent_rep_dim(), rng);
                residuals[i] = phase::check_jacobi(cand.space, f, g, h, p);
            }
        };
        const int threads = std::max(1, config.parallel);
        if (threads == 1) {
            worker(0, points);
        } else {
            std::vector<std::thread> pool;
            const int chunk = (points + threads - 1) / threads;
            for (int t = 0; t < threads; ++t) {
                const int begin = t * chunk;
                const int end = std::min(points, begin + chunk);
                if (begin < end) pool.emplace_back(worker, begin, end);
            }
            for (auto& th : pool) th.join();
        }
        const double worst = *std::max_element(residuals.begin(), residuals.end());
        rep.checks.push_back(make_check("jacobi-" + cand.name,
                                        "Jacobi identity of the built-in bivector", worst, 1e-4, 15));
    }
    return rep;
}

Report roots_battery(const Config& config) {
    Report rep;
    rep.scenario_id = config.scenario;

    const auto su2 = roots::root_decomposition(LieAlgebra::su2());
    rep.checks.push_back(make_check("su2-root-count", "root decomposition of su(2)",
                                    std::abs(static_cast<int>(su2.roots.size()) - 2), 0.0, 11));
    rep.checks.push_back(make_check("su2-simple-count", "one simple root for su(2)",
                                    std::abs(static_cast<int>(su2.simple.size()) - 1), 0.0, 11));

    const auto su3 = roots::root_decomposition(LieAlgebra::su3());
    rep.checks.push_back(make_check("su3-root-count", "root decomposition of su(3)",
                                    std::abs(static_cast<int>(su3.roots.size()) - 6), 0.0, 11));
    rep.checks.push_back(make_check("su3-simple-count", "two simple roots for su(3)",
                                    std::abs(static_cast<int>(su3.simple.size()) - 2), 0.0, 11));
    const auto faces = roots::all_faces(su3);
    rep.checks.push_back(make_check("su3-face-count", "2^|Sigma| faces of the fundamental chamber",
                                    std::abs(static_cast<int>(faces.size()) - 4), 0.0, 11));

    // Isotropy dimensions per face with built-in combinatorial/numerical
    // cross-validation (a mismatch throws and fails the battery).
    int dim_defect = 0;
    double interior_not_t = 0.0;
    for (const auto& face : faces) {
        const auto iso = roots::isotropy_algebra_of_face(su3, face);
        const int expected = face.zero_set.empty() ? 2 : (face.zero_set.size() == 1 ? 4 : 8);
        dim_defect += std::abs(iso.dim - expected);
        if (face.zero_set.empty()) {
            // Interior face: isotropy algebra is exactly t.
            for (int c = 0; c < iso.basis.cols(); ++c)
                for (int row = 0; row < iso.basis.rows(); ++row) {
                    const bool cartan_row = row == su3.cartan_indices[0] || row == su3.cartan_indices[1];
                    if (!cartan_row) interior_not_t = std::max(interior_not_t, std::abs(iso.basis(row, c)));
                }
        }
    }
    rep.checks.push_back(make_check("su3-isotropy-dims",
                                    "isotropy is constant on faces; dims 2/4/4/8 for su(3)",
                                    dim_defect, 0.0, 11));
    rep.checks.push_back(make_check("su3-interior-isotropy-is-t",
                                    "the maximal torus is the interior-face isotropy group",
                                    interior_not_t, 1e-10, 11));

    // Chamber membership examples.
    Vec sum_of_simples = Vec::Zero(su3.rank());
    for (int k : su3.simple) sum_of_simples += su3.roots[k];
    const auto member = roots::chamber_membership(su3, sum_of_simples);
    rep.checks.push_back(make_check("chamber-sum-of-simples",
                                    "fundamental chamber contains the sum of simple roots",
                                    member.member && member.margin > 0 ? 0.0 : 1.0, 0.0));
    const auto nonmember = roots::chamber_membership(su3, Vec(-su3.roots[su3.simple[0]]));
    rep.checks.push_back(make_check("chamber-negative-simple",
                                    "negated simple root lies outside the chamber",
                                    nonmember.member ? 1.0 : 0.0, 0.0));

    // Commutator subalgebra dimensions per face of su(3).
    int comm_defect = 0;
    for (const auto& face : faces) {
        const auto iso = roots::isotropy_algebra_of_face(su3, face);
        const int dim =
            static_cast<int>(roots::commutator_subalgebra(su3.algebra, iso.basis).cols());
        const int expected = face.zero_set.empty() ? 0 : (face.zero_set.size() == 1 ? 3 : 8);
        comm_defect += std::abs(dim - expected);
    }
    rep.checks.push_back(make_check("su3-commutator-dims",
                                    "[G_sigma, G_sigma] dimensions over the face lattice",
                                    comm_defect, 0.0, 11));
    (void)config;
    return rep;
}

}  // namespace

// -- Public interface --------------------------------------------------------------

std::vector<std::string> verify_scenario_ids() {
    std::vector<std::string> ids = action::builtin_scenario_ids();
    ids.insert(ids.end(), {"rigid-body-reconstruction", "harmonic-oscillator-reduction", "kks-so3",
                           "marsden-ratiu-r5", "poisson-transversals", "jacobi-identity",
                           "roots-weyl"});
    return ids;
}

Report run_verify(const Config& config) {
    const auto start = std::chrono::steady_clock::now();
    Report rep;
    const auto& id = config.scenario;
    const auto moment_ids = action::builtin_scenario_ids();
    if (std::find(moment_ids.begin(), moment_ids.end(), id) != moment_ids.end())
        rep = moment_map_battery(config);
    else if (id == "rigid-body-reconstruction")
        rep = rigid_body_battery(config);
    else if (id == "harmonic-oscillator-reduction")
        rep = harmonic_battery(config);
    else if (id == "kks-so3")
        rep = kks_battery(config);
    else if (id == "marsden-ratiu-r5")
        rep = marsden_ratiu_battery(config);
    else if (id == "poisson-transversals")
        rep = transversal_battery(config);
    else if (id == "jacobi-identity")
        rep = jacobi_battery(config);
    else if (id == "roots-weyl")
        rep = roots_battery(config);
    else
        throw UnsupportedOperation("unknown scenario: " + id);
    rep.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

double round15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

nlohmann::json report_json(const Report& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"anchor", c.anchor},
                          {"residual", round15(c.residual)},
                          {"tolerance", round15(c.tolerance)},
                          {"pass", c.pass},
                          {"criterion", c.criterion}});
    return {{"schema", 1},
            {"scenario", report.scenario_id},
            {"checks", checks},
            {"wall_time", round15(report.wall_time)}};
}

std::vector<std::string> simulate_scenario_ids() {
    return {"rigid-body", "harmonic-oscillator", "central-force"};
}

SimulationOutput run_simulate(const Config& config) {
    phase::Trajectory traj;
    std::vector<std::pair<std::string, ScalarField>> extras;

    if (config.scenario == "rigid-body") {
        const auto alg = LieAlgebra::so3();
        const ScalarField h = body_energy_on_dual();
        traj = reduction::lie_poisson_flow(alg, h, {alg, Eigen::Vector3d(1.0, 0.01, 0.0)}, config.T,
                                           config.dt);
        ScalarField casimir;
        casimir.eval = [](const StatePoint& p) { return p.coords.squaredNorm(); };
        extras = {{"H", h}, {"alpha_sq", casimir}};
    } else if (config.scenario == "harmonic-oscillator") {
        const SpacePtr space = PhaseSpace::standard_symplectic(2);
        const ScalarField h = harmonic_hamiltonian();
        Vec x(4);
        x << 1.0, 0.2, 0.3, -0.4;
        traj = phase::flow(space, h, space->make_point(x), config.T, config.dt);
        ScalarField norm_sq;
        norm_sq.eval = [](const StatePoint& p) { return p.coords.squaredNorm(); };
        extras = {{"H", h}, {"norm_sq", norm_sq}};
    } else if (config.scenario == "central-force") {
        const auto sc = action::builtin_scenario("angular-momentum");
        traj = phase::flow(sc.action->space, *sc.invariant_hamiltonian, sc.flow_start, config.T,
                           config.dt);
        ScalarField lx, ly, lz;
        lx.eval = [](const StatePoint& p) {
            return Eigen::Vector3d(p.coords.head(3)).cross(Eigen::Vector3d(p.coords.tail(3)))(0);
        };
        ly.eval = [](const StatePoint& p) {
            return Eigen::Vector3d(p.coords.head(3)).cross(Eigen::Vector3d(p.coords.tail(3)))(1);
        };
        lz.eval = [](const StatePoint& p) {
            return Eigen::Vector3d(p.coords.head(3)).cross(Eigen::Vector3d(p.coords.tail(3)))(2);
        };
        extras = {{"H", *sc.invariant_hamiltonian}, {"Lx", lx}, {"Ly", ly}, {"Lz", lz}};
    } else {
        throw UnsupportedOperation("unknown simulate scenario: " + config.scenario);
    }

    SimulationOutput out;
    std::ostringstream csv;
    phase::write_trajectory_csv(traj, csv, extras);
    out.csv = csv.str();

    nlohmann::json columns = nlohmann::json::array();
    columns.push_back("t");
    for (int i = 0; i < traj.states.front().coords.size(); ++i)
        columns.push_back("x" + std::to_string(i + 1));
    for (const auto& [name, field] : extras) columns.push_back(name);
    nlohmann::json rows = nlohmann::json::array();
    for (size_t k = 0; k < traj.size(); ++k) {
        nlohmann::json row = nlohmann::json::array();
        row.push_back(round15(traj.times[k]));
        for (int i = 0; i < traj.states[k].coords.size(); ++i)
            row.push_back(round15(traj.states[k].coords(i)));
        for (const auto& [name, field] : extras) row.push_back(round15(field.eval(traj.states[k])));
        rows.push_back(row);
    }
    out.json = {{"schema", 1}, {"scenario", config.scenario}, {"columns", columns}, {"rows", rows}};
    return out;
}

nlohmann::json roots_report(const std::string& algebra_name) {
    const auto rsd = roots::root_decomposition(LieAlgebra::by_name(algebra_name));
    nlohmann::json roots_json = nlohmann::json::array();
    for (const auto& r : rsd.roots) {
        nlohmann::json v = nlohmann::json::array();
        for (int i = 0; i < r.size(); ++i) v.push_back(round15(r(i)));
        roots_json.push_back(v);
    }
    nlohmann::json faces = nlohmann::json::array();
    for (const auto& face : roots::all_faces(rsd)) {
        const auto iso = roots::isotropy_algebra_of_face(rsd, face);
        faces.push_back(
            {{"zero_set", face.zero_set},
             {"isotropy_dim", iso.dim},
             {"commutator_dim",
              static_cast<int>(roots::commutator_subalgebra(rsd.algebra, iso.basis).cols())}});
    }
    return {{"schema", 1},          {"algebra", algebra_name},
            {"rank", rsd.rank()},   {"center_dim", rsd.center_dim},
            {"roots", roots_json},  {"simple", rsd.simple},
            {"faces", faces}};
}

nlohmann::json transversal_report(const std::string& scenario_id) {
    std::mt19937_64 rng(42);
    nlohmann::json points = nlohmann::json::array();

    auto emit = [&](const std::string& name, const transversal::Submanifold& n, const StatePoint& p) {
        const auto r = transversal::is_poisson_transversal(n, p);
        nlohmann::json coords = nlohmann::json::array();
        for (int i = 0; i < p.coords.size(); ++i) coords.push_back(round15(p.coords(i)));
        points.push_back({{"submanifold", name},
                          {"point", coords},
                          {"is_submanifold_ok", r.is_submanifold_ok},
                          {"is_poisson_sub", r.is_poisson_sub},
                          {"is_transversal", r.is_transversal},
                          {"dim_tn", r.dim_tn},
                          {"dim_pi_tn_ann", r.dim_pi_ann},
                          {"dim_sum", r.dim_sum},
                          {"charac_agree", r.charac_agree}});
    };

    if (scenario_id == "r5") {
        for (int i = 0; i < 5; ++i) {
            emit("hyperplane", r5_hyperplane(), r5_point(r5_hyperplane(), rng));
            emit("line", r5_line(), r5_point(r5_line(), rng));
            emit("3plane", r5_3plane(), r5_point(r5_3plane(), rng));
        }
    } else if (scenario_id == "s2xs2") {
        const auto setup = s2xs2_setup();
        const transversal::Submanifold n{setup.mm.action->space, [&] {
                                             std::vector<ScalarField> cs;
                                             for (const auto& zc : setup.z_constraints) {
                                                 ScalarField f;
                                                 f.eval = [mm = setup.mm, zc](const StatePoint& q) {
                                                     return zc(mm(q).coeffs);
                                                 };
                                                 cs.push_back(std::move(f));
                                             }
                                             return cs;
                                         }()};
        StatePoint p = s2xs2_base_point();
        for (int i = 0; i < 5; ++i) {
            emit("mu-preimage-z", n, p);
            StatePoint moved = p;
            const auto fd = transversal::local_frame(n, p);
            Vec c(fd.tn.cols());
            std::normal_distribution<double> dist(0.0, 1.0);
            for (int k = 0; k < c.size(); ++k) c(k) = dist(rng);
            c *= 0.05 / std::max(1e-12, c.norm());
            moved.coords = p.coords + fd.frame * (fd.tn * c);
            p = transversal::project_to_submanifold(n, moved);
        }
    } else if (scenario_id == "so3dual") {
        const auto setup = so3dual_setup();
        const transversal::Submanifold n{setup.mm.action->space, [&] {
                                             std::vector<ScalarField> cs;
                                             for (const auto& zc : setup.z_constraints) {
                                                 ScalarField f;
                                                 f.eval = [mm = setup.mm, zc](const StatePoint& q) {
                                                     return zc(mm(q).coeffs);
                                                 };
                                                 cs.push_back(std::move(f));
                                             }
                                             return cs;
                                         }()};
        const Vec lambda = setup.lambda;
        for (int i = 0; i < 5; ++i) {
            const double t = 1.0 + 0.04 * (i - 2);
            emit("radial-ray", n, n.space->make_point(Vec(t * lambda)));
        }
    } else {
        throw UnsupportedOperation("unknown transversal scenario: " + scenario_id);
    }
    return {{"schema", 1}, {"scenario", scenario_id}, {"points", points}};
}

}  // namespace momenta::scenario
