#include "momenta/action.hpp"

#include <cmath>

#include "momenta/linalg.hpp"

namespace momenta::action {

using lie::AlgebraElement;
using lie::DualElement;
using lie::GroupElement;
using phase::PhaseSpace;

Vec pushforward_fd(const std::function<Vec(const StatePoint&)>& map, const StatePoint& p, const Vec& v,
                   double h) {
    const auto& space = *p.space;
    return (map(space.retract(p, v, h)) - map(space.retract(p, v, -h))) / (2.0 * h);
}

namespace {

/// Coordinate difference of two points, in tangent-representation coordinates.
/// For cotangent-group spaces the group part is compared through log(g q⁻¹).
Vec point_difference(const StatePoint& a, const StatePoint& b) {
    if (!a.group) return a.coords - b.coords;
    const int m = static_cast<int>(a.coords.size());
    Vec out(2 * m);
    const Eigen::Matrix3d rel = a.group->real_matrix() * b.group->real_matrix().inverse();
    out.head(m) = lie::log_so3(rel);
    out.tail(m) = a.coords - b.coords;
    return out;
}

std::vector<AlgebraElement> basis_of(const lie::AlgebraPtr& alg) {
    std::vector<AlgebraElement> out;
    for (int i = 0; i < alg->dim(); ++i) {
        Vec e = Vec::Zero(alg->dim());
        e(i) = 1.0;
        out.push_back({alg, e});
    }
    return out;
}

}  // namespace

Vec infinitesimal_generator(const GroupAction& action, const AlgebraElement& xi, const StatePoint& p) {
    if (xi.algebra.get() != action.algebra.get())
        throw DimensionError("infinitesimal_generator: algebra mismatch");
    if (!action.space->on_space(p)) throw ConstraintViolation("infinitesimal_generator: point off space");
    if (action.generator) return action.generator(xi, p);
    const double h = action.fd_step;
    const StatePoint plus = action.act(lie::exponential({xi.algebra, h * xi.coeffs}), p);
    const StatePoint minus = action.act(lie::exponential({xi.algebra, -h * xi.coeffs}), p);
    return point_difference(plus, minus) / (2.0 * h);
}

namespace {

Mat generator_matrix(const GroupAction& action, const StatePoint& p) {
    const int n = action.space->tangent_rep_dim();
    const int d = action.algebra->dim();
    Mat g(n, d);
    for (int i = 0; i < d; ++i) {
        Vec e = Vec::Zero(d);
        e(i) = 1.0;
        g.col(i) = infinitesimal_generator(action, {action.algebra, e}, p);
    }
    return g;
}

}  // namespace

std::vector<AlgebraElement> isotropy_algebra_basis(const GroupAction& action, const StatePoint& p) {
    const Mat ker = linalg::null_space(generator_matrix(action, p));
    std::vector<AlgebraElement> out;
    for (int i = 0; i < ker.cols(); ++i) out.push_back({action.algebra, ker.col(i)});
    return out;
}

Mat orbit_tangent_basis(const GroupAction& action, const StatePoint& p) {
    return linalg::orthonormal_basis(generator_matrix(action, p));
}

ScalarField MomentMap::comoment(const AlgebraElement& xi) const {
    auto self = *this;
    ScalarField f;
    f.eval = [self, xi](const StatePoint& p) { return self.mu(p).pairing(xi); };
    return f;
}

MomentMap moment_from_potential(const ActionPtr& action, const OneForm& theta, std::mt19937_64& rng,
                                int samples) {
    // Invariance of θ: (Φ_g*θ)_p(v) = θ_{Φ_g(p)}(Φ_{g*}v) must equal θ_p(v).
    std::normal_distribution<double> dist(0.0, 1.0);
    const double h = action->fd_step;
    for (int s = 0; s < samples; ++s) {
        const StatePoint p = action->space->random_point(rng);
        Vec xi(action->algebra->dim());
        for (int i = 0; i < xi.size(); ++i) xi(i) = dist(rng);
        const GroupElement g = lie::exponential({action->algebra, xi});
        const Vec v = action->space->random_tangent(p, rng);
        auto mapped = [&](const StatePoint& q) { return action->act(g, q).coords; };
        const Vec pushed = pushforward_fd(mapped, p, v, h);
        const double pulled = theta(action->act(g, p), pushed);
        if (std::abs(pulled - theta(p, v)) > 1e-8 * (1.0 + std::abs(pulled)))
            throw InvarianceViolation("moment_from_potential: potential is not action-invariant");
    }

    MomentMap mm;
    mm.action = action;
    mm.mu = [action, theta](const StatePoint& p) {
        Vec coeffs(action->algebra->dim());
        for (int i = 0; i < coeffs.size(); ++i) {
            Vec e = Vec::Zero(coeffs.size());
            e(i) = 1.0;
            coeffs(i) = theta(p, infinitesimal_generator(*action, {action->algebra, e}, p));
        }
        return DualElement{action->algebra, coeffs};
    };
    return mm;
}

MomentMap cotangent_lift_moment(const ActionPtr& base, const SpacePtr& lifted_space) {
    const int n = base->space->ambient_dim();
    if (lifted_space->ambient_dim() != 2 * n)
        throw DimensionError("cotangent_lift_moment: lifted space must be R^{2n}");
    // Lifted action on R^{2n} = T*R^n: μ(q,p)(ξ) = ⟨p, ξ_Q(q)⟩.
    MomentMap mm;
    auto lifted_action = std::make_shared<GroupAction>();
    lifted_action->algebra = base->algebra;
    lifted_action->space = lifted_space;
    lifted_action->act = [base, n](const GroupElement& g, const StatePoint& p) {
        // Linear base action: lift acts by the same linear map on q and p.
        StatePoint q_conf = base->space->make_point(p.coords.head(n));
        StatePoint gq = base->act(g, q_conf);
        StatePoint p_conf = base->space->make_point(p.coords.tail(n));
        StatePoint gp = base->act(g, p_conf);
        StatePoint out = p;
        out.coords.head(n) = gq.coords;
        out.coords.tail(n) = gp.coords;
        return out;
    };
    mm.action = lifted_action;
    mm.mu = [base, n](const StatePoint& p) {
        const Vec q = p.coords.head(n), mom = p.coords.tail(n);
        Vec coeffs(base->algebra->dim());
        StatePoint q_conf = base->space->make_point(q);
        for (int i = 0; i < coeffs.size(); ++i) {
            Vec e = Vec::Zero(coeffs.size());
            e(i) = 1.0;
            coeffs(i) = mom.dot(infinitesimal_generator(*base, {base->algebra, e}, q_conf));
        }
        return DualElement{base->algebra, coeffs};
    };
    return mm;
}

ActionPtr left_translation_action(const SpacePtr& cotangent_space) {
    if (cotangent_space->kind() != phase::SpaceKind::CotangentGroup)
        throw UnsupportedOperation("left_translation_action: cotangent-group space required");
    auto a = std::make_shared<GroupAction>();
    a->algebra = cotangent_space->algebra();
    a->space = cotangent_space;
    a->act = [space = cotangent_space](const GroupElement& h, const StatePoint& p) {
        const DualElement alpha{space->algebra(), p.coords};
        return space->make_point(lie::multiply(h, *p.group), lie::coadjoint(h, alpha));
    };
    a->generator = [alg = cotangent_space->algebra()](const AlgebraElement& xi, const StatePoint& p) {
        const int m = alg->dim();
        Vec out(2 * m);
        out.head(m) = xi.coeffs;
        out.tail(m) = lie::coadjoint_generator(xi, {alg, p.coords}).coeffs;
        return out;
    };
    return a;
}

MomentMap left_translation_moment(const ActionPtr& lifted) {
    MomentMap mm;
    mm.action = lifted;
    mm.mu = [alg = lifted->algebra](const StatePoint& p) { return DualElement{alg, p.coords}; };
    return mm;
}

double check_moment_condition(const MomentMap& mm, const std::vector<StatePoint>& samples) {
    const auto& action = *mm.action;
    double worst = 0.0;
    for (const auto& p : samples)
        for (const auto& xi : basis_of(action.algebra)) {
            const Vec lhs = phase::hamiltonian_vf(action.space, mm.comoment(xi), p);
            const Vec rhs = infinitesimal_generator(action, xi, p);
            worst = std::max(worst, (lhs - rhs).lpNorm<Eigen::Infinity>());
        }
    return worst;
}

double check_equivariance(const MomentMap& mm, const std::vector<GroupElement>& groups,
                          const std::vector<StatePoint>& points) {
    const auto& action = *mm.action;
    double worst = 0.0;
    for (size_t k = 0; k < std::min(groups.size(), points.size()); ++k) {
        const DualElement lhs = mm(action.act(groups[k], points[k]));
        const DualElement rhs = lie::coadjoint(groups[k], mm(points[k]));
        worst = std::max(worst, (lhs.coeffs - rhs.coeffs).lpNorm<Eigen::Infinity>());
    }
    return worst;
}

double check_noether(const MomentMap& mm, const ScalarField& H, const StatePoint& p0, double T,
                     double dt) {
    const auto& action = *mm.action;
    // H must actually be a symmetry; spot-check before integrating.
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int s = 0; s < 8; ++s) {
        Vec xi(action.algebra->dim());
        for (int i = 0; i < xi.size(); ++i) xi(i) = 0.5 * dist(rng);
        const GroupElement g = lie::exponential({action.algebra, xi});
        const StatePoint p = s == 0 ? p0 : action.space->random_point(rng);
        const double moved = H.eval(action.act(g, p));
        const double here = H.eval(p);
        if (std::abs(moved - here) > 1e-8 * (1.0 + std::abs(here)))
            throw InvarianceViolation("check_noether: H is not invariant under the action");
    }
    const phase::Trajectory traj = phase::flow(action.space, H, p0, T, dt);
    const Vec mu0 = mm(p0).coeffs;
    double worst = 0.0;
    for (const auto& state : traj.states)
        worst = std::max(worst, (mm(state).coeffs - mu0).lpNorm<Eigen::Infinity>());
    return worst;
}

double check_comoment_antihom(const MomentMap& mm, const std::vector<StatePoint>& samples) {
    const auto& action = *mm.action;
    const auto basis = basis_of(action.algebra);
    double worst = 0.0;
    for (const auto& p : samples)
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = 0; j < basis.size(); ++j) {
                const ScalarField fi = mm.comoment(basis[i]);
                const ScalarField fj = mm.comoment(basis[j]);
                // {μ̂ξ, μ̂η} evaluated as dμ̂(η)(X_{μ̂(ξ)}).
                const Vec x = phase::hamiltonian_vf(action.space, fi, p);
                const double br = phase::gradient_of(fj, p).dot(x);
                const double rhs = mm(p).pairing(lie::bracket(basis[i], basis[j]));
                worst = std::max(worst, std::abs(br + rhs));
            }
    return worst;
}

// -- Built-in scenarios -----------------------------------------------------------

namespace {

Eigen::Vector3d head3(const Vec& v) { return v.head(3); }
Eigen::Vector3d tail3(const Vec& v) { return v.tail(3); }

ActionPtr translation_action_r6() {
    auto a = std::make_shared<GroupAction>();
    a->algebra = lie::LieAlgebra::translation(3);
    a->space = phase::PhaseSpace::standard_symplectic(3);
    a->act = [](const GroupElement& g, const StatePoint& p) {
        StatePoint out = p;
        out.coords.head(3) += g.angles;
        return out;
    };
    // The action (q,p) ↦ (q+a, p) has generator (a, 0).
    a->generator = [](const AlgebraElement& xi, const StatePoint&) {
        Vec v = Vec::Zero(6);
        v.head(3) = xi.coeffs;
        return v;
    };
    return a;
}

ActionPtr rotation_action_r6() {
    auto a = std::make_shared<GroupAction>();
    a->algebra = lie::LieAlgebra::so3();
    a->space = phase::PhaseSpace::standard_symplectic(3);
    a->act = [](const GroupElement& g, const StatePoint& p) {
        const Eigen::Matrix3d r = g.real_matrix();
        StatePoint out = p;
        out.coords.head(3) = r * head3(p.coords);
        out.coords.tail(3) = r * tail3(p.coords);
        return out;
    };
    a->generator = [](const AlgebraElement& xi, const StatePoint& p) {
        const Eigen::Vector3d w = xi.coeffs;
        Vec v(6);
        v.head(3) = w.cross(head3(p.coords));
        v.tail(3) = w.cross(tail3(p.coords));
        return v;
    };
    return a;
}

ActionPtr sphere_action() {
    auto a = std::make_shared<GroupAction>();
    a->algebra = lie::LieAlgebra::so3();
    a->space = phase::PhaseSpace::sphere2(1.0);
    a->act = [](const GroupElement& g, const StatePoint& p) {
        StatePoint out = p;
        out.coords = g.real_matrix() * p.coords;
        return out;
    };
    a->generator = [](const AlgebraElement& xi, const StatePoint& p) {
        return Vec(Eigen::Vector3d(xi.coeffs).cross(Eigen::Vector3d(p.coords)));
    };
    return a;
}

ActionPtr s2xs2_action() {
    auto a = std::make_shared<GroupAction>();
    a->algebra = lie::LieAlgebra::so3();
    auto s2 = phase::PhaseSpace::sphere2(1.0);
    a->space = phase::PhaseSpace::product({s2, s2});
    a->act = [](const GroupElement& g, const StatePoint& p) {
        const Eigen::Matrix3d r = g.real_matrix();
        StatePoint out = p;
        out.coords.head(3) = r * head3(p.coords);
        out.coords.tail(3) = r * tail3(p.coords);
        return out;
    };
    a->generator = [](const AlgebraElement& xi, const StatePoint& p) {
        const Eigen::Vector3d w = xi.coeffs;
        Vec v(6);
        v.head(3) = w.cross(head3(p.coords));
        v.tail(3) = w.cross(tail3(p.coords));
        return v;
    };
    return a;
}

ActionPtr harmonic_circle_action() {
    auto a = std::make_shared<GroupAction>();
    a->algebra = lie::LieAlgebra::translation(1);
    a->space = phase::PhaseSpace::standard_symplectic(2);
    // Exact harmonic flow: each (q_i, p_i) plane rotates by the group parameter.
    a->act = [](const GroupElement& g, const StatePoint& p) {
        const double t = g.angles(0);
        const double c = std::cos(t), s = std::sin(t);
        StatePoint out = p;
        for (int i = 0; i < 2; ++i) {
            const double q = p.coords(i), mom = p.coords(2 + i);
            out.coords(i) = q * c + mom * s;
            out.coords(2 + i) = mom * c - q * s;
        }
        return out;
    };
    a->generator = [](const AlgebraElement& xi, const StatePoint& p) {
        Vec v(4);
        v.head(2) = p.coords.tail(2);
        v.tail(2) = -p.coords.head(2);
        return Vec(xi.coeffs(0) * v);
    };
    return a;
}

ScalarField central_force_hamiltonian() {
    ScalarField h;
    h.eval = [](const StatePoint& p) {
        return 0.5 * tail3(p.coords).squaredNorm() + 1.0 / head3(p.coords).norm();
    };
    h.gradient = [](const StatePoint& p) {
        const Eigen::Vector3d q = head3(p.coords);
        Vec g(6);
        g.head(3) = -q / std::pow(q.norm(), 3);
        g.tail(3) = tail3(p.coords);
        return g;
    };
    return h;
}

ScalarField rigid_body_energy(const lie::AlgebraPtr& alg, const Eigen::Vector3d& inertia) {
    // Left-invariant kinetic energy: h(Ad*(g⁻¹)α) with h(m) = ½ Σ m_i²/I_i.
    ScalarField h;
    h.eval = [alg, inertia](const StatePoint& p) {
        const lie::DualElement body =
            lie::coadjoint(lie::inverse(*p.group), {alg, p.coords});
        double e = 0.0;
        for (int i = 0; i < 3; ++i) e += 0.5 * body.coeffs(i) * body.coeffs(i) / inertia(i);
        return e;
    };
    return h;
}

}  // namespace

BuiltinScenario builtin_scenario(const std::string& id) {
    BuiltinScenario sc;
    sc.id = id;
    if (id == "linear-momentum") {
        sc.action = translation_action_r6();
        sc.moment.action = sc.action;
        sc.moment.mu = [alg = sc.action->algebra](const StatePoint& p) {
            return DualElement{alg, p.coords.tail(3)};
        };
        ScalarField h;
        h.eval = [](const StatePoint& p) { return 0.5 * tail3(p.coords).squaredNorm(); };
        h.gradient = [](const StatePoint& p) {
            Vec g = Vec::Zero(6);
            g.tail(3) = tail3(p.coords);
            return g;
        };
        sc.invariant_hamiltonian = h;
        Vec x(6);
        x << 0.3, -0.2, 0.5, 1.0, 0.4, -0.3;
        sc.flow_start = sc.action->space->make_point(x);
    } else if (id == "angular-momentum") {
        sc.action = rotation_action_r6();
        sc.moment.action = sc.action;
        sc.moment.mu = [alg = sc.action->algebra](const StatePoint& p) {
            return DualElement{alg, head3(p.coords).cross(tail3(p.coords))};
        };
        sc.invariant_hamiltonian = central_force_hamiltonian();
        Vec x(6);
        x << 1.0, 0.0, 0.2, 0.0, 1.0, 0.1;
        sc.flow_start = sc.action->space->make_point(x);
    } else if (id == "sphere-so3") {
        sc.action = sphere_action();
        sc.moment.action = sc.action;
        sc.moment.mu = [alg = sc.action->algebra](const StatePoint& p) {
            return DualElement{alg, p.coords};
        };
        sc.flow_start = sc.action->space->make_point(Eigen::Vector3d(0, 0, 1));
    } else if (id == "s2xs2-diagonal") {
        sc.action = s2xs2_action();
        sc.moment.action = sc.action;
        sc.moment.mu = [alg = sc.action->algebra](const StatePoint& p) {
            return DualElement{alg, head3(p.coords) + tail3(p.coords)};
        };
        ScalarField h;  // rotation-invariant pair energy ⟨x, y⟩
        h.eval = [](const StatePoint& p) { return head3(p.coords).dot(tail3(p.coords)); };
        h.gradient = [](const StatePoint& p) {
            Vec g(6);
            g.head(3) = tail3(p.coords);
            g.tail(3) = head3(p.coords);
            return g;
        };
        sc.invariant_hamiltonian = h;
        Vec x(6);
        x << 1, 0, 0, 0, 0.6, 0.8;
        sc.flow_start = sc.action->space->make_point(x);
    } else if (id == "cotangent-left-translation") {
        auto space = phase::PhaseSpace::cotangent_group(lie::LieAlgebra::so3());
        sc.action = left_translation_action(space);
        sc.moment = left_translation_moment(sc.action);
        sc.invariant_hamiltonian = rigid_body_energy(space->algebra(), {1.0, 2.0, 3.0});
        sc.flow_start = space->make_point(lie::group_identity(space->algebra()),
                                          {space->algebra(), Eigen::Vector3d(0.4, 1.0, 0.2)});
    } else if (id == "hamiltonian-r-action") {
        sc.action = harmonic_circle_action();
        sc.moment.action = sc.action;
        sc.moment.mu = [alg = sc.action->algebra](const StatePoint& p) {
            Vec c(1);
            c(0) = 0.5 * p.coords.squaredNorm();
            return DualElement{alg, c};
        };
        ScalarField h;
        h.eval = [](const StatePoint& p) { return 0.5 * p.coords.squaredNorm(); };
        h.gradient = [](const StatePoint& p) { return Vec(p.coords); };
        sc.invariant_hamiltonian = h;
        Vec x(4);
        x << 1.0, 0.2, 0.3, -0.4;
        sc.flow_start = sc.action->space->make_point(x);
    } else {
        throw UnsupportedOperation("unknown scenario: " + id);
    }
    return sc;
}

std::vector<std::string> builtin_scenario_ids() {
    return {"linear-momentum",  "angular-momentum",           "sphere-so3",
            "s2xs2-diagonal",   "cotangent-left-translation", "hamiltonian-r-action"};
}

}  // namespace momenta::action
