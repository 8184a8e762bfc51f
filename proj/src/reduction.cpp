#include "momenta/reduction.hpp"

#include <cmath>

#include "momenta/linalg.hpp"

namespace momenta::reduction {

using lie::AlgebraElement;
using lie::DualElement;
using lie::GroupElement;

double kks_form(const DualElement& beta, const AlgebraElement& xi, const AlgebraElement& eta) {
    return -beta.pairing(lie::bracket(xi, eta));
}

Trajectory lie_poisson_flow(const lie::AlgebraPtr& algebra, const ScalarField& H,
                            const DualElement& alpha0, double T, double dt) {
    const SpacePtr space = phase::PhaseSpace::lie_poisson_dual(algebra);
    return phase::flow(space, H, space->make_point(alpha0.coeffs), T, dt);
}

namespace {

/// Finite-difference pushforward of μ over a tangent basis: columns = μ_* t_a.
Mat moment_pushforward(const action::MomentMap& mm, const StatePoint& p, const Mat& tangent,
                       double h = 1e-6) {
    Mat out(mm.action->algebra->dim(), tangent.cols());
    auto coords = [&](const StatePoint& q) { return Vec(mm(q).coeffs); };
    for (int a = 0; a < tangent.cols(); ++a)
        out.col(a) = action::pushforward_fd(coords, p, tangent.col(a), h);
    return out;
}

Mat generator_matrix(const action::GroupAction& action, const StatePoint& p) {
    const int d = action.algebra->dim();
    Mat g(action.space->tangent_rep_dim(), d);
    for (int i = 0; i < d; ++i) {
        Vec e = Vec::Zero(d);
        e(i) = 1.0;
        g.col(i) = action::infinitesimal_generator(action, {action.algebra, e}, p);
    }
    return g;
}

/// Basis of the coadjoint isotropy algebra g_α = {ξ : ξ_{g*}(α) = 0}.
Mat coadjoint_isotropy_basis(const lie::AlgebraPtr& alg, const DualElement& alpha) {
    const int d = alg->dim();
    Mat k(d, d);
    for (int i = 0; i < d; ++i) {
        Vec e = Vec::Zero(d);
        e(i) = 1.0;
        k.col(i) = lie::coadjoint_generator({alg, e}, alpha).coeffs;
    }
    return linalg::null_space(k);
}

/// Coordinate velocity of a stored trajectory by central differences
/// (one-sided second order at the ends). Group parts via log(g_{k+1} g_{k−1}⁻¹).
Vec trajectory_velocity(const Trajectory& traj, size_t k, double dt) {
    auto diff = [&](const StatePoint& a, const StatePoint& b) -> Vec {
        if (!a.group) return (a.coords - b.coords);
        const int m = static_cast<int>(a.coords.size());
        Vec out(2 * m);
        out.head(m) = lie::log_so3(a.group->real_matrix() * b.group->real_matrix().transpose());
        out.tail(m) = a.coords - b.coords;
        return out;
    };
    const size_t n = traj.size();
    if (k == 0) {
        // (−3 f0 + 4 f1 − f2)/(2dt) composed from pair differences
        return (4.0 * diff(traj.states[1], traj.states[0]) -
                diff(traj.states[2], traj.states[0])) /
               (2.0 * dt);
    }
    if (k == n - 1) {
        return (4.0 * diff(traj.states[n - 1], traj.states[n - 2]) -
                diff(traj.states[n - 1], traj.states[n - 3])) /
               (2.0 * dt);
    }
    return diff(traj.states[k + 1], traj.states[k - 1]) / (2.0 * dt);
}

}  // namespace

CleanLevelReport check_clean_level_kernel(const action::MomentMap& mm, const StatePoint& p) {
    const auto& act = *mm.action;
    if (!act.space->has_symplectic_form())
        throw UnsupportedOperation("check_clean_level_kernel: symplectic space required");

    const Mat tangent = act.space->tangent_basis(p);           // local columns
    const Mat dmu = moment_pushforward(mm, p, tangent);        // g*-valued
    const Mat ker_in_frame = linalg::null_space(dmu);          // coords in the tangent basis
    const Mat ker = tangent * ker_in_frame;

    const Mat gen = generator_matrix(act, p);
    const Mat orbit = linalg::orthonormal_basis(gen);
    const Mat isotropy = linalg::null_space(gen);

    CleanLevelReport rep;
    rep.dim_ker = static_cast<int>(ker.cols());
    rep.dim_orbit = static_cast<int>(orbit.cols());
    rep.dim_isotropy = static_cast<int>(isotropy.cols());
    rep.manifold_dim = act.space->manifold_dim();
    rep.dims_ok = rep.dim_ker + rep.dim_orbit == rep.manifold_dim;

    double worst = 0.0;
    for (int a = 0; a < ker.cols(); ++a)
        for (int b = 0; b < orbit.cols(); ++b)
            worst = std::max(worst, std::abs(act.space->symplectic_form(p, ker.col(a), orbit.col(b))));
    rep.omega_residual = worst;

    const Mat image = linalg::orthonormal_basis(dmu);
    rep.annihilator_residual = (isotropy.cols() > 0 && image.cols() > 0)
                                   ? (image.transpose() * isotropy).cwiseAbs().maxCoeff()
                                   : 0.0;
    return rep;
}

ReducedFormReport check_reduced_form_descends(const action::MomentMap& mm, const DualElement& alpha,
                                              const StatePoint& p) {
    const auto& act = *mm.action;
    if ((mm(p).coeffs - alpha.coeffs).lpNorm<Eigen::Infinity>() > 1e-6)
        throw ConstraintViolation("check_reduced_form_descends: p is not in the level set");

    const Mat tangent = act.space->tangent_basis(p);
    const Mat dmu = moment_pushforward(mm, p, tangent);
    const Mat level = tangent * linalg::null_space(dmu);  // T_p μ⁻¹(α), local coords

    // G_α-orbit directions at p.
    const Mat galpha = coadjoint_isotropy_basis(act.algebra, alpha);
    Mat orbit_dirs(act.space->tangent_rep_dim(), galpha.cols());
    for (int i = 0; i < galpha.cols(); ++i)
        orbit_dirs.col(i) = action::infinitesimal_generator(act, {act.algebra, galpha.col(i)}, p);
    const Mat orbit = linalg::orthonormal_basis(orbit_dirs);

    ReducedFormReport rep;
    rep.level_dim = static_cast<int>(level.cols());
    rep.orbit_dim = static_cast<int>(orbit.cols());

    double worst = 0.0;
    for (int a = 0; a < orbit.cols(); ++a)
        for (int b = 0; b < level.cols(); ++b)
            worst = std::max(worst, std::abs(act.space->symplectic_form(p, orbit.col(a), level.col(b))));
    rep.cross_residual = worst;

    Mat omega_level(level.cols(), level.cols());
    for (int a = 0; a < level.cols(); ++a)
        for (int b = 0; b < level.cols(); ++b)
            omega_level(a, b) = act.space->symplectic_form(p, level.col(a), level.col(b));
    rep.reduced_rank = linalg::rank(omega_level, 1e-6);
    rep.degeneracy_dim = rep.level_dim - rep.reduced_rank;
    rep.degeneracy_matches_orbit = rep.degeneracy_dim == rep.orbit_dim;
    return rep;
}

double check_pi_relatedness(const SpacePtr& full, const ScalarField& H,
                            const std::function<StatePoint(const StatePoint&)>& projection,
                            const SpacePtr& reduced, const ScalarField& h,
                            const std::vector<StatePoint>& samples, double fd_step) {
    for (const auto& p : samples) {
        const double hv = h.eval(projection(p));
        if (std::abs(H.eval(p) - hv) > 1e-9 * (1.0 + std::abs(hv)))
            throw SetupError("check_pi_relatedness: H does not descend through the projection");
    }
    double worst = 0.0;
    auto proj_coords = [&](const StatePoint& q) { return Vec(projection(q).coords); };
    for (const auto& p : samples) {
        const Vec xh = phase::hamiltonian_vf(full, H, p);
        const Vec pushed = action::pushforward_fd(proj_coords, p, xh, fd_step);
        const Vec reduced_field = phase::hamiltonian_vf(reduced, h, projection(p));
        worst = std::max(worst, (pushed - reduced_field).lpNorm<Eigen::Infinity>());
    }
    return worst;
}

ReconstructionResult reconstruct(const action::MomentMap& mm, const ScalarField& H,
                                 const Trajectory& beta, const DualElement& alpha,
                                 const GroupElement& g0, double solve_tolerance) {
    const auto& act = *mm.action;
    const auto& alg = act.algebra;
    const size_t n = beta.size();
    if (n < 3) throw IntegrationFailure("reconstruct: trajectory too short");
    const double dt = beta.times[1] - beta.times[0];

    ReconstructionResult out;
    out.level_drift = 0.0;
    for (const auto& b : beta.states)
        out.level_drift = std::max(out.level_drift, (mm(b).coeffs - alpha.coeffs).lpNorm<Eigen::Infinity>());
    if (out.level_drift > 1e-6)
        throw ConstraintViolation("reconstruct: β leaves the moment level set");

    const Mat galpha = coadjoint_isotropy_basis(alg, alpha);
    if (galpha.cols() == 0) throw SetupError("reconstruct: trivial g_α basis");

    // Algebraic stage: ξ(t)_M(β(t)) = X_H(β(t)) − β̇(t), least squares over g_α.
    out.solve_residual = 0.0;
    out.xi_curve.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        Mat cols(act.space->tangent_rep_dim(), galpha.cols());
        for (int i = 0; i < galpha.cols(); ++i)
            cols.col(i) = action::infinitesimal_generator(act, {alg, galpha.col(i)}, beta.states[k]);
        // Free G_α-action on the level set = full column rank of the generator block.
        if (linalg::rank(cols) < cols.cols())
            throw SetupError("reconstruct: generator matrix is rank deficient on the level set");
        const Vec rhs =
            phase::hamiltonian_vf(act.space, H, beta.states[k]) - trajectory_velocity(beta, k, dt);
        double res = 0.0;
        const Vec x = linalg::least_squares(cols, rhs, &res);
        out.solve_residual = std::max(out.solve_residual, res);
        out.xi_curve.push_back({alg, galpha * x});
    }
    if (out.solve_residual > solve_tolerance)
        throw IntegrationFailure("reconstruct: β is not a lift of a reduced motion");

    // Group stage: ġ = L_{g*}ξ, exponential midpoint update g_{k+1} = g_k exp(dt·ξ_mid).
    out.g_curve.reserve(n);
    out.g_curve.push_back(g0);
    for (size_t k = 0; k + 1 < n; ++k) {
        const Vec mid = 0.5 * (out.xi_curve[k].coeffs + out.xi_curve[k + 1].coeffs);
        GroupElement next = lie::multiply(out.g_curve.back(), lie::exponential({alg, dt * mid}));
        if (lie::group_invariant_deviation(next) > 1e-8) next = lie::project_to_group(next);
        out.g_curve.push_back(next);
    }

    // Assemble Γ(t) = Φ_{g(t)}(β(t)) and measure the Hamilton-equation residual.
    out.gamma.times = beta.times;
    out.gamma.states.reserve(n);
    for (size_t k = 0; k < n; ++k) out.gamma.states.push_back(act.act(out.g_curve[k], beta.states[k]));

    out.residual = 0.0;
    for (size_t k = 1; k + 1 < n; ++k) {
        const Vec vel = trajectory_velocity(out.gamma, k, dt);
        const Vec field = phase::hamiltonian_vf(act.space, H, out.gamma.states[k]);
        out.residual = std::max(out.residual, (vel - field).lpNorm<Eigen::Infinity>());
    }
    return out;
}

std::vector<bool> check_marsden_ratiu(const MarsdenRatiuInput& input,
                                      const std::vector<StatePoint>& samples) {
    const auto& space = input.space;
    std::vector<bool> verdicts;
    verdicts.reserve(samples.size());
    for (const auto& p : samples) {
        for (const auto& c : input.n_constraints)
            if (std::abs(c.eval(p)) > 1e-9)
                throw ConstraintViolation("check_marsden_ratiu: sample off N");

        const Mat frame = space->tangent_basis(p);  // local tangent frame of M
        const int m = static_cast<int>(frame.cols());

        Mat jac(static_cast<int>(input.n_constraints.size()), m);
        for (size_t i = 0; i < input.n_constraints.size(); ++i)
            jac.row(i) = (frame.transpose() * phase::gradient_of(input.n_constraints[i], p)).transpose();
        const Mat tn = linalg::null_space(jac);

        Mat e(m, 0);
        if (input.distribution) e = frame.transpose() * input.distribution(p);

        const Mat e_ann = linalg::annihilator(e, m);
        const Mat pi = frame.transpose() * space->bivector(p) * frame;
        const Mat pi_eann = pi * e_ann;

        const Mat tn_plus_e = linalg::subspace_sum(tn, e);
        verdicts.push_back(linalg::rank(linalg::subspace_sum(tn_plus_e, pi_eann)) ==
                           static_cast<int>(tn_plus_e.cols()));
    }
    return verdicts;
}

}  // namespace momenta::reduction
