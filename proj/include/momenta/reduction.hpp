#pragma once

#include <functional>
#include <vector>

#include "momenta/action.hpp"
#include "momenta/lie.hpp"
#include "momenta/phase_space.hpp"

namespace momenta::reduction {

using phase::Mat;
using phase::ScalarField;
using phase::SpacePtr;
using phase::StatePoint;
using phase::Trajectory;
using phase::Vec;

/// Kirillov-Kostant-Souriau form on a coadjoint orbit: ω_β(ξ_{g*}, η_{g*}) = −β([ξ,η]).
double kks_form(const lie::DualElement& beta, const lie::AlgebraElement& xi,
                const lie::AlgebraElement& eta);

/// Integrate α̇ determined by the Lie-Poisson structure on g*.
Trajectory lie_poisson_flow(const lie::AlgebraPtr& algebra, const ScalarField& H,
                            const lie::DualElement& alpha0, double T, double dt);

struct CleanLevelReport {
    int dim_ker;              // dim ker μ_*(p)
    int dim_orbit;            // dim g_M(p)
    int dim_isotropy;         // dim g_p
    int manifold_dim;
    double omega_residual;        // max |ω(ker μ_*, g_M(p))|
    double annihilator_residual;  // max |⟨im μ_*, g_p⟩|
    bool dims_ok;                 // dim ker + dim orbit == dim M
};

/// Numerical version of ker μ_* = g_M(p)^⊥, im μ_* = g_p°.
CleanLevelReport check_clean_level_kernel(const action::MomentMap& mm, const StatePoint& p);

struct ReducedFormReport {
    int level_dim;       // dim T_p μ⁻¹(α)
    int orbit_dim;       // dim T_p(G_α·p)
    int degeneracy_dim;  // kernel dimension of i*ω on the level tangent
    int reduced_rank;    // rank of i*ω on the level tangent
    double cross_residual;  // max |ω(u,v)|, u in G_α-orbit directions, v in level tangent
    bool degeneracy_matches_orbit;
};

/// Degeneracy structure of i*ω on μ⁻¹(α) at p (Marsden-Weinstein descent).
ReducedFormReport check_reduced_form_descends(const action::MomentMap& mm,
                                              const lie::DualElement& alpha, const StatePoint& p);

/// max |π_* X_H(p) − X_h(π(p))| over the samples, with finite-difference π_*.
/// Requires H = h∘π at the samples (residual < 1e-9), else SetupError.
double check_pi_relatedness(const SpacePtr& full, const ScalarField& H,
                            const std::function<StatePoint(const StatePoint&)>& projection,
                            const SpacePtr& reduced, const ScalarField& h,
                            const std::vector<StatePoint>& samples, double fd_step = 1e-5);

struct ReconstructionResult {
    std::vector<lie::AlgebraElement> xi_curve;
    std::vector<lie::GroupElement> g_curve;
    Trajectory gamma;       // Γ(t) = Φ_{g(t)}(β(t))
    double residual;        // max |Γ̇ − X_H(Γ)| by central differences
    double solve_residual;  // worst least-squares residual of ξ(t)_M(β) = X_H(β) − β̇
    double level_drift;     // max |μ(β(t)) − α|
};

/// Lifted-motion reconstruction: solve ξ(t)_M(β(t)) = X_H(β(t)) − β̇(t) over a
/// basis of g_α, integrate ġ = L_{g*}ξ with exponential midpoint steps, and
/// assemble Γ = Φ_g(β). The algebraic solve must succeed to solve_tolerance
/// (the theorem guarantees exact solvability; at step dt the finite-difference
/// β̇ carries an O(dt²) truncation floor).
ReconstructionResult reconstruct(const action::MomentMap& mm, const ScalarField& H,
                                 const Trajectory& beta, const lie::DualElement& alpha,
                                 const lie::GroupElement& g0, double solve_tolerance = 1e-6);

struct MarsdenRatiuInput {
    SpacePtr space;
    std::vector<ScalarField> n_constraints;                   // defining N (may be empty: N = M)
    std::function<Mat(const StatePoint&)> distribution;       // E spanning columns; null for E = 0
};

/// Π(E°) ⊆ TN + E per sample, by rank comparison in the local tangent frame.
std::vector<bool> check_marsden_ratiu(const MarsdenRatiuInput& input,
                                      const std::vector<StatePoint>& samples);

}  // namespace momenta::reduction
