#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "momenta/lie.hpp"
#include "momenta/phase_space.hpp"

namespace momenta::action {

using phase::Mat;
using phase::ScalarField;
using phase::SpacePtr;
using phase::StatePoint;
using phase::Vec;

/// Smooth group action on a phase space, with an optional analytic
/// infinitesimal-generator evaluator (finite differences otherwise).
struct GroupAction {
    lie::AlgebraPtr algebra;
    SpacePtr space;
    std::function<StatePoint(const lie::GroupElement&, const StatePoint&)> act;
    std::function<Vec(const lie::AlgebraElement&, const StatePoint&)> generator;
    double fd_step = 1e-6;
};

using ActionPtr = std::shared_ptr<const GroupAction>;

/// ξ_M(p) in tangent-representation coordinates; analytic evaluator if present,
/// else the central difference of t ↦ Φ_{exp(tξ)}(p).
Vec infinitesimal_generator(const GroupAction& action, const lie::AlgebraElement& xi,
                            const StatePoint& p);

/// Null-space basis of ξ ↦ ξ_M(p): the isotropy algebra g_p.
std::vector<lie::AlgebraElement> isotropy_algebra_basis(const GroupAction& action, const StatePoint& p);

/// Column-space basis of ξ ↦ ξ_M(p): T_p(G·p).
Mat orbit_tangent_basis(const GroupAction& action, const StatePoint& p);

struct MomentMap {
    ActionPtr action;
    std::function<lie::DualElement(const StatePoint&)> mu;

    lie::DualElement operator()(const StatePoint& p) const { return mu(p); }

    /// μ̂(ξ) as a scalar field.
    ScalarField comoment(const lie::AlgebraElement& xi) const;
};

/// One-form evaluator: (p, ambient tangent vector) → real.
using OneForm = std::function<double(const StatePoint&, const Vec&)>;

/// μ̂(ξ) = i_{ξ_M}θ for an action-invariant potential θ. Invariance is checked
/// at randomly drawn samples; violation throws InvarianceViolation.
MomentMap moment_from_potential(const ActionPtr& action, const OneForm& theta, std::mt19937_64& rng,
                                int samples = 10);

/// Moment map of the cotangent lift of a linear action on R^n to R^{2n}:
/// μ(q,p)(ξ) = ⟨p, ξ_Q(q)⟩.
MomentMap cotangent_lift_moment(const ActionPtr& base, const SpacePtr& lifted_space);

/// Lifted left-translation action of G on T*G (right trivialization):
/// h·(g,α) = (hg, Ad*(h)α), with moment map μ(g,α) = α.
ActionPtr left_translation_action(const SpacePtr& cotangent_space);
MomentMap left_translation_moment(const ActionPtr& lifted);

// -- Verification checks --------------------------------------------------------

/// max over samples and basis ξ of |Π(dμ̂(ξ))(p) − ξ_M(p)|.
double check_moment_condition(const MomentMap& mm, const std::vector<StatePoint>& samples);

/// max |μ(Φ_g(p)) − Ad*(g)μ(p)| over the supplied pairs.
double check_equivariance(const MomentMap& mm, const std::vector<lie::GroupElement>& groups,
                          const std::vector<StatePoint>& points);

/// max_t |μ(p_t) − μ(p_0)| along the flow of an invariant H.
/// Non-invariant H throws InvarianceViolation before integrating.
double check_noether(const MomentMap& mm, const ScalarField& H, const StatePoint& p0, double T,
                     double dt);

/// max over basis pairs and samples of |{μ̂(ξ),μ̂(η)} + μ̂([ξ,η])| with the
/// bracket evaluated as dμ̂(η)(X_{μ̂(ξ)}) (the orientation in which the
/// antihomomorphism identity holds).
double check_comoment_antihom(const MomentMap& mm, const std::vector<StatePoint>& samples);

/// Central-difference pushforward of an arbitrary coordinate map along v.
Vec pushforward_fd(const std::function<Vec(const StatePoint&)>& map, const StatePoint& p, const Vec& v,
                   double h);

// -- Built-in scenario registry ---------------------------------------------------

struct BuiltinScenario {
    std::string id;
    ActionPtr action;
    MomentMap moment;
    std::optional<ScalarField> invariant_hamiltonian;
    StatePoint flow_start;
};

BuiltinScenario builtin_scenario(const std::string& id);
std::vector<std::string> builtin_scenario_ids();

}  // namespace momenta::action
