#pragma once

#include <functional>
#include <random>
#include <vector>

#include "momenta/action.hpp"
#include "momenta/phase_space.hpp"

namespace momenta::transversal {

using phase::Mat;
using phase::ScalarField;
using phase::SpacePtr;
using phase::StatePoint;
using phase::Vec;

/// Submanifold N of a phase space, cut out by extra scalar constraints.
struct Submanifold {
    SpacePtr space;
    std::vector<ScalarField> constraints;
};

/// Everything expressed in the orthonormal tangent frame of the ambient space
/// at p (m columns); all subsequent subspace arithmetic happens in R^m.
struct FrameData {
    Mat frame;     // tangent_rep_dim × m
    Mat bivector;  // m × m
    Mat tn;        // basis of TN
    Mat tn_ann;    // basis of TN°
    bool submanifold_ok;  // constraint Jacobian has full row rank
};

FrameData local_frame(const Submanifold& n, const StatePoint& p);

/// Bases of TN and TN° in the local frame.
std::pair<Mat, Mat> tangent_and_annihilator(const Submanifold& n, const StatePoint& p);

/// Π(T*M|_N) ⊆ TN at p.
bool is_poisson_submanifold(const Submanifold& n, const StatePoint& p);

struct TransversalReport {
    bool is_submanifold_ok = false;
    bool is_poisson_sub = false;
    bool is_transversal = false;
    int dim_tn = 0;
    int dim_pi_ann = 0;   // dim Π(TN°)
    int dim_sum = 0;      // dim (TN + Π(TN°))
    int dim_m = 0;
    bool charac_agree = false;
};

/// Evaluates all four characterizations of a Poisson transversal and asserts
/// their agreement (disagreement throws — it signals a linear-algebra bug).
TransversalReport is_poisson_transversal(const Submanifold& n, const StatePoint& p);

struct InducedBivector {
    Mat tn;      // TN basis used (local-frame coordinates)
    Mat matrix;  // Π_N on that basis
};

/// Induced bivector via the splitting T*M = TN° ⊕ Π⁻¹(TN); requires a
/// transversal point.
InducedBivector induced_bivector(const Submanifold& n, const StatePoint& p);

/// max |Π(λ,α) − Π_N(λ₁,α₁) − V(λ₂,α₂)| over random covector pairs.
double splitting_residual(const Submanifold& n, const StatePoint& p, std::mt19937_64& rng,
                          int trials = 20);

/// Function on graph-chart coordinates y ∈ R^k over TN.
using ChartField = std::function<double(const Vec&)>;

/// Cyclic Jacobi sum of the induced bracket at the chart origin, by nested
/// finite differences over a local parametrization of N.
double check_induced_jacobi(const Submanifold& n, const StatePoint& p, const ChartField& f,
                            const ChartField& g, const ChartField& h, double outer_step = 1e-4);

/// Newton-project a nearby ambient point onto the space + extra constraints.
StatePoint project_to_submanifold(const Submanifold& n, StatePoint start, int max_iter = 50);

/// A slice Z ⊂ g* through λ, given by affine constraints with constant tangent.
struct CrossSectionSetup {
    action::MomentMap mm;
    std::vector<std::function<double(const Vec&)>> z_constraints;  // on g* coordinates
    Mat z_tangent;  // basis of T_λ Z (constant, Z affine)
    Vec lambda;     // g* coordinates
};

struct CrossSectionReport {
    int checked_points = 0;
    int passes = 0;
    bool all_pass = false;
};

/// Guillemin-Sternberg check: W = μ_*⁻¹(T_λZ) is a symplectic subspace at p
/// and at sampled nearby points of μ⁻¹(Z).
CrossSectionReport check_symplectic_cross_section(const CrossSectionSetup& setup, const StatePoint& p,
                                                  int nearby = 20, double radius = 0.05,
                                                  unsigned seed = 42);

/// Poisson version: μ⁻¹(Z) is a Poisson transversal at p and nearby samples.
CrossSectionReport check_poisson_cross_section(const CrossSectionSetup& setup, const StatePoint& p,
                                               int nearby = 20, double radius = 0.05,
                                               unsigned seed = 42);

}  // namespace momenta::transversal
