#pragma once

#include <Eigen/Dense>
#include <map>
#include <random>
#include <vector>

#include "momenta/action.hpp"
#include "momenta/lie.hpp"

namespace momenta::roots {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Root decomposition of a compact algebra: simultaneous eigenstructure of the
/// Cartan adjoint action on g_C. Roots are stored as real functionals on t
/// (the root divided by the imaginary unit), in coordinates on the designated
/// Cartan basis.
struct RootSystemData {
    lie::AlgebraPtr algebra;
    std::vector<int> cartan_indices;          // which basis elements span t
    Mat center_basis;                         // dim × k, basis of z in algebra coordinates
    std::vector<Vec> roots;                   // one r-vector per root
    std::vector<Eigen::VectorXcd> root_vectors;  // matching eigenvectors in g_C
    std::vector<int> simple;                  // indices into roots
    Mat killing_t;       // Killing form restricted to the Cartan basis
    Mat chamber_metric;  // positive-definite dual pairing matrix on t*
    int center_dim = 0;

    int rank() const { return static_cast<int>(cartan_indices.size()); }

    /// ⟨λ, β⟩ for covectors on t in Cartan-dual coordinates.
    double pair(const Vec& lambda, const Vec& beta) const {
        return lambda.dot(chamber_metric * beta);
    }

    /// Embed a covector on t into g* (zero on the root-space directions).
    Vec embed_in_dual(const Vec& lambda) const;

    /// Restriction of a g*-covector to t.
    Vec restrict_to_t(const Vec& dual_coeffs) const;
};

RootSystemData root_decomposition(const lie::AlgebraPtr& algebra);

struct ChamberResult {
    bool member;
    double margin;  // min over simple roots of ⟨λ, α⟩
};

ChamberResult chamber_membership(const RootSystemData& rsd, const Vec& lambda);

/// Face of the fundamental chamber: the subset Σ₀ of simple roots whose
/// pairings vanish.
struct Face {
    std::vector<int> zero_set;  // sorted indices into rsd.simple
};

Face face_of(const RootSystemData& rsd, const Vec& lambda);

/// σ ≤ τ (σ contained in the closure of τ) ⟺ Σ₀(τ) ⊆ Σ₀(σ).
bool face_leq(const Face& sigma, const Face& tau);

/// All 2^|Σ| faces.
std::vector<Face> all_faces(const RootSystemData& rsd);

/// A point in the relative interior of the face (zero z*-component).
Vec sample_in_face(const RootSystemData& rsd, const Face& face, std::mt19937_64& rng);

struct FaceIsotropy {
    int dim;                  // real dimension of g_λ, λ in the face interior
    std::vector<int> delta0;  // root indices with support inside Σ₀
    Mat basis;                // algebra-coordinate basis of the isotropy algebra
    int null_space_dim;       // numerical cross-validation result
};

/// Combinatorial isotropy algebra t ⊕ (root pairs over Σ₀), cross-validated
/// against the null space of ξ ↦ −λ∘ad ξ at sampled λ; mismatch throws.
FaceIsotropy isotropy_algebra_of_face(const RootSystemData& rsd, const Face& face);

/// Derived subalgebra: span of pairwise brackets iterated to a fixed point.
/// Throws if the input columns do not span a closed subalgebra.
Mat commutator_subalgebra(const lie::AlgebraPtr& algebra, const Mat& basis);

/// Membership in the natural slice S_σ, tested on chamber points only: λ lies
/// in the union of the faces τ with σ ≤ τ (the G_σ sweep is not materialized).
bool natural_slice_contains(const RootSystemData& rsd, const Face& sigma, const Vec& lambda);

struct FaceClassification {
    // zero-set key → indices of the classified values
    std::map<std::vector<int>, std::vector<int>> buckets;
    // zero-set key → dim [g_σ, g_σ]
    std::map<std::vector<int>, int> commutator_dims;
};

/// Partition dual values (g*-coordinates) by the face of their t*-restriction.
/// Values outside the chamber throw SetupError naming the offenders.
FaceClassification classify_values(const RootSystemData& rsd, const std::vector<Vec>& dual_values);

/// Same partition for the moment values of sampled states.
FaceClassification classify_moment_samples(const RootSystemData& rsd, const action::MomentMap& mm,
                                           const std::vector<phase::StatePoint>& points);

}  // namespace momenta::roots
