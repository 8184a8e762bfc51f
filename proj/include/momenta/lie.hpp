#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "momenta/errors.hpp"

namespace momenta::lie {

class LieAlgebra;
using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

enum class GroupKind {
    SpecialOrthogonal,  // SO(n), real orthogonal, det 1
    SpecialUnitary,     // SU(n), unitary, det 1
    Unitary,            // U(n), unitary (u(2) has a center)
    Torus,              // angles mod 2π
    Translation,        // R^n, additive, no wrap
    Product,
};

/// Finite-dimensional real Lie algebra given by a basis and structure constants
/// [e_i, e_j] = Σ_k c_ijk e_k, with an optional matrix representation.
class LieAlgebra : public std::enable_shared_from_this<LieAlgebra> {
  public:
    int dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    GroupKind group_kind() const { return kind_; }

    double structure_constant(int i, int j, int k) const { return ad_[i](k, j); }

    /// Matrix of ad(e_i): column j holds the coefficients of [e_i, e_j].
    const Eigen::MatrixXd& ad_basis(int i) const { return ad_[i]; }

    /// Matrix of ad(ξ) = Σ ξ_i ad(e_i).
    Eigen::MatrixXd ad(const Eigen::VectorXd& xi) const;

    bool has_matrix_rep() const { return !reps_.empty(); }
    const Eigen::MatrixXcd& rep(int i) const { return reps_[i]; }
    int rep_size() const { return reps_.empty() ? 0 : static_cast<int>(reps_[0].rows()); }

    /// Σ ξ_i rep(e_i).
    Eigen::MatrixXcd represent(const Eigen::VectorXd& xi) const;

    /// Inverse of represent on the span of the basis reps (least squares through
    /// the Gram matrix of the real inner product Re tr(A†B)).
    Eigen::VectorXd coefficients_of(const Eigen::MatrixXcd& m) const;

    /// Indices of the designated Cartan subalgebra basis elements (maximal torus).
    const std::vector<int>& cartan_indices() const { return cartan_; }

    bool is_abelian() const;

    /// Product structure, empty for simple factors.
    const std::vector<AlgebraPtr>& factors() const { return factors_; }

    // Residuals used by the structural self-tests.
    double antisymmetry_residual() const;
    double jacobi_residual() const;
    double rep_bracket_residual() const;

    // Built-in algebras.
    static AlgebraPtr so3();
    static AlgebraPtr su2();
    static AlgebraPtr su3();
    static AlgebraPtr u2();
    static AlgebraPtr torus(int n);
    static AlgebraPtr translation(int n);
    static AlgebraPtr product(const AlgebraPtr& a, const AlgebraPtr& b);

    /// Lookup by name: "so3", "su2", "su3", "u2", "t1".."t9", "su2xsu2".
    static AlgebraPtr by_name(const std::string& name);

  private:
    LieAlgebra() = default;
    static std::shared_ptr<LieAlgebra> make(GroupKind kind, std::vector<std::string> labels,
                                            std::vector<Eigen::MatrixXcd> reps,
                                            std::vector<int> cartan);

    int dim_ = 0;
    GroupKind kind_ = GroupKind::Translation;
    std::vector<std::string> labels_;
    std::vector<Eigen::MatrixXd> ad_;       // ad_[i] = matrix of ad(e_i)
    std::vector<Eigen::MatrixXcd> reps_;    // optional, one per basis element
    std::vector<int> cartan_;
    std::vector<AlgebraPtr> factors_;
    Eigen::MatrixXd rep_gram_inv_;          // Gram inverse for coefficients_of
};

struct AlgebraElement {
    AlgebraPtr algebra;
    Eigen::VectorXd coeffs;

    AlgebraElement() = default;
    AlgebraElement(AlgebraPtr a, Eigen::VectorXd c);
};

struct DualElement {
    AlgebraPtr algebra;
    Eigen::VectorXd coeffs;  // coefficients in the dual basis

    DualElement() = default;
    DualElement(AlgebraPtr a, Eigen::VectorXd c);

    /// Pairing α(ξ) = Σ α_i ξ^i.
    double pairing(const AlgebraElement& xi) const;
};

/// Group element: matrix for the matrix kinds, parameter vector for Torus /
/// Translation, list of factors for Product.
struct GroupElement {
    GroupKind kind = GroupKind::Translation;
    AlgebraPtr algebra;                // the algebra this exponentiates from
    Eigen::MatrixXcd matrix;           // matrix kinds
    Eigen::VectorXd angles;            // Torus / Translation
    std::vector<GroupElement> parts;   // Product

    /// Real matrix accessor for SO(n); throws if the imaginary part is nonzero.
    Eigen::MatrixXd real_matrix() const;
};

// -- Operations ---------------------------------------------------------------

AlgebraElement bracket(const AlgebraElement& xi, const AlgebraElement& eta);

GroupElement group_identity(const AlgebraPtr& algebra);
GroupElement exponential(const AlgebraElement& xi);
GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& xi);
DualElement coadjoint(const GroupElement& g, const DualElement& alpha);

/// ξ_{g*}(α) = −α ∘ ad ξ.
DualElement coadjoint_generator(const AlgebraElement& xi, const DualElement& alpha);

/// B(ξ,η) = tr(ad ξ ∘ ad η).
double killing_form(const AlgebraElement& xi, const AlgebraElement& eta);

/// so(3) ↔ R³: X_ξ q = ξ × q.
Eigen::Matrix3d hat(const Eigen::Vector3d& xi);
Eigen::Vector3d unhat(const Eigen::Matrix3d& m);

/// Principal log of a rotation matrix (Rodrigues inverse).
Eigen::Vector3d log_so3(const Eigen::Matrix3d& r);

/// Deviation from the group-defining invariants (‖GᵀG − I‖, |det − 1|, ...).
double group_invariant_deviation(const GroupElement& g);

/// Polar projection to the nearest orthogonal/unitary matrix (det corrected).
GroupElement project_to_group(const GroupElement& g);

/// Scaling-and-squaring matrix exponential (used for kinds without closed form).
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& x);

}  // namespace momenta::lie
