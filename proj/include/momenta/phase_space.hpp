#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "momenta/errors.hpp"
#include "momenta/lie.hpp"

namespace momenta::phase {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

enum class SpaceKind {
    StandardSymplectic,  // R^{2n}, ω = dqⁱ∧dp_i
    Sphere2,             // S² ⊂ R³ with ω_x(u,v) = ⟨x, u×v⟩
    LiePoissonDual,      // g* with Π_ij(α) = −α([e_i,e_j])
    CotangentGroup,      // G×g*, right trivialization
    ConstantPoisson,     // R^n with a constant bivector matrix
    Product,
};

class PhaseSpace;
using SpacePtr = std::shared_ptr<const PhaseSpace>;

/// Point of a model phase space. Vector-like kinds live entirely in `coords`
/// (ambient coordinates); CotangentGroup carries the group element alongside
/// the dual coefficients in `coords`.
struct StatePoint {
    SpacePtr space;
    Vec coords;
    std::optional<lie::GroupElement> group;
};

/// Smooth function on a phase space, evaluated at ambient points. The optional
/// gradient is expressed in the space's tangent-representation coordinates;
/// absent, central differences with `fd_step` are used.
struct ScalarField {
    std::function<double(const StatePoint&)> eval;
    std::function<Vec(const StatePoint&)> gradient;
    double fd_step = 1e-6;

    double operator()(const StatePoint& p) const { return eval(p); }
};

struct Trajectory {
    std::vector<double> times;
    std::vector<StatePoint> states;

    size_t size() const { return times.size(); }
};

class PhaseSpace : public std::enable_shared_from_this<PhaseSpace> {
  public:
    virtual ~PhaseSpace() = default;

    SpaceKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    /// Length of StatePoint::coords.
    int ambient_dim() const { return ambient_dim_; }

    /// Length of tangent-representation vectors (= ambient for vector kinds,
    /// 2·dim g for CotangentGroup).
    int tangent_rep_dim() const { return tangent_rep_dim_; }

    int manifold_dim() const { return manifold_dim_; }

    const lie::AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<SpacePtr>& factors() const { return factors_; }

    virtual int constraint_count() const { return 0; }
    virtual Vec constraint_values(const StatePoint&) const { return Vec(0); }
    /// Rows = ambient gradients of the constraint functions.
    virtual Mat constraint_jacobian(const StatePoint&) const { return Mat(0, ambient_dim_); }

    /// Pull a nearby point back onto the space (normalize spheres, re-orthogonalize groups).
    virtual void project(StatePoint& p) const;
    bool on_space(const StatePoint& p, double tol = 1e-6) const;

    /// Columns: orthonormal basis of T_pM in tangent-representation coordinates.
    virtual Mat tangent_basis(const StatePoint& p) const;

    /// Bivector matrix Π at p in tangent-representation coordinates;
    /// {f,g} = (df)ᵀ Π (dg) and X_f = Π df.
    virtual Mat bivector(const StatePoint& p) const = 0;

    virtual bool has_symplectic_form() const { return false; }
    /// ω(u,v) for tangent-representation vectors (no tangency check here).
    virtual double symplectic_form(const StatePoint& p, const Vec& u, const Vec& v) const;
    /// Matrix Ω with ω(u,v) = uᵀ Ω v, when the form exists.
    virtual Mat symplectic_matrix(const StatePoint& p) const;

    /// Straight-line (or group-exponential) move by h·v; no constraint projection.
    virtual StatePoint retract(const StatePoint& p, const Vec& v, double h) const;
    StatePoint retract_project(const StatePoint& p, const Vec& v, double h) const;

    virtual StatePoint random_point(std::mt19937_64& rng) const;
    Vec random_tangent(const StatePoint& p, std::mt19937_64& rng) const;

    StatePoint make_point(const Vec& coords) const;
    StatePoint make_point(const lie::GroupElement& g, const lie::DualElement& alpha) const;

    // Factories.
    static SpacePtr standard_symplectic(int n);
    static SpacePtr sphere2(double radius);
    static SpacePtr lie_poisson_dual(const lie::AlgebraPtr& algebra);
    static SpacePtr cotangent_group(const lie::AlgebraPtr& algebra);
    static SpacePtr constant_poisson(const Mat& bivector);
    static SpacePtr product(const std::vector<SpacePtr>& factors);

  protected:
    SpaceKind kind_;
    std::string name_;
    int ambient_dim_ = 0;
    int tangent_rep_dim_ = 0;
    int manifold_dim_ = 0;
    lie::AlgebraPtr algebra_;
    std::vector<SpacePtr> factors_;
};

// -- Calculus helpers ----------------------------------------------------------

/// Gradient in tangent-representation coordinates (analytic if present, else
/// central differences through retract).
Vec gradient_of(const ScalarField& f, const StatePoint& p);

/// Directional derivative along tangent-representation vector v.
double directional_derivative(const ScalarField& f, const StatePoint& p, const Vec& v, double h);

// -- Operations ----------------------------------------------------------------

Mat bivector_at(const SpacePtr& space, const StatePoint& p);

double symplectic_form_at(const SpacePtr& space, const StatePoint& p, const Vec& u, const Vec& v);

Vec hamiltonian_vf(const SpacePtr& space, const ScalarField& H, const StatePoint& p);

double poisson_bracket(const SpacePtr& space, const ScalarField& f, const ScalarField& g,
                       const StatePoint& p);

/// Canonical bracket on T*G in the right trivialization. The sign of the
/// α([F_α,H_α]) term is the one consistent with {F,H} = −ω(X_F,X_H); the unit
/// tests record which sign that is.
double cotangent_group_bracket(const SpacePtr& space, const ScalarField& F, const ScalarField& H,
                               const StatePoint& p);

Trajectory flow(const SpacePtr& space, const ScalarField& H, const StatePoint& p0, double T,
                double dt);

/// |{f,{g,h}} + {g,{h,f}} + {h,{f,g}}| at p via nested finite differences.
double check_jacobi(const SpacePtr& space, const ScalarField& f, const ScalarField& g,
                    const ScalarField& h, const StatePoint& p, double outer_step = 1e-4);

/// CSV export: columns t, coords..., then one column per named extra field.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out,
                          const std::vector<std::pair<std::string, ScalarField>>& extras = {});

}  // namespace momenta::phase
