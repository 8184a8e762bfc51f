#include "momenta/phase_space.hpp"

#include <cmath>
#include <ostream>

#include "momenta/linalg.hpp"

namespace momenta::phase {

namespace {

Vec normal_vector(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = dist(rng);
    return v;
}

}  // namespace

// -- Base behaviour -------------------------------------------------------------

void PhaseSpace::project(StatePoint&) const {}

bool PhaseSpace::on_space(const StatePoint& p, double tol) const {
    if (constraint_count() > 0 && constraint_values(p).lpNorm<Eigen::Infinity>() > tol) return false;
    if (p.group && lie::group_invariant_deviation(*p.group) > std::max(tol, 1e-8)) return false;
    return true;
}

Mat PhaseSpace::tangent_basis(const StatePoint& p) const {
    if (constraint_count() == 0) return Mat::Identity(tangent_rep_dim_, tangent_rep_dim_);
    return linalg::null_space(constraint_jacobian(p));
}

double PhaseSpace::symplectic_form(const StatePoint& p, const Vec& u, const Vec& v) const {
    return u.dot(symplectic_matrix(p) * v);
}

Mat PhaseSpace::symplectic_matrix(const StatePoint&) const {
    throw UnsupportedOperation(name_ + ": no symplectic form");
}

StatePoint PhaseSpace::retract(const StatePoint& p, const Vec& v, double h) const {
    if (v.size() != tangent_rep_dim_) throw DimensionError("retract: tangent size mismatch");
    StatePoint q = p;
    q.coords = p.coords + h * v;
    return q;
}

StatePoint PhaseSpace::retract_project(const StatePoint& p, const Vec& v, double h) const {
    StatePoint q = retract(p, v, h);
    project(q);
    return q;
}

StatePoint PhaseSpace::random_point(std::mt19937_64& rng) const {
    StatePoint p = make_point(normal_vector(ambient_dim_, rng));
    project(p);
    return p;
}

Vec PhaseSpace::random_tangent(const StatePoint& p, std::mt19937_64& rng) const {
    const Vec raw = normal_vector(tangent_rep_dim_, rng);
    if (constraint_count() == 0) return raw;
    const Mat t = tangent_basis(p);
    return t * (t.transpose() * raw);
}

StatePoint PhaseSpace::make_point(const Vec& coords) const {
    if (coords.size() != ambient_dim_) throw DimensionError(name_ + ": wrong coordinate length");
    if (kind_ == SpaceKind::CotangentGroup)
        throw UnsupportedOperation("CotangentGroup point needs a group element");
    return {shared_from_this(), coords, std::nullopt};
}

StatePoint PhaseSpace::make_point(const lie::GroupElement& g, const lie::DualElement& alpha) const {
    if (kind_ != SpaceKind::CotangentGroup) throw UnsupportedOperation(name_ + ": not a cotangent group");
    if (alpha.algebra.get() != algebra_.get()) throw DimensionError("make_point: algebra mismatch");
    return {shared_from_this(), alpha.coeffs, g};
}

// -- Standard symplectic R^{2n} ---------------------------------------------------

namespace {

class StandardSpace final : public PhaseSpace {
  public:
    explicit StandardSpace(int n) : n_(n) {
        kind_ = SpaceKind::StandardSymplectic;
        name_ = "R^" + std::to_string(2 * n);
        ambient_dim_ = tangent_rep_dim_ = manifold_dim_ = 2 * n;
        j_ = Mat::Zero(2 * n, 2 * n);
        j_.topRightCorner(n, n) = Mat::Identity(n, n);
        j_.bottomLeftCorner(n, n) = -Mat::Identity(n, n);
    }

    Mat bivector(const StatePoint&) const override { return j_; }
    bool has_symplectic_form() const override { return true; }
    Mat symplectic_matrix(const StatePoint&) const override { return j_; }

  private:
    int n_;
    Mat j_;
};

// -- Constant-bivector Poisson R^n ------------------------------------------------

class ConstantPoissonSpace final : public PhaseSpace {
  public:
    explicit ConstantPoissonSpace(const Mat& p) : p_(p) {
        if (p.rows() != p.cols()) throw DimensionError("constant_poisson: square matrix required");
        if ((p + p.transpose()).norm() > 1e-12 * (1.0 + p.norm()))
            throw DimensionError("constant_poisson: bivector must be antisymmetric");
        kind_ = SpaceKind::ConstantPoisson;
        name_ = "Poisson R^" + std::to_string(p.rows());
        ambient_dim_ = tangent_rep_dim_ = manifold_dim_ = static_cast<int>(p.rows());
        symplectic_ = linalg::rank(p_) == p_.rows();
        if (symplectic_) omega_ = p_.transpose().inverse();  // Πᵀ Ω = I
    }

    Mat bivector(const StatePoint&) const override { return p_; }
    bool has_symplectic_form() const override { return symplectic_; }
    Mat symplectic_matrix(const StatePoint& p) const override {
        if (!symplectic_) return PhaseSpace::symplectic_matrix(p);
        return omega_;
    }

  private:
    Mat p_, omega_;
    bool symplectic_;
};

// -- Sphere S² ⊂ R³ ---------------------------------------------------------------

class SphereSpace final : public PhaseSpace {
  public:
    explicit SphereSpace(double radius) : r_(radius) {
        kind_ = SpaceKind::Sphere2;
        name_ = "S2(r=" + std::to_string(radius) + ")";
        ambient_dim_ = tangent_rep_dim_ = 3;
        manifold_dim_ = 2;
    }

    int constraint_count() const override { return 1; }
    Vec constraint_values(const StatePoint& p) const override {
        Vec c(1);
        c(0) = p.coords.squaredNorm() - r_ * r_;
        return c;
    }
    Mat constraint_jacobian(const StatePoint& p) const override {
        return 2.0 * p.coords.transpose();
    }

    void project(StatePoint& p) const override {
        const double n = p.coords.norm();
        if (n > 0) p.coords *= r_ / n;
    }

    Mat bivector(const StatePoint& p) const override {
        // Inverse of the area form on the tangent plane, zero on the normal.
        Vec x = p.coords;
        const double n = x.norm();
        if (n == 0) throw ConstraintViolation("sphere bivector at origin");
        x *= r_ / n;
        StatePoint q{shared_from_this(), x, std::nullopt};
        const Mat t = tangent_basis(q);  // 3×2
        Eigen::Matrix2d omega2;
        omega2 << 0.0, form(x, t.col(0), t.col(1)), form(x, t.col(1), t.col(0)), 0.0;
        const Eigen::Matrix2d p2 = omega2.transpose().inverse();
        return t * p2 * t.transpose();
    }

    bool has_symplectic_form() const override { return true; }
    double symplectic_form(const StatePoint& p, const Vec& u, const Vec& v) const override {
        return form(p.coords, u, v);
    }
    Mat symplectic_matrix(const StatePoint& p) const override {
        // ⟨x, u×v⟩ = −u·(x×v), so Ω = −hat(x).
        return -lie::hat(Eigen::Vector3d(p.coords));
    }

  private:
    double form(const Eigen::Vector3d& x, const Eigen::Vector3d& u, const Eigen::Vector3d& v) const {
        return x.dot(u.cross(v));
    }
    double r_;
};

// -- Lie-Poisson dual g* -----------------------------------------------------------

class LiePoissonSpace final : public PhaseSpace {
  public:
    explicit LiePoissonSpace(const lie::AlgebraPtr& algebra) {
        kind_ = SpaceKind::LiePoissonDual;
        algebra_ = algebra;
        name_ = "dual(g), dim " + std::to_string(algebra->dim());
        ambient_dim_ = tangent_rep_dim_ = manifold_dim_ = algebra->dim();
    }

    Mat bivector(const StatePoint& p) const override {
        const int n = ambient_dim_;
        Mat l(n, n);
        // L_ij = −α([e_i, e_j])
        for (int i = 0; i < n; ++i) l.row(i) = -(algebra_->ad_basis(i).transpose() * p.coords).transpose();
        return l;
    }
};

// -- Cotangent bundle T*G ≅ G×g* (right trivialization) -----------------------------

class CotangentGroupSpace final : public PhaseSpace {
  public:
    explicit CotangentGroupSpace(const lie::AlgebraPtr& algebra) {
        kind_ = SpaceKind::CotangentGroup;
        algebra_ = algebra;
        name_ = "T*G, dim g = " + std::to_string(algebra->dim());
        ambient_dim_ = algebra->dim();            // the α coefficients
        tangent_rep_dim_ = 2 * algebra->dim();    // (ξ, β)
        manifold_dim_ = 2 * algebra->dim();
    }

    Mat lie_poisson_block(const Vec& alpha) const {
        const int m = ambient_dim_;
        Mat l(m, m);
        for (int i = 0; i < m; ++i) l.row(i) = -(algebra_->ad_basis(i).transpose() * alpha).transpose();
        return l;
    }

    Mat bivector(const StatePoint& p) const override {
        const int m = ambient_dim_;
        Mat b = Mat::Zero(2 * m, 2 * m);
        b.topRightCorner(m, m) = Mat::Identity(m, m);
        b.bottomLeftCorner(m, m) = -Mat::Identity(m, m);
        b.bottomRightCorner(m, m) = -lie_poisson_block(p.coords);
        return b;
    }

    bool has_symplectic_form() const override { return true; }
    Mat symplectic_matrix(const StatePoint& p) const override {
        // ω(R_g*ξ+β, R_g*η+γ) = γ(ξ) − β(η) − α([ξ,η])
        const int m = ambient_dim_;
        Mat w = Mat::Zero(2 * m, 2 * m);
        w.topLeftCorner(m, m) = lie_poisson_block(p.coords);
        w.topRightCorner(m, m) = Mat::Identity(m, m);
        w.bottomLeftCorner(m, m) = -Mat::Identity(m, m);
        return w;
    }

    StatePoint retract(const StatePoint& p, const Vec& v, double h) const override {
        const int m = ambient_dim_;
        if (v.size() != 2 * m) throw DimensionError("retract: tangent size mismatch");
        StatePoint q = p;
        q.coords = p.coords + h * v.tail(m);
        q.group = lie::multiply(lie::exponential({algebra_, h * v.head(m)}), *p.group);
        return q;
    }

    void project(StatePoint& p) const override {
        if (p.group && lie::group_invariant_deviation(*p.group) > 1e-8)
            p.group = lie::project_to_group(*p.group);
    }

    StatePoint random_point(std::mt19937_64& rng) const override {
        const int m = ambient_dim_;
        const Vec xi = normal_vector(m, rng);
        const Vec alpha = normal_vector(m, rng);
        return {shared_from_this(), alpha, lie::exponential({algebra_, xi})};
    }
};

// -- Product space -------------------------------------------------------------------

class ProductSpace final : public PhaseSpace {
  public:
    explicit ProductSpace(const std::vector<SpacePtr>& factors) {
        kind_ = SpaceKind::Product;
        factors_ = factors;
        name_ = "product";
        for (const auto& f : factors) {
            if (f->kind() == SpaceKind::CotangentGroup)
                throw UnsupportedOperation("products of cotangent groups are not supported");
            offsets_.push_back(ambient_dim_);
            ambient_dim_ += f->ambient_dim();
            manifold_dim_ += f->manifold_dim();
            constraints_ += f->constraint_count();
        }
        tangent_rep_dim_ = ambient_dim_;
    }

    int constraint_count() const override { return constraints_; }

    Vec constraint_values(const StatePoint& p) const override {
        Vec out(constraints_);
        int row = 0;
        for_each_factor(p, [&](const SpacePtr& f, const StatePoint& q, int) {
            const Vec c = f->constraint_values(q);
            out.segment(row, c.size()) = c;
            row += static_cast<int>(c.size());
        });
        return out;
    }

    Mat constraint_jacobian(const StatePoint& p) const override {
        Mat out = Mat::Zero(constraints_, ambient_dim_);
        int row = 0;
        for_each_factor(p, [&](const SpacePtr& f, const StatePoint& q, int off) {
            const Mat j = f->constraint_jacobian(q);
            out.block(row, off, j.rows(), j.cols()) = j;
            row += static_cast<int>(j.rows());
        });
        return out;
    }

    void project(StatePoint& p) const override {
        for (size_t i = 0; i < factors_.size(); ++i) {
            StatePoint q = slice(p, static_cast<int>(i));
            factors_[i]->project(q);
            p.coords.segment(offsets_[i], factors_[i]->ambient_dim()) = q.coords;
        }
    }

    Mat bivector(const StatePoint& p) const override {
        Mat out = Mat::Zero(ambient_dim_, ambient_dim_);
        for_each_factor(p, [&](const SpacePtr& f, const StatePoint& q, int off) {
            out.block(off, off, f->ambient_dim(), f->ambient_dim()) = f->bivector(q);
        });
        return out;
    }

    bool has_symplectic_form() const override {
        for (const auto& f : factors_)
            if (!f->has_symplectic_form()) return false;
        return true;
    }

    Mat symplectic_matrix(const StatePoint& p) const override {
        Mat out = Mat::Zero(ambient_dim_, ambient_dim_);
        for_each_factor(p, [&](const SpacePtr& f, const StatePoint& q, int off) {
            out.block(off, off, f->ambient_dim(), f->ambient_dim()) = f->symplectic_matrix(q);
        });
        return out;
    }

    StatePoint random_point(std::mt19937_64& rng) const override {
        Vec coords(ambient_dim_);
        for (size_t i = 0; i < factors_.size(); ++i)
            coords.segment(offsets_[i], factors_[i]->ambient_dim()) = factors_[i]->random_point(rng).coords;
        return {shared_from_this(), coords, std::nullopt};
    }

    StatePoint slice(const StatePoint& p, int i) const {
        return {factors_[i], p.coords.segment(offsets_[i], factors_[i]->ambient_dim()), std::nullopt};
    }

  private:
    template <class F>
    void for_each_factor(const StatePoint& p, F&& fn) const {
        for (size_t i = 0; i < factors_.size(); ++i)
            fn(factors_[i], slice(p, static_cast<int>(i)), offsets_[i]);
    }

    std::vector<int> offsets_;
    int constraints_ = 0;
};

}  // namespace

// -- Factories ---------------------------------------------------------------------

SpacePtr PhaseSpace::standard_symplectic(int n) { return std::make_shared<StandardSpace>(n); }
SpacePtr PhaseSpace::sphere2(double radius) { return std::make_shared<SphereSpace>(radius); }
SpacePtr PhaseSpace::lie_poisson_dual(const lie::AlgebraPtr& a) { return std::make_shared<LiePoissonSpace>(a); }
SpacePtr PhaseSpace::cotangent_group(const lie::AlgebraPtr& a) { return std::make_shared<CotangentGroupSpace>(a); }
SpacePtr PhaseSpace::constant_poisson(const Mat& p) { return std::make_shared<ConstantPoissonSpace>(p); }
SpacePtr PhaseSpace::product(const std::vector<SpacePtr>& f) { return std::make_shared<ProductSpace>(f); }

// -- Calculus ----------------------------------------------------------------------

Vec gradient_of(const ScalarField& f, const StatePoint& p) {
    if (f.gradient) return f.gradient(p);
    const auto& space = *p.space;
    const int n = space.tangent_rep_dim();
    Vec g(n);
    Vec dir = Vec::Zero(n);
    for (int i = 0; i < n; ++i) {
        dir(i) = 1.0;
        g(i) = (f.eval(space.retract(p, dir, f.fd_step)) - f.eval(space.retract(p, dir, -f.fd_step))) /
               (2.0 * f.fd_step);
        dir(i) = 0.0;
    }
    return g;
}

double directional_derivative(const ScalarField& f, const StatePoint& p, const Vec& v, double h) {
    const auto& space = *p.space;
    return (f.eval(space.retract(p, v, h)) - f.eval(space.retract(p, v, -h))) / (2.0 * h);
}

// -- Operations ----------------------------------------------------------------------

Mat bivector_at(const SpacePtr& space, const StatePoint& p) {
    if (!space->on_space(p)) throw ConstraintViolation(space->name() + ": point off the space");
    return space->bivector(p);
}

double symplectic_form_at(const SpacePtr& space, const StatePoint& p, const Vec& u, const Vec& v) {
    if (!space->has_symplectic_form())
        throw UnsupportedOperation(space->name() + ": no symplectic form");
    if (!space->on_space(p)) throw ConstraintViolation(space->name() + ": point off the space");
    if (space->constraint_count() > 0) {
        const Mat j = space->constraint_jacobian(p);
        const double scale = 1.0 + std::max(u.norm(), v.norm());
        if ((j * u).lpNorm<Eigen::Infinity>() > 1e-8 * scale ||
            (j * v).lpNorm<Eigen::Infinity>() > 1e-8 * scale)
            throw TangencyError(space->name() + ": input not tangent at p");
    }
    return space->symplectic_form(p, u, v);
}

Vec hamiltonian_vf(const SpacePtr& space, const ScalarField& H, const StatePoint& p) {
    if (!space->on_space(p)) throw ConstraintViolation(space->name() + ": point off the space");
    return space->bivector(p) * gradient_of(H, p);
}

double poisson_bracket(const SpacePtr& space, const ScalarField& f, const ScalarField& g,
                       const StatePoint& p) {
    if (!space->on_space(p)) throw ConstraintViolation(space->name() + ": point off the space");
    return gradient_of(f, p).dot(space->bivector(p) * gradient_of(g, p));
}

double cotangent_group_bracket(const SpacePtr& space, const ScalarField& F, const ScalarField& H,
                               const StatePoint& p) {
    if (space->kind() != SpaceKind::CotangentGroup)
        throw UnsupportedOperation("cotangent_group_bracket: wrong space kind");
    if (!space->on_space(p)) throw ConstraintViolation("point off the space");
    const int m = space->ambient_dim();
    const Vec df = gradient_of(F, p), dh = gradient_of(H, p);
    const Vec fg = df.head(m), fa = df.tail(m);
    const Vec hg = dh.head(m), ha = dh.tail(m);
    // {F,H} = H_g(R_g* F_α) − F_g(R_g* H_α) − α([F_α, H_α]); the minus sign on the
    // last term is the one consistent with {F,H} = −ω(X_F, X_H).
    const double alpha_term = p.coords.dot(space->algebra()->ad(fa) * ha);
    return hg.dot(fa) - fg.dot(ha) - alpha_term;
}

namespace {

// dexp⁻¹_σ(v) ≈ v − ½[σ,v] + 1/12 [σ,[σ,v]]; enough for a fourth-order step.
Vec dexpinv(const lie::AlgebraPtr& alg, const Vec& sigma, const Vec& v) {
    const Mat ad = alg->ad(sigma);
    return v - 0.5 * (ad * v) + (1.0 / 12.0) * (ad * (ad * v));
}

StatePoint rk4_vector_step(const SpacePtr& space, const ScalarField& H, const StatePoint& p, double dt) {
    auto field = [&](const StatePoint& q) -> Vec {
        StatePoint r = q;
        space->project(r);
        return space->bivector(r) * gradient_of(H, r);
    };
    const Vec k1 = field(p);
    const Vec k2 = field(space->retract(p, k1, dt / 2));
    const Vec k3 = field(space->retract(p, k2, dt / 2));
    const Vec k4 = field(space->retract(p, k3, dt));
    StatePoint out = space->retract(p, (k1 + 2 * k2 + 2 * k3 + k4) / 6.0, dt);
    space->project(out);
    return out;
}

// RK4 in exponential coordinates for the group factor of T*G.
StatePoint rk4_cotangent_step(const SpacePtr& space, const ScalarField& H, const StatePoint& p, double dt) {
    const auto& alg = space->algebra();
    const int m = space->ambient_dim();
    auto field = [&](const Vec& y) {  // y = (σ, Δα)
        StatePoint q = p;
        q.coords = p.coords + y.tail(m);
        q.group = lie::multiply(lie::exponential({alg, y.head(m)}), *p.group);
        const Vec x = space->bivector(q) * gradient_of(H, q);
        Vec out(2 * m);
        out.head(m) = dexpinv(alg, y.head(m), x.head(m));
        out.tail(m) = x.tail(m);
        return out;
    };
    const Vec zero = Vec::Zero(2 * m);
    const Vec k1 = field(zero);
    const Vec k2 = field(dt / 2 * k1);
    const Vec k3 = field(dt / 2 * k2);
    const Vec k4 = field(dt * k3);
    const Vec y = dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
    StatePoint out = p;
    out.coords = p.coords + y.tail(m);
    out.group = lie::multiply(lie::exponential({alg, y.head(m)}), *p.group);
    space->project(out);
    return out;
}

}  // namespace

Trajectory flow(const SpacePtr& space, const ScalarField& H, const StatePoint& p0, double T, double dt) {
    if (dt <= 0) throw IntegrationFailure("flow: dt must be positive");
    if (!space->on_space(p0)) throw ConstraintViolation("flow: initial point off the space");
    // Fixed steps of size dt, with one shortened final step so that the
    // trajectory ends exactly at T.
    const int steps = static_cast<int>(std::floor(T / dt + 1e-9));
    const double remainder = T - steps * dt;
    Trajectory traj;
    traj.times.reserve(steps + 2);
    traj.states.reserve(steps + 2);
    traj.times.push_back(0.0);
    traj.states.push_back(p0);
    StatePoint p = p0;
    const bool cotangent = space->kind() == SpaceKind::CotangentGroup;
    auto advance = [&](double h, double t) {
        p = cotangent ? rk4_cotangent_step(space, H, p, h) : rk4_vector_step(space, H, p, h);
        if (space->constraint_count() > 0 &&
            space->constraint_values(p).lpNorm<Eigen::Infinity>() > 1e-4)
            throw IntegrationFailure("flow: constraint drift above 1e-4 after projection");
        traj.times.push_back(t);
        traj.states.push_back(p);
    };
    for (int k = 1; k <= steps; ++k) advance(dt, k * dt);
    if (remainder > 1e-12) advance(remainder, T);
    return traj;
}

double check_jacobi(const SpacePtr& space, const ScalarField& f, const ScalarField& g,
                    const ScalarField& h, const StatePoint& p, double outer_step) {
    // The nested differentiation steps off constrained spaces; extend the
    // inner bracket by projection (constant along the normal directions, so
    // the tangential derivatives the bivector consumes are unchanged).
    auto bracket_field = [&](const ScalarField& a, const ScalarField& b) {
        ScalarField out;
        out.eval = [space, a, b](const StatePoint& q) {
            StatePoint r = q;
            space->project(r);
            return poisson_bracket(space, a, b, r);
        };
        out.fd_step = outer_step;
        return out;
    };
    const double term1 = poisson_bracket(space, f, bracket_field(g, h), p);
    const double term2 = poisson_bracket(space, g, bracket_field(h, f), p);
    const double term3 = poisson_bracket(space, h, bracket_field(f, g), p);
    return std::abs(term1 + term2 + term3);
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out,
                          const std::vector<std::pair<std::string, ScalarField>>& extras) {
    out << "t";
    if (!traj.states.empty())
        for (int i = 0; i < traj.states.front().coords.size(); ++i) out << ",x" << i + 1;
    for (const auto& [name, field] : extras) out << "," << name;
    out << "\n";
    char buf[32];
    for (size_t k = 0; k < traj.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.15g", traj.times[k]);
        out << buf;
        for (int i = 0; i < traj.states[k].coords.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.15g", traj.states[k].coords(i));
            out << "," << buf;
        }
        for (const auto& [name, field] : extras) {
            std::snprintf(buf, sizeof buf, "%.15g", field.eval(traj.states[k]));
            out << "," << buf;
        }
        out << "\n";
    }
}

}  // namespace momenta::phase
