#include "momenta/lie.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <complex>
#include <numbers>

namespace momenta::lie {

using std::numbers::pi;
using Cplx = std::complex<double>;

namespace {

double wrap_angle(double a) {
    double w = std::fmod(a, 2.0 * pi);
    if (w < 0) w += 2.0 * pi;
    return w;
}

Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return a * b - b * a;
}

double re_trace_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a.adjoint() * b).trace().real();
}

}  // namespace

// -- LieAlgebra construction --------------------------------------------------

std::shared_ptr<LieAlgebra> LieAlgebra::make(GroupKind kind, std::vector<std::string> labels,
                                             std::vector<Eigen::MatrixXcd> reps,
                                             std::vector<int> cartan) {
    auto alg = std::shared_ptr<LieAlgebra>(new LieAlgebra());
    alg->dim_ = static_cast<int>(labels.size());
    alg->kind_ = kind;
    alg->labels_ = std::move(labels);
    alg->reps_ = std::move(reps);
    alg->cartan_ = std::move(cartan);

    const int n = alg->dim_;
    if (!alg->reps_.empty()) {
        // Gram matrix of the real inner product Re tr(A†B) on the rep span.
        Eigen::MatrixXd gram(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) gram(i, j) = re_trace_product(alg->reps_[i], alg->reps_[j]);
        alg->rep_gram_inv_ = gram.inverse();

        // Structure constants read off the representation.
        alg->ad_.assign(n, Eigen::MatrixXd::Zero(n, n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Eigen::MatrixXcd br = commutator(alg->reps_[i], alg->reps_[j]);
                Eigen::VectorXd rhs(n);
                for (int k = 0; k < n; ++k) rhs(k) = re_trace_product(alg->reps_[k], br);
                const Eigen::VectorXd c = alg->rep_gram_inv_ * rhs;
                for (int k = 0; k < n; ++k) alg->ad_[i](k, j) = c(k);
            }
    } else {
        alg->ad_.assign(n, Eigen::MatrixXd::Zero(n, n));  // abelian
    }
    return alg;
}

Eigen::MatrixXd LieAlgebra::ad(const Eigen::VectorXd& xi) const {
    if (xi.size() != dim_) throw DimensionError("ad: coefficient length mismatch");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        if (xi(i) != 0.0) m += xi(i) * ad_[i];
    return m;
}

Eigen::MatrixXcd LieAlgebra::represent(const Eigen::VectorXd& xi) const {
    if (reps_.empty()) throw UnsupportedOperation("algebra has no matrix representation");
    if (xi.size() != dim_) throw DimensionError("represent: coefficient length mismatch");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(reps_[0].rows(), reps_[0].cols());
    for (int i = 0; i < dim_; ++i) m += Cplx(xi(i), 0.0) * reps_[i];
    return m;
}

Eigen::VectorXd LieAlgebra::coefficients_of(const Eigen::MatrixXcd& m) const {
    if (reps_.empty()) throw UnsupportedOperation("algebra has no matrix representation");
    Eigen::VectorXd rhs(dim_);
    for (int k = 0; k < dim_; ++k) rhs(k) = re_trace_product(reps_[k], m);
    return rep_gram_inv_ * rhs;
}

bool LieAlgebra::is_abelian() const {
    for (const auto& a : ad_)
        if (a.norm() > 0) return false;
    return true;
}

double LieAlgebra::antisymmetry_residual() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                worst = std::max(worst, std::abs(structure_constant(i, j, k) +
                                                 structure_constant(j, i, k)));
    return worst;
}

double LieAlgebra::jacobi_residual() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                for (int l = 0; l < dim_; ++l) {
                    double s = 0.0;
                    for (int m = 0; m < dim_; ++m)
                        s += structure_constant(i, j, m) * structure_constant(m, k, l) +
                             structure_constant(j, k, m) * structure_constant(m, i, l) +
                             structure_constant(k, i, m) * structure_constant(m, j, l);
                    worst = std::max(worst, std::abs(s));
                }
    return worst;
}

double LieAlgebra::rep_bracket_residual() const {
    if (reps_.empty()) return 0.0;
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(reps_[0].rows(), reps_[0].cols());
            for (int k = 0; k < dim_; ++k) expected += Cplx(structure_constant(i, j, k), 0.0) * reps_[k];
            worst = std::max(worst, (commutator(reps_[i], reps_[j]) - expected).norm());
        }
    return worst;
}

// -- Built-ins ----------------------------------------------------------------

AlgebraPtr LieAlgebra::so3() {
    static AlgebraPtr cached = [] {
        std::vector<Eigen::MatrixXcd> reps(3);
        const Eigen::Vector3d e1(1, 0, 0), e2(0, 1, 0), e3(0, 0, 1);
        reps[0] = hat(e1).cast<Cplx>();
        reps[1] = hat(e2).cast<Cplx>();
        reps[2] = hat(e3).cast<Cplx>();
        return make(GroupKind::SpecialOrthogonal, {"e1", "e2", "e3"}, reps, {2});
    }();
    return cached;
}

AlgebraPtr LieAlgebra::su2() {
    static AlgebraPtr cached = [] {
        // e_j = -(i/2) σ_j, so [e1,e2] = e3 cyclically (same constants as so(3)).
        const Cplx I(0, 1);
        Eigen::MatrixXcd s1(2, 2), s2(2, 2), s3(2, 2);
        s1 << 0, 1, 1, 0;
        s2 << 0, -I, I, 0;
        s3 << 1, 0, 0, -1;
        std::vector<Eigen::MatrixXcd> reps = {-0.5 * I * s1, -0.5 * I * s2, -0.5 * I * s3};
        return make(GroupKind::SpecialUnitary, {"e1", "e2", "e3"}, reps, {2});
    }();
    return cached;
}

AlgebraPtr LieAlgebra::su3() {
    static AlgebraPtr cached = [] {
        const Cplx I(0, 1);
        const double s3 = std::sqrt(3.0);
        std::vector<Eigen::MatrixXcd> lam(8, Eigen::MatrixXcd::Zero(3, 3));
        lam[0] << 0, 1, 0, 1, 0, 0, 0, 0, 0;
        lam[1] << 0, -I, 0, I, 0, 0, 0, 0, 0;
        lam[2] << 1, 0, 0, 0, -1, 0, 0, 0, 0;
        lam[3] << 0, 0, 1, 0, 0, 0, 1, 0, 0;
        lam[4] << 0, 0, -I, 0, 0, 0, I, 0, 0;
        lam[5] << 0, 0, 0, 0, 0, 1, 0, 1, 0;
        lam[6] << 0, 0, 0, 0, 0, -I, 0, I, 0;
        lam[7] << 1.0 / s3, 0, 0, 0, 1.0 / s3, 0, 0, 0, -2.0 / s3;
        std::vector<Eigen::MatrixXcd> reps(8);
        std::vector<std::string> labels(8);
        for (int a = 0; a < 8; ++a) {
            reps[a] = -0.5 * I * lam[a];
            labels[a] = "e" + std::to_string(a + 1);
        }
        return make(GroupKind::SpecialUnitary, labels, reps, {2, 7});
    }();
    return cached;
}

AlgebraPtr LieAlgebra::u2() {
    static AlgebraPtr cached = [] {
        const Cplx I(0, 1);
        Eigen::MatrixXcd s1(2, 2), s2(2, 2), s3(2, 2);
        s1 << 0, 1, 1, 0;
        s2 << 0, -I, I, 0;
        s3 << 1, 0, 0, -1;
        std::vector<Eigen::MatrixXcd> reps = {-0.5 * I * s1, -0.5 * I * s2, -0.5 * I * s3,
                                              0.5 * I * Eigen::MatrixXcd::Identity(2, 2)};
        return make(GroupKind::Unitary, {"e1", "e2", "e3", "z"}, reps, {2, 3});
    }();
    return cached;
}

AlgebraPtr LieAlgebra::torus(int n) {
    std::vector<std::string> labels(n);
    std::vector<int> cartan(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = "t" + std::to_string(i + 1);
        cartan[i] = i;
    }
    return make(GroupKind::Torus, labels, {}, cartan);
}

AlgebraPtr LieAlgebra::translation(int n) {
    std::vector<std::string> labels(n);
    std::vector<int> cartan(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = "a" + std::to_string(i + 1);
        cartan[i] = i;
    }
    return make(GroupKind::Translation, labels, {}, cartan);
}

AlgebraPtr LieAlgebra::product(const AlgebraPtr& a, const AlgebraPtr& b) {
    const int n = a->dim() + b->dim();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& l : a->basis_labels()) labels.push_back("L." + l);
    for (const auto& l : b->basis_labels()) labels.push_back("R." + l);

    std::vector<Eigen::MatrixXcd> reps;
    if (a->has_matrix_rep() && b->has_matrix_rep()) {
        const int ra = a->rep_size(), rb = b->rep_size();
        for (int i = 0; i < a->dim(); ++i) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(ra + rb, ra + rb);
            m.topLeftCorner(ra, ra) = a->rep(i);
            reps.push_back(m);
        }
        for (int i = 0; i < b->dim(); ++i) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(ra + rb, ra + rb);
            m.bottomRightCorner(rb, rb) = b->rep(i);
            reps.push_back(m);
        }
    }

    std::vector<int> cartan;
    for (int i : a->cartan_indices()) cartan.push_back(i);
    for (int i : b->cartan_indices()) cartan.push_back(i + a->dim());

    auto alg = make(GroupKind::Product, std::move(labels), std::move(reps), std::move(cartan));
    if (alg->reps_.empty()) {
        // No joint rep; assemble ad block-diagonally from the factor constants.
        alg->ad_.assign(n, Eigen::MatrixXd::Zero(n, n));
        for (int i = 0; i < a->dim(); ++i) alg->ad_[i].topLeftCorner(a->dim(), a->dim()) = a->ad_basis(i);
        for (int i = 0; i < b->dim(); ++i)
            alg->ad_[i + a->dim()].bottomRightCorner(b->dim(), b->dim()) = b->ad_basis(i);
    }
    alg->factors_ = {a, b};
    return alg;
}

AlgebraPtr LieAlgebra::by_name(const std::string& name) {
    auto simple = [](const std::string& s) -> AlgebraPtr {
        if (s == "so3") return so3();
        if (s == "su2") return su2();
        if (s == "su3") return su3();
        if (s == "u2") return u2();
        if (s.size() >= 2 && s[0] == 't') return torus(std::stoi(s.substr(1)));
        if (s.size() >= 2 && s[0] == 'r') return translation(std::stoi(s.substr(1)));
        throw UnsupportedOperation("unknown algebra: " + s);
    };
    auto cut = name.find('x');
    if (cut == std::string::npos) return simple(name);
    AlgebraPtr acc = simple(name.substr(0, cut));
    std::string rest = name.substr(cut + 1);
    while ((cut = rest.find('x')) != std::string::npos) {
        acc = product(acc, simple(rest.substr(0, cut)));
        rest = rest.substr(cut + 1);
    }
    return product(acc, simple(rest));
}

// -- Elements -----------------------------------------------------------------

AlgebraElement::AlgebraElement(AlgebraPtr a, Eigen::VectorXd c) : algebra(std::move(a)), coeffs(std::move(c)) {
    if (coeffs.size() != algebra->dim()) throw DimensionError("AlgebraElement: wrong coefficient length");
}

DualElement::DualElement(AlgebraPtr a, Eigen::VectorXd c) : algebra(std::move(a)), coeffs(std::move(c)) {
    if (coeffs.size() != algebra->dim()) throw DimensionError("DualElement: wrong coefficient length");
}

double DualElement::pairing(const AlgebraElement& xi) const {
    if (xi.algebra.get() != algebra.get()) throw DimensionError("pairing: algebra mismatch");
    return coeffs.dot(xi.coeffs);
}

Eigen::MatrixXd GroupElement::real_matrix() const {
    if (matrix.size() == 0) throw UnsupportedOperation("group element has no matrix");
    if (matrix.imag().norm() > 1e-12 * (1.0 + matrix.real().norm()))
        throw UnsupportedOperation("group element matrix is not real");
    return matrix.real();
}

// -- Operations ---------------------------------------------------------------

AlgebraElement bracket(const AlgebraElement& xi, const AlgebraElement& eta) {
    if (xi.algebra.get() != eta.algebra.get()) throw DimensionError("bracket: algebra mismatch");
    return {xi.algebra, xi.algebra->ad(xi.coeffs) * eta.coeffs};
}

GroupElement group_identity(const AlgebraPtr& algebra) {
    GroupElement g;
    g.kind = algebra->group_kind();
    g.algebra = algebra;
    switch (g.kind) {
        case GroupKind::Torus:
        case GroupKind::Translation:
            g.angles = Eigen::VectorXd::Zero(algebra->dim());
            break;
        case GroupKind::Product:
            for (const auto& f : algebra->factors()) g.parts.push_back(group_identity(f));
            break;
        default:
            g.matrix = Eigen::MatrixXcd::Identity(algebra->rep_size(), algebra->rep_size());
    }
    return g;
}

namespace {

Eigen::Matrix3d rodrigues(const Eigen::Vector3d& xi) {
    const double theta = xi.norm();
    const Eigen::Matrix3d k = hat(xi);
    double a, b;  // sinθ/θ, (1−cosθ)/θ²
    if (theta < 1e-8) {
        a = 1.0 - theta * theta / 6.0;
        b = 0.5 - theta * theta / 24.0;
    } else {
        a = std::sin(theta) / theta;
        b = (1.0 - std::cos(theta)) / (theta * theta);
    }
    return Eigen::Matrix3d::Identity() + a * k + b * k * k;
}

Eigen::MatrixXcd su2_exp(const LieAlgebra& alg, const Eigen::VectorXd& xi) {
    // X² = −(|ξ|/2)² I, so exp(X) = cos φ I + (sin φ / φ) X with φ = |ξ|/2.
    const double phi = 0.5 * xi.norm();
    const Eigen::MatrixXcd x = alg.represent(xi);
    const double s = phi < 1e-8 ? 1.0 - phi * phi / 6.0 : std::sin(phi) / phi;
    return std::cos(phi) * Eigen::MatrixXcd::Identity(2, 2) + s * x;
}

}  // namespace

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& x) {
    const double norm = x.cwiseAbs().rowwise().sum().maxCoeff();  // infinity norm
    int squarings = 0;
    Eigen::MatrixXcd scaled = x;
    if (norm > 0.25) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
        scaled /= std::pow(2.0, squarings);
    }
    const int n = static_cast<int>(x.rows());
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
    for (int k = 1; k <= 24; ++k) {
        term = term * scaled / static_cast<double>(k);
        result += term;
        if (term.norm() < 1e-20 * result.norm()) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

GroupElement exponential(const AlgebraElement& xi) {
    const auto& alg = *xi.algebra;
    GroupElement g;
    g.kind = alg.group_kind();
    g.algebra = xi.algebra;
    switch (g.kind) {
        case GroupKind::Translation:
            g.angles = xi.coeffs;
            return g;
        case GroupKind::Torus:
            g.angles = xi.coeffs.unaryExpr([](double a) { return wrap_angle(a); });
            return g;
        case GroupKind::SpecialOrthogonal:
            if (alg.dim() == 3) {
                g.matrix = rodrigues(Eigen::Vector3d(xi.coeffs)).cast<Cplx>();
                return g;
            }
            break;
        case GroupKind::SpecialUnitary:
            if (alg.rep_size() == 2) {
                g.matrix = su2_exp(alg, xi.coeffs);
                return g;
            }
            break;
        case GroupKind::Product: {
            int off = 0;
            for (const auto& f : xi.algebra->factors()) {
                g.parts.push_back(exponential({f, xi.coeffs.segment(off, f->dim())}));
                off += f->dim();
            }
            return g;
        }
        default:
            break;
    }
    if (!alg.has_matrix_rep()) throw UnsupportedOperation("exp: algebra has no matrix representation");
    g.matrix = expm(alg.represent(xi.coeffs));
    return g;
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
    if (g.kind != h.kind) throw DimensionError("multiply: group kind mismatch");
    GroupElement out = g;
    switch (g.kind) {
        case GroupKind::Translation:
            out.angles = g.angles + h.angles;
            break;
        case GroupKind::Torus:
            out.angles = (g.angles + h.angles).unaryExpr([](double a) { return wrap_angle(a); });
            break;
        case GroupKind::Product:
            for (size_t i = 0; i < g.parts.size(); ++i) out.parts[i] = multiply(g.parts[i], h.parts[i]);
            break;
        default:
            out.matrix = g.matrix * h.matrix;
    }
    return out;
}

GroupElement inverse(const GroupElement& g) {
    GroupElement out = g;
    switch (g.kind) {
        case GroupKind::Translation:
            out.angles = -g.angles;
            break;
        case GroupKind::Torus:
            out.angles = (-g.angles).unaryExpr([](double a) { return wrap_angle(a); });
            break;
        case GroupKind::Product:
            for (size_t i = 0; i < g.parts.size(); ++i) out.parts[i] = inverse(g.parts[i]);
            break;
        default:
            out.matrix = g.matrix.inverse();
    }
    return out;
}

AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& xi) {
    if (g.algebra.get() != xi.algebra.get()) throw DimensionError("adjoint: algebra mismatch");
    switch (g.kind) {
        case GroupKind::Translation:
        case GroupKind::Torus:
            return xi;
        case GroupKind::Product: {
            Eigen::VectorXd out(xi.coeffs.size());
            int off = 0;
            for (size_t i = 0; i < g.parts.size(); ++i) {
                const auto& f = xi.algebra->factors()[i];
                out.segment(off, f->dim()) =
                    adjoint(g.parts[i], {f, xi.coeffs.segment(off, f->dim())}).coeffs;
                off += f->dim();
            }
            return {xi.algebra, out};
        }
        default: {
            const Eigen::MatrixXcd conj = g.matrix * xi.algebra->represent(xi.coeffs) * g.matrix.inverse();
            return {xi.algebra, xi.algebra->coefficients_of(conj)};
        }
    }
}

DualElement coadjoint(const GroupElement& g, const DualElement& alpha) {
    if (g.algebra.get() != alpha.algebra.get()) throw DimensionError("coadjoint: algebra mismatch");
    const auto& alg = alpha.algebra;
    const GroupElement ginv = inverse(g);
    // (Ad*(g)α)_i = α(Ad(g⁻¹) e_i)
    Eigen::MatrixXd ad_ginv(alg->dim(), alg->dim());
    for (int i = 0; i < alg->dim(); ++i) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(alg->dim());
        e(i) = 1.0;
        ad_ginv.col(i) = adjoint(ginv, {alg, e}).coeffs;
    }
    return {alg, ad_ginv.transpose() * alpha.coeffs};
}

DualElement coadjoint_generator(const AlgebraElement& xi, const DualElement& alpha) {
    if (xi.algebra.get() != alpha.algebra.get()) throw DimensionError("coadjoint_generator: algebra mismatch");
    return {alpha.algebra, -xi.algebra->ad(xi.coeffs).transpose() * alpha.coeffs};
}

double killing_form(const AlgebraElement& xi, const AlgebraElement& eta) {
    if (xi.algebra.get() != eta.algebra.get()) throw DimensionError("killing_form: algebra mismatch");
    return (xi.algebra->ad(xi.coeffs) * eta.algebra->ad(eta.coeffs)).trace();
}

Eigen::Matrix3d hat(const Eigen::Vector3d& xi) {
    Eigen::Matrix3d m;
    m << 0, -xi(2), xi(1), xi(2), 0, -xi(0), -xi(1), xi(0), 0;
    return m;
}

Eigen::Vector3d unhat(const Eigen::Matrix3d& m) {
    return {m(2, 1), m(0, 2), m(1, 0)};
}

Eigen::Vector3d log_so3(const Eigen::Matrix3d& r) {
    const double c = std::clamp((r.trace() - 1.0) / 2.0, -1.0, 1.0);
    const double theta = std::acos(c);
    const Eigen::Matrix3d skew = 0.5 * (r - r.transpose());
    if (theta < 1e-8) return unhat(skew) * (1.0 + theta * theta / 6.0);
    if (theta > pi - 1e-6) {
        // Near the cut: axis from the dominant diagonal of (R + I)/2.
        Eigen::Matrix3d b = 0.5 * (r + Eigen::Matrix3d::Identity());
        int k;
        b.diagonal().maxCoeff(&k);
        Eigen::Vector3d axis = b.col(k) / std::sqrt(b(k, k));
        axis.normalize();
        // Fix the sign from the skew part when it is not degenerate.
        const Eigen::Vector3d s = unhat(skew);
        if (s.dot(axis) < 0) axis = -axis;
        return theta * axis;
    }
    return theta / std::sin(theta) * unhat(skew);
}

double group_invariant_deviation(const GroupElement& g) {
    switch (g.kind) {
        case GroupKind::Translation:
        case GroupKind::Torus:
            return 0.0;
        case GroupKind::Product: {
            double worst = 0.0;
            for (const auto& p : g.parts) worst = std::max(worst, group_invariant_deviation(p));
            return worst;
        }
        default: {
            const int n = static_cast<int>(g.matrix.rows());
            double dev = (g.matrix.adjoint() * g.matrix - Eigen::MatrixXcd::Identity(n, n)).norm();
            if (g.kind != GroupKind::Unitary)
                dev = std::max(dev, std::abs(g.matrix.determinant() - Cplx(1.0, 0.0)));
            return dev;
        }
    }
}

GroupElement project_to_group(const GroupElement& g) {
    GroupElement out = g;
    switch (g.kind) {
        case GroupKind::Translation:
            return out;
        case GroupKind::Torus:
            out.angles = g.angles.unaryExpr([](double a) { return wrap_angle(a); });
            return out;
        case GroupKind::Product:
            for (size_t i = 0; i < g.parts.size(); ++i) out.parts[i] = project_to_group(g.parts[i]);
            return out;
        default: {
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(g.matrix, Eigen::ComputeFullU | Eigen::ComputeFullV);
            Eigen::MatrixXcd w = svd.matrixU() * svd.matrixV().adjoint();
            const int n = static_cast<int>(w.rows());
            if (g.kind == GroupKind::SpecialOrthogonal || g.kind == GroupKind::SpecialUnitary) {
                const Cplx det = w.determinant();
                if (g.kind == GroupKind::SpecialOrthogonal && det.real() < 0) {
                    Eigen::MatrixXcd u = svd.matrixU();
                    u.col(n - 1) *= -1.0;
                    w = u * svd.matrixV().adjoint();
                } else if (g.kind == GroupKind::SpecialUnitary) {
                    w *= std::exp(Cplx(0, -std::arg(det) / n));
                }
            }
            out.matrix = w;
            return out;
        }
    }
}

}  // namespace momenta::lie
