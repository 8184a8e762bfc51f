#include "momenta/transversal.hpp"

#include <cmath>

#include "momenta/linalg.hpp"

namespace momenta::transversal {

namespace {

/// Tangent basis of Z's transversality complement: columns ξ ↦ ξ_{g*}(λ).
Mat coadjoint_orbit_tangent(const lie::AlgebraPtr& alg, const Vec& lambda) {
    const int d = alg->dim();
    Mat t(d, d);
    for (int i = 0; i < d; ++i) {
        Vec e = Vec::Zero(d);
        e(i) = 1.0;
        t.col(i) = lie::coadjoint_generator({alg, e}, {alg, lambda}).coeffs;
    }
    return linalg::orthonormal_basis(t);
}

void require_perfect_transversality(const CrossSectionSetup& setup) {
    const auto& alg = setup.mm.action->algebra;
    const Mat orbit = coadjoint_orbit_tangent(alg, setup.lambda);
    const Mat z = linalg::orthonormal_basis(setup.z_tangent);
    const int total = static_cast<int>(orbit.cols() + z.cols());
    if (total != alg->dim() || linalg::rank(linalg::subspace_sum(z, orbit)) != alg->dim())
        throw SetupError("cross-section: Z is not perfectly transverse to the coadjoint orbit");
}

std::vector<ScalarField> pulled_back_constraints(const CrossSectionSetup& setup) {
    std::vector<ScalarField> out;
    for (const auto& zc : setup.z_constraints) {
        ScalarField f;
        f.eval = [mm = setup.mm, zc](const StatePoint& q) { return zc(mm(q).coeffs); };
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

FrameData local_frame(const Submanifold& n, const StatePoint& p) {
    const auto& space = n.space;
    if (!space->on_space(p)) throw ConstraintViolation("local_frame: point off the ambient space");
    for (const auto& c : n.constraints)
        if (std::abs(c.eval(p)) > 1e-8) throw ConstraintViolation("local_frame: point off N");

    FrameData fd;
    fd.frame = space->tangent_basis(p);
    const int m = static_cast<int>(fd.frame.cols());
    fd.bivector = fd.frame.transpose() * space->bivector(p) * fd.frame;

    Mat jac(static_cast<int>(n.constraints.size()), m);
    for (size_t i = 0; i < n.constraints.size(); ++i)
        jac.row(i) = (fd.frame.transpose() * phase::gradient_of(n.constraints[i], p)).transpose();
    fd.submanifold_ok = linalg::rank(jac) == static_cast<int>(n.constraints.size());
    fd.tn = linalg::null_space(jac);
    fd.tn_ann = linalg::annihilator(fd.tn, m);
    return fd;
}

std::pair<Mat, Mat> tangent_and_annihilator(const Submanifold& n, const StatePoint& p) {
    const FrameData fd = local_frame(n, p);
    if (!fd.submanifold_ok) throw ConstraintViolation("tangent_and_annihilator: rank-deficient Jacobian");
    return {fd.tn, fd.tn_ann};
}

bool is_poisson_submanifold(const Submanifold& n, const StatePoint& p) {
    const FrameData fd = local_frame(n, p);
    for (int i = 0; i < fd.tn_ann.cols(); ++i) {
        const Vec image = fd.bivector * fd.tn_ann.col(i);
        if (linalg::residual_outside(fd.tn, image) > 1e-8 * (1.0 + image.norm())) return false;
    }
    return true;
}

TransversalReport is_poisson_transversal(const Submanifold& n, const StatePoint& p) {
    const FrameData fd = local_frame(n, p);
    const int m = static_cast<int>(fd.frame.cols());

    TransversalReport rep;
    rep.is_submanifold_ok = fd.submanifold_ok;
    rep.dim_m = m;
    rep.dim_tn = static_cast<int>(fd.tn.cols());

    const Mat pi_ann = fd.bivector * fd.tn_ann;
    rep.dim_pi_ann = linalg::rank(pi_ann);
    rep.dim_sum = linalg::rank(linalg::subspace_sum(fd.tn, pi_ann));

    const bool c1 = rep.dim_sum == m;                                       // TM = TN + Π(TN°)
    const bool c2 = c1 && rep.dim_tn + rep.dim_pi_ann == m;                 // direct sum
    const Mat preim = linalg::preimage(fd.bivector, fd.tn);                 // Π⁻¹(TN)
    const bool c3 = linalg::subspace_intersection(fd.tn_ann, preim).cols() == 0;
    const bool c4 = static_cast<int>(fd.tn_ann.cols() + preim.cols()) == m &&
                    linalg::rank(linalg::subspace_sum(fd.tn_ann, preim)) == m;

    rep.charac_agree = (c1 == c2) && (c2 == c3) && (c3 == c4);
    if (!rep.charac_agree)
        throw SetupError("is_poisson_transversal: the four characterizations disagree");
    rep.is_transversal = c1;
    rep.is_poisson_sub = is_poisson_submanifold(n, p);
    return rep;
}

namespace {

/// Split a covector (local frame coords) as λ = λ₁ + λ₂ with λ₁ ∈ Π⁻¹(TN),
/// λ₂ ∈ TN°, using the direct-sum characterization.
struct Splitter {
    Mat preim;    // Π⁻¹(TN) basis
    Mat ann;      // TN° basis
    Eigen::PartialPivLU<Mat> lu;

    explicit Splitter(const FrameData& fd) {
        preim = linalg::preimage(fd.bivector, fd.tn);
        ann = fd.tn_ann;
        const int m = static_cast<int>(fd.frame.cols());
        if (static_cast<int>(preim.cols() + ann.cols()) != m)
            throw SetupError("covector splitting needs a transversal point");
        Mat basis(m, m);
        if (preim.cols() > 0) basis.leftCols(preim.cols()) = preim;
        if (ann.cols() > 0) basis.rightCols(ann.cols()) = ann;
        lu = Eigen::PartialPivLU<Mat>(basis);
    }

    std::pair<Vec, Vec> split(const Vec& lambda) const {
        const Vec c = lu.solve(lambda);
        const Vec part1 = preim.cols() > 0 ? Vec(preim * c.head(preim.cols())) : Vec(Vec::Zero(lambda.size()));
        const Vec part2 = ann.cols() > 0 ? Vec(ann * c.tail(ann.cols())) : Vec(Vec::Zero(lambda.size()));
        return {part1, part2};
    }
};

}  // namespace

InducedBivector induced_bivector(const Submanifold& n, const StatePoint& p) {
    const TransversalReport rep = is_poisson_transversal(n, p);
    if (!rep.is_transversal) throw SetupError("induced_bivector: point is not a Poisson transversal");
    const FrameData fd = local_frame(n, p);
    const Splitter splitter(fd);

    const int k = static_cast<int>(fd.tn.cols());
    InducedBivector out;
    out.tn = fd.tn;
    out.matrix = Mat::Zero(k, k);
    std::vector<Vec> tau1(k);
    for (int a = 0; a < k; ++a) tau1[a] = splitter.split(fd.tn.col(a)).first;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) out.matrix(a, b) = tau1[a].dot(fd.bivector * tau1[b]);
    return out;
}

double splitting_residual(const Submanifold& n, const StatePoint& p, std::mt19937_64& rng, int trials) {
    const FrameData fd = local_frame(n, p);
    const Splitter splitter(fd);
    std::normal_distribution<double> dist(0.0, 1.0);
    const int m = static_cast<int>(fd.frame.cols());
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        Vec lambda(m), alpha(m);
        for (int i = 0; i < m; ++i) {
            lambda(i) = dist(rng);
            alpha(i) = dist(rng);
        }
        const auto [l1, l2] = splitter.split(lambda);
        const auto [a1, a2] = splitter.split(alpha);
        const double whole = lambda.dot(fd.bivector * alpha);
        const double parts = l1.dot(fd.bivector * a1) + l2.dot(fd.bivector * a2);
        worst = std::max(worst, std::abs(whole - parts));
    }
    return worst;
}

StatePoint project_to_submanifold(const Submanifold& n, StatePoint start, int max_iter) {
    const auto& space = n.space;
    const int ambient = space->ambient_dim();
    const int own = space->constraint_count();
    const int extra = static_cast<int>(n.constraints.size());

    auto residuals = [&](const StatePoint& q) {
        Vec c(own + extra);
        if (own > 0) c.head(own) = space->constraint_values(q);
        for (int i = 0; i < extra; ++i) c(own + i) = n.constraints[i].eval(q);
        return c;
    };

    Vec c = residuals(start);
    for (int iter = 0; iter < max_iter; ++iter) {
        if (c.lpNorm<Eigen::Infinity>() < 1e-12) return start;
        Mat jac(own + extra, ambient);
        if (own > 0) jac.topRows(own) = space->constraint_jacobian(start);
        for (int i = 0; i < extra; ++i)
            jac.row(own + i) = phase::gradient_of(n.constraints[i], start).transpose();
        const Vec step = jac.transpose() * (jac * jac.transpose()).ldlt().solve(c);
        double damping = 1.0;
        for (int half = 0; half < 12; ++half) {
            StatePoint trial = start;
            trial.coords -= damping * step;
            const Vec c_trial = residuals(trial);
            if (c_trial.norm() < c.norm()) {
                start = trial;
                c = c_trial;
                break;
            }
            damping *= 0.5;
            if (half == 11) throw SetupError("project_to_submanifold: damped Newton stalled");
        }
    }
    if (c.lpNorm<Eigen::Infinity>() > 1e-10)
        throw SetupError("project_to_submanifold: did not converge");
    return start;
}

double check_induced_jacobi(const Submanifold& n, const StatePoint& p, const ChartField& f,
                            const ChartField& g, const ChartField& h, double outer_step) {
    if (p.group) throw UnsupportedOperation("check_induced_jacobi: vector-kind spaces only");
    const FrameData fd0 = local_frame(n, p);
    const Mat chart_dirs = fd0.frame * fd0.tn;  // ambient directions of the chart axes
    const int k = static_cast<int>(fd0.tn.cols());

    auto chart_point = [&](const Vec& y) {
        StatePoint q = p;
        q.coords = p.coords + chart_dirs * y;
        return project_to_submanifold(n, q);
    };

    // Induced bivector components in the chart frame at y.
    auto chart_bivector = [&](const Vec& y) {
        const StatePoint q = chart_point(y);
        const FrameData fd = local_frame(n, q);
        const Splitter splitter(fd);
        // Chart frame vectors ∂q/∂y_a by central differences, in local coords.
        Mat fr(fd.frame.cols(), k);
        const double hs = 1e-6;
        for (int a = 0; a < k; ++a) {
            Vec ya = y, yb = y;
            ya(a) += hs;
            yb(a) -= hs;
            fr.col(a) = fd.frame.transpose() * (chart_point(ya).coords - chart_point(yb).coords) / (2 * hs);
        }
        const Mat dual = fr * (fr.transpose() * fr).inverse();  // τ_a(F_b) = δ_ab
        Mat pin(k, k);
        std::vector<Vec> tau1(k);
        for (int a = 0; a < k; ++a) tau1[a] = splitter.split(dual.col(a)).first;
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) pin(a, b) = tau1[a].dot(fd.bivector * tau1[b]);
        return pin;
    };

    auto fd_grad = [&](const ChartField& field, const Vec& y, double step) {
        Vec gr(k);
        for (int a = 0; a < k; ++a) {
            Vec ya = y, yb = y;
            ya(a) += step;
            yb(a) -= step;
            gr(a) = (field(ya) - field(yb)) / (2 * step);
        }
        return gr;
    };

    auto bracket = [&](const ChartField& a, const ChartField& b) {
        return [&, a, b](const Vec& y) {
            const Mat pin = chart_bivector(y);
            return fd_grad(a, y, 1e-6).dot(pin * fd_grad(b, y, 1e-6));
        };
    };

    const Vec y0 = Vec::Zero(k);
    auto nested = [&](const ChartField& a, const ChartField& bc_a, const ChartField& bc_b) {
        const ChartField inner = bracket(bc_a, bc_b);
        const Mat pin = chart_bivector(y0);
        return fd_grad(a, y0, 1e-6).dot(pin * fd_grad(inner, y0, outer_step));
    };
    return std::abs(nested(f, g, h) + nested(g, h, f) + nested(h, f, g));
}

CrossSectionReport check_symplectic_cross_section(const CrossSectionSetup& setup, const StatePoint& p,
                                                  int nearby, double radius, unsigned seed) {
    const auto& mm = setup.mm;
    const auto& space = mm.action->space;
    if (!space->has_symplectic_form())
        throw UnsupportedOperation("check_symplectic_cross_section: symplectic space required");
    if ((mm(p).coeffs - setup.lambda).lpNorm<Eigen::Infinity>() > 1e-9)
        throw SetupError("check_symplectic_cross_section: μ(p) ≠ λ");
    require_perfect_transversality(setup);

    const Submanifold n{space, pulled_back_constraints(setup)};
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);

    auto symplectic_at = [&](const StatePoint& q) {
        const Mat frame = space->tangent_basis(q);
        Mat dmu(setup.lambda.size(), frame.cols());
        auto coords = [&](const StatePoint& s) { return Vec(mm(s).coeffs); };
        for (int a = 0; a < frame.cols(); ++a)
            dmu.col(a) = action::pushforward_fd(coords, q, frame.col(a), 1e-6);
        const Mat w = linalg::preimage(dmu, setup.z_tangent);  // frame coords
        Mat omega(w.cols(), w.cols());
        for (int a = 0; a < w.cols(); ++a)
            for (int b = 0; b < w.cols(); ++b)
                omega(a, b) = space->symplectic_form(q, frame * w.col(a), frame * w.col(b));
        return linalg::rank(omega, 1e-6) == w.cols();
    };

    CrossSectionReport rep;
    StatePoint q = p;
    for (int s = 0; s <= nearby; ++s) {
        if (s > 0) {
            // Random step inside μ⁻¹(Z), then Newton back onto the constraints.
            const FrameData fd = local_frame(n, p);
            Vec c(fd.tn.cols());
            for (int i = 0; i < c.size(); ++i) c(i) = dist(rng);
            if (c.norm() > 0) c *= radius / c.norm();
            StatePoint moved = p;
            moved.coords = p.coords + fd.frame * (fd.tn * c);
            q = project_to_submanifold(n, moved);
        }
        ++rep.checked_points;
        if (symplectic_at(q)) ++rep.passes;
    }
    rep.all_pass = rep.passes == rep.checked_points;
    return rep;
}

CrossSectionReport check_poisson_cross_section(const CrossSectionSetup& setup, const StatePoint& p,
                                               int nearby, double radius, unsigned seed) {
    const auto& mm = setup.mm;
    const auto& space = mm.action->space;
    if ((mm(p).coeffs - setup.lambda).lpNorm<Eigen::Infinity>() > 1e-9)
        throw SetupError("check_poisson_cross_section: μ(p) ≠ λ");
    require_perfect_transversality(setup);

    const Submanifold n{space, pulled_back_constraints(setup)};
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);

    CrossSectionReport rep;
    StatePoint q = p;
    for (int s = 0; s <= nearby; ++s) {
        if (s > 0) {
            const FrameData fd = local_frame(n, p);
            Vec c(fd.tn.cols());
            for (int i = 0; i < c.size(); ++i) c(i) = dist(rng);
            if (c.norm() > 0) c *= radius / c.norm();
            StatePoint moved = p;
            moved.coords = p.coords + fd.frame * (fd.tn * c);
            q = project_to_submanifold(n, moved);
        }
        ++rep.checked_points;
        if (is_poisson_transversal(n, q).is_transversal) ++rep.passes;
    }
    rep.all_pass = rep.passes == rep.checked_points;
    return rep;
}

}  // namespace momenta::transversal
