#include "momenta/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "momenta/errors.hpp"
#include "momenta/linalg.hpp"

namespace momenta::roots {

namespace {

constexpr double kTol = 1e-8;

bool same_root(const Vec& a, const Vec& b) {
    return (a - b).lpNorm<Eigen::Infinity>() < kTol;
}

}  // namespace

Vec RootSystemData::embed_in_dual(const Vec& lambda) const {
    Vec out = Vec::Zero(algebra->dim());
    for (size_t i = 0; i < cartan_indices.size(); ++i) out(cartan_indices[i]) = lambda(i);
    return out;
}

Vec RootSystemData::restrict_to_t(const Vec& dual_coeffs) const {
    Vec out(rank());
    for (size_t i = 0; i < cartan_indices.size(); ++i) out(i) = dual_coeffs(cartan_indices[i]);
    return out;
}

RootSystemData root_decomposition(const lie::AlgebraPtr& algebra) {
    RootSystemData rsd;
    rsd.algebra = algebra;
    rsd.cartan_indices = algebra->cartan_indices();
    const int dim = algebra->dim();
    const int r = rsd.rank();

    // Cartan basis elements must commute.
    for (int a : rsd.cartan_indices)
        for (int b : rsd.cartan_indices) {
            Vec ea = Vec::Zero(dim), eb = Vec::Zero(dim);
            ea(a) = 1.0;
            eb(b) = 1.0;
            if ((algebra->ad(ea) * eb).norm() > 1e-12)
                throw SetupError("root_decomposition: designated Cartan basis does not commute");
        }

    // Center z = joint kernel of ad.
    Mat stacked(dim * dim, dim);
    for (int i = 0; i < dim; ++i) {
        Vec e = Vec::Zero(dim);
        e(i) = 1.0;
        const Mat adi = algebra->ad(e);
        stacked.col(i) = Eigen::Map<const Vec>(adi.data(), dim * dim);
    }
    rsd.center_basis = linalg::null_space(stacked);
    rsd.center_dim = static_cast<int>(rsd.center_basis.cols());

    // Simultaneous eigenstructure of ad t_C from a generic fixed-seed combination.
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> unif(0.3, 1.7);
    std::vector<Mat> cartan_ad(r);
    for (int i = 0; i < r; ++i) {
        Vec e = Vec::Zero(dim);
        e(rsd.cartan_indices[i]) = 1.0;
        cartan_ad[i] = algebra->ad(e);
    }
    Mat combo = Mat::Zero(dim, dim);
    for (int i = 0; i < r; ++i) combo += unif(rng) * cartan_ad[i];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo.cast<std::complex<double>>());
    if (solver.info() != Eigen::Success) throw SetupError("root_decomposition: eigensolver failed");

    const double ad_scale = std::max(1.0, combo.norm());
    for (int c = 0; c < dim; ++c) {
        Eigen::VectorXcd v = solver.eigenvectors().col(c);
        v /= v.norm();
        Vec alpha(r);
        bool is_root = false;
        for (int i = 0; i < r; ++i) {
            const std::complex<double> lam = v.dot(cartan_ad[i].cast<std::complex<double>>() * v);
            if ((cartan_ad[i].cast<std::complex<double>>() * v - lam * v).norm() > kTol * ad_scale)
                throw SetupError("root_decomposition: eigenvalue clustering ambiguity");
            if (std::abs(lam.real()) > kTol * ad_scale)
                throw SetupError("root_decomposition: non-imaginary root eigenvalue");
            alpha(i) = lam.imag();  // store α/i
            if (std::abs(alpha(i)) > kTol) is_root = true;
        }
        if (is_root) {
            rsd.roots.push_back(alpha);
            rsd.root_vectors.push_back(v);
        }
    }

    // Decomposition completeness and ± pairing.
    if (static_cast<int>(rsd.roots.size()) + r != dim)
        throw SetupError("root_decomposition: decomposition is not complete");
    for (const auto& a : rsd.roots) {
        bool paired = false;
        for (const auto& b : rsd.roots)
            if (same_root(a, Vec(-b))) paired = true;
        if (!paired) throw SetupError("root_decomposition: roots do not come in ± pairs");
    }

    // Killing form on t and the positive-definite chamber pairing. The stored
    // extension uses the negative Euclidean form on the center basis (matching
    // the Killing sign on [g,g]); the dual pairing uses its negative.
    rsd.killing_t = Mat::Zero(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            rsd.killing_t(i, j) = (cartan_ad[i] * cartan_ad[j]).trace();
    Mat z_in_t = Mat::Zero(r, rsd.center_dim);
    for (int k = 0; k < rsd.center_dim; ++k)
        for (int i = 0; i < r; ++i) z_in_t(i, k) = rsd.center_basis(rsd.cartan_indices[i], k);
    z_in_t = linalg::orthonormal_basis(z_in_t);
    const Mat extended = rsd.killing_t - z_in_t * z_in_t.transpose();
    rsd.chamber_metric = (-extended).inverse();

    // Simple roots: positives under a generic functional, minus decomposables.
    if (!rsd.roots.empty()) {
        std::vector<int> positives;
        Vec h(r);
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 10) throw SetupError("root_decomposition: no generic positivity functional");
            std::normal_distribution<double> normal(0.0, 1.0);
            for (int i = 0; i < r; ++i) h(i) = normal(rng);
            bool degenerate = false;
            positives.clear();
            for (size_t k = 0; k < rsd.roots.size(); ++k) {
                const double v = rsd.roots[k].dot(h);
                if (std::abs(v) < kTol * rsd.roots[k].norm()) degenerate = true;
                if (v > 0) positives.push_back(static_cast<int>(k));
            }
            if (!degenerate) break;
        }
        for (int k : positives) {
            bool decomposable = false;
            for (int a : positives)
                for (int b : positives)
                    if (same_root(Vec(rsd.roots[a] + rsd.roots[b]), rsd.roots[k])) decomposable = true;
            if (!decomposable) rsd.simple.push_back(k);
        }

        // Every root must decompose over Σ with uniform-sign coefficients.
        Mat s(r, rsd.simple.size());
        for (size_t j = 0; j < rsd.simple.size(); ++j) s.col(j) = rsd.roots[rsd.simple[j]];
        for (const auto& root : rsd.roots) {
            double res = 0.0;
            const Vec c = linalg::least_squares(s, root, &res);
            if (res > kTol) throw SetupError("root_decomposition: root outside the simple span");
            if (c.minCoeff() < -kTol && c.maxCoeff() > kTol)
                throw SetupError("root_decomposition: mixed-sign simple decomposition");
        }
    }
    return rsd;
}

ChamberResult chamber_membership(const RootSystemData& rsd, const Vec& lambda) {
    if (lambda.size() != rsd.rank()) throw DimensionError("chamber_membership: covector length mismatch");
    double margin = std::numeric_limits<double>::infinity();
    for (int k : rsd.simple) margin = std::min(margin, rsd.pair(lambda, rsd.roots[k]));
    if (rsd.simple.empty()) margin = 0.0;
    return {margin >= -1e-10, margin};
}

Face face_of(const RootSystemData& rsd, const Vec& lambda) {
    const auto membership = chamber_membership(rsd, lambda);
    if (!membership.member) throw SetupError("face_of: covector outside the fundamental chamber");
    Face face;
    for (size_t j = 0; j < rsd.simple.size(); ++j)
        if (std::abs(rsd.pair(lambda, rsd.roots[rsd.simple[j]])) < kTol)
            face.zero_set.push_back(static_cast<int>(j));
    return face;
}

bool face_leq(const Face& sigma, const Face& tau) {
    return std::includes(sigma.zero_set.begin(), sigma.zero_set.end(), tau.zero_set.begin(),
                         tau.zero_set.end());
}

std::vector<Face> all_faces(const RootSystemData& rsd) {
    const size_t s = rsd.simple.size();
    std::vector<Face> faces;
    for (size_t mask = 0; mask < (size_t{1} << s); ++mask) {
        Face f;
        for (size_t j = 0; j < s; ++j)
            if (mask & (size_t{1} << j)) f.zero_set.push_back(static_cast<int>(j));
        faces.push_back(std::move(f));
    }
    return faces;
}

Vec sample_in_face(const RootSystemData& rsd, const Face& face, std::mt19937_64& rng) {
    const int r = rsd.rank();
    const size_t s = rsd.simple.size();
    if (s == 0) return Vec::Zero(r);
    Mat simple_mat(r, s);
    for (size_t j = 0; j < s; ++j) simple_mat.col(j) = rsd.roots[rsd.simple[j]];
    const Mat gram = simple_mat.transpose() * rsd.chamber_metric * simple_mat;
    std::uniform_real_distribution<double> unif(0.5, 1.5);
    Vec targets = Vec::Zero(s);
    for (size_t j = 0; j < s; ++j)
        if (!std::binary_search(face.zero_set.begin(), face.zero_set.end(), static_cast<int>(j)))
            targets(j) = unif(rng);
    return simple_mat * gram.ldlt().solve(targets);
}

FaceIsotropy isotropy_algebra_of_face(const RootSystemData& rsd, const Face& face) {
    const int dim = rsd.algebra->dim();
    const int r = rsd.rank();
    const size_t s = rsd.simple.size();

    Mat simple_mat(r, s);
    for (size_t j = 0; j < s; ++j) simple_mat.col(j) = rsd.roots[rsd.simple[j]];

    FaceIsotropy out;
    // Δ₀ = roots whose simple-root expansion is supported inside Σ₀.
    for (size_t k = 0; k < rsd.roots.size(); ++k) {
        double res = 0.0;
        const Vec c = s > 0 ? linalg::least_squares(simple_mat, rsd.roots[k], &res) : Vec(0);
        bool inside = true;
        for (size_t j = 0; j < s; ++j)
            if (std::abs(c(j)) > kTol &&
                !std::binary_search(face.zero_set.begin(), face.zero_set.end(), static_cast<int>(j)))
                inside = false;
        if (inside) out.delta0.push_back(static_cast<int>(k));
    }
    out.dim = dim == 0 ? 0 : r + static_cast<int>(out.delta0.size());

    // Real basis: the Cartan plus Re/Im of one eigenvector per ± pair.
    Mat basis(dim, out.dim);
    int col = 0;
    for (int i = 0; i < r; ++i) {
        Vec e = Vec::Zero(dim);
        e(rsd.cartan_indices[i]) = 1.0;
        basis.col(col++) = e;
    }
    std::vector<int> kept;
    for (int k : out.delta0) {
        bool negative_of_kept = false;
        for (int u : kept)
            if (same_root(Vec(-rsd.roots[u]), rsd.roots[k])) negative_of_kept = true;
        if (!negative_of_kept) kept.push_back(k);
    }
    for (int k : kept) {
        basis.col(col++) = rsd.root_vectors[k].real();
        basis.col(col++) = rsd.root_vectors[k].imag();
    }
    out.basis = linalg::orthonormal_basis(basis);
    if (static_cast<int>(out.basis.cols()) != out.dim)
        throw SetupError("isotropy_algebra_of_face: degenerate real basis");

    // Cross-validation at sampled λ via the null space of ξ ↦ −λ∘ad ξ.
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const Vec lambda_t = sample_in_face(rsd, face, rng);
        const Vec lambda = rsd.embed_in_dual(lambda_t);
        Mat map(dim, dim);
        for (int i = 0; i < dim; ++i) {
            Vec e = Vec::Zero(dim);
            e(i) = 1.0;
            map.col(i) = lie::coadjoint_generator({rsd.algebra, e}, {rsd.algebra, lambda}).coeffs;
        }
        out.null_space_dim = dim - linalg::rank(map);
        if (out.null_space_dim != out.dim)
            throw SetupError("isotropy_algebra_of_face: combinatorial and numerical dimensions differ");
    }
    return out;
}

Mat commutator_subalgebra(const lie::AlgebraPtr& algebra, const Mat& basis) {
    const int dim = algebra->dim();
    if (basis.rows() != dim) throw DimensionError("commutator_subalgebra: wrong basis row count");

    // Closure check.
    for (int i = 0; i < basis.cols(); ++i)
        for (int j = 0; j < basis.cols(); ++j) {
            const Vec br = algebra->ad(basis.col(i)) * basis.col(j);
            if (linalg::residual_outside(basis, br) > 1e-10 * (1.0 + br.norm()))
                throw SetupError("commutator_subalgebra: input is not a closed subalgebra");
        }

    Mat current = basis;
    int previous_dim = -1;
    Mat derived(dim, 0);
    while (true) {
        std::vector<Vec> brackets;
        for (int i = 0; i < current.cols(); ++i)
            for (int j = i + 1; j < current.cols(); ++j)
                brackets.push_back(algebra->ad(current.col(i)) * current.col(j));
        Mat span(dim, brackets.size());
        for (size_t k = 0; k < brackets.size(); ++k) span.col(k) = brackets[k];
        derived = linalg::orthonormal_basis(span);
        if (static_cast<int>(derived.cols()) == previous_dim) break;
        previous_dim = static_cast<int>(derived.cols());
        current = derived;
        if (previous_dim == 0) break;
    }
    return derived;
}

bool natural_slice_contains(const RootSystemData& rsd, const Face& sigma, const Vec& lambda) {
    if (!chamber_membership(rsd, lambda).member) return false;
    return face_leq(sigma, face_of(rsd, lambda));
}

FaceClassification classify_values(const RootSystemData& rsd, const std::vector<Vec>& dual_values) {
    FaceClassification out;
    std::vector<int> offenders;
    for (size_t k = 0; k < dual_values.size(); ++k) {
        const Vec t_part = rsd.restrict_to_t(dual_values[k]);
        if (!chamber_membership(rsd, t_part).member) {
            offenders.push_back(static_cast<int>(k));
            continue;
        }
        const Face f = face_of(rsd, t_part);
        out.buckets[f.zero_set].push_back(static_cast<int>(k));
    }
    if (!offenders.empty()) {
        std::string msg = "classify_values: values outside the chamber at indices";
        for (int k : offenders) msg += " " + std::to_string(k);
        throw SetupError(msg);
    }
    for (const auto& [zero_set, members] : out.buckets) {
        Face f{zero_set};
        const FaceIsotropy iso = isotropy_algebra_of_face(rsd, f);
        out.commutator_dims[zero_set] =
            static_cast<int>(commutator_subalgebra(rsd.algebra, iso.basis).cols());
    }
    return out;
}

FaceClassification classify_moment_samples(const RootSystemData& rsd, const action::MomentMap& mm,
                                           const std::vector<phase::StatePoint>& points) {
    std::vector<Vec> values;
    values.reserve(points.size());
    for (const auto& p : points) values.push_back(mm(p).coeffs);
    return classify_values(rsd, values);
}

}  // namespace momenta::roots
