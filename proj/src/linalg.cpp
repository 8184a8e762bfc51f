#include "momenta/linalg.hpp"

#include <Eigen/SVD>

namespace momenta::linalg {

namespace {

Eigen::JacobiSVD<Mat> svd_of(const Mat& a, unsigned options) {
    return Eigen::JacobiSVD<Mat>(a, options);
}

int rank_from_singular_values(const Vec& sv, double rtol) {
    if (sv.size() == 0) return 0;
    const double cutoff = rtol * sv(0);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++r;
    return r;
}

}  // namespace

int rank(const Mat& a, double rtol) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    auto svd = svd_of(a, 0);
    return rank_from_singular_values(svd.singularValues(), rtol);
}

Mat orthonormal_basis(const Mat& a, double rtol) {
    if (a.rows() == 0 || a.cols() == 0) return Mat(a.rows(), 0);
    auto svd = svd_of(a, Eigen::ComputeThinU);
    const int r = rank_from_singular_values(svd.singularValues(), rtol);
    return svd.matrixU().leftCols(r);
}

Mat null_space(const Mat& a, double rtol) {
    if (a.rows() == 0) return Mat::Identity(a.cols(), a.cols());
    if (a.cols() == 0) return Mat(0, 0);
    auto svd = svd_of(a, Eigen::ComputeFullV);
    const int r = rank_from_singular_values(svd.singularValues(), rtol);
    return svd.matrixV().rightCols(a.cols() - r);
}

Mat subspace_sum(const Mat& a, const Mat& b, double rtol) {
    Mat joined(a.rows(), a.cols() + b.cols());
    if (a.cols() > 0) joined.leftCols(a.cols()) = a;
    if (b.cols() > 0) joined.rightCols(b.cols()) = b;
    return orthonormal_basis(joined, rtol);
}

Mat subspace_intersection(const Mat& a, const Mat& b, double rtol) {
    // col(a) ∩ col(b) from the null space of [Qa | -Qb]: Qa u = Qb v.
    const Mat qa = orthonormal_basis(a, rtol);
    const Mat qb = orthonormal_basis(b, rtol);
    if (qa.cols() == 0 || qb.cols() == 0) return Mat(a.rows(), 0);
    Mat stacked(a.rows(), qa.cols() + qb.cols());
    stacked.leftCols(qa.cols()) = qa;
    stacked.rightCols(qb.cols()) = -qb;
    const Mat ker = null_space(stacked, rtol);
    if (ker.cols() == 0) return Mat(a.rows(), 0);
    return orthonormal_basis(qa * ker.topRows(qa.cols()), rtol);
}

Mat annihilator(const Mat& a, int ambient_dim, double rtol) {
    if (a.cols() == 0) return Mat::Identity(ambient_dim, ambient_dim);
    return null_space(a.transpose(), rtol);
}

bool contains(const Mat& a, const Mat& b, double rtol) {
    if (b.cols() == 0) return true;
    Mat joined(a.rows(), a.cols() + b.cols());
    if (a.cols() > 0) joined.leftCols(a.cols()) = a;
    joined.rightCols(b.cols()) = b;
    return rank(joined, rtol) == rank(a, rtol);
}

Mat preimage(const Mat& m, const Mat& s, double rtol) {
    // {x : m x ∈ col(s)} = null((I − Qs Qsᵀ) m).
    const Mat qs = orthonormal_basis(s, rtol);
    const Mat proj_out = Mat::Identity(m.rows(), m.rows()) - qs * qs.transpose();
    // Scale-aware: use the norm of m itself for the cutoff, so a tiny residual
    // of a large map does not destroy the preimage.
    Mat reduced = proj_out * m;
    const double scale = m.norm();
    if (scale > 0) {
        auto svd = svd_of(reduced, Eigen::ComputeFullV);
        const Vec& sv = svd.singularValues();
        const double cutoff = rtol * scale;
        int r = 0;
        for (int i = 0; i < sv.size(); ++i)
            if (sv(i) > cutoff) ++r;
        return svd.matrixV().rightCols(m.cols() - r);
    }
    return Mat::Identity(m.cols(), m.cols());
}

double residual_outside(const Mat& basis, const Vec& v) {
    const Mat q = orthonormal_basis(basis);
    if (q.cols() == 0) return v.norm();
    return (v - q * (q.transpose() * v)).norm();
}

Vec least_squares(const Mat& a, const Vec& b, double* residual) {
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Vec x = svd.solve(b);
    if (residual) *residual = (a * x - b).norm();
    return x;
}

}  // namespace momenta::linalg
