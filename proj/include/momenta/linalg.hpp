#pragma once

#include <Eigen/Dense>

namespace momenta::linalg {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Single relative SVD cutoff used by every subspace computation in the project.
inline constexpr double kRankCutoff = 1e-8;

/// Numerical rank with cutoff relative to the largest singular value.
int rank(const Mat& a, double rtol = kRankCutoff);

/// Orthonormal basis of the column space (columns of the result).
Mat orthonormal_basis(const Mat& a, double rtol = kRankCutoff);

/// Orthonormal basis of the null space {x : a x = 0}.
Mat null_space(const Mat& a, double rtol = kRankCutoff);

/// Basis of col(a) + col(b).
Mat subspace_sum(const Mat& a, const Mat& b, double rtol = kRankCutoff);

/// Basis of col(a) ∩ col(b).
Mat subspace_intersection(const Mat& a, const Mat& b, double rtol = kRankCutoff);

/// Basis of the annihilator {λ ∈ (R^n)* : λᵀ v = 0 for v ∈ col(a)} in coordinate pairing.
Mat annihilator(const Mat& a, int ambient_dim, double rtol = kRankCutoff);

/// Whether col(b) ⊆ col(a), by rank comparison of [a] vs [a b].
bool contains(const Mat& a, const Mat& b, double rtol = kRankCutoff);

/// Basis of the preimage {x : m x ∈ col(s)}.
Mat preimage(const Mat& m, const Mat& s, double rtol = kRankCutoff);

/// Norm of the component of v outside col(basis); basis need not be orthonormal.
double residual_outside(const Mat& basis, const Vec& v);

/// Least-squares solve a x = b; also reports the residual |a x − b|.
Vec least_squares(const Mat& a, const Vec& b, double* residual = nullptr);

}  // namespace momenta::linalg
