#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "syntonet/metrics.hpp"

namespace syntonet {

/// Eigen-decomposition of a dense symmetric matrix.
struct SymmetricEigen {
  std::vector<double> values;                // descending
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is < tol.
/// `matrix` is row-major dim x dim and must be symmetric.
SymmetricEigen jacobi_eigen(std::vector<double> matrix, std::size_t dim, double tol = 1e-12);

/// PCA fitted on z-scored rows.
struct PcaModel {
  std::size_t input_dim = 0;
  std::vector<double> means;              // input_dim
  std::vector<double> stds;               // input_dim, sample standard deviation
  std::vector<std::size_t> kept;          // indices of features with non-zero spread
  std::vector<std::size_t> dropped;       // constant features, excluded from the fit
  std::vector<std::vector<double>> components;  // orthonormal, over `kept`
  std::vector<double> eigenvalues;              // descending, clamped at 0
  std::vector<double> explained_variance_ratio;
  std::vector<std::string> warnings;
};

/// Z-score by the sample statistics, eigen-decompose the covariance, sort by
/// decreasing eigenvalue and orient each component so its largest-magnitude
/// entry is positive.
PcaModel fit_pca(const std::vector<std::vector<double>>& rows);
PcaModel fit_pca(const std::vector<FeatureVector>& rows);

/// Coordinates on the first `count` components.
std::vector<double> project(const PcaModel& m, std::span<const double> x, std::size_t count = 2);

struct Point2 {
  double pc1;
  double pc2;
};

Point2 project2(const PcaModel& m, const FeatureVector& f);

}  // namespace syntonet
