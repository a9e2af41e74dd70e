#include "syntonet/projection.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

#include "syntonet/errors.hpp"

namespace syntonet {

SymmetricEigen jacobi_eigen(std::vector<double> a, std::size_t dim, double tol) {
  if (a.size() != dim * dim) throw DomainError("jacobi_eigen: matrix size does not match dimension");
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * dim + j]; };
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (std::fabs(at(i, j) - at(j, i)) > 1e-12 * std::max({1.0, std::fabs(at(i, j)), std::fabs(at(j, i))}))
        throw DomainError("jacobi_eigen: matrix is not symmetric");
  std::vector<double> v(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) v[i * dim + i] = 1.0;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (i != j) s += at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() >= tol) {
    if (++sweep > 100) throw NumericError("jacobi_eigen: no convergence after 100 sweeps");
    for (std::size_t p = 0; p + 1 < dim; ++p) {
      for (std::size_t q = p + 1; q < dim; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < dim; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < dim; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = at(q, p) = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
          const double vkp = v[k * dim + p], vkq = v[k * dim + q];
          v[k * dim + p] = c * vkp - s * vkq;
          v[k * dim + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return at(x, x) > at(y, y); });

  SymmetricEigen out;
  for (std::size_t k : order) {
    out.values.push_back(at(k, k));
    std::vector<double> col(dim);
    for (std::size_t i = 0; i < dim; ++i) col[i] = v[i * dim + k];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

PcaModel fit_pca(const std::vector<std::vector<double>>& rows) {
  if (rows.size() < 2) throw DomainError(fmt::format("PCA needs at least 2 samples, got {}", rows.size()));
  const std::size_t dim = rows.front().size();
  if (dim == 0) throw DomainError("PCA: zero-dimensional samples");
  for (const auto& r : rows) {
    if (r.size() != dim) throw DomainError("PCA: samples differ in dimension");
    for (double x : r)
      if (!std::isfinite(x)) throw DomainError("PCA: non-finite feature value");
  }

  const double count = static_cast<double>(rows.size());
  PcaModel m;
  m.input_dim = dim;
  m.means.assign(dim, 0.0);
  m.stds.assign(dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) {
    double s = 0.0;
    for (const auto& r : rows) s += r[j];
    m.means[j] = s / count;
    double ss = 0.0;
    for (const auto& r : rows) ss += (r[j] - m.means[j]) * (r[j] - m.means[j]);
    m.stds[j] = std::sqrt(ss / (count - 1.0));
    const double scale = std::max(1.0, std::fabs(m.means[j]));
    if (m.stds[j] > 1e-12 * scale)
      m.kept.push_back(j);
    else
      m.dropped.push_back(j);
  }
  if (m.kept.empty()) throw DomainError("PCA: every feature is constant");
  if (!m.dropped.empty())
    m.warnings.push_back(fmt::format("dropped {} constant feature(s)", m.dropped.size()));
  const std::size_t k = m.kept.size();

  std::vector<std::vector<double>> z(rows.size(), std::vector<double>(k));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t a = 0; a < k; ++a) z[r][a] = (rows[r][m.kept[a]] - m.means[m.kept[a]]) / m.stds[m.kept[a]];

  std::vector<double> cov(k * k, 0.0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      double s = 0.0;
      for (const auto& zr : z) s += zr[a] * zr[b];
      cov[a * k + b] = cov[b * k + a] = s / (count - 1.0);
    }
  }

  auto eig = jacobi_eigen(std::move(cov), k);
  double total = 0.0;
  for (double& ev : eig.values) {
    ev = std::max(ev, 0.0);
    total += ev;
  }
  for (auto& vec : eig.vectors) {
    std::size_t big = 0;
    for (std::size_t i = 1; i < vec.size(); ++i)
      if (std::fabs(vec[i]) > std::fabs(vec[big])) big = i;
    if (vec[big] < 0.0)
      for (double& x : vec) x = -x;
  }
  const std::size_t rank = static_cast<std::size_t>(
      std::count_if(eig.values.begin(), eig.values.end(), [&](double ev) { return ev > 1e-10 * eig.values.front(); }));
  if (rank < k) m.warnings.push_back(fmt::format("rank deficient: covariance rank {} of {} features", rank, k));
  m.eigenvalues = eig.values;
  m.components = std::move(eig.vectors);
  for (double ev : m.eigenvalues) m.explained_variance_ratio.push_back(total > 0.0 ? ev / total : 0.0);
  return m;
}

PcaModel fit_pca(const std::vector<FeatureVector>& rows) {
  std::vector<std::vector<double>> data;
  data.reserve(rows.size());
  for (const auto& f : rows) data.emplace_back(f.values.begin(), f.values.end());
  return fit_pca(data);
}

std::vector<double> project(const PcaModel& m, std::span<const double> x, std::size_t count) {
  if (x.size() != m.input_dim)
    throw DomainError(fmt::format("project: expected {} features, got {}", m.input_dim, x.size()));
  count = std::min(count, m.components.size());
  std::vector<double> out(count, 0.0);
  for (std::size_t c = 0; c < count; ++c) {
    double s = 0.0;
    for (std::size_t a = 0; a < m.kept.size(); ++a) {
      const std::size_t j = m.kept[a];
      s += m.components[c][a] * ((x[j] - m.means[j]) / m.stds[j]);
    }
    out[c] = s;
  }
  return out;
}

Point2 project2(const PcaModel& m, const FeatureVector& f) {
  const auto p = project(m, f.values, 2);
  return {p.empty() ? 0.0 : p[0], p.size() > 1 ? p[1] : 0.0};
}

}  // namespace syntonet
