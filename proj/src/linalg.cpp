#include "boxspace/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "boxspace/errors.hpp"

namespace boxspace {

namespace {

double offdiag_frobenius(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += a[static_cast<size_t>(i) * n + j] * a[static_cast<size_t>(i) * n + j];
  return std::sqrt(s);
}

}  // namespace

SymEig eig_sym(const std::vector<double>& m, int n, double sym_tol, double off_tol) {
  if (static_cast<int>(m.size()) != n * n)
    fail(ErrorCode::InvalidArgument, "matrix size mismatch");
  double scale = 0.0;
  for (double v : m) scale = std::max(scale, std::fabs(v));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::fabs(m[static_cast<size_t>(i) * n + j] - m[static_cast<size_t>(j) * n + i]) >
          sym_tol * std::max(1.0, scale))
        fail(ErrorCode::NotSymmetric,
             "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");

  std::vector<double> a = m;
  std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

  auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };

  const int max_sweeps = 100;
  bool converged = (n <= 1) || offdiag_frobenius(a, n) < off_tol;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a[idx(p, q)];
        if (apq == 0.0) continue;
        double app = a[idx(p, p)], aqq = a[idx(q, q)];
        double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[idx(k, p)], akq = a[idx(k, q)];
          a[idx(k, p)] = c * akp - s * akq;
          a[idx(k, q)] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[idx(p, k)], aqk = a[idx(q, k)];
          a[idx(p, k)] = c * apk - s * aqk;
          a[idx(q, k)] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v[idx(k, p)], vkq = v[idx(k, q)];
          v[idx(k, p)] = c * vkp - s * vkq;
          v[idx(k, q)] = s * vkp + c * vkq;
        }
      }
    }
    converged = offdiag_frobenius(a, n) < off_tol;
  }
  if (!converged)
    fail(ErrorCode::NoConvergence, "Jacobi did not reach tolerance in 100 sweeps");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a[idx(x, x)] > a[idx(y, y)]; });

  SymEig out;
  out.values.resize(n);
  out.vectors.assign(n, std::vector<double>(n));
  for (int k = 0; k < n; ++k) {
    out.values[k] = a[idx(order[k], order[k])];
    for (int i = 0; i < n; ++i) out.vectors[k][i] = v[idx(i, order[k])];
  }
  return out;
}

std::vector<double> centered_gram(const std::vector<double>& d, int n) {
  std::vector<double> row_mean(n, 0.0);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) row_mean[i] += d[static_cast<size_t>(i) * n + j];
    row_mean[i] /= n;
    total += row_mean[i];
  }
  total /= n;
  std::vector<double> g(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g[static_cast<size_t>(i) * n + j] =
          -0.5 * (d[static_cast<size_t>(i) * n + j] - row_mean[i] - row_mean[j] + total);
  return g;
}

}  // namespace boxspace
