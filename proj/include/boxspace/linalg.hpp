#pragma once

#include <vector>

namespace boxspace {

struct SymEig {
  std::vector<double> values;                // descending
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};

// Cyclic Jacobi on a dense symmetric matrix (row-major, n*n). Converges
// when the off-diagonal Frobenius norm drops below off_tol; hard cap of
// 100 sweeps. Throws NotSymmetric / NoConvergence.
SymEig eig_sym(const std::vector<double>& m, int n, double sym_tol = 1e-12,
               double off_tol = 1e-12);

// -1/2 * J * D * J with J the centering projection.
std::vector<double> centered_gram(const std::vector<double>& d, int n);

}  // namespace boxspace
