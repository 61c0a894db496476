#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace ecperf {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Scale-aware tolerance for symmetry and semidefiniteness checks:
// 1e-9 * (1 + ||M||_F).
double psd_tolerance(const MatrixXd& m);

// Throws std::invalid_argument if any entry is NaN or infinite.
void require_finite(const MatrixXd& m, const std::string& name);

bool is_symmetric(const MatrixXd& m, double tol);

MatrixXd symmetrized(const MatrixXd& m);

// Extreme eigenvalues of a symmetric matrix.
double min_eigenvalue(const MatrixXd& sym);
double max_eigenvalue(const MatrixXd& sym);

double spectral_radius(const MatrixXd& a);

// A^k by iterated multiplication, k >= 0.
MatrixXd matrix_power(const MatrixXd& a, int k);

// Monic characteristic polynomial via the Faddeev-LeVerrier recursion,
// returned in ascending order: c[0] + c[1] x + ... + x^n with c[n] == 1.
std::vector<double> characteristic_polynomial(const MatrixXd& a);

// Companion matrix of a monic polynomial (ascending coefficients): ones on
// the first superdiagonal, -c[0..n-1] in the last row.
MatrixXd companion_from_polynomial(const std::vector<double>& monic_ascending);

// Horner evaluation, ascending coefficients.
double polyval(const std::vector<double>& coeffs_ascending, double x);

}  // namespace ecperf
