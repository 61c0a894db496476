#include "ecperf/matrix_utils.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace ecperf {

double psd_tolerance(const MatrixXd& m) { return 1e-9 * (1.0 + m.norm()); }

void require_finite(const MatrixXd& m, const std::string& name) {
    if (!m.allFinite()) {
        throw std::invalid_argument(name + " contains a non-finite entry");
    }
}

bool is_symmetric(const MatrixXd& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol;
}

MatrixXd symmetrized(const MatrixXd& m) { return 0.5 * (m + m.transpose()); }

double min_eigenvalue(const MatrixXd& sym) {
    if (sym.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(symmetrized(sym), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double max_eigenvalue(const MatrixXd& sym) {
    if (sym.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(symmetrized(sym), Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

double spectral_radius(const MatrixXd& a) {
    if (a.rows() == 0) return 0.0;
    return a.eigenvalues().cwiseAbs().maxCoeff();
}

MatrixXd matrix_power(const MatrixXd& a, int k) {
    if (a.rows() != a.cols()) throw std::invalid_argument("matrix_power: matrix not square");
    if (k < 0) throw std::invalid_argument("matrix_power: negative exponent");
    MatrixXd result = MatrixXd::Identity(a.rows(), a.cols());
    for (int i = 0; i < k; ++i) result = result * a;
    return result;
}

std::vector<double> characteristic_polynomial(const MatrixXd& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("characteristic_polynomial: matrix not square");
    }
    const int n = static_cast<int>(a.rows());
    std::vector<double> c(n + 1, 0.0);
    c[n] = 1.0;
    if (n == 0) return c;
    // M_1 = A, c_{n-1} = -tr(M_1)/1,
    // M_{k+1} = A (M_k + c_{n-k} I), c_{n-k-1} = -tr(M_{k+1})/(k+1).
    MatrixXd mk = a;
    c[n - 1] = -mk.trace();
    for (int k = 1; k < n; ++k) {
        mk = a * (mk + c[n - k] * MatrixXd::Identity(n, n));
        c[n - k - 1] = -mk.trace() / static_cast<double>(k + 1);
    }
    return c;
}

MatrixXd companion_from_polynomial(const std::vector<double>& monic_ascending) {
    const int n = static_cast<int>(monic_ascending.size()) - 1;
    if (n < 1) throw std::invalid_argument("companion_from_polynomial: degree must be >= 1");
    if (std::abs(monic_ascending[n] - 1.0) > 1e-12) {
        throw std::invalid_argument("companion_from_polynomial: polynomial is not monic");
    }
    MatrixXd c = MatrixXd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) c(i, i + 1) = 1.0;
    for (int j = 0; j < n; ++j) c(n - 1, j) = -monic_ascending[j];
    return c;
}

double polyval(const std::vector<double>& coeffs_ascending, double x) {
    double acc = 0.0;
    for (auto it = coeffs_ascending.rbegin(); it != coeffs_ascending.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

}  // namespace ecperf
