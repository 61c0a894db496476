#include "ecperf/lifting.hpp"

#include <stdexcept>
#include <vector>

namespace ecperf {

namespace {

void check_period(int period) {
    if (period < 1) {
        throw std::invalid_argument("lift: period must be >= 1, got " + std::to_string(period));
    }
}

}  // namespace

LiftedSystem lift(const ClosedLoop& cl, int period) {
    check_period(period);
    const int n = cl.states();
    const int mw = cl.perf_inputs();
    const int pz = cl.perf_outputs();
    const int T = period;

    // powers[k] = A^k, k = 0..T
    std::vector<MatrixXd> powers(T + 1);
    powers[0] = MatrixXd::Identity(n, n);
    for (int k = 1; k <= T; ++k) powers[k] = powers[k - 1] * cl.A;

    LiftedSystem ls;
    ls.period = T;
    ls.base_perf_inputs = mw;
    ls.base_perf_outputs = pz;
    ls.A = powers[T];

    ls.Bp.resize(n, T * mw);
    for (int j = 0; j < T; ++j) ls.Bp.middleCols(j * mw, mw) = powers[T - 1 - j] * cl.Bp;

    ls.Cp.resize(T * pz, n);
    for (int i = 0; i < T; ++i) ls.Cp.middleRows(i * pz, pz) = cl.Cp * powers[i];

    ls.Dpp = MatrixXd::Zero(T * pz, T * mw);
    for (int i = 0; i < T; ++i) {
        for (int j = 0; j <= i; ++j) {
            if (i == j) {
                ls.Dpp.block(i * pz, j * mw, pz, mw) = cl.Dpp;
            } else {
                ls.Dpp.block(i * pz, j * mw, pz, mw) = cl.Cp * powers[i - j - 1] * cl.Bp;
            }
        }
    }

    if (cl.has_uncertainty) {
        const int nu = static_cast<int>(cl.Bu.cols());
        ls.has_uncertainty = true;
        ls.Bu = powers[T - 1] * cl.Bu;
        ls.Cu = cl.Cu;
        ls.Dpu = MatrixXd::Zero(T * pz, nu);
        for (int i = 1; i < T; ++i) {
            ls.Dpu.middleRows(i * pz, pz) = cl.Cp * powers[i - 1] * cl.Bu;
        }
    }
    return ls;
}

LiftedSystem lift_reset(const ClosedLoop& cl, const Plant& plant, const Controller& controller,
                        int period) {
    check_period(period);
    const ClosedLoop rebuilt = interconnect(plant, controller);
    if (rebuilt.states() != cl.states() || rebuilt.perf_inputs() != cl.perf_inputs() ||
        (rebuilt.A - cl.A).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + cl.A.norm())) {
        throw std::invalid_argument(
            "lift_reset: closed loop does not match interconnect(plant, controller)");
    }
    const int n = cl.states();
    const int nc = controller.nc();

    // A_r removes the controller-state self map: lower-right block 0.
    MatrixXd a_reset = cl.A;
    a_reset.bottomRightCorner(nc, nc).setZero();

    LiftedSystem ls = lift(cl, period);
    ls.A = matrix_power(cl.A, period - 1) * a_reset;
    (void)n;
    return ls;
}

PerformanceIndex lift_performance(const PerformanceIndex& p, int period) {
    check_period(period);
    const int T = period;
    const int mw = p.input_dim();
    const int pz = p.output_dim();
    MatrixXd ql = MatrixXd::Zero(T * mw, T * mw);
    MatrixXd sl = MatrixXd::Zero(T * mw, T * pz);
    MatrixXd rl = MatrixXd::Zero(T * pz, T * pz);
    for (int k = 0; k < T; ++k) {
        ql.block(k * mw, k * mw, mw, mw) = p.Qp;
        sl.block(k * mw, k * pz, mw, pz) = p.Sp;
        rl.block(k * pz, k * pz, pz, pz) = p.Rp;
    }
    return PerformanceIndex(std::move(ql), std::move(sl), std::move(rl));
}

}  // namespace ecperf
