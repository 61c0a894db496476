#include "ecperf/fir.hpp"

#include <stdexcept>

namespace ecperf {

FirController fir_truncate(const Controller& controller, int horizon) {
    if (horizon < 1) {
        throw std::invalid_argument("fir_truncate: horizon must be >= 1, got " +
                                    std::to_string(horizon));
    }
    if (controller.nc() < 1) {
        throw std::invalid_argument("fir_truncate: controller has no dynamic state to truncate");
    }
    const int T = horizon;
    const int ny = controller.inputs();
    const int nc = controller.nc();
    const int mu = controller.outputs();
    const int mw2 = controller.disturbances();
    const int nh = T * ny;  // measurement-history part of the state

    // Upper shift by one measurement block: ones on the ny-th superdiagonal.
    MatrixXd a = MatrixXd::Zero(nh + nc, nh + nc);
    for (int i = 0; i + ny < nh; ++i) a(i, i + ny) = 1.0;
    a.block(nh, 0, nc, ny) = -matrix_power(controller.Ac, T) * controller.Bc;
    a.bottomRightCorner(nc, nc) = controller.Ac;

    MatrixXd b = MatrixXd::Zero(nh + nc, ny);
    b.block(nh - ny, 0, ny, ny) = MatrixXd::Identity(ny, ny);
    b.bottomRows(nc) = controller.Bc;

    MatrixXd b2 = MatrixXd::Zero(nh + nc, mw2);
    b2.bottomRows(nc) = controller.B2;

    MatrixXd c = MatrixXd::Zero(mu, nh + nc);
    c.rightCols(nc) = controller.Cc;

    return FirController{T, Controller(a, b, b2, c, controller.Dc, controller.F2)};
}

std::vector<MatrixXd> impulse_response(const Controller& controller, int lags) {
    if (lags < 0) throw std::invalid_argument("impulse_response: lags must be >= 0");
    std::vector<MatrixXd> h;
    h.reserve(lags + 1);
    h.push_back(controller.Dc);
    MatrixXd state = controller.Bc;  // Ac^(k-1) Bc
    for (int k = 1; k <= lags; ++k) {
        h.push_back(controller.Cc * state);
        state = controller.Ac * state;
    }
    return h;
}

}  // namespace ecperf
