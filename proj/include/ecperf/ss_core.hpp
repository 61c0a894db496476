#pragma once

#include "ecperf/matrix_utils.hpp"

namespace ecperf {

// Discrete-time LTI plant
//   x(t+1) = A x(t) + B u(t) + B1 w1(t)
//   y(t)   = C x(t) + F1 w1(t)
//   z(t)   = C1 x(t) + E u(t) + D1 w1(t)
// with control input u, disturbance w1, measurement y and performance output z.
struct Plant {
    MatrixXd A, B, B1, C, F1, C1, E, D1;

    Plant(MatrixXd a, MatrixXd b, MatrixXd b1, MatrixXd c, MatrixXd f1, MatrixXd c1, MatrixXd e,
          MatrixXd d1);

    int n() const { return static_cast<int>(A.rows()); }
    int inputs() const { return static_cast<int>(B.cols()); }        // m_u
    int disturbances() const { return static_cast<int>(B1.cols()); } // m_w1
    int outputs() const { return static_cast<int>(C.rows()); }       // p_y
    int perf_outputs() const { return static_cast<int>(C1.rows()); } // p_z
};

// Dynamic output-feedback controller
//   xc(t+1) = Ac xc(t) + Bc y(t) + B2 w2(t)
//   u(t)    = Cc xc(t) + Dc y(t) + F2 w2(t).
// B2/F2 may have zero columns (no performance input to the controller).
struct Controller {
    MatrixXd Ac, Bc, B2, Cc, Dc, F2;

    Controller(MatrixXd ac, MatrixXd bc, MatrixXd cc, MatrixXd dc);
    Controller(MatrixXd ac, MatrixXd bc, MatrixXd b2, MatrixXd cc, MatrixXd dc, MatrixXd f2);

    int nc() const { return static_cast<int>(Ac.rows()); }
    int inputs() const { return static_cast<int>(Bc.cols()); }       // p_y
    int outputs() const { return static_cast<int>(Cc.rows()); }      // m_u
    int disturbances() const { return static_cast<int>(B2.cols()); } // m_w2
};

// Interconnected loop
//   xi(t+1) = A xi(t) + Bp wp(t) (+ Bu wu(t))
//   zp(t)   = Cp xi(t) + Dpp wp(t) (+ Dpu wu(t))
// with joint state xi = (x; xc) and wp = (w1; w2). The optional uncertainty
// channel exposes zu = Cu xi = xc for perturbations wu acting on the
// controller-state update.
struct ClosedLoop {
    MatrixXd A, Bp, Cp, Dpp;

    bool has_uncertainty = false;
    MatrixXd Bu, Cu, Dpu;

    int n_plant = 0;
    int n_ctrl = 0;

    int states() const { return static_cast<int>(A.rows()); }
    int perf_inputs() const { return static_cast<int>(Bp.cols()); }
    int perf_outputs() const { return static_cast<int>(Cp.rows()); }
};

// Quadratic performance index
//   Pp = [Qp Sp; Sp' Rp]  with Rp >= 0,
// coupling performance input wp and output zp.
struct PerformanceIndex {
    MatrixXd Qp, Sp, Rp;

    PerformanceIndex(MatrixXd qp, MatrixXd sp, MatrixXd rp);

    // Qp = -gamma^2 I, Sp = 0, Rp = I: certifies l2-gain <= gamma.
    static PerformanceIndex l2_gain(double gamma, int m_w, int p_z);

    MatrixXd full() const;

    int input_dim() const { return static_cast<int>(Qp.rows()); }
    int output_dim() const { return static_cast<int>(Rp.rows()); }
};

// Closed loop of plant and controller, performance input ordered (w1; w2).
ClosedLoop interconnect(const Plant& plant, const Controller& controller);

// Adds the bootstrapping uncertainty channel zu = xc, wu -> state update:
// Bu = [0; Ac], Cu = [0 I], Dpu = 0. Requires nc >= 1 and that `cl` was
// produced by interconnect() with the same controller.
ClosedLoop attach_bootstrap_channel(const ClosedLoop& cl, const Controller& controller);

}  // namespace ecperf
