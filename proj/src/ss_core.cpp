#include "ecperf/ss_core.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace ecperf {

namespace {

void check_dim(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

std::string dim(const MatrixXd& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Plant::Plant(MatrixXd a, MatrixXd b, MatrixXd b1, MatrixXd c, MatrixXd f1, MatrixXd c1, MatrixXd e,
             MatrixXd d1)
    : A(std::move(a)),
      B(std::move(b)),
      B1(std::move(b1)),
      C(std::move(c)),
      F1(std::move(f1)),
      C1(std::move(c1)),
      E(std::move(e)),
      D1(std::move(d1)) {
    require_finite(A, "Plant.A");
    require_finite(B, "Plant.B");
    require_finite(B1, "Plant.B1");
    require_finite(C, "Plant.C");
    require_finite(F1, "Plant.F1");
    require_finite(C1, "Plant.C1");
    require_finite(E, "Plant.E");
    require_finite(D1, "Plant.D1");
    check_dim(A.rows() == A.cols(), "Plant.A must be square, got " + dim(A));
    check_dim(B.rows() == A.rows(), "Plant.B rows (" + dim(B) + ") must match A (" + dim(A) + ")");
    check_dim(B1.rows() == A.rows(), "Plant.B1 rows (" + dim(B1) + ") must match A (" + dim(A) + ")");
    check_dim(C.cols() == A.rows(), "Plant.C cols (" + dim(C) + ") must match A (" + dim(A) + ")");
    check_dim(F1.rows() == C.rows() && F1.cols() == B1.cols(),
              "Plant.F1 (" + dim(F1) + ") must be p_y x m_w1");
    check_dim(C1.cols() == A.rows(), "Plant.C1 cols (" + dim(C1) + ") must match A (" + dim(A) + ")");
    check_dim(E.rows() == C1.rows() && E.cols() == B.cols(),
              "Plant.E (" + dim(E) + ") must be p_z x m_u");
    check_dim(D1.rows() == C1.rows() && D1.cols() == B1.cols(),
              "Plant.D1 (" + dim(D1) + ") must be p_z x m_w1");
}

Controller::Controller(MatrixXd ac, MatrixXd bc, MatrixXd cc, MatrixXd dc)
    : Controller(std::move(ac), std::move(bc), MatrixXd(0, 0), std::move(cc), std::move(dc),
                 MatrixXd(0, 0)) {}

Controller::Controller(MatrixXd ac, MatrixXd bc, MatrixXd b2, MatrixXd cc, MatrixXd dc, MatrixXd f2)
    : Ac(std::move(ac)),
      Bc(std::move(bc)),
      B2(std::move(b2)),
      Cc(std::move(cc)),
      Dc(std::move(dc)),
      F2(std::move(f2)) {
    // An absent performance input is represented by zero-column matrices so a
    // single code path covers both cases.
    if (B2.size() == 0 && F2.size() == 0) {
        B2.resize(Ac.rows(), 0);
        F2.resize(Cc.rows() > 0 ? Cc.rows() : Dc.rows(), 0);
    }
    require_finite(Ac, "Controller.Ac");
    require_finite(Bc, "Controller.Bc");
    require_finite(B2, "Controller.B2");
    require_finite(Cc, "Controller.Cc");
    require_finite(Dc, "Controller.Dc");
    require_finite(F2, "Controller.F2");
    check_dim(Ac.rows() == Ac.cols(), "Controller.Ac must be square, got " + dim(Ac));
    check_dim(Bc.rows() == Ac.rows(),
              "Controller.Bc rows (" + dim(Bc) + ") must match Ac (" + dim(Ac) + ")");
    check_dim(Cc.cols() == Ac.rows(),
              "Controller.Cc cols (" + dim(Cc) + ") must match Ac (" + dim(Ac) + ")");
    check_dim(Dc.rows() == Cc.rows() || Cc.rows() == 0,
              "Controller.Dc rows (" + dim(Dc) + ") must match Cc (" + dim(Cc) + ")");
    check_dim(Dc.cols() == Bc.cols(),
              "Controller.Dc cols (" + dim(Dc) + ") must match Bc cols (" + dim(Bc) + ")");
    check_dim(B2.rows() == Ac.rows(),
              "Controller.B2 rows (" + dim(B2) + ") must match Ac (" + dim(Ac) + ")");
    check_dim(F2.rows() == Dc.rows(), "Controller.F2 rows (" + dim(F2) + ") must match Dc rows");
    check_dim(F2.cols() == B2.cols(),
              "Controller.F2 cols (" + dim(F2) + ") must match B2 cols (" + dim(B2) + ")");
}

PerformanceIndex::PerformanceIndex(MatrixXd qp, MatrixXd sp, MatrixXd rp)
    : Qp(std::move(qp)), Sp(std::move(sp)), Rp(std::move(rp)) {
    require_finite(Qp, "PerformanceIndex.Qp");
    require_finite(Sp, "PerformanceIndex.Sp");
    require_finite(Rp, "PerformanceIndex.Rp");
    check_dim(Qp.rows() == Qp.cols(), "PerformanceIndex.Qp must be square");
    check_dim(Rp.rows() == Rp.cols(), "PerformanceIndex.Rp must be square");
    check_dim(Sp.rows() == Qp.rows() && Sp.cols() == Rp.rows(),
              "PerformanceIndex.Sp (" + dim(Sp) + ") must be m_w x p_z");
    if (!is_symmetric(Qp, psd_tolerance(Qp))) {
        throw std::invalid_argument("PerformanceIndex.Qp is not symmetric");
    }
    if (!is_symmetric(Rp, psd_tolerance(Rp))) {
        throw std::invalid_argument("PerformanceIndex.Rp is not symmetric");
    }
    Qp = symmetrized(Qp);
    Rp = symmetrized(Rp);
    if (min_eigenvalue(Rp) < -psd_tolerance(Rp)) {
        throw std::invalid_argument("PerformanceIndex.Rp must be positive semidefinite");
    }
}

PerformanceIndex PerformanceIndex::l2_gain(double gamma, int m_w, int p_z) {
    return PerformanceIndex(-gamma * gamma * MatrixXd::Identity(m_w, m_w), MatrixXd::Zero(m_w, p_z),
                            MatrixXd::Identity(p_z, p_z));
}

MatrixXd PerformanceIndex::full() const {
    const int mw = input_dim();
    const int pz = output_dim();
    MatrixXd p(mw + pz, mw + pz);
    p.topLeftCorner(mw, mw) = Qp;
    p.topRightCorner(mw, pz) = Sp;
    p.bottomLeftCorner(pz, mw) = Sp.transpose();
    p.bottomRightCorner(pz, pz) = Rp;
    return p;
}

ClosedLoop interconnect(const Plant& plant, const Controller& controller) {
    if (plant.outputs() != controller.inputs()) {
        throw std::invalid_argument("interconnect: Plant.C rows (p_y=" +
                                    std::to_string(plant.outputs()) +
                                    ") must match Controller.Bc cols (" +
                                    std::to_string(controller.inputs()) + ")");
    }
    if (plant.inputs() != controller.outputs()) {
        throw std::invalid_argument("interconnect: Plant.B cols (m_u=" +
                                    std::to_string(plant.inputs()) +
                                    ") must match Controller.Cc rows (" +
                                    std::to_string(controller.outputs()) + ")");
    }
    const int n = plant.n();
    const int nc = controller.nc();
    const int mw1 = plant.disturbances();
    const int mw2 = controller.disturbances();
    const int pz = plant.perf_outputs();

    ClosedLoop cl;
    cl.n_plant = n;
    cl.n_ctrl = nc;
    cl.A.resize(n + nc, n + nc);
    cl.A.topLeftCorner(n, n) = plant.A + plant.B * controller.Dc * plant.C;
    cl.A.topRightCorner(n, nc) = plant.B * controller.Cc;
    cl.A.bottomLeftCorner(nc, n) = controller.Bc * plant.C;
    cl.A.bottomRightCorner(nc, nc) = controller.Ac;

    cl.Bp.resize(n + nc, mw1 + mw2);
    cl.Bp.topLeftCorner(n, mw1) = plant.B1 + plant.B * controller.Dc * plant.F1;
    cl.Bp.topRightCorner(n, mw2) = plant.B * controller.F2;
    cl.Bp.bottomLeftCorner(nc, mw1) = controller.Bc * plant.F1;
    cl.Bp.bottomRightCorner(nc, mw2) = controller.B2;

    cl.Cp.resize(pz, n + nc);
    cl.Cp.leftCols(n) = plant.C1 + plant.E * controller.Dc * plant.C;
    cl.Cp.rightCols(nc) = plant.E * controller.Cc;

    cl.Dpp.resize(pz, mw1 + mw2);
    cl.Dpp.leftCols(mw1) = plant.D1 + plant.E * controller.Dc * plant.F1;
    cl.Dpp.rightCols(mw2) = plant.E * controller.F2;
    return cl;
}

ClosedLoop attach_bootstrap_channel(const ClosedLoop& cl, const Controller& controller) {
    const int nc = controller.nc();
    if (nc == 0) {
        throw std::invalid_argument(
            "attach_bootstrap_channel: controller has no dynamic state (nc = 0)");
    }
    if (cl.n_ctrl != nc || cl.states() != cl.n_plant + nc) {
        throw std::invalid_argument(
            "attach_bootstrap_channel: closed loop was not built from this controller "
            "(controller-state dimensions disagree)");
    }
    if ((cl.A.bottomRightCorner(nc, nc) - controller.Ac).cwiseAbs().maxCoeff() > 0.0) {
        throw std::invalid_argument(
            "attach_bootstrap_channel: closed loop was not built from this controller "
            "(Ac block differs)");
    }
    ClosedLoop out = cl;
    out.has_uncertainty = true;
    out.Bu = MatrixXd::Zero(cl.states(), nc);
    out.Bu.bottomRows(nc) = controller.Ac;
    out.Cu = MatrixXd::Zero(nc, cl.states());
    out.Cu.rightCols(nc) = MatrixXd::Identity(nc, nc);
    out.Dpu = MatrixXd::Zero(cl.perf_outputs(), nc);
    return out;
}

}  // namespace ecperf
