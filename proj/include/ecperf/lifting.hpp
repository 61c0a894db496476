#pragma once

#include "ecperf/ss_core.hpp"

namespace ecperf {

// T-step lifted loop: xi(k+1) = A xi(k) + Bp wp~(k), zp~(k) = Cp xi(k) + Dpp wp~(k)
// over stacked signals wp~ = (wp(kT); ...; wp(kT+T-1)), time-ascending.
// Dpp is block lower triangular with the Markov parameters of the base loop.
struct LiftedSystem {
    int period = 1;
    MatrixXd A, Bp, Cp, Dpp;

    bool has_uncertainty = false;
    MatrixXd Bu, Cu, Dpu;

    int base_perf_inputs = 0;
    int base_perf_outputs = 0;

    int states() const { return static_cast<int>(A.rows()); }
    int perf_inputs() const { return static_cast<int>(Bp.cols()); }
    int perf_outputs() const { return static_cast<int>(Cp.rows()); }
};

LiftedSystem lift(const ClosedLoop& cl, int period);

// Lifted loop with the controller state zeroed in the first update of each
// period: A is replaced by A_cl^(T-1) * A_r where A_r equals the closed-loop
// map with the Ac block removed. Bp, Cp, Dpp are those of lift().
LiftedSystem lift_reset(const ClosedLoop& cl, const Plant& plant, const Controller& controller,
                        int period);

// Kronecker expansion I_T (x) {Qp, Sp, Rp} matching the stacked signal order.
PerformanceIndex lift_performance(const PerformanceIndex& p, int period);

}  // namespace ecperf
