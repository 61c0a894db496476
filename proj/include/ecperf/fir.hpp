#pragma once

#include "ecperf/ss_core.hpp"

#include <vector>

namespace ecperf {

// Window-truncation FIR approximation of an IIR controller, realized with the
// extended state (y(t-T); ...; y(t-1); xc(t)). The impulse response matches
// the source controller for lags 0..T and is zero beyond.
struct FirController {
    int horizon = 1;
    Controller realization;
};

FirController fir_truncate(const Controller& controller, int horizon);

// Markov parameters h(0..lags): h(0) = Dc, h(k) = Cc Ac^(k-1) Bc.
std::vector<MatrixXd> impulse_response(const Controller& controller, int lags);

}  // namespace ecperf
