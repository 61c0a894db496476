#pragma once

#include "ecperf/matrix_utils.hpp"

#include <string>
#include <vector>

namespace ecperf::sdp {

// Linear matrix inequality in block-diagonal form:
//
//   maximize    objective . y
//   subject to  F(y) = F0 + sum_i y_i F_i  >= 0   (each block PSD)
//
// Per-variable data is stored sparsely over blocks; a variable either
// contributes a dense symmetric matrix to a block or a symmetric basis
// element E_kl (used for plain "X >= eps I" constraints).
struct BlockTerm {
    int block = 0;
    MatrixXd dense;              // used when basis_k < 0
    int basis_k = -1;
    int basis_l = -1;
};

struct Problem {
    std::vector<int> block_dims;
    std::vector<MatrixXd> constant;             // F0 blocks, symmetric
    std::vector<std::vector<BlockTerm>> terms;  // per variable
    VectorXd objective;

    int add_block(int dim);
    int add_variable();
    void set_dense(int var, int block, MatrixXd coeff);
    void set_basis(int var, int block, int k, int l);
};

enum class Status { Optimal, MaxIterations, NumericalTrouble };

struct Solution {
    Status status = Status::NumericalTrouble;
    VectorXd y;
    std::vector<MatrixXd> slack;  // F(y) at the solution, per block
    double objective_value = 0.0;
    double duality_gap = 0.0;
    double primal_residual = 0.0;  // ||F0 + sum y_i F_i - S||
    double dual_residual = 0.0;
    int iterations = 0;

    bool optimal() const { return status == Status::Optimal; }
};

struct Options {
    int max_iterations = 120;
    double tolerance = 1e-9;
    double step_fraction = 0.98;
};

// Infeasible-start primal-dual interior-point method (HKM direction with
// Mehrotra predictor-corrector).
Solution solve(const Problem& problem, const Options& options = {});

std::string to_string(Status status);

}  // namespace ecperf::sdp
