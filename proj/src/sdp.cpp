#include "ecperf/sdp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ecperf::sdp {

int Problem::add_block(int dim) {
    block_dims.push_back(dim);
    constant.emplace_back(MatrixXd::Zero(dim, dim));
    return static_cast<int>(block_dims.size()) - 1;
}

int Problem::add_variable() {
    terms.emplace_back();
    objective.conservativeResize(terms.size());
    objective(terms.size() - 1) = 0.0;
    return static_cast<int>(terms.size()) - 1;
}

void Problem::set_dense(int var, int block, MatrixXd coeff) {
    BlockTerm t;
    t.block = block;
    t.dense = std::move(coeff);
    terms.at(var).push_back(std::move(t));
}

void Problem::set_basis(int var, int block, int k, int l) {
    BlockTerm t;
    t.block = block;
    t.basis_k = std::min(k, l);
    t.basis_l = std::max(k, l);
    terms.at(var).push_back(t);
}

std::string to_string(Status status) {
    switch (status) {
        case Status::Optimal: return "optimal";
        case Status::MaxIterations: return "max-iterations";
        case Status::NumericalTrouble: return "numerical-trouble";
    }
    return "unknown";
}

namespace {

using Blocks = std::vector<MatrixXd>;

// F_i . M summed over the variable's active blocks.
double term_dot(const std::vector<BlockTerm>& terms, const Blocks& m) {
    double acc = 0.0;
    for (const auto& t : terms) {
        const MatrixXd& mb = m[t.block];
        if (t.basis_k >= 0) {
            acc += (t.basis_k == t.basis_l) ? mb(t.basis_k, t.basis_k)
                                            : mb(t.basis_k, t.basis_l) + mb(t.basis_l, t.basis_k);
        } else {
            acc += t.dense.cwiseProduct(mb).sum();
        }
    }
    return acc;
}

// Adds alpha * F_i to the block collection.
void term_axpy(const std::vector<BlockTerm>& terms, double alpha, Blocks& m) {
    for (const auto& t : terms) {
        MatrixXd& mb = m[t.block];
        if (t.basis_k >= 0) {
            mb(t.basis_k, t.basis_l) += alpha;
            if (t.basis_k != t.basis_l) mb(t.basis_l, t.basis_k) += alpha;
        } else {
            mb += alpha * t.dense;
        }
    }
}

double frob(const Blocks& m) {
    double acc = 0.0;
    for (const auto& b : m) acc += b.squaredNorm();
    return std::sqrt(acc);
}

double dot(const Blocks& a, const Blocks& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].cwiseProduct(b[i]).sum();
    return acc;
}

// Largest alpha in (0, 1] with X + alpha D >= 0, shrunk by `fraction`.
double max_step(const Blocks& x, const Blocks& d, double fraction) {
    double alpha = 1.0 / fraction;  // cancels the final multiply for the unconstrained case
    for (std::size_t b = 0; b < x.size(); ++b) {
        if (x[b].rows() == 0) continue;
        Eigen::LLT<MatrixXd> llt(x[b]);
        if (llt.info() != Eigen::Success) return 0.0;
        MatrixXd l = llt.matrixL();
        MatrixXd w = l.triangularView<Eigen::Lower>().solve(d[b]);
        MatrixXd m = l.triangularView<Eigen::Lower>().solve(MatrixXd(w.transpose()));
        const double lmin = min_eigenvalue(m);
        if (lmin < 0.0) alpha = std::min(alpha, -1.0 / lmin);
    }
    return std::min(1.0, fraction * alpha);
}

struct Workspace {
    Blocks z, s;  // primal matrix variable and LMI slack
    VectorXd y;
    Blocks s_inv;
};

}  // namespace

Solution solve(const Problem& problem, const Options& options) {
    const int m = static_cast<int>(problem.terms.size());
    const int nblocks = static_cast<int>(problem.block_dims.size());
    int total_dim = 0;
    for (int d : problem.block_dims) total_dim += d;
    if (m == 0 || total_dim == 0) {
        throw std::invalid_argument("sdp::solve: empty problem");
    }

    // Per-variable scaling keeps the Schur complement well conditioned.
    VectorXd var_scale(m);
    for (int i = 0; i < m; ++i) {
        double norm = 0.0;
        for (const auto& t : problem.terms[i]) {
            norm += (t.basis_k >= 0) ? ((t.basis_k == t.basis_l) ? 1.0 : 2.0)
                                     : t.dense.squaredNorm();
        }
        var_scale(i) = 1.0 / std::max(1e-8, std::sqrt(norm));
    }

    double data_norm = 1.0;
    for (const auto& f0 : problem.constant) data_norm = std::max(data_norm, f0.norm());

    Workspace w;
    w.y = VectorXd::Zero(m);
    const double init = std::max(10.0, data_norm);
    w.z.resize(nblocks);
    w.s.resize(nblocks);
    for (int b = 0; b < nblocks; ++b) {
        w.z[b] = init * MatrixXd::Identity(problem.block_dims[b], problem.block_dims[b]);
        w.s[b] = w.z[b];
    }
    w.s_inv.resize(nblocks);

    Solution sol;
    const double cnorm = 1.0 + problem.objective.lpNorm<Eigen::Infinity>();

    Blocks rb(nblocks), delta_s(nblocks), delta_z(nblocks), dz_aff(nblocks), ds_aff(nblocks);
    Eigen::MatrixXd schur(m, m);
    VectorXd ra(m), rhs(m), dy(m), dy_aff(m);

    // Scaled coefficient access: F_i^scaled = var_scale(i) * F_i, y_i^scaled =
    // y_i / var_scale(i). Residuals and products below fold the scale in.
    auto scaled_term_dot = [&](int i, const Blocks& mat) {
        return var_scale(i) * term_dot(problem.terms[i], mat);
    };

    int it = 0;
    double prev_mu = std::numeric_limits<double>::infinity();
    int stall_count = 0;
    for (; it < options.max_iterations; ++it) {
        // residuals
        for (int b = 0; b < nblocks; ++b) rb[b] = problem.constant[b] - w.s[b];
        for (int i = 0; i < m; ++i) {
            term_axpy(problem.terms[i], var_scale(i) * w.y(i), rb);
        }
        for (int i = 0; i < m; ++i) {
            ra(i) = -var_scale(i) * problem.objective(i) - scaled_term_dot(i, w.z);
        }
        const double mu = dot(w.z, w.s) / total_dim;
        const double obj = problem.objective.dot(w.y.cwiseProduct(var_scale));
        double dual_obj = 0.0;
        for (int b = 0; b < nblocks; ++b) dual_obj += problem.constant[b].cwiseProduct(w.z[b]).sum();
        const double gap = dot(w.z, w.s);
        const double rel_gap = gap / (1.0 + std::abs(obj) + std::abs(dual_obj));
        const double p_res = frob(rb) / (1.0 + data_norm);
        const double d_res = ra.lpNorm<Eigen::Infinity>() / cnorm;

        sol.iterations = it;
        sol.objective_value = obj;
        sol.duality_gap = rel_gap;
        sol.primal_residual = p_res;
        sol.dual_residual = d_res;

        if (rel_gap < options.tolerance && p_res < options.tolerance && d_res < options.tolerance) {
            sol.status = Status::Optimal;
            break;
        }
        if (!std::isfinite(mu) || mu > 1e16 || w.y.cwiseProduct(var_scale).norm() > 1e14) {
            sol.status = Status::NumericalTrouble;
            break;
        }
        if (mu > 0.9999 * prev_mu) {
            if (++stall_count > 12) {
                sol.status = Status::NumericalTrouble;
                break;
            }
        } else {
            stall_count = 0;
        }
        prev_mu = mu;

        // S^{-1} per block
        bool factor_ok = true;
        for (int b = 0; b < nblocks; ++b) {
            Eigen::LLT<MatrixXd> llt(w.s[b]);
            if (llt.info() != Eigen::Success) {
                factor_ok = false;
                break;
            }
            w.s_inv[b] = llt.solve(MatrixXd::Identity(w.s[b].rows(), w.s[b].cols()));
        }
        if (!factor_ok) {
            sol.status = Status::NumericalTrouble;
            break;
        }

        // Schur complement M_ij = F_i . (Z F_j S^{-1}), assembled per block
        // over the variables active there.
        schur.setZero();
        std::vector<std::vector<int>> active(nblocks);
        for (int i = 0; i < m; ++i) {
            for (const auto& t : problem.terms[i]) active[t.block].push_back(i);
        }
        for (int b = 0; b < nblocks; ++b) {
            if (active[b].empty()) continue;
            const int nb = problem.block_dims[b];
            std::vector<MatrixXd> g(active[b].size());
            for (std::size_t jj = 0; jj < active[b].size(); ++jj) {
                const int j = active[b][jj];
                // F_j restricted to this block
                MatrixXd fj = MatrixXd::Zero(nb, nb);
                for (const auto& t : problem.terms[j]) {
                    if (t.block != b) continue;
                    if (t.basis_k >= 0) {
                        fj(t.basis_k, t.basis_l) += 1.0;
                        if (t.basis_k != t.basis_l) fj(t.basis_l, t.basis_k) += 1.0;
                    } else {
                        fj += t.dense;
                    }
                }
                g[jj] = w.z[b] * (var_scale(j) * fj) * w.s_inv[b];
            }
            for (std::size_t ii = 0; ii < active[b].size(); ++ii) {
                const int i = active[b][ii];
                for (std::size_t jj = ii; jj < active[b].size(); ++jj) {
                    const int j = active[b][jj];
                    double v = 0.0;
                    for (const auto& t : problem.terms[i]) {
                        if (t.block != b) continue;
                        const MatrixXd& gj = g[jj];
                        if (t.basis_k >= 0) {
                            v += (t.basis_k == t.basis_l)
                                     ? gj(t.basis_k, t.basis_k)
                                     : gj(t.basis_l, t.basis_k) + gj(t.basis_k, t.basis_l);
                        } else {
                            v += t.dense.cwiseProduct(gj.transpose()).sum();
                        }
                    }
                    v *= var_scale(i);
                    schur(i, j) += v;
                    if (i != j) schur(j, i) += v;
                }
            }
        }

        Eigen::LDLT<MatrixXd> schur_ldlt(symmetrized(schur));
        if (schur_ldlt.info() != Eigen::Success) {
            sol.status = Status::NumericalTrouble;
            break;
        }

        // Direction for a given centering target and second-order correction:
        //   dZ = sigma*mu*S^{-1} - Z - (Z Rb + Corr) S^{-1} - sum_j dy_j Z F_j S^{-1}
        //   F_i . dZ = ra_i
        auto solve_direction = [&](double sigma_mu, const Blocks* corr, VectorXd& dy_out,
                                   Blocks& dz_out, Blocks& ds_out) {
            Blocks base(nblocks);
            for (int b = 0; b < nblocks; ++b) {
                base[b] = sigma_mu * w.s_inv[b] - w.z[b] - w.z[b] * rb[b] * w.s_inv[b];
                if (corr) base[b] -= (*corr)[b] * w.s_inv[b];
            }
            for (int i = 0; i < m; ++i) rhs(i) = scaled_term_dot(i, base) - ra(i);
            dy_out = schur_ldlt.solve(rhs);
            for (int b = 0; b < nblocks; ++b) ds_out[b] = rb[b];
            for (int j = 0; j < m; ++j) {
                term_axpy(problem.terms[j], var_scale(j) * dy_out(j), ds_out);
            }
            // dZ = base + Z Rb S^{-1} - Z dS S^{-1}, symmetrized
            for (int b = 0; b < nblocks; ++b) {
                dz_out[b] =
                    symmetrized(base[b] + w.z[b] * (rb[b] - ds_out[b]) * w.s_inv[b]);
            }
        };

        // predictor (affine direction, sigma = 0)
        solve_direction(0.0, nullptr, dy_aff, dz_aff, ds_aff);
        const double a_z_aff = max_step(w.z, dz_aff, 1.0);
        const double a_s_aff = max_step(w.s, ds_aff, 1.0);
        double mu_aff = 0.0;
        {
            Blocks z_try(nblocks), s_try(nblocks);
            for (int b = 0; b < nblocks; ++b) {
                z_try[b] = w.z[b] + a_z_aff * dz_aff[b];
                s_try[b] = w.s[b] + a_s_aff * ds_aff[b];
            }
            mu_aff = dot(z_try, s_try) / total_dim;
        }
        double sigma = std::pow(std::max(0.0, mu_aff / mu), 3.0);
        sigma = std::clamp(sigma, 1e-10, 1.0);

        // corrector
        Blocks corr(nblocks);
        for (int b = 0; b < nblocks; ++b) corr[b] = dz_aff[b] * ds_aff[b];
        solve_direction(sigma * mu, &corr, dy, delta_z, delta_s);

        const double a_z = max_step(w.z, delta_z, options.step_fraction);
        const double a_s = max_step(w.s, delta_s, options.step_fraction);
        if (a_z < 1e-10 && a_s < 1e-10) {
            sol.status = Status::NumericalTrouble;
            break;
        }
        w.y += a_s * dy;
        for (int b = 0; b < nblocks; ++b) {
            w.z[b] = symmetrized(w.z[b] + a_z * delta_z[b]);
            w.s[b] = symmetrized(w.s[b] + a_s * delta_s[b]);
        }
    }
    if (it == options.max_iterations) sol.status = Status::MaxIterations;

    sol.y = w.y.cwiseProduct(var_scale);
    // Report the actual LMI value F(y) rather than the slack iterate.
    sol.slack.resize(nblocks);
    for (int b = 0; b < nblocks; ++b) sol.slack[b] = problem.constant[b];
    for (int i = 0; i < m; ++i) term_axpy(problem.terms[i], sol.y(i), sol.slack);
    return sol;
}

}  // namespace ecperf::sdp
