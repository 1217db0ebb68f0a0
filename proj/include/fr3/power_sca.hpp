// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------
//
// Transmit power allocation by successive convex approximation.
//
// R_k(P) = log2(I_k(P) + p_k g_kk) - log2(I_k(P)) is a difference of concave
// functions. Each outer step keeps the first term and replaces the subtracted
// one by its first-order Taylor expansion at the current point P_t, which
// upper-bounds it. The resulting surrogate
//
//   sum_k [ log2(I_k(P) + p_k g_kk) - sum_i rho_ki p_i ]
//
// is concave, minorizes the sum rate (up to constants) and is tight at P_t, so
// maximizing it never decreases the true sum rate. The inner concave program
// is solved by projected gradient ascent with Armijo backtracking.

#pragma once

#include "fr3/config.hpp"
#include "fr3/rate.hpp"

#include <vector>

namespace fr3
{

struct InnerOptions
{
    double tol = 1e-8; // on the gradient mapping, in units of the budget
    int max_iter = 500;
    double armijo_c = 1e-4;
    double backtrack = 0.5;
    Linearization linearization = Linearization::ExactDerivative;
};

struct ScaOptions
{
    InnerOptions inner;
    double outer_tol = 1e-6; // bits/s/Hz
    int outer_max = 50;

    static ScaOptions from_config(const ScenarioConfig &cfg);
};

struct ScaTrace
{
    // True sum rate at the initial point followed by one entry per outer step.
    std::vector<double> objective_per_iteration;
    int iterations = 0;
    bool converged = false;
};

struct ScaResult
{
    PowerAllocation allocation;
    ScaTrace trace;
};

// rho_{k,i}: slope of log2(I_k) in p_i at p_t. Zero for i == k.
double surrogate_gradient(const GainMatrix &g, std::span<const double> p_t, std::size_t k,
                          std::size_t i,
                          Linearization lin = Linearization::ExactDerivative);

// sum_k [ log2(I_k(p) + p_k g_kk) - sum_i rho_ki(p_t) p_i ], constants dropped.
double surrogate_objective(const GainMatrix &g, std::span<const double> p,
                           std::span<const double> p_t,
                           Linearization lin = Linearization::ExactDerivative);

// Surrogate rate of IU k with the constants restored:
// log2(I_k(p) + p_k g_kk) - log2(I_k(p_t)) - sum_i rho_ki (p_i - p_t,i).
// A lower bound on R_k(p), equal to it at p = p_t.
double surrogate_rate(const GainMatrix &g, std::span<const double> p, std::span<const double> p_t,
                      std::size_t k);

// Maximizes the surrogate built at p_t over {p >= 0, sum p <= budget}.
// The returned point never scores below p_t on the surrogate.
PowerAllocation solve_inner(const GainMatrix &g, const PowerAllocation &p_t, double budget,
                            const InnerOptions &opts = {});

// Outer loop: repeatedly re-linearizes and re-solves until the true sum rate
// improves by less than outer_tol or outer_max steps have run.
ScaResult sca_power(const GainMatrix &g, double budget, const PowerAllocation &init,
                    const ScaOptions &opts = {});

// Same, starting from the uniform allocation budget / K.
ScaResult sca_power(const GainMatrix &g, double budget, const ScaOptions &opts = {});

} // namespace fr3
