// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#include "fr3/power_sca.hpp"

#include "fr3/errors.hpp"
#include "fr3/numerics.hpp"

#include <cmath>
#include <numbers>

namespace fr3
{

namespace
{

const double kLn2 = std::numbers::ln2;

// rho as a dense K x K row-major matrix.
std::vector<double> slopes(const GainMatrix &g, std::span<const double> p_t, Linearization lin)
{
    const std::size_t K = g.size();
    std::vector<double> rho(K * K, 0.0);
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t i = 0; i < K; ++i)
            rho[k * K + i] = surrogate_gradient(g, p_t, k, i, lin);
    return rho;
}

// Inner objective in normalized coordinates x = p / budget.
struct NormalizedSurrogate
{
    const GainMatrix &g;
    std::vector<double> rho_col; // sum_k rho_ki, per i
    double budget;

    double value(std::span<const double> x) const
    {
        const std::size_t K = g.size();
        double f = 0.0;
        for (std::size_t k = 0; k < K; ++k)
        {
            double s = 0.0;
            for (std::size_t i = 0; i < K; ++i)
                s += g(k, i) * x[i];
            f += std::log2(g.noise(k) + budget * s);
        }
        for (std::size_t i = 0; i < K; ++i)
            f -= rho_col[i] * budget * x[i];
        return f;
    }

    std::vector<double> gradient(std::span<const double> x) const
    {
        const std::size_t K = g.size();
        std::vector<double> grad(K, 0.0);
        for (std::size_t k = 0; k < K; ++k)
        {
            double s = 0.0;
            for (std::size_t i = 0; i < K; ++i)
                s += g(k, i) * x[i];
            const double denom = (g.noise(k) + budget * s) * kLn2;
            for (std::size_t j = 0; j < K; ++j)
                grad[j] += budget * g(k, j) / denom;
        }
        for (std::size_t j = 0; j < K; ++j)
            grad[j] -= budget * rho_col[j];
        return grad;
    }
};

std::vector<double> step(std::span<const double> x, std::span<const double> grad, double t)
{
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] = x[i] + t * grad[i];
    return project_to_power_set(y, 1.0);
}

} // namespace

ScaOptions ScaOptions::from_config(const ScenarioConfig &cfg)
{
    ScaOptions o;
    o.inner.tol = cfg.inner_tol;
    o.inner.max_iter = cfg.inner_max_iter;
    o.inner.linearization = cfg.linearization;
    o.outer_tol = cfg.outer_tol;
    o.outer_max = cfg.outer_max_iter;
    return o;
}

double surrogate_gradient(const GainMatrix &g, std::span<const double> p_t, std::size_t k,
                          std::size_t i, Linearization lin)
{
    if (i == k)
        return 0.0;
    const double I = interference(g, p_t, k);
    if (!(I > 0.0))
        throw NumericError("surrogate_gradient: interference-plus-noise must be positive");
    switch (lin)
    {
    case Linearization::ExactDerivative:
        return g(k, i) / (I * kLn2);
    case Linearization::LogRatio:
        return g(k, i) / (kLn2 * std::log2(I));
    }
    return 0.0;
}

double surrogate_objective(const GainMatrix &g, std::span<const double> p,
                           std::span<const double> p_t, Linearization lin)
{
    const std::size_t K = g.size();
    const std::vector<double> rho = slopes(g, p_t, lin);
    double f = 0.0;
    for (std::size_t k = 0; k < K; ++k)
    {
        f += std::log2(interference(g, p, k) + p[k] * g(k, k));
        for (std::size_t i = 0; i < K; ++i)
            f -= rho[k * K + i] * p[i];
    }
    return f;
}

double surrogate_rate(const GainMatrix &g, std::span<const double> p, std::span<const double> p_t,
                      std::size_t k)
{
    const std::size_t K = g.size();
    double linear = std::log2(interference(g, p_t, k));
    for (std::size_t i = 0; i < K; ++i)
        linear += surrogate_gradient(g, p_t, k, i) * (p[i] - p_t[i]);
    return std::log2(interference(g, p, k) + p[k] * g(k, k)) - linear;
}

PowerAllocation solve_inner(const GainMatrix &g, const PowerAllocation &p_t, double budget,
                            const InnerOptions &opts)
{
    const std::size_t K = g.size();
    if (p_t.p.size() != K)
        throw DimensionError("solve_inner: expansion point has the wrong length");
    if (!(budget > 0.0))
        throw DomainError("solve_inner: budget must be positive");

    const std::vector<double> rho = slopes(g, p_t.p, opts.linearization);
    NormalizedSurrogate obj{g, std::vector<double>(K, 0.0), budget};
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t i = 0; i < K; ++i)
            obj.rho_col[i] += rho[k * K + i];

    std::vector<double> x(K);
    for (std::size_t i = 0; i < K; ++i)
        x[i] = p_t.p[i] / budget;
    x = project_to_power_set(x, 1.0);
    double fx = obj.value(x);

    for (int it = 0; it < opts.max_iter; ++it)
    {
        const std::vector<double> grad = obj.gradient(x);
        if (!all_finite(grad))
            throw NumericError("solve_inner: non-finite gradient");

        // Gradient mapping at unit step.
        const std::vector<double> probe = step(x, grad, 1.0);
        double gm = 0.0;
        for (std::size_t i = 0; i < K; ++i)
            gm += (probe[i] - x[i]) * (probe[i] - x[i]);
        if (std::sqrt(gm) <= opts.tol)
            break;

        double t = 1.0;
        bool accepted = false;
        std::vector<double> y;
        double fy = fx;
        for (int bt = 0; bt < 80; ++bt, t *= opts.backtrack)
        {
            y = (bt == 0) ? probe : step(x, grad, t);
            fy = obj.value(y);
            double ascent = 0.0;
            for (std::size_t i = 0; i < K; ++i)
                ascent += grad[i] * (y[i] - x[i]);
            if (fy >= fx + opts.armijo_c * ascent)
            {
                accepted = true;
                break;
            }
        }
        if (!accepted || fy <= fx)
            break;
        x = std::move(y);
        fx = fy;
    }

    std::vector<double> p(K);
    for (std::size_t i = 0; i < K; ++i)
        p[i] = x[i] * budget;
    PowerAllocation out{project_to_power_set(p, budget)};

    // Rescaling between coordinates can cost an ulp; never return a point
    // that is worse than the expansion point on the surrogate.
    if (p_t.feasible(budget) &&
        surrogate_objective(g, out.p, p_t.p, opts.linearization) <
            surrogate_objective(g, p_t.p, p_t.p, opts.linearization))
        return p_t;
    return out;
}

ScaResult sca_power(const GainMatrix &g, double budget, const PowerAllocation &init,
                    const ScaOptions &opts)
{
    if (init.p.size() != g.size())
        throw DimensionError("sca_power: initial allocation has the wrong length");
    if (!init.feasible(budget, 1e-12 * budget))
        throw NumericError("sca_power: initial allocation is infeasible");

    ScaResult res;
    res.allocation = init;
    double rate = sum_rate(g, init).sum_rate;
    res.trace.objective_per_iteration.push_back(rate);

    for (int t = 0; t < opts.outer_max; ++t)
    {
        PowerAllocation next = solve_inner(g, res.allocation, budget, opts.inner);
        const double next_rate = sum_rate(g, next).sum_rate;
        res.trace.objective_per_iteration.push_back(next_rate);
        ++res.trace.iterations;

        const double improvement = next_rate - rate;
        if (next_rate >= rate)
        {
            res.allocation = std::move(next);
            rate = next_rate;
        }
        if (improvement < opts.outer_tol)
        {
            res.trace.converged = true;
            break;
        }
    }
    return res;
}

ScaResult sca_power(const GainMatrix &g, double budget, const ScaOptions &opts)
{
    return sca_power(g, budget, PowerAllocation::uniform(g.size(), budget), opts);
}

} // namespace fr3
