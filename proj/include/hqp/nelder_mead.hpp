// nelder_mead.hpp - Derivative-free simplex minimizer.
#ifndef HQP_NELDER_MEAD_HPP
#define HQP_NELDER_MEAD_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace hqp {

struct NelderMeadOptions {
    int max_iterations = 200;
    double initial_step = 0.1;
    double f_tolerance = 1e-8;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
};

inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &fn,
                                    const std::vector<double> &x0,
                                    const NelderMeadOptions &opts = {}) {
    const std::size_t dim = x0.size();
    NelderMeadResult out;

    std::vector<std::vector<double>> simplex(dim + 1, x0);
    std::vector<double> values(dim + 1);
    for (std::size_t i = 0; i < dim; ++i)
        simplex[i + 1][i] += opts.initial_step;
    for (std::size_t i = 0; i <= dim; ++i) {
        values[i] = fn(simplex[i]);
        ++out.evaluations;
    }

    std::vector<std::size_t> order(dim + 1);
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        std::iota(order.begin(), order.end(), 0u);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t lo = order.front(), hi = order.back(), second_hi = order[dim ? dim - 1 : 0];
        if (std::abs(values[hi] - values[lo]) <= opts.f_tolerance)
            break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == hi)
                continue;
            for (std::size_t d = 0; d < dim; ++d)
                centroid[d] += simplex[i][d];
        }
        for (double &c : centroid)
            c /= static_cast<double>(dim);

        auto blend = [&](double t) {
            std::vector<double> p(dim);
            for (std::size_t d = 0; d < dim; ++d)
                p[d] = centroid[d] + t * (simplex[hi][d] - centroid[d]);
            return p;
        };

        const auto reflected = blend(-1.0);
        const double fr = fn(reflected);
        ++out.evaluations;
        if (fr < values[lo]) {
            const auto expanded = blend(-2.0);
            const double fe = fn(expanded);
            ++out.evaluations;
            simplex[hi] = fe < fr ? expanded : reflected;
            values[hi] = std::min(fe, fr);
            continue;
        }
        if (fr < values[second_hi]) {
            simplex[hi] = reflected;
            values[hi] = fr;
            continue;
        }
        const auto contracted = blend(fr < values[hi] ? -0.5 : 0.5);
        const double fc = fn(contracted);
        ++out.evaluations;
        if (fc < std::min(fr, values[hi])) {
            simplex[hi] = contracted;
            values[hi] = fc;
            continue;
        }
        // shrink toward the best vertex
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == lo)
                continue;
            for (std::size_t d = 0; d < dim; ++d)
                simplex[i][d] = simplex[lo][d] + 0.5 * (simplex[i][d] - simplex[lo][d]);
            values[i] = fn(simplex[i]);
            ++out.evaluations;
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= dim; ++i)
        if (values[i] < values[best])
            best = i;
    out.x = simplex[best];
    out.value = values[best];
    return out;
}

} // namespace hqp

#endif
