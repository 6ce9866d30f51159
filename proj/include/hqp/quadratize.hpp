// quadratize.hpp - Rosenberg degree reduction of higher-order polynomials.
#ifndef HQP_QUADRATIZE_HPP
#define HQP_QUADRATIZE_HPP

#include <map>
#include <utility>

#include "hqp/polynomial.hpp"

namespace hqp {

struct QuadratizationResult {
    BinaryPolynomial poly; // degree <= 2, original variables first
    int num_auxiliary = 0;
};

// Repeatedly substitutes the most frequent variable pair inside degree >= 3
// terms by a fresh auxiliary y, adding the Rosenberg penalty
// M * (uv - 2uy - 2vy + 3y) with M = 1 + sum |coefficients| over the rewritten
// terms. The penalty vanishes exactly when y = uv, so minimizing over the
// auxiliaries reproduces the original value at every original assignment.
inline QuadratizationResult quadratize_rosenberg(const BinaryPolynomial &input) {
    BinaryPolynomial current = input;
    int num_aux = 0;

    while (current.degree() > 2) {
        // Most frequent pair among high-degree terms; ties go to the
        // lexicographically smallest pair for determinism.
        std::map<std::pair<int, int>, int> pair_counts;
        for (const auto &[vars, coeff] : current.terms()) {
            if (vars.size() < 3)
                continue;
            for (std::size_t i = 0; i < vars.size(); ++i)
                for (std::size_t j = i + 1; j < vars.size(); ++j)
                    ++pair_counts[{vars[i], vars[j]}];
        }
        std::pair<int, int> best{-1, -1};
        int best_count = 0;
        for (const auto &[pair, count] : pair_counts) {
            if (count > best_count) {
                best = pair;
                best_count = count;
            }
        }
        const auto [u, v] = best;

        const int y = current.num_vars();
        BinaryPolynomial next(current.num_vars() + 1);
        double affected_magnitude = 0.0;
        for (const auto &[vars, coeff] : current.terms()) {
            const bool has_pair = vars.size() >= 3 &&
                                  std::binary_search(vars.begin(), vars.end(), u) &&
                                  std::binary_search(vars.begin(), vars.end(), v);
            if (!has_pair) {
                next.add_term(vars, coeff);
                continue;
            }
            affected_magnitude += std::abs(coeff);
            BinaryPolynomial::Term rewritten;
            for (int var : vars)
                if (var != u && var != v)
                    rewritten.push_back(var);
            rewritten.push_back(y);
            next.add_term(std::move(rewritten), coeff);
        }
        const double m = 1.0 + affected_magnitude;
        next.add_term({u, v}, m);
        next.add_term({u, y}, -2.0 * m);
        next.add_term({v, y}, -2.0 * m);
        next.add_term({y}, 3.0 * m);

        current = std::move(next);
        ++num_aux;
    }
    return {std::move(current), num_aux};
}

} // namespace hqp

#endif
