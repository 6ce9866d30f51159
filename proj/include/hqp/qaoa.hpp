// qaoa.hpp - Statevector simulation of the alternating phase/mixer ansatz
// with classical parameter optimization, plus the balanced-selection rule.
#ifndef HQP_QAOA_HPP
#define HQP_QAOA_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hqp/nelder_mead.hpp"
#include "hqp/polynomial.hpp"
#include "hqp/random.hpp"
#include "hqp/solve_result.hpp"

namespace hqp {

struct QAOAParams {
    int depth = 1;
    int restarts = 10;
    int max_iterations = 200;
    int top_k = 10;
    std::uint64_t seed = 0;
    int max_qubits = 20;
    // Mixer H_M = -sum sigma^x by default; flipping the sign reparametrizes
    // beta -> pi - beta and leaves the reachable distributions unchanged.
    bool mixer_negative = true;

    void validate() const {
        if (depth < 1 || restarts < 1 || max_iterations < 1 || top_k < 1)
            throw std::invalid_argument("qaoa: parameters must be positive");
    }
};

struct QAOAOutput {
    std::vector<double> probabilities; // indexed by basis state, bit i = var i
    std::vector<double> gamma, beta;   // best parameters found
    double expectation = 0.0;          // <E> at the best parameters
};

namespace detail {

// Amplitudes are kept as split real/imaginary arrays: the per-qubit butterfly
// then vectorizes, which is worth about 3x over std::complex here.
class Statevector {
  public:
    Statevector(const BinaryPolynomial &poly, bool mixer_negative)
        : n_(poly.num_vars()), mixer_negative_(mixer_negative) {
        const std::size_t dim = std::size_t{1} << n_;
        diagonal_.resize(dim);
        for (std::size_t idx = 0; idx < dim; ++idx)
            diagonal_[idx] = poly.evaluate(assignment_from_index(idx, n_));
        // The diagonal takes few distinct values, so phase factors can be
        // table lookups instead of per-state trigonometry.
        std::unordered_map<double, std::uint32_t> distinct;
        value_index_.resize(dim);
        for (std::size_t idx = 0; idx < dim; ++idx) {
            auto [it, inserted] = distinct.emplace(diagonal_[idx],
                                                   static_cast<std::uint32_t>(values_.size()));
            if (inserted)
                values_.push_back(diagonal_[idx]);
            value_index_[idx] = it->second;
        }
        re_.resize(dim);
        im_.resize(dim);
        phase_re_.resize(values_.size());
        phase_im_.resize(values_.size());
    }

    void reset_uniform() {
        const double amp = 1.0 / std::sqrt(static_cast<double>(re_.size()));
        std::fill(re_.begin(), re_.end(), amp);
        std::fill(im_.begin(), im_.end(), 0.0);
    }

    void apply_phase(double gamma) {
        for (std::size_t v = 0; v < values_.size(); ++v) {
            phase_re_[v] = std::cos(gamma * values_[v]);
            phase_im_[v] = -std::sin(gamma * values_[v]);
        }
        for (std::size_t idx = 0; idx < re_.size(); ++idx) {
            const double pr = phase_re_[value_index_[idx]];
            const double pi = phase_im_[value_index_[idx]];
            const double r = re_[idx], i = im_[idx];
            re_[idx] = r * pr - i * pi;
            im_[idx] = r * pi + i * pr;
        }
    }

    // exp(-i beta H_M) with H_M = -+sum sigma^x applied qubit by qubit.
    void apply_mixer(double beta) {
        const double c = std::cos(beta);
        const double s = mixer_negative_ ? std::sin(beta) : -std::sin(beta);
        for (int q = 0; q < n_; ++q) {
            const std::size_t bit = std::size_t{1} << q;
            for (std::size_t block = 0; block < re_.size(); block += 2 * bit) {
                double *ar = re_.data() + block, *ai = im_.data() + block;
                double *br = ar + bit, *bi = ai + bit;
                for (std::size_t j = 0; j < bit; ++j) {
                    const double xr = ar[j], xi = ai[j], yr = br[j], yi = bi[j];
                    // a' = c a + i s b, b' = i s a + c b
                    ar[j] = c * xr - s * yi;
                    ai[j] = c * xi + s * yr;
                    br[j] = c * yr - s * xi;
                    bi[j] = c * yi + s * xr;
                }
            }
        }
    }

    double expectation() const {
        double total = 0.0;
        for (std::size_t idx = 0; idx < re_.size(); ++idx)
            total += (re_[idx] * re_[idx] + im_[idx] * im_[idx]) * diagonal_[idx];
        return total;
    }

    std::vector<double> probabilities() const {
        std::vector<double> probs(re_.size());
        for (std::size_t idx = 0; idx < re_.size(); ++idx)
            probs[idx] = re_[idx] * re_[idx] + im_[idx] * im_[idx];
        return probs;
    }

    double run(const std::vector<double> &gamma, const std::vector<double> &beta) {
        reset_uniform();
        for (std::size_t l = 0; l < gamma.size(); ++l) {
            apply_phase(gamma[l]);
            apply_mixer(beta[l]);
        }
        return expectation();
    }

  private:
    int n_;
    bool mixer_negative_;
    std::vector<double> diagonal_;
    std::vector<double> values_;
    std::vector<std::uint32_t> value_index_;
    std::vector<double> phase_re_, phase_im_;
    std::vector<double> re_, im_;
};

} // namespace detail

// Optimizes (gamma, beta) over restarts of a Nelder-Mead search from uniform
// random starts in [0, pi)^2L and returns the final-state probabilities at
// the best parameters found. Deterministic given the seed.
inline QAOAOutput qaoa_statevector(const BinaryPolynomial &poly, const QAOAParams &params) {
    params.validate();
    if (poly.num_vars() > params.max_qubits)
        throw std::invalid_argument("qaoa: variable count exceeds the simulator cap");
    if (poly.num_vars() == 0)
        throw std::invalid_argument("qaoa: polynomial has no variables");

    detail::Statevector state(poly, params.mixer_negative);
    const int dim = 2 * params.depth;
    const double pi = 3.14159265358979323846;

    auto objective = [&](const std::vector<double> &p) {
        const std::vector<double> gamma(p.begin(), p.begin() + params.depth);
        const std::vector<double> beta(p.begin() + params.depth, p.end());
        return state.run(gamma, beta);
    };

    rng::Prng prng(rng::mix(params.seed, 0x71a0aULL));
    NelderMeadOptions opts;
    opts.max_iterations = params.max_iterations;
    opts.initial_step = 0.1;

    std::vector<double> best_params;
    double best_value = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < params.restarts; ++restart) {
        std::vector<double> x0(dim);
        for (double &v : x0)
            v = prng.unit() * pi;
        const auto result = nelder_mead(objective, x0, opts);
        if (result.value < best_value) {
            best_value = result.value;
            best_params = result.x;
        }
    }

    QAOAOutput out;
    out.gamma.assign(best_params.begin(), best_params.begin() + params.depth);
    out.beta.assign(best_params.begin() + params.depth, best_params.end());
    out.expectation = state.run(out.gamma, out.beta);
    out.probabilities = state.probabilities();
    return out;
}

// Best balanced partition among the top_k most probable basis states (ties by
// smaller index). Falls back to the most probable state, flagged infeasible,
// when no candidate decodes to a balanced partition.
inline SolveResult select_best_balanced(const std::vector<double> &probabilities,
                                        const Hypergraph &h, const CutFunction &f, int k,
                                        int top_k, bool one_hot) {
    if (probabilities.empty())
        throw std::invalid_argument("select_best_balanced: empty distribution");
    const int num_vars = one_hot ? h.num_vertices() * k : h.num_vertices();
    if (probabilities.size() != (std::size_t{1} << num_vars))
        throw std::invalid_argument("select_best_balanced: distribution size mismatch");

    std::vector<std::size_t> order(probabilities.size());
    std::iota(order.begin(), order.end(), 0u);
    const std::size_t take = std::min<std::size_t>(top_k, order.size());
    std::partial_sort(order.begin(), order.begin() + take, order.end(),
                      [&](std::size_t a, std::size_t b) {
                          if (probabilities[a] != probabilities[b])
                              return probabilities[a] > probabilities[b];
                          return a < b;
                      });

    SolveResult best;
    best.solver = "qaoa";
    bool found = false;
    for (std::size_t rank = 0; rank < take; ++rank) {
        SolveResult candidate;
        candidate.solver = "qaoa";
        candidate.assignment = assignment_from_index(order[rank], num_vars);
        finalize_result(candidate, h, f, k, one_hot);
        if (!candidate.feasible)
            continue;
        if (!found || candidate.cut_value < best.cut_value) {
            best = std::move(candidate);
            found = true;
        }
    }
    if (found)
        return best;
    best.assignment = assignment_from_index(order[0], num_vars);
    finalize_result(best, h, f, k, one_hot);
    best.feasible = false;
    return best;
}

} // namespace hqp

#endif
