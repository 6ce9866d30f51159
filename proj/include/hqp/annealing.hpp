// annealing.hpp - Single-flip Metropolis simulated annealing over
// arbitrary-degree binary polynomials with a geometric beta schedule.
#ifndef HQP_ANNEALING_HPP
#define HQP_ANNEALING_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hqp/polynomial.hpp"
#include "hqp/random.hpp"
#include "hqp/solve_result.hpp"

namespace hqp {

struct SAParams {
    int reads = 100;
    int sweeps = 1000;
    double beta_min = 0.1;
    double beta_max = 10.0;
    std::uint64_t seed = 0;

    void validate() const {
        if (reads < 1 || sweeps < 1)
            throw std::invalid_argument("sa: reads and sweeps must be positive");
        if (!(0.0 < beta_min && beta_min < beta_max))
            throw std::invalid_argument("sa: need 0 < beta_min < beta_max");
    }
};

namespace detail {

// Flattened term layout with a per-variable term index. Tracking the number
// of zero bits per term makes each flip delta O(terms containing i).
class CompiledPolynomial {
  public:
    explicit CompiledPolynomial(const BinaryPolynomial &poly) : num_vars_(poly.num_vars()) {
        constant_ = poly.constant();
        terms_of_.assign(num_vars_, {});
        for (const auto &[vars, coeff] : poly.terms()) {
            if (vars.empty())
                continue;
            const int t = static_cast<int>(coeffs_.size());
            coeffs_.push_back(coeff);
            arity_.push_back(static_cast<int>(vars.size()));
            for (int v : vars) {
                var_lists_.push_back(v);
                terms_of_[v].push_back(t);
            }
            offsets_.push_back(static_cast<int>(var_lists_.size()) - arity_.back());
        }
    }

    int num_vars() const { return num_vars_; }

    void reset(const Assignment &x) {
        zeros_.assign(coeffs_.size(), 0);
        for (std::size_t t = 0; t < coeffs_.size(); ++t)
            for (int i = 0; i < arity_[t]; ++i)
                zeros_[t] += x[var_lists_[offsets_[t] + i]] == 0;
    }

    double energy(const Assignment &x) const {
        double total = constant_;
        for (std::size_t t = 0; t < coeffs_.size(); ++t)
            if (zeros_[t] == 0)
                total += coeffs_[t];
        (void)x;
        return total;
    }

    double flip_delta(const Assignment &x, int i) const {
        double delta = 0.0;
        if (x[i]) {
            for (int t : terms_of_[i])
                if (zeros_[t] == 0)
                    delta -= coeffs_[t];
        } else {
            for (int t : terms_of_[i])
                if (zeros_[t] == 1)
                    delta += coeffs_[t];
        }
        return delta;
    }

    void apply_flip(Assignment &x, int i) {
        const int step = x[i] ? 1 : -1; // flipping 1 -> 0 adds a zero
        for (int t : terms_of_[i])
            zeros_[t] += step;
        x[i] ^= 1u;
    }

  private:
    int num_vars_;
    double constant_ = 0.0;
    std::vector<double> coeffs_;
    std::vector<int> arity_;
    std::vector<int> offsets_;
    std::vector<int> var_lists_;
    std::vector<std::vector<int>> terms_of_;
    std::vector<int> zeros_;
};

// Quadratic specialization: with s_i = lin_i + sum_j a_ij x_j maintained
// incrementally, a flip delta is one multiply and an accepted flip touches
// only the neighbors of i.
class CompiledQuadratic {
  public:
    explicit CompiledQuadratic(const BinaryPolynomial &poly) : num_vars_(poly.num_vars()) {
        constant_ = poly.constant();
        linear_.assign(num_vars_, 0.0);
        std::vector<std::vector<std::pair<int, double>>> adjacency(num_vars_);
        for (const auto &[vars, coeff] : poly.terms()) {
            if (vars.size() == 1) {
                linear_[vars[0]] += coeff;
            } else if (vars.size() == 2) {
                adjacency[vars[0]].emplace_back(vars[1], coeff);
                adjacency[vars[1]].emplace_back(vars[0], coeff);
            }
        }
        offsets_.reserve(num_vars_ + 1);
        offsets_.push_back(0);
        for (const auto &row : adjacency) {
            for (const auto &[j, a] : row) {
                neighbor_.push_back(j);
                weight_.push_back(a);
            }
            offsets_.push_back(static_cast<int>(neighbor_.size()));
        }
    }

    int num_vars() const { return num_vars_; }

    void reset(const Assignment &x) {
        sums_ = linear_;
        for (int i = 0; i < num_vars_; ++i) {
            if (!x[i])
                continue;
            for (int t = offsets_[i]; t < offsets_[i + 1]; ++t)
                sums_[neighbor_[t]] += weight_[t];
        }
    }

    double energy(const Assignment &x) const {
        // Direct evaluation; only called once per read.
        double total = constant_;
        for (int i = 0; i < num_vars_; ++i) {
            if (!x[i])
                continue;
            total += linear_[i];
            for (int t = offsets_[i]; t < offsets_[i + 1]; ++t) {
                const int j = neighbor_[t];
                if (j < i && x[j])
                    total += weight_[t];
            }
        }
        return total;
    }

    double flip_delta(const Assignment &x, int i) const {
        return x[i] ? -sums_[i] : sums_[i];
    }

    void apply_flip(Assignment &x, int i) {
        const double step = x[i] ? -1.0 : 1.0;
        for (int t = offsets_[i]; t < offsets_[i + 1]; ++t)
            sums_[neighbor_[t]] += step * weight_[t];
        x[i] ^= 1u;
    }

  private:
    int num_vars_;
    double constant_ = 0.0;
    std::vector<double> linear_;
    std::vector<int> offsets_;
    std::vector<int> neighbor_;
    std::vector<double> weight_;
    std::vector<double> sums_;
};

template <typename Compiled>
std::vector<SolveResult> anneal_with(Compiled &compiled, const SAParams &params) {
    const int n = compiled.num_vars();
    const double beta_ratio = params.beta_max / params.beta_min;
    std::vector<SolveResult> results;
    results.reserve(params.reads);

    for (int read = 0; read < params.reads; ++read) {
        rng::Prng prng(rng::mix(params.seed, static_cast<std::uint64_t>(read)));
        Assignment x(n);
        for (int i = 0; i < n; ++i)
            x[i] = static_cast<std::uint8_t>(prng.coin());
        compiled.reset(x);

        for (int sweep = 0; sweep < params.sweeps; ++sweep) {
            const double frac = params.sweeps > 1
                                    ? static_cast<double>(sweep) / (params.sweeps - 1)
                                    : 1.0;
            const double beta = params.beta_min * std::pow(beta_ratio, frac);
            for (int step = 0; step < n; ++step) {
                const int i = static_cast<int>(prng.below(static_cast<std::uint64_t>(n)));
                const double delta = compiled.flip_delta(x, i);
                if (delta <= 0.0 || prng.unit() < std::exp(-beta * delta))
                    compiled.apply_flip(x, i);
            }
        }
        SolveResult result;
        result.assignment = x;
        result.energy = compiled.energy(x);
        result.solver = "sa";
        result.seed = params.seed;
        results.push_back(std::move(result));
    }
    return results;
}

} // namespace detail

// One result per read. Each read starts from a uniform random state and runs
// sweeps * num_vars single-bit Metropolis proposals, advancing beta
// geometrically per sweep. Read r draws from the stream (seed, r), so the
// whole run is deterministic for a fixed seed. Quadratic inputs route to the
// specialized compiled form; higher-degree inputs use zero-count tracking.
inline std::vector<SolveResult> simulated_annealing(const BinaryPolynomial &poly,
                                                    const SAParams &params) {
    params.validate();
    if (poly.num_vars() == 0) {
        SolveResult r;
        r.energy = poly.constant();
        r.solver = "sa";
        r.seed = params.seed;
        return std::vector<SolveResult>(params.reads, r);
    }
    if (poly.degree() <= 2) {
        detail::CompiledQuadratic compiled(poly);
        return detail::anneal_with(compiled, params);
    }
    detail::CompiledPolynomial compiled(poly);
    return detail::anneal_with(compiled, params);
}

// Lowest-energy read, ties to the earliest.
inline const SolveResult &best_read(const std::vector<SolveResult> &reads) {
    if (reads.empty())
        throw std::invalid_argument("best_read: no reads");
    std::size_t best = 0;
    for (std::size_t i = 1; i < reads.size(); ++i)
        if (reads[i].energy < reads[best].energy)
            best = i;
    return reads[best];
}

} // namespace hqp

#endif
