// polynomial.hpp - Multilinear pseudo-Boolean polynomials over {0,1} variables.
#ifndef HQP_POLYNOMIAL_HPP
#define HQP_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace hqp {

using Assignment = std::vector<std::uint8_t>;

// Terms map sorted duplicate-free variable tuples to coefficients; the empty
// tuple is the constant. x_i^2 = x_i is applied on insertion and coefficients
// below 1e-12 in magnitude are pruned, so structural equality is semantic
// equality for integer-coefficient polynomials.
class BinaryPolynomial {
  public:
    using Term = std::vector<int>;
    static constexpr double kPruneEpsilon = 1e-12;

    explicit BinaryPolynomial(int num_vars) : num_vars_(num_vars) {
        if (num_vars < 0)
            throw std::invalid_argument("polynomial: negative variable count");
    }

    int num_vars() const { return num_vars_; }
    const std::map<Term, double> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(Term vars, double coeff) {
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        if (!vars.empty() && (vars.front() < 0 || vars.back() >= num_vars_))
            throw std::out_of_range("polynomial: variable index out of range");
        auto it = terms_.find(vars);
        if (it == terms_.end()) {
            if (std::abs(coeff) > kPruneEpsilon)
                terms_.emplace(std::move(vars), coeff);
            return;
        }
        it->second += coeff;
        if (std::abs(it->second) <= kPruneEpsilon)
            terms_.erase(it);
    }

    void add_constant(double c) { add_term({}, c); }

    void add_scaled(const BinaryPolynomial &other, double scale) {
        if (other.num_vars_ != num_vars_)
            throw std::invalid_argument("polynomial: variable count mismatch");
        if (scale == 0.0)
            return;
        for (const auto &[vars, coeff] : other.terms_)
            add_term(vars, scale * coeff);
    }

    // Multilinear product (x_i^2 = x_i applied on term merge).
    BinaryPolynomial times(const BinaryPolynomial &other) const {
        if (other.num_vars_ != num_vars_)
            throw std::invalid_argument("polynomial: variable count mismatch");
        BinaryPolynomial result(num_vars_);
        for (const auto &[a, ca] : terms_) {
            for (const auto &[b, cb] : other.terms_) {
                Term merged;
                merged.reserve(a.size() + b.size());
                std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                               std::back_inserter(merged));
                result.add_term(std::move(merged), ca * cb);
            }
        }
        return result;
    }

    double evaluate(const Assignment &x) const {
        if (static_cast<int>(x.size()) != num_vars_)
            throw std::invalid_argument("evaluate: assignment length mismatch");
        double total = 0.0;
        for (const auto &[vars, coeff] : terms_) {
            bool active = true;
            for (int v : vars) {
                if (!x[v]) {
                    active = false;
                    break;
                }
            }
            if (active)
                total += coeff;
        }
        return total;
    }

    // Energy change from flipping bit i, computed from the terms containing i.
    double flip_delta(const Assignment &x, int i) const {
        if (static_cast<int>(x.size()) != num_vars_)
            throw std::invalid_argument("flip_delta: assignment length mismatch");
        if (i < 0 || i >= num_vars_)
            throw std::out_of_range("flip_delta: variable index out of range");
        const double sign = x[i] ? -1.0 : 1.0;
        double delta = 0.0;
        for (const auto &[vars, coeff] : terms_) {
            if (!std::binary_search(vars.begin(), vars.end(), i))
                continue;
            bool rest_active = true;
            for (int v : vars) {
                if (v != i && !x[v]) {
                    rest_active = false;
                    break;
                }
            }
            if (rest_active)
                delta += sign * coeff;
        }
        return delta;
    }

    int degree() const {
        std::size_t best = 0;
        for (const auto &[vars, coeff] : terms_)
            best = std::max(best, vars.size());
        return static_cast<int>(best);
    }

    double constant() const {
        auto it = terms_.find(Term{});
        return it == terms_.end() ? 0.0 : it->second;
    }

    double coefficient(Term vars) const {
        std::sort(vars.begin(), vars.end());
        auto it = terms_.find(vars);
        return it == terms_.end() ? 0.0 : it->second;
    }

    bool operator==(const BinaryPolynomial &other) const {
        return num_vars_ == other.num_vars_ && terms_ == other.terms_;
    }

  private:
    int num_vars_;
    std::map<Term, double> terms_;
};

// Assignment for basis-state index idx with variable i at bit i.
inline Assignment assignment_from_index(std::uint64_t idx, int num_vars) {
    Assignment x(num_vars);
    for (int i = 0; i < num_vars; ++i)
        x[i] = static_cast<std::uint8_t>((idx >> i) & 1u);
    return x;
}

} // namespace hqp

#endif
