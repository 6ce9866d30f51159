// ising.hpp - Spin-model form of quadratic binary polynomials.
#ifndef HQP_ISING_HPP
#define HQP_ISING_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hqp/polynomial.hpp"

namespace hqp {

// energy(z) = offset + sum_i h_i z_i + sum_{i<j} J_ij z_i z_j over z in {-1,+1}.
struct IsingModel {
    int num_spins = 0;
    std::vector<double> field;                   // h_i
    std::map<std::pair<int, int>, double> coupling; // J_ij, i < j
    double offset = 0.0;

    double energy(const std::vector<std::int8_t> &z) const {
        if (static_cast<int>(z.size()) != num_spins)
            throw std::invalid_argument("ising energy: spin vector length mismatch");
        double total = offset;
        for (int i = 0; i < num_spins; ++i)
            total += field[i] * z[i];
        for (const auto &[pair, j] : coupling)
            total += j * z[pair.first] * z[pair.second];
        return total;
    }
};

// Exact substitution x = (z + 1)/2 so that ising.energy(2x - 1) equals
// poly.evaluate(x) for every assignment, offset included.
inline IsingModel to_ising(const BinaryPolynomial &poly) {
    if (poly.degree() > 2)
        throw std::invalid_argument("to_ising: polynomial degree exceeds 2");
    IsingModel model;
    model.num_spins = poly.num_vars();
    model.field.assign(poly.num_vars(), 0.0);
    for (const auto &[vars, coeff] : poly.terms()) {
        switch (vars.size()) {
        case 0:
            model.offset += coeff;
            break;
        case 1:
            // c x = c/2 z + c/2
            model.field[vars[0]] += 0.5 * coeff;
            model.offset += 0.5 * coeff;
            break;
        case 2:
            // c x_i x_j = c/4 (z_i z_j + z_i + z_j + 1)
            model.coupling[{vars[0], vars[1]}] += 0.25 * coeff;
            model.field[vars[0]] += 0.25 * coeff;
            model.field[vars[1]] += 0.25 * coeff;
            model.offset += 0.25 * coeff;
            break;
        default:
            throw std::logic_error("to_ising: unreachable");
        }
    }
    for (auto it = model.coupling.begin(); it != model.coupling.end();) {
        if (std::abs(it->second) <= BinaryPolynomial::kPruneEpsilon)
            it = model.coupling.erase(it);
        else
            ++it;
    }
    return model;
}

// Inverse substitution z = 2x - 1.
inline BinaryPolynomial from_ising(const IsingModel &model) {
    BinaryPolynomial poly(model.num_spins);
    poly.add_constant(model.offset);
    for (int i = 0; i < model.num_spins; ++i) {
        if (model.field[i] == 0.0)
            continue;
        poly.add_term({i}, 2.0 * model.field[i]);
        poly.add_constant(-model.field[i]);
    }
    for (const auto &[pair, j] : model.coupling) {
        poly.add_term({pair.first, pair.second}, 4.0 * j);
        poly.add_term({pair.first}, -2.0 * j);
        poly.add_term({pair.second}, -2.0 * j);
        poly.add_constant(j);
    }
    return poly;
}

} // namespace hqp

#endif
