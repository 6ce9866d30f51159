// solve_result.hpp - Common result record for all solvers.
#ifndef HQP_SOLVE_RESULT_HPP
#define HQP_SOLVE_RESULT_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "hqp/cut.hpp"
#include "hqp/hypergraph.hpp"
#include "hqp/polynomial.hpp"

namespace hqp {

struct SolveResult {
    Assignment assignment;
    std::optional<NodePartition> decoded; // empty when one-hot decoding fails
    double energy = std::numeric_limits<double>::quiet_NaN();
    double cut_value = std::numeric_limits<double>::quiet_NaN();
    bool feasible = false; // decoded and balanced
    std::string solver;
    std::uint64_t seed = 0;
    double seconds = 0.0;
};

// Valid iff each node's one-hot block has exactly one bit set.
inline std::optional<NodePartition> decode_one_hot(const Assignment &x, int n, int k) {
    if (static_cast<int>(x.size()) != n * k)
        throw std::invalid_argument("decode_one_hot: assignment length mismatch");
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) {
        int count = 0, label = -1;
        for (int c = 0; c < k; ++c) {
            if (x[static_cast<std::size_t>(i) * k + c]) {
                ++count;
                label = c;
            }
        }
        if (count != 1)
            return std::nullopt;
        labels[i] = label;
    }
    return NodePartition(std::move(labels), k);
}

// Two-way n-variable encoding decodes directly: label = bit value.
inline NodePartition decode_two_way(const Assignment &x) {
    std::vector<int> labels(x.begin(), x.end());
    return NodePartition(std::move(labels), 2);
}

// Fills decoded/feasible/cut_value for an assignment under either layout.
inline void finalize_result(SolveResult &result, const Hypergraph &h, const CutFunction &f,
                            int k, bool one_hot) {
    result.decoded = one_hot ? decode_one_hot(result.assignment, h.num_vertices(), k)
                             : std::optional<NodePartition>(decode_two_way(result.assignment));
    result.feasible = result.decoded && is_balanced(*result.decoded);
    result.cut_value = std::numeric_limits<double>::quiet_NaN();
    if (result.decoded) {
        try {
            result.cut_value = total_cut(h, *result.decoded, f);
        } catch (const std::domain_error &) {
            // normalized-cut kinds reject degenerate partitions; leave NaN
        }
    }
}

} // namespace hqp

#endif
