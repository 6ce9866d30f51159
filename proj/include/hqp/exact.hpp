// exact.hpp - Exhaustive baselines: balanced-partition optimum and global
// polynomial minimum on enumerable instances.
#ifndef HQP_EXACT_HPP
#define HQP_EXACT_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hqp/cut.hpp"
#include "hqp/hypergraph.hpp"
#include "hqp/polynomial.hpp"

namespace hqp {

namespace detail {

inline void check_enumerable(double states) {
    if (states > (1u << 24))
        throw std::invalid_argument("exact: instance too large to enumerate");
}

} // namespace detail

// Minimum cut over all balanced partitions, by enumeration of canonical
// labelings (part of node 0 is 0, each later node introduces at most one new
// label). Ties resolve to the lexicographically smallest canonical label
// vector, which the enumeration order visits first.
inline std::pair<double, NodePartition> exact_balanced(const Hypergraph &h,
                                                       const CutFunction &f, int k) {
    const int n = h.num_vertices();
    if (k < 1)
        throw std::invalid_argument("exact_balanced: k must be positive");
    if (k > n)
        throw std::invalid_argument("exact_balanced: no balanced partition exists for k > n");
    detail::check_enumerable(std::pow(static_cast<double>(k), n));

    std::vector<int> labels(n, 0);
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> best_labels;
    const bool fast = counts_determined(f.kind);
    std::vector<int> sizes(k), edge_counts(k);

    // Odometer over label vectors in lexicographic order, skipping
    // non-canonical prefixes.
    while (true) {
        int max_label = 0;
        bool canonical = true;
        for (int i = 0; i < n; ++i) {
            if (labels[i] > max_label) {
                canonical = false;
                break;
            }
            if (labels[i] == max_label)
                max_label = labels[i] + 1;
        }
        if (canonical && max_label == k) {
            std::fill(sizes.begin(), sizes.end(), 0);
            for (int c : labels)
                ++sizes[c];
            const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
            if (*lo >= 1 && *hi - *lo <= 1) {
                double value;
                if (fast) {
                    value = 0.0;
                    for (std::size_t e = 0; e < h.num_edges(); ++e) {
                        const auto &edge = h.edge(e);
                        std::fill(edge_counts.begin(), edge_counts.end(), 0);
                        for (int v : edge)
                            ++edge_counts[labels[v]];
                        value += h.weight(e) *
                                 edge_cut_value_from_counts(f.kind, edge_counts.data(), k,
                                                            static_cast<int>(edge.size()));
                    }
                } else {
                    value = total_cut(h, NodePartition(labels, k), f);
                }
                if (value < best) {
                    best = value;
                    best_labels = labels;
                }
            }
        }
        int pos = n - 1;
        while (pos >= 0 && labels[pos] == k - 1)
            labels[pos--] = 0;
        if (pos < 0)
            break;
        ++labels[pos];
    }
    if (best_labels.empty())
        throw std::runtime_error("exact_balanced: no balanced partition found");
    return {best, NodePartition(std::move(best_labels), k)};
}

// Global minimum over all assignments, with the full argmin set.
inline std::pair<double, std::vector<Assignment>> exact_min_poly(const BinaryPolynomial &poly,
                                                                 double tie_tolerance = 1e-9) {
    const int n = poly.num_vars();
    if (n > 24)
        throw std::invalid_argument("exact_min_poly: too many variables");
    double best = std::numeric_limits<double>::infinity();
    std::vector<Assignment> argmins;
    for (std::uint64_t idx = 0; idx < (1ull << n); ++idx) {
        const Assignment x = assignment_from_index(idx, n);
        const double value = poly.evaluate(x);
        if (value < best - tie_tolerance) {
            best = value;
            argmins.clear();
            argmins.push_back(x);
        } else if (value <= best + tie_tolerance) {
            argmins.push_back(x);
        }
    }
    return {best, std::move(argmins)};
}

} // namespace hqp

#endif
