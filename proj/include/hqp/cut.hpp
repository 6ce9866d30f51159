// cut.hpp - Direct evaluation of hyperedge cut functions and the balance
// predicate. This is the ground-truth path every encoding is checked against.
#ifndef HQP_CUT_HPP
#define HQP_CUT_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hqp/hypergraph.hpp"

namespace hqp {

enum class CutKind {
    AoN,            // 0 if uncut, 1 otherwise
    Quadratic,      // |S| * |e \ S|, two-way
    Linear,         // min(|S|, |e \ S|), two-way
    Ncut2,          // volume-normalized two-way cut
    KMinus1,        // parts spanned minus one
    QuadraticMulti, // sum_c |e∩C_c| * |e\C_c| / |e|
    NcutMulti,      // volume-normalized multi-way cut
    Hrwc,           // random-walk escape probability, whole-partition
};

// Hrwc carries an n x n nonnegative transition matrix; other kinds carry
// no parameters.
struct CutFunction {
    CutKind kind = CutKind::AoN;
    std::vector<double> transition; // row-major n*n, Hrwc only
    int transition_n = 0;

    static CutFunction simple(CutKind k) {
        if (k == CutKind::Hrwc)
            throw std::invalid_argument("cut: Hrwc requires a transition matrix");
        return CutFunction{k, {}, 0};
    }

    static CutFunction hrwc(std::vector<double> p, int n) {
        if (static_cast<int>(p.size()) != n * n)
            throw std::invalid_argument("cut: transition matrix must be n x n");
        for (double v : p)
            if (v < 0.0)
                throw std::invalid_argument("cut: transition probabilities must be nonnegative");
        return CutFunction{CutKind::Hrwc, std::move(p), n};
    }

    double p(int i, int j) const { return transition[static_cast<std::size_t>(i) * transition_n + j]; }
};

inline bool is_two_way_kind(CutKind k) {
    return k == CutKind::Quadratic || k == CutKind::Linear || k == CutKind::Ncut2;
}

// Largest pairwise part-size difference; 0 or 1 means balanced when all
// parts are nonempty.
inline int balance_violation(const NodePartition &p) {
    const auto sizes = p.part_sizes();
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    return *hi - *lo;
}

namespace detail {

// Sizes |e ∩ C_c| indexed by part, plus |e|.
inline std::vector<int> part_intersections(const std::vector<std::vector<int>> &parts,
                                           const NodePartition &p) {
    std::vector<int> counts(p.k, 0);
    for (const auto &side : parts)
        for (int v : side)
            counts[p.labels.at(v)] += 1;
    return counts;
}

} // namespace detail

// Per-edge value for kinds fully determined by the intersection sizes
// |e ∩ C_c|. This is the single evaluation route shared by the generic
// oracle and the exhaustive solver's inner loop.
inline double edge_cut_value_from_counts(CutKind kind, const int *counts, int k,
                                         int edge_size) {
    switch (kind) {
    case CutKind::AoN: {
        for (int c = 0; c < k; ++c)
            if (counts[c] == edge_size)
                return 0.0;
        return 1.0;
    }
    case CutKind::KMinus1: {
        int spanned = 0;
        for (int c = 0; c < k; ++c)
            spanned += counts[c] > 0;
        return static_cast<double>(spanned) - 1.0;
    }
    case CutKind::Quadratic: {
        if (k != 2)
            throw std::invalid_argument("edge_cut_value: Quadratic is a two-way cut");
        return static_cast<double>(counts[0]) * (edge_size - counts[0]);
    }
    case CutKind::Linear: {
        if (k != 2)
            throw std::invalid_argument("edge_cut_value: Linear is a two-way cut");
        return static_cast<double>(std::min(counts[0], edge_size - counts[0]));
    }
    case CutKind::QuadraticMulti: {
        double total = 0.0;
        for (int c = 0; c < k; ++c)
            total += static_cast<double>(counts[c]) * (edge_size - counts[c]);
        return total / edge_size;
    }
    default:
        throw std::invalid_argument("edge_cut_value: kind not determined by counts");
    }
}

inline bool counts_determined(CutKind kind) {
    return kind == CutKind::AoN || kind == CutKind::KMinus1 || kind == CutKind::Quadratic ||
           kind == CutKind::Linear || kind == CutKind::QuadraticMulti;
}

// Value of one hyperedge's induced partition under the cut function. The
// hypergraph and node partition provide context for volume-normalized kinds.
inline double edge_cut_value(const CutFunction &f, const std::vector<std::vector<int>> &parts,
                             const Hypergraph &h, const NodePartition &p) {
    if (f.kind == CutKind::Hrwc)
        throw std::invalid_argument("edge_cut_value: Hrwc is a whole-partition objective");
    if (parts.empty())
        throw std::invalid_argument("edge_cut_value: empty induced partition");
    int edge_size = 0;
    for (const auto &side : parts)
        edge_size += static_cast<int>(side.size());

    if (counts_determined(f.kind)) {
        const auto counts = detail::part_intersections(parts, p);
        return edge_cut_value_from_counts(f.kind, counts.data(), p.k, edge_size);
    }
    switch (f.kind) {
    case CutKind::Ncut2: {
        if (p.k != 2)
            throw std::invalid_argument("edge_cut_value: Ncut2 is a two-way cut");
        const auto counts = detail::part_intersections(parts, p);
        const int s = counts[0];
        if (s == 0 || s == edge_size)
            return 0.0;
        std::vector<int> c1, c2;
        for (int v = 0; v < h.num_vertices(); ++v)
            (p.labels[v] == 0 ? c1 : c2).push_back(v);
        const long long vol1 = h.volume(c1), vol2 = h.volume(c2);
        if (vol1 == 0 || vol2 == 0)
            throw std::domain_error("edge_cut_value: zero-volume part under Ncut2");
        return (1.0 / vol1 + 1.0 / vol2) * (static_cast<double>(s) * (edge_size - s)) / edge_size;
    }
    case CutKind::NcutMulti: {
        const auto counts = detail::part_intersections(parts, p);
        std::vector<long long> vols(p.k, 0);
        for (int v = 0; v < h.num_vertices(); ++v)
            vols[p.labels[v]] += h.degree(v);
        double total = 0.0;
        for (int c = 0; c < p.k; ++c) {
            if (counts[c] == 0 || counts[c] == edge_size)
                continue;
            if (vols[c] == 0)
                throw std::domain_error("edge_cut_value: zero-volume part under NcutMulti");
            total += static_cast<double>(counts[c]) * (edge_size - counts[c]) /
                     (static_cast<double>(vols[c]) * edge_size);
        }
        return total;
    }
    default:
        throw std::logic_error("edge_cut_value: unhandled cut kind");
    }
}

namespace detail {

// Random-walk escape probability, Φ over the whole partition.
inline double hrwc_value(const CutFunction &f, const Hypergraph &h, const NodePartition &p) {
    if (f.transition_n != h.num_vertices())
        throw std::invalid_argument("total_cut: transition matrix size does not match hypergraph");
    const auto sizes = p.part_sizes();
    for (int c = 0; c < p.k; ++c)
        if (sizes[c] == 0)
            throw std::domain_error("total_cut: empty part under Hrwc");
    const int n = h.num_vertices();
    double phi = 0.0;
    for (int c = 0; c < p.k; ++c) {
        double escape = 0.0;
        for (int i = 0; i < n; ++i) {
            if (p.labels[i] != c)
                continue;
            for (int j = 0; j < n; ++j)
                if (p.labels[j] != c)
                    escape += f.p(i, j);
        }
        phi += escape / sizes[c];
    }
    return phi / p.k;
}

} // namespace detail

// Weighted sum of per-edge cut values; Φ for Hrwc.
inline double total_cut(const Hypergraph &h, const NodePartition &p, const CutFunction &f) {
    if (static_cast<int>(p.labels.size()) != h.num_vertices())
        throw std::invalid_argument("total_cut: partition size does not match hypergraph");
    if (is_two_way_kind(f.kind) && p.k != 2)
        throw std::invalid_argument("total_cut: two-way cut kind requires k = 2");
    if (f.kind == CutKind::Hrwc)
        return detail::hrwc_value(f, h, p);
    if (f.kind == CutKind::Ncut2 || f.kind == CutKind::NcutMulti) {
        const auto sizes = p.part_sizes();
        for (int c = 0; c < p.k; ++c)
            if (sizes[c] == 0)
                throw std::domain_error("total_cut: empty part under normalized cut");
    }
    double total = 0.0;
    for (std::size_t e = 0; e < h.num_edges(); ++e)
        total += h.weight(e) * edge_cut_value(f, induced_edge_partition(h, p, e), h, p);
    return total;
}

} // namespace hqp

#endif
