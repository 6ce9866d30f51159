// encode.hpp - Binary optimization encodings of the partitioning objectives:
// cut terms, balance and one-hot validity penalties, and their composition.
#ifndef HQP_ENCODE_HPP
#define HQP_ENCODE_HPP

#include <optional>
#include <stdexcept>

#include "hqp/cut.hpp"
#include "hqp/hypergraph.hpp"
#include "hqp/polynomial.hpp"

namespace hqp {

// One-hot variable layout for multi-way encodings: (node i, part c) -> i*k + c.
inline int one_hot_var(int i, int c, int k) { return i * k + c; }

namespace detail {

// Product over vertices of (1 - x_v): subset expansion with alternating sign.
// Variable indices are supplied already mapped.
inline void add_product_of_complements(BinaryPolynomial &poly, const std::vector<int> &vars,
                                       double scale) {
    const std::size_t r = vars.size();
    if (r > 30)
        throw std::invalid_argument("encode: hyperedge too large to expand");
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
        BinaryPolynomial::Term term;
        int sign = 1;
        for (std::size_t i = 0; i < r; ++i) {
            if (mask & (1u << i)) {
                term.push_back(vars[i]);
                sign = -sign;
            }
        }
        poly.add_term(std::move(term), scale * sign);
    }
}

// Sum over ordered pairs i != j within one variable group of x_i (1 - x_j),
// which equals s * (group size - s) at any assignment with s ones.
inline void add_ordered_pair_cut(BinaryPolynomial &poly, const std::vector<int> &vars,
                                 double scale) {
    const double linear = scale * (static_cast<double>(vars.size()) - 1.0);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        poly.add_term({vars[i]}, linear);
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            poly.add_term({vars[i], vars[j]}, -2.0 * scale);
    }
}

} // namespace detail

// Two-way cut objective over n variables, x_i = part of vertex i.
// AoN: sum_e w_e (1 - prod x - prod (1-x)); on 3-uniform hypergraphs the cubic
// terms cancel and the result is quadratic. Quadratic: ordered-pair form.
inline BinaryPolynomial build_two_way_cut(const Hypergraph &h, CutKind kind) {
    BinaryPolynomial poly(h.num_vertices());
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        const auto &edge = h.edge(e);
        const double w = h.weight(e);
        switch (kind) {
        case CutKind::AoN:
            poly.add_constant(w);
            poly.add_term(edge, -w);
            detail::add_product_of_complements(poly, edge, -w);
            break;
        case CutKind::Quadratic:
            detail::add_ordered_pair_cut(poly, edge, w);
            break;
        default:
            throw std::invalid_argument("build_two_way_cut: kind has no two-way encoding");
        }
    }
    return poly;
}

// (sum_i x_i - n/2)^2, constant n^2/4 retained.
inline BinaryPolynomial build_two_way_balance(int n) {
    if (n < 2)
        throw std::invalid_argument("build_two_way_balance: need n >= 2");
    BinaryPolynomial linear(n);
    for (int i = 0; i < n; ++i)
        linear.add_term({i}, 1.0);
    linear.add_constant(-0.5 * n);
    return linear.times(linear);
}

// sum_i (sum_c x_ic - 1)^2 over n*k one-hot variables.
inline BinaryPolynomial build_multi_partition_penalty(int n, int k) {
    if (k < 2)
        throw std::invalid_argument("build_multi_partition_penalty: need k >= 2");
    BinaryPolynomial poly(n * k);
    for (int i = 0; i < n; ++i) {
        BinaryPolynomial row(n * k);
        for (int c = 0; c < k; ++c)
            row.add_term({one_hot_var(i, c, k)}, 1.0);
        row.add_constant(-1.0);
        poly.add_scaled(row.times(row), 1.0);
    }
    return poly;
}

// sum_c (sum_i x_ic - n/k)^2 over n*k one-hot variables.
inline BinaryPolynomial build_multi_balance(int n, int k) {
    if (k < 2)
        throw std::invalid_argument("build_multi_balance: need k >= 2");
    BinaryPolynomial poly(n * k);
    for (int c = 0; c < k; ++c) {
        BinaryPolynomial col(n * k);
        for (int i = 0; i < n; ++i)
            col.add_term({one_hot_var(i, c, k)}, 1.0);
        col.add_constant(-static_cast<double>(n) / k);
        poly.add_scaled(col.times(col), 1.0);
    }
    return poly;
}

// Multi-way cut objectives over the one-hot layout. One-hot validity is
// enforced separately by build_multi_partition_penalty.
inline BinaryPolynomial build_multi_cut(const Hypergraph &h, int k, CutKind kind) {
    if (k < 2)
        throw std::invalid_argument("build_multi_cut: need k >= 2");
    BinaryPolynomial poly(h.num_vertices() * k);
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        const auto &edge = h.edge(e);
        const double w = h.weight(e);
        std::vector<int> group(edge.size());
        switch (kind) {
        case CutKind::AoN:
            poly.add_constant(w);
            for (int c = 0; c < k; ++c) {
                for (std::size_t i = 0; i < edge.size(); ++i)
                    group[i] = one_hot_var(edge[i], c, k);
                poly.add_term(group, -w);
            }
            break;
        case CutKind::KMinus1:
            poly.add_constant(w * (k - 1));
            for (int c = 0; c < k; ++c) {
                for (std::size_t i = 0; i < edge.size(); ++i)
                    group[i] = one_hot_var(edge[i], c, k);
                detail::add_product_of_complements(poly, group, -w);
            }
            break;
        case CutKind::QuadraticMulti:
            for (int c = 0; c < k; ++c) {
                for (std::size_t i = 0; i < edge.size(); ++i)
                    group[i] = one_hot_var(edge[i], c, k);
                detail::add_ordered_pair_cut(poly, group, w / static_cast<double>(edge.size()));
            }
            break;
        default:
            throw std::invalid_argument("build_multi_cut: kind has no multi-way encoding");
        }
    }
    return poly;
}

// (1/n) sum_{i,j} p(i,j) sum_c x_ic (1 - x_jc); diagonal entries are ignored.
inline BinaryPolynomial build_hrwc(const std::vector<double> &p, int n, int k) {
    if (static_cast<int>(p.size()) != n * n)
        throw std::invalid_argument("build_hrwc: transition matrix must be n x n");
    BinaryPolynomial poly(n * k);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            const double pij = p[static_cast<std::size_t>(i) * n + j];
            if (pij < 0.0)
                throw std::invalid_argument("build_hrwc: negative transition probability");
            if (pij == 0.0)
                continue;
            const double scale = pij / n;
            for (int c = 0; c < k; ++c) {
                poly.add_term({one_hot_var(i, c, k)}, scale);
                poly.add_term({one_hot_var(i, c, k), one_hot_var(j, c, k)}, -scale);
            }
        }
    }
    return poly;
}

// E = cut + alpha * partition + lambda * balance. Two-way callers pass a zero
// partition polynomial.
inline BinaryPolynomial compose_energy(const BinaryPolynomial &cut,
                                       const BinaryPolynomial &partition,
                                       const BinaryPolynomial &balance, double alpha,
                                       double lambda) {
    if (cut.num_vars() != partition.num_vars() || cut.num_vars() != balance.num_vars())
        throw std::invalid_argument("compose_energy: variable count mismatch");
    BinaryPolynomial total(cut.num_vars());
    total.add_scaled(cut, 1.0);
    total.add_scaled(partition, alpha);
    total.add_scaled(balance, lambda);
    return total;
}

// Encoding parameters. alpha defaults to lambda*n + sum_e w_e + 1 so that a
// single one-hot violation costs more than any attainable cut-plus-balance
// improvement; it is ignored for the two-way n-variable encoding.
struct EncodingSpec {
    int k = 2;
    double lambda = 1.0;
    std::optional<double> alpha;
    CutFunction cut = CutFunction::simple(CutKind::AoN);
};

inline double default_alpha(const Hypergraph &h, double lambda) {
    double total_weight = 0.0;
    for (std::size_t e = 0; e < h.num_edges(); ++e)
        total_weight += h.weight(e);
    return lambda * h.num_vertices() + total_weight + 1.0;
}

inline bool uses_one_hot(const EncodingSpec &spec) {
    return spec.k != 2 || spec.cut.kind == CutKind::KMinus1 ||
           spec.cut.kind == CutKind::QuadraticMulti || spec.cut.kind == CutKind::Hrwc;
}

// Full composed energy for a hypergraph under the given spec. k = 2 with an
// AoN or Quadratic cut uses the n-variable encoding; everything else uses the
// one-hot layout with the validity penalty.
inline BinaryPolynomial build_energy(const Hypergraph &h, const EncodingSpec &spec) {
    const int n = h.num_vertices();
    if (spec.k < 2)
        throw std::invalid_argument("build_energy: need k >= 2");
    if (!uses_one_hot(spec)) {
        if (spec.cut.kind != CutKind::AoN && spec.cut.kind != CutKind::Quadratic)
            throw std::invalid_argument("build_energy: cut kind is not encodable");
        const BinaryPolynomial zero(n);
        return compose_energy(build_two_way_cut(h, spec.cut.kind), zero,
                              build_two_way_balance(n), 0.0, spec.lambda);
    }
    BinaryPolynomial cut(n * spec.k);
    switch (spec.cut.kind) {
    case CutKind::AoN:
    case CutKind::KMinus1:
    case CutKind::QuadraticMulti:
        cut = build_multi_cut(h, spec.k, spec.cut.kind);
        break;
    case CutKind::Hrwc:
        if (spec.cut.transition_n != n)
            throw std::invalid_argument("build_energy: transition matrix size mismatch");
        cut = build_hrwc(spec.cut.transition, n, spec.k);
        break;
    default:
        throw std::invalid_argument("build_energy: cut kind is not encodable");
    }
    const double alpha = spec.alpha.value_or(default_alpha(h, spec.lambda));
    return compose_energy(cut, build_multi_partition_penalty(n, spec.k),
                          build_multi_balance(n, spec.k), alpha, spec.lambda);
}

} // namespace hqp

#endif
