// hypergraph.hpp - Hypergraph and node partition types, validation,
// random instance generation, and hMETIS-style text I/O.
#ifndef HQP_HYPERGRAPH_HPP
#define HQP_HYPERGRAPH_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hqp/random.hpp"

namespace hqp {

// Immutable after construction. Vertices are 0-indexed in memory; the on-disk
// format is 1-indexed (hMETIS convention).
class Hypergraph {
  public:
    Hypergraph(int num_vertices, std::vector<std::vector<int>> edges,
               std::vector<double> weights = {})
        : n_(num_vertices), edges_(std::move(edges)), weights_(std::move(weights)) {
        if (n_ <= 0)
            throw std::invalid_argument("hypergraph: vertex count must be positive");
        if (weights_.empty())
            weights_.assign(edges_.size(), 1.0);
        if (weights_.size() != edges_.size())
            throw std::invalid_argument("hypergraph: weight count does not match edge count");
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            auto &edge = edges_[e];
            if (edge.size() < 2)
                throw std::invalid_argument("hypergraph: hyperedge " + std::to_string(e) +
                                            " has fewer than two vertices");
            std::sort(edge.begin(), edge.end());
            if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
                throw std::invalid_argument("hypergraph: duplicate vertex in hyperedge " +
                                            std::to_string(e));
            if (edge.front() < 0 || edge.back() >= n_)
                throw std::invalid_argument("hypergraph: vertex index out of range in hyperedge " +
                                            std::to_string(e));
            if (!(weights_[e] > 0.0))
                throw std::invalid_argument("hypergraph: non-positive weight on hyperedge " +
                                            std::to_string(e));
        }
        degrees_.assign(n_, 0);
        for (const auto &edge : edges_)
            for (int v : edge)
                ++degrees_[v];
    }

    int num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<int> &edge(std::size_t e) const { return edges_.at(e); }
    const std::vector<std::vector<int>> &edges() const { return edges_; }
    double weight(std::size_t e) const { return weights_.at(e); }
    const std::vector<double> &weights() const { return weights_; }

    bool weighted() const {
        return std::any_of(weights_.begin(), weights_.end(),
                           [](double w) { return w != 1.0; });
    }

    int degree(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("degree: vertex index out of range");
        return degrees_[v];
    }

    // Sum of degrees over a vertex subset.
    long long volume(const std::vector<int> &subset) const {
        long long total = 0;
        for (int v : subset) {
            if (v < 0 || v >= n_)
                throw std::out_of_range("volume: vertex index out of range");
            total += degrees_[v];
        }
        return total;
    }

    // True iff all vertices form a single component in the incidence graph.
    bool is_connected() const {
        if (n_ == 1)
            return true;
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            return v;
        };
        int components = n_;
        for (const auto &edge : edges_) {
            const int root = find(edge.front());
            for (std::size_t i = 1; i < edge.size(); ++i) {
                const int other = find(edge[i]);
                if (other != root) {
                    parent[other] = root;
                    --components;
                }
            }
        }
        return components == 1;
    }

    bool operator==(const Hypergraph &other) const {
        return n_ == other.n_ && edges_ == other.edges_ && weights_ == other.weights_;
    }

  private:
    int n_;
    std::vector<std::vector<int>> edges_;
    std::vector<double> weights_;
    std::vector<int> degrees_;
};

// A k-way labeling of the vertices. Balance is a predicate, not an invariant.
struct NodePartition {
    std::vector<int> labels;
    int k = 2;

    NodePartition(std::vector<int> labels_, int k_) : labels(std::move(labels_)), k(k_) {
        if (k < 1)
            throw std::invalid_argument("partition: k must be positive");
        for (int c : labels)
            if (c < 0 || c >= k)
                throw std::invalid_argument("partition: label out of range");
    }

    std::vector<int> part_sizes() const {
        std::vector<int> sizes(k, 0);
        for (int c : labels)
            ++sizes[c];
        return sizes;
    }

    bool operator==(const NodePartition &other) const {
        return k == other.k && labels == other.labels;
    }
};

inline bool is_balanced(const NodePartition &p) {
    const auto sizes = p.part_sizes();
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    return *lo >= 1 && *hi - *lo <= 1;
}

// Nonempty intersections e ∩ C_i, ordered by part index.
inline std::vector<std::vector<int>> induced_edge_partition(const Hypergraph &h,
                                                            const NodePartition &p,
                                                            std::size_t edge_index) {
    if (edge_index >= h.num_edges())
        throw std::out_of_range("induced_edge_partition: edge index out of range");
    std::vector<std::vector<int>> parts(p.k);
    for (int v : h.edge(edge_index))
        parts[p.labels.at(v)].push_back(v);
    std::vector<std::vector<int>> result;
    for (auto &part : parts)
        if (!part.empty())
            result.push_back(std::move(part));
    return result;
}

namespace detail {

inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string &msg) {
    throw std::invalid_argument("hmetis parse error on line " + std::to_string(line) + ": " + msg);
}

} // namespace detail

// Parses the hMETIS-style plain text format. First non-comment line holds
// "m n [1]" where the trailing flag marks weighted edges; '%' lines are
// comments. Vertices are 1-indexed on disk.
inline Hypergraph parse_hmetis(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    long long m = -1, n = -1;
    bool weighted = false;
    std::vector<std::vector<int>> edges;
    std::vector<double> weights;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '%')
            continue;
        std::istringstream fields(line);
        if (m < 0) {
            long long fmt = 0;
            if (!(fields >> m >> n))
                detail::parse_fail(line_no, "expected edge and vertex counts");
            if (fields >> fmt) {
                if (fmt != 1)
                    detail::parse_fail(line_no, "unsupported format flag");
                weighted = true;
            }
            if (m < 0 || n <= 0)
                detail::parse_fail(line_no, "malformed counts");
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            detail::parse_fail(line_no, "more edge lines than declared");
        double w = 1.0;
        if (weighted) {
            if (!(fields >> w))
                detail::parse_fail(line_no, "expected edge weight");
            if (!(w > 0.0))
                detail::parse_fail(line_no, "non-positive edge weight");
        }
        std::vector<int> edge;
        long long v;
        while (fields >> v) {
            if (v < 1 || v > n)
                detail::parse_fail(line_no, "vertex index out of range");
            edge.push_back(static_cast<int>(v - 1));
        }
        if (!fields.eof())
            detail::parse_fail(line_no, "malformed vertex index");
        if (edge.size() < 2)
            detail::parse_fail(line_no, "hyperedge needs at least two vertices");
        std::vector<int> sorted = edge;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            detail::parse_fail(line_no, "duplicate vertex within hyperedge");
        edges.push_back(std::move(edge));
        weights.push_back(w);
    }
    if (m < 0)
        throw std::invalid_argument("hmetis parse error: empty input");
    if (static_cast<long long>(edges.size()) != m)
        throw std::invalid_argument("hmetis parse error: expected " + std::to_string(m) +
                                    " edges, found " + std::to_string(edges.size()));
    return Hypergraph(static_cast<int>(n), std::move(edges), std::move(weights));
}

// Inverse of parse_hmetis up to structural equality. Weights are printed with
// shortest round-tripping precision.
inline std::string serialize_hmetis(const Hypergraph &h) {
    const bool weighted = h.weighted();
    std::string out = std::to_string(h.num_edges()) + " " + std::to_string(h.num_vertices());
    if (weighted)
        out += " 1";
    out += "\n";
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        std::string row;
        if (weighted)
            row += detail::format_double(h.weight(e)) + " ";
        for (std::size_t i = 0; i < h.edge(e).size(); ++i) {
            if (i)
                row += " ";
            row += std::to_string(h.edge(e)[i] + 1);
        }
        out += row + "\n";
    }
    return out;
}

namespace detail {

inline unsigned long long binomial(int n, int r) {
    if (r < 0 || r > n)
        return 0;
    unsigned long long result = 1;
    for (int i = 1; i <= r; ++i) {
        const unsigned long long limit = ~0ULL / static_cast<unsigned long long>(n - r + i);
        if (result > limit)
            return ~0ULL; // saturate, only compared against small m
        result = result * static_cast<unsigned long long>(n - r + i) / i;
    }
    return result;
}

} // namespace detail

// Connected r-uniform instance with m = round(n * avg_degree / r) distinct
// edges sampled uniformly without replacement. Disconnected draws are
// rejected and redrawn from an incremented stream of the same seed.
inline Hypergraph generate_random_uniform(int n, int r, double avg_degree,
                                          std::uint64_t seed, int retry_budget = 10000) {
    if (r < 2 || n < r)
        throw std::invalid_argument("generate: need n >= r >= 2");
    const int m = static_cast<int>(std::floor(n * avg_degree / r + 0.5));
    if (m < 1)
        throw std::invalid_argument("generate: requested edge count is zero");
    const unsigned long long total = detail::binomial(n, r);
    if (static_cast<unsigned long long>(m) > total)
        throw std::invalid_argument("generate: requested more edges than C(n, r)");

    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        rng::Prng prng(rng::mix(seed, static_cast<std::uint64_t>(attempt)));
        std::set<std::vector<int>> chosen;
        std::vector<int> pool(n);
        while (static_cast<int>(chosen.size()) < m) {
            std::iota(pool.begin(), pool.end(), 0);
            for (int i = 0; i < r; ++i) {
                const int j = i + static_cast<int>(prng.below(static_cast<std::uint64_t>(n - i)));
                std::swap(pool[i], pool[j]);
            }
            std::vector<int> edge(pool.begin(), pool.begin() + r);
            std::sort(edge.begin(), edge.end());
            chosen.insert(std::move(edge));
        }
        Hypergraph h(n, std::vector<std::vector<int>>(chosen.begin(), chosen.end()));
        if (h.is_connected())
            return h;
    }
    throw std::runtime_error("generate: no connected instance within retry budget");
}

} // namespace hqp

#endif
