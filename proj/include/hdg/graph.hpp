#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hdg/rational.hpp"

namespace hdg {

// Weighted undirected graph with exact rational edge weights, stored as a
// symmetric zero-diagonal weight matrix. Immutable in practice: every
// operation returns a new graph.
class WeightedGraph {
public:
    explicit WeightedGraph(std::size_t n) : weights_(n, n) {}
    // Validates symmetry and zero diagonal.
    explicit WeightedGraph(RatMatrix weights);

    static WeightedGraph empty(std::size_t n) { return WeightedGraph(n); }
    static WeightedGraph complete(std::size_t n);
    // Input must be symmetric with zero row sums; weights are read off
    // the negated off-diagonal entries.
    static WeightedGraph from_laplacian(const RatMatrix& laplacian);

    std::size_t order() const { return weights_.rows(); }
    const Rat& weight(std::size_t j, std::size_t k) const { return weights_(j, k); }
    const RatMatrix& adjacency() const { return weights_; }

    void set_edge(std::size_t j, std::size_t k, const Rat& w);

    RatMatrix laplacian() const;
    Rat degree(std::size_t j) const { return weights_.row_sum(j); }

    bool is_unweighted() const;  // all weights 0 or 1
    bool has_integer_weights() const;
    std::size_t edge_count() const;
    bool is_empty() const { return weights_.is_zero(); }

    bool is_connected() const;
    // 2-colorability over the edges with nonzero weight.
    bool is_bipartite() const;

    bool operator==(const WeightedGraph& other) const { return weights_ == other.weights_; }
    bool operator!=(const WeightedGraph& other) const { return !(*this == other); }

private:
    RatMatrix weights_;
};

struct DegreeProfile {
    bool is_regular;
    Rat degree;                // common degree when regular
    std::vector<Rat> degrees;  // always populated
};

struct MergeWeights {
    Rat w1;
    Rat w2;
};

DegreeProfile degree_profile(const WeightedGraph& g);

// Unweighted-only operations.
WeightedGraph complement(const WeightedGraph& g);
WeightedGraph join(const WeightedGraph& g1, const WeightedGraph& g2);

WeightedGraph disjoint_union(const WeightedGraph& g1, const WeightedGraph& g2);
WeightedGraph cartesian_product(const WeightedGraph& g1, const WeightedGraph& g2);

// Merge on 2n vertices: G1's edges duplicated on both halves with weight
// w1*w, G2's edges becoming cross edges (j, n+k), (k, n+j) with weight
// w2*w. The optional g2_loops vector adds a self-loop weight at each G2
// vertex, which turns into the cross edge (j, n+j); this is the only
// pathway through which loop weights are representable.
WeightedGraph merge(const WeightedGraph& g1, const WeightedGraph& g2, const MergeWeights& w,
                    const std::optional<std::vector<Rat>>& g2_loops = std::nullopt);

// Adjacency [[A1, A2], [A2, A1]]; a double cover when edge sets are disjoint.
WeightedGraph double_cover(const WeightedGraph& g1, const WeightedGraph& g2);

WeightedGraph scale(const WeightedGraph& g, const Rat& c);
WeightedGraph add(const WeightedGraph& g1, const WeightedGraph& g2);

}  // namespace hdg
