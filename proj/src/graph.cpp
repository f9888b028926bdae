#include "hdg/graph.hpp"

#include <queue>

#include "hdg/errors.hpp"

namespace hdg {

WeightedGraph::WeightedGraph(RatMatrix weights) : weights_(std::move(weights)) {
    if (!weights_.is_symmetric()) throw domain_error("WeightedGraph: weights not symmetric");
    for (std::size_t i = 0; i < weights_.rows(); ++i)
        if (weights_(i, i) != 0) throw domain_error("WeightedGraph: nonzero diagonal");
}

WeightedGraph WeightedGraph::complete(std::size_t n) {
    WeightedGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.set_edge(i, j, 1);
    return g;
}

WeightedGraph WeightedGraph::from_laplacian(const RatMatrix& laplacian) {
    if (!laplacian.is_symmetric()) throw domain_error("from_laplacian: not symmetric");
    const std::size_t n = laplacian.rows();
    RatMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (laplacian.row_sum(i) != 0) throw domain_error("from_laplacian: nonzero row sum");
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) {
                w(i, j) = -laplacian(i, j);
                w(i, j).canonicalize();  // mpq equality assumes canonical form
            }
    }
    return WeightedGraph(std::move(w));
}

void WeightedGraph::set_edge(std::size_t j, std::size_t k, const Rat& w) {
    if (j == k) throw domain_error("set_edge: self-loops not representable");
    if (j >= order() || k >= order()) throw domain_error("set_edge: vertex out of range");
    Rat v = w;
    v.canonicalize();  // mpq equality assumes canonical form
    weights_(j, k) = v;
    weights_(k, j) = std::move(v);
}

RatMatrix WeightedGraph::laplacian() const {
    const std::size_t n = order();
    RatMatrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        l(i, i) = weights_.row_sum(i);
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) l(i, j) = -weights_(i, j);
    }
    return l;
}

bool WeightedGraph::is_unweighted() const {
    for (std::size_t i = 0; i < order(); ++i)
        for (std::size_t j = 0; j < order(); ++j)
            if (weights_(i, j) != 0 && weights_(i, j) != 1) return false;
    return true;
}

bool WeightedGraph::has_integer_weights() const {
    for (std::size_t i = 0; i < order(); ++i)
        for (std::size_t j = i + 1; j < order(); ++j)
            if (!is_integer(weights_(i, j))) return false;
    return true;
}

std::size_t WeightedGraph::edge_count() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < order(); ++i)
        for (std::size_t j = i + 1; j < order(); ++j)
            if (weights_(i, j) != 0) ++c;
    return c;
}

bool WeightedGraph::is_connected() const {
    const std::size_t n = order();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop();
        for (std::size_t v = 0; v < n; ++v)
            if (!seen[v] && weights_(u, v) != 0) {
                seen[v] = true;
                ++count;
                q.push(v);
            }
    }
    return count == n;
}

bool WeightedGraph::is_bipartite() const {
    const std::size_t n = order();
    std::vector<int> color(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t v = 0; v < n; ++v) {
                if (weights_(u, v) == 0) continue;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

DegreeProfile degree_profile(const WeightedGraph& g) {
    DegreeProfile p;
    p.degrees.reserve(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) p.degrees.push_back(g.degree(i));
    p.is_regular = true;
    for (const Rat& d : p.degrees)
        if (d != p.degrees.front()) p.is_regular = false;
    p.degree = g.order() ? p.degrees.front() : Rat(0);
    return p;
}

WeightedGraph complement(const WeightedGraph& g) {
    if (!g.is_unweighted()) throw domain_error("complement: graph must be unweighted");
    const std::size_t n = g.order();
    WeightedGraph c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.weight(i, j) == 0) c.set_edge(i, j, 1);
    return c;
}

WeightedGraph join(const WeightedGraph& g1, const WeightedGraph& g2) {
    if (!g1.is_unweighted() || !g2.is_unweighted())
        throw domain_error("join: graphs must be unweighted");
    const std::size_t n1 = g1.order(), n2 = g2.order();
    WeightedGraph j(n1 + n2);
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = a + 1; b < n1; ++b)
            if (g1.weight(a, b) != 0) j.set_edge(a, b, 1);
    for (std::size_t a = 0; a < n2; ++a)
        for (std::size_t b = a + 1; b < n2; ++b)
            if (g2.weight(a, b) != 0) j.set_edge(n1 + a, n1 + b, 1);
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n2; ++b) j.set_edge(a, n1 + b, 1);
    return j;
}

WeightedGraph disjoint_union(const WeightedGraph& g1, const WeightedGraph& g2) {
    const std::size_t n1 = g1.order(), n2 = g2.order();
    WeightedGraph u(n1 + n2);
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = a + 1; b < n1; ++b)
            if (g1.weight(a, b) != 0) u.set_edge(a, b, g1.weight(a, b));
    for (std::size_t a = 0; a < n2; ++a)
        for (std::size_t b = a + 1; b < n2; ++b)
            if (g2.weight(a, b) != 0) u.set_edge(n1 + a, n1 + b, g2.weight(a, b));
    return u;
}

WeightedGraph cartesian_product(const WeightedGraph& g1, const WeightedGraph& g2) {
    const std::size_t n1 = g1.order(), n2 = g2.order();
    // vertex (a, b) -> a*n2 + b, G1 index major
    WeightedGraph p(n1 * n2);
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n2; ++b) {
            for (std::size_t b2 = b + 1; b2 < n2; ++b2)
                if (g2.weight(b, b2) != 0)
                    p.set_edge(a * n2 + b, a * n2 + b2, g2.weight(b, b2));
            for (std::size_t a2 = a + 1; a2 < n1; ++a2)
                if (g1.weight(a, a2) != 0)
                    p.set_edge(a * n2 + b, a2 * n2 + b, g1.weight(a, a2));
        }
    return p;
}

WeightedGraph merge(const WeightedGraph& g1, const WeightedGraph& g2, const MergeWeights& w,
                    const std::optional<std::vector<Rat>>& g2_loops) {
    const std::size_t n = g1.order();
    if (g2.order() != n) throw domain_error("merge: graphs must have the same order");
    if (g2_loops && g2_loops->size() != n) throw domain_error("merge: loop vector size mismatch");
    WeightedGraph m(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            if (g1.weight(j, k) != 0) {
                Rat v = w.w1 * g1.weight(j, k);
                m.set_edge(j, k, v);
                m.set_edge(n + j, n + k, v);
            }
            if (g2.weight(j, k) != 0) {
                Rat v = w.w2 * g2.weight(j, k);
                m.set_edge(j, n + k, v);
                m.set_edge(k, n + j, v);
            }
        }
        if (g2_loops && (*g2_loops)[j] != 0) m.set_edge(j, n + j, w.w2 * (*g2_loops)[j]);
    }
    return m;
}

WeightedGraph double_cover(const WeightedGraph& g1, const WeightedGraph& g2) {
    return merge(g1, g2, MergeWeights{1, 1});
}

WeightedGraph scale(const WeightedGraph& g, const Rat& c) {
    if (c == 0) throw domain_error("scale: zero factor");
    return WeightedGraph(g.adjacency().scaled(c));
}

WeightedGraph add(const WeightedGraph& g1, const WeightedGraph& g2) {
    if (g1.order() != g2.order()) throw domain_error("add: order mismatch");
    return WeightedGraph(g1.adjacency() + g2.adjacency());
}

}  // namespace hdg
