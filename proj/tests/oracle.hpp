#pragma once

// Shared fixtures and independent numeric oracles for the test suite.
// The matrix-exponential path here (Pade-based expm from Eigen's
// MatrixFunctions) is deliberately different from the library's
// eigendecomposition path, so agreement between the two is meaningful.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "hdg/cubelike.hpp"
#include "hdg/graph.hpp"

namespace hdgtest {

inline Eigen::MatrixXd laplacian_double(const hdg::WeightedGraph& g) {
    const std::size_t n = g.order();
    hdg::RatMatrix l = g.laplacian();
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = l(i, j).get_d();
    return m;
}

// e^{itL} via scaling-and-squaring on the complex matrix itL.
inline Eigen::MatrixXcd expm_itl(const hdg::WeightedGraph& g, double t) {
    Eigen::MatrixXcd a = std::complex<double>(0.0, t) * laplacian_double(g);
    return a.exp();
}

inline double expm_fidelity(const hdg::WeightedGraph& g, double t, std::size_t j, std::size_t k) {
    return std::norm(expm_itl(g, t)(j, k));
}

inline hdg::WeightedGraph cube(unsigned d) {
    std::vector<std::uint32_t> basis;
    for (unsigned i = 0; i < d; ++i) basis.push_back(std::uint32_t{1} << i);
    return hdg::build(hdg::ConnectionSet(d, std::move(basis)));
}

inline hdg::WeightedGraph path_graph(std::size_t n) {
    hdg::WeightedGraph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1, 1);
    return g;
}

// The 4-cycle 1-2-3-4-1 in that vertex order (not the cubelike labeling).
inline hdg::WeightedGraph cycle4() {
    hdg::WeightedGraph g(4);
    g.set_edge(0, 1, 1);
    g.set_edge(1, 2, 1);
    g.set_edge(2, 3, 1);
    g.set_edge(0, 3, 1);
    return g;
}

}  // namespace hdgtest
