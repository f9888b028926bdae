#include "hdg/spectral.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "hdg/errors.hpp"

namespace hdg {

bool SpectralCertificate::has_integer_eigenvalues() const {
    for (const Rat& v : eigenvalues_)
        if (!is_integer(v)) return false;
    return true;
}

bool diagonalizes(const RatMatrix& laplacian, const HadamardMatrix& h) {
    if (!laplacian.is_symmetric()) throw domain_error("diagonalizes: L not symmetric");
    if (laplacian.rows() != h.order()) throw domain_error("diagonalizes: order mismatch");
    RatMatrix hr = h.as_rational();
    return (hr.transpose() * laplacian * hr).is_diagonal();
}

SpectralCertificate certify(const WeightedGraph& g, const HadamardMatrix& h) {
    const std::size_t n = g.order();
    if (h.order() != n) throw domain_error("certify: order mismatch");
    RatMatrix l = g.laplacian();

    // Column signing keeps columns eigenvectors; row signing would not.
    std::vector<std::vector<int>> cols(n, std::vector<int>(n));
    for (std::size_t j = 0; j < n; ++j) {
        int sign = h(0, j);
        for (std::size_t i = 0; i < n; ++i) cols[j][i] = h(i, j) * sign;
    }

    // Eigenvalue per column by componentwise ratio, with an exact
    // equality check across all components.
    std::vector<Rat> eigenvalues(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rat lambda;
        for (std::size_t i = 0; i < n; ++i) {
            Rat lh = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (l(i, k) != 0) lh += l(i, k) * cols[j][k];
            Rat ratio = lh * cols[j][i];  // entries are +-1
            if (i == 0) {
                lambda = ratio;
            } else if (ratio != lambda) {
                throw certification_error("certify: column " + std::to_string(j + 1) +
                                          " is not an eigenvector of L");
            }
        }
        eigenvalues[j] = lambda;
    }

    // Move the all-ones column (0-eigenvector) to the front.
    std::size_t ones = n;
    for (std::size_t j = 0; j < n && ones == n; ++j) {
        bool all_ones = true;
        for (std::size_t i = 0; i < n; ++i)
            if (cols[j][i] != 1) { all_ones = false; break; }
        if (all_ones) ones = j;
    }
    if (ones == n)
        throw alignment_error("certify: no all-ones column after column signing");
    std::swap(cols[0], cols[ones]);
    std::swap(eigenvalues[0], eigenvalues[ones]);
    if (eigenvalues[0] != 0)
        throw certification_error("certify: all-ones column has nonzero eigenvalue");

    std::vector<std::vector<int>> entries(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) entries[i][j] = cols[j][i];

    SpectralCertificate cert(g, HadamardMatrix(std::move(entries)), std::move(eigenvalues));

    // Integer-weighted Hadamard diagonalizable graphs are regular with
    // even integer spectra; a violation here means an arithmetic bug.
    if (g.has_integer_weights()) {
        for (const Rat& v : cert.eigenvalues())
            if (!is_integer(v) || v.get_num() % 2 != 0)
                throw certification_error("certify: integer-weighted graph with non-even eigenvalue");
        if (!degree_profile(g).is_regular)
            throw certification_error("certify: integer-weighted certified graph not regular");
    }
    return cert;
}

namespace {

Eigen::MatrixXd to_eigen(const RatMatrix& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).get_d();
    return e;
}

}  // namespace

std::complex<double> transition_amplitude(const WeightedGraph& g, double t, std::size_t j,
                                          std::size_t k) {
    const std::size_t n = g.order();
    if (j >= n || k >= n) throw domain_error("transition_amplitude: vertex out of range");
    Eigen::MatrixXd l = to_eigen(g.laplacian());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l);
    if (solver.info() != Eigen::Success)
        throw numeric_error("transition_amplitude: eigensolver failed");
    std::complex<double> amp = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        double phase = t * solver.eigenvalues()(m);
        amp += solver.eigenvectors()(j, m) * solver.eigenvectors()(k, m) *
               std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return amp;
}

std::complex<double> transition_amplitude(const SpectralCertificate& cert, double t, std::size_t j,
                                          std::size_t k) {
    const std::size_t n = cert.order();
    if (j >= n || k >= n) throw domain_error("transition_amplitude: vertex out of range");
    std::complex<double> amp = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        double phase = t * cert.eigenvalues()[m].get_d();
        amp += static_cast<double>(cert.hadamard()(j, m) * cert.hadamard()(k, m)) *
               std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return amp / static_cast<double>(n);
}

double evolve_fidelity(const WeightedGraph& g, double t, std::size_t j, std::size_t k) {
    return std::norm(transition_amplitude(g, t, j, k));
}

double evolve_fidelity(const SpectralCertificate& cert, double t, std::size_t j, std::size_t k) {
    return std::norm(transition_amplitude(cert, t, j, k));
}

std::vector<FidelityPoint> fidelity_curve(const WeightedGraph& g, std::size_t j, std::size_t k,
                                          double t_max, std::size_t steps) {
    if (steps < 2) throw domain_error("fidelity_curve: need at least 2 steps");
    std::vector<FidelityPoint> curve;
    curve.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        double t = t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
        curve.push_back({t, evolve_fidelity(g, t, j, k)});
    }
    return curve;
}

}  // namespace hdg
