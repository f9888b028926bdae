#pragma once

#include <complex>
#include <vector>

#include "hdg/graph.hpp"
#include "hdg/hadamard.hpp"

namespace hdg {

// Exact eigendecomposition of a Laplacian by a normalized, aligned
// Hadamard: column 1 of the Hadamard is the all-ones 0-eigenvector and
// L * h_j = eigenvalues[j] * h_j for every column.
class SpectralCertificate {
public:
    SpectralCertificate(WeightedGraph graph, HadamardMatrix hadamard, std::vector<Rat> eigenvalues)
        : graph_(std::move(graph)), hadamard_(std::move(hadamard)),
          eigenvalues_(std::move(eigenvalues)) {}

    const WeightedGraph& graph() const { return graph_; }
    const HadamardMatrix& hadamard() const { return hadamard_; }
    const std::vector<Rat>& eigenvalues() const { return eigenvalues_; }
    std::size_t order() const { return graph_.order(); }

    bool has_integer_eigenvalues() const;

private:
    WeightedGraph graph_;
    HadamardMatrix hadamard_;
    std::vector<Rat> eigenvalues_;
};

struct FidelityPoint {
    double t;
    double p;
};

// True iff H^T L H is diagonal, in exact arithmetic.
bool diagonalizes(const RatMatrix& laplacian, const HadamardMatrix& h);

// Signs columns so row 1 of H is all ones, swaps the all-ones column to
// the front, and extracts eigenvalues by exact componentwise ratio.
// Throws certification_error when a column is not an eigenvector and
// alignment_error when no all-ones column exists after signing.
SpectralCertificate certify(const WeightedGraph& g, const HadamardMatrix& h);

// Transition amplitude (e^{itL})_{jk}; vertices 0-based.
std::complex<double> transition_amplitude(const WeightedGraph& g, double t, std::size_t j,
                                          std::size_t k);
std::complex<double> transition_amplitude(const SpectralCertificate& cert, double t, std::size_t j,
                                          std::size_t k);

// |  (e^{itL})_{jk} |^2 via a symmetric eigensolver on the dense Laplacian.
double evolve_fidelity(const WeightedGraph& g, double t, std::size_t j, std::size_t k);
// Same quantity from the exact eigenpairs of a certificate.
double evolve_fidelity(const SpectralCertificate& cert, double t, std::size_t j, std::size_t k);

std::vector<FidelityPoint> fidelity_curve(const WeightedGraph& g, std::size_t j, std::size_t k,
                                          double t_max, std::size_t steps);

// Numeric PST threshold shared by all oracle-backed verdicts.
inline constexpr double kPstTolerance = 1e-9;

}  // namespace hdg
