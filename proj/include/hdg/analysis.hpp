#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hdg/cubelike.hpp"
#include "hdg/pst.hpp"

namespace hdg {

struct TimingDrop {
    double drop;      // p(t0) - p(t0 + h) from the oracle, first PST pair
    double ring_sum;  // (1/n)|sum_j e^{ih lambda_j}| from exact eigenvalues
};

// Fidelity loss under a timing error h, |h| < pi / lambda_max.
TimingDrop timing_drop(const SpectralCertificate& cert, const PiTime& t0, double h);

// 2x + x^2 - x^3 for x = ||t0 L0||; an upper bound on 1 - p.
double fidelity_perturbation_bound(double t0_l0_norm);

// Exact solution of the eigenvalue-count system of an r-regular PST graph:
// counts c_{2j} (j = 1..r) expressed as constant + coeff * n. For r <= 3
// the system forces n; for r = 4 the cube-sum inequality caps n.
struct EigencountSystem {
    unsigned r;
    std::vector<std::pair<Rat, Rat>> counts;  // c_{2j} = first + second * n
    std::optional<Int> n;                     // forced order (r <= 3)
    std::optional<Int> n_max;                 // order bound (r == 4)

    std::vector<Int> counts_at(const Int& order) const;
};

EigencountSystem eigencount_solve(unsigned r);

struct SparsityHit {
    ConnectionSet set;
    std::size_t n;
    std::vector<Int> eigencounts;  // c_{2j}, j = 1..r
};

struct SparsityReport {
    unsigned r;
    unsigned max_k;
    std::size_t corpus_size;  // connected r-regular cubelike graphs scanned
    std::vector<SparsityHit> hits;
    std::size_t max_order;  // 0 when no hits
    bool bound_satisfied;   // every hit has n <= 2^r and consistent counts
};

// Scans connected r-regular cubelike graphs on 2^k vertices (k <= max_k)
// with PST at pi/2 and checks the n <= 2^r order bound plus the count
// constraints. Corpus restricted to cubelike graphs by design.
SparsityReport verify_sparsity_corpus(unsigned r, unsigned max_k, unsigned threads = 1);

}  // namespace hdg
