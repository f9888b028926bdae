#pragma once

#include <cstddef>
#include <vector>

#include "hdg/pst.hpp"

namespace hdg {

struct CertifiedPst {
    SpectralCertificate certificate;
    PstReport report;
};

// Complement of an unweighted PST graph on n >= 4 vertices: same Hadamard,
// nonzero eigenvalues map to n - lambda, PST pairs and time preserved.
CertifiedPst pst_complement(const SpectralCertificate& cert);

// Join G v G of an unweighted PST graph with itself: 2n vertices under the
// doubled Hadamard, same pair at pi/2.
CertifiedPst pst_self_join(const SpectralCertificate& cert);

// Cartesian product of weighted edges (w_1 K_2) x ... x (w_m K_2), bit i-1
// of the vertex index being coordinate i. PST partner flips exactly the
// odd-weight coordinates; all-even weights give a periodic graph.
CertifiedPst weighted_hypercube(const std::vector<Int>& weights);

// Connected, non-bipartite, deg-regular PST graph on 2^k vertices built by
// the merge recursion (product step, clique-union merge step, join step,
// matching complement). k >= 3, k+1 <= deg <= 2^k - 2.
CertifiedPst regular_family(unsigned k, std::size_t deg);

// The order-24 merge of the weight-1/3 twelve-vertex PST graph with K_12
// at weights (5, 2); PST (1, 2) at pi/2.
CertifiedPst example_4_4();

// Degrees in [k+1, 2^k - 2] reachable by regular_family's construction
// cases, from the interval formulas; sorted ascending.
std::vector<std::size_t> degree_coverage(unsigned k);

}  // namespace hdg
