#include "hdg/families.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "hdg/cubelike.hpp"
#include "hdg/errors.hpp"

namespace hdg {

namespace {

void require_unweighted_pst(const SpectralCertificate& cert) {
    if (cert.order() < 4) throw domain_error("need at least 4 vertices");
    if (!cert.graph().is_unweighted()) throw domain_error("graph must be unweighted");
    if (pst_pairs(cert, false).verdict != Verdict::PST)
        throw domain_error("input certificate does not exhibit PST at pi/2");
}

}  // namespace

CertifiedPst pst_complement(const SpectralCertificate& cert) {
    require_unweighted_pst(cert);
    const std::size_t n = cert.order();
    SpectralCertificate comp = certify(complement(cert.graph()), cert.hadamard());
    // complement eigenvalue law: nonzero lambda -> n - lambda, same column
    for (std::size_t j = 1; j < n; ++j)
        if (comp.eigenvalues()[j] != Rat(static_cast<long>(n)) - cert.eigenvalues()[j])
            throw certification_error("complement eigenvalue relation failed (internal error)");
    PstReport report = pst_pairs(comp);
    return CertifiedPst{std::move(comp), std::move(report)};
}

CertifiedPst pst_self_join(const SpectralCertificate& cert) {
    require_unweighted_pst(cert);
    SpectralCertificate joined =
        certify(join(cert.graph(), cert.graph()), doubled(cert.hadamard()));
    PstReport report = pst_pairs(joined);
    return CertifiedPst{std::move(joined), std::move(report)};
}

CertifiedPst weighted_hypercube(const std::vector<Int>& weights) {
    if (weights.empty()) throw domain_error("weighted_hypercube: need at least one weight");
    for (const Int& w : weights)
        if (w == 0) throw domain_error("weighted_hypercube: weights must be nonzero");
    WeightedGraph g = scale(WeightedGraph::complete(2), Rat(weights[0]));
    for (std::size_t i = 1; i < weights.size(); ++i)
        g = cartesian_product(scale(WeightedGraph::complete(2), Rat(weights[i])), g);
    SpectralCertificate cert = certify(g, sylvester(static_cast<unsigned>(weights.size())));
    PstReport report = pst_pairs(cert);
    return CertifiedPst{std::move(cert), std::move(report)};
}

namespace {

// Disjoint union of 2^(k-r) copies of K_{2^r} on 2^k vertices, labelled by
// repeated doubling so the standard Hadamard diagonalizes it.
WeightedGraph clique_union(unsigned k, unsigned r) {
    WeightedGraph g = WeightedGraph::complete(std::size_t{1} << r);
    for (unsigned i = r; i < k; ++i) g = disjoint_union(g, g);
    return g;
}

WeightedGraph regular_family_graph(unsigned k, std::size_t deg) {
    const std::size_t n = std::size_t{1} << k;
    if (k < 3) throw domain_error("regular_family: k must be >= 3");
    if (deg < k + 1 || deg > n - 2)
        throw domain_error("regular_family: need k+1 <= deg <= 2^k - 2");

    if (k == 3) {
        // complements of the 3-cube, of two 4-cycles, and of a matching
        switch (deg) {
            case 4: return complement(build(ConnectionSet(3, {1, 2, 4})));
            case 5: return complement(build(ConnectionSet(3, {1, 2})));
            case 6: return complement(build(ConnectionSet(3, {1})));
        }
    }
    if (deg == n - 2) return complement(clique_union(k, 1));  // matching complement
    const std::size_t half = n / 2;
    if (deg <= half - 1)  // product step: K_2 x smaller family member
        return cartesian_product(WeightedGraph::complete(2), regular_family_graph(k - 1, deg - 1));
    for (unsigned r = 2; r < k; ++r) {  // clique-union merge step, smallest r
        std::size_t span = std::size_t{1} << r;
        if (deg + 1 < span + k) continue;
        std::size_t inner = deg + 1 - span;
        if (inner < k || inner > half - 2) continue;
        return merge(clique_union(k - 1, r), regular_family_graph(k - 1, inner),
                     MergeWeights{1, 1});
    }
    if (deg >= half + 1) {  // join step; small inner degrees via complement
        std::size_t inner = deg - half;
        WeightedGraph g = inner >= k ? regular_family_graph(k - 1, inner)
                                     : complement(regular_family_graph(k - 1, half - 1 - inner));
        return join(g, g);
    }
    throw domain_error("regular_family: no construction case applies (internal error)");
}

}  // namespace

CertifiedPst regular_family(unsigned k, std::size_t deg) {
    WeightedGraph g = regular_family_graph(k, deg);
    SpectralCertificate cert = certify(g, sylvester(k));
    PstReport report = pst_pairs(cert);
    return CertifiedPst{std::move(cert), std::move(report)};
}

std::vector<std::size_t> degree_coverage(unsigned k) {
    if (k < 3) throw domain_error("degree_coverage: k must be >= 3");
    const std::size_t n = std::size_t{1} << k;
    std::set<std::size_t> covered;
    if (k == 3) {
        covered = {4, 5, 6};
    } else {
        const std::size_t half = n / 2;
        covered.insert(n - 2);
        for (std::size_t d = k + 1; d <= half - 1; ++d) covered.insert(d);
        for (unsigned r = 2; r < k; ++r) {
            std::size_t span = std::size_t{1} << r;
            for (std::size_t inner = k; inner + 2 <= half; ++inner)
                covered.insert(inner + span - 1);
        }
        for (std::size_t d = half + 1; d <= n - 2; ++d) covered.insert(d);
    }
    return {covered.begin(), covered.end()};
}

namespace {

// Transcribed numerators (over 3) of the twelve-vertex Laplacian; guarded
// by a checksum plus symmetry / zero-row-sum validation at load time.
constexpr const char* kTwelveVertexLaplacian =
    "18 0 -1 -1 -1 -3 -3 -3 -1 -3 -1 -1\n"
    "0 18 -1 -1 -1 -3 -3 -3 -1 -3 -1 -1\n"
    "-1 -1 18 -2 -2 0 -2 0 -2 -2 -4 -2\n"
    "-1 -1 -2 18 -4 0 0 -2 -2 -2 -2 -2\n"
    "-1 -1 -2 -4 18 -2 -2 0 -2 0 -2 -2\n"
    "-3 -3 0 0 -2 18 -2 -2 0 -2 -2 -2\n"
    "-3 -3 -2 0 -2 -2 18 -2 -2 -2 0 0\n"
    "-3 -3 0 -2 0 -2 -2 18 -2 -2 -2 0\n"
    "-1 -1 -2 -2 -2 0 -2 -2 18 0 -2 -4\n"
    "-3 -3 -2 -2 0 -2 -2 -2 0 18 0 -2\n"
    "-1 -1 -4 -2 -2 -2 0 -2 -2 0 18 -2\n"
    "-1 -1 -2 -2 -2 -2 0 0 -4 -2 -2 18\n";
constexpr std::uint64_t kTwelveVertexChecksum = 0x981ef5875047c90bull;

std::uint64_t fnv1a(const char* s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (; *s; ++s) {
        h ^= static_cast<unsigned char>(*s);
        h *= 0x100000001b3ull;
    }
    return h;
}

WeightedGraph twelve_vertex_graph() {
    if (fnv1a(kTwelveVertexLaplacian) != kTwelveVertexChecksum)
        throw certification_error("twelve-vertex Laplacian asset corrupted");
    RatMatrix l(12, 12);
    std::istringstream in(kTwelveVertexLaplacian);
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j) {
            long v;
            if (!(in >> v)) throw certification_error("twelve-vertex Laplacian asset truncated");
            l(i, j) = ratio(v, 3);
        }
    return WeightedGraph::from_laplacian(l);  // validates symmetry + row sums
}

}  // namespace

CertifiedPst example_4_4() {
    HadamardMatrix h = catalog(12);
    SpectralCertificate cert1 = certify(twelve_vertex_graph(), h);
    SpectralCertificate cert2 = certify(WeightedGraph::complete(12), h);
    PstReport report = merge_pst(cert1, cert2, 5, 2);
    SpectralCertificate merged = merge_certificate(cert1, cert2, 5, 2);
    return CertifiedPst{std::move(merged), std::move(report)};
}

}  // namespace hdg
