#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hdg/quadratic.hpp"
#include "hdg/spectral.hpp"

namespace hdg {

// Exact time as a rational multiple of pi; floating pi only enters the
// numeric oracle.
struct PiTime {
    Rat coefficient;  // time = coefficient * pi

    double seconds() const;
    std::string str() const;  // "1/2 * pi"
    bool operator==(const PiTime& other) const = default;
};

enum class Verdict { PST, PERIODIC, NONE, PGST };

std::string to_string(Verdict v);

struct PstReport {
    Verdict verdict = Verdict::NONE;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // 1-based, j < k
    PiTime time{Rat(0)};
    std::string certifying_rule;
    std::optional<double> fidelity_checked;  // min oracle fidelity over pairs
};

// Mod-4 eigenvalue criterion for PST at pi/2 between 0-based vertices
// j != k. Requires integer eigenvalues.
bool pst_mod4(const SpectralCertificate& cert, std::size_t j, std::size_t k);

// All-pairs sweep. PST when some pair passes; PERIODIC when none does
// but every eigenvalue is 0 mod 4 (and the graph is nonempty); NONE
// otherwise. Reported pairs are cross-checked by the numeric oracle.
PstReport pst_pairs(const SpectralCertificate& cert, bool run_oracle = true);

struct GcdRescale {
    WeightedGraph graph;
    Int factor;  // original has PST at pi/(2*factor) iff graph has PST at pi/2
};
GcdRescale gcd_rescale(const WeightedGraph& g);

struct RationalRescale {
    WeightedGraph graph;  // integer-weighted, gcd 1
    PiTime t1;            // original has PST at t1 iff graph has PST at pi/2
};
RationalRescale rational_rescale(const WeightedGraph& g);

// Decision table for PST of the merge at pi/2 (or pi/2^{r+1} after
// factoring 2^r out of two even weights). Both certificates must share
// the same Hadamard and have integer eigenvalues.
PstReport merge_pst(const SpectralCertificate& cert1, const SpectralCertificate& cert2,
                    const Int& w1, const Int& w2, bool run_oracle = true);

// Certificate of the same-H sum graph: eigenvalues add columnwise.
SpectralCertificate sum_certificate(const SpectralCertificate& cert1,
                                    const SpectralCertificate& cert2);

// [[H, H], [H, -H]] certificate of the merged graph, eigenvalue order
// block 1 = w1*l1 + w2*l2, block 2 = w1*l1 - w2*l2 + 2*w2*d2.
SpectralCertificate merge_certificate(const SpectralCertificate& cert1,
                                      const SpectralCertificate& cert2, const Rat& w1,
                                      const Rat& w2);

using MergeWeight = std::variant<Rat, QuadraticIrrational>;

struct PgstStep {
    Int u;
    Int v;
    PiTime t0;
    double fidelity;
    double lower_bound;  // may be negative (uninformative); never clamped
};

struct PgstResult {
    std::vector<PgstStep> steps;
    std::string certifying_rule;  // theorem case that covers the target pair
};

// Approximant sequence for the merge with exactly one irrational weight,
// targeting 1-based pair (p, q) over the 2n merged vertices.
PgstResult pgst_sequence(const SpectralCertificate& cert1, const SpectralCertificate& cert2,
                         const MergeWeight& w1, const MergeWeight& w2, std::size_t p,
                         std::size_t q, std::size_t count);

}  // namespace hdg
