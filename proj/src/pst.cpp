#include "hdg/pst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "hdg/errors.hpp"

namespace hdg {

double PiTime::seconds() const { return coefficient.get_d() * std::numbers::pi; }

std::string PiTime::str() const {
    if (coefficient == 0) return "0";
    if (coefficient == 1) return "pi";
    return coefficient.get_str() + " * pi";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::PST: return "PST";
        case Verdict::PERIODIC: return "PERIODIC";
        case Verdict::NONE: return "NONE";
        case Verdict::PGST: return "PGST";
    }
    return "?";
}

namespace {

int mod4(const Rat& v) {
    if (!is_integer(v)) throw domain_error("mod4: non-integer eigenvalue; rescale first");
    Int m = v.get_num() % 4;
    if (m < 0) m += 4;
    return static_cast<int>(m.get_si());
}

void require_integer_eigenvalues(const SpectralCertificate& cert) {
    if (!cert.has_integer_eigenvalues())
        throw domain_error("non-integer eigenvalues; apply rational_rescale first");
}

bool mod4_pair(const HadamardMatrix& h, const std::vector<Rat>& eigenvalues, std::size_t j,
               std::size_t k) {
    const std::size_t n = h.order();
    for (std::size_t l = 0; l < n; ++l) {
        int want = h(j, l) * h(k, l) == 1 ? 0 : 2;
        if (mod4(eigenvalues[l]) != want) return false;
    }
    return true;
}

// All 0-based pairs j < k passing the mod-4 criterion.
std::vector<std::pair<std::size_t, std::size_t>> mod4_sweep(const HadamardMatrix& h,
                                                            const std::vector<Rat>& eigenvalues) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const std::size_t n = h.order();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
            if (mod4_pair(h, eigenvalues, j, k)) pairs.push_back({j, k});
    return pairs;
}

void check_pair_uniqueness(const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                           std::size_t n) {
    std::vector<int> seen(n, 0);
    for (const auto& [j, k] : pairs) {
        if (seen[j]++ || seen[k]++)
            throw certification_error("PST partner uniqueness violated (internal error)");
    }
}

bool all_zero_mod4(const std::vector<Rat>& eigenvalues) {
    return std::all_of(eigenvalues.begin(), eigenvalues.end(),
                       [](const Rat& v) { return mod4(v) == 0; });
}

double min_oracle_fidelity(const WeightedGraph& g, const PiTime& t,
                           const std::vector<std::pair<std::size_t, std::size_t>>& pairs_1based) {
    double worst = 1.0;
    for (const auto& [j, k] : pairs_1based)
        worst = std::min(worst, evolve_fidelity(g, t.seconds(), j - 1, k - 1));
    return worst;
}

}  // namespace

bool pst_mod4(const SpectralCertificate& cert, std::size_t j, std::size_t k) {
    require_integer_eigenvalues(cert);
    if (j == k || j >= cert.order() || k >= cert.order())
        throw domain_error("pst_mod4: need distinct vertices in range");
    return mod4_pair(cert.hadamard(), cert.eigenvalues(), j, k);
}

PstReport pst_pairs(const SpectralCertificate& cert, bool run_oracle) {
    require_integer_eigenvalues(cert);
    PstReport report;
    report.time = PiTime{ratio(1, 2)};
    if (cert.graph().is_empty()) {
        report.verdict = Verdict::NONE;
        report.certifying_rule = "empty-graph";
        return report;
    }
    auto pairs = mod4_sweep(cert.hadamard(), cert.eigenvalues());
    check_pair_uniqueness(pairs, cert.order());
    if (!pairs.empty()) {
        report.verdict = Verdict::PST;
        report.certifying_rule = "Thm3.2";
        for (const auto& [j, k] : pairs) report.pairs.push_back({j + 1, k + 1});
        if (run_oracle)
            report.fidelity_checked = min_oracle_fidelity(cert.graph(), report.time, report.pairs);
    } else if (all_zero_mod4(cert.eigenvalues())) {
        report.verdict = Verdict::PERIODIC;
        report.certifying_rule = "Thm3.2-all-0-mod-4";
        if (run_oracle) {
            double worst = 1.0;
            for (std::size_t j = 0; j < cert.order(); ++j)
                worst = std::min(worst, evolve_fidelity(cert.graph(), report.time.seconds(), j, j));
            report.fidelity_checked = worst;
        }
    } else {
        report.verdict = Verdict::NONE;
        report.certifying_rule = "Thm3.2-no-pair";
    }
    return report;
}

GcdRescale gcd_rescale(const WeightedGraph& g) {
    if (!g.has_integer_weights()) throw domain_error("gcd_rescale: weights must be integers");
    Int a = 0;
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = i + 1; j < g.order(); ++j)
            if (g.weight(i, j) != 0) a = gcd(a, g.weight(i, j).get_num());
    if (a == 0) throw domain_error("gcd_rescale: graph has no edges");
    return GcdRescale{scale(g, Rat(1) / Rat(a)), a};
}

RationalRescale rational_rescale(const WeightedGraph& g) {
    if (g.is_empty()) throw domain_error("rational_rescale: graph has no edges");
    Int l = 1;
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = i + 1; j < g.order(); ++j)
            if (g.weight(i, j) != 0) l = lcm(l, g.weight(i, j).get_den());
    Int d = 0;
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = i + 1; j < g.order(); ++j)
            if (g.weight(i, j) != 0) d = gcd(d, Int(g.weight(i, j).get_num() * (l / g.weight(i, j).get_den())));
    Rat factor = Rat(l) / Rat(d);
    return RationalRescale{scale(g, factor), PiTime{factor / 2}};
}

SpectralCertificate sum_certificate(const SpectralCertificate& cert1,
                                    const SpectralCertificate& cert2) {
    if (cert1.hadamard() != cert2.hadamard())
        throw domain_error("sum_certificate: certificates use different Hadamards");
    std::vector<Rat> lam(cert1.order());
    for (std::size_t l = 0; l < lam.size(); ++l)
        lam[l] = cert1.eigenvalues()[l] + cert2.eigenvalues()[l];
    return SpectralCertificate(add(cert1.graph(), cert2.graph()), cert1.hadamard(),
                               std::move(lam));
}

SpectralCertificate merge_certificate(const SpectralCertificate& cert1,
                                      const SpectralCertificate& cert2, const Rat& w1,
                                      const Rat& w2) {
    if (cert1.hadamard() != cert2.hadamard())
        throw domain_error("merge_certificate: certificates use different Hadamards");
    const std::size_t n = cert1.order();
    auto d2 = degree_profile(cert2.graph());
    if (!d2.is_regular) throw domain_error("merge_certificate: G2 not regular");
    std::vector<Rat> lam(2 * n);
    for (std::size_t l = 0; l < n; ++l) {
        lam[l] = w1 * cert1.eigenvalues()[l] + w2 * cert2.eigenvalues()[l];
        lam[n + l] =
            w1 * cert1.eigenvalues()[l] - w2 * cert2.eigenvalues()[l] + 2 * w2 * d2.degree;
    }
    WeightedGraph merged = merge(cert1.graph(), cert2.graph(), MergeWeights{w1, w2});
    return SpectralCertificate(merged, doubled(cert1.hadamard()), std::move(lam));
}

namespace {

bool int_even(const Int& w) { return mpz_even_p(w.get_mpz_t()) != 0; }

unsigned long twos_valuation(const Int& w) {
    if (w == 0) throw domain_error("twos_valuation of zero");
    return mpz_scan1(w.get_mpz_t(), 0);
}

}  // namespace

PstReport merge_pst(const SpectralCertificate& cert1, const SpectralCertificate& cert2,
                    const Int& w1, const Int& w2, bool run_oracle) {
    if (cert1.hadamard() != cert2.hadamard())
        throw domain_error("merge_pst: certificates use different Hadamards");
    require_integer_eigenvalues(cert1);
    require_integer_eigenvalues(cert2);
    for (const auto* cert : {&cert1, &cert2})
        for (const Rat& v : cert->eigenvalues())
            if (mod4(v) % 2 != 0)
                throw domain_error("merge_pst: eigenvalues must all be even integers");

    const std::size_t n = cert1.order();
    auto profile2 = degree_profile(cert2.graph());
    if (!profile2.is_regular) throw domain_error("merge_pst: G2 must be regular");
    if (!is_integer(profile2.degree)) throw domain_error("merge_pst: d2 must be an integer");
    const bool d2_even = int_even(profile2.degree.get_num());

    PstReport report;
    report.time = PiTime{ratio(1, 2)};

    if (w1 == 0 && w2 == 0) {
        report.verdict = Verdict::NONE;
        report.certifying_rule = "zero-weights";
        return report;
    }

    // Two even weights: factor out 2^r and decide the reduced merge; a
    // reduced PST at pi/2 becomes PST at pi/2^{r+1} here.
    if ((w1 == 0 || int_even(w1)) && (w2 == 0 || int_even(w2)) ) {
        unsigned long r1 = w1 == 0 ? ~0ul : twos_valuation(w1);
        unsigned long r2 = w2 == 0 ? ~0ul : twos_valuation(w2);
        unsigned long r = std::min(r1, r2);
        Int pow2 = Int(1) << r;
        PstReport reduced = merge_pst(cert1, cert2, w1 / pow2, w2 / pow2, false);
        reduced.time.coefficient /= pow2;
        reduced.certifying_rule += "/2^" + std::to_string(r);
        if (run_oracle && (reduced.verdict == Verdict::PST || reduced.verdict == Verdict::PERIODIC)) {
            WeightedGraph merged = merge(cert1.graph(), cert2.graph(), MergeWeights{Rat(w1), Rat(w2)});
            if (reduced.verdict == Verdict::PST)
                reduced.fidelity_checked = min_oracle_fidelity(merged, reduced.time, reduced.pairs);
        }
        return reduced;
    }

    const bool w1_odd = !int_even(w1) && w1 != 0;
    const bool w2_odd = !int_even(w2) && w2 != 0;

    std::vector<Rat> source;
    bool cross = false;
    if (w1_odd && !w2_odd) {
        source = cert1.eigenvalues();
        report.certifying_rule = "Thm4.2-1(a),2(a)";
    } else if (!w1_odd && w2_odd) {
        source = cert2.eigenvalues();
        if (d2_even) {
            report.certifying_rule = "Thm4.2-1(b),2(b)";
        } else {
            report.certifying_rule = "Thm4.2-3(a)";
            cross = true;
        }
    } else {  // both odd
        source.resize(n);
        for (std::size_t l = 0; l < n; ++l)
            source[l] = cert1.eigenvalues()[l] + cert2.eigenvalues()[l];
        if (d2_even) {
            report.certifying_rule = "Thm4.2-1(c),2(c)";
        } else {
            report.certifying_rule = "Thm4.2-3(b)";
            cross = true;
        }
    }

    // Degenerate cross case p = q - n: when the source spectrum is all 0
    // mod 4 the two merged blocks sit at 0 and 2 mod 4, which is exactly
    // the sign pattern of the pair (p, p + n) under the doubled Hadamard,
    // so every vertex transfers to its copy in the other half.
    if (cross && all_zero_mod4(source))
        for (std::size_t p = 0; p < n; ++p) report.pairs.push_back({p + 1, p + n + 1});

    auto source_pairs = mod4_sweep(cert1.hadamard(), source);
    for (const auto& [p, q] : source_pairs) {
        if (cross) {
            report.pairs.push_back({p + 1, q + n + 1});
            report.pairs.push_back({q + 1, p + n + 1});
        } else {
            report.pairs.push_back({p + 1, q + 1});
            report.pairs.push_back({p + n + 1, q + n + 1});
        }
    }
    std::sort(report.pairs.begin(), report.pairs.end());
    check_pair_uniqueness(report.pairs, 2 * n + 1);

    if (!report.pairs.empty()) {
        report.verdict = Verdict::PST;
    } else {
        // fall back to the merged spectrum for the periodic verdict
        auto merged_cert = merge_certificate(cert1, cert2, Rat(w1), Rat(w2));
        if (!merged_cert.graph().is_empty() && all_zero_mod4(merged_cert.eigenvalues()))
            report.verdict = Verdict::PERIODIC;
        else
            report.verdict = Verdict::NONE;
    }

    if (run_oracle && report.verdict == Verdict::PST) {
        WeightedGraph merged = merge(cert1.graph(), cert2.graph(), MergeWeights{Rat(w1), Rat(w2)});
        report.fidelity_checked = min_oracle_fidelity(merged, report.time, report.pairs);
    }
    return report;
}

namespace {

struct ReducedWeights {
    Int odd_rational;       // the rational weight reduced to an odd integer
    QuadraticIrrational scaled_irrational;  // other weight times b/2^r
    Rat time_scale;         // b/2^r: true PST-approach times are scale * v * pi/2
};

// w_rat = a/b with a = +-2^r * k (k odd); the merge rescales so the
// rational weight becomes the odd integer +-k.
ReducedWeights reduce_rational_weight(const Rat& w_rat, const QuadraticIrrational& w_irr) {
    Int a = w_rat.get_num(), b = w_rat.get_den();
    if (a == 0) throw domain_error("pgst_sequence: rational weight must be nonzero");
    unsigned long r = twos_valuation(a);
    Int pow2 = Int(1) << r;
    Rat scale = Rat(b) / Rat(pow2);
    return ReducedWeights{a / pow2, w_irr.scaled(scale), scale};
}

}  // namespace

PgstResult pgst_sequence(const SpectralCertificate& cert1, const SpectralCertificate& cert2,
                         const MergeWeight& w1, const MergeWeight& w2, std::size_t p,
                         std::size_t q, std::size_t count) {
    if (cert1.hadamard() != cert2.hadamard())
        throw domain_error("pgst_sequence: certificates use different Hadamards");
    require_integer_eigenvalues(cert1);
    require_integer_eigenvalues(cert2);
    const std::size_t n = cert1.order();
    if (p < 1 || q < 1 || p > 2 * n || q > 2 * n || p >= q)
        throw domain_error("pgst_sequence: need 1 <= p < q <= 2n");

    const bool w1_irrational =
        std::holds_alternative<QuadraticIrrational>(w1) &&
        !std::get<QuadraticIrrational>(w1).is_rational();
    const bool w2_irrational =
        std::holds_alternative<QuadraticIrrational>(w2) &&
        !std::get<QuadraticIrrational>(w2).is_rational();
    if (w1_irrational && w2_irrational)
        throw domain_error("pgst_sequence: two irrational weights are unsupported");
    if (!w1_irrational && !w2_irrational)
        throw domain_error("pgst_sequence: both weights rational; use merge_pst");

    auto as_rational = [](const MergeWeight& w) -> Rat {
        if (std::holds_alternative<Rat>(w)) return std::get<Rat>(w);
        const auto& qi = std::get<QuadraticIrrational>(w);
        return Rat(qi.a()) / Rat(qi.c());
    };

    const Rat w_rat = as_rational(w1_irrational ? w2 : w1);
    const QuadraticIrrational& w_irr =
        std::get<QuadraticIrrational>(w1_irrational ? w1 : w2);
    ReducedWeights reduced = reduce_rational_weight(w_rat, w_irr);

    // Source spectra and the parity class of approximants that reproduce
    // the right merge parity type after clearing denominators.
    auto profile2 = degree_profile(cert2.graph());
    if (!profile2.is_regular || !is_integer(profile2.degree))
        throw domain_error("pgst_sequence: G2 must be regular with integer degree");
    const bool d2_even = int_even(profile2.degree.get_num());

    std::vector<Rat> sum(n);
    for (std::size_t l = 0; l < n; ++l)
        sum[l] = cert1.eigenvalues()[l] + cert2.eigenvalues()[l];

    struct Source {
        const std::vector<Rat>* spectrum;
        ParityClass cls;
        bool cross;
        const char* rule;
    };
    // With w2 irrational the scaled merge has parameters [v*w1', u, d2];
    // with w1 irrational it has [u, v*w2', d2] (w' the reduced odd weight).
    std::vector<Source> sources;
    if (w2_irrational) {
        sources.push_back({&cert1.eigenvalues(), ParityClass::EvenOdd, false, "Thm5.3-1"});
        sources.push_back({&cert2.eigenvalues(), ParityClass::OddEven, !d2_even, "Thm5.3-2"});
        sources.push_back({&sum, ParityClass::OddOdd, !d2_even, "Thm5.3-3"});
    } else {
        sources.push_back({&cert1.eigenvalues(), ParityClass::OddEven, false, "Thm5.3-1"});
        sources.push_back({&cert2.eigenvalues(), ParityClass::EvenOdd, !d2_even, "Thm5.3-2"});
        sources.push_back({&sum, ParityClass::OddOdd, !d2_even, "Thm5.3-3"});
    }

    const Source* chosen = nullptr;
    for (const auto& s : sources) {
        for (const auto& [a, b] : mod4_sweep(cert1.hadamard(), *s.spectrum)) {
            std::size_t pp, qq;
            if (s.cross) {
                pp = a + 1;
                qq = b + n + 1;
                if ((pp == p && qq == q) || (b + 1 == p && a + n + 1 == q)) { chosen = &s; break; }
            } else {
                pp = a + 1;
                qq = b + 1;
                if ((pp == p && qq == q) || (pp + n == p && qq + n == q)) { chosen = &s; break; }
            }
        }
        if (chosen) break;
    }
    if (!chosen)
        throw domain_error("pgst_sequence: pair (" + std::to_string(p) + "," + std::to_string(q) +
                           ") is not covered by any case of the merge PGST theorem");

    auto approximants = pgst_approximants(reduced.scaled_irrational, chosen->cls, count);

    // True merged Laplacian with the irrational weight in floating point.
    const double w1_val = w1_irrational ? std::get<QuadraticIrrational>(w1).value()
                                        : as_rational(w1).get_d();
    const double w2_val = w2_irrational ? std::get<QuadraticIrrational>(w2).value()
                                        : as_rational(w2).get_d();
    RatMatrix l1 = cert1.graph().laplacian();
    const RatMatrix& a2 = cert2.graph().adjacency();
    const double d2_val = profile2.degree.get_d();
    Eigen::MatrixXd l3(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double diag_block = w1_val * l1(i, j).get_d() + (i == j ? w2_val * d2_val : 0.0);
            double cross_block = -w2_val * a2(i, j).get_d();
            l3(i, j) = diag_block;
            l3(n + i, n + j) = diag_block;
            l3(i, n + j) = cross_block;
            l3(n + i, j) = cross_block;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l3);
    if (solver.info() != Eigen::Success) throw numeric_error("pgst_sequence: eigensolver failed");

    // Residual-perturbation row-sum bound: |w - u/v| < 1/v^2 times the
    // residual structure matrix ([[D2,-A2],[-A2,D2]] or diag(L1, L1)).
    Rat residual_row_sum = 0;
    if (w2_irrational) {
        for (std::size_t i = 0; i < n; ++i) {
            Rat s = abs(profile2.degree) + a2.abs_row_sum(i);
            if (s > residual_row_sum) residual_row_sum = s;
        }
    } else {
        residual_row_sum = l1.max_abs_row_sum();
    }

    PgstResult result;
    result.certifying_rule = chosen->rule;
    for (const auto& [u, v] : approximants) {
        PgstStep step;
        step.u = u;
        step.v = v;
        step.t0 = PiTime{reduced.time_scale * Rat(v) / 2};
        double t = step.t0.seconds();
        std::complex<double> amp = 0.0;
        for (std::size_t m = 0; m < 2 * n; ++m) {
            double phase = t * solver.eigenvalues()(m);
            amp += solver.eigenvectors()(p - 1, m) * solver.eigenvectors()(q - 1, m) *
                   std::complex<double>(std::cos(phase), std::sin(phase));
        }
        step.fidelity = std::norm(amp);
        // x bounds ||t0' L5'|| with t0' = v*pi/2 the reduced-graph time.
        // The cubic fidelity bound assumes a small perturbation; past
        // x = 1 it says nothing, so report -inf rather than a bogus value.
        double x = Rat(Rat(v) / 2 * residual_row_sum / (v * v)).get_d() * std::numbers::pi;
        step.lower_bound = x <= 1.0 ? 1.0 - (2.0 * x + x * x - x * x * x)
                                    : -std::numeric_limits<double>::infinity();
        result.steps.push_back(std::move(step));
    }
    return result;
}

}  // namespace hdg
