#include "hdg/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>

#include "hdg/errors.hpp"

namespace hdg {

TimingDrop timing_drop(const SpectralCertificate& cert, const PiTime& t0, double h) {
    PstReport report = pst_pairs(cert, false);
    if (report.verdict != Verdict::PST)
        throw domain_error("timing_drop: certificate has no PST pair");
    double lambda_max = 0.0;
    for (const Rat& v : cert.eigenvalues()) lambda_max = std::max(lambda_max, v.get_d());
    if (lambda_max > 0 && std::abs(h) >= std::numbers::pi / lambda_max)
        throw domain_error("timing_drop: |h| must be below pi / lambda_max");

    const auto [j, k] = report.pairs.front();
    const double t = t0.seconds();
    TimingDrop out;
    out.drop = evolve_fidelity(cert, t, j - 1, k - 1) - evolve_fidelity(cert, t + h, j - 1, k - 1);
    std::complex<double> s = 0.0;
    for (const Rat& v : cert.eigenvalues()) {
        double phase = h * v.get_d();
        s += std::complex<double>(std::cos(phase), std::sin(phase));
    }
    out.ring_sum = std::abs(s) / static_cast<double>(cert.order());
    return out;
}

double fidelity_perturbation_bound(double x) {
    if (x < 0) throw domain_error("fidelity_perturbation_bound: norm must be nonnegative");
    return 2 * x + x * x - x * x * x;
}

std::vector<Int> EigencountSystem::counts_at(const Int& order) const {
    std::vector<Int> out;
    for (const auto& [base, slope] : counts) {
        Rat v = base + slope * Rat(order);
        if (!is_integer(v) || v < 0)
            throw domain_error("counts_at: order does not give nonnegative integer counts");
        out.push_back(v.get_num());
    }
    return out;
}

EigencountSystem eigencount_solve(unsigned r) {
    if (r < 1 || r > 4)
        throw domain_error("eigencount_solve: only 1 <= r <= 4 is supported");

    // Equations sum a_j c_{2j} = b + s*n over unknowns c_2..c_{2r}:
    // count total, trace, squared trace, and the mod-4 parity split.
    struct Row {
        std::vector<Rat> a;
        Rat b, s;
    };
    std::vector<Row> rows;
    auto eq = [&](auto coeff, Rat b, Rat s) {
        Row row{std::vector<Rat>(r), std::move(b), std::move(s)};
        for (unsigned j = 1; j <= r; ++j) row.a[j - 1] = coeff(j);
        rows.push_back(std::move(row));
    };
    const long rl = r;
    eq([](unsigned) { return Rat(1); }, -1, 1);
    eq([](unsigned j) { return Rat(2 * j); }, 0, rl);
    eq([](unsigned j) { return Rat(4 * j * j); }, 0, rl * (rl + 1));
    eq([](unsigned j) { return Rat(j % 2 ? 1 : -1); }, 1, 0);

    // Forward elimination with the unknowns only; the right side stays
    // affine in n throughout.
    std::vector<std::size_t> pivot_row(r, rows.size());
    std::size_t next = 0;
    for (unsigned col = 0; col < r && next < rows.size(); ++col) {
        std::size_t p = next;
        while (p < rows.size() && rows[p].a[col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[next]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == next || rows[i].a[col] == 0) continue;
            Rat f = rows[i].a[col] / rows[next].a[col];
            for (unsigned c = 0; c < r; ++c) rows[i].a[c] -= f * rows[next].a[c];
            rows[i].b -= f * rows[next].b;
            rows[i].s -= f * rows[next].s;
        }
        pivot_row[col] = next;
        ++next;
    }

    // Left-over rows constrain n: 0 = b + s*n.
    std::optional<Rat> forced;
    for (std::size_t i = next; i < rows.size(); ++i) {
        if (rows[i].s == 0) {
            if (rows[i].b != 0)
                throw certification_error("eigencount system inconsistent (internal error)");
            continue;
        }
        Rat n_val = -rows[i].b / rows[i].s;
        if (forced && *forced != n_val)
            throw certification_error("eigencount system inconsistent (internal error)");
        forced = n_val;
    }

    EigencountSystem sys;
    sys.r = r;
    sys.counts.resize(r);
    for (unsigned col = 0; col < r; ++col) {
        if (pivot_row[col] == rows.size())
            throw certification_error("eigencount system underdetermined (internal error)");
        const Row& row = rows[pivot_row[col]];
        sys.counts[col] = {row.b / row.a[col], row.s / row.a[col]};
    }

    if (forced) {
        if (!is_integer(*forced))
            throw certification_error("eigencount system forced non-integer order");
        sys.n = forced->get_num();
        for (auto& [base, slope] : sys.counts) {
            base += slope * *forced;
            slope = 0;
        }
    } else {
        // Cube-sum inequality sum (2j)^3 c_{2j} <= r^2 (r+3) n caps n.
        Rat cube_base = 0, cube_slope = 0;
        for (unsigned j = 1; j <= r; ++j) {
            Rat w(8L * j * j * j);
            cube_base += w * sys.counts[j - 1].first;
            cube_slope += w * sys.counts[j - 1].second;
        }
        Rat limit(rl * rl * (rl + 3));
        if (cube_slope > limit) {
            Rat bound = cube_base / (cube_slope - limit);  // n <= -base/(slope-limit), base < 0
            bound = -bound;
            Int n_max;
            mpz_fdiv_q(n_max.get_mpz_t(), bound.get_num().get_mpz_t(),
                       bound.get_den().get_mpz_t());
            sys.n_max = n_max;
        }
    }
    return sys;
}

namespace {

std::vector<Int> cubelike_eigencounts(const ConnectionSet& c, unsigned r) {
    const std::size_t n = std::size_t{1} << c.dimension();
    std::vector<Int> counts(r, 0);
    for (std::size_t v = 1; v < n; ++v) {
        unsigned odd_hits = 0;
        for (std::uint32_t e : c.elements())
            if (std::popcount(static_cast<std::uint32_t>(v) & e) % 2) ++odd_hits;
        if (odd_hits == 0 || odd_hits > r)
            throw numeric_error("cubelike eigenvalue out of range (internal error)");
        counts[odd_hits - 1] += 1;  // eigenvalue 2 * odd_hits
    }
    return counts;
}

bool counts_consistent(const std::vector<Int>& counts, unsigned r, std::size_t n) {
    Int total = 0, trace = 0, trace2 = 0, parity = 0;
    for (unsigned j = 1; j <= r; ++j) {
        total += counts[j - 1];
        trace += Int(2 * j) * counts[j - 1];
        trace2 += Int(4 * j * j) * counts[j - 1];
        parity += (j % 2 ? counts[j - 1] : -counts[j - 1]);
    }
    const Int order(static_cast<long>(n));
    return total == order - 1 && trace == Int(r) * order &&
           trace2 == Int(r) * order * Int(r + 1) && parity == 1;
}

}  // namespace

SparsityReport verify_sparsity_corpus(unsigned r, unsigned max_k, unsigned threads) {
    if (r < 1 || r > 4) throw domain_error("verify_sparsity_corpus: need 1 <= r <= 4");
    if (max_k > 5) throw capacity_error("verify_sparsity_corpus: max_k must be <= 5");

    SparsityReport report;
    report.r = r;
    report.max_k = max_k;
    report.corpus_size = 0;
    report.max_order = 0;
    report.bound_satisfied = true;

    for (unsigned k = 1; k <= max_k; ++k) {
        if (r > (std::size_t{1} << k) - 1) continue;
        auto corpus = enumerate(
            k,
            [&](const ConnectionSet& c) { return c.size() == r && spans_space(c); },
            threads);
        report.corpus_size += corpus.size();
        for (const ConnectionSet& c : corpus) {
            if (sigma(c) == 0) continue;  // periodic, not PST at pi/2
            SparsityHit hit{c, std::size_t{1} << k, cubelike_eigencounts(c, r)};
            if (hit.n > (std::size_t{1} << r) || !counts_consistent(hit.eigencounts, r, hit.n))
                report.bound_satisfied = false;
            report.max_order = std::max(report.max_order, hit.n);
            report.hits.push_back(std::move(hit));
        }
    }
    return report;
}

}  // namespace hdg
