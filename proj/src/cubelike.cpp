#include "hdg/cubelike.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

#include "hdg/errors.hpp"

namespace hdg {

ConnectionSet::ConnectionSet(unsigned d, std::vector<std::uint32_t> elements)
    : d_(d), elements_(std::move(elements)) {
    if (d == 0 || d > 31) throw domain_error("ConnectionSet: dimension must be in 1..31");
    std::sort(elements_.begin(), elements_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] == 0) throw domain_error("ConnectionSet: zero element");
        if (elements_[i] >> d) throw domain_error("ConnectionSet: element exceeds dimension");
        if (i > 0 && elements_[i] == elements_[i - 1])
            throw domain_error("ConnectionSet: duplicate element");
    }
}

WeightedGraph build(const ConnectionSet& c) {
    const std::size_t n = std::size_t{1} << c.dimension();
    WeightedGraph g(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::uint32_t e : c.elements()) {
            std::size_t y = x ^ e;
            if (x < y) g.set_edge(x, y, 1);
        }
    return g;
}

std::uint32_t sigma(const ConnectionSet& c) {
    std::uint32_t s = 0;
    for (std::uint32_t e : c.elements()) s ^= e;
    return s;
}

PstReport pst_by_sigma(const ConnectionSet& c) {
    PstReport report;
    report.time = PiTime{ratio(1, 2)};
    const std::uint32_t s = sigma(c);
    if (s != 0) {
        report.verdict = Verdict::PST;
        report.certifying_rule = "Thm2.1";
        const std::size_t n = std::size_t{1} << c.dimension();
        for (std::size_t j = 0; j < n; ++j)
            if (j < (j ^ s)) report.pairs.push_back({j + 1, (j ^ s) + 1});
    } else {
        report.verdict = Verdict::PERIODIC;
        report.certifying_rule = "Thm2.1-sigma-0";
    }
    return report;
}

Int code_weight_gcd(const ConnectionSet& c) {
    if (sigma(c) != 0)
        throw domain_error("code_weight_gcd: sigma != 0, PST time is already pi/2");
    // The code is the GF(2) span of C inside Z_2^d; a basis keeps the
    // codeword sweep at 2^rank <= 2^d instead of 2^|C|.
    std::vector<std::uint32_t> basis;
    for (std::uint32_t e : c.elements()) {
        std::uint32_t v = e;
        for (std::uint32_t b : basis) v = std::min(v, v ^ b);
        if (v) basis.push_back(v);
    }
    unsigned long g = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << basis.size()); ++mask) {
        std::uint32_t word = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (mask >> i & 1) word ^= basis[i];
        g = std::gcd(g, static_cast<unsigned long>(std::popcount(word)));
    }
    if (g == 0) throw domain_error("code_weight_gcd: empty connection set");
    return Int(g);
}

namespace {

// Membership table over Z_2^k of a symmetric 0/1 matrix that the order-2^k
// Sylvester Hadamard diagonalizes; 0 may be a member (constant diagonal).
std::vector<bool> subset_decompose(const RatMatrix& m, unsigned k) {
    const std::size_t n = std::size_t{1} << k;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m(i, j) != 0 && m(i, j) != 1)
                throw domain_error("decompose_standard: entries must be 0/1");
    if (k == 0) return {m(0, 0) == 1};
    const std::size_t h = n / 2;
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            if (m(i, j) != m(h + i, h + j) || m(i, h + j) != m(h + i, j) ||
                m(i, h + j) != m(j, h + i))
                throw certification_error(
                    "decompose_standard: block structure fails; matrix is not "
                    "diagonalized by the standard Hadamard");
        }
    RatMatrix low(h, h), cross(h, h);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            low(i, j) = m(i, j);
            cross(i, j) = m(i, h + j);
        }
    std::vector<bool> s0 = subset_decompose(low, k - 1);
    std::vector<bool> s1 = subset_decompose(cross, k - 1);
    std::vector<bool> s(n);
    for (std::size_t z = 0; z < h; ++z) {
        s[z] = s0[z];
        s[h + z] = s1[z];
    }
    return s;
}

}  // namespace

Decomposition decompose_standard(const RatMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0 || (n & (n - 1)) != 0)
        throw domain_error("decompose_standard: order must be a power of two");
    if (!a.is_symmetric()) throw domain_error("decompose_standard: matrix not symmetric");
    unsigned k = 0;
    while ((std::size_t{1} << k) < n) ++k;

    const Rat diag = a(0, 0);
    if (diag != 0 && diag != 1)
        throw certification_error("decompose_standard: diagonal entries must be 0 or 1");
    for (std::size_t i = 1; i < n; ++i)
        if (a(i, i) != diag)
            throw certification_error("decompose_standard: non-constant diagonal");

    RatMatrix body = a;
    const bool loops = diag == 1;
    if (loops)
        for (std::size_t i = 0; i < n; ++i) body(i, i) = 0;

    std::vector<bool> member = subset_decompose(body, k);
    std::vector<std::uint32_t> elements;
    for (std::size_t z = 1; z < n; ++z)
        if (member[z]) elements.push_back(static_cast<std::uint32_t>(z));
    return Decomposition{ConnectionSet(k, std::move(elements)), loops};
}

bool spans_space(const ConnectionSet& c) {
    std::vector<std::uint32_t> basis;
    for (std::uint32_t e : c.elements()) {
        std::uint32_t v = e;
        for (std::uint32_t b : basis) v = std::min(v, v ^ b);
        if (v) basis.push_back(v);
    }
    return basis.size() == c.dimension();
}

bool all_odd_weight(const ConnectionSet& c) {
    return std::all_of(c.elements().begin(), c.elements().end(),
                       [](std::uint32_t e) { return std::popcount(e) % 2 == 1; });
}

namespace {

ConnectionSet set_from_mask(unsigned d, std::uint64_t mask) {
    std::vector<std::uint32_t> elements;
    for (std::uint32_t e = 1; e < (std::uint32_t{1} << d); ++e)
        if (mask >> (e - 1) & 1) elements.push_back(e);
    return ConnectionSet(d, std::move(elements));
}

}  // namespace

std::vector<ConnectionSet> enumerate(unsigned d, const SetPredicate& predicate,
                                     unsigned threads) {
    if (d == 0 || d > 5)
        throw capacity_error("enumerate: exhaustive mode supports 1 <= d <= 5");
    const std::uint64_t total = std::uint64_t{1} << ((std::uint64_t{1} << d) - 1);
    if (threads <= 1) {
        std::vector<ConnectionSet> out;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            ConnectionSet c = set_from_mask(d, mask);
            if (!predicate || predicate(c)) out.push_back(std::move(c));
        }
        return out;
    }
    std::vector<std::vector<ConnectionSet>> chunks(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            std::uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                ConnectionSet c = set_from_mask(d, mask);
                if (!predicate || predicate(c)) chunks[t].push_back(std::move(c));
            }
        });
    for (auto& th : pool) th.join();
    std::vector<ConnectionSet> out;
    for (auto& chunk : chunks)
        for (auto& c : chunk) out.push_back(std::move(c));
    return out;
}

WeightedGraph regular_pst_family(unsigned k, std::size_t deg) {
    if (k < 3) throw domain_error("regular_pst_family: k must be >= 3");
    const std::uint32_t n = std::uint32_t{1} << k;
    if (deg < k + 1 || deg > n - 2)
        throw domain_error("regular_pst_family: need k+1 <= deg <= 2^k - 2");

    // Core forces the basis (connected) and an even-weight triangle
    // element (non-bipartite); the core never leaves the set.
    std::vector<std::uint32_t> core;
    for (unsigned i = 0; i < k; ++i) core.push_back(std::uint32_t{1} << i);
    core.push_back(0b11);
    std::vector<bool> in_set(n, false);
    for (std::uint32_t e : core) in_set[e] = true;
    std::vector<std::uint32_t> extras;
    for (std::uint32_t e = 1; e < n && core.size() + extras.size() < deg; ++e)
        if (!in_set[e]) {
            in_set[e] = true;
            extras.push_back(e);
        }

    auto current_sigma = [&] {
        std::uint32_t s = 0;
        for (std::uint32_t e = 1; e < n; ++e)
            if (in_set[e]) s ^= e;
        return s;
    };
    if (current_sigma() == 0) {
        // Swap the last extra for the next unused element; any swap changes
        // sigma by old XOR new != 0. deg <= 2^k - 2 leaves a spare element.
        std::uint32_t out = extras.empty() ? core.back() : extras.back();
        for (std::uint32_t e = 1; e < n; ++e)
            if (!in_set[e] && e != out) {
                in_set[out] = false;
                in_set[e] = true;
                break;
            }
        if (current_sigma() == 0)
            throw numeric_error("regular_pst_family: sigma swap failed (internal error)");
    }

    std::vector<std::uint32_t> elements;
    for (std::uint32_t e = 1; e < n; ++e)
        if (in_set[e]) elements.push_back(e);
    return build(ConnectionSet(k, std::move(elements)));
}

}  // namespace hdg
