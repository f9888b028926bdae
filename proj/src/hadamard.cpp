#include "hdg/hadamard.hpp"

#include <cstddef>
#include <string>

#include "hdg/errors.hpp"

namespace hdg {

namespace {

// Gram check in arbitrary precision: every pair of rows must have dot
// product n (self) or 0 (distinct).
bool gram_ok(const std::vector<std::vector<int>>& e) {
    const std::size_t n = e.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Int dot = 0;
            for (std::size_t k = 0; k < n; ++k) dot += e[i][k] * e[j][k];
            if (i == j ? dot != Int(static_cast<long>(n)) : dot != 0) return false;
        }
    }
    return true;
}

}  // namespace

HadamardMatrix::HadamardMatrix(std::vector<std::vector<int>> entries)
    : n_(entries.size()), entries_(std::move(entries)) {
    if (n_ == 0) throw domain_error("HadamardMatrix: empty");
    if (n_ > 2 && n_ % 4 != 0)
        throw domain_error("HadamardMatrix: order must be 1, 2, or a multiple of 4");
    for (const auto& row : entries_) {
        if (row.size() != n_) throw domain_error("HadamardMatrix: not square");
        for (int v : row)
            if (v != 1 && v != -1) throw domain_error("HadamardMatrix: entries must be +-1");
    }
    if (!gram_ok(entries_)) throw domain_error("HadamardMatrix: H H^T != nI");
}

RatMatrix HadamardMatrix::as_rational() const {
    RatMatrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(i, j) = entries_[i][j];
    return m;
}

bool HadamardMatrix::is_normalized() const {
    for (std::size_t i = 0; i < n_; ++i)
        if (entries_[0][i] != 1 || entries_[i][0] != 1) return false;
    return true;
}

HadamardMatrix sylvester(unsigned k) {
    if (k >= 24) throw capacity_error("sylvester: order 2^" + std::to_string(k) + " too large");
    std::size_t n = 1;
    std::vector<std::vector<int>> e{{1}};
    for (unsigned step = 0; step < k; ++step) {
        std::vector<std::vector<int>> d(2 * n, std::vector<int>(2 * n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = e[i][j];
                d[i][j + n] = e[i][j];
                d[i + n][j] = e[i][j];
                d[i + n][j + n] = -e[i][j];
            }
        e = std::move(d);
        n *= 2;
    }
    return HadamardMatrix(std::move(e));
}

bool is_hadamard(const std::vector<std::vector<long>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return false;
    std::vector<std::vector<int>> e(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) return false;
        e[i].resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (m[i][j] != 1 && m[i][j] != -1) return false;
            e[i][j] = static_cast<int>(m[i][j]);
        }
    }
    return gram_ok(e);
}

NormalizedHadamard normalize(const HadamardMatrix& h) {
    const std::size_t n = h.order();
    std::vector<int> col_sig(n), row_sig(n);
    std::vector<std::vector<int>> e(n, std::vector<int>(n));
    for (std::size_t j = 0; j < n; ++j) col_sig[j] = h(0, j);
    for (std::size_t i = 0; i < n; ++i) {
        row_sig[i] = h(i, 0) * col_sig[0];
        for (std::size_t j = 0; j < n; ++j) e[i][j] = h(i, j) * col_sig[j] * row_sig[i];
    }
    return NormalizedHadamard{HadamardMatrix(std::move(e)), std::move(col_sig), std::move(row_sig)};
}

namespace {

// Order-12 entry of the catalog; '+' is +1, '-' is -1.
constexpr const char* kOrder12[12] = {
    "++++++++++++",
    "+-+-+++---+-",
    "+--+-+++---+",
    "++--+-+++---",
    "+-+--+-+++--",
    "+--+--+-+++-",
    "+---+--+-+++",
    "++---+--+-++",
    "+++---+--+-+",
    "++++---+--+-",
    "+-+++---+--+",
    "++-+++---+--",
};

}  // namespace

HadamardMatrix catalog(std::size_t order) {
    if (order == 12) {
        std::vector<std::vector<int>> e(12, std::vector<int>(12));
        for (std::size_t i = 0; i < 12; ++i)
            for (std::size_t j = 0; j < 12; ++j) e[i][j] = kOrder12[i][j] == '+' ? 1 : -1;
        return HadamardMatrix(std::move(e));
    }
    if (order == 24) return doubled(catalog(12));
    // powers of two fall through to the Sylvester family
    if (order >= 1 && (order & (order - 1)) == 0) {
        unsigned k = 0;
        while ((std::size_t{1} << k) < order) ++k;
        return sylvester(k);
    }
    throw domain_error("catalog: no Hadamard of order " + std::to_string(order) + " available");
}

HadamardMatrix doubled(const HadamardMatrix& h) {
    const std::size_t n = h.order();
    std::vector<std::vector<int>> e(2 * n, std::vector<int>(2 * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            e[i][j] = h(i, j);
            e[i][j + n] = h(i, j);
            e[i + n][j] = h(i, j);
            e[i + n][j + n] = -h(i, j);
        }
    return HadamardMatrix(std::move(e));
}

}  // namespace hdg
