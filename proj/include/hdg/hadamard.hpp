#pragma once

#include <cstddef>
#include <vector>

#include "hdg/rational.hpp"

namespace hdg {

// n x n matrix with entries +1/-1 satisfying H H^T = nI. Immutable after
// construction; the constructor verifies the defining identity exactly.
class HadamardMatrix {
public:
    // Verifies entries and orthogonality; throws domain_error otherwise.
    explicit HadamardMatrix(std::vector<std::vector<int>> entries);

    std::size_t order() const { return n_; }
    int operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const std::vector<std::vector<int>>& entries() const { return entries_; }

    bool operator==(const HadamardMatrix& other) const { return entries_ == other.entries_; }
    bool operator!=(const HadamardMatrix& other) const { return !(*this == other); }

    RatMatrix as_rational() const;

    // True when the first row and first column are all +1.
    bool is_normalized() const;

private:
    std::size_t n_;
    std::vector<std::vector<int>> entries_;
};

struct NormalizedHadamard {
    HadamardMatrix matrix;
    std::vector<int> column_signature;  // H_orig(i,j) = matrix(i,j) * row_sig[i] * col_sig[j]
    std::vector<int> row_signature;
};

// Recursive-doubling Hadamard of order 2^k, first row and column all +1.
HadamardMatrix sylvester(unsigned k);

// True iff M is square, all entries +-1 and M M^T = nI exactly.
// Non-square input returns false.
bool is_hadamard(const std::vector<std::vector<long>>& m);

// Sign columns by the first-row entries, then rows by the resulting
// first-column entries. No permutation is applied.
NormalizedHadamard normalize(const HadamardMatrix& h);

// sylvester(k) for order 2^k, the built-in order-12 matrix, or its
// doubling at order 24. Unsupported orders throw domain_error.
HadamardMatrix catalog(std::size_t order);

// [[H, H], [H, -H]], the doubling step applied to an arbitrary Hadamard.
HadamardMatrix doubled(const HadamardMatrix& h);

}  // namespace hdg
