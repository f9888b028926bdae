#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hdg/graph.hpp"
#include "hdg/pst.hpp"

namespace hdg {

// Connection set of a Cayley graph over Z_2^d: a set of distinct nonzero
// bitvectors, stored as integers with bit i-1 = coordinate e_i.
class ConnectionSet {
public:
    ConnectionSet(unsigned d, std::vector<std::uint32_t> elements);

    unsigned dimension() const { return d_; }
    const std::vector<std::uint32_t>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    bool operator==(const ConnectionSet& other) const = default;

private:
    unsigned d_;
    std::vector<std::uint32_t> elements_;  // sorted ascending
};

// Graph on 2^d vertices in binary-value order; x ~ y iff x XOR y is in C.
WeightedGraph build(const ConnectionSet& c);

// XOR of all elements.
std::uint32_t sigma(const ConnectionSet& c);

// sigma != 0: PST (j, j XOR sigma) for every j at pi/2.
// sigma == 0: periodic with period pi/2.
PstReport pst_by_sigma(const ConnectionSet& c);

// gcd of Hamming weights of the nonzero codewords in the row space of the
// d x |C| matrix whose columns are C's elements. Requires sigma(C) == 0;
// any PST then happens at pi/(2D).
Int code_weight_gcd(const ConnectionSet& c);

struct Decomposition {
    ConnectionSet set;
    bool loop_adjusted;  // true when the input had an all-ones diagonal
};

// Recovers the connection set of a symmetric 0/1 matrix of order 2^k that
// the order-2^k Sylvester Hadamard diagonalizes, by recursive block
// splitting. An all-ones diagonal decomposes A - I with the loop flag set.
Decomposition decompose_standard(const RatMatrix& a);

// True iff the elements span Z_2^d (Gaussian elimination over GF(2));
// equivalent to connectivity of build(c).
bool spans_space(const ConnectionSet& c);

// True iff every element has odd Hamming weight; equivalent to
// bipartiteness of build(c).
bool all_odd_weight(const ConnectionSet& c);

using SetPredicate = std::function<bool(const ConnectionSet&)>;

// All connection sets of dimension d satisfying the predicate, in subset-
// mask order. Exhaustive over 2^(2^d - 1) subsets; d <= 5 only.
std::vector<ConnectionSet> enumerate(unsigned d, const SetPredicate& predicate,
                                     unsigned threads = 1);

// Connected, non-bipartite, deg-regular graph on 2^k vertices with PST at
// pi/2, grown from the core {e_1..e_k, e_1+e_2}. Needs k >= 3 and
// k+1 <= deg <= 2^k - 2.
WeightedGraph regular_pst_family(unsigned k, std::size_t deg);

}  // namespace hdg
