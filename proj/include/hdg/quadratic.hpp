#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hdg/rational.hpp"

namespace hdg {

// Parity pattern of an approximant u/v.
enum class ParityClass { OddEven, EvenOdd, OddOdd };

std::string to_string(ParityClass c);
ParityClass parse_parity_class(const std::string& s);

// (a + b*sqrt(d)) / c with integer a, b, c (c > 0) and squarefree d > 1.
// Exact continued fractions need no floating point at all.
class QuadraticIrrational {
public:
    QuadraticIrrational(Int a, Int b, Int c, Int d);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    double value() const;

    // Exact sign of (value - u/v); requires v > 0.
    int compare_to_fraction(const Int& u, const Int& v) const;
    // Exact check |value - u/v| < 1/v^2, by integer cross-multiplication.
    bool approximant_within_inverse_square(const Int& u, const Int& v) const;

    QuadraticIrrational scaled(const Rat& factor) const;

    std::string str() const;

private:
    Int a_, b_, c_, d_;
};

struct Approximant {
    Int u;
    Int v;
};

// Raised when the continued-fraction scan hits its depth limit before
// `count` approximants were found; carries the partial results.
class horizon_error : public std::runtime_error {
public:
    horizon_error(std::string msg, std::vector<Approximant> found)
        : std::runtime_error(std::move(msg)), partial(std::move(found)) {}
    std::vector<Approximant> partial;
};

// Continued-fraction terms of w (periodic for quadratic irrationals);
// first `count` terms.
std::vector<Int> continued_fraction(const QuadraticIrrational& w, std::size_t count);

// `count` coprime pairs (u, v) in the parity class with |w - u/v| < 1/v^2
// and v strictly increasing, scanned over convergents and semiconvergents.
std::vector<Approximant> pgst_approximants(const QuadraticIrrational& w, ParityClass cls,
                                           std::size_t count);

}  // namespace hdg
