#include "hdg/quadratic.hpp"

#include <cmath>

#include "hdg/errors.hpp"

namespace hdg {

namespace {

bool odd(const Int& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

bool squarefree(const Int& d) {
    Int n = d;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

bool perfect_square(const Int& n) {
    if (n < 0) return false;
    Int r = sqrt(n);
    return r * r == n;
}

// Sign of x + y*sqrt(d) for nonsquare d > 0.
int sign_of_surd(const Int& x, const Int& y, const Int& d) {
    int sx = sgn(x), sy = sgn(y);
    if (sx >= 0 && sy >= 0) return (sx == 0 && sy == 0) ? 0 : 1;
    if (sx <= 0 && sy <= 0) return -1;
    // opposite signs: compare x^2 against y^2 d
    Int diff = x * x - y * y * d;
    return sx > 0 ? sgn(diff) : -sgn(diff);
}

}  // namespace

std::string to_string(ParityClass c) {
    switch (c) {
        case ParityClass::OddEven: return "[o,e]";
        case ParityClass::EvenOdd: return "[e,o]";
        case ParityClass::OddOdd: return "[o,o]";
    }
    return "?";
}

ParityClass parse_parity_class(const std::string& s) {
    if (s == "oe" || s == "[o,e]") return ParityClass::OddEven;
    if (s == "eo" || s == "[e,o]") return ParityClass::EvenOdd;
    if (s == "oo" || s == "[o,o]") return ParityClass::OddOdd;
    throw domain_error("unknown parity class: '" + s + "' (want oe, eo, or oo)");
}

QuadraticIrrational::QuadraticIrrational(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (c_ == 0) throw domain_error("QuadraticIrrational: zero denominator");
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    if (b_ == 0) {
        d_ = 1;  // rational; keep canonical
        return;
    }
    if (d_ <= 1) throw domain_error("QuadraticIrrational: d must be > 1");
    if (perfect_square(d_)) throw domain_error("QuadraticIrrational: d is a perfect square");
    if (!squarefree(d_)) throw domain_error("QuadraticIrrational: d not squarefree");
}

double QuadraticIrrational::value() const {
    return (a_.get_d() + b_.get_d() * std::sqrt(d_.get_d())) / c_.get_d();
}

int QuadraticIrrational::compare_to_fraction(const Int& u, const Int& v) const {
    if (v <= 0) throw domain_error("compare_to_fraction: v must be positive");
    // (a + b sqrt d)/c - u/v  ~  sign of (a v - u c) + b v sqrt(d), c > 0
    return sign_of_surd(a_ * v - u * c_, b_ * v, d_);
}

bool QuadraticIrrational::approximant_within_inverse_square(const Int& u, const Int& v) const {
    if (v <= 0) throw domain_error("approximant check: v must be positive");
    // |v^2 w - u v| < 1  <=>  -c < (a v^2 - u v c) + b v^2 sqrt(d) < c
    Int x = a_ * v * v - u * v * c_;
    Int y = b_ * v * v;
    return sign_of_surd(x - c_, y, d_) < 0 && sign_of_surd(x + c_, y, d_) > 0;
}

QuadraticIrrational QuadraticIrrational::scaled(const Rat& factor) const {
    Int num = factor.get_num(), den = factor.get_den();
    if (num == 0) throw domain_error("QuadraticIrrational::scaled: zero factor");
    return QuadraticIrrational(a_ * num, b_ * num, c_ * den, d_);
}

std::string QuadraticIrrational::str() const {
    return "(" + a_.get_str() + " + " + b_.get_str() + "*sqrt(" + d_.get_str() + "))/" +
           c_.get_str();
}

namespace {

// State for the periodic continued-fraction recurrence of (P + sqrt(N))/Q.
struct SurdCF {
    Int p, q, n, sqrt_n;

    explicit SurdCF(const QuadraticIrrational& w) {
        Int a = w.a(), b = w.b(), c = w.c();
        if (b == 0) throw domain_error("continued_fraction: value is rational");
        if (b < 0) {
            a = -a;
            b = -b;
            c = -c;  // sqrt coefficient positive; q may now be negative
        }
        p = a;
        q = c;
        n = b * b * w.d();
        if ((n - p * p) % q != 0) {
            // classic normalization so that q | n - p^2
            p *= abs(q);
            n *= q * q;
            q *= abs(q);
        }
        sqrt_n = sqrt(n);
    }

    Int next_term() {
        // term = floor((p + sqrt(n)) / q); sqrt(n) is irrational here, so
        // for q < 0 the floor sits one below the integer-part quotient
        Int num = p + sqrt_n;
        Int term;
        if (q > 0) {
            mpz_fdiv_q(term.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
        } else {
            Int mq = -q;
            mpz_fdiv_q(term.get_mpz_t(), num.get_mpz_t(), mq.get_mpz_t());
            term = -term - 1;
        }
        p = term * q - p;
        q = (n - p * p) / q;
        return term;
    }
};

}  // namespace

std::vector<Int> continued_fraction(const QuadraticIrrational& w, std::size_t count) {
    SurdCF cf(w);
    std::vector<Int> terms;
    terms.reserve(count);
    for (std::size_t i = 0; i < count; ++i) terms.push_back(cf.next_term());
    return terms;
}

namespace {

bool in_class(const Int& u, const Int& v, ParityClass cls) {
    switch (cls) {
        case ParityClass::OddEven: return odd(u) && !odd(v);
        case ParityClass::EvenOdd: return !odd(u) && odd(v);
        case ParityClass::OddOdd: return odd(u) && odd(v);
    }
    return false;
}

}  // namespace

std::vector<Approximant> pgst_approximants(const QuadraticIrrational& w, ParityClass cls,
                                           std::size_t count) {
    if (w.is_rational()) throw domain_error("pgst_approximants: weight is rational");
    constexpr std::size_t kMaxTerms = 20000;

    SurdCF cf(w);
    std::vector<Approximant> found;
    Int h_prev = 1, k_prev = 0;  // convergent h_{-1}/k_{-1}
    Int h_cur = 0, k_cur = 0;
    Int last_v = 0;
    bool first = true;

    for (std::size_t i = 0; i < kMaxTerms && found.size() < count; ++i) {
        Int term = cf.next_term();
        if (first) {
            h_cur = term;
            k_cur = 1;
            first = false;
            if (k_cur > last_v && in_class(h_cur, k_cur, cls) &&
                w.approximant_within_inverse_square(h_cur, k_cur)) {
                found.push_back({h_cur, k_cur});
                last_v = k_cur;
            }
            continue;
        }
        // semiconvergents (h_prev + t*h_cur)/(k_prev + t*k_cur), t = 1..term,
        // with t = term giving the next convergent
        for (Int t = 1; t <= term && found.size() < count; ++t) {
            Int u = h_prev + t * h_cur;
            Int v = k_prev + t * k_cur;
            if (v <= last_v) continue;
            if (!in_class(u, v, cls)) continue;
            if (gcd(u, v) != 1) continue;
            if (!w.approximant_within_inverse_square(u, v)) continue;
            found.push_back({u, v});
            last_v = v;
        }
        Int h_next = term * h_cur + h_prev;
        Int k_next = term * k_cur + k_prev;
        h_prev = h_cur;
        k_prev = k_cur;
        h_cur = h_next;
        k_cur = k_next;
    }

    if (found.size() < count)
        throw horizon_error("pgst_approximants: scan horizon exhausted after " +
                                std::to_string(kMaxTerms) + " terms",
                            std::move(found));
    return found;
}

}  // namespace hdg
