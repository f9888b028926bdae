#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hdg/errors.hpp"

namespace hdg {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat ratio(long p, long q) {
    if (q == 0) throw domain_error("ratio: zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Dense matrix over exact rationals. Sized for the small orders this
// library works with (n <= 64); everything is by-value and exact.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    RatMatrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw domain_error("RatMatrix: ragged initializer");
            for (long v : row) data_.emplace_back(v);
        }
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const RatMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const RatMatrix& other) const { return !(*this == other); }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RatMatrix operator+(const RatMatrix& other) const {
        check_same_shape(other, "+");
        RatMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + other.data_[i];
        return r;
    }

    RatMatrix operator-(const RatMatrix& other) const {
        check_same_shape(other, "-");
        RatMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - other.data_[i];
        return r;
    }

    RatMatrix operator*(const RatMatrix& other) const {
        if (cols_ != other.rows_) throw domain_error("RatMatrix: shape mismatch in *");
        RatMatrix r(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < other.cols_; ++j)
                    r(i, j) += a * other(k, j);
            }
        return r;
    }

    RatMatrix scaled(const Rat& c) const {
        RatMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
        return r;
    }

    RatMatrix kron(const RatMatrix& other) const {
        RatMatrix r(rows_ * other.rows_, cols_ * other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const Rat& a = (*this)(i, j);
                if (a == 0) continue;
                for (std::size_t p = 0; p < other.rows_; ++p)
                    for (std::size_t q = 0; q < other.cols_; ++q)
                        r(i * other.rows_ + p, j * other.cols_ + q) = a * other(p, q);
            }
        return r;
    }

    Rat row_sum(std::size_t i) const {
        Rat s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
        return s;
    }

    Rat abs_row_sum(std::size_t i) const {
        Rat s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += abs((*this)(i, j));
        return s;
    }

    Rat max_abs_row_sum() const {
        Rat m = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            Rat s = abs_row_sum(i);
            if (s > m) m = s;
        }
        return m;
    }

    bool is_symmetric() const {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_diagonal() const {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && (*this)(i, j) != 0) return false;
        return true;
    }

    bool is_zero() const {
        for (const Rat& v : data_) if (v != 0) return false;
        return true;
    }

private:
    void check_same_shape(const RatMatrix& other, const char* op) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw domain_error(std::string("RatMatrix: shape mismatch in ") + op);
    }

    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Rat parse_rational(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw domain_error("not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace hdg
