#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include <gmpxx.h>

namespace paley {

// Dense matrix of arbitrary-precision integers, row major.
class BigMatrix {
public:
    BigMatrix() = default;
    BigMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static BigMatrix identity(std::size_t n);
    static BigMatrix constant(std::size_t rows, std::size_t cols, const mpz_class& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const BigMatrix& o) const = default;

    BigMatrix operator+(const BigMatrix& o) const;
    BigMatrix operator-(const BigMatrix& o) const;
    BigMatrix operator*(const BigMatrix& o) const;
    BigMatrix scaled(const mpz_class& c) const;

    // Matrix with row i and column j removed.
    BigMatrix minor_without(std::size_t i, std::size_t j) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> a_;
};

// Text format: first line "rows cols", then one space-separated row per line.
void write_matrix(std::ostream& os, const BigMatrix& m);
BigMatrix read_matrix(std::istream& is);

} // namespace paley
