#include "paley/big_matrix.hpp"

#include <istream>
#include <ostream>

#include "paley/errors.hpp"

namespace paley {

BigMatrix BigMatrix::identity(std::size_t n) {
    BigMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

BigMatrix BigMatrix::constant(std::size_t rows, std::size_t cols, const mpz_class& v) {
    BigMatrix m(rows, cols);
    for (auto& x : m.a_) x = v;
    return m;
}

BigMatrix BigMatrix::operator+(const BigMatrix& o) const {
    BigMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

BigMatrix BigMatrix::operator-(const BigMatrix& o) const {
    BigMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

BigMatrix BigMatrix::operator*(const BigMatrix& o) const {
    if (cols_ != o.rows_) throw invalid_input("matrix product: shape mismatch");
    BigMatrix out(rows_, o.cols_);
    mpz_class acc;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t kk = 0; kk < cols_; ++kk) {
            const mpz_class& v = (*this)(i, kk);
            if (v == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                acc = v * o(kk, j);
                out(i, j) += acc;
            }
        }
    }
    return out;
}

BigMatrix BigMatrix::scaled(const mpz_class& c) const {
    BigMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
    return out;
}

BigMatrix BigMatrix::minor_without(std::size_t i, std::size_t j) const {
    BigMatrix out(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, ro = 0; r < rows_; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, co = 0; c < cols_; ++c) {
            if (c == j) continue;
            out(ro, co) = (*this)(r, c);
            ++co;
        }
        ++ro;
    }
    return out;
}

void write_matrix(std::ostream& os, const BigMatrix& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j).get_str();
        }
        os << '\n';
    }
}

BigMatrix read_matrix(std::istream& is) {
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols)) throw io_error("matrix file: bad header");
    BigMatrix m(rows, cols);
    std::string tok;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (!(is >> tok)) throw io_error("matrix file: truncated");
            if (mpz_set_str(m(i, j).get_mpz_t(), tok.c_str(), 10) != 0)
                throw io_error("matrix file: bad integer '" + tok + "'");
        }
    }
    return m;
}

} // namespace paley
