// SPDX-License-Identifier: Apache-2.0

#include "helix/zmod11.hpp"

#include <algorithm>
#include <utility>

namespace helix {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::BadArgument: return "BadArgument";
    case ErrorCode::NotInAlphabet: return "NotInAlphabet";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::GuardViolated: return "GuardViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Z11 Z11::inverse() const {
    if (value_ == 0)
        fail(ErrorCode::DivisionByZero, "inverse of zero in Z11");
    // Fermat: a^(p-2) = a^-1
    return pow(modulus - 2);
}

Z11 Z11::pow(unsigned long long e) const noexcept {
    Z11 result(1);
    Z11 base = *this;
    while (e != 0) {
        if (e & 1U)
            result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

Z11 Z11::from_digit(char c) {
    if (c >= '0' && c <= '9')
        return Z11(c - '0');
    if (c == 'X' || c == 'x')
        return Z11(10);
    fail(ErrorCode::ParseError, std::string("invalid Z11 digit '") + c + "'");
}

Z11 field_op(Z11 a, Z11 b, FieldOp kind) {
    switch (kind) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::InvOfA: return a.inverse();
    case FieldOp::Pow: return a.pow(static_cast<unsigned long long>(b.value()));
    }
    fail(ErrorCode::BadArgument, "unknown field operation");
}

int multiplicative_order(Z11 a) {
    if (a.is_zero())
        fail(ErrorCode::DivisionByZero, "multiplicative order of zero");
    Z11 x = a;
    int t = 1;
    while (x != Z11(1)) {
        x *= a;
        ++t;
    }
    return t;
}

// --- Word -----------------------------------------------------------------

Word::Word(std::initializer_list<int> values) {
    symbols_.reserve(values.size());
    for (int v : values)
        symbols_.emplace_back(v);
}

Word Word::parse(std::string_view digits) {
    std::vector<Z11> out;
    out.reserve(digits.size());
    for (char c : digits)
        out.push_back(Z11::from_digit(c));
    return Word(std::move(out));
}

std::string Word::str() const {
    std::string s;
    s.reserve(symbols_.size());
    for (Z11 z : symbols_)
        s.push_back(z.digit());
    return s;
}

std::size_t Word::weight() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(symbols_.begin(), symbols_.end(), [](Z11 z) { return !z.is_zero(); }));
}

static void require_same_length(const Word& a, const Word& b) {
    if (a.size() != b.size())
        fail(ErrorCode::ShapeError, "word length mismatch: " + std::to_string(a.size()) + " vs " +
                                        std::to_string(b.size()));
}

Word operator+(const Word& a, const Word& b) {
    require_same_length(a, b);
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

Word operator-(const Word& a, const Word& b) {
    require_same_length(a, b);
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

Word operator*(Z11 s, const Word& w) {
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[i] = s * w[i];
    return out;
}

std::size_t hamming_distance(const Word& a, const Word& b) {
    require_same_length(a, b);
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += a[i] != b[i] ? 1 : 0;
    return d;
}

// --- Matrix ---------------------------------------------------------------

Matrix::Matrix(std::initializer_list<std::initializer_list<int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            fail(ErrorCode::ShapeError, "ragged matrix initializer");
        for (int v : r)
            data_.emplace_back(v);
    }
}

Word Matrix::row(std::size_t r) const {
    auto s = row_span(r);
    return Word(std::vector<Z11>(s.begin(), s.end()));
}

Word Matrix::column(std::size_t c) const {
    Word out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Z11 z) { return z.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        fail(ErrorCode::ShapeError, "matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            Z11 s = a(i, k);
            if (s.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += s * b(k, j);
        }
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        Z11 inv = m(r, c).inverse();
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            Z11 f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t Matrix::rank() const {
    Matrix copy = *this;
    return rref(copy).size();
}

Word encode(const Word& msg, const Matrix& generator) {
    if (msg.size() != generator.rows())
        fail(ErrorCode::ShapeError, "message length " + std::to_string(msg.size()) +
                                        " does not match generator rows " + std::to_string(generator.rows()));
    Word out(generator.cols());
    for (std::size_t i = 0; i < msg.size(); ++i) {
        Z11 s = msg[i];
        if (s.is_zero())
            continue;
        auto row = generator.row_span(i);
        for (std::size_t j = 0; j < row.size(); ++j)
            out[j] += s * row[j];
    }
    return out;
}

Matrix null_space(const Matrix& m) {
    Matrix reduced = m;
    auto pivots = rref(reduced);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;

    Matrix basis(m.cols() - pivots.size(), m.cols());
    std::size_t row = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        basis(row, free) = Z11(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis(row, pivots[i]) = -reduced(i, free);
        ++row;
    }
    return basis;
}

Word apply(const Matrix& m, const Word& w) {
    if (w.size() != m.cols())
        fail(ErrorCode::ShapeError, "word length " + std::to_string(w.size()) + " does not match matrix columns " +
                                        std::to_string(m.cols()));
    Word out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Z11 acc;
        auto row = m.row_span(r);
        for (std::size_t c = 0; c < row.size(); ++c)
            acc += row[c] * w[c];
        out[r] = acc;
    }
    return out;
}

// --- Poly -----------------------------------------------------------------

Poly::Poly(std::vector<Z11> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<int> coefficients) {
    for (int c : coefficients)
        coeffs_.emplace_back(c);
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Poly poly_mul(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero())
        return {};
    auto a = p.coefficients();
    auto b = q.coefficients();
    std::vector<Z11> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return Poly(std::move(out));
}

Z11 poly_eval(const Poly& p, Z11 x) {
    Z11 acc;
    auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

} // namespace helix
