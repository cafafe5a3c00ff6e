// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "helix/error.hpp"

namespace helix {

/// Residue modulo 11, always stored canonically in [0, 10].
class Z11 {
public:
    static constexpr int modulus = 11;

    constexpr Z11() = default;
    constexpr Z11(long long v) // NOLINT(google-explicit-constructor)
        : value_(static_cast<std::uint8_t>(((v % modulus) + modulus) % modulus)) {}

    constexpr int value() const noexcept { return value_; }
    constexpr bool is_zero() const noexcept { return value_ == 0; }

    friend constexpr Z11 operator+(Z11 a, Z11 b) noexcept { return from_reduced((a.value_ + b.value_) % modulus); }
    friend constexpr Z11 operator-(Z11 a, Z11 b) noexcept { return from_reduced((a.value_ + modulus - b.value_) % modulus); }
    friend constexpr Z11 operator*(Z11 a, Z11 b) noexcept { return from_reduced((a.value_ * b.value_) % modulus); }
    constexpr Z11 operator-() const noexcept { return from_reduced((modulus - value_) % modulus); }
    constexpr Z11& operator+=(Z11 o) noexcept { return *this = *this + o; }
    constexpr Z11& operator-=(Z11 o) noexcept { return *this = *this - o; }
    constexpr Z11& operator*=(Z11 o) noexcept { return *this = *this * o; }

    friend constexpr bool operator==(Z11, Z11) = default;
    friend constexpr auto operator<=>(Z11, Z11) = default;

    /// Multiplicative inverse; throws DivisionByZero for 0.
    Z11 inverse() const;
    Z11 pow(unsigned long long e) const noexcept;

    /// Digit form used in all serialized words: '0'..'9' and 'X' for ten.
    char digit() const noexcept { return value_ == 10 ? 'X' : static_cast<char>('0' + value_); }
    static Z11 from_digit(char c);

private:
    static constexpr Z11 from_reduced(int v) noexcept {
        Z11 z;
        z.value_ = static_cast<std::uint8_t>(v);
        return z;
    }

    std::uint8_t value_ = 0;
};

enum class FieldOp { Add, Sub, Mul, InvOfA, Pow };

/// Single entry point over the scalar operations; `b` is the exponent for Pow
/// and ignored for InvOfA.
Z11 field_op(Z11 a, Z11 b, FieldOp kind);

/// Smallest t >= 1 with a^t = 1. Throws DivisionByZero for a = 0.
int multiplicative_order(Z11 a);

/// Fixed-length vector over Z11.
class Word {
public:
    Word() = default;
    explicit Word(std::size_t n) : symbols_(n) {}
    explicit Word(std::vector<Z11> symbols) : symbols_(std::move(symbols)) {}
    Word(std::initializer_list<int> values);

    /// Parses the digit-string form ("159X").
    static Word parse(std::string_view digits);
    std::string str() const;

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Z11 operator[](std::size_t i) const noexcept { return symbols_[i]; }
    Z11& operator[](std::size_t i) noexcept { return symbols_[i]; }
    std::span<const Z11> symbols() const noexcept { return symbols_; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    std::size_t weight() const noexcept;

    friend Word operator+(const Word& a, const Word& b);
    friend Word operator-(const Word& a, const Word& b);
    friend Word operator*(Z11 s, const Word& w);
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Z11> symbols_;
};

/// Hamming distance between two words over Z11.
std::size_t hamming_distance(const Word& a, const Word& b);

/// Dense row-major matrix over Z11.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Z11 operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Z11& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const Z11> row_span(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    Word row(std::size_t r) const;
    Word column(std::size_t c) const;

    Matrix transpose() const;
    bool is_zero() const noexcept;

    /// Rank via Gaussian elimination.
    std::size_t rank() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Z11> data_;
};

/// Codeword = msg * G. Throws ShapeError when msg.size() != G.rows().
Word encode(const Word& msg, const Matrix& generator);

/// Basis of {v : M v^T = 0}, one vector per row of the result.
Matrix null_space(const Matrix& m);

/// M * w^T as a word of length M.rows().
Word apply(const Matrix& m, const Word& w);

/// Polynomial over Z11, coefficient i belongs to x^i. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Z11> coefficients);
    Poly(std::initializer_list<int> coefficients);

    /// x - root
    static Poly linear_root(Z11 root) { return Poly({-root, Z11(1)}); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Z11 coefficient(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Z11(0); }
    std::span<const Z11> coefficients() const noexcept { return coeffs_; }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    std::vector<Z11> coeffs_;
};

Poly poly_mul(const Poly& p, const Poly& q);
Z11 poly_eval(const Poly& p, Z11 x);

} // namespace helix
