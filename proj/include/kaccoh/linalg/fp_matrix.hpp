#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kaccoh/linalg/prime_field.hpp"

namespace kaccoh {

/// Dense row-major matrix over F_p.
class FpMatrix {
public:
    FpMatrix(PrimeField field, std::size_t rows, std::size_t cols);

    static FpMatrix identity(PrimeField field, std::size_t n);
    /// Entries are reduced mod p, so negative literals are fine.
    static FpMatrix from_rows(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
    /// All rows must have length `cols`.
    static FpMatrix from_rows(PrimeField field, std::size_t cols, std::span<const FpVector> rows);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Residue operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Residue& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t v) noexcept { (*this)(r, c) = field_.reduce(v); }

    std::span<const Residue> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<Residue> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    FpVector column(std::size_t c) const;

    bool is_zero() const noexcept;
    FpMatrix transpose() const;
    /// Matrix-vector product m * v.
    FpVector apply(std::span<const Residue> v) const;

    bool operator==(const FpMatrix&) const = default;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
FpMatrix scaled(const FpMatrix& m, Residue s);
/// Rows of `top` followed by rows of `bottom`.
FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom);

bool is_zero_vector(std::span<const Residue> v) noexcept;

std::string to_string(const FpMatrix& m);

/// Reduced row-echelon form with pivots taken at the first nonzero entry
/// of the smallest remaining column, smallest row first.
struct RowEchelon {
    FpMatrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

/// Row updates below/above each pivot are distributed with OpenMP once the
/// matrix is large enough to pay for it. Output equals rref_serial exactly.
RowEchelon rref(const FpMatrix& m);
RowEchelon rref_serial(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

/// Some x with a * x = b, or nullopt when the system is inconsistent.
std::optional<FpVector> solve(const FpMatrix& a, std::span<const Residue> b);

} // namespace kaccoh
