#include "kaccoh/linalg/fp_matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace kaccoh {

namespace {

void require_same_field(const FpMatrix& a, const FpMatrix& b, const char* what)
{
    if (a.field() != b.field())
        throw std::invalid_argument(fmt::format("{}: modulus mismatch ({} vs {})", what, a.field().modulus(),
                                                b.field().modulus()));
}

// Below this many entries the fork/join overhead of the parallel sweep dominates.
constexpr std::size_t kParallelEntries = 1 << 18;

template <bool Parallel>
RowEchelon rref_impl(const FpMatrix& m)
{
    const auto& f = m.field();
    FpMatrix a = m;
    const auto rows = a.rows();
    const auto cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;

    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a(piv, c) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != rank)
            std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(rank).begin());

        const Residue scale = f.inv(a(rank, c));
        for (std::size_t j = c; j < cols; ++j)
            a(rank, j) = f.mul(a(rank, j), scale);

        const auto prow = a.row(rank);
        const auto pr = static_cast<std::int64_t>(rank);
        const auto nrows = static_cast<std::int64_t>(rows);
        [[maybe_unused]] const bool go_parallel = Parallel && rows * cols >= kParallelEntries;
#pragma omp parallel for schedule(static) if (go_parallel)
        for (std::int64_t r = 0; r < nrows; ++r) {
            if (r == pr)
                continue;
            const Residue factor = a(r, c);
            if (factor == 0)
                continue;
            auto target = a.row(r);
            for (std::size_t j = c; j < cols; ++j)
                if (prow[j] != 0)
                    target[j] = f.sub(target[j], f.mul(factor, prow[j]));
        }
        pivots.push_back(c);
        ++rank;
    }
    return {std::move(a), rank, std::move(pivots)};
}

} // namespace

FpMatrix::FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

FpMatrix FpMatrix::identity(PrimeField field, std::size_t n)
{
    FpMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
{
    const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    FpMatrix m(field, rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols)
            throw std::invalid_argument("ragged matrix literal");
        std::size_t c = 0;
        for (auto v : row)
            m.set(r, c++, v);
        ++r;
    }
    return m;
}

FpMatrix FpMatrix::from_rows(PrimeField field, std::size_t cols, std::span<const FpVector> rows)
{
    FpMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument(fmt::format("row {} has length {}, expected {}", r, rows[r].size(), cols));
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, rows[r][c]);
    }
    return m;
}

FpVector FpMatrix::column(std::size_t c) const
{
    FpVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

bool FpMatrix::is_zero() const noexcept { return is_zero_vector(data_); }

FpMatrix FpMatrix::transpose() const
{
    FpMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

FpVector FpMatrix::apply(std::span<const Residue> v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument(fmt::format("apply: vector length {} vs {} columns", v.size(), cols_));
    FpVector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            acc = (acc + static_cast<std::uint64_t>((*this)(r, c)) * v[c]) % field_.modulus();
        out[r] = static_cast<Residue>(acc);
    }
    return out;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b)
{
    require_same_field(a, b, "matrix product");
    if (a.cols() != b.rows())
        throw std::invalid_argument(
            fmt::format("matrix product: {}x{} times {}x{}", a.rows(), a.cols(), b.rows(), b.cols()));
    const auto& f = a.field();
    FpMatrix out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Residue aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
        }
    return out;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b)
{
    require_same_field(a, b, "matrix sum");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum: shape mismatch");
    FpMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a.field().add(a(i, j), b(i, j));
    return out;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) { return a + scaled(b, a.field().neg(1)); }

FpMatrix scaled(const FpMatrix& m, Residue s)
{
    FpMatrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (auto& x : out.row(i))
            x = m.field().mul(x, s);
    return out;
}

FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom)
{
    require_same_field(top, bottom, "vstack");
    if (top.cols() != bottom.cols())
        throw std::invalid_argument("vstack: column mismatch");
    FpMatrix out(top.field(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        std::ranges::copy(top.row(r), out.row(r).begin());
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        std::ranges::copy(bottom.row(r), out.row(top.rows() + r).begin());
    return out;
}

bool is_zero_vector(std::span<const Residue> v) noexcept
{
    return std::ranges::all_of(v, [](Residue x) { return x == 0; });
}

std::string to_string(const FpMatrix& m)
{
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        s += '[';
        for (std::size_t c = 0; c < m.cols(); ++c)
            s += fmt::format("{}{}", c ? " " : "", m(r, c));
        s += "]\n";
    }
    return s;
}

RowEchelon rref(const FpMatrix& m) { return rref_impl<true>(m); }
RowEchelon rref_serial(const FpMatrix& m) { return rref_impl<false>(m); }

std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

std::optional<FpVector> solve(const FpMatrix& a, std::span<const Residue> b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    FpMatrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::ranges::copy(a.row(r), aug.row(r).begin());
        aug(r, a.cols()) = a.field().reduce(b[r]);
    }
    const auto ech = rref(aug);
    if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == a.cols())
        return std::nullopt;
    FpVector x(a.cols(), 0);
    for (std::size_t i = 0; i < ech.rank; ++i)
        x[ech.pivot_cols[i]] = ech.reduced(i, a.cols());
    return x;
}

} // namespace kaccoh
