// zlinalg.hpp
//
// Exact linear algebra over the integers: dense matrices with
// arbitrary-precision entries, column-style Hermite normal form,
// Smith normal form, lattice membership (A x = b over Z), and
// invariant factors of cokernels.
//
// The matrices arising here stay small (a few hundred rows), so the
// representation is dense and the pivot rule is the classic
// minimal-absolute-value choice, which keeps entry growth in check
// and is deterministic.

#pragma once

#include <kutoral/arith.hpp>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace kutoral {

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ExactMatrix identity(std::size_t n)
    {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const ExactMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    ExactMatrix operator*(const ExactMatrix& o) const
    {
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix product: dimension mismatch");
        ExactMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& v = at(i, k);
                if (v == 0)
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const
    {
        if (x.size() != cols_)
            throw std::invalid_argument("matrix apply: dimension mismatch");
        std::vector<Int> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != 0 && x[j] != 0)
                    r[i] += at(i, j) * x[j];
        return r;
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t r = 0; r < rows_; ++r)
            std::swap(at(r, i), at(r, j));
    }
    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap(at(i, c), at(j, c));
    }
    // col_j -= q * col_i
    void axpy_col(std::size_t j, std::size_t i, const Int& q)
    {
        if (q == 0)
            return;
        for (std::size_t r = 0; r < rows_; ++r)
            at(r, j) -= q * at(r, i);
    }
    // row_j -= q * row_i
    void axpy_row(std::size_t j, std::size_t i, const Int& q)
    {
        if (q == 0)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            at(j, c) -= q * at(i, c);
    }
    void negate_col(std::size_t j)
    {
        for (std::size_t r = 0; r < rows_; ++r)
            at(r, j) = -at(r, j);
    }
    void negate_row(std::size_t i)
    {
        for (std::size_t c = 0; c < cols_; ++c)
            at(i, c) = -at(i, c);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> a_;
};

inline Int floor_div(const Int& a, const Int& b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

// Column echelon form A*U = H with U unimodular.  Pivot rows are
// strictly increasing, each pivot is positive and the only nonzero
// entry of its row among pivot columns to the right; entries left of
// a pivot in its row are reduced into [0, pivot).  Columns past the
// last pivot are zero.  This is the column-style Hermite normal form,
// kept together with U so that membership queries can recover
// explicit solutions.
struct HermiteForm {
    ExactMatrix h;
    ExactMatrix u;
    std::vector<std::size_t> pivot_rows; // pivot_rows[j] = row of pivot in column j

    // Solve original_A * x = b exactly over the integers.
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const
    {
        if (b.size() != h.rows())
            throw std::invalid_argument("solve: dimension mismatch");
        std::vector<Int> residual = b;
        std::vector<Int> y(h.cols());
        for (std::size_t j = 0; j < pivot_rows.size(); ++j) {
            std::size_t pr = pivot_rows[j];
            const Int& piv = h.at(pr, j);
            if (residual[pr] % piv != 0)
                return std::nullopt;
            Int c = residual[pr] / piv;
            y[j] = c;
            if (c != 0)
                for (std::size_t r = pr; r < h.rows(); ++r)
                    residual[r] -= c * h.at(r, j);
        }
        for (const Int& v : residual)
            if (v != 0)
                return std::nullopt;
        return u.apply(y);
    }
};

inline HermiteForm hermite_form(const ExactMatrix& m)
{
    HermiteForm f{m, ExactMatrix::identity(m.cols()), {}};
    ExactMatrix& h = f.h;
    ExactMatrix& u = f.u;
    std::size_t next = 0; // next free pivot column

    for (std::size_t row = 0; row < m.rows() && next < m.cols(); ++row) {
        // gcd-reduce the active part of this row into one column
        for (;;) {
            std::size_t best = m.cols();
            for (std::size_t c = next; c < m.cols(); ++c) {
                const Int& v = h.at(row, c);
                if (v == 0)
                    continue;
                if (best == m.cols() || abs(v) < abs(h.at(row, best)))
                    best = c;
            }
            if (best == m.cols())
                break; // row is zero on active columns
            if (best != next) {
                h.swap_cols(next, best);
                u.swap_cols(next, best);
            }
            bool clean = true;
            for (std::size_t c = next + 1; c < m.cols(); ++c) {
                if (h.at(row, c) == 0)
                    continue;
                Int q = h.at(row, c) / h.at(row, next);
                h.axpy_col(c, next, q);
                u.axpy_col(c, next, q);
                if (h.at(row, c) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (h.at(row, next) == 0)
            continue; // no pivot in this row
        if (h.at(row, next) < 0) {
            h.negate_col(next);
            u.negate_col(next);
        }
        // normalize entries left of the pivot into [0, pivot)
        for (std::size_t c = 0; c < next; ++c) {
            Int q = floor_div(h.at(row, c), h.at(row, next));
            h.axpy_col(c, next, q);
            u.axpy_col(c, next, q);
        }
        f.pivot_rows.push_back(row);
        ++next;
    }
    return f;
}

inline ExactMatrix hnf(const ExactMatrix& m)
{
    return hermite_form(m).h;
}

// Some x with A x = b, or nullopt when no integer solution exists.
// Every returned solution is re-multiplied against A before being
// handed back.
inline std::optional<std::vector<Int>> solve_integer(const ExactMatrix& a,
                                                     const std::vector<Int>& b)
{
    auto x = hermite_form(a).solve(b);
    if (x && a.apply(*x) != b)
        throw std::logic_error("solve_integer: re-multiplication failed");
    return x;
}

struct SnfResult {
    std::vector<Int> diagonal; // d1 | d2 | ... , zeros trailing
    std::optional<ExactMatrix> left;  // L with L*A*R = diag
    std::optional<ExactMatrix> right; // R
};

inline SnfResult snf(const ExactMatrix& m, bool want_transforms = false)
{
    ExactMatrix d = m;
    std::optional<ExactMatrix> l, r;
    if (want_transforms) {
        l = ExactMatrix::identity(m.rows());
        r = ExactMatrix::identity(m.cols());
    }
    const std::size_t nmin = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < nmin; ++t) {
        for (;;) {
            // smallest nonzero |entry| of the trailing block
            std::size_t pi = m.rows(), pj = m.cols();
            for (std::size_t i = t; i < m.rows(); ++i)
                for (std::size_t j = t; j < m.cols(); ++j) {
                    const Int& v = d.at(i, j);
                    if (v == 0)
                        continue;
                    if (pi == m.rows() || abs(v) < abs(d.at(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m.rows())
                goto done; // trailing block is zero
            d.swap_rows(t, pi);
            if (l)
                l->swap_rows(t, pi);
            d.swap_cols(t, pj);
            if (r)
                r->swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m.rows(); ++i)
                if (d.at(i, t) != 0) {
                    Int q = d.at(i, t) / d.at(t, t);
                    d.axpy_row(i, t, q);
                    if (l)
                        l->axpy_row(i, t, q);
                    if (d.at(i, t) != 0)
                        clean = false;
                }
            for (std::size_t j = t + 1; j < m.cols(); ++j)
                if (d.at(t, j) != 0) {
                    Int q = d.at(t, j) / d.at(t, t);
                    d.axpy_col(j, t, q);
                    if (r)
                        r->axpy_col(j, t, q);
                    if (d.at(t, j) != 0)
                        clean = false;
                }
            if (!clean)
                continue;

            // enforce d_t | trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < m.cols() && divides; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.axpy_row(t, i, Int(-1)); // row_t += row_i
                        if (l)
                            l->axpy_row(t, i, Int(-1));
                        divides = false;
                    }
            if (divides)
                break;
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            if (l)
                l->negate_row(t);
        }
    }
done:
    SnfResult res;
    res.diagonal.resize(nmin);
    for (std::size_t t = 0; t < nmin; ++t)
        res.diagonal[t] = d.at(t, t);
    res.left = std::move(l);
    res.right = std::move(r);
    return res;
}

// Invariant factors of Z^ambient_rank / colspan(A): the Smith diagonal
// padded with zeros for the free rank.
inline std::vector<Int> invariant_factors(const ExactMatrix& a, std::size_t ambient_rank)
{
    if (ambient_rank != a.rows())
        throw std::invalid_argument("invariant_factors: ambient rank must equal rows");
    std::vector<Int> d = snf(a).diagonal;
    d.resize(ambient_rank, Int(0));
    // nonzero factors first, free part last
    std::stable_partition(d.begin(), d.end(), [](const Int& v) { return v != 0; });
    return d;
}

} // namespace kutoral
