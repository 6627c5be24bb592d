#pragma once
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <type_traits>
#include <vector>

#include "wb/field.hpp"

namespace wb {

// Sparse interchange format; no zero entries stored.  All eliminations run on
// a dense working copy: the per-degree blocks this system produces fill in
// quickly, so sparse pivoting buys nothing at desk scale.
template <class F>
struct ScalarMatrix {
    using Elem = typename F::Elem;
    struct Entry {
        int r, c;
        Elem v;
    };
    int rows = 0, cols = 0;
    std::vector<Entry> entries;

    ScalarMatrix() = default;
    ScalarMatrix(int r, int c) : rows(r), cols(c) {}

    void add(const F& fld, int r, int c, const Elem& v) {
        if (fld.is_zero(v)) return;
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw certificate_error("matrix-index-out-of-range");
        entries.push_back(Entry{r, c, v});
    }

    ScalarMatrix transposed() const {
        ScalarMatrix t(cols, rows);
        t.entries.reserve(entries.size());
        for (const auto& e : entries) t.entries.push_back(Entry{e.c, e.r, e.v});
        return t;
    }
};

enum class ColOrder { forward, reverse };

inline std::vector<int> scan_order(int cols, ColOrder order) {
    std::vector<int> o(cols);
    std::iota(o.begin(), o.end(), 0);
    if (order == ColOrder::reverse) std::reverse(o.begin(), o.end());
    return o;
}

template <class F>
struct RrefResult {
    using Elem = typename F::Elem;
    int rank = 0;
    std::vector<int> pivot_cols;  // in scan order
    std::vector<int> free_cols;   // in scan order
    // Reduced pivot rows (rank x cols), kept only when requested.
    std::vector<std::vector<Elem>> rows;
    // Kernel basis, kernel[t] has a 1 at free_cols[t]; coordinates of any
    // kernel vector w in this basis are w restricted to the free columns.
    std::vector<std::vector<Elem>> kernel;
};

namespace detail {

// Lazily reduced elimination over F_p: rows held as uint64, each update adds
// < 2^30, entries stay < 2^63 for any matrix this project can produce.
inline void rref_fp(const FpField& fld, int rows, int cols,
                    std::vector<std::uint64_t>& w, const std::vector<int>& order,
                    std::vector<int>& pivot_cols, std::vector<int>& pivot_rows_of) {
    const std::uint64_t p = fld.p();
    int r = 0;
    for (int c : order) {
        if (r >= rows) break;
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (w[std::size_t(i) * cols + c] % p != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols; ++j)
                std::swap(w[std::size_t(pr) * cols + j], w[std::size_t(r) * cols + j]);
        std::uint64_t* rowr = &w[std::size_t(r) * cols];
        for (int j = 0; j < cols; ++j) rowr[j] %= p;
        std::uint64_t pivinv = fld.inv(static_cast<std::uint32_t>(rowr[c]));
        for (int j = 0; j < cols; ++j) rowr[j] = rowr[j] * pivinv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::uint64_t* rowi = &w[std::size_t(i) * cols + 0];
            std::uint64_t f = rowi[c] % p;
            if (f == 0) continue;
            std::uint64_t g = p - f;
            for (int j = 0; j < cols; ++j) rowi[j] += g * rowr[j];
        }
        pivot_cols.push_back(c);
        pivot_rows_of.push_back(r);
        ++r;
    }
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) w[std::size_t(i) * cols + j] %= p;
}

template <class F>
void rref_generic(const F& fld, int rows, int cols,
                  std::vector<typename F::Elem>& w, const std::vector<int>& order,
                  std::vector<int>& pivot_cols) {
    int r = 0;
    for (int c : order) {
        if (r >= rows) break;
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!fld.is_zero(w[std::size_t(i) * cols + c])) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols; ++j)
                std::swap(w[std::size_t(pr) * cols + j], w[std::size_t(r) * cols + j]);
        auto* rowr = &w[std::size_t(r) * cols];
        auto pivinv = fld.inv(rowr[c]);
        for (int j = 0; j < cols; ++j) rowr[j] = fld.mul(rowr[j], pivinv);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            auto* rowi = &w[std::size_t(i) * cols];
            if (fld.is_zero(rowi[c])) continue;
            auto f = rowi[c];
            for (int j = 0; j < cols; ++j)
                rowi[j] = fld.sub(rowi[j], fld.mul(f, rowr[j]));
        }
        pivot_cols.push_back(c);
        ++r;
    }
}

}  // namespace detail

template <class F>
RrefResult<F> rref(const F& fld, const ScalarMatrix<F>& M,
                   ColOrder order = ColOrder::forward, bool want_kernel = true,
                   bool want_rows = false) {
    using Elem = typename F::Elem;
    RrefResult<F> out;
    const int rows = M.rows, cols = M.cols;
    auto ord = scan_order(cols, order);

    std::vector<Elem> reduced;  // rank rows x cols after elimination
    if constexpr (std::is_same_v<F, FpField>) {
        std::vector<std::uint64_t> w(std::size_t(rows) * cols, 0);
        for (const auto& e : M.entries)
            w[std::size_t(e.r) * cols + e.c] =
                (w[std::size_t(e.r) * cols + e.c] + e.v) % fld.p();
        std::vector<int> prows;
        detail::rref_fp(fld, rows, cols, w, ord, out.pivot_cols, prows);
        out.rank = static_cast<int>(out.pivot_cols.size());
        reduced.resize(std::size_t(out.rank) * cols);
        for (int k = 0; k < out.rank; ++k)
            for (int j = 0; j < cols; ++j)
                reduced[std::size_t(k) * cols + j] =
                    static_cast<Elem>(w[std::size_t(k) * cols + j]);
    } else {
        std::vector<Elem> w(std::size_t(rows) * cols, fld.zero());
        for (const auto& e : M.entries)
            w[std::size_t(e.r) * cols + e.c] =
                fld.add(w[std::size_t(e.r) * cols + e.c], e.v);
        detail::rref_generic(fld, rows, cols, w, ord, out.pivot_cols);
        out.rank = static_cast<int>(out.pivot_cols.size());
        reduced.assign(w.begin(), w.begin() + std::size_t(out.rank) * cols);
    }

    std::vector<char> is_pivot(cols, 0);
    for (int c : out.pivot_cols) is_pivot[c] = 1;
    for (int c : ord)
        if (!is_pivot[c]) out.free_cols.push_back(c);

    if (want_kernel) {
        out.kernel.reserve(out.free_cols.size());
        for (int fc : out.free_cols) {
            std::vector<Elem> x(cols, fld.zero());
            x[fc] = fld.one();
            for (int k = 0; k < out.rank; ++k)
                x[out.pivot_cols[k]] = fld.neg(reduced[std::size_t(k) * cols + fc]);
            out.kernel.push_back(std::move(x));
        }
    }
    if (want_rows) {
        out.rows.resize(out.rank);
        for (int k = 0; k < out.rank; ++k)
            out.rows[k].assign(reduced.begin() + std::size_t(k) * cols,
                               reduced.begin() + std::size_t(k + 1) * cols);
    }
    return out;
}

template <class F>
int rank_of(const F& fld, const ScalarMatrix<F>& M) {
    return rref(fld, M, ColOrder::forward, false, false).rank;
}

// Factorization [M | I] -> [R | E] reused for many right-hand sides.
// solve(b): x with Mx = b, free variables zero; nullopt when inconsistent.
template <class F>
class PreparedSolver {
public:
    using Elem = typename F::Elem;

    PreparedSolver(const F& fld, const ScalarMatrix<F>& M,
                   ColOrder order = ColOrder::forward)
        : fld_(&fld), rows_(M.rows), cols_(M.cols) {
        ScalarMatrix<F> aug(M.rows, M.cols + M.rows);
        aug.entries.reserve(M.entries.size() + M.rows);
        for (const auto& e : M.entries) aug.entries.push_back({e.r, e.c, e.v});
        for (int i = 0; i < M.rows; ++i)
            aug.entries.push_back({i, M.cols + i, fld.one()});
        // restrict pivoting to the M-columns
        auto ord = scan_order(M.cols, order);
        RrefResult<F> rr;
        {
            using detail::rref_generic;
            std::vector<Elem> w(std::size_t(aug.rows) * aug.cols, fld.zero());
            if constexpr (std::is_same_v<F, FpField>) {
                std::vector<std::uint64_t> wf(std::size_t(aug.rows) * aug.cols, 0);
                for (const auto& e : aug.entries)
                    wf[std::size_t(e.r) * aug.cols + e.c] =
                        (wf[std::size_t(e.r) * aug.cols + e.c] + e.v) % fld.p();
                std::vector<int> prows;
                detail::rref_fp(fld, aug.rows, aug.cols, wf, ord, rr.pivot_cols, prows);
                for (std::size_t i = 0; i < w.size(); ++i)
                    w[i] = static_cast<Elem>(wf[i]);
            } else {
                for (const auto& e : aug.entries)
                    w[std::size_t(e.r) * aug.cols + e.c] =
                        fld.add(w[std::size_t(e.r) * aug.cols + e.c], e.v);
                rref_generic(fld, aug.rows, aug.cols, w, ord, rr.pivot_cols);
            }
            rank_ = static_cast<int>(rr.pivot_cols.size());
            pivot_cols_ = rr.pivot_cols;
            E_.assign(std::size_t(rows_) * rows_, fld.zero());
            for (int i = 0; i < rows_; ++i)
                for (int j = 0; j < rows_; ++j)
                    E_[std::size_t(i) * rows_ + j] =
                        w[std::size_t(i) * aug.cols + M.cols + j];
        }
    }

    int rank() const { return rank_; }

    std::optional<std::vector<Elem>> solve(const std::vector<Elem>& b) const {
        const F& fld = *fld_;
        std::vector<Elem> y(rows_, fld.zero());
        for (int i = 0; i < rows_; ++i) {
            Elem acc = fld.zero();
            const Elem* Er = &E_[std::size_t(i) * rows_];
            for (int j = 0; j < rows_; ++j)
                if (!fld.is_zero(b[j])) acc = fld.add(acc, fld.mul(Er[j], b[j]));
            y[i] = acc;
        }
        for (int i = rank_; i < rows_; ++i)
            if (!fld.is_zero(y[i])) return std::nullopt;
        std::vector<Elem> x(cols_, fld.zero());
        for (int k = 0; k < rank_; ++k) x[pivot_cols_[k]] = y[k];
        return x;
    }

private:
    const F* fld_;
    int rows_, cols_, rank_ = 0;
    std::vector<int> pivot_cols_;
    std::vector<Elem> E_;
};

// solve(M, b): one-shot deterministic solve, free variables zero.
// Distinguishes dimension mismatch (error) from inconsistency (nullopt).
template <class F>
std::optional<std::vector<typename F::Elem>> solve(
    const F& fld, const ScalarMatrix<F>& M,
    const std::vector<typename F::Elem>& b, ColOrder order = ColOrder::forward) {
    if (static_cast<int>(b.size()) != M.rows)
        throw precondition_error("dimension-mismatch");
    PreparedSolver<F> ps(fld, M, order);
    return ps.solve(b);
}

// Column-by-column rank accumulator; pivots are reduced against earlier
// pivots only, which keeps add() linear in the stored pivot count.
template <class F>
class IncrementalRank {
public:
    using Elem = typename F::Elem;

    explicit IncrementalRank(const F& fld, int dim) : fld_(&fld), dim_(dim) {}

    int rank() const { return static_cast<int>(pivots_.size()); }

    // Returns true when the column enlarges the span.
    bool add(std::vector<Elem> col) {
        const F& fld = *fld_;
        if (static_cast<int>(col.size()) != dim_)
            throw certificate_error("incremental-rank-dimension");
        if constexpr (std::is_same_v<F, FpField>) {
            const std::uint64_t p = fld.p();
            std::vector<std::uint64_t> w(col.begin(), col.end());
            for (const auto& pv : pivots_) {
                std::uint64_t f = w[pv.first] % p;
                if (f == 0) continue;
                std::uint64_t g = p - f;
                const auto& v = pv.second;
                for (int j = 0; j < dim_; ++j) w[j] += g * v[j];
                // keep magnitudes bounded across many pivots
                if (w[pv.first] > (std::uint64_t(1) << 52))
                    for (int j = 0; j < dim_; ++j) w[j] %= p;
            }
            int prow = -1;
            for (int j = 0; j < dim_; ++j) {
                w[j] %= p;
                if (prow < 0 && w[j] != 0) prow = j;
            }
            if (prow < 0) return false;
            std::uint64_t inv = fld.inv(static_cast<std::uint32_t>(w[prow]));
            std::vector<Elem> v(dim_);
            for (int j = 0; j < dim_; ++j)
                v[j] = static_cast<Elem>(w[j] * inv % p);
            pivots_.emplace_back(prow, std::move(v));
            return true;
        } else {
            for (const auto& pv : pivots_) {
                if (fld.is_zero(col[pv.first])) continue;
                Elem f = col[pv.first];
                const auto& v = pv.second;
                for (int j = 0; j < dim_; ++j)
                    col[j] = fld.sub(col[j], fld.mul(f, v[j]));
            }
            int prow = -1;
            for (int j = 0; j < dim_; ++j)
                if (!fld.is_zero(col[j])) {
                    prow = j;
                    break;
                }
            if (prow < 0) return false;
            Elem inv = fld.inv(col[prow]);
            for (int j = 0; j < dim_; ++j) col[j] = fld.mul(col[j], inv);
            pivots_.emplace_back(prow, std::move(col));
            return true;
        }
    }

private:
    const F* fld_;
    int dim_;
    std::vector<std::pair<int, std::vector<Elem>>> pivots_;
};

}  // namespace wb
