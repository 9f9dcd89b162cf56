#ifndef CVM_CONFLUENT_HPP
#define CVM_CONFLUENT_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "cvm/dense_matrix.hpp"
#include "cvm/errors.hpp"
#include "cvm/poly.hpp"

namespace cvm {

/// Multiply-add counter for the structured inversion. Only the two
/// quadratic phases are counted (seed coefficients and the column
/// recursion); expanding the characteristic polynomial is not.
struct InvertStats {
    std::uint64_t muladds = 0;
};

/// One recorded update of the seed recursion, kept for diagnostics when
/// Workspace::record_trace is set. `scaled` is the value the production
/// path carries (normalized by order!); `literal` has the normalization
/// multiplied back in and overflows for orders beyond 170.
struct TraceEntry {
    int block;   // block whose seeds are being computed
    int foreign; // the other block feeding this update
    int order;   // derivative order of the value, >= 1
    double scaled;
    double literal;
};

/// Reusable buffers for the structured inversion.
///
/// The recursions run in extended precision (long double) and round to
/// double only when results leave the workspace. The cancellation inside
/// the column recursion costs about three decimal digits in pure double;
/// the wider accumulator recovers them, so the emitted inverse is
/// entrywise correctly rounded for desk-scale inputs.
struct Workspace {
    /// Per block: seed coefficients of that block's inverse rows, indexed
    /// by derivative order 0..multiplicity-1.
    std::vector<std::vector<long double>> aux;
    /// Per foreign block: recursion state and running difference power.
    std::vector<long double> scratch;
    std::vector<long double> scratch_pow;
    /// Column recursion buffers.
    std::vector<long double> col_first;
    std::vector<long double> col_prev;
    std::vector<long double> col_cur;

    bool record_trace = false;
    std::vector<TraceEntry> scratch_trace;
};

namespace detail {

/// base^e by squaring, e >= 0.
template <class T>
inline T ipow(T base, long long e) {
    T acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace detail

/**
 * Builds the confluent Vandermonde matrix, O(n^2).
 *
 * Block k spans multiplicity(k) columns. Within the block, column d is the
 * d-th derivative of the power basis [1, x, ..., x^(n-1)] at lambda(k),
 * divided by d!: entry(i, d) = C(i, d) lambda^(i-d). Rows follow the
 * Pascal-style recurrence
 *
 *     entry(i, d) = lambda * entry(i-1, d) + entry(i-1, d-1),
 *
 * so no binomial or factorial table is needed.
 */
inline DenseMatrix build_matrix(const RootSpec& spec) {
    const int n = spec.n();
    DenseMatrix v(n, n);
    int col0 = 0;
    for (int k = 0; k < spec.r(); ++k) {
        const double lambda = spec.lambda(k);
        const int nk = spec.multiplicity(k);
        v(0, col0) = 1.0;
        for (int i = 1; i < n; ++i) {
            for (int d = std::min(i, nk - 1); d >= 1; --d)
                v(i, col0 + d) = lambda * v(i - 1, col0 + d) + v(i - 1, col0 + d - 1);
            v(i, col0) = lambda * v(i - 1, col0);
        }
        col0 += nk;
    }
    return v;
}

/// Determinant in closed form: product over block pairs i < j of
/// (lambda_j - lambda_i)^(n_i n_j). Equals 1 for a single block.
inline double determinant(const RootSpec& spec) {
    double det = 1.0;
    for (int j = 1; j < spec.r(); ++j)
        for (int i = 0; i < j; ++i) {
            const long long e = static_cast<long long>(spec.multiplicity(i)) *
                                static_cast<long long>(spec.multiplicity(j));
            det *= detail::ipow(spec.lambda(j) - spec.lambda(i), e);
        }
    return det;
}

/**
 * Fills ws.aux with the seed coefficients of the structured inverse.
 *
 * aux[k][m] multiplies the m-th derivative row of block k. The top-order
 * seed is the reciprocal of prod_{i != k} (lambda_k - lambda_i)^{n_i};
 * each lower order follows from one sweep over the foreign blocks i,
 * driven by a two-term recursion in the running state ws.scratch[i].
 *
 * The recursion is carried divided by order!, which keeps every
 * intermediate on the scale of the seeds themselves; the classical
 * unscaled form needs q! factors that overflow past order 170. Total
 * cost over all blocks is O(n^2).
 */
inline void compute_aux_coefficients(const RootSpec& spec, Workspace& ws,
                                     InvertStats* stats = nullptr) {
    const int r = spec.r();
    ws.aux.assign(static_cast<std::size_t>(r), {});
    ws.scratch.assign(static_cast<std::size_t>(r), 0.0);
    ws.scratch_pow.assign(static_cast<std::size_t>(r), 1.0);
    ws.scratch_trace.clear();
    std::uint64_t muladds = 0;

    for (int k = 0; k < r; ++k) {
        const int nk = spec.multiplicity(k);
        const long double lam_k = spec.lambda(k);
        std::vector<long double>& seeds = ws.aux[static_cast<std::size_t>(k)];
        seeds.assign(static_cast<std::size_t>(nk), 0.0L);

        long double denom = 1.0L;
        for (int i = 0; i < r; ++i) {
            if (i == k) continue;
            denom *= detail::ipow<long double>(lam_k - spec.lambda(i),
                                               spec.multiplicity(i));
            ++muladds;
        }
        seeds[static_cast<std::size_t>(nk - 1)] = 1.0L / denom;
        if (nk == 1) continue;

        for (int i = 0; i < r; ++i) {
            ws.scratch[static_cast<std::size_t>(i)] = 0.0L;
            ws.scratch_pow[static_cast<std::size_t>(i)] = 1.0L;
        }
        double order_factorial = 1.0; // tracked only for the trace
        for (int q = 0; q + 1 < nk; ++q) {
            order_factorial *= static_cast<double>(q + 1);
            const long double top = seeds[static_cast<std::size_t>(nk - 1 - q)];
            long double next = 0.0L; // accumulates the negated foreign sum
            for (int i = 0; i < r; ++i) {
                if (i == k) continue;
                const std::size_t fi = static_cast<std::size_t>(i);
                const long double m =
                    (ws.scratch_pow[fi] * top - q * ws.scratch[fi]) / (q + 1);
                ws.scratch[fi] = m;
                ws.scratch_pow[fi] *= lam_k - spec.lambda(i);
                next -= spec.multiplicity(i) * m / ws.scratch_pow[fi];
                muladds += 3;
                if (ws.record_trace)
                    ws.scratch_trace.push_back(
                        {k, i, q + 1, static_cast<double>(m),
                         static_cast<double>(m) * order_factorial});
            }
            seeds[static_cast<std::size_t>(nk - 2 - q)] = next;
        }
    }
    if (stats) stats->muladds += muladds;
}

/**
 * Structured inverse of the confluent Vandermonde matrix, O(n^2).
 *
 * Rows are grouped like the columns of the forward matrix: block k owns
 * multiplicity(k) consecutive rows. Within a block the columns are filled
 * right to left; the last column holds the block's seed coefficients, and
 * each step left applies the block's shifted-scale update plus a
 * characteristic-coefficient multiple of the seed column:
 *
 *     next[i] = lambda * cur[i] + cur[i+1] + a_j * seed[i]
 *
 * with a_j the coefficient of x^(n-j) in the characteristic polynomial.
 * The constant term a_n is never consumed: column 1 is produced by the
 * step using a_{n-1}.
 */
inline DenseMatrix invert(const RootSpec& spec, Workspace& ws,
                          InvertStats* stats = nullptr) {
    const int n = spec.n();
    const Poly p = expand_from_roots(spec);
    compute_aux_coefficients(spec, ws, stats);

    DenseMatrix inv(n, n);
    std::uint64_t muladds = 0;
    int row0 = 0;
    for (int k = 0; k < spec.r(); ++k) {
        const long double lambda = spec.lambda(k);
        const int nk = spec.multiplicity(k);
        ws.col_first = ws.aux[static_cast<std::size_t>(k)];
        ws.col_prev = ws.col_first;
        ws.col_cur.assign(static_cast<std::size_t>(nk), 0.0L);
        for (int i = 0; i < nk; ++i)
            inv(row0 + i, n - 1) =
                static_cast<double>(ws.col_prev[static_cast<std::size_t>(i)]);
        for (int j = 1; j < n; ++j) {
            const long double aj = p.coefficient(j);
            for (int i = 0; i < nk; ++i) {
                const std::size_t fi = static_cast<std::size_t>(i);
                long double acc = lambda * ws.col_prev[fi];
                if (i + 1 < nk) acc += ws.col_prev[fi + 1];
                acc += aj * ws.col_first[fi];
                ws.col_cur[fi] = acc;
                inv(row0 + i, n - 1 - j) = static_cast<double>(acc);
            }
            muladds += 2 * static_cast<std::uint64_t>(nk);
            ws.col_prev.swap(ws.col_cur);
        }
        row0 += nk;
    }
    if (stats) stats->muladds += muladds;
    return inv;
}

/// Convenience overload with a throwaway workspace.
inline DenseMatrix invert(const RootSpec& spec, InvertStats* stats = nullptr) {
    Workspace ws;
    return invert(spec, ws, stats);
}

/// Solves V x = b through the structured inverse, O(n^2) overall.
inline std::vector<double> solve(const RootSpec& spec, const std::vector<double>& b,
                                 Workspace& ws, InvertStats* stats = nullptr) {
    if (static_cast<int>(b.size()) != spec.n())
        throw dimension_error("solve: right-hand side has " +
                              std::to_string(b.size()) + " entries, expected " +
                              std::to_string(spec.n()));
    return matvec(invert(spec, ws, stats), b);
}

/// Convenience overload with a throwaway workspace.
inline std::vector<double> solve(const RootSpec& spec, const std::vector<double>& b,
                                 InvertStats* stats = nullptr) {
    Workspace ws;
    return solve(spec, b, ws, stats);
}

} // namespace cvm

#endif // CVM_CONFLUENT_HPP
