#ifndef CVM_CANONICAL_HPP
#define CVM_CANONICAL_HPP

#include "cvm/confluent.hpp"
#include "cvm/dense_matrix.hpp"
#include "cvm/poly.hpp"

namespace cvm {

/// The two canonical forms tied together by the confluent Vandermonde
/// matrix: companion * V = V * jordan.
struct CanonicalPair {
    DenseMatrix companion;
    DenseMatrix jordan;
};

/// Companion form of a monic polynomial: ones on the superdiagonal, the
/// negated coefficients across the last row (constant term leftmost).
inline DenseMatrix companion_matrix(const Poly& p) {
    const int n = p.degree();
    DenseMatrix f(n, n);
    for (int i = 0; i + 1 < n; ++i)
        f(i, i + 1) = 1.0;
    for (int j = 0; j < n; ++j)
        f(n - 1, j) = 0.0 - p.coefficient(n - j); // keeps zeros positive
    return f;
}

/// Block-diagonal Jordan form: lambda(k) repeated along the diagonal of
/// block k with ones on the block's superdiagonal.
inline DenseMatrix jordan_matrix(const RootSpec& spec) {
    const int n = spec.n();
    DenseMatrix j(n, n);
    int pos = 0;
    for (int k = 0; k < spec.r(); ++k) {
        const int nk = spec.multiplicity(k);
        for (int i = 0; i < nk; ++i) {
            j(pos + i, pos + i) = spec.lambda(k);
            if (i + 1 < nk)
                j(pos + i, pos + i + 1) = 1.0;
        }
        pos += nk;
    }
    return j;
}

/// Builds both canonical forms for one root specification.
inline CanonicalPair canonical_pair(const RootSpec& spec) {
    return {companion_matrix(expand_from_roots(spec)), jordan_matrix(spec)};
}

/// Largest entry of companion * V - V * jordan; zero in exact arithmetic
/// because each Vandermonde block is a Jordan chain of the companion form.
inline double similarity_residual(const RootSpec& spec) {
    const CanonicalPair pair = canonical_pair(spec);
    const DenseMatrix v = build_matrix(spec);
    return max_abs_diff(matmul(pair.companion, v), matmul(v, pair.jordan));
}

} // namespace cvm

#endif // CVM_CANONICAL_HPP
