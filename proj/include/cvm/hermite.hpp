#ifndef CVM_HERMITE_HPP
#define CVM_HERMITE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cvm/confluent.hpp"
#include "cvm/errors.hpp"
#include "cvm/poly.hpp"

namespace cvm {

/// A Hermite interpolation problem: at node k the polynomial must match
/// values[k][j] as its j-th derivative, j = 0..multiplicity(k)-1.
struct HermiteData {
    RootSpec nodes;
    std::vector<std::vector<double>> values;
};

namespace detail {

inline void validate_hermite(const HermiteData& data) {
    if (static_cast<int>(data.values.size()) != data.nodes.r())
        throw dimension_error("hermite: " + std::to_string(data.values.size()) +
                              " value rows for " + std::to_string(data.nodes.r()) +
                              " nodes");
    for (int k = 0; k < data.nodes.r(); ++k)
        if (static_cast<int>(data.values[static_cast<std::size_t>(k)].size()) !=
            data.nodes.multiplicity(k))
            throw dimension_error("hermite: node " + std::to_string(k) + " needs " +
                                  std::to_string(data.nodes.multiplicity(k)) +
                                  " derivative values, got " +
                                  std::to_string(
                                      data.values[static_cast<std::size_t>(k)].size()));
}

} // namespace detail

/**
 * Hermite interpolation through the structured inverse, O(n^2).
 *
 * Matching the j-th derivative at node k is the transposed linear system
 * of the confluent Vandermonde matrix, with right-hand side entries
 * values[k][j] / j! (the j! undoes the derivative scaling baked into the
 * matrix columns). The coefficients are therefore the transposed inverse
 * applied to that scaled vector. Returned ascending: index i multiplies x^i.
 */
inline std::vector<double> hermite_interpolate(const HermiteData& data, Workspace& ws) {
    detail::validate_hermite(data);
    const int n = data.nodes.n();
    const DenseMatrix inv = invert(data.nodes, ws);

    std::vector<double> rhs(static_cast<std::size_t>(n), 0.0);
    std::size_t pos = 0;
    for (int k = 0; k < data.nodes.r(); ++k) {
        double fact = 1.0;
        for (int j = 0; j < data.nodes.multiplicity(k); ++j) {
            if (j > 0) fact *= static_cast<double>(j);
            rhs[pos++] = data.values[static_cast<std::size_t>(k)]
                                    [static_cast<std::size_t>(j)] / fact;
        }
    }

    // transposed application; extended-precision accumulators absorb the
    // cancellation between derivative conditions
    std::vector<long double> acc(static_cast<std::size_t>(n), 0.0L);
    for (int row = 0; row < n; ++row) {
        const long double d = rhs[static_cast<std::size_t>(row)];
        if (d == 0.0L) continue;
        for (int col = 0; col < n; ++col)
            acc[static_cast<std::size_t>(col)] += inv(row, col) * d;
    }
    std::vector<double> coeffs(static_cast<std::size_t>(n), 0.0);
    for (int col = 0; col < n; ++col)
        coeffs[static_cast<std::size_t>(col)] =
            static_cast<double>(acc[static_cast<std::size_t>(col)]);
    return coeffs;
}

/// Convenience overload with a throwaway workspace.
inline std::vector<double> hermite_interpolate(const HermiteData& data) {
    Workspace ws;
    return hermite_interpolate(data, ws);
}

/// Evaluates the order-th derivative of a polynomial given by ascending
/// coefficients (index i multiplies x^i). Order 0 is plain evaluation;
/// orders at or above the length return 0.
inline double eval_derivative(std::vector<double> coeffs, int order, double x) {
    if (order < 0)
        throw invalid_spec_error("derivative order must be non-negative");
    for (int rep = 0; rep < order; ++rep) {
        if (coeffs.size() <= 1) return 0.0;
        for (std::size_t i = 1; i < coeffs.size(); ++i)
            coeffs[i - 1] = static_cast<double>(i) * coeffs[i];
        coeffs.pop_back();
    }
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = acc * x + coeffs[i];
    return acc;
}

} // namespace cvm

#endif // CVM_HERMITE_HPP
