#ifndef CVM_POLY_HPP
#define CVM_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cvm/errors.hpp"

namespace cvm {

/// One distinct root with its multiplicity.
struct Root {
    double lambda = 0.0;
    int multiplicity = 1;
};

/**
 * Ordered list of pairwise-distinct real roots with positive multiplicities.
 *
 * A RootSpec defines the monic polynomial prod_k (s - lambda_k)^{m_k} and
 * with it the dimension n = sum of multiplicities of every matrix this
 * library derives from it. Distinctness is checked by exact comparison of
 * the stored doubles; callers that want tolerance-based merging must merge
 * before constructing the spec.
 */
class RootSpec {
public:
    RootSpec() = default;

    explicit RootSpec(std::vector<Root> roots) : roots_(std::move(roots)) {
        validate();
    }

    RootSpec(std::initializer_list<Root> roots) : roots_(roots) { validate(); }

    /// Total degree n = sum of multiplicities.
    int n() const { return n_; }

    /// Number of distinct roots.
    int r() const { return static_cast<int>(roots_.size()); }

    const std::vector<Root>& roots() const { return roots_; }

    double lambda(int k) const { return roots_[static_cast<std::size_t>(k)].lambda; }
    int multiplicity(int k) const { return roots_[static_cast<std::size_t>(k)].multiplicity; }

private:
    void validate() {
        if (roots_.empty())
            throw invalid_spec_error("roots: at least one root is required");
        n_ = 0;
        for (const Root& root : roots_) {
            if (root.multiplicity < 1)
                throw invalid_spec_error(
                    "multiplicity: must be a positive integer, got " +
                    std::to_string(root.multiplicity));
            n_ += root.multiplicity;
        }
        for (std::size_t i = 0; i < roots_.size(); ++i)
            for (std::size_t j = i + 1; j < roots_.size(); ++j)
                if (roots_[i].lambda == roots_[j].lambda)
                    throw invalid_spec_error(
                        "roots: duplicate root " + std::to_string(roots_[i].lambda) +
                        " at positions " + std::to_string(i) + " and " + std::to_string(j));
    }

    std::vector<Root> roots_;
    int n_ = 0;
};

/**
 * Monic real polynomial p(s) = s^n + a_1 s^{n-1} + ... + a_{n-1} s + a_n.
 *
 * Only the n trailing coefficients are stored; the leading 1 is implicit.
 * coefficient(i) uses the 1-based index of the formula above, so
 * coefficient(1) multiplies s^{n-1} and coefficient(n) is the constant
 * term. degree() == 0 represents p(s) = 1.
 */
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<double> trailing_coeffs)
        : coeffs_(std::move(trailing_coeffs)) {}

    int degree() const { return static_cast<int>(coeffs_.size()); }

    /// a_i for i in 1..degree(); a_1 multiplies s^{degree-1}.
    double coefficient(int i) const { return coeffs_[static_cast<std::size_t>(i - 1)]; }

    /// The stored list a_1..a_n, highest power first.
    const std::vector<double>& coefficients() const { return coeffs_; }

    /// All degree()+1 coefficients in ascending power order, constant term
    /// first and the implicit leading 1 last.
    std::vector<double> ascending_coefficients() const {
        std::vector<double> c(coeffs_.rbegin(), coeffs_.rend());
        c.push_back(1.0);
        return c;
    }

private:
    std::vector<double> coeffs_;
};

/**
 * Expand prod_k (s - lambda_k)^{m_k} into monic coefficient form.
 *
 * Multiplies one linear factor at a time, each pass O(degree), so the whole
 * expansion is O(n^2). The factor order follows the spec's root order; the
 * result is order-independent up to floating-point rounding.
 */
inline Poly expand_from_roots(const RootSpec& spec) {
    std::vector<double> a;
    a.reserve(static_cast<std::size_t>(spec.n()));
    for (const Root& root : spec.roots()) {
        for (int rep = 0; rep < root.multiplicity; ++rep) {
            // (s^m + a_1 s^{m-1} + ... + a_m)(s - lambda)
            a.push_back(0.0);
            for (std::size_t i = a.size() - 1; i > 0; --i)
                a[i] -= root.lambda * a[i - 1];
            a[0] -= root.lambda;
        }
    }
    return Poly(std::move(a));
}

/// Evaluate p at x by Horner's scheme, O(degree).
inline double eval(const Poly& p, double x) {
    double acc = 1.0; // implicit leading coefficient
    for (double ai : p.coefficients())
        acc = acc * x + ai;
    return acc;
}

/**
 * Coefficients of the first derivative p', ascending power order
 * (constant term first). p' is generally non-monic; for degree n the
 * result has n entries and leading coefficient n. A degree-0 input yields
 * the zero polynomial {0}.
 */
inline std::vector<double> derivative(const Poly& p) {
    const int n = p.degree();
    if (n == 0)
        return {0.0};
    std::vector<double> ascending = p.ascending_coefficients();
    std::vector<double> deriv(static_cast<std::size_t>(n));
    for (int m = 1; m <= n; ++m)
        deriv[static_cast<std::size_t>(m - 1)] =
            static_cast<double>(m) * ascending[static_cast<std::size_t>(m)];
    return deriv;
}

} // namespace cvm

#endif // CVM_POLY_HPP
