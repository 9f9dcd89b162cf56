#ifndef CVM_BENCH_HPP
#define CVM_BENCH_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "cvm/confluent.hpp"
#include "cvm/dense_matrix.hpp"
#include "cvm/errors.hpp"

namespace cvm {

/// Families of root specifications the bench can generate.
///
/// single_root is the adversarial case for inversion algorithms that
/// degrade with multiplicity: one root carries the whole dimension.
enum class BenchMode { single_root, distinct_roots, mixed };

inline BenchMode parse_bench_mode(const std::string& name) {
    if (name == "single-root") return BenchMode::single_root;
    if (name == "distinct-roots") return BenchMode::distinct_roots;
    if (name == "mixed") return BenchMode::mixed;
    throw invalid_spec_error("mode: expected single-root, distinct-roots or mixed, got '" +
                             name + "'");
}

/**
 * Deterministic spec of dimension n for one bench mode.
 *
 * single-root uses lambda = -0.01; a tiny magnitude keeps the matrix
 * entries (powers up to lambda^(n-1) times binomials) bounded at large n.
 * distinct-roots places n Chebyshev points in (-1, 1). mixed cycles
 * multiplicities 1, 2, 4 over equispaced centers in [-1, 1], trimming the
 * last block so the total is exactly n.
 */
inline RootSpec make_bench_spec(BenchMode mode, int n) {
    if (n < 1)
        throw invalid_spec_error("sizes: must be positive, got " + std::to_string(n));
    std::vector<Root> roots;
    switch (mode) {
    case BenchMode::single_root:
        roots.push_back({-0.01, n});
        break;
    case BenchMode::distinct_roots: {
        const double pi = std::acos(-1.0);
        for (int i = 0; i < n; ++i)
            roots.push_back({std::cos((2 * i + 1) * pi / (2.0 * n)), 1});
        break;
    }
    case BenchMode::mixed: {
        static const int cycle[3] = {1, 2, 4};
        int total = 0;
        while (total < n) {
            const int m = std::min(cycle[roots.size() % 3], n - total);
            roots.push_back({0.0, m});
            total += m;
        }
        const int blocks = static_cast<int>(roots.size());
        for (int t = 0; t < blocks; ++t)
            roots[static_cast<std::size_t>(t)].lambda =
                blocks == 1 ? 0.0 : -1.0 + 2.0 * t / (blocks - 1);
        break;
    }
    }
    return RootSpec(std::move(roots));
}

struct BenchResult {
    int n = 0;
    int r = 0;
    double wall_ms = 0.0;
    std::uint64_t muladds = 0;
    double residual = 0.0; // max |V V^-1 - I|
};

/// Runs one size: times the structured inversion alone, then checks the
/// identity residual with the O(n^3) product outside the timed section.
inline BenchResult run_bench_case(BenchMode mode, int n, Workspace& ws) {
    const RootSpec spec = make_bench_spec(mode, n);
    InvertStats stats;

    const auto start = std::chrono::steady_clock::now();
    const DenseMatrix inv = invert(spec, ws, &stats);
    const auto stop = std::chrono::steady_clock::now();

    const DenseMatrix v = build_matrix(spec);
    const double residual =
        max_abs_diff(matmul(v, inv), DenseMatrix::identity(spec.n()));

    BenchResult result;
    result.n = spec.n();
    result.r = spec.r();
    result.wall_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    result.muladds = stats.muladds;
    result.residual = residual;
    return result;
}

inline std::vector<BenchResult> run_bench(BenchMode mode, const std::vector<int>& sizes) {
    Workspace ws;
    std::vector<BenchResult> results;
    results.reserve(sizes.size());
    for (int n : sizes)
        results.push_back(run_bench_case(mode, n, ws));
    return results;
}

/// Plain-text table, one row per size.
inline std::string render_bench_table(const std::vector<BenchResult>& results) {
    std::ostringstream out;
    out << std::setw(8) << "n" << std::setw(8) << "r" << std::setw(14) << "wall_ms"
        << std::setw(16) << "muladds" << std::setw(14) << "residual" << '\n';
    for (const BenchResult& res : results) {
        out << std::setw(8) << res.n << std::setw(8) << res.r << std::setw(14)
            << std::fixed << std::setprecision(3) << res.wall_ms << std::setw(16)
            << res.muladds << std::setw(14) << std::scientific
            << std::setprecision(3) << res.residual << '\n';
        out.unsetf(std::ios::floatfield);
    }
    return out.str();
}

} // namespace cvm

#endif // CVM_BENCH_HPP
