#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"

#include "cvm/confluent.hpp"
#include "cvm/dense_matrix.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_specs.hpp"

using cvm::DenseMatrix;
using cvm::InvertStats;
using cvm::Root;
using cvm::RootSpec;
using cvm::Workspace;

TEST_SUITE("build_matrix") {

TEST_CASE("one by one") {
    const DenseMatrix v = cvm::build_matrix(RootSpec({{5.0, 1}}));
    REQUIRE(v.rows() == 1);
    CHECK(v(0, 0) == 1.0);
}

TEST_CASE("single block, hand-sized") {
    // lambda = 2, multiplicity 3: powers, then scaled first and second
    // derivative columns. All entries are small integers, exact in double.
    const DenseMatrix v = cvm::build_matrix(RootSpec({{2.0, 3}}));
    const double expect[3][3] = {{1, 0, 0}, {2, 1, 0}, {4, 4, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(v(i, j) == expect[i][j]);
}

TEST_CASE("reference spec columns") {
    const DenseMatrix v = cvm::build_matrix(fixtures::reference_spec());
    REQUIRE(v.rows() == 10);
    // Column 0: powers of -0.5. Column 2: first-derivative column of the
    // lambda = -3 block, i * (-3)^(i-1). Both integer-scaled, so exact.
    for (int i = 0; i < 10; ++i) {
        CHECK(v(i, 0) == oracles::ipow(-0.5, i));
        CHECK(v(i, 2) == i * oracles::ipow(-3.0, i - 1));
    }
    CHECK(v(1, 2) == 1.0);
    CHECK(v(2, 2) == -6.0);
    CHECK(v(9, 2) == 59049.0);
}

TEST_CASE("matches the defining formula") {
    std::mt19937 rng(20240817u);
    for (int iter = 0; iter < 100; ++iter) {
        const RootSpec spec = random_specs::sample(rng, random_specs::kFamilyA);
        const DenseMatrix fast = cvm::build_matrix(spec);
        const DenseMatrix naive = oracles::naive_build(spec);
        double vmax = 0.0;
        for (double x : naive.data()) vmax = std::max(vmax, std::abs(x));
        CHECK(max_abs_diff(fast, naive) <= 1e-13 * std::max(1.0, vmax));
    }
}

} // TEST_SUITE build_matrix

TEST_SUITE("determinant") {

TEST_CASE("closed form on small cases") {
    // Single block: empty product.
    CHECK(cvm::determinant(RootSpec({{3.7, 4}})) == 1.0);
    // Two simple roots: lambda_2 - lambda_1.
    CHECK(cvm::determinant(RootSpec({{1.0, 1}, {3.0, 1}})) == 2.0);
    // Multiplicities enter as the exponent product.
    CHECK(cvm::determinant(RootSpec({{0.0, 1}, {2.0, 2}})) == 4.0);
    CHECK(cvm::determinant(RootSpec({{0.0, 2}, {1.0, 3}})) == 1.0);
}

TEST_CASE("reference value") {
    CHECK(cvm::determinant(fixtures::reference_spec()) == fixtures::kReferenceDet);
}

TEST_CASE("agrees with elimination") {
    std::mt19937 rng(20240817u);
    for (int iter = 0; iter < 100; ++iter) {
        const RootSpec spec = random_specs::sample(rng, random_specs::kFamilyA);
        const double closed = cvm::determinant(spec);
        const double pivoted = gauss_determinant(cvm::build_matrix(spec));
        CHECK(std::abs(pivoted - closed) <= 1e-8 * std::abs(closed));
    }
}

} // TEST_SUITE determinant

TEST_SUITE("aux_coefficients") {

TEST_CASE("reference seeds") {
    Workspace ws;
    cvm::compute_aux_coefficients(fixtures::reference_spec(), ws);
    REQUIRE(ws.aux.size() == 4);
    const int mult[4] = {1, 2, 3, 4};
    for (int k = 0; k < 4; ++k) {
        REQUIRE(static_cast<int>(ws.aux[k].size()) == mult[k]);
        for (int j = 0; j < mult[k]; ++j)
            CHECK(std::abs(static_cast<double>(ws.aux[k][j]) -
                           fixtures::kReferenceSeeds[k][j]) <= 1e-4);
    }
    // The top seed of block 0 has a closed form small enough to check by
    // hand: 1 / ((2.5)^2 (1.5)^3 (0.5)^4).
    CHECK(static_cast<double>(ws.aux[0][0]) ==
          doctest::Approx(1.0 / (6.25 * 3.375 * 0.0625)).epsilon(1e-14));
}

TEST_CASE("reference trace") {
    Workspace ws;
    ws.record_trace = true;
    cvm::compute_aux_coefficients(fixtures::reference_spec(), ws);
    REQUIRE(ws.scratch_trace.size() == 18);
    for (int t = 0; t < 18; ++t) {
        const auto& got = ws.scratch_trace[static_cast<std::size_t>(t)];
        const auto& want = fixtures::kReferenceTrace[t];
        CHECK(got.block == want.block);
        CHECK(got.foreign == want.foreign);
        CHECK(got.order == want.order);
        CHECK(std::abs(got.literal - want.value) <= 1e-4);
    }
    // Trace is rebuilt, not appended, on the next run.
    cvm::compute_aux_coefficients(fixtures::reference_spec(), ws);
    CHECK(ws.scratch_trace.size() == 18);
    // And not recorded at all when the flag is off.
    ws.record_trace = false;
    cvm::compute_aux_coefficients(fixtures::reference_spec(), ws);
    CHECK(ws.scratch_trace.empty());
}

TEST_CASE("scaled recursion matches the literal-factorial form") {
    std::mt19937 rng(20240817u);
    Workspace ws;
    ws.record_trace = true;
    for (int iter = 0; iter < 100; ++iter) {
        const RootSpec spec = random_specs::sample(rng, random_specs::kFamilyC);
        cvm::compute_aux_coefficients(spec, ws);
        std::vector<oracles::LiteralTraceRow> trace;
        std::size_t seen = 0;
        for (int k = 0; k < spec.r(); ++k) {
            const std::vector<double> lits = oracles::literal_aux(spec, k, &trace);
            for (int j = 0; j < spec.multiplicity(k); ++j) {
                const double scale = std::max(std::abs(lits[static_cast<std::size_t>(j)]), 1e-300);
                CHECK(std::abs(static_cast<double>(ws.aux[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) -
                               lits[static_cast<std::size_t>(j)]) <= 1e-12 * scale);
            }
        }
        REQUIRE(trace.size() == ws.scratch_trace.size());
        for (const auto& want : trace) {
            const auto& got = ws.scratch_trace[seen++];
            CHECK(got.block == want.block);
            CHECK(got.foreign == want.foreign);
            CHECK(got.order == want.order);
            const double scale = std::max(1.0, std::abs(want.value));
            CHECK(std::abs(got.literal - want.value) <= 1e-10 * scale);
        }
    }
}

} // TEST_SUITE aux_coefficients

TEST_SUITE("invert") {

TEST_CASE("identity-sized problems") {
    CHECK(cvm::invert(RootSpec({{0.0, 1}}))(0, 0) == 1.0);
    CHECK(cvm::invert(RootSpec({{7.0, 1}}))(0, 0) == 1.0);
}

TEST_CASE("single block, hand-sized") {
    // Inverse of the unit lower-triangular 3x3 from the build tests; the
    // alternating binomial pattern is exact in double.
    const DenseMatrix inv = cvm::invert(RootSpec({{2.0, 3}}));
    const double expect[3][3] = {{1, 0, 0}, {-2, 1, 0}, {4, -4, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(inv(i, j) == expect[i][j]);
}

TEST_CASE("reference inverse") {
    Workspace ws;
    const DenseMatrix inv = cvm::invert(fixtures::reference_spec(), ws);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            CHECK(std::abs(inv(i, j) - fixtures::kReferenceInverse[i][j]) <= 5e-2);
    const DenseMatrix v = cvm::build_matrix(fixtures::reference_spec());
    CHECK(max_abs_diff(matmul(v, inv), DenseMatrix::identity(10)) <= 1e-9);
}

TEST_CASE("agrees with elimination") {
    std::mt19937 rng(20240817u);
    Workspace ws;
    for (int iter = 0; iter < 200; ++iter) {
        const RootSpec spec = random_specs::sample(rng, random_specs::kFamilyA);
        const DenseMatrix v = cvm::build_matrix(spec);
        const DenseMatrix fast = cvm::invert(spec, ws);
        CHECK(max_abs_diff(gauss_inverse(v), fast) <= 1e-7);
        CHECK(max_abs_diff(matmul(v, fast), DenseMatrix::identity(spec.n())) <= 1e-8);
    }
}

TEST_CASE("workspace reuse is transparent") {
    Workspace ws;
    // Run a larger problem first so every buffer needs shrinking.
    cvm::invert(RootSpec({{-1.0, 5}, {1.5, 4}}), ws);
    const DenseMatrix reused = cvm::invert(fixtures::reference_spec(), ws);
    const DenseMatrix fresh = cvm::invert(fixtures::reference_spec());
    CHECK(reused.data() == fresh.data());
}

TEST_CASE("block order permutes rows and columns consistently") {
    // Reversing the blocks must reproduce the same inverse up to the
    // induced row/column permutation.
    const RootSpec spec({{-0.5, 2}, {1.0, 3}, {2.0, 1}});
    std::vector<Root> reversed(spec.roots().rbegin(), spec.roots().rend());
    const RootSpec rev(reversed);

    // Index maps between the two block layouts.
    const int n = spec.n();
    std::vector<int> fwd;
    for (int k = spec.r() - 1; k >= 0; --k)
        for (int j = 0; j < spec.multiplicity(k); ++j) {
            int base = 0;
            for (int t = 0; t < k; ++t) base += spec.multiplicity(t);
            fwd.push_back(base + j);
        }

    const DenseMatrix a = cvm::invert(spec);
    const DenseMatrix b = cvm::invert(rev);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            CHECK(b(i, j) ==
                  doctest::Approx(a(fwd[static_cast<std::size_t>(i)], j)).epsilon(1e-10));
}

TEST_CASE("extreme multiplicity stays finite") {
    Workspace ws;
    const RootSpec spec({{-0.02, 300}});
    const DenseMatrix inv = cvm::invert(spec, ws);
    for (double x : inv.data()) REQUIRE(std::isfinite(x));
    const DenseMatrix v = cvm::build_matrix(spec);
    CHECK(max_abs_diff(matmul(v, inv), DenseMatrix::identity(300)) <= 1e-3);
}

TEST_CASE("muladd accounting") {
    Workspace ws;
    InvertStats stats;
    // Single block of order n: no seed work, n-1 column steps of 2n each.
    cvm::invert(RootSpec({{-0.01, 5}}), ws, &stats);
    CHECK(stats.muladds == 40);
    // The counter accumulates across calls.
    cvm::invert(RootSpec({{-0.01, 5}}), ws, &stats);
    CHECK(stats.muladds == 80);

    // Two simple roots: one denominator factor per block plus one column
    // step of two muladds per block.
    InvertStats small;
    cvm::invert(RootSpec({{0.0, 1}, {1.0, 1}}), ws, &small);
    CHECK(small.muladds == 6);
}

} // TEST_SUITE invert

TEST_SUITE("solve") {

TEST_CASE("unit vector extracts an inverse column") {
    const RootSpec spec = fixtures::reference_spec();
    std::vector<double> e(10, 0.0);
    e[3] = 1.0;
    const std::vector<double> x = cvm::solve(spec, e);
    const DenseMatrix inv = cvm::invert(spec);
    for (int i = 0; i < 10; ++i)
        CHECK(x[static_cast<std::size_t>(i)] == inv(i, 3));
}

TEST_CASE("round trip through the forward matrix") {
    std::mt19937 rng(20240817u);
    Workspace ws;
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int iter = 0; iter < 50; ++iter) {
        const RootSpec spec = random_specs::sample(rng, random_specs::kFamilyA);
        const DenseMatrix v = cvm::build_matrix(spec);
        std::vector<double> x(static_cast<std::size_t>(spec.n()));
        for (auto& xi : x) xi = dist(rng);
        const std::vector<double> b = matvec(v, x);
        const std::vector<double> got = cvm::solve(spec, b, ws);
        for (std::size_t i = 0; i < x.size(); ++i)
            CHECK(std::abs(got[i] - x[i]) <= 1e-7);
    }
}

TEST_CASE("rejects mis-sized right-hand sides") {
    CHECK_THROWS_AS(cvm::solve(fixtures::reference_spec(), {1.0, 2.0}),
                    cvm::dimension_error);
}

} // TEST_SUITE solve
