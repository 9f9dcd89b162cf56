#ifndef CVM_TESTS_FIXTURES_HPP
#define CVM_TESTS_FIXTURES_HPP

#include "cvm/poly.hpp"

// Shared worked example: four roots -0.5, -3, -2, -1 with multiplicities
// 1, 2, 3, 4 (n = 10). Every frozen number below was checked against exact
// rational arithmetic; the rounded tables keep the print precision of the
// reference computation, hence the loose tolerances at the use sites.

namespace fixtures {

inline cvm::RootSpec reference_spec() {
    return cvm::RootSpec{{-0.5, 1}, {-3.0, 2}, {-2.0, 3}, {-1.0, 4}};
}

// Monic expansion of (s+0.5)(s+3)^2(s+2)^3(s+1)^4, highest power first.
// Every value is a dyadic rational, so the double expansion is exact.
inline constexpr double kReferenceCoeffs[10] = {
    16.5, 119.0, 493.5, 1302.0, 2281.5, 2687.0, 2098.5, 1039.0, 294.0, 36.0};

// Seed coefficients per block, derivative order 0 first (block k row k).
// Rounded to the reference precision; compare within 1e-4.
inline constexpr double kReferenceSeeds[4][4] = {
    {0.75851, 0.0, 0.0, 0.0},
    {0.13500, 0.02500, 0.0, 0.0},
    {-4.51851, -1.77777, -0.66666, 0.0},
    {3.62500, -2.87500, 1.00000, -0.50000},
};

// Intermediate recursion values in production order: for each block with
// multiplicity > 1, derivative orders ascending, foreign blocks ascending.
// Fields: block, foreign (both 0-based), order, unscaled value.
struct ReferenceTraceRow {
    int block;
    int foreign;
    int order;
    double value;
};

inline constexpr ReferenceTraceRow kReferenceTrace[18] = {
    {1, 0, 1, 0.02500},   {1, 2, 1, 0.02500},  {1, 3, 1, 0.02500},
    {2, 0, 1, -0.66666},  {2, 1, 1, -0.66666}, {2, 3, 1, -0.66666},
    {2, 0, 2, 3.33333},   {2, 1, 2, -1.11111}, {2, 3, 2, 2.44444},
    {3, 0, 1, -0.50000},  {3, 1, 1, -0.50000}, {3, 2, 1, -0.50000},
    {3, 0, 2, 0.00000},   {3, 1, 2, 2.50000},  {3, 2, 2, 1.50000},
    {3, 0, 3, -1.43750},  {3, 1, 3, -28.0000}, {3, 2, 3, -8.75000},
};

// The full 10x10 inverse, rounded to 2-5 digits as in the reference table;
// compare within 5e-2 per entry. Two entries of that table are truncated
// rather than rounded (it shows -1872.8 and -2358.7), which puts the
// printed strings more than 5e-2 from any correct inverse; those two
// entries carry the exact values -14983/8 and -9435/4 instead, confirmed
// by rational-arithmetic elimination.
inline constexpr double kReferenceInverse[10][10] = {
    {54.61, 336.78, 902.64, 1378.23, 1319.82, 821.475, 332.23, 84.196, 12.132,
     0.7585},
    {1.72, 13.440, 44.90, 84.4200, 98.5875, 74.205, 36.005, 10.860, 1.8475,
     0.1350},
    {0.300, 2.350, 7.875, 14.8625, 17.4375, 13.200, 6.4500, 1.9625, 0.3375,
     0.0250},
    {-100.33, -758.22, -2433.0, -4362.15, -4820.22, -3405.6, -1539.1, -429.6,
     -67.29, -4.518},
    {-38.00, -288.33, -929.55, -1675.22, -1861.33, -1322.3, -600.67, -168.3,
     -26.44, -1.777},
    {-12.00, -92.00, -300.33, -549.333, -621.00, -450.00, -209.00, -60.00,
     -9.666, -0.666},
    {45.00, 408.00, 1485.50, 2899.50, 3401.81, 2509.87, 1170.86, 334.50, 53.31,
     3.6250},
    {-85.50, -612.75, -1872.875, -3222.06, -3439.1, -2358.75, -1039.0, -283.6,
     -43.56, -2.875},
    {18.00, 147.00, 501.50, 938.250, 1064.00, 761.50, 345.50, 96.250, 15.00,
     1.000},
    {-18.00, -129.00, -390.50, -658.750, -684.75, -456.00, -195.00, -51.75,
     -7.750, -0.500},
};

inline constexpr double kReferenceDet = -337.5;

} // namespace fixtures

#endif // CVM_TESTS_FIXTURES_HPP
