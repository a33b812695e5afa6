#pragma once

#include <vector>

#include "weierp/monomials.hpp"
#include "weierp/qseries.hpp"

namespace weierp {

// Coefficient matrix of the monomials: one row per monomial, columns the
// coefficients of q^e for e = 1..B with B = m/2 + m(g-1). Columns 1..m/2-1
// are structurally zero and retained for index clarity.
struct CoeffMatrix {
    long g = 0;
    long m = 0;
    long ncols = 0;  // B
    std::vector<std::vector<Rational>> rows;
    std::vector<ExponentVector> labels;
};

CoeffMatrix build_matrix(const std::vector<MonomialProduct>& monomials, long g, long m);

struct EchelonResult {
    std::vector<long> pivots;          // i_1 < ... < i_r, leading exponents
    std::vector<QSeries> reduced_rows; // F_u at full working precision
    std::vector<std::vector<Rational>> transform;  // reduced_rows = transform * monomials
    long rank = 0;
};

// Integral sort-and-cancel reduction to row echelon form with full
// transformation tracking.
//
// Loop: stable-sort the rows by leading-zero count (ties keep their current
// relative order), find the first adjacent pair with equal count, replace the
// later row by the cross-multiplication that cancels its leading coefficient,
// strip the content, and repeat until all nonzero rows have distinct counts.
// One cancellation per sort keeps freshly transformed rows ahead of older
// rows with the same count, which is what pins the reported row combinations.
// Zero rows are dropped (relations among the monomials are expected).
EchelonResult reduce(const CoeffMatrix& matrix, const std::vector<MonomialProduct>& monomials);

}  // namespace weierp
