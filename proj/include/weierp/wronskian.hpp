#pragma once

#include <vector>

#include "weierp/echelon.hpp"
#include "weierp/qseries.hpp"

namespace weierp {

struct WronskianSeries {
    QSeries series;
    long t;       // number of input forms
    long weight;  // t(m + t - 1), for record keeping
};

// Wronskian of t q-series: exact determinant of the t x t matrix whose row j
// is theta^j = (q d/dq)^j applied to each form. Computed by exact Gaussian
// elimination over the truncated series ring with column-valuation stripping
// and minimal-valuation pivoting; precision is tracked through every
// operation. This differs from the d/dz Wronskian normalization by the
// nonzero constant (2 pi i)^{t(t-1)/2}, which leaves valuations untouched.
WronskianSeries wronskian(const std::vector<QSeries>& forms, long m);

struct WronskianDecision {
    bool is_weierstrass;
    long ord;        // ord_q of the Wronskian
    long pivot_sum;  // sum of the echelon pivots; must equal ord
    long threshold;  // t(m + t - 1)/2; Weierstrass iff ord >= threshold + 1
};

// Weierstrass criterion from the Wronskian of the reduced echelon rows:
// with c_W(a_inf) = ord_q(W) - 1 at the width-one cusp at infinity, the cusp
// is an m/2-Weierstrass point iff ord_q(W) >= t(m + t - 1)/2 + 1.
// Asserts ord_q(W) = sum of pivots (Vandermonde leading-term identity) on
// every run, which certifies the determinant and the pivots simultaneously.
WronskianDecision weierstrass_by_wronskian(const EchelonResult& rows, long m);

}  // namespace weierp
