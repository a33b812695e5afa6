#include "weierp/wronskian.hpp"

#include <algorithm>

namespace weierp {

namespace {

// Exact determinant of a matrix of truncated series by Gaussian elimination
// with division by the minimal-valuation pivot. Column valuations are
// stripped first (exact), which keeps the pivots near-units and the tracked
// precision tight. Returns the determinant with its rigorous precision; a
// zero-to-precision result carries a conservative precision bound.
QSeries series_det(std::vector<std::vector<QSeries>> M) {
    const size_t t = M.size();
    long shift_total = 0;
    for (size_t u = 0; u < t; ++u) {
        long vu = M[0][u].valuation_floor();
        long pu = M[0][u].prec();
        for (size_t j = 1; j < t; ++j) {
            vu = std::min(vu, M[j][u].valuation_floor());
            pu = std::min(pu, M[j][u].prec());
        }
        // keep at least one coefficient of knowledge per entry
        vu = std::min(vu, pu - 1);
        if (vu > 0) {
            for (size_t j = 0; j < t; ++j) M[j][u] = shift(M[j][u], -vu);
            shift_total += vu;
        }
    }

    int sign = 1;
    std::vector<QSeries> pivots;
    long pivot_val_sum = 0;
    for (size_t k = 0; k < t; ++k) {
        // minimal-valuation provably-nonzero pivot in column k
        size_t best = t;
        long best_val = 0;
        for (size_t i = k; i < t; ++i) {
            auto v = M[i][k].valuation();
            if (v && (best == t || *v < best_val)) {
                best = i;
                best_val = *v;
            }
        }
        if (best == t) {
            // the whole column is zero to precision: every determinant term
            // contains one of these entries, so det = 0 mod q^bound
            long col_prec = M[k][k].prec();
            for (size_t i = k; i < t; ++i) col_prec = std::min(col_prec, M[i][k].prec());
            return QSeries(std::max(1L, shift_total + pivot_val_sum + col_prec));
        }
        if (best != k) {
            std::swap(M[best], M[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < t; ++i) {
            if (!M[i][k].valuation()) continue;
            QSeries factor = div_by_nonzero(M[i][k], M[k][k]);
            for (size_t j = k; j < t; ++j) M[i][j] = sub(M[i][j], mul(factor, M[k][j]));
        }
        pivot_val_sum += best_val;
        pivots.push_back(M[k][k]);
    }

    QSeries det = pivots.front();
    for (size_t k = 1; k < t; ++k) det = mul(det, pivots[k]);
    if (sign < 0) det = neg(det);
    return shift(det, shift_total);
}

}  // namespace

WronskianSeries wronskian(const std::vector<QSeries>& forms, long m) {
    const long t = static_cast<long>(forms.size());
    if (t < 1) throw Error("wronskian: need at least one form");
    WronskianSeries out{forms.front(), t, t * (m + t - 1)};
    if (t == 1) return out;
    std::vector<std::vector<QSeries>> M;
    M.reserve(static_cast<size_t>(t));
    M.push_back(forms);
    for (long j = 1; j < t; ++j) {
        std::vector<QSeries> row;
        row.reserve(static_cast<size_t>(t));
        for (const auto& prev : M.back()) row.push_back(theta(prev));
        M.push_back(std::move(row));
    }
    out.series = series_det(std::move(M));
    return out;
}

WronskianDecision weierstrass_by_wronskian(const EchelonResult& rows, long m) {
    const long t = rows.rank;
    if (t < 1) throw Error("weierstrass_by_wronskian: empty echelon basis");
    long pivot_sum = 0;
    for (long p : rows.pivots) pivot_sum += p;
    const long threshold = t * (m + t - 1) / 2;

    WronskianSeries W = wronskian(rows.reduced_rows, m);
    auto ord = W.series.valuation();
    if (!ord) {
        if (W.series.prec() > pivot_sum)
            throw DataIntegrityError(
                "Wronskian vanishes beyond the pivot sum; inputs cannot be independent");
        // recommended = additional basis coefficients; input precision
        // propagates at least one-for-one into the determinant
        throw InsufficientPrecision(
            "Wronskian only known to O(q^" + std::to_string(W.series.prec()) +
                "), ord_q undecidable against " + std::to_string(threshold + 1),
            std::max(pivot_sum, threshold) + 1 - W.series.prec());
    }
    // Vandermonde identity: theta^j q^i = i^j q^i, so the leading coefficient
    // of W is Vandermonde(i_1..i_t) * prod(a_u) != 0 for distinct pivots
    if (*ord != pivot_sum)
        throw DataIntegrityError("ord_q(W) = " + std::to_string(*ord) +
                                 " != pivot sum " + std::to_string(pivot_sum));
    return WronskianDecision{*ord >= threshold + 1, *ord, pivot_sum, threshold};
}

}  // namespace weierp
