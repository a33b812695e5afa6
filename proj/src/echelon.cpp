#include "weierp/echelon.hpp"

#include <algorithm>
#include <numeric>

namespace weierp {

CoeffMatrix build_matrix(const std::vector<MonomialProduct>& monomials, long g, long m) {
    if (monomials.empty()) throw Error("build_matrix: no monomials");
    long B = m / 2 + m * (g - 1);
    CoeffMatrix out;
    out.g = g;
    out.m = m;
    out.ncols = B;
    for (const auto& mono : monomials) {
        if (mono.series.prec() <= B)
            throw InsufficientPrecision("monomial " + monomial_name(mono.alpha) +
                                            " known to O(q^" + std::to_string(mono.series.prec()) +
                                            "), need the coefficient of q^" + std::to_string(B),
                                        B + 1);
        std::vector<Rational> row(static_cast<size_t>(B));
        for (long e = 1; e <= B; ++e) row[static_cast<size_t>(e - 1)] = mono.series.coefficient(e);
        out.rows.push_back(std::move(row));
        out.labels.push_back(mono.alpha);
    }
    return out;
}

namespace {

long leading_zeros(const std::vector<Rational>& row) {
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) return static_cast<long>(i);
    return static_cast<long>(row.size());
}

// scale the row to coprime integers; returns the applied factor
Rational content_strip(std::vector<Rational>& row) {
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& x : row) {
        if (x == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return Rational(1);
    Rational factor = make_rational(den_lcm, num_gcd);
    if (factor == 1) return factor;
    for (auto& x : row) x *= factor;
    return factor;
}

}  // namespace

EchelonResult reduce(const CoeffMatrix& matrix, const std::vector<MonomialProduct>& monomials) {
    const long B = matrix.ncols;
    const size_t R = matrix.rows.size();
    if (R != monomials.size()) throw Error("reduce: matrix/monomial size mismatch");

    std::vector<std::vector<Rational>> rows = matrix.rows;
    std::vector<std::vector<Rational>> trans(R);
    for (size_t i = 0; i < R; ++i) {
        trans[i].assign(R, Rational(0));
        trans[i][i] = 1;
    }

    std::vector<size_t> order(R);
    std::iota(order.begin(), order.end(), 0);

    long safety = static_cast<long>(R) * (B + 2) + 16;
    while (true) {
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return leading_zeros(rows[a]) < leading_zeros(rows[b]);
        });
        size_t hit = R;
        for (size_t k = 1; k < R; ++k) {
            long lz = leading_zeros(rows[order[k]]);
            if (lz < B && lz == leading_zeros(rows[order[k - 1]])) {
                hit = k;
                break;
            }
        }
        if (hit == R) break;
        size_t a = order[hit - 1], b = order[hit];
        long lz = leading_zeros(rows[b]);
        Rational ca = rows[a][static_cast<size_t>(lz)];
        Rational cb = rows[b][static_cast<size_t>(lz)];
        for (long j = 0; j < B; ++j) {
            auto ju = static_cast<size_t>(j);
            rows[b][ju] = ca * rows[b][ju] - cb * rows[a][ju];
        }
        for (size_t j = 0; j < R; ++j) trans[b][j] = ca * trans[b][j] - cb * trans[a][j];
        Rational factor = content_strip(rows[b]);
        if (factor != 1)
            for (auto& x : trans[b]) x *= factor;
        if (--safety < 0) throw DataIntegrityError("reduce: sort-and-cancel failed to terminate");
    }

    EchelonResult out;
    for (size_t k = 0; k < R; ++k) {
        size_t i = order[k];
        long lz = leading_zeros(rows[i]);
        if (lz >= B) {
            // dropped as a relation among the monomials; the combination must
            // vanish to the full working precision, not just through q^B
            QSeries full(monomials.front().series.prec());
            for (size_t j = 0; j < R; ++j)
                if (trans[i][j] != 0) full = add(full, scale(trans[i][j], monomials[j].series));
            if (!full.is_zero())
                throw DataIntegrityError(
                    "reduce: a row vanished through q^" + std::to_string(B) +
                    " but not beyond; pivot bound violated");
            continue;
        }
        // reporting normalization: primitive integral row, positive leading coefficient
        Rational factor = content_strip(rows[i]);
        if (rows[i][static_cast<size_t>(lz)] < 0) {
            factor = -factor;
            for (auto& x : rows[i]) x = -x;
        }
        if (factor != 1)
            for (auto& x : trans[i]) x *= factor;

        QSeries series(monomials.front().series.prec());
        for (size_t j = 0; j < R; ++j)
            if (trans[i][j] != 0) series = add(series, scale(trans[i][j], monomials[j].series));
        long pivot = lz + 1;
        if (series.valuation() != std::optional<long>(pivot))
            throw DataIntegrityError("reduce: reconstructed row valuation disagrees with pivot " +
                                     std::to_string(pivot));
        out.pivots.push_back(pivot);
        out.reduced_rows.push_back(std::move(series));
        out.transform.push_back(trans[i]);
    }
    out.rank = static_cast<long>(out.pivots.size());
    if (out.rank == 0) throw DegenerateInputError("reduce: all rows vanished; corrupted input data");

    for (size_t u = 1; u < out.pivots.size(); ++u)
        if (out.pivots[u] <= out.pivots[u - 1])
            throw DataIntegrityError("reduce: pivots not strictly increasing");
    // pivot bounds m/2 <= i_1 and i_r <= m/2 + m(g-1)
    if (out.pivots.front() < matrix.m / 2 || out.pivots.back() > B)
        throw DataIntegrityError("reduce: pivot exponents out of range [m/2, m/2 + m(g-1)]");
    return out;
}

}  // namespace weierp
