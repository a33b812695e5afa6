#include <doctest.h>

#include <filesystem>
#include <random>

#include "weierp/basis_io.hpp"
#include "weierp/monomials.hpp"
#include "weierp/wronskian.hpp"

using namespace weierp;

namespace {

const std::filesystem::path kDataDir = std::filesystem::path(WEIERP_SOURCE_DIR) / "data" / "bases";

QSeries random_series(std::mt19937& rng, long prec, long val) {
    std::uniform_int_distribution<long> num_d(-3, 3);
    std::vector<Rational> c(static_cast<size_t>(prec));
    for (long n = val; n < prec; ++n) c[static_cast<size_t>(n)] = make_rational(num_d(rng));
    if (c[static_cast<size_t>(val)] == 0) c[static_cast<size_t>(val)] = 1;
    return QSeries(std::move(c));
}

// reference determinant by Laplace expansion along the first row
QSeries cofactor_det(const std::vector<std::vector<QSeries>>& M) {
    size_t t = M.size();
    if (t == 1) return M[0][0];
    std::optional<QSeries> acc;
    for (size_t j = 0; j < t; ++j) {
        std::vector<std::vector<QSeries>> minor;
        for (size_t i = 1; i < t; ++i) {
            std::vector<QSeries> row;
            for (size_t k = 0; k < t; ++k)
                if (k != j) row.push_back(M[i][k]);
            minor.push_back(std::move(row));
        }
        QSeries term = mul(M[0][j], cofactor_det(minor));
        if (j % 2) term = neg(term);
        acc = acc ? add(*acc, term) : term;
    }
    return *acc;
}

QSeries cofactor_wronskian(const std::vector<QSeries>& forms) {
    size_t t = forms.size();
    std::vector<std::vector<QSeries>> M{forms};
    for (size_t j = 1; j < t; ++j) {
        std::vector<QSeries> row;
        for (const auto& prev : M.back()) row.push_back(theta(prev));
        M.push_back(std::move(row));
    }
    return cofactor_det(M);
}

EchelonResult echelon_for(long N, long m) {
    auto basis = load_basis(bundled_basis_path(kDataDir, N));
    long use = required_precision(basis.genus(), m, Method::Both);
    auto monos = compute_monomials(basis, m, use + m / 2 - 1);
    auto matrix = build_matrix(monos, basis.genus(), m);
    return reduce(matrix, monos);
}

}  // namespace

TEST_CASE("wronskian: t = 1 is the form itself") {
    auto f = QSeries::monomial(3, make_rational(7), 9);
    auto w = wronskian({f}, 4);
    CHECK(w.series == f);
    CHECK(w.t == 1);
    CHECK(w.weight == 4);
}

TEST_CASE("wronskian of (q^2, q^3) is q^5") {
    auto w = wronskian({QSeries::monomial(2, make_rational(1), 10),
                        QSeries::monomial(3, make_rational(1), 10)},
                       2);
    CHECK(w.series.valuation() == 5);
    CHECK(w.series.coefficient(5) == 1);  // Vandermonde(2,3) = 3 - 2
    CHECK(w.t == 2);
    CHECK(w.weight == 2 * (2 + 2 - 1));
}

TEST_CASE("wronskian valuation on the level-34 echelon basis is the pivot sum") {
    auto rows = echelon_for(34, 4);
    REQUIRE(rows.rank == 6);
    auto w = wronskian(rows.reduced_rows, 4);
    CHECK(w.series.valuation() == 27);  // 2+3+4+5+6+7

    auto decision = weierstrass_by_wronskian(rows, 4);
    CHECK(decision.ord == 27);
    CHECK(decision.pivot_sum == 27);
    CHECK(decision.threshold == 6 * (4 + 6 - 1) / 2);  // 27
    CHECK(!decision.is_weierstrass);                   // 27 < 28
}

TEST_CASE("wronskian: level 55 exceeds the threshold") {
    auto rows = echelon_for(55, 4);
    REQUIRE(rows.rank == 12);
    auto decision = weierstrass_by_wronskian(rows, 4);
    CHECK(decision.pivot_sum == 93);  // 2+...+10+12+13+14
    CHECK(decision.ord == 93);
    CHECK(decision.threshold == 12 * (4 + 12 - 1) / 2);  // 90
    CHECK(decision.is_weierstrass);                      // 93 >= 91
}

TEST_CASE("wronskian agrees with cofactor expansion") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<QSeries> forms;
        long t = 2 + static_cast<long>(trial % 3);
        for (long i = 0; i < t; ++i)
            forms.push_back(random_series(rng, 14, 1 + (trial + static_cast<long>(i)) % 3));
        auto fast = wronskian(forms, 2).series;
        auto slow = cofactor_wronskian(forms);
        long common = std::min(fast.prec(), slow.prec());
        CHECK(truncate(fast, common) == truncate(slow, common));
        // the elimination path must not lose precision against Laplace
        CHECK(fast.prec() >= slow.prec());
    }

    auto rows = echelon_for(34, 4);
    auto fast = wronskian(rows.reduced_rows, 4).series;
    auto slow = cofactor_wronskian(rows.reduced_rows);
    long common = std::min(fast.prec(), slow.prec());
    CHECK(truncate(fast, common) == truncate(slow, common));
}

TEST_CASE("wronskian is multilinear and alternating") {
    std::mt19937 rng(31337);
    std::vector<QSeries> forms;
    for (long i = 0; i < 4; ++i) forms.push_back(random_series(rng, 16, 1 + i));

    auto w0 = wronskian(forms, 2).series;

    auto scaled = forms;
    scaled[2] = scale(make_rational(5, 3), scaled[2]);
    auto w1 = wronskian(scaled, 2).series;
    CHECK(w1 == scale(make_rational(5, 3), w0));

    auto swapped = forms;
    std::swap(swapped[1], swapped[3]);
    auto w2 = wronskian(swapped, 2).series;
    CHECK(w2 == neg(w0));
}

TEST_CASE("wronskian of dependent forms vanishes to precision") {
    std::mt19937 rng(5);
    auto f = random_series(rng, 12, 1);
    auto g = scale(make_rational(3, 2), f);
    auto w = wronskian({f, g}, 2).series;
    CHECK(w.is_zero());
}

TEST_CASE("weierstrass_by_wronskian detects corrupted pivot data") {
    auto rows = echelon_for(34, 4);
    rows.pivots[0] = 3;  // lie about a pivot; ord(W) no longer matches
    CHECK_THROWS_AS(weierstrass_by_wronskian(rows, 4), DataIntegrityError);
}

TEST_CASE("weierstrass_by_wronskian reports undecidable precision") {
    auto rows = echelon_for(34, 4);
    // at precision 7 the pivot-7 row is zero to its precision and the
    // determinant valuation becomes undecidable
    for (auto& r : rows.reduced_rows) r = truncate(r, 7);
    CHECK_THROWS_AS(weierstrass_by_wronskian(rows, 4), InsufficientPrecision);

    // at precision 8 every leading coefficient is visible and the verdict is
    // already decidable, far below the headline precision
    auto rows8 = echelon_for(34, 4);
    for (auto& r : rows8.reduced_rows) r = truncate(r, 8);
    auto d = weierstrass_by_wronskian(rows8, 4);
    CHECK(d.ord == 27);
    CHECK(!d.is_weierstrass);
}
