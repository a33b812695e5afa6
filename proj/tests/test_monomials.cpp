#include <doctest.h>

#include <filesystem>

#include "weierp/curve_tables.hpp"
#include "weierp/monomials.hpp"

using namespace weierp;

namespace {

const std::filesystem::path kDataDir = std::filesystem::path(WEIERP_SOURCE_DIR) / "data" / "bases";

QSeries from_pairs(std::initializer_list<std::pair<long, long>> terms, long prec) {
    QSeries out(prec);
    for (auto& [n, c] : terms) out = add(out, QSeries::monomial(n, make_rational(c), prec));
    return out;
}

}  // namespace

TEST_CASE("enumerate_exponents: order and count") {
    auto e22 = enumerate_exponents(2, 2);
    CHECK(e22 == std::vector<ExponentVector>{{2, 0}, {1, 1}, {0, 2}});

    auto e32 = enumerate_exponents(3, 2);
    CHECK(e32 == std::vector<ExponentVector>{
                     {2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});

    CHECK(enumerate_exponents(5, 2).size() == 15);
    for (long g : {1, 2, 4, 6})
        for (long d : {1, 2, 3, 4})
            CHECK(static_cast<long>(enumerate_exponents(g, d).size()) == monomial_count(g, 2 * d));

    // no duplicates, all sums equal d
    auto e53 = enumerate_exponents(5, 3);
    for (size_t i = 1; i < e53.size(); ++i) CHECK(e53[i - 1] > e53[i]);  // strictly descending
    for (auto& a : e53) {
        int s = 0;
        for (int x : a) s += x;
        CHECK(s == 3);
    }
}

TEST_CASE("monomial_name") {
    CHECK(monomial_name({2, 0, 0}) == "f0^2");
    CHECK(monomial_name({1, 1, 0}) == "f0*f1");
    CHECK(monomial_name({0, 1, 2}) == "f1*f2^2");
}

TEST_CASE("compute_monomials reproduces the reference products for level 34") {
    auto basis = load_basis(bundled_basis_path(kDataDir, 34));
    auto monos = compute_monomials(basis, 4, 11);
    REQUIRE(monos.size() == 6);

    // known expansions through q^10 for the echelonized basis
    CHECK(truncate(monos[0].series, 11) ==
          from_pairs({{2, 1}, {5, -4}, {6, -4}, {8, 12}, {9, 12}, {10, -2}}, 11));  // f0^2
    CHECK(truncate(monos[1].series, 11) ==
          from_pairs({{3, 1}, {5, -1}, {6, -2}, {7, -2}, {8, 2}, {9, 5}, {10, 2}}, 11));  // f0*f1
    CHECK(truncate(monos[2].series, 11) ==
          from_pairs({{4, 1}, {5, -2}, {6, -1}, {7, -1}, {8, 6}, {9, 6}, {10, 2}}, 11));  // f0*f2

    // the combination -f1^2 + f0*f2 has leading term -2q^5
    auto comb = sub(monos[2].series, monos[3].series);
    CHECK(comb.valuation() == 5);
    CHECK(comb.coefficient(5) == make_rational(-2));

    for (auto& m : monos) CHECK(m.series.valuation_floor() >= 2);
}

TEST_CASE("compute_monomials: m = 2 returns the basis itself") {
    auto basis = load_basis(bundled_basis_path(kDataDir, 34));
    long P = basis.prec();
    auto monos = compute_monomials(basis, 2, P);
    REQUIRE(monos.size() == 3);
    for (size_t i = 0; i < 3; ++i) CHECK(monos[i].series == basis.forms[i].series(P));
}

TEST_CASE("cached products equal the naive fold exactly") {
    auto basis = load_basis(bundled_basis_path(kDataDir, 55));
    long prec = 30;
    auto monos = compute_monomials(basis, 6, prec);
    CHECK(monos.size() == 35);  // C(7,3)
    std::vector<QSeries> forms;
    for (long i = 0; i < basis.genus(); ++i) forms.push_back(basis.forms[i].series(basis.prec()));
    for (size_t k = 0; k < monos.size(); k += 7) {
        // naive left-to-right product
        std::optional<QSeries> naive;
        for (size_t i = 0; i < monos[k].alpha.size(); ++i)
            for (int e = 0; e < monos[k].alpha[i]; ++e)
                naive = naive ? mul(*naive, forms[i]) : forms[i];
        REQUIRE(naive.has_value());
        CHECK(truncate(*naive, prec) == monos[k].series);
    }
}

TEST_CASE("compute_monomials precision guards") {
    auto basis = load_basis(bundled_basis_path(kDataDir, 34));
    // ceiling: products of d forms reach basis.prec + d - 1 but no further
    CHECK_NOTHROW(compute_monomials(basis, 4, basis.prec() + 1));
    CHECK_THROWS_AS(compute_monomials(basis, 4, basis.prec() + 2), InsufficientPrecision);
    try {
        compute_monomials(basis, 4, basis.prec() + 5);
        FAIL("unreachable");
    } catch (const InsufficientPrecision& e) {
        CHECK(e.recommended == basis.prec() + 4);
    }
}
