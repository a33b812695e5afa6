#include <doctest.h>

#include <random>

#include "weierp/qseries.hpp"

using namespace weierp;

namespace {

QSeries from_terms(std::initializer_list<std::pair<long, long>> terms, long prec) {
    QSeries out(prec);
    for (auto& [n, c] : terms) out = add(out, QSeries::monomial(n, make_rational(c), prec));
    return out;
}

// random series with small rational coefficients; deterministic per seed
QSeries random_series(std::mt19937& rng, long max_prec = 12) {
    std::uniform_int_distribution<long> prec_d(1, max_prec);
    std::uniform_int_distribution<long> num_d(-4, 4);
    std::uniform_int_distribution<long> den_d(1, 3);
    long prec = prec_d(rng);
    std::vector<Rational> c(static_cast<size_t>(prec));
    for (auto& x : c) x = make_rational(num_d(rng), den_d(rng));
    return QSeries(std::move(c));
}

}  // namespace

TEST_CASE("qseries basics and canonical form") {
    QSeries z(5);
    CHECK(z.prec() == 5);
    CHECK(z.is_zero());
    CHECK(!z.valuation().has_value());
    CHECK(z.valuation_floor() == 5);

    auto s = from_terms({{1, 1}, {2, 1}}, 5);  // q + q^2
    auto t = from_terms({{1, -1}}, 5);         // -q
    auto sum = add(s, t);
    CHECK(sum == from_terms({{2, 1}}, 5));
    CHECK(sum.valuation() == 2);
    for (auto& [n, c] : sum.terms()) CHECK(c != 0);
    CHECK(sum.terms().size() == 1);

    // precision is the min of the operands
    auto a = from_terms({{1, 1}}, 3);
    auto b = from_terms({{4, 1}}, 7);
    auto c = add(a, b);
    CHECK(c.prec() == 3);
    CHECK(c == from_terms({{1, 1}}, 3));

    CHECK_THROWS_AS(QSeries(0), Error);
}

TEST_CASE("coefficient access is precision-guarded") {
    auto f = from_terms({{2, 1}, {5, -4}}, 11);
    CHECK(f.coefficient(5) == make_rational(-4));
    CHECK(f.coefficient(10) == 0);
    CHECK_THROWS_AS(f.coefficient(11), PrecisionExceeded);
    QSeries g(10);
    CHECK_THROWS_AS(g.coefficient(10), PrecisionExceeded);
    try {
        g.coefficient(15);
        FAIL("unreachable");
    } catch (const PrecisionExceeded& e) {
        CHECK(e.requested == 15);
        CHECK(e.available == 10);
    }
}

TEST_CASE("mul: examples and precision rule") {
    auto q = from_terms({{1, 1}}, 9);
    auto q2 = mul(q, q);
    CHECK(q2.valuation() == 2);
    CHECK(q2.coefficient(2) == 1);
    CHECK(q2.prec() == 10);  // prec 9 + valuation 1

    // zero factor: product is zero with the documented precision
    QSeries zero(4);
    auto p = mul(zero, from_terms({{2, 3}}, 10));
    CHECK(p.is_zero());
    CHECK(p.prec() == std::min(4 + 2, 10 + 4));
}

TEST_CASE("theta: q d/dq") {
    auto f = from_terms({{3, 1}}, 8);
    CHECK(theta(f) == from_terms({{3, 3}}, 8));

    QSeries one = QSeries::monomial(0, make_rational(1), 5);
    auto t = theta(one);
    CHECK(t.is_zero());
    CHECK(t.prec() == 5);

    auto g = from_terms({{2, 1}, {5, -4}}, 11);
    CHECK(theta(g) == from_terms({{2, 2}, {5, -20}}, 11));
}

TEST_CASE("valuation examples") {
    CHECK(from_terms({{3, 1}, {7, 2}}, 9).valuation() == 3);
    CHECK(!QSeries(10).valuation().has_value());
}

TEST_CASE("scale and truncate") {
    auto f = from_terms({{1, 2}, {4, -3}}, 9);
    auto z = scale(make_rational(0), f);
    CHECK(z.is_zero());
    CHECK(z.prec() == 9);
    auto half = scale(make_rational(1, 2), f);
    CHECK(half.coefficient(1) == 1);
    CHECK(half.coefficient(4) == make_rational(-3, 2));
    CHECK(half.prec() == 9);

    auto t = truncate(f, 4);
    CHECK(t.prec() == 4);
    CHECK(t.coefficient(1) == 2);
    CHECK_THROWS_AS(truncate(f, 10), PrecisionExceeded);
    CHECK_THROWS_AS(truncate(f, 0), Error);
}

TEST_CASE("shift multiplies and divides by powers of q") {
    auto f = from_terms({{2, 5}, {3, 1}}, 6);
    auto up = shift(f, 2);
    CHECK(up.prec() == 8);
    CHECK(up.coefficient(4) == 5);
    auto down = shift(up, -2);
    CHECK(down == f);
    CHECK_THROWS_AS(shift(f, -3), Error);
}

TEST_CASE("div_by_nonzero inverts mul") {
    std::mt19937 rng(12345);
    int done = 0;
    while (done < 50) {
        QSeries a = random_series(rng), b = random_series(rng);
        if (!b.valuation() || b.valuation_floor() > a.valuation_floor()) continue;
        QSeries prod = mul(a, b);
        QSeries back = div_by_nonzero(prod, b);
        // back agrees with a on their common precision
        long common = std::min(back.prec(), a.prec());
        CHECK(truncate(back, common) == truncate(a, common));
        ++done;
    }
}

TEST_CASE("properties: associativity, commutativity, Leibniz, valuation additivity") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 200; ++iter) {
        QSeries a = random_series(rng), b = random_series(rng), c = random_series(rng);
        CHECK(add(a, b) == add(b, a));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(theta(mul(a, b)) == add(mul(theta(a), b), mul(a, theta(b))));

        auto va = a.valuation(), vb = b.valuation();
        auto prod = mul(a, b);
        if (va && vb && *va + *vb < prod.prec()) CHECK(prod.valuation() == *va + *vb);

        // canonical form: no zero terms reported, storage exactly prec wide
        for (auto& [n, x] : prod.terms()) {
            CHECK(x != 0);
            CHECK(n < prod.prec());
        }
    }
}

TEST_CASE("mul precision rule is rigorous against unknown tails") {
    // extending the operands with arbitrary coefficients beyond their stated
    // precision never changes the product below its computed precision
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> num_d(-9, 9);
    for (int iter = 0; iter < 100; ++iter) {
        QSeries a = random_series(rng), b = random_series(rng);
        QSeries prod = mul(a, b);

        auto extend = [&](const QSeries& s, long extra) {
            std::vector<Rational> c(static_cast<size_t>(s.prec() + extra));
            for (long n = 0; n < s.prec(); ++n) c[static_cast<size_t>(n)] = s.coefficient(n);
            for (long n = s.prec(); n < s.prec() + extra; ++n)
                c[static_cast<size_t>(n)] = make_rational(num_d(rng));
            return QSeries(std::move(c));
        };
        QSeries a_ext = extend(a, 6), b_ext = extend(b, 6);
        QSeries prod_ext = mul(a_ext, b_ext);
        REQUIRE(prod_ext.prec() >= prod.prec());
        CHECK(truncate(prod_ext, prod.prec()) == prod);
    }
}
