#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weierp/errors.hpp"
#include "weierp/rational.hpp"

namespace weierp {

// Truncated q-expansion sum_{0 <= n < prec} c_n q^n, known modulo O(q^prec).
//
// Precision is a hard contract: every operation computes the rigorous
// precision of its result, and reading a coefficient at or beyond the
// precision throws PrecisionExceeded instead of silently returning zero.
// Values are immutable after construction; all operations are pure.
class QSeries {
public:
    // zero series known modulo O(q^prec)
    explicit QSeries(long prec);

    // series with coefficients c[0..c.size()-1]; prec = c.size()
    explicit QSeries(std::vector<Rational> coeffs);

    // c * q^n + O(q^prec)
    static QSeries monomial(long n, const Rational& c, long prec);

    long prec() const { return prec_; }

    // coefficient of q^n; throws PrecisionExceeded for n >= prec
    const Rational& coefficient(long n) const;

    // smallest exponent with nonzero coefficient, or nullopt when the series
    // is zero to the known precision ("valuation >= prec", never a number)
    std::optional<long> valuation() const;

    // valuation when defined, otherwise prec (a rigorous lower bound)
    long valuation_floor() const;

    bool is_zero() const { return !valuation().has_value(); }

    // nonzero terms (exponent, coefficient), ascending exponents
    std::vector<std::pair<long, Rational>> terms() const;

    // exact structural equality: same precision and same coefficients
    friend bool operator==(const QSeries& a, const QSeries& b);
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    // "q^2 - 4*q^5 + O(q^11)"
    std::string str() const;

private:
    long prec_;
    std::vector<Rational> coeff_;  // coeff_[n] for n < prec_; size == prec_

    friend QSeries add(const QSeries&, const QSeries&);
    friend QSeries sub(const QSeries&, const QSeries&);
    friend QSeries neg(const QSeries&);
    friend QSeries mul(const QSeries&, const QSeries&);
    friend QSeries theta(const QSeries&);
    friend QSeries scale(const Rational&, const QSeries&);
    friend QSeries truncate(const QSeries&, long);
    friend QSeries shift(const QSeries&, long);
    friend QSeries div_by_nonzero(const QSeries&, const QSeries&);
};

// coefficientwise sum; result precision = min of the operand precisions
QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries neg(const QSeries& a);

// Cauchy product. Writing v(x) for the valuation of x when it exists and
// prec(x) otherwise (both are rigorous lower bounds on ord_q), the result is
// known modulo O(q^P) with
//     P = min(prec(a) + v(b), prec(b) + v(a)).
// Rationale: a = q^{v_a} A, b = q^{v_b} B with units A, B known to relative
// precision prec - v; the product has relative precision min of the two.
// When a factor is zero to its precision, v = prec makes P >= prec(a)+prec(b)
// bounded by the other term, which is still rigorous.
QSeries mul(const QSeries& a, const QSeries& b);

// theta = q d/dq: coefficient at q^n becomes n*c_n; precision unchanged
QSeries theta(const QSeries& a);

QSeries scale(const Rational& c, const QSeries& a);

// restrict to O(q^P); P must satisfy 1 <= P <= prec (larger P would claim
// knowledge that is not there and throws PrecisionExceeded)
QSeries truncate(const QSeries& a, long P);

// multiply by q^k (k >= 0), or exactly divide by q^{-k} (k < 0, requires
// valuation_floor >= -k); precision shifts by k
QSeries shift(const QSeries& a, long k);

// exact quotient a/b for provably nonzero b with v(b) <= valuation_floor(a);
// result precision min(prec(a) - v_b, prec(b) + v_a - 2 v_b)
QSeries div_by_nonzero(const QSeries& a, const QSeries& b);

}  // namespace weierp
