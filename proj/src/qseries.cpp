#include "weierp/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace weierp {

QSeries::QSeries(long prec) : prec_(prec) {
    if (prec < 1) throw Error("QSeries precision must be >= 1");
    coeff_.resize(static_cast<size_t>(prec));
}

QSeries::QSeries(std::vector<Rational> coeffs) : prec_(static_cast<long>(coeffs.size())), coeff_(std::move(coeffs)) {
    if (prec_ < 1) throw Error("QSeries precision must be >= 1");
}

QSeries QSeries::monomial(long n, const Rational& c, long prec) {
    QSeries out(prec);
    if (n < 0) throw Error("negative exponent");
    if (n >= prec) throw PrecisionExceeded(n, prec);
    out.coeff_[static_cast<size_t>(n)] = c;
    return out;
}

const Rational& QSeries::coefficient(long n) const {
    if (n < 0) throw Error("negative exponent");
    if (n >= prec_) throw PrecisionExceeded(n, prec_);
    return coeff_[static_cast<size_t>(n)];
}

std::optional<long> QSeries::valuation() const {
    for (long n = 0; n < prec_; ++n)
        if (coeff_[static_cast<size_t>(n)] != 0) return n;
    return std::nullopt;
}

long QSeries::valuation_floor() const { return valuation().value_or(prec_); }

std::vector<std::pair<long, Rational>> QSeries::terms() const {
    std::vector<std::pair<long, Rational>> out;
    for (long n = 0; n < prec_; ++n)
        if (coeff_[static_cast<size_t>(n)] != 0) out.emplace_back(n, coeff_[static_cast<size_t>(n)]);
    return out;
}

bool operator==(const QSeries& a, const QSeries& b) {
    return a.prec_ == b.prec_ && a.coeff_ == b.coeff_;
}

std::string QSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [n, c] : terms()) {
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (a != 1 || n == 0) {
            os << a.get_str();
            if (n > 0) os << "*";
        }
        if (n > 0) {
            os << "q";
            if (n > 1) os << "^" << n;
        }
    }
    if (!first) os << " + ";
    os << "O(q^" << prec_ << ")";
    return os.str();
}

QSeries add(const QSeries& a, const QSeries& b) {
    long prec = std::min(a.prec_, b.prec_);
    QSeries out(prec);
    for (long n = 0; n < prec; ++n)
        out.coeff_[static_cast<size_t>(n)] = a.coeff_[static_cast<size_t>(n)] + b.coeff_[static_cast<size_t>(n)];
    return out;
}

QSeries sub(const QSeries& a, const QSeries& b) {
    long prec = std::min(a.prec_, b.prec_);
    QSeries out(prec);
    for (long n = 0; n < prec; ++n)
        out.coeff_[static_cast<size_t>(n)] = a.coeff_[static_cast<size_t>(n)] - b.coeff_[static_cast<size_t>(n)];
    return out;
}

QSeries neg(const QSeries& a) {
    QSeries out(a.prec_);
    for (long n = 0; n < a.prec_; ++n) out.coeff_[static_cast<size_t>(n)] = -a.coeff_[static_cast<size_t>(n)];
    return out;
}

QSeries mul(const QSeries& a, const QSeries& b) {
    long va = a.valuation_floor();
    long vb = b.valuation_floor();
    long prec = std::min(a.prec_ + vb, b.prec_ + va);
    QSeries out(prec);
    long na_end = std::min(a.prec_, prec);
    for (long n1 = va; n1 < na_end; ++n1) {
        const Rational& c1 = a.coeff_[static_cast<size_t>(n1)];
        if (c1 == 0) continue;
        long n2_end = std::min(b.prec_, prec - n1);
        for (long n2 = vb; n2 < n2_end; ++n2) {
            const Rational& c2 = b.coeff_[static_cast<size_t>(n2)];
            if (c2 == 0) continue;
            out.coeff_[static_cast<size_t>(n1 + n2)] += c1 * c2;
        }
    }
    return out;
}

QSeries theta(const QSeries& a) {
    QSeries out(a.prec_);
    for (long n = 1; n < a.prec_; ++n)
        out.coeff_[static_cast<size_t>(n)] = a.coeff_[static_cast<size_t>(n)] * n;
    return out;
}

QSeries scale(const Rational& c, const QSeries& a) {
    QSeries out(a.prec_);
    if (c == 0) return out;
    for (long n = 0; n < a.prec_; ++n) out.coeff_[static_cast<size_t>(n)] = c * a.coeff_[static_cast<size_t>(n)];
    return out;
}

QSeries truncate(const QSeries& a, long P) {
    if (P < 1) throw Error("truncate: precision must be >= 1");
    if (P > a.prec_) throw PrecisionExceeded(P - 1, a.prec_);
    QSeries out(P);
    std::copy(a.coeff_.begin(), a.coeff_.begin() + P, out.coeff_.begin());
    return out;
}

QSeries shift(const QSeries& a, long k) {
    if (k >= 0) {
        QSeries out(a.prec_ + k);
        for (long n = 0; n < a.prec_; ++n) out.coeff_[static_cast<size_t>(n + k)] = a.coeff_[static_cast<size_t>(n)];
        return out;
    }
    long drop = -k;
    if (a.valuation_floor() < drop) throw Error("shift: series not divisible by q^" + std::to_string(drop));
    if (a.prec_ - drop < 1) throw PrecisionExceeded(drop, a.prec_);
    QSeries out(a.prec_ - drop);
    for (long n = drop; n < a.prec_; ++n) out.coeff_[static_cast<size_t>(n - drop)] = a.coeff_[static_cast<size_t>(n)];
    return out;
}

QSeries div_by_nonzero(const QSeries& a, const QSeries& b) {
    auto vb_opt = b.valuation();
    if (!vb_opt) throw Error("division by a series that is zero to its precision");
    long vb = *vb_opt;
    long va = a.valuation_floor();
    if (va < vb) throw Error("division would leave the power series ring");
    // strip q^vb from both, then long division by the unit part of b
    QSeries A = shift(a, -vb);
    QSeries U = shift(b, -vb);
    long prec = std::min(A.prec(), U.prec() + (va - vb));
    QSeries out(prec);
    const Rational& u0 = U.coeff_[0];
    for (long n = 0; n < prec; ++n) {
        Rational acc = n < A.prec() ? A.coeff_[static_cast<size_t>(n)] : Rational(0);
        for (long k = std::max(0L, n - (U.prec() - 1)); k < n; ++k)
            acc -= out.coeff_[static_cast<size_t>(k)] * U.coeff_[static_cast<size_t>(n - k)];
        out.coeff_[static_cast<size_t>(n)] = acc / u0;
    }
    return out;
}

}  // namespace weierp
