#include "weierp/monomials.hpp"

#include <map>
#include <sstream>

#include "weierp/curve_tables.hpp"

namespace weierp {

std::vector<ExponentVector> enumerate_exponents(long g, long d) {
    if (g < 1 || d < 1) throw Error("enumerate_exponents: need g >= 1 and d >= 1");
    std::vector<ExponentVector> out;
    ExponentVector cur(static_cast<size_t>(g));
    // lexicographically descending: pick the first entry from d down to 0
    auto rec = [&](auto&& self, long slot, long rem) -> void {
        if (slot == g - 1) {
            cur[static_cast<size_t>(slot)] = static_cast<int>(rem);
            out.push_back(cur);
            return;
        }
        for (long k = rem; k >= 0; --k) {
            cur[static_cast<size_t>(slot)] = static_cast<int>(k);
            self(self, slot + 1, rem - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

std::string monomial_name(const ExponentVector& alpha) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        if (!first) os << "*";
        os << "f" << i;
        if (alpha[i] > 1) os << "^" << alpha[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::vector<MonomialProduct> compute_monomials(const BasisSet& basis, long m, long prec) {
    if (m < 2 || m % 2 != 0) throw Error("compute_monomials: even m >= 2 required");
    long g = basis.genus();
    if (g < 1) throw Error("compute_monomials: empty basis");
    long d = m / 2;
    // a product of d cusp forms of precision P and valuation >= 1 is rigorous
    // through at least P + d - 1 coefficients, so this is the hard ceiling
    if (prec > basis.prec() + d - 1)
        throw InsufficientPrecision("basis carries " + std::to_string(basis.prec()) +
                                        " coefficients, monomial precision " +
                                        std::to_string(prec) + " unreachable",
                                    prec - d + 1);

    std::vector<QSeries> forms;
    forms.reserve(static_cast<size_t>(g));
    for (long i = 0; i < g; ++i)
        forms.push_back(basis.forms[static_cast<size_t>(i)].series(basis.prec()));

    // cache of untruncated sub-products keyed by exponent vector; products
    // keep the full precision the mul() rule grants
    std::map<ExponentVector, QSeries> cache;
    auto product = [&](auto&& self, const ExponentVector& alpha) -> QSeries {
        auto hit = cache.find(alpha);
        if (hit != cache.end()) return hit->second;
        long last = -1;
        long total = 0;
        for (size_t i = 0; i < alpha.size(); ++i) {
            total += alpha[i];
            if (alpha[i] > 0) last = static_cast<long>(i);
        }
        if (total == 1) return forms[static_cast<size_t>(last)];
        ExponentVector prev = alpha;
        --prev[static_cast<size_t>(last)];
        QSeries out = mul(self(self, prev), forms[static_cast<size_t>(last)]);
        cache.emplace(alpha, out);
        return out;
    };

    std::vector<MonomialProduct> out;
    for (auto& alpha : enumerate_exponents(g, d)) {
        QSeries full = product(product, alpha);
        if (full.prec() < prec)
            throw InsufficientPrecision("monomial " + monomial_name(alpha) + " only known to O(q^" +
                                            std::to_string(full.prec()) + ")",
                                        basis.prec() + (prec - full.prec()));
        QSeries series = truncate(full, prec);
        // product of m/2 cusp forms: valuation >= m/2, or the data is corrupt
        if (series.valuation_floor() < d)
            throw DataIntegrityError("monomial " + monomial_name(alpha) +
                                     " has valuation < m/2; corrupted basis data");
        out.push_back(MonomialProduct{alpha, std::move(series)});
    }
    return out;
}

}  // namespace weierp
