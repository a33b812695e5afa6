#include "weierp/curve_tables.hpp"

#include <set>

#include "weierp/rational.hpp"

namespace weierp {

namespace {

const std::set<long> kGenusZero = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25};
const std::set<long> kGenusOne = {11, 14, 15, 17, 19, 20, 21, 24, 27, 32, 36, 49};
const std::set<long> kNonHyperelliptic = {
    34, 38, 42, 43, 44, 45, 51, 52, 53, 54, 55, 56, 57, 58,
    60, 61, 62, 63, 64, 65, 66, 67, 68, 69, 70};

}  // namespace

CurveClass classify(long N) {
    if (N < 1) throw Error("classify: level must be >= 1");
    CurveClass out{N, GenusBand::GeTwo, false};
    if (kGenusZero.count(N)) {
        out.genus_band = GenusBand::Zero;
    } else if (kGenusOne.count(N)) {
        out.genus_band = GenusBand::One;
    } else {
        out.nonhyperelliptic = N >= 72 || kNonHyperelliptic.count(N) != 0;
    }
    return out;
}

long dim_smh(long g, long m) {
    if (g < 0 || m < 2 || m % 2 != 0) throw Error("dim_smh: need g >= 0 and even m >= 2");
    if (g == 0) return 0;
    if (m == 2 || g == 1) return g;
    return (m - 1) * (g - 1);
}

long monomial_count(long g, long m) {
    if (g < 1 || m < 2 || m % 2 != 0) throw Error("monomial_count: need g >= 1 and even m >= 2");
    long d = m / 2;
    Integer num = 1;
    for (long i = 0; i < d; ++i) num *= g - 1 + d - i;
    for (long i = 2; i <= d; ++i) num /= i;
    if (!num.fits_slong_p()) throw Error("monomial_count: overflow");
    return num.get_si();
}

}  // namespace weierp
