#pragma once

#include "weierp/errors.hpp"

namespace weierp {

enum class GenusBand { Zero, One, GeTwo };

struct CurveClass {
    long level;
    GenusBand genus_band;
    // meaningful only when genus_band == GeTwo
    bool nonhyperelliptic;
};

// Classification of X_0(N) from the known tables:
//   genus 0  for N in {1..10, 12, 13, 16, 18, 25}
//   genus 1  for N in {11, 14, 15, 17, 19, 20, 21, 24, 27, 32, 36, 49}
//   otherwise genus >= 2, and the curve is non-hyperelliptic exactly for
//   N in {34, 38, 42, 43, 44, 45, 51..58, 60..70} or N >= 72.
CurveClass classify(long N);

// dim of the weight-m subspace cut out by holomorphic m/2-differentials:
// 0 if g = 0; g if m = 2 or g = 1; (m-1)(g-1) if m >= 4 and g >= 2.
long dim_smh(long g, long m);

// binom(g + m/2 - 1, m/2): number of degree-m/2 monomials in g weight-2 forms
long monomial_count(long g, long m);

}  // namespace weierp
