#pragma once

#include <vector>

#include "weierp/basis_io.hpp"
#include "weierp/qseries.hpp"

namespace weierp {

// exponent vector alpha with sum(alpha) = m/2, one entry per basis form
using ExponentVector = std::vector<int>;

struct MonomialProduct {
    ExponentVector alpha;
    QSeries series;
};

// All binom(g+d-1, d) exponent vectors with g entries summing to d, in
// lexicographically descending order (f0 heaviest first): for g = 3, d = 2
// that is f0^2, f0 f1, f0 f2, f1^2, f1 f2, f2^2.
std::vector<ExponentVector> enumerate_exponents(long g, long d);

// q-expansions of the monomials f0^a0 ... f_{g-1}^a_{g-1} over the basis,
// each truncated to `prec`. Shared sub-products are cached; the cached path
// equals the naive left-fold of mul() exactly.
std::vector<MonomialProduct> compute_monomials(const BasisSet& basis, long m, long prec);

// printable name like "f0^2*f1" for an exponent vector
std::string monomial_name(const ExponentVector& alpha);

}  // namespace weierp
