#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "weierp/errors.hpp"
#include "weierp/qseries.hpp"
#include "weierp/rational.hpp"

namespace weierp {

// One weight-2 cusp form: q-expansion sum_{n>=1} a_n q^n with integer
// coefficients a_1..a_{prec-1} (a_0 = 0, cusp form).
struct FormRecord {
    std::string label;
    std::vector<Integer> an;  // an[i] = a_{i+1}
    long prec() const { return static_cast<long>(an.size()) + 1; }

    QSeries series(long P) const;  // truncated to O(q^P), P <= prec()
};

// A validated basis f_0, ..., f_{g-1} of S_2(Gamma_0(N)) as q-expansions.
struct BasisSet {
    long level = 0;
    long weight = 2;
    std::vector<FormRecord> forms;
    long genus() const { return static_cast<long>(forms.size()); }
    long prec() const;  // common precision (min over forms)
};

// Validates the structural invariants shared by loaded and fetched bases:
// consistent level, nonzero forms with valuation >= 1, pairwise linear
// independence up to the common precision, and consistency with the genus
// tables where they apply. With expect_echelon, leading exponents must be
// pairwise distinct. Throws ValidationError.
void validate_basis(const BasisSet& basis, bool expect_echelon = false);

// Basis file format (UTF-8 text, whitespace-insensitive around commas):
//   level=<N> weight=2 genus=<g> prec=<P>
//   form 0: a1,a2,...,a_{P-1}
//   ...
BasisSet load_basis(const std::filesystem::path& path, bool expect_echelon = false);
void write_basis(const BasisSet& basis, const std::filesystem::path& path);

enum class Method { Echelon, Wronskian, Both };

// Minimal precision of the weight-2 basis that guarantees every downstream
// coefficient read succeeds for the given method, guard included:
// the echelon matrix needs every degree-(m/2) monomial through exponent
// B = m/2 + m(g-1), and the Wronskian needs the echelon rows to carry at
// least a few coefficients past the largest possible pivot; both propagate
// back to m(g-1) + 2 + guard through the product precision rule.
long required_precision(long g, long m, Method method);

struct FetchOptions {
    std::string base_url;            // e.g. "http://localhost:8080/api"
    std::filesystem::path cache_dir;
    bool offline = false;
};

// Fetch the basis for a level from an HTTP endpoint serving JSON of the form
//   {"level": N, "weight": 2, "genus": g, "prec": P,
//    "forms": [{"label": "...", "an": [a1, ...]}, ...]}
// at GET <base_url>/s2basis/<N>?min_prec=<P>. Successful fetches are cached
// on disk in the native file format, and the cache is consulted first, so
// subsequent runs are offline.
BasisSet fetch_basis(long level, long min_prec, const FetchOptions& opts);

// cache file used by fetch_basis
std::filesystem::path cache_file_for(const std::filesystem::path& cache_dir, long level);

// bundled fixture lookup: <data_dir>/gamma0_<N>.txt
std::filesystem::path bundled_basis_path(const std::filesystem::path& data_dir, long level);

}  // namespace weierp
