#include "weierp/decision.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

namespace weierp {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::IsWeierstrass: return "IsWeierstrass";
        case Verdict::NotWeierstrass: return "NotWeierstrass";
        case Verdict::NotApplicable: return "NotApplicable";
    }
    return "?";
}

namespace {

DecideOutcome not_applicable(long N, long m, const std::string& reason) {
    DecideOutcome out;
    out.verdict.level = N;
    out.verdict.weight = m;
    out.verdict.verdict = Verdict::NotApplicable;
    out.verdict.reason = reason;
    return out;
}

}  // namespace

DecideOutcome decide_with_basis(const BasisSet& basis, long m, const DecideOptions& opts) {
    const long N = basis.level;
    if (m < 2 || m % 2 != 0) throw Error("decide: even weight m >= 2 required");

    CurveClass cls = classify(N);
    if (cls.genus_band != GenusBand::GeTwo)
        return not_applicable(N, m, "genus <= 1 - no Weierstrass points");

    const long g = basis.genus();
    if (!cls.nonhyperelliptic && m >= 4) {
        bool g2m4_override = opts.allow_hyperelliptic_g2_m4 && m == 4 && g == 2;
        if (!g2m4_override)
            return not_applicable(N, m,
                                  "hyperelliptic - monomial method invalid" +
                                      std::string(m == 4 && g == 2
                                                      ? " (rerun with the g=2, m=4 override)"
                                                      : ""));
    }

    const long required = required_precision(g, m, opts.method);
    long use_prec = basis.prec();
    if (opts.precision) {
        use_prec = *opts.precision;
        if (use_prec < required)
            throw InsufficientPrecision("precision override " + std::to_string(use_prec) +
                                            " below the required minimum",
                                        required);
    }
    if (basis.prec() < use_prec)
        throw InsufficientPrecision("basis for level " + std::to_string(N) + " carries only " +
                                        std::to_string(basis.prec()) + " coefficients",
                                    std::max(required, use_prec));
    if (use_prec < required)
        throw InsufficientPrecision("basis for level " + std::to_string(N) + " carries only " +
                                        std::to_string(use_prec) + " coefficients",
                                    required);

    BasisSet working = basis;
    if (use_prec < basis.prec())
        for (auto& f : working.forms) f.an.resize(static_cast<size_t>(use_prec - 1));

    DecideOutcome out;
    out.verdict.level = N;
    out.verdict.weight = m;
    out.verdict.genus = g;
    out.verdict.precision_used = use_prec;

    const long d = m / 2;
    const long monomial_prec = use_prec + d - 1;  // full rigorous product precision
    DecisionDetail detail;
    try {
        detail.monomials = compute_monomials(working, m, monomial_prec);
        CoeffMatrix matrix = build_matrix(detail.monomials, g, m);
        detail.echelon = reduce(matrix, detail.monomials);
    } catch (const InsufficientPrecision& e) {
        throw InsufficientPrecision("level " + std::to_string(N) + ", m = " + std::to_string(m) +
                                        ": " + e.what(),
                                    std::max(required, e.recommended));
    }

    const long t_expected = dim_smh(g, m);
    bool monomial_method_exact = cls.nonhyperelliptic || m == 2 || (m == 4 && g == 2);
    if (monomial_method_exact && detail.echelon.rank != t_expected)
        throw DataIntegrityError("level " + std::to_string(N) + ", m = " + std::to_string(m) +
                                 ": echelon rank " + std::to_string(detail.echelon.rank) +
                                 " != dim S^H = " + std::to_string(t_expected));

    out.verdict.t = detail.echelon.rank;
    out.verdict.pivots = detail.echelon.pivots;

    // pivot criterion: not a Weierstrass point iff the pivots are exactly
    // the consecutive run m/2, m/2+1, ..., m/2+t-1
    bool consecutive = true;
    for (size_t u = 0; u < out.verdict.pivots.size(); ++u)
        if (out.verdict.pivots[u] != d + static_cast<long>(u)) {
            consecutive = false;
            break;
        }
    // equivalent threshold form: a gap exists iff i_t >= m/2 + t
    bool gap = out.verdict.pivots.back() >= d + detail.echelon.rank;
    if (consecutive == gap)
        throw DataIntegrityError("pivot criterion self-check failed");

    std::optional<bool> echelon_verdict, wronskian_verdict;
    if (opts.method == Method::Echelon || opts.method == Method::Both) {
        echelon_verdict = !consecutive;
        out.verdict.methods_run.push_back("echelon");
    }
    if (opts.method == Method::Wronskian || opts.method == Method::Both) {
        WronskianDecision wd;
        try {
            wd = weierstrass_by_wronskian(detail.echelon, m);
        } catch (const InsufficientPrecision& e) {
            // e.recommended counts missing coefficients on top of the basis
            throw InsufficientPrecision("level " + std::to_string(N) + ", m = " +
                                            std::to_string(m) + ": " + e.what(),
                                        use_prec + std::max(1L, e.recommended));
        }
        detail.wronskian = wd;
        wronskian_verdict = wd.is_weierstrass;
        out.verdict.methods_run.push_back("wronskian");
    }

    if (echelon_verdict && wronskian_verdict && *echelon_verdict != *wronskian_verdict) {
        out.verdict.agreement = false;
        throw MethodDisagreementError("level " + std::to_string(N) + ", m = " + std::to_string(m) +
                                      ": echelon and Wronskian verdicts differ; "
                                      "this is a bug or corrupt data");
    }
    bool is_w = echelon_verdict ? *echelon_verdict : *wronskian_verdict;
    out.verdict.verdict = is_w ? Verdict::IsWeierstrass : Verdict::NotWeierstrass;
    out.detail = std::move(detail);
    return out;
}

DecideOutcome decide(long N, long m, const BasisProvider& provider, const DecideOptions& opts) {
    if (N < 1) throw Error("decide: level must be >= 1");
    if (m < 2 || m % 2 != 0) throw Error("decide: even weight m >= 2 required");

    CurveClass cls = classify(N);
    if (cls.genus_band != GenusBand::GeTwo)
        return not_applicable(N, m, "genus <= 1 - no Weierstrass points");
    if (!cls.nonhyperelliptic && m >= 4 && !opts.allow_hyperelliptic_g2_m4)
        return not_applicable(N, m, "hyperelliptic - monomial method invalid");

    // worst case over guard outcomes: the g=2 override needs the basis anyway
    long min_prec = opts.precision.value_or(0);
    // genus is only known after the basis arrives, so ask the provider with
    // the precision for the largest plausible genus and validate after
    BasisSet basis = provider(N, min_prec);
    if (basis.genus() < 1)
        throw ValidationError("provider returned an empty basis for level " + std::to_string(N));
    long required = required_precision(basis.genus(), m, opts.method);
    if (basis.prec() < std::max(required, min_prec))
        basis = provider(N, std::max(required, min_prec));
    return decide_with_basis(basis, m, opts);
}

BatchSummary decide_batch(const std::vector<long>& levels, const std::vector<long>& weights,
                          const BasisProvider& provider, const DecideOptions& opts,
                          const RecordSink& sink, int jobs) {
    std::vector<std::pair<long, long>> cells;
    for (long N : levels)
        for (long m : weights) cells.emplace_back(N, m);

    std::vector<BatchRecord> records(cells.size());
    auto run_cell = [&](size_t i) {
        auto [N, m] = cells[i];
        BatchRecord rec;
        rec.level = N;
        rec.weight = m;
        try {
            rec.verdict = decide(N, m, provider, opts).verdict;
            rec.ok = true;
        } catch (const std::exception& e) {
            rec.ok = false;
            rec.error = e.what();
            rec.verdict.level = N;
            rec.verdict.weight = m;
        }
        records[i] = std::move(rec);
    };

    if (jobs <= 1) {
        for (size_t i = 0; i < cells.size(); ++i) run_cell(i);
    } else {
        std::mutex mu;
        size_t next = 0;
        auto worker = [&]() {
            while (true) {
                size_t i;
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (next >= cells.size()) return;
                    i = next++;
                }
                run_cell(i);
            }
        };
        std::vector<std::thread> pool;
        for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    BatchSummary summary;
    for (const auto& rec : records) {
        sink(rec);
        if (!rec.ok) {
            ++summary.failed;
            continue;
        }
        switch (rec.verdict.verdict) {
            case Verdict::IsWeierstrass: ++summary.is_weierstrass; break;
            case Verdict::NotWeierstrass: ++summary.not_weierstrass; break;
            case Verdict::NotApplicable: ++summary.not_applicable; break;
        }
    }
    return summary;
}

}  // namespace weierp
