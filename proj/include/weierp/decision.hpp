#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weierp/basis_io.hpp"
#include "weierp/curve_tables.hpp"
#include "weierp/echelon.hpp"
#include "weierp/wronskian.hpp"

namespace weierp {

enum class Verdict { IsWeierstrass, NotWeierstrass, NotApplicable };

std::string verdict_name(Verdict v);

struct WeierstrassVerdict {
    long level = 0;
    long weight = 0;              // m
    long genus = 0;               // 0 when not applicable before basis load
    long t = 0;                   // dim S^H_m
    std::vector<long> pivots;
    Verdict verdict = Verdict::NotApplicable;
    std::string reason;           // set for NotApplicable
    std::vector<std::string> methods_run;  // subset of {"echelon", "wronskian"}
    bool agreement = true;
    long precision_used = 0;
};

// full pipeline intermediates, kept for verbose reporting and tests
struct DecisionDetail {
    std::vector<MonomialProduct> monomials;
    EchelonResult echelon;
    std::optional<WronskianDecision> wronskian;
};

struct DecideOptions {
    Method method = Method::Both;
    std::optional<long> precision;        // truncate the basis to this precision
    bool allow_hyperelliptic_g2_m4 = false;
};

// provides a validated BasisSet for a level with at least min_prec coefficients
using BasisProvider = std::function<BasisSet(long level, long min_prec)>;

struct DecideOutcome {
    WeierstrassVerdict verdict;
    std::optional<DecisionDetail> detail;
};

// Verdict for (N, m): guards for genus 0/1 and hyperelliptic levels, then
// monomials -> matrix -> echelon pivot criterion, plus the Wronskian
// criterion when requested. Both criteria must agree or the run aborts.
DecideOutcome decide(long N, long m, const BasisProvider& provider, const DecideOptions& opts = {});

// same pipeline on an already-acquired basis (guards still apply)
DecideOutcome decide_with_basis(const BasisSet& basis, long m, const DecideOptions& opts = {});

struct BatchRecord {
    long level;
    long weight;
    WeierstrassVerdict verdict;  // valid when ok
    bool ok;
    std::string error;           // set when !ok
};

struct BatchSummary {
    long is_weierstrass = 0;
    long not_weierstrass = 0;
    long not_applicable = 0;
    long failed = 0;
};

using RecordSink = std::function<void(const BatchRecord&)>;

// Runs decide over the (levels x weights) grid; appends one record per cell
// to the sink in grid order; individual failures are recorded and the batch
// continues. `jobs` > 1 evaluates cells on a worker pool.
BatchSummary decide_batch(const std::vector<long>& levels, const std::vector<long>& weights,
                          const BasisProvider& provider, const DecideOptions& opts,
                          const RecordSink& sink, int jobs = 1);

}  // namespace weierp
