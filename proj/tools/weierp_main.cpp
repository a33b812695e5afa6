#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weierp/basis_io.hpp"
#include "weierp/decision.hpp"
#include "weierp/report.hpp"

namespace {

using namespace weierp;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecision = 3;

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v ? std::string(v) : fallback;
}

struct CommonOpts {
    std::string basis_file;
    std::string data_dir = env_or("WEIERP_DATA_DIR", "data/bases");
    std::string cache_dir = env_or("WEIERP_CACHE_DIR", env_or("HOME", ".") + "/.cache/weierp");
    std::string base_url = env_or("WEIERP_BASE_URL", "https://www.lmfdb.org/api");
    bool offline = false;
    long precision = 0;  // 0 = use everything the source provides
    std::string method = "both";
    bool allow_hyperelliptic_g2_m4 = false;
    bool verbose = false;
    std::string format = "text";
};

void add_source_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--basis-file", o.basis_file, "explicit basis file for the level");
    cmd->add_option("--data-dir", o.data_dir, "directory with bundled basis fixtures");
    cmd->add_option("--cache-dir", o.cache_dir, "on-disk cache for fetched bases");
    cmd->add_option("--base-url", o.base_url, "HTTP endpoint serving q-expansion bases");
    cmd->add_flag("--offline", o.offline, "never touch the network");
    cmd->add_option("--precision", o.precision, "work at exactly this q-expansion precision");
    cmd->add_option("--method", o.method, "echelon|wronskian|both")
        ->check(CLI::IsMember({"echelon", "wronskian", "both"}));
    cmd->add_flag("--allow-hyperelliptic-g2-m4", o.allow_hyperelliptic_g2_m4,
                  "run the one hyperelliptic case (g=2, m=4) the method still covers");
    cmd->add_flag("--verbose", o.verbose, "print per-row detail / per-cell progress");
}

Method parse_method(const std::string& s) {
    if (s == "echelon") return Method::Echelon;
    if (s == "wronskian") return Method::Wronskian;
    return Method::Both;
}

DecideOptions decide_options(const CommonOpts& o) {
    DecideOptions opts;
    opts.method = parse_method(o.method);
    if (o.precision > 0) opts.precision = o.precision;
    opts.allow_hyperelliptic_g2_m4 = o.allow_hyperelliptic_g2_m4;
    return opts;
}

// file > bundled fixture > HTTP fetch
BasisProvider make_provider(const CommonOpts& o) {
    return [o](long level, long min_prec) -> BasisSet {
        if (!o.basis_file.empty()) {
            BasisSet b = load_basis(o.basis_file);
            if (b.level != level)
                throw ValidationError("basis file is for level " + std::to_string(b.level) +
                                      ", requested " + std::to_string(level));
            return b;
        }
        auto bundled = bundled_basis_path(o.data_dir, level);
        if (std::filesystem::exists(bundled)) {
            BasisSet b = load_basis(bundled);
            if (b.prec() >= min_prec) return b;
        }
        FetchOptions fo;
        fo.base_url = o.base_url;
        fo.cache_dir = o.cache_dir;
        fo.offline = o.offline;
        return fetch_basis(level, min_prec, fo);
    };
}

bool parse_level_range(const std::string& spec, std::vector<long>& out) {
    auto dots = spec.find("..");
    try {
        if (dots != std::string::npos) {
            long a = std::stol(spec.substr(0, dots));
            long b = std::stol(spec.substr(dots + 2));
            if (a < 1 || b < a) return false;
            for (long n = a; n <= b; ++n) out.push_back(n);
            return true;
        }
        std::istringstream is(spec);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) continue;
            long n = std::stol(tok);
            if (n < 1) return false;
            out.push_back(n);
        }
        return !out.empty();
    } catch (const std::exception&) {
        return false;
    }
}

int run_decide(const CommonOpts& o, long level, long weight) {
    auto outcome = decide(level, weight, make_provider(o), decide_options(o));
    BatchRecord rec{level, weight, outcome.verdict, true, ""};
    switch (*parse_format(o.format)) {
        case OutputFormat::Text: std::cout << render_text_report(outcome, o.verbose); break;
        case OutputFormat::Jsonl: std::cout << record_to_json(rec) << "\n"; break;
        case OutputFormat::Csv:
            std::cout << csv_header() << "\n" << record_to_csv(rec) << "\n";
            break;
    }
    return kExitOk;
}

int run_scan(const CommonOpts& o, const std::vector<long>& levels, const std::vector<long>& weights,
             const std::string& out_path, bool force, int jobs) {
    OutputFormat fmt = *parse_format(o.format);
    if (fmt == OutputFormat::Text) {
        std::cerr << "scan requires --format csv or jsonl\n";
        return kExitUsage;
    }

    std::set<std::pair<long, long>> done;
    if (!force) done = recorded_cells(out_path);
    std::vector<long> todo_levels;
    std::vector<std::pair<long, long>> cells;
    for (long N : levels)
        for (long m : weights)
            if (!done.count({N, m})) cells.emplace_back(N, m);

    bool fresh = !std::filesystem::exists(out_path) ||
                 std::filesystem::file_size(out_path) == 0;
    std::ofstream out(out_path, std::ios::app);
    if (!out) {
        std::cerr << "cannot open results file " << out_path << "\n";
        return kExitError;
    }
    if (fmt == OutputFormat::Csv && fresh) out << csv_header() << "\n";

    // the provider may fetch and fill the cache; serialize it under jobs > 1
    auto base = make_provider(o);
    std::mutex provider_mu;
    BasisProvider provider = [&](long level, long min_prec) {
        std::lock_guard<std::mutex> lock(provider_mu);
        return base(level, min_prec);
    };

    std::vector<long> cell_levels, cell_weights;
    for (auto& [N, m] : cells) {
        cell_levels.push_back(N);
        cell_weights.push_back(m);
    }

    BatchSummary summary;
    // decide_batch walks a full grid; feed it the sparse cell list one row at
    // a time to keep idempotent re-runs exact
    for (size_t i = 0; i < cells.size();) {
        size_t j = i;
        std::vector<long> ws;
        while (j < cells.size() && cells[j].first == cells[i].first) {
            ws.push_back(cells[j].second);
            ++j;
        }
        auto part = decide_batch({cells[i].first}, ws, provider, decide_options(o),
                                 [&](const BatchRecord& rec) {
                                     out << (fmt == OutputFormat::Csv ? record_to_csv(rec)
                                                                      : record_to_json(rec))
                                         << "\n";
                                     if (o.verbose)
                                         std::cerr << "  " << rec.level << " m=" << rec.weight
                                                   << " -> "
                                                   << (rec.ok ? verdict_name(rec.verdict.verdict)
                                                              : "error: " + rec.error)
                                                   << "\n";
                                 },
                                 jobs);
        summary.is_weierstrass += part.is_weierstrass;
        summary.not_weierstrass += part.not_weierstrass;
        summary.not_applicable += part.not_applicable;
        summary.failed += part.failed;
        i = j;
    }
    out.flush();
    std::cout << "scan: " << cells.size() << " cells (" << (levels.size() * weights.size() - cells.size())
              << " already recorded), " << summary.is_weierstrass << " Weierstrass, "
              << summary.not_weierstrass << " not, " << summary.not_applicable
              << " not applicable, " << summary.failed << " failed -> " << out_path << "\n";
    return summary.failed == 0 ? kExitOk : kExitError;
}

int run_fetch(const CommonOpts& o, long level, long min_prec, const std::string& out_path) {
    FetchOptions fo;
    fo.base_url = o.base_url;
    fo.cache_dir = o.cache_dir;
    fo.offline = o.offline;
    BasisSet basis = fetch_basis(level, min_prec, fo);
    if (!out_path.empty()) write_basis(basis, out_path);
    std::cout << "level " << basis.level << ": genus " << basis.genus() << ", prec "
              << basis.prec() << (out_path.empty() ? "" : ", written to " + out_path) << "\n";
    return kExitOk;
}

int run_verify(const CommonOpts& o) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(o.data_dir)) {
        std::cerr << "no fixture directory " << o.data_dir << "\n";
        return kExitError;
    }
    int bad = 0, total = 0;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(o.data_dir))
        if (entry.path().extension() == ".txt") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
        ++total;
        try {
            BasisSet b = load_basis(path, /*expect_echelon=*/true);
            std::cout << "ok   " << path.filename().string() << "  level " << b.level
                      << " genus " << b.genus() << " prec " << b.prec() << "\n";
        } catch (const std::exception& e) {
            ++bad;
            std::cout << "FAIL " << path.filename().string() << "  " << e.what() << "\n";
        }
    }
    std::cout << total - bad << "/" << total << " fixtures valid\n";
    return bad == 0 ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decides whether the cusp at infinity of X_0(N) is an m/2-Weierstrass "
                 "point, by exact arithmetic on q-expansions"};
    app.require_subcommand(1);

    CommonOpts o;

    long level = 0, weight = 0;
    auto* cmd_decide = app.add_subcommand("decide", "verdict for one (level, weight)");
    cmd_decide->add_option("--level", level, "level N of Gamma_0(N)")->required();
    cmd_decide->add_option("--weight", weight, "even weight m >= 2")->required();
    cmd_decide->add_option("--format", o.format, "text|jsonl|csv")
        ->check(CLI::IsMember({"text", "jsonl", "csv"}));
    add_source_flags(cmd_decide, o);

    std::string levels_spec, weights_spec = "4";
    std::string out_path;
    bool force = false;
    int jobs = 1;
    auto* cmd_scan = app.add_subcommand("scan", "verdicts over a grid of levels and weights");
    cmd_scan->add_option("--levels", levels_spec, "range A..B or comma list")->required();
    cmd_scan->add_option("--weights", weights_spec, "comma list of even weights");
    cmd_scan->add_option("--out", out_path, "results file (appended; re-runs skip recorded cells)");
    cmd_scan->add_flag("--force", force, "recompute cells already in the results file");
    cmd_scan->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd_scan->add_option("--format", o.format, "csv|jsonl")
        ->check(CLI::IsMember({"text", "jsonl", "csv"}));
    add_source_flags(cmd_scan, o);

    long fetch_level = 0, min_prec = 2;
    std::string fetch_out;
    auto* cmd_fetch = app.add_subcommand("fetch-basis", "download and cache a weight-2 basis");
    cmd_fetch->add_option("--level", fetch_level, "level N")->required();
    cmd_fetch->add_option("--min-prec", min_prec, "minimum number of coefficients");
    cmd_fetch->add_option("--out", fetch_out, "also write the basis to this file");
    add_source_flags(cmd_fetch, o);

    auto* cmd_verify = app.add_subcommand("verify-fixtures", "validate every bundled basis file");
    add_source_flags(cmd_verify, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_decide->parsed()) {
            if (weight < 2 || weight % 2 != 0) {
                std::cerr << "decide: --weight must be an even integer >= 2\n";
                return kExitUsage;
            }
            if (level < 1) {
                std::cerr << "decide: --level must be >= 1\n";
                return kExitUsage;
            }
            return run_decide(o, level, weight);
        }
        if (cmd_scan->parsed()) {
            std::vector<long> levels, weights;
            if (!parse_level_range(levels_spec, levels)) {
                std::cerr << "scan: bad --levels '" << levels_spec << "'\n";
                return kExitUsage;
            }
            if (!parse_level_range(weights_spec, weights)) {
                std::cerr << "scan: bad --weights '" << weights_spec << "'\n";
                return kExitUsage;
            }
            for (long m : weights)
                if (m < 2 || m % 2 != 0) {
                    std::cerr << "scan: weights must be even integers >= 2\n";
                    return kExitUsage;
                }
            if (out_path.empty())
                out_path = o.format == "jsonl" ? "scan_results.jsonl" : "scan_results.csv";
            if (o.format == "text") o.format = "csv";
            return run_scan(o, levels, weights, out_path, force, jobs);
        }
        if (cmd_fetch->parsed()) return run_fetch(o, fetch_level, min_prec, fetch_out);
        if (cmd_verify->parsed()) return run_verify(o);
    } catch (const InsufficientPrecision& e) {
        std::cerr << "insufficient precision: " << e.what() << "\n"
                  << "recommended precision to re-fetch: " << e.recommended << "\n";
        return kExitPrecision;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitUsage;
}
