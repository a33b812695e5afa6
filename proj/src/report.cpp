#include "weierp/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace weierp {

std::optional<OutputFormat> parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "jsonl") return OutputFormat::Jsonl;
    if (name == "csv") return OutputFormat::Csv;
    return std::nullopt;
}

std::string join_pivots(const std::vector<long>& pivots) {
    std::ostringstream os;
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (i) os << ",";
        os << pivots[i];
    }
    return os.str();
}

std::vector<long> split_pivots(const std::string& s) {
    std::vector<long> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stol(tok));
    }
    return out;
}

namespace {

std::string join_methods(const std::vector<std::string>& methods) {
    std::ostringstream os;
    for (size_t i = 0; i < methods.size(); ++i) {
        if (i) os << "+";
        os << methods[i];
    }
    return os.str();
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string csv_header() {
    return "level,weight,genus,t,pivots,verdict,methods,agreement,status,error";
}

std::string record_to_csv(const BatchRecord& rec) {
    std::ostringstream os;
    const auto& v = rec.verdict;
    os << rec.level << "," << rec.weight << "," << v.genus << "," << v.t << ","
       << csv_quote(join_pivots(v.pivots)) << ","
       << (rec.ok ? verdict_name(v.verdict) : std::string("Error")) << ","
       << csv_quote(join_methods(v.methods_run)) << "," << (v.agreement ? "true" : "false") << ","
       << (rec.ok ? "ok" : "error") << "," << csv_quote(rec.ok ? v.reason : rec.error);
    return os.str();
}

std::string record_to_json(const BatchRecord& rec) {
    nlohmann::json j;
    const auto& v = rec.verdict;
    j["level"] = rec.level;
    j["weight"] = rec.weight;
    j["genus"] = v.genus;
    j["t"] = v.t;
    j["pivots"] = join_pivots(v.pivots);
    j["verdict"] = rec.ok ? verdict_name(v.verdict) : "Error";
    j["methods"] = join_methods(v.methods_run);
    j["agreement"] = v.agreement;
    j["status"] = rec.ok ? "ok" : "error";
    j["error"] = rec.ok ? v.reason : rec.error;
    return j.dump();
}

namespace {

std::optional<BatchRecord> parse_json_record(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (!j.is_object() || !j.contains("level") || !j.contains("weight")) return std::nullopt;
    BatchRecord rec;
    rec.level = j["level"].get<long>();
    rec.weight = j["weight"].get<long>();
    rec.verdict.level = rec.level;
    rec.verdict.weight = rec.weight;
    rec.verdict.genus = j.value("genus", 0L);
    rec.verdict.t = j.value("t", 0L);
    rec.verdict.pivots = split_pivots(j.value("pivots", std::string()));
    rec.verdict.agreement = j.value("agreement", true);
    std::string verdict = j.value("verdict", std::string("Error"));
    rec.ok = j.value("status", std::string()) == "ok";
    if (verdict == "IsWeierstrass") rec.verdict.verdict = Verdict::IsWeierstrass;
    else if (verdict == "NotWeierstrass") rec.verdict.verdict = Verdict::NotWeierstrass;
    else rec.verdict.verdict = Verdict::NotApplicable;
    std::string methods = j.value("methods", std::string());
    std::istringstream ms(methods);
    std::string tok;
    while (std::getline(ms, tok, '+'))
        if (!tok.empty()) rec.verdict.methods_run.push_back(tok);
    if (rec.ok) rec.verdict.reason = j.value("error", std::string());
    else rec.error = j.value("error", std::string());
    return rec;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::optional<BatchRecord> parse_csv_record(const std::string& line) {
    auto fields = split_csv_line(line);
    if (fields.size() != 10) return std::nullopt;
    BatchRecord rec;
    try {
        rec.level = std::stol(fields[0]);
        rec.weight = std::stol(fields[1]);
        rec.verdict.genus = std::stol(fields[2]);
        rec.verdict.t = std::stol(fields[3]);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    rec.verdict.level = rec.level;
    rec.verdict.weight = rec.weight;
    rec.verdict.pivots = split_pivots(fields[4]);
    if (fields[5] == "IsWeierstrass") rec.verdict.verdict = Verdict::IsWeierstrass;
    else if (fields[5] == "NotWeierstrass") rec.verdict.verdict = Verdict::NotWeierstrass;
    else rec.verdict.verdict = Verdict::NotApplicable;
    std::istringstream ms(fields[6]);
    std::string tok;
    while (std::getline(ms, tok, '+'))
        if (!tok.empty()) rec.verdict.methods_run.push_back(tok);
    rec.verdict.agreement = fields[7] == "true";
    rec.ok = fields[8] == "ok";
    if (rec.ok) rec.verdict.reason = fields[9];
    else rec.error = fields[9];
    return rec;
}

}  // namespace

std::optional<BatchRecord> parse_record_line(const std::string& line) {
    if (line.empty()) return std::nullopt;
    if (line.front() == '{') return parse_json_record(line);
    if (line == csv_header()) return std::nullopt;
    return parse_csv_record(line);
}

std::set<std::pair<long, long>> recorded_cells(const std::filesystem::path& file) {
    std::set<std::pair<long, long>> out;
    std::ifstream in(file);
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        auto rec = parse_record_line(line);
        if (rec) out.emplace(rec->level, rec->weight);
    }
    return out;
}

namespace {

// "-f1^2 + f0*f2 + 2*f1*f2" from a transform row over the monomial labels
std::string combination_name(const std::vector<Rational>& trow,
                             const std::vector<MonomialProduct>& monomials) {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < trow.size(); ++j) {
        const Rational& c = trow[j];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (a != 1) os << a.get_str() << "*";
        os << monomial_name(monomials[j].alpha);
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

std::string render_text_report(const DecideOutcome& outcome, bool verbose) {
    const auto& v = outcome.verdict;
    std::ostringstream os;
    os << "X_0(" << v.level << "), m = " << v.weight << ":\n";
    if (v.verdict == Verdict::NotApplicable) {
        os << "  not applicable: " << v.reason << "\n";
        return os.str();
    }
    os << "  genus g = " << v.genus << ", t = dim S^H_" << v.weight << " = " << v.t << "\n";
    os << "  precision used: O(q^" << v.precision_used << ")\n";
    os << "  pivot exponents: " << join_pivots(v.pivots) << "\n";
    os << "  methods: ";
    for (size_t i = 0; i < v.methods_run.size(); ++i)
        os << (i ? ", " : "") << v.methods_run[i];
    os << (v.methods_run.size() > 1 ? (v.agreement ? " (agree)" : " (DISAGREE)") : "") << "\n";
    if (outcome.detail && outcome.detail->wronskian) {
        const auto& w = *outcome.detail->wronskian;
        os << "  wronskian: ord_q(W) = " << w.ord << ", threshold " << (w.threshold + 1)
           << " (pivot sum " << w.pivot_sum << ")\n";
    }
    if (verbose && outcome.detail) {
        os << "  reduced rows:\n";
        const auto& det = *outcome.detail;
        for (size_t u = 0; u < det.echelon.reduced_rows.size(); ++u) {
            os << "    " << combination_name(det.echelon.transform[u], det.monomials) << " = "
               << det.echelon.reduced_rows[u].str() << "\n";
        }
    }
    long half = v.weight / 2;
    os << "  verdict: the cusp at infinity is "
       << (v.verdict == Verdict::IsWeierstrass ? "a " : "NOT a ") << half << "-Weierstrass point\n";
    return os.str();
}

}  // namespace weierp
