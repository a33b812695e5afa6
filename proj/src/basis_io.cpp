#include "weierp/basis_io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "weierp/curve_tables.hpp"

#include <httplib.h>
#include <json.hpp>

namespace weierp {

QSeries FormRecord::series(long P) const {
    if (P > prec()) throw PrecisionExceeded(P - 1, prec());
    QSeries out(P);
    std::vector<Rational> c(static_cast<size_t>(P));
    for (long n = 1; n < P; ++n) c[static_cast<size_t>(n)] = Rational(an[static_cast<size_t>(n - 1)]);
    return QSeries(std::move(c));
}

long BasisSet::prec() const {
    long p = forms.empty() ? 2 : forms.front().prec();
    for (const auto& f : forms) p = std::min(p, f.prec());
    return p;
}

namespace {

// exact rank of the coefficient matrix by fraction-free elimination
long integer_rank(const std::vector<FormRecord>& forms, long prec) {
    std::vector<std::vector<Integer>> rows;
    for (const auto& f : forms) {
        std::vector<Integer> r(static_cast<size_t>(prec - 1));
        for (long n = 1; n < prec; ++n) r[static_cast<size_t>(n - 1)] = f.an[static_cast<size_t>(n - 1)];
        rows.push_back(std::move(r));
    }
    long rank = 0;
    size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < ncols && rank < static_cast<long>(rows.size()); ++col) {
        size_t piv = static_cast<size_t>(rank);
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[piv]);
        for (size_t i = static_cast<size_t>(rank) + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            Integer a = rows[static_cast<size_t>(rank)][col], b = rows[i][col];
            for (size_t j = col; j < ncols; ++j)
                rows[i][j] = a * rows[i][j] - b * rows[static_cast<size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

void validate_basis(const BasisSet& basis, bool expect_echelon) {
    if (basis.level < 1) throw ValidationError("level must be >= 1");
    if (basis.weight != 2) throw ValidationError("only weight 2 is supported");
    if (basis.forms.empty()) throw ValidationError("empty form list");
    long prec = basis.prec();
    if (prec < 2) throw ValidationError("precision must be >= 2");

    std::vector<long> leads;
    for (const auto& f : basis.forms) {
        long lead = 0;
        for (long n = 1; n < f.prec(); ++n) {
            if (f.an[static_cast<size_t>(n - 1)] != 0) {
                lead = n;
                break;
            }
        }
        if (lead == 0) throw ValidationError("zero form '" + f.label + "' in basis");
        leads.push_back(lead);
    }
    if (expect_echelon) {
        auto sorted = leads;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ValidationError("echelon basis with duplicate leading exponents");
    }

    if (integer_rank(basis.forms, prec) != basis.genus())
        throw ValidationError("forms are linearly dependent up to the common precision");

    CurveClass cls = classify(basis.level);
    long g = basis.genus();
    switch (cls.genus_band) {
        case GenusBand::Zero:
            throw ValidationError("level " + std::to_string(basis.level) +
                                  " has genus 0: no cusp forms");
        case GenusBand::One:
            if (g != 1)
                throw ValidationError("level " + std::to_string(basis.level) +
                                      " has genus 1, file claims " + std::to_string(g));
            break;
        case GenusBand::GeTwo:
            if (g < 2)
                throw ValidationError("level " + std::to_string(basis.level) +
                                      " has genus >= 2, file claims " + std::to_string(g));
            if (cls.nonhyperelliptic && g < 3)
                throw ValidationError("non-hyperelliptic level " + std::to_string(basis.level) +
                                      " must have genus >= 3, file claims " + std::to_string(g));
            break;
    }
}

namespace {

BasisSet parse_basis_text(std::istream& in, const std::string& origin) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError(origin + ": empty file");
    long level = -1, weight = -1, genus = -1, prec = -1;
    {
        std::istringstream hs(header);
        std::string tok;
        while (hs >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) throw ParseError(origin + ": bad header token '" + tok + "'");
            std::string key = tok.substr(0, eq);
            long val;
            try {
                val = std::stol(tok.substr(eq + 1));
            } catch (const std::exception&) {
                throw ParseError(origin + ": bad header value in '" + tok + "'");
            }
            if (key == "level") level = val;
            else if (key == "weight") weight = val;
            else if (key == "genus") genus = val;
            else if (key == "prec") prec = val;
            else throw ParseError(origin + ": unknown header key '" + key + "'");
        }
    }
    if (level < 0 || weight < 0 || genus < 0 || prec < 0)
        throw ParseError(origin + ": header must set level, weight, genus, prec");
    if (prec < 2) throw ParseError(origin + ": prec must be >= 2");

    BasisSet basis;
    basis.level = level;
    basis.weight = weight;
    std::string line;
    long index = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string kw;
        long idx;
        char colon;
        ls >> kw >> idx >> colon;
        if (!ls || kw != "form" || colon != ':')
            throw ParseError(origin + ": expected 'form <index>: a1,a2,...', got '" + line + "'");
        if (idx != index)
            throw ValidationError(origin + ": form index " + std::to_string(idx) +
                                  " out of order (expected " + std::to_string(index) + ")");
        FormRecord rec;
        rec.label = std::to_string(level) + ".2." + std::to_string(idx);
        std::string rest;
        std::getline(ls, rest);
        std::string num;
        auto flush = [&]() {
            if (num.empty()) throw ParseError(origin + ": empty coefficient in form " + std::to_string(idx));
            try {
                rec.an.emplace_back(num);
            } catch (const std::exception&) {
                throw ParseError(origin + ": bad integer '" + num + "'");
            }
            num.clear();
        };
        for (char ch : rest) {
            if (ch == ' ' || ch == '\t' || ch == '\r') continue;
            if (ch == ',') flush();
            else if ((ch >= '0' && ch <= '9') || ch == '-' || ch == '+') num += ch;
            else throw ParseError(origin + ": unexpected character '" + std::string(1, ch) + "'");
        }
        flush();
        if (rec.prec() != prec)
            throw ParseError(origin + ": form " + std::to_string(idx) + " has " +
                             std::to_string(rec.an.size()) + " coefficients, header says prec=" +
                             std::to_string(prec));
        basis.forms.push_back(std::move(rec));
        ++index;
    }
    if (index != genus)
        throw ValidationError(origin + ": header claims genus " + std::to_string(genus) +
                              " but file has " + std::to_string(index) + " forms");
    return basis;
}

}  // namespace

BasisSet load_basis(const std::filesystem::path& path, bool expect_echelon) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open basis file " + path.string());
    BasisSet basis = parse_basis_text(in, path.filename().string());
    validate_basis(basis, expect_echelon);
    return basis;
}

void write_basis(const BasisSet& basis, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write basis file " + path.string());
    long prec = basis.prec();
    out << "level=" << basis.level << " weight=" << basis.weight
        << " genus=" << basis.genus() << " prec=" << prec << "\n";
    for (size_t i = 0; i < basis.forms.size(); ++i) {
        out << "form " << i << ": ";
        const auto& an = basis.forms[i].an;
        for (long n = 1; n < prec; ++n) {
            if (n > 1) out << ",";
            out << an[static_cast<size_t>(n - 1)].get_str();
        }
        out << "\n";
    }
    if (!out) throw Error("failed writing basis file " + path.string());
}

long required_precision(long g, long m, Method method) {
    if (g < 1 || m < 2 || m % 2 != 0) throw Error("required_precision: need g >= 1 and even m >= 2");
    // Echelon: monomials must be known through exponent B = m/2 + m(g-1),
    // i.e. monomial precision >= B + 1. A product of m/2 forms of valuation
    // >= 1 and precision P has precision >= P + m/2 - 1, so P >= m(g-1) + 2.
    // Wronskian: the echelon rows need a few coefficients beyond the largest
    // pivot i_t <= B so the determinant's leading column survives; that costs
    // a slightly larger guard through the same propagation.
    long base = m * (g - 1) + 2;
    switch (method) {
        case Method::Echelon:
            return base + 2;
        case Method::Wronskian:
        case Method::Both:
            return base + 4;
    }
    throw Error("unreachable");
}

std::filesystem::path cache_file_for(const std::filesystem::path& cache_dir, long level) {
    return cache_dir / ("gamma0_" + std::to_string(level) + ".txt");
}

std::filesystem::path bundled_basis_path(const std::filesystem::path& data_dir, long level) {
    return data_dir / ("gamma0_" + std::to_string(level) + ".txt");
}

namespace {

struct ParsedUrl {
    std::string scheme_host_port;  // e.g. "http://localhost:8080"
    std::string path_prefix;       // e.g. "/api"
};

ParsedUrl split_url(const std::string& url) {
    static const std::regex re(R"(^(https?://[^/]+)(/.*)?$)");
    std::smatch m;
    if (!std::regex_match(url, m, re))
        throw NetworkError("bad base URL '" + url + "' (expected http(s)://host[:port][/path])");
    ParsedUrl out;
    out.scheme_host_port = m[1];
    out.path_prefix = m[2].matched ? m[2].str() : "";
    while (!out.path_prefix.empty() && out.path_prefix.back() == '/') out.path_prefix.pop_back();
    return out;
}

Integer json_integer(const nlohmann::json& v, const std::string& where) {
    if (v.is_number_integer()) return Integer(static_cast<long>(v.get<int64_t>()));
    if (v.is_string()) {
        try {
            return Integer(v.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw UpstreamFormatError("expected integer at " + where);
}

}  // namespace

BasisSet fetch_basis(long level, long min_prec, const FetchOptions& opts) {
    if (level < 1) throw Error("fetch_basis: level must be >= 1");

    // cache first, so prior fetches work offline
    if (!opts.cache_dir.empty()) {
        auto cached = cache_file_for(opts.cache_dir, level);
        if (std::filesystem::exists(cached)) {
            BasisSet basis = load_basis(cached);
            if (basis.prec() >= min_prec) return basis;
        }
    }
    if (opts.offline)
        throw NetworkError("offline mode and no usable cache entry for level " + std::to_string(level));

    ParsedUrl url = split_url(opts.base_url);
    httplib::Client client(url.scheme_host_port);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    std::string path = url.path_prefix + "/s2basis/" + std::to_string(level) +
                       "?min_prec=" + std::to_string(min_prec);
    auto res = client.Get(path);
    if (!res)
        throw NetworkError("request to " + url.scheme_host_port + path + " failed: " +
                           httplib::to_string(res.error()));
    if (res->status != 200)
        throw NetworkError("upstream returned HTTP " + std::to_string(res->status) +
                           " for " + path);

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(res->body);
    } catch (const std::exception& e) {
        throw UpstreamFormatError(std::string("upstream response is not JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("level") || !doc.contains("forms"))
        throw UpstreamFormatError("upstream JSON lacks level/forms fields");
    if (doc["level"].get<long>() != level)
        throw UpstreamFormatError("upstream returned level " + doc["level"].dump());
    if (doc.contains("weight") && doc["weight"].get<long>() != 2)
        throw UpstreamFormatError("upstream returned weight " + doc["weight"].dump());

    BasisSet basis;
    basis.level = level;
    basis.weight = 2;
    const auto& forms = doc["forms"];
    if (!forms.is_array()) throw UpstreamFormatError("forms is not an array");
    for (size_t i = 0; i < forms.size(); ++i) {
        const auto& jform = forms[i];
        FormRecord rec;
        rec.label = jform.contains("label") && jform["label"].is_string()
                        ? jform["label"].get<std::string>()
                        : std::to_string(level) + ".2." + std::to_string(i);
        if (!jform.contains("an") || !jform["an"].is_array())
            throw UpstreamFormatError("form " + std::to_string(i) + " lacks an array 'an'");
        for (size_t k = 0; k < jform["an"].size(); ++k)
            rec.an.push_back(json_integer(jform["an"][k], "forms[" + std::to_string(i) + "].an"));
        basis.forms.push_back(std::move(rec));
    }

    // genus-0 levels legitimately come back empty; return without caching
    if (basis.forms.empty()) {
        if (classify(level).genus_band != GenusBand::Zero)
            throw UpstreamFormatError("upstream returned no forms for level " +
                                      std::to_string(level) + " of positive genus");
        return basis;
    }

    validate_basis(basis);
    if (basis.prec() < min_prec)
        throw InsufficientPrecision("upstream provides only " + std::to_string(basis.prec()) +
                                        " coefficients for level " + std::to_string(level),
                                    min_prec);

    if (!opts.cache_dir.empty()) {
        std::filesystem::create_directories(opts.cache_dir);
        write_basis(basis, cache_file_for(opts.cache_dir, level));
    }
    return basis;
}

}  // namespace weierp
