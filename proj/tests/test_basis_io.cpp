#include <doctest.h>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>
#include <unistd.h>

#include <httplib.h>
#include <json.hpp>

#include "weierp/basis_io.hpp"

using namespace weierp;
namespace fs = std::filesystem;

namespace {

const fs::path kDataDir = fs::path(WEIERP_SOURCE_DIR) / "data" / "bases";

fs::path temp_dir() {
    auto dir = fs::temp_directory_path() / ("weierp_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

fs::path write_text(const fs::path& dir, const std::string& name, const std::string& text) {
    auto p = dir / name;
    std::ofstream out(p);
    out << text;
    return p;
}

}  // namespace

TEST_CASE("load_basis: bundled fixtures parse and validate") {
    auto b34 = load_basis(bundled_basis_path(kDataDir, 34), /*expect_echelon=*/true);
    CHECK(b34.level == 34);
    CHECK(b34.genus() == 3);
    CHECK(b34.prec() >= 40);
    // echelonized: f0 = q - 2q^4 - 2q^5 + O(q^6...)
    CHECK(b34.forms[0].an[0] == 1);
    CHECK(b34.forms[0].an[3] == -2);
    CHECK(b34.forms[1].an[1] == 1);
    CHECK(b34.forms[2].an[2] == 1);

    auto b55 = load_basis(bundled_basis_path(kDataDir, 55), true);
    CHECK(b55.level == 55);
    CHECK(b55.genus() == 5);

    for (const auto& f : b55.forms) CHECK(f.series(b55.prec()).valuation_floor() >= 1);
}

TEST_CASE("load_basis round-trips through write_basis") {
    auto dir = temp_dir();
    auto b = load_basis(bundled_basis_path(kDataDir, 34));
    write_basis(b, dir / "roundtrip.txt");
    auto b2 = load_basis(dir / "roundtrip.txt");
    CHECK(b2.level == b.level);
    CHECK(b2.genus() == b.genus());
    CHECK(b2.prec() == b.prec());
    for (size_t i = 0; i < b.forms.size(); ++i) CHECK(b2.forms[i].an == b.forms[i].an);
}

TEST_CASE("load_basis: malformed input") {
    auto dir = temp_dir();
    CHECK_THROWS_AS(load_basis(dir / "missing.txt"), ParseError);
    CHECK_THROWS_AS(load_basis(write_text(dir, "h1.txt", "level=34 weight=2\n")), ParseError);
    CHECK_THROWS_AS(
        load_basis(write_text(dir, "h2.txt", "level=34 weight=2 genus=1 prec=4\nform 0: 1,x,0\n")),
        ParseError);
    CHECK_THROWS_AS(
        load_basis(write_text(dir, "h3.txt", "level=34 weight=2 genus=1 prec=5\nform 0: 1,0,0\n")),
        ParseError);  // count mismatch with prec
    CHECK_THROWS_AS(
        load_basis(write_text(dir, "h4.txt", "level=34 weight=2 genus=1 prec=4\nform 1: 1,0,0\n")),
        ValidationError);  // index out of order
}

TEST_CASE("load_basis: validation failures") {
    auto dir = temp_dir();
    // empty form list
    CHECK_THROWS_AS(load_basis(write_text(dir, "v1.txt", "level=34 weight=2 genus=0 prec=4\n")),
                    ValidationError);
    // zero form
    CHECK_THROWS_AS(
        load_basis(write_text(dir, "v2.txt",
                              "level=34 weight=2 genus=1 prec=4\nform 0: 0,0,0\n")),
        ValidationError);
    // duplicate forms are linearly dependent
    CHECK_THROWS_AS(load_basis(write_text(dir, "v3.txt",
                                          "level=34 weight=2 genus=2 prec=4\n"
                                          "form 0: 1,2,3\nform 1: 2,4,6\n")),
                    ValidationError);
    // genus-0 level cannot carry forms
    CHECK_THROWS_AS(
        load_basis(write_text(dir, "v4.txt", "level=25 weight=2 genus=1 prec=4\nform 0: 1,0,0\n")),
        ValidationError);
    // genus-1 level must have exactly one form
    CHECK_THROWS_AS(load_basis(write_text(dir, "v5.txt",
                                          "level=11 weight=2 genus=2 prec=4\n"
                                          "form 0: 1,0,0\nform 1: 0,1,0\n")),
                    ValidationError);
    // non-hyperelliptic levels have genus >= 3
    CHECK_THROWS_AS(load_basis(write_text(dir, "v6.txt",
                                          "level=34 weight=2 genus=2 prec=4\n"
                                          "form 0: 1,0,0\nform 1: 0,1,0\n")),
                    ValidationError);
    // echelon claim with duplicate leading exponents
    CHECK_THROWS_AS(load_basis(write_text(dir, "v7.txt",
                                          "level=23 weight=2 genus=2 prec=4\n"
                                          "form 0: 1,1,0\nform 1: 1,0,1\n"),
                               /*expect_echelon=*/true),
                    ValidationError);
    // same file is fine without the echelon claim
    auto b = load_basis(write_text(dir, "v8.txt",
                                   "level=23 weight=2 genus=2 prec=4\n"
                                   "form 0: 1,1,0\nform 1: 1,0,1\n"));
    CHECK(b.genus() == 2);
}

TEST_CASE("required_precision") {
    CHECK(required_precision(3, 4, Method::Echelon) >= 11);  // monomials through q^10 plus guard
    CHECK(required_precision(1, 2, Method::Echelon) <= 10);  // g = 1 stays small
    for (long g : {1, 2, 3, 5, 7})
        for (long m : {2L, 4L, 6L}) {
            CHECK(required_precision(g, m, Method::Both) >= required_precision(g, m, Method::Echelon));
            // enough that the full matrix column range is reachable
            long B = m / 2 + m * (g - 1);
            CHECK(required_precision(g, m, Method::Echelon) + m / 2 - 1 >= B + 1 + 2);
        }
    CHECK_THROWS_AS(required_precision(0, 4, Method::Both), Error);
    CHECK_THROWS_AS(required_precision(3, 5, Method::Both), Error);
}

namespace {

struct LocalServer {
    httplib::Server svr;
    std::thread th;
    int port = 0;

    LocalServer() {
        port = svr.bind_to_any_port("127.0.0.1");
        th = std::thread([this] { svr.listen_after_bind(); });
        svr.wait_until_ready();
    }
    ~LocalServer() {
        svr.stop();
        th.join();
    }
    std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port) + "/api"; }
};

nlohmann::json basis_to_json(const BasisSet& b) {
    nlohmann::json j;
    j["level"] = b.level;
    j["weight"] = 2;
    j["genus"] = b.genus();
    j["prec"] = b.prec();
    j["forms"] = nlohmann::json::array();
    for (const auto& f : b.forms) {
        nlohmann::json jf;
        jf["label"] = f.label;
        jf["an"] = nlohmann::json::array();
        for (const auto& a : f.an) jf["an"].push_back(a.get_str());
        j["forms"].push_back(jf);
    }
    return j;
}

}  // namespace

TEST_CASE("fetch_basis: HTTP client against a local endpoint") {
    auto fixture = load_basis(bundled_basis_path(kDataDir, 34));
    LocalServer server;
    std::atomic<int> hits{0};
    server.svr.Get("/api/s2basis/34", [&](const httplib::Request&, httplib::Response& res) {
        ++hits;
        res.set_content(basis_to_json(fixture).dump(), "application/json");
    });
    server.svr.Get("/api/s2basis/1", [&](const httplib::Request&, httplib::Response& res) {
        res.set_content(R"({"level":1,"weight":2,"genus":0,"prec":10,"forms":[]})",
                        "application/json");
    });
    server.svr.Get("/api/s2basis/99999", [&](const httplib::Request&, httplib::Response& res) {
        res.set_content("this is not json", "application/json");
    });

    auto dir = temp_dir() / "cache_a";
    FetchOptions opts{server.base_url(), dir, false};

    SUBCASE("fetch, validate, cache, then serve offline from the cache") {
        auto b = fetch_basis(34, 11, opts);
        CHECK(b.level == 34);
        CHECK(b.genus() == 3);
        CHECK(b.forms[0].an == fixture.forms[0].an);
        CHECK(hits == 1);
        CHECK(fs::exists(cache_file_for(dir, 34)));

        auto offline = opts;
        offline.offline = true;
        auto b2 = fetch_basis(34, 11, offline);
        CHECK(b2.genus() == 3);
        CHECK(hits == 1);  // cache hit, no new request

        // the cached file passes the same validator as load_basis
        CHECK_NOTHROW(load_basis(cache_file_for(dir, 34), true));
    }

    SUBCASE("genus-0 level yields an empty basis") {
        auto b = fetch_basis(1, 2, opts);
        CHECK(b.genus() == 0);
    }

    SUBCASE("offline without cache is a NetworkError") {
        FetchOptions offline{server.base_url(), temp_dir() / "cache_b", true};
        CHECK_THROWS_AS(fetch_basis(34, 11, offline), NetworkError);
    }

    SUBCASE("missing endpoint is a NetworkError") {
        FetchOptions bad{server.base_url(), temp_dir() / "cache_c", false};
        CHECK_THROWS_AS(fetch_basis(77, 2, bad), NetworkError);  // 404
    }

    SUBCASE("unreachable host is a NetworkError") {
        FetchOptions bad{"http://127.0.0.1:9/api", temp_dir() / "cache_d", false};
        CHECK_THROWS_AS(fetch_basis(34, 11, bad), NetworkError);
    }

    SUBCASE("non-JSON body is an UpstreamFormatError") {
        FetchOptions b2{server.base_url(), temp_dir() / "cache_e", false};
        CHECK_THROWS_AS(fetch_basis(99999, 2, b2), UpstreamFormatError);
    }

    SUBCASE("insufficient upstream precision") {
        FetchOptions b3{server.base_url(), temp_dir() / "cache_f", false};
        CHECK_THROWS_AS(fetch_basis(34, 10000, b3), InsufficientPrecision);
    }
}
