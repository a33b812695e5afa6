#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "weierp/report.hpp"

using namespace weierp;

namespace {

const std::filesystem::path kDataDir = std::filesystem::path(WEIERP_SOURCE_DIR) / "data" / "bases";

BatchRecord sample_record() {
    BatchRecord rec;
    rec.level = 55;
    rec.weight = 4;
    rec.ok = true;
    rec.verdict.level = 55;
    rec.verdict.weight = 4;
    rec.verdict.genus = 5;
    rec.verdict.t = 12;
    rec.verdict.pivots = {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14};
    rec.verdict.verdict = Verdict::IsWeierstrass;
    rec.verdict.methods_run = {"echelon", "wronskian"};
    rec.verdict.agreement = true;
    return rec;
}

void check_equal(const BatchRecord& a, const BatchRecord& b) {
    CHECK(a.level == b.level);
    CHECK(a.weight == b.weight);
    CHECK(a.ok == b.ok);
    CHECK(a.verdict.genus == b.verdict.genus);
    CHECK(a.verdict.t == b.verdict.t);
    CHECK(a.verdict.pivots == b.verdict.pivots);
    CHECK(a.verdict.verdict == b.verdict.verdict);
    CHECK(a.verdict.methods_run == b.verdict.methods_run);
    CHECK(a.verdict.agreement == b.verdict.agreement);
}

}  // namespace

TEST_CASE("pivot list serialization") {
    CHECK(join_pivots({2, 3, 11}) == "2,3,11");
    CHECK(split_pivots("2,3,11") == std::vector<long>{2, 3, 11});
    CHECK(join_pivots({}) == "");
    CHECK(split_pivots("").empty());
}

TEST_CASE("record round-trips through CSV and JSONL") {
    auto rec = sample_record();
    auto csv = parse_record_line(record_to_csv(rec));
    REQUIRE(csv.has_value());
    check_equal(*csv, rec);

    auto json = parse_record_line(record_to_json(rec));
    REQUIRE(json.has_value());
    check_equal(*json, rec);

    // failed cell
    BatchRecord bad;
    bad.level = 9999;
    bad.weight = 4;
    bad.ok = false;
    bad.error = "cannot open basis file, with \"quotes\" and , commas";
    bad.verdict.level = 9999;
    bad.verdict.weight = 4;
    auto csv2 = parse_record_line(record_to_csv(bad));
    REQUIRE(csv2.has_value());
    CHECK(!csv2->ok);
    CHECK(csv2->error == bad.error);
    auto json2 = parse_record_line(record_to_json(bad));
    REQUIRE(json2.has_value());
    CHECK(json2->error == bad.error);

    // the header line parses as no record
    CHECK(!parse_record_line(csv_header()).has_value());
}

TEST_CASE("recorded_cells reads both formats") {
    auto dir = std::filesystem::temp_directory_path() /
               ("weierp_report_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "results.csv");
        out << csv_header() << "\n" << record_to_csv(sample_record()) << "\n";
    }
    auto cells = recorded_cells(dir / "results.csv");
    CHECK(cells == std::set<std::pair<long, long>>{{55, 4}});
    CHECK(recorded_cells(dir / "absent.csv").empty());
}

TEST_CASE("text and structured reports carry the same verdict and pivots") {
    auto basis = load_basis(bundled_basis_path(kDataDir, 34));
    auto outcome = decide_with_basis(basis, 4);
    auto text = render_text_report(outcome, /*verbose=*/true);
    CHECK(text.find("NOT a 2-Weierstrass point") != std::string::npos);
    CHECK(text.find("2,3,4,5,6,7") != std::string::npos);
    // the pivot-5 row, sign-normalized to a positive leading coefficient
    CHECK(text.find("-f0*f2 + f1^2") != std::string::npos);

    BatchRecord rec{34, 4, outcome.verdict, true, ""};
    auto parsed = parse_record_line(record_to_json(rec));
    REQUIRE(parsed.has_value());
    CHECK(verdict_name(parsed->verdict.verdict) == "NotWeierstrass");
    CHECK(join_pivots(parsed->verdict.pivots) == "2,3,4,5,6,7");
}

TEST_CASE("not-applicable report") {
    auto basis = load_basis(bundled_basis_path(kDataDir, 22));
    auto outcome = decide_with_basis(basis, 6);
    CHECK(outcome.verdict.verdict == Verdict::NotApplicable);
    auto text = render_text_report(outcome, false);
    CHECK(text.find("not applicable") != std::string::npos);
    CHECK(text.find("hyperelliptic") != std::string::npos);
}
