#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <curvelab/report.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace curvelab;

namespace {

const RankMode kCert = RankMode::certified();

CurveReport sample_report(const char* text, AnalyzeOptions opts = {}) {
    return analyze_curve(parse_poly(text), json{{"type", "poly"}, {"text", text}}, opts);
}

int run_cli(const std::string& args) {
    std::string bin = std::string(CURVELAB_BIN_DIR) + "/curvelab";
    int rc = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("json round trip") {
    AnalyzeOptions with_locals;
    with_locals.locals = parse_germ_list("T(4,5)");
    for (CurveReport r :
         {sample_report("y^5+x^4*z", with_locals), sample_report("x*y*z"),
          sample_report("x*y") /* mdr 0 */,
          sample_report("y^4-x*z^3",
                        [] {
                            AnalyzeOptions o;
                            o.mode = RankMode::probabilistic_seeded(5);
                            return o;
                        }())}) {
        json j = report_to_json(r);
        CurveReport back = report_from_json(j);
        CHECK(back == r);
        CHECK(report_to_json(back) == j);
    }
}

TEST_CASE("report fields for the worked quintic") {
    AnalyzeOptions opts;
    opts.locals = parse_germ_list("T(4,5)");
    CurveReport r = sample_report("y^5+x^4*z", opts);
    CHECK(r.schema == 1);
    CHECK(r.degree == 5);
    CHECK(r.tau == 12);
    CHECK(r.mdr == 1);
    REQUIRE(r.curve_class.has_value());
    CHECK(r.curve_class->kind == CurveKind::nearly_free);
    CHECK(r.curve_class->d1 == 1);
    CHECK(r.curve_class->d2 == 4);
    REQUIRE(r.deformation.has_value());
    CHECK(r.deformation->ea_tangent_dim == 8);
    CHECK(*r.deformation->es_upper == 9);
    CHECK(r.timing >= 0.0);

    CurveReport lines = sample_report("x*y");
    CHECK(lines.mdr == 0);
    CHECK_FALSE(lines.curve_class.has_value());
    CHECK_FALSE(lines.deformation.has_value());
}

TEST_CASE("resource guard") {
    // degree 13 in certified mode requires --force
    Poly big = parse_poly("x^13+y^13+x*z^12");
    CHECK_THROWS_AS(analyze_curve(big, json::object(), AnalyzeOptions{}), ResourceLimit);
    AnalyzeOptions prob;
    prob.mode = RankMode::probabilistic_seeded(1);
    Poly huge = parse_poly("x^19+y^19+x*z^18");
    CHECK_THROWS_AS(analyze_curve(huge, json::object(), prob), ResourceLimit);
    AnalyzeOptions forced = prob;
    forced.force = true;
    CHECK_THROWS_AS(analyze_curve(huge, json::object(), forced), ResourceLimit);
}

TEST_CASE("corpus machinery on synthetic entries") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "curvelab_corpus_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto write_entry = [&](const std::string& name, const json& j) {
        std::ofstream out(dir / (name + ".json"));
        out << j.dump(2);
    };
    write_entry("a-pass", json{{"id", "a-pass"},
                               {"paper_anchor", "test"},
                               {"oracle_tag", "TRIVIAL"},
                               {"input", {{"type", "poly"}, {"text", "x*y*z"}}},
                               {"expected", {{"tau", 3}, {"mdr", 1}, {"class", "free"}}}});
    write_entry("b-fail", json{{"id", "b-fail"},
                               {"paper_anchor", "test"},
                               {"oracle_tag", "TRIVIAL"},
                               {"input", {{"type", "poly"}, {"text", "x*y*z"}}},
                               {"expected", {{"tau", 4}}}});
    write_entry("c-info", json{{"id", "c-info"},
                               {"paper_anchor", "test"},
                               {"oracle_tag", "EXTERNAL"},
                               {"input", {{"type", "note"}, {"text", "external value"}}},
                               {"expected", json::object()}});
    write_entry("d-local", json{{"id", "d-local"},
                                {"paper_anchor", "test"},
                                {"oracle_tag", "PAPER"},
                                {"input", {{"type", "local"}, {"germ", "T(5,6)"}}},
                                {"expected", {{"mu", 20}, {"tau_es", 17}, {"m_es", 3}}}});
    write_entry("e-capped", json{{"id", "e-capped"},
                                 {"paper_anchor", "test"},
                                 {"oracle_tag", "TRIVIAL"},
                                 {"input", {{"type", "poly"},
                                            {"text", "x^2+y^2+z^2"},
                                            {"probabilistic_only", true}}},
                                 {"expected", {{"tau", 0}, {"mdr", 1}}}});

    auto entries = load_corpus(dir.string());
    REQUIRE(entries.size() == 5);
    CHECK(entries[0].id == "a-pass");  // sorted

    CorpusRunOptions opts;
    opts.mode = kCert;
    auto results = run_corpus(entries, opts);
    REQUIRE(results.size() == 5);
    CHECK(results[0].status == "PASS");
    CHECK(results[1].status == "FAIL");
    CHECK(results[2].status == "INFO");
    CHECK(results[3].status == "PASS");
    CHECK(results[4].status == "PASS");  // capped entry ran probabilistically
    REQUIRE_FALSE(results[4].notes.empty());
    CHECK(results[4].notes[0].find("probabilistically") != std::string::npos);

    opts.filter = "local";
    auto filtered = run_corpus(entries, opts);
    REQUIRE(filtered.size() == 1);
    CHECK(filtered[0].id == "d-local");
    fs::remove_all(dir);
}

TEST_CASE("sweep driver") {
    auto rows = run_sweep({"fz1", 5, 6, true}, RankMode::probabilistic_seeded(3), false);
    REQUIRE(rows.size() == 3);  // (5,2), (6,2), (6,3)
    for (const auto& r : rows) {
        CHECK(r.status == "PASS");
        CHECK(r.got_mdr == 2);
        CHECK(r.got_class == "free");
    }
    // fe with k = 8 gives degree 19 > 18: refused even probabilistically
    auto skip = run_sweep({"fe", 8, 8, true}, RankMode::probabilistic_seeded(3), false);
    REQUIRE(skip.size() == 1);
    CHECK(skip[0].status == "SKIP");
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("analyze x^2+y^2+z^2") == 0);
    CHECK(run_cli("analyze 'x^2+*y'") == 2);       // parse error
    CHECK(run_cli("analyze x^2*y^2") == 3);        // non-reduced
    CHECK(run_cli("analyze y^6+x^5*z --local 'T(4,5)'") == 4);  // tau budget
    CHECK(run_cli("analyze x*y") == 5);            // mdr = 0
    CHECK(run_cli("local 'T(5,6)'") == 0);
    CHECK(run_cli("local E7") == 1);
    CHECK(run_cli("analyze x^13+y^13+x*z^12") == 1);  // resource guard
    CHECK(run_cli("family fz2 --k 4 --json") == 0);
    CHECK(run_cli("pencil y^5+x^4*z x^3*y^2 --t 0,1") == 0);
    CHECK(run_cli("implicitize s^2 's*t' t^2") == 0);
    CHECK(run_cli("family fz1 --d 6 --a 3 --analyze") == 0);
    CHECK(run_cli("family fe --k 5 --analyze") == 0);
    CHECK(run_cli(std::string("corpus --dir ") + CURVELAB_SOURCE_DIR +
                  "/corpus --filter ex-3.10") == 0);
}

TEST_CASE("corpus filter selects the three example-3.10 entries") {
    auto entries = load_corpus(std::string(CURVELAB_SOURCE_DIR) + "/corpus");
    CorpusRunOptions opts;
    opts.filter = "ex-3.10";
    auto results = run_corpus(entries, opts);
    REQUIRE(results.size() == 3);
    for (const auto& r : results) CHECK(r.status == "PASS");
}
