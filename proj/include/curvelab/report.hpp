#pragma once

#include <curvelab/deform.hpp>
#include <curvelab/implicitize.hpp>
#include <curvelab/jacobian.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace curvelab {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Serializable analysis report.  JSON field names match the struct fields;
// the schema version is bumped on any incompatible change so corpus files can
// double as golden outputs.
// ---------------------------------------------------------------------------

struct ModeInfo {
    RankKind kind = RankKind::certified;
    uint64_t seed = 0;
    bool operator==(const ModeInfo&) const = default;
};

struct CurveReport {
    int schema = 1;
    json input;  // echo of what was analyzed
    int degree = 0;
    int mdr = 0;
    std::optional<int> sigma;
    int nu = 0;
    int tau = 0;
    std::vector<int> hilb_table;
    std::vector<int> n_table;
    std::vector<int> ar_table;
    std::optional<CurveClass> curve_class;      // absent when mdr = 0
    std::optional<DeformationReport> deformation;  // absent when mdr = 0
    std::vector<std::string> flags;
    ModeInfo mode;
    double timing = 0.0;
};

bool operator==(const CurveClass&, const CurveClass&);
bool operator==(const DeformationReport&, const DeformationReport&);
bool operator==(const CurveReport&, const CurveReport&);

json report_to_json(const CurveReport& r);
CurveReport report_from_json(const json& j);
std::string render_report_text(const CurveReport& r);

struct AnalyzeOptions {
    RankMode mode = RankMode::certified();
    std::vector<TpqSing> locals;
    bool declared_irreducible = false;
    bool force = false;  // lifts the certified-mode degree guard
};

// Refuses d > 12 in certified mode (unless forced) and d > 18 in
// probabilistic mode; throws ResourceLimit.
void check_resource_guard(int d, const RankMode& mode, bool force);

// Full pipeline: profile, classification, deformation quantities, flags.
// mdr = 0 leaves class/deformation absent.  Profiles are memoized per
// (curve, mode kind) within the process.
CurveReport analyze_curve(const Poly& f, json input_echo, const AnalyzeOptions& opts);

const JacobianProfile& cached_profile(const Poly& f, const RankMode& mode);

// ---------------------------------------------------------------------------
// Regression corpus: one JSON file per entry.  EXTERNAL-tagged expectations
// are displayed but never gate the run.
// ---------------------------------------------------------------------------

struct CorpusEntry {
    std::string id;
    std::string paper_anchor;
    std::string oracle_tag;  // PAPER | DERIVED | TRIVIAL | EXTERNAL
    json input;
    json expected;
    std::string path;
};

struct CorpusResult {
    std::string id;
    std::string status;  // PASS | FAIL | INFO | SKIP
    std::vector<std::string> notes;
    double seconds = 0.0;
};

std::vector<CorpusEntry> load_corpus(const std::string& dir);

struct CorpusRunOptions {
    RankMode mode = RankMode::certified();
    std::string filter;
    int workers = 0;  // 0: hardware concurrency
};

std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries,
                                     const CorpusRunOptions& opts);

// ---------------------------------------------------------------------------
// Conjecture sweep driver.
// ---------------------------------------------------------------------------

struct SweepRow {
    FamilyExpectation expect;
    int got_mdr = 0;
    int got_tau = 0;
    std::string got_class;
    std::string status;  // PASS | FAIL | SKIP
    std::string note;
};

struct SweepRequest {
    std::string family;  // fz1 | fz2 | fe
    int lo = 0, hi = 0;  // d-range for fz1, k-range for fz2/fe
    bool all_a = true;   // fz1: sweep every admissible a
};

std::vector<SweepRow> run_sweep(const SweepRequest& req, const RankMode& mode, bool force,
                                int workers = 0);

}  // namespace curvelab
