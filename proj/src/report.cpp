#include <curvelab/errors.hpp>
#include <curvelab/report.hpp>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace curvelab {

// ---------------------------------------------------------------------------
// Equality and JSON round-trip
// ---------------------------------------------------------------------------

bool operator==(const CurveClass& a, const CurveClass& b) {
    return a.kind == b.kind && a.d1 == b.d1 && a.d2 == b.d2 && a.nu == b.nu;
}

bool operator==(const DeformationReport& a, const DeformationReport& b) {
    return a.ea_tangent_dim == b.ea_tangent_dim && a.orbit_dim == b.orbit_dim &&
           a.expected_dim == b.expected_dim && a.h1 == b.h1 && a.unobstructed == b.unobstructed &&
           a.ea_rigid == b.ea_rigid && a.m_es_total == b.m_es_total && a.es_lower == b.es_lower &&
           a.es_upper == b.es_upper && a.es_tight == b.es_tight;
}

bool operator==(const CurveReport& a, const CurveReport& b) {
    return a.schema == b.schema && a.input == b.input && a.degree == b.degree && a.mdr == b.mdr &&
           a.sigma == b.sigma && a.nu == b.nu && a.tau == b.tau && a.hilb_table == b.hilb_table &&
           a.n_table == b.n_table && a.ar_table == b.ar_table &&
           a.curve_class == b.curve_class && a.deformation == b.deformation &&
           a.flags == b.flags && a.mode == b.mode && a.timing == b.timing;
}

namespace {

json class_to_json(const CurveClass& c) {
    return json{{"kind", c.kind_name()}, {"exponents", {c.d1, c.d2}}, {"nu", c.nu}};
}

CurveClass class_from_json(const json& j) {
    CurveClass c;
    std::string kind = j.at("kind").get<std::string>();
    c.kind = kind == "free" ? CurveKind::free_curve
                            : kind == "nearly_free" ? CurveKind::nearly_free : CurveKind::neither;
    c.d1 = j.at("exponents")[0].get<int>();
    c.d2 = j.at("exponents")[1].get<int>();
    c.nu = j.at("nu").get<int>();
    return c;
}

json deformation_to_json(const DeformationReport& d) {
    json j{{"ea_tangent_dim", d.ea_tangent_dim}, {"orbit_dim", d.orbit_dim},
           {"expected_dim", d.expected_dim},     {"h1", d.h1},
           {"unobstructed", d.unobstructed},     {"ea_rigid", d.ea_rigid}};
    if (d.m_es_total) {
        j["m_es_total"] = *d.m_es_total;
        j["es_lower"] = *d.es_lower;
        j["es_upper"] = *d.es_upper;
        j["es_tight"] = d.es_tight;
    }
    return j;
}

DeformationReport deformation_from_json(const json& j) {
    DeformationReport d;
    d.ea_tangent_dim = j.at("ea_tangent_dim").get<int>();
    d.orbit_dim = j.at("orbit_dim").get<int>();
    d.expected_dim = j.at("expected_dim").get<int>();
    d.h1 = j.at("h1").get<int>();
    d.unobstructed = j.at("unobstructed").get<bool>();
    d.ea_rigid = j.at("ea_rigid").get<bool>();
    if (j.contains("m_es_total")) {
        d.m_es_total = j.at("m_es_total").get<int>();
        d.es_lower = j.at("es_lower").get<int>();
        d.es_upper = j.at("es_upper").get<int>();
        d.es_tight = j.at("es_tight").get<bool>();
    }
    return d;
}

}  // namespace

json report_to_json(const CurveReport& r) {
    json j;
    j["schema"] = r.schema;
    j["input"] = r.input;
    j["degree"] = r.degree;
    j["mdr"] = r.mdr;
    j["sigma"] = r.sigma ? json(*r.sigma) : json(nullptr);
    j["nu"] = r.nu;
    j["tau"] = r.tau;
    j["hilb_table"] = r.hilb_table;
    j["n_table"] = r.n_table;
    j["ar_table"] = r.ar_table;
    j["class"] = r.curve_class ? class_to_json(*r.curve_class) : json(nullptr);
    j["deformation"] = r.deformation ? deformation_to_json(*r.deformation) : json(nullptr);
    j["flags"] = r.flags;
    json mode{{"kind", r.mode.kind == RankKind::certified ? "certified" : "probabilistic"}};
    if (r.mode.kind == RankKind::probabilistic) {
        mode["seed"] = r.mode.seed;
        mode["probabilistic"] = true;
    }
    j["mode"] = mode;
    j["timing"] = r.timing;
    return j;
}

CurveReport report_from_json(const json& j) {
    CurveReport r;
    r.schema = j.at("schema").get<int>();
    r.input = j.at("input");
    r.degree = j.at("degree").get<int>();
    r.mdr = j.at("mdr").get<int>();
    if (!j.at("sigma").is_null()) r.sigma = j.at("sigma").get<int>();
    r.nu = j.at("nu").get<int>();
    r.tau = j.at("tau").get<int>();
    r.hilb_table = j.at("hilb_table").get<std::vector<int>>();
    r.n_table = j.at("n_table").get<std::vector<int>>();
    r.ar_table = j.at("ar_table").get<std::vector<int>>();
    if (!j.at("class").is_null()) r.curve_class = class_from_json(j.at("class"));
    if (!j.at("deformation").is_null()) r.deformation = deformation_from_json(j.at("deformation"));
    r.flags = j.at("flags").get<std::vector<std::string>>();
    r.mode.kind = j.at("mode").at("kind").get<std::string>() == "certified"
                      ? RankKind::certified
                      : RankKind::probabilistic;
    if (r.mode.kind == RankKind::probabilistic) r.mode.seed = j.at("mode").at("seed").get<uint64_t>();
    r.timing = j.at("timing").get<double>();
    return r;
}

std::string render_report_text(const CurveReport& r) {
    std::ostringstream out;
    out << "curve: " << r.input.value("text", r.input.dump()) << "\n";
    out << "degree " << r.degree << "  tau " << r.tau << "  mdr " << r.mdr << "  nu " << r.nu;
    if (r.sigma) out << "  sigma " << *r.sigma;
    out << "\n";
    if (r.curve_class)
        out << "class: " << r.curve_class->kind_name() << " (" << r.curve_class->d1 << ","
            << r.curve_class->d2 << ")\n";
    else
        out << "class: (mdr = 0, d concurrent lines; deformation analysis refused)\n";
    auto table = [&out](const char* name, const std::vector<int>& t) {
        out << name << ":";
        for (int v : t) out << " " << v;
        out << "\n";
    };
    table("hilb", r.hilb_table);
    table("n   ", r.n_table);
    table("ar  ", r.ar_table);
    if (r.deformation) {
        const auto& d = *r.deformation;
        out << "ea tangent dim " << d.ea_tangent_dim << "  orbit dim " << d.orbit_dim
            << "  expected dim " << d.expected_dim << "  h1 " << d.h1 << "\n";
        out << "unobstructed " << (d.unobstructed ? "yes" : "no") << "  ea-rigid "
            << (d.ea_rigid ? "yes" : "no") << "\n";
        if (d.m_es_total)
            out << "es tangent dim in [" << *d.es_lower << ", " << *d.es_upper << "]"
                << (d.es_tight ? " (upper bound attained)" : "") << "  m_es total "
                << *d.m_es_total << "\n";
    }
    for (const auto& f : r.flags) out << "flag: " << f << "\n";
    out << "mode: " << (r.mode.kind == RankKind::certified ? "certified" : "probabilistic")
        << "  (" << r.timing << "s)\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Analysis pipeline
// ---------------------------------------------------------------------------

void check_resource_guard(int d, const RankMode& mode, bool force) {
    if (mode.kind == RankKind::certified && d > 12 && !force)
        throw ResourceLimit("certified mode refuses degree " + std::to_string(d) +
                            " > 12 (use --force to override)");
    if (mode.kind == RankKind::probabilistic && d > 18)
        throw ResourceLimit("probabilistic mode refuses degree " + std::to_string(d) + " > 18");
}

const JacobianProfile& cached_profile(const Poly& f, const RankMode& mode) {
    static std::mutex mu;
    static std::map<std::string, JacobianProfile> cache;
    std::string key = f.str() + "#" + (mode.kind == RankKind::certified ? "c" : "p") +
                      std::to_string(mode.seed);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    JacobianProfile p = profile(f, mode);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(p)).first->second;
}

CurveReport analyze_curve(const Poly& f, json input_echo, const AnalyzeOptions& opts) {
    validate_curve_input(f);
    check_resource_guard(f.degree(), opts.mode, opts.force);
    auto t0 = std::chrono::steady_clock::now();

    CurveReport r;
    r.input = std::move(input_echo);
    r.mode = {opts.mode.kind, opts.mode.seed};

    const JacobianProfile& p = cached_profile(f, opts.mode);
    r.degree = p.d;
    r.mdr = p.mdr;
    r.sigma = p.sigma;
    r.nu = p.nu;
    r.tau = p.tau;
    r.hilb_table = p.hilb;
    r.n_table = p.n_table;
    r.ar_table = p.ar_table;

    if (p.mdr >= 1) {
        r.curve_class = classify(p);
        r.deformation = deformation_report(p, opts.locals);
        FlagOptions fo;
        fo.declared_irreducible = opts.declared_irreducible;
        fo.declared_nodal = !opts.locals.empty();
        for (const auto& g : opts.locals)
            if (!(g.p == 2 && g.q == 2)) fo.declared_nodal = false;
        r.flags = degree_bound_flags(p, *r.curve_class, *r.deformation, fo);
    }

    r.timing = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// ---------------------------------------------------------------------------
// Corpus
// ---------------------------------------------------------------------------

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<CorpusEntry> entries;
    for (const auto& de : fs::directory_iterator(dir)) {
        if (de.path().extension() != ".json") continue;
        std::ifstream in(de.path());
        json j = json::parse(in);
        CorpusEntry e;
        e.id = j.at("id").get<std::string>();
        e.paper_anchor = j.value("paper_anchor", "");
        e.oracle_tag = j.value("oracle_tag", "DERIVED");
        e.input = j.at("input");
        e.expected = j.value("expected", json::object());
        e.path = de.path().string();
        entries.push_back(std::move(e));
    }
    std::sort(entries.begin(), entries.end(),
              [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
    return entries;
}

namespace {

struct Checker {
    std::vector<std::string> failures;
    std::vector<std::string> infos;
    void mismatch(const std::string& key, const json& expect, const json& got) {
        failures.push_back(key + ": expected " + expect.dump() + ", got " + got.dump());
    }
    template <class T>
    void eq(const json& exp, const char* key, const T& got) {
        if (!exp.contains(key)) return;
        if (exp.at(key) != json(got)) mismatch(key, exp.at(key), json(got));
    }
    std::vector<std::string> all_notes() const {
        std::vector<std::string> out = failures;
        out.insert(out.end(), infos.begin(), infos.end());
        return out;
    }
};

// Membership of g in the span of basis (all homogeneous of the same degree).
bool in_span(const std::vector<Poly>& basis, const Poly& g) {
    if (g.is_zero()) return true;
    RankMode cert = RankMode::certified();
    int before = span_dim(basis, g.degree(), cert);
    std::vector<Poly> ext = basis;
    ext.push_back(g);
    return span_dim(ext, g.degree(), cert) == before;
}

RankMode entry_mode(const CorpusEntry& e, const CorpusRunOptions& opts, Checker& ck) {
    RankMode mode = opts.mode;
    if (e.input.value("probabilistic_only", false) && mode.kind == RankKind::certified) {
        mode = RankMode::probabilistic_seeded(opts.mode.seed);
        ck.infos.push_back("entry runs probabilistically (certified pass skipped by entry policy)");
    }
    return mode;
}

void check_profile_expectations(Checker& ck, const json& exp, const Poly& f,
                                const RankMode& mode) {
    const JacobianProfile& p = cached_profile(f, mode);
    ck.eq(exp, "degree", p.d);
    ck.eq(exp, "tau", p.tau);
    ck.eq(exp, "mdr", p.mdr);
    ck.eq(exp, "nu", p.nu);
    if (exp.contains("sigma")) {
        json got = p.sigma ? json(*p.sigma) : json(nullptr);
        if (exp.at("sigma") != got) ck.mismatch("sigma", exp.at("sigma"), got);
    }
    if (exp.contains("nu_min") && p.nu < exp.at("nu_min").get<int>())
        ck.mismatch("nu_min", exp.at("nu_min"), json(p.nu));
    for (const char* tbl : {"n", "ar", "hilb"}) {
        if (!exp.contains(tbl)) continue;
        for (const auto& [k, v] : exp.at(tbl).items()) {
            int kk = std::stoi(k);
            int got = tbl[0] == 'n' ? p.n_at(kk) : tbl[0] == 'a' ? p.ar_at(kk) : p.hilb_at(kk);
            if (json(got) != v) ck.mismatch(std::string(tbl) + "[" + k + "]", v, json(got));
        }
    }
    if (exp.contains("class") || exp.contains("exponents")) {
        CurveClass c = classify(p);
        ck.eq(exp, "class", c.kind_name());
        if (exp.contains("exponents")) {
            json got = {c.d1, c.d2};
            if (exp.at("exponents") != got) ck.mismatch("exponents", exp.at("exponents"), got);
        }
    }
    bool wants_def = exp.contains("locals");
    for (const char* k : {"ea_tangent_dim", "orbit_dim", "expected_dim", "h1", "unobstructed",
                          "ea_rigid", "es_lower", "es_upper", "m_es_total"})
        if (exp.contains(k)) wants_def = true;
    if (wants_def) {
        std::vector<TpqSing> locals;
        if (exp.contains("locals")) locals = parse_germ_list(exp.at("locals").get<std::string>());
        DeformationReport d = deformation_report(p, locals);
        ck.eq(exp, "ea_tangent_dim", d.ea_tangent_dim);
        ck.eq(exp, "orbit_dim", d.orbit_dim);
        ck.eq(exp, "expected_dim", d.expected_dim);
        ck.eq(exp, "h1", d.h1);
        ck.eq(exp, "unobstructed", d.unobstructed);
        ck.eq(exp, "ea_rigid", d.ea_rigid);
        if (d.m_es_total) {
            ck.eq(exp, "es_lower", *d.es_lower);
            ck.eq(exp, "es_upper", *d.es_upper);
            ck.eq(exp, "m_es_total", *d.m_es_total);
        } else if (exp.contains("es_lower") || exp.contains("es_upper") ||
                   exp.contains("m_es_total")) {
            ck.failures.push_back("es bounds expected but no local types declared");
        }
    }
    if (exp.contains("rigid_case") || exp.contains("rigidity_consistent")) {
        RigidityCheck rc = rigidity_case_check(p);
        ck.eq(exp, "rigid_case", rc.case_id);
        ck.eq(exp, "rigidity_consistent", rc.consistent);
        ck.eq(exp, "rigid", rc.ea_rigid);
    }
    if (exp.contains("sat_contains")) {
        if (mode.kind != RankKind::certified) {
            ck.infos.push_back("saturation membership checks skipped in probabilistic mode");
        } else {
            for (const auto& item : exp.at("sat_contains")) {
                int k = item.at("k").get<int>();
                Poly g = parse_poly(item.at("poly").get<std::string>());
                SaturationSlice s = saturation_slice(f, k, mode);
                if (!s.basis || !in_span(*s.basis, g))
                    ck.failures.push_back("sat_contains: " + item.at("poly").get<std::string>() +
                                          " not in saturation slice at degree " + std::to_string(k));
            }
        }
    }
}

CorpusResult run_entry(const CorpusEntry& e, const CorpusRunOptions& opts) {
    CorpusResult res;
    res.id = e.id;
    auto t0 = std::chrono::steady_clock::now();
    Checker ck;
    bool informational = e.oracle_tag == "EXTERNAL";
    try {
        const std::string type = e.input.at("type").get<std::string>();
        RankMode mode = entry_mode(e, opts, ck);

        if (type == "local") {
            TpqSing g = named_type(e.input.at("germ").get<std::string>());
            ck.eq(e.expected, "mu", g.mu);
            ck.eq(e.expected, "tau_es", g.tau_es);
            ck.eq(e.expected, "m_es", g.m_es);
            ck.eq(e.expected, "modality", g.modality);
        } else if (type == "a_series") {
            int max_n = e.input.at("max_n").get<int>();
            for (int n = 1; n <= max_n; ++n) {
                TpqSing g = named_type("A_" + std::to_string(n));
                if (g.m_es != 0)
                    ck.failures.push_back("A_" + std::to_string(n) + ": m_es = " +
                                          std::to_string(g.m_es) + ", expected 0");
            }
        } else if (type == "poly") {
            Poly f = parse_poly(e.input.at("text").get<std::string>());
            if (e.expected.value("non_reduced", false)) {
                try {
                    cached_profile(f, mode);
                    ck.failures.push_back("expected NonReducedCurve, but profile succeeded");
                } catch (const NonReducedCurve&) {
                }
            } else {
                check_profile_expectations(ck, e.expected, f, mode);
            }
        } else if (type == "pencil") {
            Poly f = parse_poly(e.input.at("f").get<std::string>());
            Poly h = parse_poly(e.input.at("h").get<std::string>());
            const auto& rows = e.expected.at("rows");
            size_t idx = 0;
            for (const auto& tstr : e.input.at("t")) {
                Rat t = rat_from_string(tstr.get<std::string>());
                const json& row = rows.at(idx++);
                Poly ft = f + h * t;
                if (row.value("error", "") == "non_reduced") {
                    try {
                        cached_profile(ft, mode);
                        ck.failures.push_back("t=" + str(t) + ": expected NonReducedCurve");
                    } catch (const NonReducedCurve&) {
                    }
                    continue;
                }
                Checker sub;
                check_profile_expectations(sub, row, ft, mode);
                for (const auto& n : sub.failures) ck.failures.push_back("t=" + str(t) + ": " + n);
                for (const auto& n : sub.infos) ck.infos.push_back("t=" + str(t) + ": " + n);
            }
        } else if (type == "family_form") {
            const std::string family = e.input.at("family").get<std::string>();
            int k = e.input.at("k").get<int>();
            BinaryForm got = family == "fz2_q" ? fz2_q(k) : fe_q(k);
            BinaryForm want = parse_binary_form(e.expected.at("text").get<std::string>());
            if (!(got == want))
                ck.mismatch("form", e.expected.at("text"), json(got.str()));
        } else if (type == "family_curve") {
            const std::string family = e.input.at("family").get<std::string>();
            Poly f;
            if (family == "fz1") {
                f = fz1_curve(e.input.at("d").get<int>(), e.input.at("a").get<int>());
            } else {
                int k = e.input.at("k").get<int>();
                Parametrization par = family == "fz2" ? fz2_param(k) : fe_param(k);
                f = implicitize(par, par.degree()).f;
            }
            check_profile_expectations(ck, e.expected, f, mode);
        } else if (type == "classic_param") {
            ClassicCurve c = classic(*classic_from_string(e.input.at("name").get<std::string>()));
            Poly f = implicitize(c.param, c.param.degree()).f;
            check_profile_expectations(ck, e.expected, f, mode);
        } else if (type == "classic_eq") {
            ClassicCurve c = classic(*classic_from_string(e.input.at("name").get<std::string>()));
            if (!c.equation) throw InternalError("no printed equation for " + c.name);
            check_profile_expectations(ck, e.expected, *c.equation, mode);
        } else if (type == "verify_pair") {
            ClassicCurve c = classic(*classic_from_string(e.input.at("name").get<std::string>()));
            if (!c.equation) throw InternalError("no printed equation for " + c.name);
            bool ok = verify_on_curve(*c.equation, c.param);
            ck.infos.push_back("printed equation vanishes on parametrization: " +
                               std::string(ok ? "true" : "false"));
            informational = true;
        } else if (type == "note") {
            ck.infos.push_back(e.input.value("text", ""));
            informational = true;
        } else {
            throw InternalError("unknown corpus entry type: " + type);
        }
        res.status = informational ? "INFO" : ck.failures.empty() ? "PASS" : "FAIL";
    } catch (const ResourceLimit& ex) {
        res.status = "SKIP";
        ck.infos.push_back(ex.what());
    } catch (const std::exception& ex) {
        res.status = informational ? "INFO" : "FAIL";
        ck.failures.push_back(std::string("error: ") + ex.what());
    }
    res.notes = ck.all_notes();
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace

std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries,
                                     const CorpusRunOptions& opts) {
    std::vector<const CorpusEntry*> selected;
    for (const auto& e : entries)
        if (opts.filter.empty() || e.id.find(opts.filter) != std::string::npos)
            selected.push_back(&e);

    std::vector<CorpusResult> results(selected.size());
    std::atomic<size_t> next{0};
    int workers = opts.workers > 0 ? opts.workers
                                   : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min<int>(workers, static_cast<int>(selected.size()));
    std::vector<std::thread> pool;
    for (int w = 0; w < std::max(workers, 1); ++w) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= selected.size()) return;
                results[i] = run_entry(*selected[i], opts);
            }
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

std::vector<SweepRow> run_sweep(const SweepRequest& req, const RankMode& mode, bool force,
                                int workers) {
    struct Job {
        FamilyExpectation expect;
        std::function<Poly()> build;
    };
    std::vector<Job> jobs;
    if (req.family == "fz1") {
        for (int d = req.lo; d <= req.hi; ++d) {
            int amin = (d - 2 + 1) / 2, amax = d - 3;
            for (int a = amin; a <= amax; ++a) {
                jobs.push_back({fz1_expected(d, a), [d, a] { return fz1_curve(d, a); }});
                if (!req.all_a) break;
            }
        }
    } else if (req.family == "fz2") {
        for (int k = req.lo; k <= req.hi; ++k)
            jobs.push_back({fz2_expected(k), [k] {
                                Parametrization p = fz2_param(k);
                                return implicitize(p, p.degree()).f;
                            }});
    } else if (req.family == "fe") {
        for (int k = req.lo; k <= req.hi; ++k)
            jobs.push_back({fe_expected(k), [k] {
                                Parametrization p = fe_param(k);
                                return implicitize(p, p.degree()).f;
                            }});
    } else {
        throw std::invalid_argument("unknown family: " + req.family);
    }

    std::vector<SweepRow> rows(jobs.size());
    std::atomic<size_t> next{0};
    int n_workers = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
    if (n_workers < 1) n_workers = 1;
    n_workers = std::min<int>(n_workers, static_cast<int>(jobs.size()));
    std::vector<std::thread> pool;
    for (int w = 0; w < std::max(n_workers, 1); ++w) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                SweepRow& row = rows[i];
                row.expect = jobs[i].expect;
                try {
                    check_resource_guard(row.expect.degree, mode, force);
                    Poly f = jobs[i].build();
                    const JacobianProfile& p = cached_profile(f, mode);
                    CurveClass c = classify(p);
                    row.got_mdr = p.mdr;
                    row.got_tau = p.tau;
                    row.got_class = c.kind_name();
                    bool pass = p.mdr == row.expect.mdr && p.tau == row.expect.tau &&
                                c.kind == CurveKind::free_curve;
                    row.status = pass ? "PASS" : "FAIL";
                } catch (const ResourceLimit& ex) {
                    row.status = "SKIP";
                    row.note = ex.what();
                } catch (const std::exception& ex) {
                    row.status = "FAIL";
                    row.note = ex.what();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    return rows;
}

}  // namespace curvelab
