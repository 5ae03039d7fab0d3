#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <curvelab/deform.hpp>
#include <curvelab/errors.hpp>
#include <curvelab/families.hpp>
#include <curvelab/implicitize.hpp>

using namespace curvelab;

namespace {

const RankMode kCert = RankMode::certified();

JacobianProfile prof(const char* text) { return profile(parse_poly(text), kCert); }

}  // namespace

TEST_CASE("classification of the printed tricuspidal curves") {
    ClassicCurve c4 = classic(ClassicName::C4);
    CurveClass quartic = classify(profile(*c4.equation, kCert));
    CHECK(quartic.kind == CurveKind::nearly_free);
    CHECK(quartic.d1 == 2);
    CHECK(quartic.d2 == 2);
    CHECK(profile(*c4.equation, kCert).tau == 6);

    ClassicCurve c5 = classic(ClassicName::C5);
    JacobianProfile p5 = profile(*c5.equation, kCert);
    CurveClass quintic = classify(p5);
    CHECK(quintic.kind == CurveKind::free_curve);
    CHECK(quintic.d1 == 2);
    CHECK(quintic.d2 == 2);
    CHECK(p5.tau == 12);
}

TEST_CASE("luengo curve is neither free nor nearly free") {
    CurveClass c = classify(prof("x^9+z*(x*z^3+y^4)^2"));
    CHECK(c.kind == CurveKind::neither);
    CHECK(c.nu >= 2);
}

TEST_CASE("classification refuses mdr zero") {
    CHECK_THROWS_AS(classify(prof("x*y")), MdrZero);
    CHECK_THROWS_AS(deformation_report(prof("x*y")), MdrZero);
}

TEST_CASE("deformation report: luengo") {
    DeformationReport r = deformation_report(prof("x^9+z*(x*z^3+y^4)^2"));
    CHECK(r.ea_tangent_dim == 20);
    CHECK(r.h1 == 1);
    CHECK_FALSE(r.unobstructed);
    CHECK(r.orbit_dim == 8);
    CHECK_FALSE(r.ea_rigid);
}

TEST_CASE("deformation report: deformed luengo is unobstructed") {
    DeformationReport r = deformation_report(prof("x^9+x^8*z+z*(x*z^3+y^4)^2"));
    CHECK(r.expected_dim == 23);
    CHECK(r.unobstructed);
    CHECK(r.h1 == 0);
}

TEST_CASE("deformation report with declared local types") {
    JacobianProfile p = prof("y^6+x^5*z");
    DeformationReport r = deformation_report(p, parse_germ_list("T(5,6)"));
    CHECK(r.ea_tangent_dim == 8);
    REQUIRE(r.m_es_total.has_value());
    CHECK(*r.m_es_total == 3);
    CHECK(*r.es_lower == 8);
    CHECK(*r.es_upper == 11);
    CHECK_FALSE(r.es_tight);  // mdr = 1 < d-4 = 2

    JacobianProfile p52 = prof("y^5+x^4*z");
    DeformationReport r52 = deformation_report(p52, parse_germ_list("T(4,5)"));
    CHECK(r52.ea_tangent_dim == 8);
    CHECK(*r52.es_lower == 8);
    CHECK(*r52.es_upper == 9);
    CHECK(r52.es_tight);  // mdr = 1 >= d-4 = 1

    CHECK_THROWS_AS(deformation_report(p, parse_germ_list("T(4,5)")), TauBudgetMismatch);
}

TEST_CASE("degree-7 curve with 3 D4 and 7 A1 passes the tau budget") {
    JacobianProfile p = prof("y*(x+2*y+z)*(x-2*y-z)*(x^4-x^2*z^2+y^2*z^2+y^3*z)");
    CHECK(p.tau == 19);
    CHECK(p.mdr == 5);
    DeformationReport r = deformation_report(p, parse_germ_list("D4,D4,D4,A_1x7"));
    CHECK(r.unobstructed);
    CHECK(r.expected_dim == 16);
    CHECK(*r.m_es_total == 0);  // all declared germs are simple
    CHECK(*r.es_lower == *r.es_upper);
}

TEST_CASE("rigidity case analysis") {
    RigidityCheck conic = rigidity_case_check(prof("x^2+y^2+z^2"));
    CHECK(conic.ea_rigid);
    CHECK(conic.case_id == 3);
    CHECK(conic.consistent);

    RigidityCheck c4p = rigidity_case_check(prof("y^4-x*z^3"));
    CHECK_FALSE(c4p.ea_rigid);
    CHECK(c4p.consistent);

    RigidityCheck c4 = rigidity_case_check(prof("y^4-x*z^3-y^3*z"));
    CHECK(c4.ea_rigid);
    CHECK(c4.case_id == 2);
    CHECK(c4.consistent);
}

TEST_CASE("ea-rigidity is equivalent to orbit dimension equality") {
    for (const char* text : {"x^2+y^2+z^2", "x^2*y+z^3", "x*y*z", "y^4-x*z^3",
                             "y^4-x*z^3-y^3*z", "y^5+x^4*z", "x^9+z*(x*z^3+y^4)^2"}) {
        JacobianProfile p = prof(text);
        DeformationReport r = deformation_report(p);
        CHECK(r.ea_rigid == (p.n_at(p.d) == 0));
        CHECK(r.ea_rigid == (r.ea_tangent_dim == r.orbit_dim));
    }
}

TEST_CASE("free curves are ea-rigid") {
    for (const char* text : {"x*y*z", "x*y*z*(x+y)", "9*x*y^4-4*y^5-24*x^2*y^2*z+48*x*y^3*z-16*y^4*z+16*x^3*z^2"}) {
        JacobianProfile p = prof(text);
        CHECK(classify(p).kind == CurveKind::free_curve);
        CHECK(deformation_report(p).ea_rigid);
    }
}

TEST_CASE("pencil analysis over the quintic") {
    Poly f = parse_poly("y^5+x^4*z");
    auto rows = analyze_pencil(f, parse_poly("x^3*y^2"), {Rat(0), Rat(1)}, kCert);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].profile->tau == 12);
    CHECK(rows[0].cls->kind == CurveKind::nearly_free);
    CHECK(rows[0].profile->mdr == 1);
    CHECK(rows[1].profile->tau == 12);
    CHECK(rows[1].profile->mdr == 2);
    CHECK(rows[1].cls->kind == CurveKind::free_curve);

    auto rows2 = analyze_pencil(f, parse_poly("x^2*y^3"), {Rat(1)}, kCert);
    CHECK(rows2[0].profile->tau == 11);
    CHECK(rows2[0].profile->mdr == 2);
    CHECK(rows2[0].cls->kind == CurveKind::nearly_free);
}

TEST_CASE("pencil analysis over the sextic") {
    Poly f = parse_poly("y^6+x^5*z");
    auto rows = analyze_pencil(f, parse_poly("x^4*y^2"), {Rat(1)}, kCert);
    CHECK(rows[0].profile->tau == 19);
    CHECK(rows[0].profile->mdr == 2);
    CHECK(rows[0].cls->kind == CurveKind::free_curve);

    auto rows2 = analyze_pencil(f, parse_poly("x^3*y^3"), {Rat(1)}, kCert);
    CHECK(rows2[0].profile->tau == 18);
    CHECK(rows2[0].profile->mdr == 3);
    CHECK(rows2[0].cls->kind == CurveKind::nearly_free);
}

TEST_CASE("pencil members fail individually") {
    // f + 1*h = z^3 is non-reduced; t = 0 still succeeds
    Poly f = parse_poly("x^2*y+z^3");
    Poly h = parse_poly("-x^2*y");
    auto rows = analyze_pencil(f, h, {Rat(0), Rat(1)}, kCert);
    CHECK(rows[0].error.empty());
    CHECK(rows[0].profile->tau == 2);
    CHECK_FALSE(rows[1].error.empty());
    CHECK_FALSE(rows[1].profile.has_value());
}

TEST_CASE("degree bound flags") {
    // synthetic profile: a "free unobstructed degree 9" record is inconsistent
    JacobianProfile fake;
    fake.d = 9;
    fake.tau = 50;
    CurveClass cls;
    cls.kind = CurveKind::free_curve;
    DeformationReport def;
    def.unobstructed = true;
    auto flags = degree_bound_flags(fake, cls, def, {});
    REQUIRE(flags.size() == 1);
    CHECK(flags[0].find("inconsistent") != std::string::npos);

    // xyz: free, mdr 1, reducible: no irreducibility expectation raised
    JacobianProfile t = prof("x*y*z");
    CurveClass tc = classify(t);
    DeformationReport td = deformation_report(t);
    CHECK(degree_bound_flags(t, tc, td, {}).empty());
    // declared irreducible it would be flagged
    FlagOptions fo;
    fo.declared_irreducible = true;
    auto f2 = degree_bound_flags(t, tc, td, fo);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].find("inconsistent") != std::string::npos);

    // nodal quartic: mdr 2 >= d-2 = 2, consistent
    JacobianProfile q = prof("x*y*z*(x+y+z)");
    CurveClass qc = classify(q);
    DeformationReport qd = deformation_report(q, parse_germ_list("A_1x6"));
    FlagOptions nodal;
    nodal.declared_nodal = true;
    auto f3 = degree_bound_flags(q, qc, qd, nodal);
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].find("ok") != std::string::npos);
}

TEST_CASE("tau formula cross-checks fire on corrupted profiles") {
    JacobianProfile p = prof("x*y*z");
    p.tau += 1;
    CHECK_THROWS_AS(classify(p), TauFormulaMismatch);
}
