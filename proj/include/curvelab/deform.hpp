#pragma once

#include <curvelab/jacobian.hpp>
#include <curvelab/local_sing.hpp>
#include <curvelab/poly.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace curvelab {

// ---------------------------------------------------------------------------
// Free / nearly free classification with exponents.
//   free        <=> nu = 0, exponents (mdr, d-1-mdr), tau = (d-1)^2 - d1 d2
//   nearly free <=> nu = 1, exponents (mdr, d-mdr),   tau = (d-1)^2 - d1(d2-1) - 1
// The closed-form tau is asserted against the computed one; a mismatch is an
// engine bug, not a property of the input.
// ---------------------------------------------------------------------------

enum class CurveKind { free_curve, nearly_free, neither };

struct CurveClass {
    CurveKind kind = CurveKind::neither;
    int d1 = 0, d2 = 0;  // meaningful for free / nearly free
    int nu = 0;
    std::string kind_name() const;
};

CurveClass classify(const JacobianProfile& p);

// ---------------------------------------------------------------------------
// Deformation-theoretic quantities of the equianalytic / equisingular family
// containing C.
// ---------------------------------------------------------------------------

struct DeformationReport {
    int ea_tangent_dim = 0;  // 8 - ar(f)_1 + n(f)_d
    int orbit_dim = 0;       // 8 - ar(f)_1
    int expected_dim = 0;    // d(d+3)/2 - tau
    int h1 = 0;              // ar(f)_{d-5}, the obstruction space dimension
    bool unobstructed = false;
    bool ea_rigid = false;
    // Present only when local singularity types were declared.
    std::optional<int> m_es_total;
    std::optional<int> es_lower, es_upper;
    bool es_tight = false;  // upper bound attained (mdr >= d-4)
};

// local_types, when given, must be quasi-homogeneous T_{p,q} germs whose
// Tjurina numbers sum to the global tau (else TauBudgetMismatch).
DeformationReport deformation_report(const JacobianProfile& p,
                                     const std::vector<TpqSing>& local_types = {});

// ---------------------------------------------------------------------------
// Rigidity case analysis for nearly free curves: n(f)_d = 0 iff
//   (i) mdr >= 4, or (ii) mdr = 2 and d = 4, or (iii) mdr = 1 and d in {2,3}.
// ---------------------------------------------------------------------------

struct RigidityCheck {
    bool ea_rigid = false;
    int case_id = 0;     // 1..3 per the case list; 0 when not rigid
    bool consistent = false;  // computed n(f)_d agrees with the case analysis
};

RigidityCheck rigidity_case_check(const JacobianProfile& p);

// ---------------------------------------------------------------------------
// Advisory consistency flags from degree bounds.
// ---------------------------------------------------------------------------

struct FlagOptions {
    bool declared_nodal = false;       // all declared germs are A_1
    bool declared_irreducible = false; // user-asserted; never inferred
};

std::vector<std::string> degree_bound_flags(const JacobianProfile& p, const CurveClass& cls,
                                            const DeformationReport& def,
                                            const FlagOptions& opts = {});

// ---------------------------------------------------------------------------
// Pencil analysis: f_t = f + t h for each requested t.
// ---------------------------------------------------------------------------

struct PencilEntry {
    Rat t;
    std::optional<JacobianProfile> profile;
    std::optional<CurveClass> cls;
    std::string error;  // nonempty when this member failed (e.g. non-reduced)
};

std::vector<PencilEntry> analyze_pencil(const Poly& f, const Poly& h,
                                        const std::vector<Rat>& t_values, const RankMode& mode);

}  // namespace curvelab
