#include <curvelab/deform.hpp>
#include <curvelab/errors.hpp>

namespace curvelab {

std::string CurveClass::kind_name() const {
    switch (kind) {
        case CurveKind::free_curve: return "free";
        case CurveKind::nearly_free: return "nearly_free";
        default: return "neither";
    }
}

CurveClass classify(const JacobianProfile& p) {
    if (p.mdr < 1) throw MdrZero("mdr(f) = 0: d concurrent lines; classification refused");
    CurveClass c;
    c.nu = p.nu;
    if (p.nu == 0) {
        c.kind = CurveKind::free_curve;
        c.d1 = p.mdr;
        c.d2 = p.d - 1 - p.mdr;
        int expect = (p.d - 1) * (p.d - 1) - c.d1 * c.d2;
        if (p.tau != expect)
            throw TauFormulaMismatch("free curve tau " + std::to_string(p.tau) +
                                     " != " + std::to_string(expect));
    } else if (p.nu == 1) {
        c.kind = CurveKind::nearly_free;
        c.d1 = p.mdr;
        c.d2 = p.d - p.mdr;
        int expect = (p.d - 1) * (p.d - 1) - c.d1 * (c.d2 - 1) - 1;
        if (p.tau != expect)
            throw TauFormulaMismatch("nearly free curve tau " + std::to_string(p.tau) +
                                     " != " + std::to_string(expect));
        if (!p.sigma || *p.sigma != p.d + p.mdr - 3)
            throw InternalError("nearly free sigma formula violated");
    } else {
        c.kind = CurveKind::neither;
    }
    return c;
}

DeformationReport deformation_report(const JacobianProfile& p,
                                     const std::vector<TpqSing>& local_types) {
    if (p.mdr < 1) throw MdrZero("mdr(f) = 0: deformation analysis refused");
    DeformationReport r;
    const int ar1 = p.ar_at(1);
    r.orbit_dim = 8 - ar1;
    r.ea_tangent_dim = 8 - ar1 + p.n_at(p.d);
    r.expected_dim = p.d * (p.d + 3) / 2 - p.tau;
    r.h1 = p.ar_at(p.d - 5);
    r.unobstructed = r.h1 == 0;
    if (r.unobstructed != (p.mdr >= p.d - 4))
        throw InternalError("unobstructedness criteria disagree");
    r.ea_rigid = p.n_at(p.d) == 0;

    if (!local_types.empty()) {
        int tau_sum = 0, mes = 0;
        for (const auto& g : local_types) {
            tau_sum += g.tau();
            if (!g.is_simple()) mes += g.m_es;
        }
        if (tau_sum != p.tau)
            throw TauBudgetMismatch("declared local Tjurina numbers sum to " +
                                    std::to_string(tau_sum) + ", global tau is " +
                                    std::to_string(p.tau));
        r.m_es_total = mes;
        r.es_lower = r.ea_tangent_dim;
        r.es_upper = r.ea_tangent_dim + mes;
        r.es_tight = p.mdr >= p.d - 4;
    }
    return r;
}

RigidityCheck rigidity_case_check(const JacobianProfile& p) {
    RigidityCheck out;
    out.ea_rigid = p.n_at(p.d) == 0;
    if (p.mdr >= 4)
        out.case_id = 1;
    else if (p.mdr == 2 && p.d == 4)
        out.case_id = 2;
    else if (p.mdr == 1 && (p.d == 2 || p.d == 3))
        out.case_id = 3;
    bool predicted = out.case_id != 0;
    out.consistent = predicted == out.ea_rigid;
    if (!out.ea_rigid) out.case_id = 0;
    return out;
}

std::vector<std::string> degree_bound_flags(const JacobianProfile& p, const CurveClass& cls,
                                            const DeformationReport& def,
                                            const FlagOptions& opts) {
    std::vector<std::string> flags;
    if (cls.kind == CurveKind::free_curve && def.unobstructed && p.d > 7)
        flags.push_back("inconsistent: free unobstructed curve must have degree <= 7 (d=" +
                        std::to_string(p.d) + ")");
    if (cls.kind == CurveKind::nearly_free && def.unobstructed && p.d > 8)
        flags.push_back("inconsistent: nearly free unobstructed curve must have degree <= 8 (d=" +
                        std::to_string(p.d) + ")");
    if (opts.declared_nodal) {
        if (p.mdr < p.d - 2)
            flags.push_back("inconsistent: nodal curve expects mdr >= d-2, got mdr=" +
                            std::to_string(p.mdr));
        else
            flags.push_back("nodal bound ok: mdr=" + std::to_string(p.mdr) +
                            " >= d-2=" + std::to_string(p.d - 2));
    }
    if (opts.declared_irreducible && cls.kind == CurveKind::free_curve) {
        if (p.mdr < 2)
            flags.push_back("inconsistent: irreducible free curve expects mdr >= 2, got mdr=" +
                            std::to_string(p.mdr));
        else
            flags.push_back("irreducible free bound ok: mdr=" + std::to_string(p.mdr) + " >= 2");
    }
    return flags;
}

std::vector<PencilEntry> analyze_pencil(const Poly& f, const Poly& h,
                                        const std::vector<Rat>& t_values, const RankMode& mode) {
    if (h.is_zero() || !h.is_homogeneous() || h.degree() != f.degree())
        throw DegreeError("pencil direction must be homogeneous of the same degree");
    std::vector<PencilEntry> out;
    for (const auto& t : t_values) {
        PencilEntry e;
        e.t = t;
        Poly ft = f + h * t;
        try {
            e.profile = profile(ft, mode);
            try {
                e.cls = classify(*e.profile);
            } catch (const MdrZero&) {
                // profile stands on its own; classification refused
            }
        } catch (const Error& err) {
            e.error = err.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace curvelab
