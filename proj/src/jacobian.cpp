#include <curvelab/errors.hpp>
#include <curvelab/jacobian.hpp>

#include <array>
#include <deque>
#include <utility>

namespace curvelab {

void validate_curve_input(const Poly& f) {
    if (f.is_zero()) throw DegreeError("zero polynomial is not a curve");
    if (!f.is_homogeneous()) throw DegreeError("curve equation must be homogeneous");
    if (f.degree() < 2) throw DegreeError("curve degree must be at least 2");
}

int JacobianProfile::hilb_at(int k) const {
    if (k < 0) return 0;
    if (k < static_cast<int>(hilb.size())) return hilb[static_cast<size_t>(k)];
    return tau;  // stabilized from 3d-5 on
}

int JacobianProfile::n_at(int k) const {
    if (k < 0 || k > T) return 0;
    return n_table[static_cast<size_t>(k)];
}

int JacobianProfile::ar_at(int m) const {
    if (m < 0) return 0;
    if (m < static_cast<int>(ar_table.size())) return ar_table[static_cast<size_t>(m)];
    return 3 * DegreeBasis::dim(m) - DegreeBasis::dim(m + d - 1) + hilb_at(m + d - 1);
}

namespace {

// Deque keeps references stable while the cache grows.
class BasisCache {
  public:
    const DegreeBasis& at(int k) const {
        while (static_cast<int>(b_.size()) <= k) b_.emplace_back(static_cast<int>(b_.size()));
        return b_[static_cast<size_t>(k)];
    }

  private:
    mutable std::deque<DegreeBasis> b_;
};

std::array<Poly, 3> primitive_partials(const Poly& f) {
    return {f.partial(0).primitive_integer(), f.partial(1).primitive_integer(),
            f.partial(2).primitive_integer()};
}

// ---------------------------------------------------------------------------
// Engines: identical pipeline over exact integers (certified) or over Z/p
// (probabilistic; run per prime, results must agree).
// ---------------------------------------------------------------------------

class CertEngine {
  public:
    using Row = ZRow;
    using Rows = ZRows;

    CertEngine(const std::array<Poly, 3>& prims) : prims_(prims) {}

    // Rows spanning (J_f)_k: every monomial multiple of a nonzero partial.
    Rows gen_rows(const BasisCache& bc, int k, int d) const {
        const DegreeBasis& target = bc.at(k);
        const DegreeBasis& mult = bc.at(k - d + 1);
        Rows rows;
        for (const auto& p : prims_) {
            if (p.is_zero()) continue;
            for (const auto& m : mult.monomials) {
                Row row(static_cast<size_t>(target.size()));
                for (const auto& [mono, c] : p.terms())
                    row[static_cast<size_t>(target.index_of(mono * m))] = c.get_num();
                rows.push_back(std::move(row));
            }
        }
        return rows;
    }

    int echelon_rank(Rows& rows, int cols) const { return z_echelon(rows, cols); }

    std::pair<int, Rows> kernel(const Rows& rows, int cols) const {
        ZKernel k = z_kernel(rows, cols);
        return {k.rank, std::move(k.basis)};
    }

  private:
    const std::array<Poly, 3>& prims_;
};

class ModEngine {
  public:
    using Row = PRow;
    using Rows = PRows;

    ModEngine(const std::array<Poly, 3>& prims, uint64_t p) : p_(p) {
        for (size_t i = 0; i < 3; ++i) {
            for (const auto& [mono, c] : prims[i].terms()) {
                Int n = c.get_num();
                uint64_t r = mpz_fdiv_ui(n.get_mpz_t(), p_);
                terms_[i].emplace_back(mono, r);
            }
        }
    }

    Rows gen_rows(const BasisCache& bc, int k, int d) const {
        const DegreeBasis& target = bc.at(k);
        const DegreeBasis& mult = bc.at(k - d + 1);
        Rows rows;
        for (const auto& tlist : terms_) {
            if (tlist.empty()) continue;
            for (const auto& m : mult.monomials) {
                Row row(static_cast<size_t>(target.size()), 0);
                for (const auto& [mono, c] : tlist)
                    row[static_cast<size_t>(target.index_of(mono * m))] = c;
                rows.push_back(std::move(row));
            }
        }
        return rows;
    }

    int echelon_rank(Rows& rows, int cols) const { return zp_echelon(rows, cols, p_); }

    std::pair<int, Rows> kernel(const Rows& rows, int cols) const {
        PKernel k = zp_kernel(rows, cols, p_);
        return {k.rank, std::move(k.basis)};
    }

  private:
    uint64_t p_;
    std::array<std::vector<std::pair<Monomial, uint64_t>>, 3> terms_;
};

struct Tables {
    std::vector<int> hilb;  // 0 .. 3d-4
    std::vector<int> c;     // 0 .. T; c[k] = dim S_k - dim (I_f)_k

    bool operator==(const Tables& o) const { return hilb == o.hilb && c == o.c; }
};

// One downward step of the saturation recursion: from functionals cutting out
// (I_f)_{k+1} inside S_{k+1}, build the constraints l(v*g) = 0 on g in S_k.
template <class Engine>
typename Engine::Rows descend(const Engine& eng, const BasisCache& bc, int k,
                              const typename Engine::Rows& L, int* rank_out) {
    const DegreeBasis& bk = bc.at(k);
    const DegreeBasis& bk1 = bc.at(k + 1);
    std::array<std::vector<int>, 3> tgt;
    for (int v = 0; v < 3; ++v) {
        tgt[static_cast<size_t>(v)].resize(static_cast<size_t>(bk.size()));
        for (int j = 0; j < bk.size(); ++j) {
            Monomial m = bk.monomials[static_cast<size_t>(j)];
            m.e[v] += 1;
            tgt[static_cast<size_t>(v)][static_cast<size_t>(j)] = bk1.index_of(m);
        }
    }
    typename Engine::Rows C;
    C.reserve(3 * L.size());
    for (const auto& ell : L) {
        for (int v = 0; v < 3; ++v) {
            typename Engine::Row row(static_cast<size_t>(bk.size()));
            for (int j = 0; j < bk.size(); ++j)
                row[static_cast<size_t>(j)] =
                    ell[static_cast<size_t>(tgt[static_cast<size_t>(v)][static_cast<size_t>(j)])];
            C.push_back(std::move(row));
        }
    }
    *rank_out = eng.echelon_rank(C, bk.size());
    return C;
}

// Functionals cutting out (I_f)_k inside S_k, seeded at degree 3d-5 where
// I and J agree (N(f) vanishes above T = 3d-6).
template <class Engine>
typename Engine::Rows sat_functionals(const Engine& eng, const BasisCache& bc, int d, int k,
                                      int* seed_rank) {
    const int R = 3 * d - 5;
    auto gen = eng.gen_rows(bc, R, d);
    auto [rank_R, L] = eng.kernel(gen, DegreeBasis::dim(R));
    if (seed_rank) *seed_rank = rank_R;
    for (int level = R - 1; level >= k; --level) {
        int ck = 0;
        L = descend(eng, bc, level, L, &ck);
    }
    return L;
}

template <class Engine>
Tables run_tables(const Engine& eng, const BasisCache& bc, int d) {
    const int top = 3 * d - 4, R = 3 * d - 5, T = 3 * d - 6;
    Tables t;
    t.hilb.assign(static_cast<size_t>(top) + 1, 0);
    for (int k = 0; k <= top; ++k) {
        if (k == R) continue;
        int D = DegreeBasis::dim(k);
        if (k < d - 1) {
            t.hilb[static_cast<size_t>(k)] = D;
            continue;
        }
        auto rows = eng.gen_rows(bc, k, d);
        t.hilb[static_cast<size_t>(k)] = D - eng.echelon_rank(rows, D);
    }
    auto gen = eng.gen_rows(bc, R, d);
    auto [rank_R, L] = eng.kernel(gen, DegreeBasis::dim(R));
    t.hilb[static_cast<size_t>(R)] = DegreeBasis::dim(R) - rank_R;

    t.c.assign(static_cast<size_t>(T) + 1, 0);
    for (int k = T; k >= 0; --k) {
        int ck = 0;
        L = descend(eng, bc, k, L, &ck);
        t.c[static_cast<size_t>(k)] = ck;
    }
    return t;
}

Tables tables_for(const Poly& f, const RankMode& mode, const BasisCache& bc) {
    const int d = f.degree();
    auto prims = primitive_partials(f);
    if (mode.kind == RankKind::certified) {
        CertEngine eng(prims);
        return run_tables(eng, bc, d);
    }
    for (int round = 0; round < 3; ++round) {
        auto [p1, p2] = prime_pair(mode.seed, round);
        ModEngine e1(prims, p1), e2(prims, p2);
        Tables t1 = run_tables(e1, bc, d);
        Tables t2 = run_tables(e2, bc, d);
        if (t1 == t2) return t1;
    }
    throw InternalError("probabilistic profiles disagreed across retries");
}

int rank_at_degree(const Poly& f, int k, const RankMode& mode, const BasisCache& bc) {
    const int d = f.degree();
    if (k < d - 1) return 0;
    auto prims = primitive_partials(f);
    if (mode.kind == RankKind::certified) {
        CertEngine eng(prims);
        auto rows = eng.gen_rows(bc, k, d);
        return eng.echelon_rank(rows, DegreeBasis::dim(k));
    }
    for (int round = 0; round < 3; ++round) {
        auto [p1, p2] = prime_pair(mode.seed, round);
        ModEngine e1(prims, p1), e2(prims, p2);
        auto r1rows = e1.gen_rows(bc, k, d);
        auto r2rows = e2.gen_rows(bc, k, d);
        int r1 = e1.echelon_rank(r1rows, DegreeBasis::dim(k));
        int r2 = e2.echelon_rank(r2rows, DegreeBasis::dim(k));
        if (r1 == r2) return r1;
    }
    throw InternalError("probabilistic ranks disagreed across retries");
}

}  // namespace

int hilb_MJ(const Poly& f, int k, const RankMode& mode) {
    validate_curve_input(f);
    if (k < 0) throw DegreeError("negative degree");
    BasisCache bc;
    return DegreeBasis::dim(k) - rank_at_degree(f, k, mode, bc);
}

int tau_total(const Poly& f, const RankMode& mode) {
    validate_curve_input(f);
    const int d = f.degree();
    BasisCache bc;
    int h1 = DegreeBasis::dim(3 * d - 5) - rank_at_degree(f, 3 * d - 5, mode, bc);
    int h2 = DegreeBasis::dim(3 * d - 4) - rank_at_degree(f, 3 * d - 4, mode, bc);
    if (h1 != h2)
        throw NonReducedCurve("Hilbert function fails to stabilize: hilb(3d-5)=" +
                              std::to_string(h1) + " vs hilb(3d-4)=" + std::to_string(h2));
    return h1;
}

int ar_dim(const Poly& f, int m, const RankMode& mode) {
    validate_curve_input(f);
    if (m < 0) return 0;
    BasisCache bc;
    const int d = f.degree();
    return 3 * DegreeBasis::dim(m) - rank_at_degree(f, m + d - 1, mode, bc);
}

std::vector<std::array<Poly, 3>> ar_basis(const Poly& f, int m) {
    validate_curve_input(f);
    const int d = f.degree();
    BasisCache bc;
    const DegreeBasis& bm = bc.at(m);
    const DegreeBasis& btgt = bc.at(m + d - 1);
    const int Dm = bm.size();

    std::array<Poly, 3> parts = {f.partial(0), f.partial(1), f.partial(2)};
    std::array<Rat, 3> scale;
    std::array<Poly, 3> prims;
    for (size_t i = 0; i < 3; ++i) {
        scale[i] = parts[i].is_zero() ? Rat(1) : parts[i].content();
        prims[i] = parts[i].primitive_integer();
    }

    // Map matrix rows: one per target monomial, columns blocked (a|b|c).
    ZRows rows(static_cast<size_t>(btgt.size()), ZRow(static_cast<size_t>(3 * Dm)));
    for (int blk = 0; blk < 3; ++blk) {
        for (int j = 0; j < Dm; ++j) {
            for (const auto& [mono, c] : prims[static_cast<size_t>(blk)].terms()) {
                int r = btgt.index_of(mono * bm.monomials[static_cast<size_t>(j)]);
                rows[static_cast<size_t>(r)][static_cast<size_t>(blk * Dm + j)] = c.get_num();
            }
        }
    }
    ZKernel ker = z_kernel(rows, 3 * Dm);

    std::vector<std::array<Poly, 3>> out;
    for (const auto& v : ker.basis) {
        std::array<Poly, 3> syz;
        for (int blk = 0; blk < 3; ++blk) {
            Poly comp;
            for (int j = 0; j < Dm; ++j) {
                const Int& x = v[static_cast<size_t>(blk * Dm + j)];
                if (x == 0) continue;
                // kernel is for the scaled partials; unscale per block
                comp.add_term(bm.monomials[static_cast<size_t>(j)],
                              Rat(x) / scale[static_cast<size_t>(blk)]);
            }
            syz[static_cast<size_t>(blk)] = comp;
        }
        // normalize the triple to primitive integer coefficients
        Int num_gcd(0), den_lcm(1);
        for (const auto& s : syz) {
            for (const auto& [mono, c] : s.terms()) {
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
            }
        }
        if (num_gcd != 0) {
            Rat scale_all = Rat(den_lcm) / Rat(num_gcd);
            for (auto& s : syz) s = s * scale_all;
        }
        out.push_back(std::move(syz));
    }
    return out;
}

int mdr(const Poly& f, const RankMode& mode) {
    validate_curve_input(f);
    const int d = f.degree();
    BasisCache bc;
    for (int m = 0; m <= d - 1; ++m) {
        int ar = 3 * DegreeBasis::dim(m) - rank_at_degree(f, m + d - 1, mode, bc);
        if (ar > 0) return m;
    }
    throw InternalError("no Jacobian syzygy found up to degree d-1");
}

SaturationSlice saturation_slice(const Poly& f, int k, const RankMode& mode) {
    validate_curve_input(f);
    const int d = f.degree();
    if (k < 0 || k > 3 * d - 4) throw DegreeError("saturation slice degree out of range");
    BasisCache bc;
    const DegreeBasis& bk = bc.at(k);
    auto prims = primitive_partials(f);

    SaturationSlice out;
    out.degree = k;

    if (k >= 3 * d - 5) {
        // I and J agree here.
        int r = rank_at_degree(f, k, mode, bc);
        out.dim = r;
        if (mode.kind == RankKind::certified) {
            CertEngine eng(prims);
            auto rows = eng.gen_rows(bc, k, d);
            z_echelon(rows, bk.size());
            std::vector<Poly> basis;
            for (const auto& row : rows) {
                Poly p;
                for (int j = 0; j < bk.size(); ++j)
                    if (row[static_cast<size_t>(j)] != 0)
                        p.add_term(bk.monomials[static_cast<size_t>(j)],
                                   Rat(row[static_cast<size_t>(j)]));
                basis.push_back(std::move(p));
            }
            out.basis = std::move(basis);
        }
        return out;
    }

    if (mode.kind == RankKind::certified) {
        CertEngine eng(prims);
        auto L = sat_functionals(eng, bc, d, k, nullptr);
        ZKernel ker = z_kernel(L, bk.size());
        out.dim = static_cast<int>(ker.basis.size());
        std::vector<Poly> basis;
        for (const auto& v : ker.basis) {
            Poly p;
            for (int j = 0; j < bk.size(); ++j)
                if (v[static_cast<size_t>(j)] != 0)
                    p.add_term(bk.monomials[static_cast<size_t>(j)], Rat(v[static_cast<size_t>(j)]));
            basis.push_back(std::move(p));
        }
        out.basis = std::move(basis);
        return out;
    }

    for (int round = 0; round < 3; ++round) {
        auto [p1, p2] = prime_pair(mode.seed, round);
        ModEngine e1(prims, p1), e2(prims, p2);
        auto L1 = sat_functionals(e1, bc, d, k, nullptr);
        auto L2 = sat_functionals(e2, bc, d, k, nullptr);
        int d1 = bk.size() - zp_rank(L1, bk.size(), p1);
        int d2 = bk.size() - zp_rank(L2, bk.size(), p2);
        if (d1 == d2) {
            out.dim = d1;
            return out;
        }
    }
    throw InternalError("probabilistic saturation slices disagreed across retries");
}

int n_dim(const Poly& f, int k, const RankMode& mode) {
    validate_curve_input(f);
    const int d = f.degree();
    if (k < 0 || k > 3 * d - 6) return 0;
    SaturationSlice s = saturation_slice(f, k, mode);
    BasisCache bc;
    int dimJ = rank_at_degree(f, k, mode, bc);
    return s.dim - dimJ;
}

std::optional<int> sigma(const Poly& f, const RankMode& mode) { return profile(f, mode).sigma; }

int nu(const Poly& f, const RankMode& mode) { return profile(f, mode).nu; }

JacobianProfile profile(const Poly& f, const RankMode& mode) {
    validate_curve_input(f);
    const int d = f.degree();
    const int top = 3 * d - 4, R = 3 * d - 5, T = 3 * d - 6;
    BasisCache bc;
    Tables t = tables_for(f, mode, bc);

    JacobianProfile p;
    p.d = d;
    p.T = T;
    p.probabilistic = mode.kind == RankKind::probabilistic;
    p.hilb = t.hilb;

    if (t.hilb[static_cast<size_t>(R)] != t.hilb[static_cast<size_t>(top)])
        throw NonReducedCurve(
            "Hilbert function fails to stabilize: hilb(3d-5)=" +
            std::to_string(t.hilb[static_cast<size_t>(R)]) +
            " vs hilb(3d-4)=" + std::to_string(t.hilb[static_cast<size_t>(top)]));
    p.tau = t.hilb[static_cast<size_t>(R)];

    p.n_table.assign(static_cast<size_t>(T) + 1, 0);
    for (int k = 0; k <= T; ++k) {
        int nk = t.hilb[static_cast<size_t>(k)] - t.c[static_cast<size_t>(k)];
        if (nk < 0) throw InternalError("negative Jacobian module dimension");
        p.n_table[static_cast<size_t>(k)] = nk;
    }

    p.ar_table.assign(static_cast<size_t>(2 * d) + 1, 0);
    for (int m = 0; m <= 2 * d; ++m) {
        int ar = 3 * DegreeBasis::dim(m) - DegreeBasis::dim(m + d - 1) + p.hilb_at(m + d - 1);
        if (ar < 0) throw InternalError("negative syzygy dimension");
        p.ar_table[static_cast<size_t>(m)] = ar;
    }

    p.mdr = -1;
    for (int m = 0; m <= 2 * d; ++m) {
        if (p.ar_table[static_cast<size_t>(m)] > 0) {
            p.mdr = m;
            break;
        }
    }
    if (p.mdr < 0 || p.mdr > d - 1) throw InternalError("mdr search failed");

    p.nu = 0;
    for (int k = 0; k <= T; ++k) p.nu = std::max(p.nu, p.n_table[static_cast<size_t>(k)]);
    for (int k = 0; k <= T; ++k) {
        if (p.n_table[static_cast<size_t>(k)] != 0) {
            p.sigma = k;
            break;
        }
    }

    // Internal consistency: self-duality and contiguous support of N(f).
    for (int k = 0; k <= T; ++k)
        if (p.n_table[static_cast<size_t>(k)] != p.n_table[static_cast<size_t>(T - k)])
            throw InternalError("Jacobian module self-duality violated");
    if (p.sigma) {
        for (int k = *p.sigma; k <= T - *p.sigma; ++k)
            if (p.n_table[static_cast<size_t>(k)] == 0)
                throw InternalError("Jacobian module support not contiguous");
    }
    return p;
}

}  // namespace curvelab
