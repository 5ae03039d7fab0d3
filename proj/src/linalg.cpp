#include <curvelab/errors.hpp>
#include <curvelab/linalg.hpp>

#include <algorithm>
#include <random>

namespace curvelab {

// ---------------------------------------------------------------------------
// DegreeBasis
// ---------------------------------------------------------------------------

DegreeBasis::DegreeBasis(int k) : degree(k) {
    if (k < 0) return;
    monomials.reserve(static_cast<size_t>(dim(k)));
    for (int a = k; a >= 0; --a)
        for (int b = k - a; b >= 0; --b) monomials.push_back(Monomial{a, b, k - a - b});
}

int DegreeBasis::index_of(const Monomial& m) const {
    if (m.total() != degree) return -1;
    int r = degree - m.e[0];
    return r * (r + 1) / 2 + (r - m.e[1]);
}

// ---------------------------------------------------------------------------
// Prime generation (deterministic from seed)
// ---------------------------------------------------------------------------

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic for n < 3.3e24 with these witnesses.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace

std::pair<uint64_t, uint64_t> prime_pair(uint64_t seed, int round) {
    std::mt19937_64 gen(seed ^ (0x9E3779B97F4A7C15ull * static_cast<uint64_t>(round + 1)));
    const uint64_t lo = 1ull << 60, hi = 1ull << 62;
    std::uniform_int_distribution<uint64_t> dist(lo + 1, hi - 1);
    uint64_t p1 = 0, p2 = 0;
    while (p1 == 0) {
        uint64_t c = dist(gen) | 1;
        if (is_prime_u64(c)) p1 = c;
    }
    while (p2 == 0 || p2 == p1) {
        uint64_t c = dist(gen) | 1;
        if (is_prime_u64(c)) p2 = c;
        if (p2 == p1) p2 = 0;
    }
    return {p1, p2};
}

// ---------------------------------------------------------------------------
// Integer row engine: fraction-free elimination with row content stripping.
// Row operations (cross-multiplied combination, content division, swaps)
// preserve rank and row space exactly.
// ---------------------------------------------------------------------------

namespace {

void strip_content(ZRow& row) {
    Int g(0);
    for (const auto& x : row) {
        if (x == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (auto& x : row)
        if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

int z_echelon(ZRows& rows, int cols) {
    const int m = static_cast<int>(rows.size());
    for (auto& r : rows) strip_content(r);
    int rank = 0;
    Int t;
    for (int col = 0; col < cols && rank < m; ++col) {
        int piv = -1;
        size_t best = static_cast<size_t>(-1);
        for (int i = rank; i < m; ++i) {
            const Int& v = rows[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (v == 0) continue;
            size_t sz = mpz_sizeinbase(v.get_mpz_t(), 2);
            if (sz < best) {
                best = sz;
                piv = i;
                if (sz <= 1) break;
            }
        }
        if (piv < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(piv)]);
        ZRow& pr = rows[static_cast<size_t>(rank)];
        const Int p = pr[static_cast<size_t>(col)];
        for (int i = rank + 1; i < m; ++i) {
            ZRow& ri = rows[static_cast<size_t>(i)];
            const Int q = ri[static_cast<size_t>(col)];
            if (q == 0) continue;
            for (int j = col; j < cols; ++j) {
                Int& x = ri[static_cast<size_t>(j)];
                mpz_mul(t.get_mpz_t(), p.get_mpz_t(), x.get_mpz_t());
                mpz_submul(t.get_mpz_t(), q.get_mpz_t(), pr[static_cast<size_t>(j)].get_mpz_t());
                mpz_swap(x.get_mpz_t(), t.get_mpz_t());
            }
            strip_content(ri);
        }
        ++rank;
    }
    rows.resize(static_cast<size_t>(rank));
    return rank;
}

int z_rank(ZRows rows, int cols) { return z_echelon(rows, cols); }

ZKernel z_kernel(const ZRows& rows, int cols) {
    ZRows work = rows;
    // Forward elimination recording pivot columns (they come out increasing).
    const int m = static_cast<int>(work.size());
    for (auto& r : work) strip_content(r);
    std::vector<int> pivot_cols;
    int rank = 0;
    Int t;
    for (int col = 0; col < cols && rank < m; ++col) {
        int piv = -1;
        size_t best = static_cast<size_t>(-1);
        for (int i = rank; i < m; ++i) {
            const Int& v = work[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (v == 0) continue;
            size_t sz = mpz_sizeinbase(v.get_mpz_t(), 2);
            if (sz < best) {
                best = sz;
                piv = i;
                if (sz <= 1) break;
            }
        }
        if (piv < 0) continue;
        std::swap(work[static_cast<size_t>(rank)], work[static_cast<size_t>(piv)]);
        ZRow& pr = work[static_cast<size_t>(rank)];
        const Int p = pr[static_cast<size_t>(col)];
        for (int i = rank + 1; i < m; ++i) {
            ZRow& ri = work[static_cast<size_t>(i)];
            const Int q = ri[static_cast<size_t>(col)];
            if (q == 0) continue;
            for (int j = col; j < cols; ++j) {
                Int& x = ri[static_cast<size_t>(j)];
                mpz_mul(t.get_mpz_t(), p.get_mpz_t(), x.get_mpz_t());
                mpz_submul(t.get_mpz_t(), q.get_mpz_t(), pr[static_cast<size_t>(j)].get_mpz_t());
                mpz_swap(x.get_mpz_t(), t.get_mpz_t());
            }
            strip_content(ri);
        }
        pivot_cols.push_back(col);
        ++rank;
    }

    ZKernel out;
    out.rank = rank;
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Rat> v(static_cast<size_t>(cols), Rat(0));
        v[static_cast<size_t>(f)] = 1;
        for (int k = rank - 1; k >= 0; --k) {
            const ZRow& row = work[static_cast<size_t>(k)];
            int pc = pivot_cols[static_cast<size_t>(k)];
            Rat acc(0);
            for (int j = pc + 1; j < cols; ++j) {
                if (j != f && !is_pivot[static_cast<size_t>(j)]) continue;
                if (row[static_cast<size_t>(j)] == 0 || v[static_cast<size_t>(j)] == 0) continue;
                acc += Rat(row[static_cast<size_t>(j)]) * v[static_cast<size_t>(j)];
            }
            v[static_cast<size_t>(pc)] = -acc / Rat(row[static_cast<size_t>(pc)]);
        }
        // scale to primitive integer vector
        Int den_lcm(1);
        for (const auto& x : v)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
        ZRow iv(static_cast<size_t>(cols));
        Int g(0);
        for (int j = 0; j < cols; ++j) {
            Rat scaled = v[static_cast<size_t>(j)] * Rat(den_lcm);
            iv[static_cast<size_t>(j)] = scaled.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv[static_cast<size_t>(j)].get_mpz_t());
        }
        if (g > 1)
            for (auto& x : iv)
                if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        out.basis.push_back(std::move(iv));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Modular row engine
// ---------------------------------------------------------------------------

int zp_echelon(PRows& rows, int cols, uint64_t p) {
    const int m = static_cast<int>(rows.size());
    int rank = 0;
    for (int col = 0; col < cols && rank < m; ++col) {
        int piv = -1;
        for (int i = rank; i < m; ++i) {
            if (rows[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(piv)]);
        PRow& pr = rows[static_cast<size_t>(rank)];
        uint64_t inv = powmod_u64(pr[static_cast<size_t>(col)], p - 2, p);
        for (int j = col; j < cols; ++j)
            pr[static_cast<size_t>(j)] = mulmod_u64(pr[static_cast<size_t>(j)], inv, p);
        for (int i = rank + 1; i < m; ++i) {
            PRow& ri = rows[static_cast<size_t>(i)];
            uint64_t q = ri[static_cast<size_t>(col)];
            if (q == 0) continue;
            uint64_t negq = p - q;
            for (int j = col; j < cols; ++j) {
                uint64_t add = mulmod_u64(negq, pr[static_cast<size_t>(j)], p);
                uint64_t s = ri[static_cast<size_t>(j)] + add;
                if (s >= p) s -= p;
                ri[static_cast<size_t>(j)] = s;
            }
        }
        ++rank;
    }
    rows.resize(static_cast<size_t>(rank));
    return rank;
}

int zp_rank(PRows rows, int cols, uint64_t p) { return zp_echelon(rows, cols, p); }

PKernel zp_kernel(const PRows& rows, int cols, uint64_t p) {
    PRows work = rows;
    const int m = static_cast<int>(work.size());
    std::vector<int> pivot_cols;
    int rank = 0;
    for (int col = 0; col < cols && rank < m; ++col) {
        int piv = -1;
        for (int i = rank; i < m; ++i) {
            if (work[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(work[static_cast<size_t>(rank)], work[static_cast<size_t>(piv)]);
        PRow& pr = work[static_cast<size_t>(rank)];
        uint64_t inv = powmod_u64(pr[static_cast<size_t>(col)], p - 2, p);
        for (int j = col; j < cols; ++j)
            pr[static_cast<size_t>(j)] = mulmod_u64(pr[static_cast<size_t>(j)], inv, p);
        for (int i = rank + 1; i < m; ++i) {
            PRow& ri = work[static_cast<size_t>(i)];
            uint64_t q = ri[static_cast<size_t>(col)];
            if (q == 0) continue;
            uint64_t negq = p - q;
            for (int j = col; j < cols; ++j) {
                uint64_t add = mulmod_u64(negq, pr[static_cast<size_t>(j)], p);
                uint64_t s = ri[static_cast<size_t>(j)] + add;
                if (s >= p) s -= p;
                ri[static_cast<size_t>(j)] = s;
            }
        }
        pivot_cols.push_back(col);
        ++rank;
    }

    PKernel out;
    out.rank = rank;
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        PRow v(static_cast<size_t>(cols), 0);
        v[static_cast<size_t>(f)] = 1;
        for (int k = rank - 1; k >= 0; --k) {
            const PRow& row = work[static_cast<size_t>(k)];
            int pc = pivot_cols[static_cast<size_t>(k)];
            uint64_t acc = 0;
            for (int j = pc + 1; j < cols; ++j) {
                if (row[static_cast<size_t>(j)] == 0 || v[static_cast<size_t>(j)] == 0) continue;
                acc = (acc + static_cast<unsigned __int128>(row[static_cast<size_t>(j)]) *
                                 v[static_cast<size_t>(j)] % p) % p;
            }
            v[static_cast<size_t>(pc)] = acc == 0 ? 0 : p - acc;  // pivot normalized to 1
        }
        out.basis.push_back(std::move(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Conversions
// ---------------------------------------------------------------------------

ZRows to_integer_rows(const ExactMatrix& m) {
    ZRows rows(static_cast<size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i) {
        Int l(1);
        for (int j = 0; j < m.cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        ZRow row(static_cast<size_t>(m.cols));
        for (int j = 0; j < m.cols; ++j) {
            Rat scaled = m.at(i, j) * Rat(l);
            row[static_cast<size_t>(j)] = scaled.get_num();
        }
        strip_content(row);
        rows[static_cast<size_t>(i)] = std::move(row);
    }
    return rows;
}

ZRows poly_rows(const std::vector<Poly>& gens, const DegreeBasis& basis) {
    ZRows rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
        ZRow row(static_cast<size_t>(basis.size()), Int(0));
        if (!g.is_zero()) {
            Poly p = g.primitive_integer();
            for (const auto& [m, c] : p.terms()) {
                int idx = basis.index_of(m);
                if (idx < 0) throw DegreeError("polynomial degree does not match basis");
                row[static_cast<size_t>(idx)] = c.get_num();
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

PRows reduce_rows(const ZRows& rows, uint64_t p) {
    PRows out(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        PRow r(rows[i].size());
        for (size_t j = 0; j < rows[i].size(); ++j) {
            r[j] = mpz_fdiv_ui(rows[i][j].get_mpz_t(), p);
        }
        out[i] = std::move(r);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

ExactMatrix poly_matrix(const std::vector<Poly>& gens, const DegreeBasis& basis) {
    ExactMatrix m(basis.size(), static_cast<int>(gens.size()));
    for (size_t g = 0; g < gens.size(); ++g) {
        for (const auto& [mono, c] : gens[g].terms()) {
            int idx = basis.index_of(mono);
            if (idx < 0) throw DegreeError("polynomial degree does not match basis");
            m.at(idx, static_cast<int>(g)) = c;
        }
    }
    return m;
}

namespace {

// Rows of the matrix interpreted as a linear map on column vectors.
ZRows matrix_rows(const ExactMatrix& m) { return to_integer_rows(m); }

int rank_probabilistic(const ZRows& rows, int cols, uint64_t seed) {
    for (int round = 0; round < 3; ++round) {
        auto [p1, p2] = prime_pair(seed, round);
        int r1 = zp_rank(reduce_rows(rows, p1), cols, p1);
        int r2 = zp_rank(reduce_rows(rows, p2), cols, p2);
        if (r1 == r2) return r1;
    }
    throw InternalError("probabilistic ranks disagreed across retries");
}

}  // namespace

int rank(const ExactMatrix& m, const RankMode& mode) {
    ZRows rows = matrix_rows(m);
    if (mode.kind == RankKind::certified) return z_rank(std::move(rows), m.cols);
    return rank_probabilistic(rows, m.cols, mode.seed);
}

Nullspace nullspace(const ExactMatrix& m, const RankMode& mode) {
    Nullspace out;
    ZRows rows = matrix_rows(m);
    if (mode.kind == RankKind::certified) {
        ZKernel k = z_kernel(rows, m.cols);
        out.dim = static_cast<int>(k.basis.size());
        std::vector<std::vector<Rat>> basis;
        basis.reserve(k.basis.size());
        for (const auto& v : k.basis) {
            std::vector<Rat> rv(v.size());
            for (size_t j = 0; j < v.size(); ++j) rv[j] = Rat(v[j]);
            basis.push_back(std::move(rv));
        }
        out.basis = std::move(basis);
        return out;
    }
    out.dim = m.cols - rank_probabilistic(rows, m.cols, mode.seed);
    return out;
}

std::vector<Rat> solve_linear(const ExactMatrix& A, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != A.rows)
        throw DegreeError("right-hand side length mismatch");
    int m = A.rows, n = A.cols;
    std::vector<std::vector<Rat>> aug(static_cast<size_t>(m),
                                      std::vector<Rat>(static_cast<size_t>(n) + 1, Rat(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) aug[static_cast<size_t>(i)][static_cast<size_t>(j)] = A.at(i, j);
        aug[static_cast<size_t>(i)][static_cast<size_t>(n)] = b[static_cast<size_t>(i)];
    }
    std::vector<int> pivot_cols;
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int piv = -1;
        for (int i = rank; i < m; ++i)
            if (aug[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(aug[static_cast<size_t>(rank)], aug[static_cast<size_t>(piv)]);
        auto& pr = aug[static_cast<size_t>(rank)];
        Rat inv = Rat(1) / pr[static_cast<size_t>(col)];
        for (int j = col; j <= n; ++j) pr[static_cast<size_t>(j)] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == rank) continue;
            Rat q = aug[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (q == 0) continue;
            for (int j = col; j <= n; ++j)
                aug[static_cast<size_t>(i)][static_cast<size_t>(j)] -= q * pr[static_cast<size_t>(j)];
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    for (int i = rank; i < m; ++i)
        if (aug[static_cast<size_t>(i)][static_cast<size_t>(n)] != 0)
            throw SingularSystem("inconsistent linear system");
    if (rank < n) throw SingularSystem("underdetermined linear system");
    std::vector<Rat> x(static_cast<size_t>(n), Rat(0));
    for (int k = 0; k < rank; ++k)
        x[static_cast<size_t>(pivot_cols[static_cast<size_t>(k)])] =
            aug[static_cast<size_t>(k)][static_cast<size_t>(n)];
    return x;
}

int span_dim(const std::vector<Poly>& polys, int degree, const RankMode& mode) {
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        if (!p.is_homogeneous() || p.degree() != degree)
            throw DegreeError("span_dim requires homogeneous polynomials of the stated degree");
    }
    if (polys.empty()) return 0;
    DegreeBasis basis(degree);
    ZRows rows = poly_rows(polys, basis);
    if (mode.kind == RankKind::certified) return z_rank(std::move(rows), basis.size());
    return rank_probabilistic(rows, basis.size(), mode.seed);
}

}  // namespace curvelab
