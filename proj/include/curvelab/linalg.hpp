#pragma once

#include <curvelab/poly.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace curvelab {

// ---------------------------------------------------------------------------
// Monomial basis of S_k in canonical (descending graded-lex) order.
// ---------------------------------------------------------------------------

struct DegreeBasis {
    int degree = 0;
    std::vector<Monomial> monomials;

    explicit DegreeBasis(int k);
    int size() const { return static_cast<int>(monomials.size()); }
    // O(1) position of a degree-k monomial; -1 if the degree does not match.
    int index_of(const Monomial& m) const;
    static int dim(int k) { return k < 0 ? 0 : (k + 1) * (k + 2) / 2; }
};

// ---------------------------------------------------------------------------
// Rank computation modes.  Certified results come from fraction-free exact
// elimination and are ground truth.  Probabilistic results are ranks modulo
// two distinct random primes in (2^60, 2^62) that must agree; they taint
// every downstream report with a probabilistic flag.
// ---------------------------------------------------------------------------

enum class RankKind { certified, probabilistic };

struct RankMode {
    RankKind kind = RankKind::certified;
    uint64_t seed = 0;

    bool probabilistic() const { return kind == RankKind::probabilistic; }
    static RankMode certified() { return {RankKind::certified, 0}; }
    static RankMode probabilistic_seeded(uint64_t seed) {
        return {RankKind::probabilistic, seed};
    }
};

// Two distinct primes in (2^60, 2^62) derived deterministically from a seed.
std::pair<uint64_t, uint64_t> prime_pair(uint64_t seed, int round = 0);

// ---------------------------------------------------------------------------
// Dense exact matrix, column-per-generator / row-per-monomial convention for
// graded maps.
// ---------------------------------------------------------------------------

struct ExactMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;  // row-major

    ExactMatrix() = default;
    ExactMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}
    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Coefficient matrix of homogeneous polynomials in the given basis; one
// column per polynomial.
ExactMatrix poly_matrix(const std::vector<Poly>& gens, const DegreeBasis& basis);

int rank(const ExactMatrix& m, const RankMode& mode);

struct Nullspace {
    int dim = 0;
    // Present in certified mode only; vectors are primitive integer and the
    // span is exact.
    std::optional<std::vector<std::vector<Rat>>> basis;
};

Nullspace nullspace(const ExactMatrix& m, const RankMode& mode);

// Exact solution of A x = b when it is unique; throws SingularSystem for
// inconsistent or underdetermined systems.
std::vector<Rat> solve_linear(const ExactMatrix& A, const std::vector<Rat>& b);

// Dimension of the span of homogeneous polynomials inside S_k.
int span_dim(const std::vector<Poly>& polys, int degree, const RankMode& mode);

// ---------------------------------------------------------------------------
// Low-level integer row engines.  These are the primitives behind the public
// operations and the saturation recursion in the Jacobian module.
// ---------------------------------------------------------------------------

using ZRow = std::vector<Int>;
using ZRows = std::vector<ZRow>;

// Fraction-free (Bareiss) elimination with per-row content stripping; returns
// the rank and replaces `rows` with an echelon basis of the row space.
int z_echelon(ZRows& rows, int cols);

// Rank only (same elimination, rows consumed).
int z_rank(ZRows rows, int cols);

struct ZKernel {
    int rank = 0;
    ZRows basis;  // primitive integer kernel vectors of the row-matrix map
};

// Kernel of the linear map given by matrix rows: {v : row . v = 0 for all rows}.
ZKernel z_kernel(const ZRows& rows, int cols);

// Same three operations modulo a prime p in (2^60, 2^62).
using PRow = std::vector<uint64_t>;
using PRows = std::vector<PRow>;

int zp_echelon(PRows& rows, int cols, uint64_t p);
int zp_rank(PRows rows, int cols, uint64_t p);

struct PKernel {
    int rank = 0;
    PRows basis;
};

PKernel zp_kernel(const PRows& rows, int cols, uint64_t p);

// Clears denominators row-wise and strips content: rank and kernel are
// unchanged by the row scaling.
ZRows to_integer_rows(const ExactMatrix& m);
ZRows poly_rows(const std::vector<Poly>& gens, const DegreeBasis& basis);
PRows reduce_rows(const ZRows& rows, uint64_t p);

}  // namespace curvelab
