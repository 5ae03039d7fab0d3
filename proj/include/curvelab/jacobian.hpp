#pragma once

#include <curvelab/linalg.hpp>
#include <curvelab/poly.hpp>

#include <optional>
#include <vector>

namespace curvelab {

// ---------------------------------------------------------------------------
// Complete graded invariant record of a reduced plane curve C : f = 0.
//
// hilb[k]  = dim M(f)_k where M(f) = S/J_f, for 0 <= k <= 3d-4;
// n_table  = dim N(f)_k where N(f) = I_f/J_f, for 0 <= k <= T = 3d-6;
// ar_table = dim AR(f)_m (Jacobian syzygies), for 0 <= m <= 2d.
//
// Invariants maintained (checked after construction):
//   (i)   n_k = n_{T-k}                      (self-duality of N(f))
//   (ii)  hilb_{3d-5} = hilb_{3d-4} = tau    (stabilization; reducedness)
//   (iii) n_k != 0 exactly for sigma <= k <= T - sigma when nu > 0
//   (iv)  ar_table nondecreasing onset consistent with (v)
//   (v)   ar_m = 3 dim S_m - dim S_{m+d-1} + hilb_{m+d-1}
// ---------------------------------------------------------------------------

struct JacobianProfile {
    int d = 0;
    int T = 0;  // 3d - 6
    std::vector<int> hilb;
    std::vector<int> n_table;
    std::vector<int> ar_table;
    int mdr = 0;
    std::optional<int> sigma;  // absent when N(f) = 0 (free curves)
    int nu = 0;
    int tau = 0;
    bool probabilistic = false;

    // Table accessors valid for any k: values outside the stored window are
    // determined (hilb stabilizes at tau from 3d-5 on; n vanishes off [0,T]).
    int hilb_at(int k) const;
    int n_at(int k) const;
    int ar_at(int m) const;
};

struct SaturationSlice {
    int degree = 0;
    int dim = 0;
    // Certified mode carries an explicit basis of (I_f)_k; probabilistic mode
    // reports the dimension only.
    std::optional<std::vector<Poly>> basis;
};

// dim M(f)_k = dim S_k - dim (J_f)_k.
int hilb_MJ(const Poly& f, int k, const RankMode& mode);

// Total Tjurina number: the common stable value hilb(3d-5) = hilb(3d-4);
// throws NonReducedCurve when the two differ.
int tau_total(const Poly& f, const RankMode& mode);

// dim AR(f)_m: syzygies (a,b,c) in S_m^3 with a f_x + b f_y + c f_z = 0.
int ar_dim(const Poly& f, int m, const RankMode& mode);

// Explicit syzygy basis (certified computation).
std::vector<std::array<Poly, 3>> ar_basis(const Poly& f, int m);

// Minimal degree of a Jacobian relation; 0 exactly for d concurrent lines.
int mdr(const Poly& f, const RankMode& mode);

// (I_f)_k, the degree-k slice of the saturation of J_f.
SaturationSlice saturation_slice(const Poly& f, int k, const RankMode& mode);

int n_dim(const Poly& f, int k, const RankMode& mode);
std::optional<int> sigma(const Poly& f, const RankMode& mode);
int nu(const Poly& f, const RankMode& mode);

// Full profile; throws NonReducedCurve for non-reduced input.  mdr = 0
// profiles are returned (deformation analysis downstream refuses them).
JacobianProfile profile(const Poly& f, const RankMode& mode);

// Shared preprocessing: validates homogeneity and degree >= 2.
void validate_curve_input(const Poly& f);

}  // namespace curvelab
