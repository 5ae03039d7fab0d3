#pragma once

#include <curvelab/poly.hpp>

#include <optional>
#include <string>

namespace curvelab {

// Rational curve map P^1 -> P^2 given by three coprime binary forms of a
// common degree.
struct Parametrization {
    BinaryForm A, B, C;
    int degree() const { return A.degree(); }
};

// Expected invariants a family construction should exhibit, used by the
// conjecture sweep driver.
struct FamilyExpectation {
    std::string family;
    std::string params;
    int degree = 0;
    int mdr = 0;
    int tau = 0;
};

// ---------------------------------------------------------------------------
// FZ1(d,a): tricuspidal curves of type (d, d-2).  Affine construction
//   f = (x^{2a+1} y^{2b+1} - ((x-y)^{d-2} - x y g)^2) / (x-y)^{d-2},
// with g = y^{d-3} h(x/y), h a truncated binomial series; homogenized with z.
// Requires d >= 5 and 1 <= b = d-2-a <= a.
// ---------------------------------------------------------------------------
Poly fz1_curve(int d, int a);
FamilyExpectation fz1_expected(int d, int a);  // mdr 2, tau d^2-4d+7

// ---------------------------------------------------------------------------
// FZ2(k): tricuspidal curves of degree 2k-1, k >= 4, parametrized by
//   (s^{2k-4} t^3 : s^{2k-4} (s-t)^2 (2s+t) : t^3 (s-t)^2 q_k(s,t)).
// q_k (degree 2k-6) comes from a linear system that is solved exactly.
// ---------------------------------------------------------------------------
BinaryForm fz2_q(int k);
Parametrization fz2_param(int k);
FamilyExpectation fz2_expected(int k);  // mdr k-1, tau 3(k-1)^2

// ---------------------------------------------------------------------------
// FE(k): tricuspidal curves of degree 3k-5, k >= 5, parametrized by
//   (t^{3k-6} (t-s) : s^8 q~_k(s,t) : s^4 t^{3k-9});
// q~_k of degree 3k-13 is built from the recursion
//   X_4 = 2u^2 - u^3,  X_{k+1} = u^4 (X_k - X_k(1)) / (u-1),
// reversed and stripped of its forced s^4 factor.
// ---------------------------------------------------------------------------
UniPoly fe_x(int k);
BinaryForm fe_q(int k);
Parametrization fe_param(int k);
FamilyExpectation fe_expected(int k);  // mdr k-1, tau 7(k-2)^2-k+3

// ---------------------------------------------------------------------------
// Classical low-degree multicuspidal curves with printed parametrizations;
// C4, C5 and C5'' also carry printed equations (C4's equation is in different
// coordinates than its parametrization).
// ---------------------------------------------------------------------------
enum class ClassicName { C4, C5, C5p, C5pp };

struct ClassicCurve {
    std::string name;
    Parametrization param;
    std::optional<Poly> equation;
};

ClassicCurve classic(ClassicName name);
std::optional<ClassicName> classic_from_string(std::string_view s);

}  // namespace curvelab
