#pragma once

#include <curvelab/families.hpp>
#include <curvelab/poly.hpp>

namespace curvelab {

struct ImplicitResult {
    Poly f;             // homogeneous of the requested degree, leading coefficient 1
    int kernel_dim = 1;
};

// Exact kernel method: solve f(A,B,C) = 0 as a linear system on the
// coefficients of f in S_n.  Kernel dimension 1 is required; the resulting
// generator is re-substituted and checked exactly.  Throws KernelDimError
// when the kernel is empty (wrong degree / no relation) or bigger than one
// (improper or degenerate parametrization).
ImplicitResult implicitize(const Parametrization& p, int n);

// Smallest n <= deg p with a nontrivial degree-n relation; throws
// KernelDimError if none exists.
int implicit_degree_search(const Parametrization& p);

// True iff f(A,B,C) is the zero binary form.
bool verify_on_curve(const Poly& f, const Parametrization& p);

}  // namespace curvelab
