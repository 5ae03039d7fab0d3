#include <curvelab/errors.hpp>
#include <curvelab/implicitize.hpp>
#include <curvelab/linalg.hpp>

namespace curvelab {

namespace {

// Kernel of the map (coefficients of f in S_n) -> f(A,B,C).
ZKernel relation_kernel(const Parametrization& p, int n) {
    const int m = p.degree();
    const DegreeBasis basis(n);
    const int rows_n = n * m + 1;

    std::vector<BinaryForm> pa{BinaryForm(0, {Rat(1)})}, pb = pa, pc = pa;
    for (int i = 1; i <= n; ++i) {
        pa.push_back(pa.back() * p.A);
        pb.push_back(pb.back() * p.B);
        pc.push_back(pc.back() * p.C);
    }

    ExactMatrix M(rows_n, basis.size());
    for (int col = 0; col < basis.size(); ++col) {
        const Monomial& mono = basis.monomials[static_cast<size_t>(col)];
        BinaryForm comp = pa[static_cast<size_t>(mono.e[0])] * pb[static_cast<size_t>(mono.e[1])] *
                          pc[static_cast<size_t>(mono.e[2])];
        for (int r = 0; r < rows_n; ++r) M.at(r, col) = comp.coeff(r);
    }
    return z_kernel(to_integer_rows(M), basis.size());
}

}  // namespace

ImplicitResult implicitize(const Parametrization& p, int n) {
    if (n < 1) throw std::invalid_argument("implicit degree must be positive");
    if (!coprime3(p.A, p.B, p.C))
        throw std::invalid_argument("parametrization components share a factor");

    ZKernel ker = relation_kernel(p, n);
    int dim = static_cast<int>(ker.basis.size());
    if (dim == 0)
        throw KernelDimError("no degree-" + std::to_string(n) +
                             " relation (wrong degree or improper input)", 0);
    if (dim > 1)
        throw KernelDimError("relation space has dimension " + std::to_string(dim) +
                             " (improper or degenerate parametrization)", dim);

    const DegreeBasis basis(n);
    Poly f;
    for (int j = 0; j < basis.size(); ++j)
        if (ker.basis[0][static_cast<size_t>(j)] != 0)
            f.add_term(basis.monomials[static_cast<size_t>(j)],
                       Rat(ker.basis[0][static_cast<size_t>(j)]));
    // first nonzero coefficient in canonical order becomes 1
    f = f * (Rat(1) / f.terms().begin()->second);
    if (!compose3(f, p.A, p.B, p.C).is_zero())
        throw InternalError("implicitization re-substitution check failed");
    return {f, 1};
}

int implicit_degree_search(const Parametrization& p) {
    for (int n = 1; n <= p.degree(); ++n) {
        ZKernel ker = relation_kernel(p, n);
        if (!ker.basis.empty()) return n;
    }
    throw KernelDimError("no implicit equation up to the parametrization degree", 0);
}

bool verify_on_curve(const Poly& f, const Parametrization& p) {
    return compose3(f, p.A, p.B, p.C).is_zero();
}

}  // namespace curvelab
