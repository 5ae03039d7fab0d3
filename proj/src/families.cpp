#include <curvelab/errors.hpp>
#include <curvelab/families.hpp>
#include <curvelab/linalg.hpp>

#include <stdexcept>

namespace curvelab {

// ---------------------------------------------------------------------------
// FZ1
// ---------------------------------------------------------------------------

Poly fz1_curve(int d, int a) {
    if (d < 5) throw std::invalid_argument("fz1 requires d >= 5");
    int b = d - 2 - a;
    if (b < 1 || b > a) throw std::invalid_argument("fz1 requires 1 <= b = d-2-a <= a");

    const Poly x = Poly::variable(0), y = Poly::variable(1);
    const Rat a1 = Rat(2 * a - 1, 2);  // a - 1/2

    // g(x,y) = sum_k a_k/k! (x-y)^k y^{d-3-k}, a_0 = 1, a_k = a1 (a1-1) ... (a1-k+1)
    Poly g;
    Rat ak(1), kfact(1);
    Poly xy = x - y;
    for (int k = 0; k <= d - 3; ++k) {
        if (k > 0) {
            ak *= a1 - Rat(k - 1);
            kfact *= Rat(k);
        }
        g = g + xy.pow(k) * y.pow(d - 3 - k) * (ak / kfact);
    }

    Poly w = xy.pow(d - 2) - x * y * g;
    Poly numerator = x.pow(2 * a + 1) * y.pow(2 * b + 1) - w * w;
    Poly affine = exact_div(numerator, xy.pow(d - 2));
    if (affine.degree() != d)
        throw InternalError("fz1 affine curve has degree " + std::to_string(affine.degree()) +
                            ", expected " + std::to_string(d));
    return affine.homogenize(2, d);
}

FamilyExpectation fz1_expected(int d, int a) {
    return {"fz1", "d=" + std::to_string(d) + ",a=" + std::to_string(a), d, 2, d * d - 4 * d + 7};
}

// ---------------------------------------------------------------------------
// FZ2
// ---------------------------------------------------------------------------

BinaryForm fz2_q(int k) {
    if (k < 4) throw std::invalid_argument("fz2 requires k >= 4");
    const int nf = k - 4;       // coefficients of f (homogeneous of degree k-5)
    const int ng = 2 * k - 6;   // coefficients of g (degree 2k-7)
    const int n = nf + ng;      // 3k - 10 unknowns

    // A(t) = f(t^3, t^3-3t+2) + t^{3(k-4)} g(t), linear in the unknowns.
    const UniPoly P = parse_unipoly("t^3", 't');
    const UniPoly Q = parse_unipoly("t^3-3*t+2", 't');
    std::vector<UniPoly> basis;
    for (int i = 0; i <= k - 5; ++i) basis.push_back(P.pow(i) * Q.pow(k - 5 - i));
    for (int j = 0; j <= 2 * k - 7; ++j) basis.push_back(UniPoly::monomial(3 * (k - 4) + j));
    if (static_cast<int>(basis.size()) != n) throw InternalError("fz2 unknown count mismatch");

    // Successive derivatives of each basis polynomial.
    const int max_der = 2 * k - 7;
    std::vector<std::vector<UniPoly>> der(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) {
        der[i].push_back(basis[i]);
        for (int m = 1; m <= max_der; ++m) der[i].push_back(der[i].back().derivative());
    }

    ExactMatrix A(n, n);
    std::vector<Rat> rhs(static_cast<size_t>(n), Rat(0));
    int row = 0;
    // (1) derivatives 0..k-5 of A vanish at t = -2
    for (int m = 0; m <= k - 5; ++m, ++row)
        for (int i = 0; i < n; ++i)
            A.at(row, i) = der[static_cast<size_t>(i)][static_cast<size_t>(m)].eval(Rat(-2));
    // (2) derivatives 0..2k-9 of A vanish at t = 1
    for (int m = 0; m <= 2 * k - 9; ++m, ++row)
        for (int i = 0; i < n; ++i)
            A.at(row, i) = der[static_cast<size_t>(i)][static_cast<size_t>(m)].eval(Rat(1));
    // (3) h(1) = -1 and h'(1) = 3 for h = A/(t^3-3t+2)^{k-4}.  With
    // B = A/(t-1)^{2k-8} these become linear via the Taylor coefficients
    //   B(1)  = A^{(M)}(1)/M!,  B'(1) = A^{(M+1)}(1)/(M+1)!,  M = 2k-8:
    //   B(1) = -3^{k-4},  3 B'(1) - (k-4) B(1) = 3^{k-2}.
    {
        const int M = 2 * k - 8;
        Rat mfact(1), m1fact(1);
        for (int i = 2; i <= M; ++i) mfact *= Rat(i);
        m1fact = mfact * Rat(M + 1);
        Rat pow3(1);
        for (int i = 0; i < k - 4; ++i) pow3 *= Rat(3);
        for (int i = 0; i < n; ++i)
            A.at(row, i) = der[static_cast<size_t>(i)][static_cast<size_t>(M)].eval(Rat(1)) / mfact;
        rhs[static_cast<size_t>(row)] = -pow3;
        ++row;
        for (int i = 0; i < n; ++i)
            A.at(row, i) =
                Rat(3) * der[static_cast<size_t>(i)][static_cast<size_t>(M + 1)].eval(Rat(1)) / m1fact -
                Rat(k - 4) * der[static_cast<size_t>(i)][static_cast<size_t>(M)].eval(Rat(1)) / mfact;
        rhs[static_cast<size_t>(row)] = pow3 * Rat(9);
        ++row;
    }
    if (row != n) throw InternalError("fz2 condition count mismatch");

    std::vector<Rat> u;
    try {
        u = solve_linear(A, rhs);
    } catch (const SingularSystem& e) {
        throw InternalError(std::string("fz2 linear system unexpectedly singular: ") + e.what());
    }

    UniPoly At;
    for (int i = 0; i < n; ++i) At = At + basis[static_cast<size_t>(i)] * u[static_cast<size_t>(i)];
    UniPoly h = exact_div(At, Q.pow(k - 4));
    UniPoly numer = UniPoly::monomial(3) * h + UniPoly::constant(Rat(1));
    UniPoly q1 = exact_div(numer, parse_unipoly("(t-1)^2", 't'));
    return BinaryForm::from_unipoly(q1, 2 * k - 6);
}

Parametrization fz2_param(int k) {
    BinaryForm q = fz2_q(k);
    const int deg = 2 * k - 1;
    BinaryForm s2k4 = parse_binary_form("s", 's', 't').pow(2 * k - 4);
    BinaryForm t3 = parse_binary_form("t", 's', 't').pow(3);
    BinaryForm st2 = parse_binary_form("(s-t)^2", 's', 't');
    BinaryForm lin = parse_binary_form("2*s+t", 's', 't');
    Parametrization p{s2k4 * t3, s2k4 * st2 * lin, t3 * st2 * q};
    if (p.A.degree() != deg || p.B.degree() != deg || p.C.degree() != deg)
        throw InternalError("fz2 parametrization degree mismatch");
    if (!coprime3(p.A, p.B, p.C)) throw InternalError("fz2 parametrization has a base point");
    return p;
}

FamilyExpectation fz2_expected(int k) {
    return {"fz2", "k=" + std::to_string(k), 2 * k - 1, k - 1, 3 * (k - 1) * (k - 1)};
}

// ---------------------------------------------------------------------------
// FE
// ---------------------------------------------------------------------------

UniPoly fe_x(int k) {
    if (k < 5) throw std::invalid_argument("fe requires k >= 5");
    UniPoly X = parse_unipoly("2*u^2-u^3", 'u');
    UniPoly u_minus_1 = parse_unipoly("u-1", 'u');
    for (int j = 4; j < k; ++j) {
        UniPoly shifted = (X - UniPoly::constant(X.eval(Rat(1)))) * UniPoly::monomial(4);
        X = exact_div(shifted, u_minus_1);
    }
    if (X.degree() != 3 * (k - 3)) throw InternalError("fe X_k degree mismatch");
    return X;
}

BinaryForm fe_q(int k) {
    UniPoly X = fe_x(k);
    const int D = 3 * (k - 3);
    if (X.order() < 4)
        throw ExactDivisionError("fe X_k not divisible by u^4");
    // Y_k(t) = t^D X_k(1/t): reversed coefficients.
    std::vector<Rat> y(static_cast<size_t>(D) + 1, Rat(0));
    for (int i = 0; i <= X.degree(); ++i) y[static_cast<size_t>(D - i)] = X.coeff(i);
    UniPoly Y{std::move(y)};
    BinaryForm Yt = BinaryForm::from_unipoly(Y, D);
    return Yt.div_s_power(4);  // degree 3k-13
}

Parametrization fe_param(int k) {
    BinaryForm q = fe_q(k);
    const int deg = 3 * k - 5;
    BinaryForm s = parse_binary_form("s", 's', 't');
    BinaryForm t = parse_binary_form("t", 's', 't');
    Parametrization p{t.pow(3 * k - 6) * parse_binary_form("t-s", 's', 't'), s.pow(8) * q,
                      s.pow(4) * t.pow(3 * k - 9)};
    if (p.A.degree() != deg || p.B.degree() != deg || p.C.degree() != deg)
        throw InternalError("fe parametrization degree mismatch");
    if (!coprime3(p.A, p.B, p.C)) throw InternalError("fe parametrization has a base point");
    return p;
}

FamilyExpectation fe_expected(int k) {
    return {"fe", "k=" + std::to_string(k), 3 * k - 5, k - 1, 7 * (k - 2) * (k - 2) - k + 3};
}

// ---------------------------------------------------------------------------
// Classical curves
// ---------------------------------------------------------------------------

ClassicCurve classic(ClassicName name) {
    auto param = [](const char* a, const char* b, const char* c) {
        Parametrization p{parse_binary_form(a), parse_binary_form(b), parse_binary_form(c)};
        if (p.A.degree() != p.B.degree() || p.B.degree() != p.C.degree())
            throw InternalError("classic parametrization degree mismatch");
        if (!coprime3(p.A, p.B, p.C)) throw InternalError("classic parametrization base point");
        return p;
    };
    switch (name) {
        case ClassicName::C4:
            return {"C4", param("s^3*t-1/2*s^4", "s^2*t^2", "t^4-2*s*t^3"),
                    parse_poly("x^2*y^2+y^2*z^2+x^2*z^2-2*x*y*z*(x+y+z)")};
        case ClassicName::C5:
            return {"C5", param("s^4*t-1/2*s^5", "s^3*t^2", "-3/2*s*t^4+t^5"),
                    parse_poly("9*x*y^4-4*y^5-24*x^2*y^2*z+48*x*y^3*z-16*y^4*z+16*x^3*z^2")};
        case ClassicName::C5p:
            return {"C5'",
                    param("s^4*t-s^5", "s^2*t^3-5/32*s^5",
                          "-125/128*s^5-25/16*s^3*t^2-5*s*t^4+t^5"),
                    std::nullopt};
        case ClassicName::C5pp:
            return {"C5''", param("s^4*t", "s^2*t^3-s^5", "t^5+2*s^3*t^2"),
                    parse_poly("-27*x^5+2*x^2*y^3-18*x^3*y*z+y^4*z-2*x*y^2*z^2+x^2*z^3")};
    }
    throw std::invalid_argument("unknown classic curve");
}

std::optional<ClassicName> classic_from_string(std::string_view s) {
    if (s == "C4" || s == "c4") return ClassicName::C4;
    if (s == "C5" || s == "c5") return ClassicName::C5;
    if (s == "C5p" || s == "C5'" || s == "c5p") return ClassicName::C5p;
    if (s == "C5pp" || s == "C5''" || s == "c5pp") return ClassicName::C5pp;
    return std::nullopt;
}

}  // namespace curvelab
